#pragma once

#include <vector>

#include "fatpoints/bipoly.hpp"
#include "fatpoints/different.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Bidegrees of a set of minimal separators, lexicographically non-decreasing.
using DegreeTuple = std::vector<BiDegree>;

// Degree tuple of entry idx by the closed formula for ACM schemes:
// a_l sums max(m-l,0) over the entries sharing the second component of idx,
// b_l over the entries sharing the first, and the tuple is
// ((a_{m-1}-1, b_0-1), ..., (a_0-1, b_{m-1}-1)). Rejects non-ACM schemes.
DegreeTuple degree_tuple_acm(const FatPointScheme& y, int idx);

// Minimal separators of entry idx: minimal generators of I_{Y'}/I_Y where Y'
// has the multiplicity of idx lowered by one. Works for non-ACM schemes too.
GeneratorSet minimal_separators(const FatPointScheme& y, int idx);

// Degrees of a generator set, lexicographically non-decreasing.
DegreeTuple separator_degrees(const GeneratorSet& gens);

// Definition test: f lies in the (m-1)-st symbolic power at the point of
// entry idx but not the m-th, and in the full power at every other point.
// f must be bihomogeneous; the zero polynomial is never a separator.
bool is_separator(const BiPoly& f, const FatPointScheme& y, int idx);

// HF of the scheme with entry idx removed, by the removal formula: HF_X minus
// the indicator of the up-set over the minimal separator degrees of idx.
// Requires a reduced scheme. Window -1 picks the default for x.
HilbertMatrix hf_remove_point(const FatPointScheme& x, int idx, int rows = -1, int cols = -1);

// Cayley-Bacharach property of a reduced scheme: the Hilbert function after
// deleting any single point is independent of the deleted point. Tested
// literally, one deletion per point.
bool is_cbp(const FatPointScheme& x);

// Same property via the degree-tuple criterion: all points have equal
// minimal separator degree tuples.
bool is_cbp_by_degree_tuples(const FatPointScheme& x);

// Complete intersection test for a reduced scheme: exactly two minimal
// generators, of bidegrees (d1,0) and (0,d2).
bool is_ci(const FatPointScheme& x);

// Almost complete intersection test for a reduced scheme: ACM with alpha
// taking exactly two distinct values d1 > d2.
bool is_aci(const FatPointScheme& x);

// Kaehler-different separator criterion for a reduced ACM scheme: true iff
// for every point no bidegree below (2r-2,2t-2) holds an element of the
// different that separates the point, tested by subspace intersection.
// Equivalent to the Cayley-Bacharach property and to being a CI.
bool cbp_different_criterion(const FatPointScheme& x);

}  // namespace fatpoints
