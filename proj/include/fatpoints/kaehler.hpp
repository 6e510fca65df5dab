#pragma once

#include <optional>

#include "fatpoints/hilbert.hpp"
#include "fatpoints/ideal.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Hilbert function of the module of Kaehler differentials of R_Y/K, computed
// from the exact-sequence identity
//   HF(i,j) = 2 HF_Y(i-1,j) + 2 HF_Y(i,j-1) + HF_Y(i,j) - HF_V(i,j)
// where V is the thickening of Y. Valid for fat point schemes.
HilbertMatrix hf_omega(const FatPointScheme& y, int rows, int cols, ExecMode mode = ExecMode::parallel);
HilbertMatrix hf_omega(const FatPointScheme& y, ExecMode mode = ExecMode::parallel);

// Same identity evaluated for an arbitrary degreewise ideal with an explicitly
// supplied "thickened" ideal. Exposes the formula's fat-point hypothesis: for
// non-fat subschemes (thick = square of the ideal) it is allowed to disagree
// with the presentation oracle below.
HilbertMatrix hf_omega_formula(const DegreewiseIdeal& ideal, const DegreewiseIdeal& thick, int rows,
                               int cols, ExecMode mode = ExecMode::parallel);

// Independent oracle from the presentation of the differential module over S:
// per bidegree, 2 HF(i-1,j) + 2 HF(i,j-1) minus the rank of the classes of
// dF, F over a basis of I_{i,j}, with components reduced modulo I. Uses only
// kernel bases and ranks, no thickening.
HilbertMatrix hf_omega_oracle(const DegreewiseIdeal& ideal, int rows, int cols,
                              ExecMode mode = ExecMode::parallel);
HilbertMatrix hf_omega_oracle(const FatPointScheme& y, int rows, int cols,
                              ExecMode mode = ExecMode::parallel);

struct SpecialValue {
    long long value = 0;
    char rule = '?';  // 'a': origin, 'b': zero ideal component, 'c': triple-equality region
};

// Closed special values; rejects bidegrees where no rule applies.
SpecialValue omega_special_value(const FatPointScheme& y, BiDegree deg);

enum class Direction { large_i, large_j };

// Stable value along a row (large i) or column (large j) of the window, from
// the alpha/beta tuple formulas. The large-i value is attained for all
// i >= l+r-1 at the fixed j (mirrored for large j).
long long hf_omega_closed(const FatPointScheme& y, Direction dir, long fixedIndex);

// Eventual constant value: 4*degree(Y) - sum of (m_p + 1).
long long omega_stable_value(const FatPointScheme& y);

// Closed form for Y whose thickening V is ACM, under the tuple ordering
// hypothesis alphaHat_1 >= ... >= alphaHat_r >= alpha_1 (checked; violations
// are rejected naming the failing inequality). c_{kj} = min(j+1, alpha_{k+1}).
HilbertMatrix hf_omega_acm_thickening(const FatPointScheme& y, int rows, int cols);

// Closed form for the equimultiple complete intersection m * CI(d1,d2),
// d1 <= d2 (inputs in the other order are rejected; swap them instead).
HilbertMatrix hf_omega_equi_ci(int d1, int d2, int m, int rows, int cols);

// First-difference template of the equimultiple CI family, rows (m+1)d1 + 1,
// cols (m+1)d2 + 1. For d1 > d2 the transposed template is returned.
IntMatrix delta_template_ci(int d1, int d2, int m);

// Closed value for Y = m * X with X an almost complete intersection whose
// alpha tuple is (d1 x a, d2 x b), d1 > d2. Requires i >= (m+1)(a+b) - 1.
long long hf_omega_aci(int a, int b, int d1, int d2, int m, long j, long i);

}  // namespace fatpoints
