#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "fatpoints/hilbert.hpp"
#include "fatpoints/linalg.hpp"
#include "fatpoints/scheme.hpp"
#include "fatpoints/window.hpp"

namespace fatpoints {

// A bihomogeneous ideal presented degreewise: each bidegree component is a
// subspace of S_{i,j} in coefficient coordinates over monomial_basis. Both the
// component subspaces (RREF) and the bare dimensions are cached; lookups are
// safe under concurrent window fills.
class DegreewiseIdeal {
  public:
    virtual ~DegreewiseIdeal() = default;

    const Subspace& component(BiDegree deg) const;
    long dim(BiDegree deg) const;
    long hf_value(BiDegree deg) const;  // dim S_deg - dim I_deg, 0 off-quadrant
    std::vector<BiPoly> basis_polys(BiDegree deg) const;

  protected:
    virtual Subspace compute_component(BiDegree deg) const = 0;
    // rank-only fast path; default derives it from the component
    virtual long compute_dim(BiDegree deg) const;

  private:
    mutable std::map<std::pair<long, long>, Subspace> components_;
    mutable std::map<std::pair<long, long>, long> dims_;
    mutable std::shared_mutex mx_;
};

// Ideal of a fat point scheme: components are kernels of the stacked
// point-condition matrices; dimensions come from exact ranks.
class SchemeIdeal : public DegreewiseIdeal {
  public:
    explicit SchemeIdeal(FatPointScheme y) : y_(std::move(y)) {}
    const FatPointScheme& scheme() const { return y_; }

  protected:
    Subspace compute_component(BiDegree deg) const override;
    long compute_dim(BiDegree deg) const override;

  private:
    FatPointScheme y_;
};

// Span of bihomogeneous generators (all monomial multiples per bidegree) on
// top of an optional base ideal. With no base this is the ideal generated by
// the given polynomials; an empty generator list with no base is the zero
// ideal, whose quotient is S itself.
class SpanIdeal : public DegreewiseIdeal {
  public:
    explicit SpanIdeal(std::vector<BiPoly> gens, const DegreewiseIdeal* base = nullptr);
    const std::vector<BiPoly>& generators() const { return gens_; }
    SpanIdeal squared() const;  // pairwise products, no base

  protected:
    Subspace compute_component(BiDegree deg) const override;

  private:
    std::vector<BiPoly> gens_;
    std::vector<BiDegree> degs_;
    const DegreewiseIdeal* base_;
};

// HF window of S/I for any degreewise ideal. No stabilization metadata.
HilbertMatrix hf(const DegreewiseIdeal& ideal, int rows, int cols, ExecMode mode = ExecMode::parallel);

// Coefficient vector of f in monomial_basis(deg); f must be bihomogeneous of
// that bidegree (or zero).
std::vector<Rat> coeff_vector(const BiPoly& f, BiDegree deg);
BiPoly vector_to_poly(const std::vector<Rat>& v, BiDegree deg);

}  // namespace fatpoints
