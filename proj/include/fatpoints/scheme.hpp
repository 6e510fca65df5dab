#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fatpoints/bipoly.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/linalg.hpp"
#include "fatpoints/window.hpp"

namespace fatpoints {

// Point of P1 x P1 with exact coordinates, stored in the canonical scaling:
// the first nonzero coordinate of each factor is 1.
struct PointP1P1 {
    Rat x0, x1, y0, y1;

    static PointP1P1 make(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1);
    friend bool operator==(const PointP1P1&, const PointP1P1&) = default;
    bool same_x(const PointP1P1& o) const { return x0 == o.x0 && x1 == o.x1; }
    bool same_y(const PointP1P1& o) const { return y0 == o.y0 && y1 == o.y1; }
};

struct FatEntry {
    PointP1P1 p;
    int mult = 1;
};

// Fat point scheme: distinct points with multiplicities >= 1. Entry order is
// significant for indexing and for the Q/R first-occurrence order used by the
// hat tuples.
class FatPointScheme {
  public:
    FatPointScheme() = default;  // empty scheme (zero ring)
    explicit FatPointScheme(std::vector<FatEntry> entries);

    // the reduced d1 x d2 grid {[1:i] x [1:j]}, a complete intersection
    static FatPointScheme grid_ci(int d1, int d2);

    const std::vector<FatEntry>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    bool is_reduced() const;
    long long degree() const;  // sum of m(m+1)/2

    FatPointScheme equimultiple(int m) const;  // same support, every multiplicity m
    FatPointScheme thicken() const;            // every multiplicity + 1
    FatPointScheme remove_entry(int idx) const;
    // multiplicity of entry idx lowered by one; the entry is dropped at zero
    FatPointScheme decrement(int idx) const;

    // distinct first/second components in first-occurrence order
    const std::vector<PointP1P1>& q_points() const { return qs_; }
    const std::vector<PointP1P1>& r_points() const { return rs_; }
    int q_index(int entryIdx) const { return qIndex_[entryIdx]; }
    int r_index(int entryIdx) const { return rIndex_[entryIdx]; }
    int r() const { return static_cast<int>(qs_.size()); }
    int t() const { return static_cast<int>(rs_.size()); }

  private:
    std::vector<FatEntry> entries_;
    std::vector<PointP1P1> qs_, rs_;
    std::vector<int> qIndex_, rIndex_;
};

// Vanishing conditions of order m at p on S_deg: one row per pair (u,v) with
// u+v <= m-1, columns over monomial_basis(deg). A form lies in the m-th
// symbolic power of the point's ideal iff all rows annihilate its coefficients.
RationalMatrix point_conditions(const PointP1P1& p, int m, BiDegree deg);

// Stacked conditions of the whole scheme at one bidegree.
RationalMatrix scheme_conditions(const FatPointScheme& y, BiDegree deg);

// dim of the ideal component / a kernel basis re-read as polynomials
long ideal_dim(const FatPointScheme& y, BiDegree deg);
std::vector<BiPoly> ideal_basis(const FatPointScheme& y, BiDegree deg);
long hf_value(const FatPointScheme& y, BiDegree deg);  // = rank of conditions

// alpha/beta tuple bundle. alpha/beta are sorted non-increasing; the hat
// tuples keep the natural first-occurrence component order; the star tuples
// are conjugates trimmed of trailing zeros.
struct TupleBundle {
    std::vector<long long> alpha, beta;
    std::vector<long long> alphaStar, betaStar;
    std::vector<long long> alphaHat, betaHat;
    std::vector<long long> nu, nuPrime;
    long long l = 0, lPrime = 0, r = 0, t = 0;

    long long alpha_star_at(size_t k) const {  // 1-based, 0 beyond the tuple
        return k >= 1 && k <= alphaStar.size() ? alphaStar[k - 1] : 0;
    }
    long long beta_star_at(size_t k) const {
        return k >= 1 && k <= betaStar.size() ? betaStar[k - 1] : 0;
    }
};

TupleBundle tuples(const FatPointScheme& y);

// Default window covering stabilization with a two-entry guard band.
std::pair<int, int> default_hf_window(const FatPointScheme& y);

// Window of Hilbert function values of the quotient ring, one exact rank per
// bidegree. Metadata: constant rows from l+r-1, columns from l'+t-1, eventual
// value degree(y).
HilbertMatrix hf(const FatPointScheme& y, int rows, int cols, ExecMode mode = ExecMode::parallel);
HilbertMatrix hf(const FatPointScheme& y, ExecMode mode = ExecMode::parallel);

// Nonzerodivisor pair certificate: L1 of bidegree (1,0) and L2 of (0,1)
// forming a regular sequence on the quotient ring, when one exists.
struct NzdPair {
    BiPoly l1, l2;
};

std::optional<NzdPair> find_nzd_pair(const FatPointScheme& y, long budget);

struct AcmResult {
    bool acm = false;
    std::optional<NzdPair> cert;
    explicit operator bool() const { return acm; }
};

// ACM test by regular-sequence certificate: some candidate pair satisfies
// HF_{S/(I+(L1,L2))} = mixed first difference of HF on the verification
// window (re-checked once on a grown window).
AcmResult is_acm(const FatPointScheme& y);

// Scheme with points replaced by B*p for the coordinate change built from the
// certificate forms, so that X0 and Y0 become the regular sequence.
FatPointScheme normalized_scheme(const FatPointScheme& y, const NzdPair& cert, LinearChange* outChange = nullptr);

}  // namespace fatpoints
