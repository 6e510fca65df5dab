#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints {

// Bigraded coordinate ring S = K[X0,X1,Y0,Y1] with deg X* = (1,0), deg Y* = (0,1).

struct BiDegree {
    long i = 0;
    long j = 0;
    friend bool operator==(const BiDegree&, const BiDegree&) = default;
    friend auto operator<=>(const BiDegree&, const BiDegree&) = default;  // lex, used for sorting only
    BiDegree operator+(const BiDegree& o) const { return {i + o.i, j + o.j}; }
    BiDegree operator-(const BiDegree& o) const { return {i - o.i, j - o.j}; }
    // componentwise partial order
    bool dominates(const BiDegree& o) const { return i >= o.i && j >= o.j; }
};

enum class Var { X0 = 0, X1 = 1, Y0 = 2, Y1 = 3 };

struct Monomial {
    int a0 = 0, a1 = 0, b0 = 0, b1 = 0;  // exponents of X0, X1, Y0, Y1
    BiDegree degree() const { return {a0 + a1, b0 + b1}; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const { return {a0 + o.a0, a1 + o.a1, b0 + o.b0, b1 + o.b1}; }
};

// Canonical term order: lexicographic on (a0,a1,b0,b1), listed descending.
struct MonoBefore {
    bool operator()(const Monomial& l, const Monomial& r) const {
        return std::tie(l.a0, l.a1, l.b0, l.b1) > std::tie(r.a0, r.a1, r.b0, r.b1);
    }
};

// All monomials of S_{i,j} in the canonical order; empty when a component is negative.
std::vector<Monomial> monomial_basis(BiDegree deg);

// Immutable-style exact polynomial; operations return new values.
class BiPoly {
  public:
    using TermMap = std::map<Monomial, Rat, MonoBefore>;

    BiPoly() = default;
    static BiPoly zero() { return {}; }
    static BiPoly constant(const Rat& c);
    static BiPoly variable(Var v);
    static BiPoly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coefficient(const Monomial& m) const;

    // Bidegree when nonzero and bihomogeneous; nullopt otherwise (zero included).
    std::optional<BiDegree> bidegree() const;
    bool is_bihomogeneous() const;  // true for zero

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    friend BiPoly operator*(const Rat& c, const BiPoly& f);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly partial(Var v) const;

    // Value at exact coordinates (x0,x1,y0,y1); rejects non-bihomogeneous input
    // since only those have a well-defined vanishing locus on P1 x P1.
    Rat evaluate(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const;

    // Canonical text form, terms in the canonical order: "3/2*X0^2*X1*Y1 - Y0^3".
    std::string str() const;
    static BiPoly parse(const std::string& text);

  private:
    TermMap terms_;  // invariant: no zero coefficients stored
    void add_term(const Monomial& m, const Rat& c);
};

// Graded ring substitution X_k -> sum of x[k][l]*X_l, Y_k -> sum of y[k][l]*Y_l.
struct LinearChange {
    std::array<std::array<Rat, 2>, 2> x{};
    std::array<std::array<Rat, 2>, 2> y{};

    static LinearChange identity();
    // Substitution carrying the point with these coordinates to [1:0]x[1:0]:
    // first columns are the point coordinates, completed by companions (-a1,a0).
    static LinearChange to_origin(const Rat& ax0, const Rat& ax1, const Rat& ay0, const Rat& ay1);

    Rat det_x() const { return x[0][0] * x[1][1] - x[0][1] * x[1][0]; }
    Rat det_y() const { return y[0][0] * y[1][1] - y[0][1] * y[1][0]; }
    bool is_invertible() const { return det_x() != 0 && det_y() != 0; }
    LinearChange inverse() const;
};

// Applies the substitution; rejects a non-invertible change.
BiPoly apply_change(const LinearChange& c, const BiPoly& f);

}  // namespace fatpoints
