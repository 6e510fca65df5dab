#include "fatpoints/ideal.hpp"

#include <mutex>
#include <stdexcept>

namespace fatpoints {

std::vector<Rat> coeff_vector(const BiPoly& f, BiDegree deg) {
    std::vector<Rat> v(static_cast<size_t>((deg.i + 1) * (deg.j + 1)), Rat(0));
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != deg)
            throw std::invalid_argument("coeff_vector: term outside the requested bidegree");
        v[static_cast<size_t>(m.a1) * (deg.j + 1) + m.b1] = c;
    }
    return v;
}

BiPoly vector_to_poly(const std::vector<Rat>& v, BiDegree deg) {
    BiPoly f;
    auto basis = monomial_basis(deg);
    if (v.size() != basis.size()) throw std::invalid_argument("vector_to_poly: wrong length");
    for (size_t k = 0; k < basis.size(); ++k)
        if (v[k] != 0) f = f + BiPoly::term(basis[k], v[k]);
    return f;
}

const Subspace& DegreewiseIdeal::component(BiDegree deg) const {
    std::pair<long, long> key{deg.i, deg.j};
    {
        std::shared_lock lk(mx_);
        auto it = components_.find(key);
        if (it != components_.end()) return it->second;
    }
    Subspace s = deg.i < 0 || deg.j < 0 ? Subspace(0) : compute_component(deg);
    std::unique_lock lk(mx_);
    auto [it, inserted] = components_.emplace(key, std::move(s));
    return it->second;
}

long DegreewiseIdeal::dim(BiDegree deg) const {
    if (deg.i < 0 || deg.j < 0) return 0;
    std::pair<long, long> key{deg.i, deg.j};
    {
        std::shared_lock lk(mx_);
        auto it = dims_.find(key);
        if (it != dims_.end()) return it->second;
        auto ic = components_.find(key);
        if (ic != components_.end()) return ic->second.dim();
    }
    long d = compute_dim(deg);
    std::unique_lock lk(mx_);
    dims_.emplace(key, d);
    return d;
}

long DegreewiseIdeal::hf_value(BiDegree deg) const {
    if (deg.i < 0 || deg.j < 0) return 0;
    return (deg.i + 1) * (deg.j + 1) - dim(deg);
}

std::vector<BiPoly> DegreewiseIdeal::basis_polys(BiDegree deg) const {
    std::vector<BiPoly> out;
    if (deg.i < 0 || deg.j < 0) return out;
    for (const auto& row : component(deg).rows()) out.push_back(vector_to_poly(row, deg));
    return out;
}

long DegreewiseIdeal::compute_dim(BiDegree deg) const { return component(deg).dim(); }

Subspace SchemeIdeal::compute_component(BiDegree deg) const {
    Subspace s(static_cast<int>((deg.i + 1) * (deg.j + 1)));
    if (y_.empty()) {  // unit ideal: every form vanishes on the empty scheme
        for (const Monomial& m : monomial_basis(deg)) s.insert(coeff_vector(BiPoly::term(m, Rat(1)), deg));
        return s;
    }
    for (auto& v : kernel_basis(scheme_conditions(y_, deg))) s.insert(std::move(v));
    return s;
}

long SchemeIdeal::compute_dim(BiDegree deg) const {
    if (y_.empty()) return (deg.i + 1) * (deg.j + 1);
    return (deg.i + 1) * (deg.j + 1) - rank_exact(scheme_conditions(y_, deg));
}

SpanIdeal::SpanIdeal(std::vector<BiPoly> gens, const DegreewiseIdeal* base)
    : gens_(std::move(gens)), base_(base) {
    for (const auto& g : gens_) {
        auto d = g.bidegree();
        if (!d) throw std::invalid_argument("SpanIdeal: generators must be nonzero and bihomogeneous");
        degs_.push_back(*d);
    }
}

SpanIdeal SpanIdeal::squared() const {
    std::vector<BiPoly> sq;
    for (size_t a = 0; a < gens_.size(); ++a)
        for (size_t b = a; b < gens_.size(); ++b) sq.push_back(gens_[a] * gens_[b]);
    return SpanIdeal(std::move(sq));
}

Subspace SpanIdeal::compute_component(BiDegree deg) const {
    Subspace s(static_cast<int>((deg.i + 1) * (deg.j + 1)));
    if (base_) {
        for (const auto& row : base_->component(deg).rows()) s.insert(row);
    }
    for (size_t k = 0; k < gens_.size(); ++k) {
        BiDegree shift = deg - degs_[k];
        for (const Monomial& m : monomial_basis(shift))
            s.insert(coeff_vector(gens_[k] * BiPoly::term(m, Rat(1)), deg));
    }
    return s;
}

HilbertMatrix hf(const DegreewiseIdeal& ideal, int rows, int cols, ExecMode mode) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("hf: window must be at least 1x1");
    HilbertMatrix h;
    h.window.assign(rows, std::vector<long long>(cols, 0));
    fill_window(
        rows, cols, [&](int i, int j) { h.window[i][j] = ideal.hf_value({i, j}); }, mode);
    return h;
}

}  // namespace fatpoints
