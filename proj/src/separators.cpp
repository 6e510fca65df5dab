#include "fatpoints/separators.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "fatpoints/ideal.hpp"

namespace fatpoints {

namespace {

void check_index(const FatPointScheme& y, int idx, const char* who) {
    if (idx < 0 || idx >= y.size()) throw std::out_of_range(std::string(who) + ": entry index");
}

void check_reduced(const FatPointScheme& x, const char* who) {
    if (!x.is_reduced()) throw std::invalid_argument(std::string(who) + ": scheme is not reduced");
}

bool lex_less(const BiDegree& a, const BiDegree& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
}

// f in the m-th symbolic power at p, i.e. all order-m vanishing conditions hold
bool in_symbolic_power(const std::vector<Rat>& coeffs, const PointP1P1& p, int m, BiDegree deg) {
    if (m <= 0) return true;
    RationalMatrix cond = point_conditions(p, m, deg);
    for (int r = 0; r < cond.rows; ++r) {
        Rat dot = 0;
        for (int c = 0; c < cond.cols; ++c) dot += cond.at(r, c) * coeffs[c];
        if (dot != 0) return false;
    }
    return true;
}

}  // namespace

DegreeTuple degree_tuple_acm(const FatPointScheme& y, int idx) {
    check_index(y, idx, "degree_tuple_acm");
    if (!is_acm(y)) throw std::invalid_argument("degree_tuple_acm: scheme is not ACM");
    const int m = y.entries()[idx].mult;
    std::vector<long long> a(m), b(m);
    for (int l = 0; l < m; ++l) {
        for (int f = 0; f < y.size(); ++f) {
            long long excess = std::max<long long>(y.entries()[f].mult - l, 0);
            if (y.r_index(f) == y.r_index(idx)) a[l] += excess;
            if (y.q_index(f) == y.q_index(idx)) b[l] += excess;
        }
    }
    DegreeTuple tuple(m);
    for (int k = 0; k < m; ++k) tuple[k] = {a[m - 1 - k] - 1, b[k] - 1};
    std::stable_sort(tuple.begin(), tuple.end(), lex_less);
    return tuple;
}

GeneratorSet minimal_separators(const FatPointScheme& y, int idx) {
    check_index(y, idx, "minimal_separators");
    auto [rows, cols] = default_hf_window(y);
    TupleBundle bnd = tuples(y);
    SchemeIdeal target(y.decrement(idx));
    SchemeIdeal base(y);
    return sweep_generators(target, &base, rows, cols, static_cast<int>(4 * (bnd.l + bnd.r)),
                            static_cast<int>(4 * (bnd.lPrime + bnd.t)));
}

DegreeTuple separator_degrees(const GeneratorSet& gens) {
    DegreeTuple degs;
    for (const auto& [g, d] : gens.gens) degs.push_back(d);
    std::stable_sort(degs.begin(), degs.end(), lex_less);
    return degs;
}

bool is_separator(const BiPoly& f, const FatPointScheme& y, int idx) {
    check_index(y, idx, "is_separator");
    if (f.is_zero()) return false;
    auto deg = f.bidegree();
    if (!deg) throw std::invalid_argument("is_separator: polynomial is not bihomogeneous");
    std::vector<Rat> coeffs = coeff_vector(f, *deg);
    for (int e = 0; e < y.size(); ++e) {
        const auto& [p, m] = y.entries()[e];
        if (e == idx) {
            if (!in_symbolic_power(coeffs, p, m - 1, *deg)) return false;
            if (in_symbolic_power(coeffs, p, m, *deg)) return false;
        } else if (!in_symbolic_power(coeffs, p, m, *deg)) {
            return false;
        }
    }
    return true;
}

HilbertMatrix hf_remove_point(const FatPointScheme& x, int idx, int rows, int cols) {
    check_reduced(x, "hf_remove_point");
    check_index(x, idx, "hf_remove_point");
    if (rows < 0 || cols < 0) std::tie(rows, cols) = default_hf_window(x);
    GeneratorSet seps = minimal_separators(x, idx);
    if (!seps.verified) throw std::runtime_error("hf_remove_point: separator sweep failed to verify");
    DegreeTuple degs = separator_degrees(seps);
    HilbertMatrix h = hf(x, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            bool inUpSet = std::any_of(degs.begin(), degs.end(), [&](const BiDegree& d) {
                return BiDegree{i, j}.dominates(d);
            });
            if (inUpSet) h.window[i][j] -= 1;
        }
    FatPointScheme deleted = x.remove_entry(idx);
    if (deleted.empty()) {
        h.meta = {0, 0, 0};
    } else {
        TupleBundle b = tuples(deleted);
        h.meta.rowBound = static_cast<int>(std::max<long long>(b.l + b.r - 1, 0));
        h.meta.colBound = static_cast<int>(std::max<long long>(b.lPrime + b.t - 1, 0));
        h.meta.eventual = deleted.degree();
    }
    return h;
}

bool is_cbp(const FatPointScheme& x) {
    check_reduced(x, "is_cbp");
    if (x.size() <= 1) return true;
    auto [rows, cols] = default_hf_window(x);
    HilbertMatrix ref = hf(x.remove_entry(0), rows, cols);
    for (int e = 1; e < x.size(); ++e)
        if (hf(x.remove_entry(e), rows, cols).window != ref.window) return false;
    return true;
}

bool is_cbp_by_degree_tuples(const FatPointScheme& x) {
    check_reduced(x, "is_cbp_by_degree_tuples");
    if (x.size() <= 1) return true;
    DegreeTuple ref = separator_degrees(minimal_separators(x, 0));
    for (int e = 1; e < x.size(); ++e)
        if (separator_degrees(minimal_separators(x, e)) != ref) return false;
    return true;
}

bool is_ci(const FatPointScheme& x) {
    check_reduced(x, "is_ci");
    if (x.empty()) return false;
    GeneratorSet gens = minimal_generators(x);
    if (!gens.verified) throw std::runtime_error("is_ci: generator sweep failed to verify");
    if (gens.gens.size() != 2) return false;
    BiDegree d0 = gens.gens[0].second, d1 = gens.gens[1].second;
    if (d0.i == 0) std::swap(d0, d1);  // put the (d1,0) generator first
    return d0.i >= 1 && d0.j == 0 && d1.i == 0 && d1.j >= 1;
}

bool is_aci(const FatPointScheme& x) {
    check_reduced(x, "is_aci");
    if (x.empty()) return false;
    if (!is_acm(x)) return false;
    TupleBundle b = tuples(x);
    long long distinct = 1;
    for (size_t k = 1; k < b.alpha.size(); ++k)
        if (b.alpha[k] != b.alpha[k - 1]) ++distinct;
    return distinct == 2;
}

bool cbp_different_criterion(const FatPointScheme& x) {
    check_reduced(x, "cbp_different_criterion");
    AcmResult acm = is_acm(x);
    if (!acm.acm) throw std::invalid_argument("cbp_different_criterion: scheme is not ACM");
    if (x.size() <= 1) return true;

    FatPointScheme norm = normalized_scheme(x, *acm.cert);
    GeneratorSet gens = minimal_generators(norm);
    if (!gens.verified)
        throw std::runtime_error("cbp_different_criterion: generator sweep failed to verify");
    SchemeIdeal ideal(norm);
    SpanIdeal theta(jacobian_minors(gens.gens), &ideal);

    std::vector<std::unique_ptr<SchemeIdeal>> deleted;
    deleted.reserve(norm.size());
    for (int e = 0; e < norm.size(); ++e)
        deleted.push_back(std::make_unique<SchemeIdeal>(norm.remove_entry(e)));

    const long ibound = 2 * x.r() - 2, jbound = 2 * x.t() - 2;
    for (long i = 0; i <= ibound; ++i) {
        for (long j = 0; j <= jbound; ++j) {
            if (i == ibound && j == jbound) continue;  // the region is strictly below the corner
            BiDegree deg{i, j};
            const Subspace& a = theta.component(deg);
            long dimI = ideal.dim(deg);
            if (a.dim() == dimI) continue;  // no different element at all here
            for (int e = 0; e < norm.size(); ++e) {
                const Subspace& b = deleted[e]->component(deg);
                Subspace sum = a;
                for (const auto& row : b.rows()) sum.insert(row);
                long meet = a.dim() + b.dim() - sum.dim();
                if (meet > dimI) return false;  // theta holds a separator of point e
            }
        }
    }
    return true;
}

}  // namespace fatpoints
