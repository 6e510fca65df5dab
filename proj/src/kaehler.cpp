#include "fatpoints/kaehler.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

namespace {

HilbertMatrix assemble_from_windows(const HilbertMatrix& hy, const HilbertMatrix& hv, int rows,
                                    int cols) {
    HilbertMatrix h;
    h.window.assign(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            h.window[i][j] = 2 * hy.at(i - 1, j) + 2 * hy.at(i, j - 1) + hy.at(i, j) - hv.at(i, j);
    return h;
}

}  // namespace

HilbertMatrix hf_omega(const FatPointScheme& y, int rows, int cols, ExecMode mode) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("hf_omega: window must be at least 1x1");
    if (y.empty()) throw std::invalid_argument("hf_omega: empty scheme");
    HilbertMatrix hy = hf(y, rows, cols, mode);
    HilbertMatrix hv = hf(y.thicken(), rows, cols, mode);
    HilbertMatrix h = assemble_from_windows(hy, hv, rows, cols);
    TupleBundle b = tuples(y);
    h.meta.rowBound = static_cast<int>(b.l + b.r - 1);
    h.meta.colBound = static_cast<int>(b.lPrime + b.t - 1);
    h.meta.eventual = omega_stable_value(y);
    return h;
}

HilbertMatrix hf_omega(const FatPointScheme& y, ExecMode mode) {
    auto [r, c] = default_hf_window(y);
    return hf_omega(y, r, c, mode);
}

HilbertMatrix hf_omega_formula(const DegreewiseIdeal& ideal, const DegreewiseIdeal& thick, int rows,
                               int cols, ExecMode mode) {
    HilbertMatrix hy = hf(ideal, rows, cols, mode);
    HilbertMatrix hv = hf(thick, rows, cols, mode);
    return assemble_from_windows(hy, hv, rows, cols);
}

HilbertMatrix hf_omega_oracle(const DegreewiseIdeal& ideal, int rows, int cols, ExecMode mode) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("hf_omega_oracle: window must be at least 1x1");
    // warm the component cache in parallel; the assembly below then only reads
    fill_window(
        rows, cols, [&](int i, int j) { ideal.component({i, j}); }, mode);

    HilbertMatrix h;
    h.window.assign(rows, std::vector<long long>(cols, 0));
    fill_window(
        rows, cols,
        [&](int i, int j) {
            BiDegree deg{i, j};
            BiDegree dx{i - 1, j}, dy{i, j - 1};
            long long base = 2 * ideal.hf_value(dx) + 2 * ideal.hf_value(dy);
            const int nx = i >= 1 ? i * (j + 1) : 0;
            const int ny = j >= 1 ? (i + 1) * j : 0;
            // rows: class of dF modulo I dX0 + I dX1 + I dY0 + I dY1,
            // componentwise canonical residues
            std::vector<std::vector<Rat>> rows_;
            for (const BiPoly& f : ideal.basis_polys(deg)) {
                std::vector<Rat> row;
                row.reserve(2 * nx + 2 * ny);
                auto append = [&](Var v, BiDegree d, int n) {
                    if (n == 0) return;
                    std::vector<Rat> comp = coeff_vector(f.partial(v), d);
                    ideal.component(d).reduce(comp);
                    row.insert(row.end(), comp.begin(), comp.end());
                };
                append(Var::X0, dx, nx);
                append(Var::X1, dx, nx);
                append(Var::Y0, dy, ny);
                append(Var::Y1, dy, ny);
                if (!row.empty()) rows_.push_back(std::move(row));
            }
            long rk = rows_.empty() ? 0 : span_dim(rows_);
            h.window[i][j] = base - rk;
        },
        mode);
    return h;
}

HilbertMatrix hf_omega_oracle(const FatPointScheme& y, int rows, int cols, ExecMode mode) {
    SchemeIdeal ideal(y);
    return hf_omega_oracle(ideal, rows, cols, mode);
}

SpecialValue omega_special_value(const FatPointScheme& y, BiDegree deg) {
    if (y.empty()) throw std::invalid_argument("omega_special_value: empty scheme");
    if (deg.i == 0 && deg.j == 0) return {0, 'a'};
    if (ideal_dim(y, deg) == 0) {
        return {4 * deg.i * deg.j + 2 * deg.i + 2 * deg.j, 'b'};
    }
    long long c = hf_value(y, deg);
    if (hf_value(y, {deg.i - 1, deg.j}) == c && hf_value(y, {deg.i, deg.j - 1}) == c) {
        long long v = hf_value(y.thicken(), deg);
        return {5 * c - v, 'c'};
    }
    throw std::invalid_argument(
        "omega_special_value: no special rule applies at this bidegree (ideal component nonzero "
        "and the neighboring values differ)");
}

long long omega_stable_value(const FatPointScheme& y) {
    if (y.empty()) throw std::invalid_argument("omega_stable_value: empty scheme");
    long long s = 0;
    for (const auto& e : y.entries()) s += e.mult + 1;
    return 4 * y.degree() - s;
}

long long hf_omega_closed(const FatPointScheme& y, Direction dir, long fixedIndex) {
    if (y.empty()) throw std::invalid_argument("hf_omega_closed: empty scheme");
    if (fixedIndex < 0) throw std::invalid_argument("hf_omega_closed: negative index");
    TupleBundle b = tuples(y);
    const bool rowWise = dir == Direction::large_i;
    const auto& hat = rowWise ? b.alphaHat : b.betaHat;
    long long maxHat = *std::max_element(hat.begin(), hat.end());
    long long j = fixedIndex;
    long long v = 0;
    for (long long k = 1; k <= j; ++k) v += 4 * (rowWise ? b.alpha_star_at(k) : b.beta_star_at(k));
    v += 2 * (rowWise ? b.alpha_star_at(j + 1) : b.beta_star_at(j + 1));
    long long h = std::min<long long>(j + 1, maxHat);
    for (long long k = 1; k <= h; ++k)
        v -= static_cast<long long>(
            std::count_if(hat.begin(), hat.end(), [&](long long a) { return a >= k; }));
    return v;
}

namespace {

// shared evaluator for the ACM-thickening closed form and its equimultiple
// CI specialization; alpha sorted non-increasing, alphaHat in natural order
HilbertMatrix closed_form_window(const std::vector<long long>& alpha,
                                 const std::vector<long long>& alphaHat, long long l, long long r,
                                 int rows, int cols) {
    auto c = [&](long long k, long long j) -> long long {
        if (j < 0 || k < 0 || k >= l) return 0;
        return std::min<long long>(j + 1, alpha[static_cast<size_t>(k)]);
    };
    HilbertMatrix h;
    h.window.assign(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            long long v = 0;
            for (long long k = 0; k <= std::min<long long>(i - 1, l - 1); ++k) v += 2 * c(k, j);
            for (long long k = 0; k <= std::min<long long>(i, l - 1); ++k) v += 2 * c(k, j - 1);
            for (long long k = 0; k <= std::min<long long>(i, l - 1); ++k) v += c(k, j);
            for (long long k = 0; k <= std::min<long long>(i, r - 1); ++k)
                v -= std::min<long long>(j + 1, alphaHat[static_cast<size_t>(k)]);
            for (long long k = r; k <= std::min<long long>(i, l + r - 1); ++k) v -= c(k - r, j);
            h.window[i][j] = v;
        }
    }
    return h;
}

}  // namespace

HilbertMatrix hf_omega_acm_thickening(const FatPointScheme& y, int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("hf_omega_acm_thickening: window must be at least 1x1");
    if (y.empty()) throw std::invalid_argument("hf_omega_acm_thickening: empty scheme");
    if (!is_acm(y.thicken()).acm)
        throw std::invalid_argument("hf_omega_acm_thickening: thickening of the scheme is not ACM");
    TupleBundle b = tuples(y);
    for (size_t k = 0; k + 1 < b.alphaHat.size(); ++k)
        if (b.alphaHat[k] < b.alphaHat[k + 1])
            throw std::invalid_argument("hf_omega_acm_thickening: violated inequality alphaHat_" +
                                        std::to_string(k + 1) + " >= alphaHat_" + std::to_string(k + 2));
    if (b.alphaHat.back() < b.alpha.front())
        throw std::invalid_argument("hf_omega_acm_thickening: violated inequality alphaHat_" +
                                    std::to_string(b.alphaHat.size()) + " >= alpha_1");
    HilbertMatrix h = closed_form_window(b.alpha, b.alphaHat, b.l, b.r, rows, cols);
    h.meta.rowBound = static_cast<int>(b.l + b.r - 1);
    h.meta.colBound = static_cast<int>(b.lPrime + b.t - 1);
    h.meta.eventual = omega_stable_value(y);
    return h;
}

HilbertMatrix hf_omega_equi_ci(int d1, int d2, int m, int rows, int cols) {
    if (d1 < 1 || d2 < 1 || m < 1)
        throw std::invalid_argument("hf_omega_equi_ci: d1, d2, m must be >= 1");
    if (d1 > d2) throw std::invalid_argument("hf_omega_equi_ci: d1 > d2; swap the inputs instead");
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("hf_omega_equi_ci: window must be at least 1x1");
    std::vector<long long> alpha, alphaHat;
    for (int k = m; k >= 1; --k)
        for (int e = 0; e < d1; ++e) alpha.push_back(static_cast<long long>(k) * d2);
    for (int e = 0; e < d1; ++e) alphaHat.push_back(static_cast<long long>(m + 1) * d2);
    HilbertMatrix h = closed_form_window(alpha, alphaHat, static_cast<long long>(m) * d1, d1, rows, cols);
    h.meta.rowBound = (m + 1) * d1 - 1;
    h.meta.colBound = (m + 1) * d2 - 1;
    h.meta.eventual = static_cast<long long>(d1) * d2 * (m + 1) * (2 * m - 1);
    return h;
}

IntMatrix delta_template_ci(int d1, int d2, int m) {
    if (d1 < 1 || d2 < 1 || m < 1)
        throw std::invalid_argument("delta_template_ci: d1, d2, m must be >= 1");
    if (d1 > d2) {
        IntMatrix t = delta_template_ci(d2, d1, m);
        IntMatrix out(t[0].size(), std::vector<long long>(t.size(), 0));
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = 0; j < t[i].size(); ++j) out[j][i] = t[i][j];
        return out;
    }
    // one block of d1 rows per q = 0..m; the left strip narrows by d2 per block
    const int rows = (m + 1) * d1 + 1, cols = (m + 1) * d2 + 1;
    IntMatrix t(rows, std::vector<long long>(cols, 0));
    for (int q = 0; q <= m; ++q) {
        for (int s = 0; s < d1; ++s) {
            const int i = q * d1 + s;
            if (q == m) {
                for (int j = 0; j < d2; ++j) t[i][j] = s == 0 ? 1 : -1;
                continue;
            }
            const int left = (m - q) * d2;
            const bool top = q == 0 && s == 0;
            for (int j = 0; j < left; ++j) t[i][j] = j == 0 ? (top ? 0 : 2) : (top ? 2 : 4);
            const bool spike = q > 0 && s == 0;  // tail 3,1,...,1 on each later block's first row
            for (int j = left; j < left + d2; ++j)
                t[i][j] = j == left ? (spike ? 3 : 1) : (spike ? 1 : -1);
        }
    }
    return t;
}

long long hf_omega_aci(int a, int b, int d1, int d2, int m, long j, long i) {
    if (a < 1 || b < 1 || m < 1) throw std::invalid_argument("hf_omega_aci: a, b, m must be >= 1");
    if (d1 <= d2) throw std::invalid_argument("hf_omega_aci: requires d1 > d2");
    if (j < 0) throw std::invalid_argument("hf_omega_aci: negative j");
    const long long validFrom = static_cast<long long>(m + 1) * (a + b) - 1;
    if (i < validFrom)
        throw std::invalid_argument("hf_omega_aci: requires i >= (m+1)(a+b)-1 = " +
                                    std::to_string(validFrom));
    std::vector<long long> alpha;
    for (int k = m; k >= 1; --k) {
        for (int e = 0; e < a; ++e) alpha.push_back(static_cast<long long>(k) * d1);
        for (int e = 0; e < b; ++e) alpha.push_back(static_cast<long long>(k) * d2);
    }
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    auto star = [&](long long k) {
        return static_cast<long long>(
            std::count_if(alpha.begin(), alpha.end(), [&](long long v) { return v >= k; }));
    };
    long long v = 0;
    for (long long k = 1; k <= j; ++k) v += 4 * star(k);
    v += 2 * star(j + 1);
    long long delta;
    if (j < static_cast<long long>(m + 1) * d2)
        delta = (j + 1) * (a + b);
    else if (j < static_cast<long long>(m + 1) * d1)
        delta = (j + 1) * a + static_cast<long long>(m + 1) * b * d2;
    else
        delta = static_cast<long long>(m + 1) * (static_cast<long long>(a) * d1 + static_cast<long long>(b) * d2);
    return v - delta;
}

}  // namespace fatpoints
