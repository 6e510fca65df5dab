#include "fatpoints/different.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

namespace {

// new generators of target/base at one bidegree, appended to out
void sweep_cell(const DegreewiseIdeal& target, const DegreewiseIdeal* base, BiDegree deg,
                std::vector<std::pair<BiPoly, BiDegree>>& out) {
    const int n = static_cast<int>((deg.i + 1) * (deg.j + 1));
    long targetDim = target.dim(deg);
    if (targetDim == 0) return;
    Subspace span(n);
    if (base)
        for (const auto& row : base->component(deg).rows()) span.insert(row);
    auto push_shift = [&](Var v, BiDegree lower) {
        if (lower.i < 0 || lower.j < 0) return;
        BiPoly var = BiPoly::variable(v);
        for (const BiPoly& f : target.basis_polys(lower)) span.insert(coeff_vector(var * f, deg));
    };
    push_shift(Var::X0, {deg.i - 1, deg.j});
    push_shift(Var::X1, {deg.i - 1, deg.j});
    push_shift(Var::Y0, {deg.i, deg.j - 1});
    push_shift(Var::Y1, {deg.i, deg.j - 1});
    if (span.dim() >= targetDim && !base) return;  // no room for new generators
    for (const auto& row : target.component(deg).rows())
        if (span.insert(row)) out.push_back({vector_to_poly(row, deg), deg});
}

// degreewise agreement of the module generated by gens (over base) with target
bool generates(const DegreewiseIdeal& target, const DegreewiseIdeal* base,
               const std::vector<std::pair<BiPoly, BiDegree>>& gens, int rows, int cols) {
    std::vector<BiPoly> polys;
    for (const auto& [g, d] : gens) polys.push_back(g);
    SpanIdeal span(std::move(polys), base);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (span.dim({i, j}) != target.dim({i, j})) return false;
    return true;
}

}  // namespace

GeneratorSet sweep_generators(const DegreewiseIdeal& target, const DegreewiseIdeal* base,
                              int startRows, int startCols, int capRows, int capCols) {
    GeneratorSet res;
    int rows = std::min(startRows, capRows), cols = std::min(startCols, capCols);
    auto sweep_range = [&](int fromRows, int fromCols, int toRows, int toCols) {
        // visit new cells of the enlarged rectangle in (i+j, i) order
        std::vector<BiDegree> cells;
        for (int i = 0; i < toRows; ++i)
            for (int j = 0; j < toCols; ++j)
                if (i >= fromRows || j >= fromCols) cells.push_back({i, j});
        std::sort(cells.begin(), cells.end(), [](const BiDegree& a, const BiDegree& b) {
            return std::pair(a.i + a.j, a.i) < std::pair(b.i + b.j, b.i);
        });
        size_t before = res.gens.size();
        for (const auto& c : cells) sweep_cell(target, base, c, res.gens);
        return res.gens.size() - before;
    };

    // initial cells in (i+j, i) order so lower bidegrees are seen first
    std::vector<BiDegree> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) cells.push_back({i, j});
    std::sort(cells.begin(), cells.end(), [](const BiDegree& a, const BiDegree& b) {
        return std::pair(a.i + a.j, a.i) < std::pair(b.i + b.j, b.i);
    });
    for (const auto& c : cells) sweep_cell(target, base, c, res.gens);

    int idle = 0;
    while (true) {
        if (idle >= 2 && generates(target, base, res.gens, rows, cols)) {
            res.verified = true;
            break;
        }
        if (rows >= capRows && cols >= capCols) break;  // cap hit, honest failure
        int nr = std::min(rows + 1, capRows), nc = std::min(cols + 1, capCols);
        size_t added = sweep_range(rows, cols, nr, nc);
        rows = nr;
        cols = nc;
        idle = added == 0 ? idle + 1 : 0;
    }
    res.windowRows = rows;
    res.windowCols = cols;
    return res;
}

GeneratorSet minimal_generators(const FatPointScheme& y) {
    if (y.empty()) throw std::invalid_argument("minimal_generators: empty scheme");
    auto [rows, cols] = default_hf_window(y);
    TupleBundle b = tuples(y);
    SchemeIdeal ideal(y);
    return sweep_generators(ideal, nullptr, rows, cols, static_cast<int>(4 * (b.l + b.r)),
                            static_cast<int>(4 * (b.lPrime + b.t)));
}

std::vector<BiPoly> jacobian_minors(const std::vector<std::pair<BiPoly, BiDegree>>& gens) {
    std::vector<BiPoly> minors;
    for (size_t a = 0; a < gens.size(); ++a) {
        for (size_t b = a + 1; b < gens.size(); ++b) {
            BiPoly m = gens[a].first.partial(Var::X1) * gens[b].first.partial(Var::Y1) -
                       gens[a].first.partial(Var::Y1) * gens[b].first.partial(Var::X1);
            if (!m.is_zero()) minors.push_back(m);
        }
    }
    return minors;
}

ThetaStable theta_stable_value(const FatPointScheme& y) {
    ThetaStable s;
    for (int e = 0; e < y.size(); ++e) {
        if (y.entries()[e].mult != 1) continue;
        s.value += 1;
        long long colSum = 0, rowSum = 0;
        for (int f = 0; f < y.size(); ++f) {
            if (y.r_index(f) == y.r_index(e)) colSum += y.entries()[f].mult;
            if (y.q_index(f) == y.q_index(e)) rowSum += y.entries()[f].mult;
        }
        s.t1 = std::max(s.t1, 2 * (colSum - 1));
        s.t2 = std::max(s.t2, 2 * (rowSum - 1));
    }
    return s;
}

std::pair<int, int> default_theta_window(const FatPointScheme& y) {
    ThetaStable s = theta_stable_value(y);
    long long rows = std::max<long long>(s.t1, 2 * y.r() - 2) + 2;
    long long cols = std::max<long long>(s.t2, 2 * y.t() - 2) + 2;
    if (s.value == 0) {  // no simple points: fall back to the hf window
        auto [hr, hc] = default_hf_window(y);
        rows = std::max<long long>(rows, hr);
        cols = std::max<long long>(cols, hc);
    }
    return {static_cast<int>(rows), static_cast<int>(cols)};
}

ThetaReport kaehler_different_hf(const FatPointScheme& y, int rows, int cols) {
    if (y.empty()) throw std::invalid_argument("kaehler_different_hf: empty scheme");
    AcmResult acm = is_acm(y);
    if (!acm.acm)
        throw std::invalid_argument("kaehler_different_hf: scheme is not ACM (no regular pair found)");
    ThetaReport rep;
    rep.certificate = *acm.cert;
    rep.normalized = normalized_scheme(y, rep.certificate, &rep.change);
    rep.generators = minimal_generators(rep.normalized);
    if (!rep.generators.verified)
        throw std::runtime_error("kaehler_different_hf: generator sweep failed to verify");
    auto [dr, dc] = default_theta_window(y);
    if (rows < 0) rows = dr;
    if (cols < 0) cols = dc;
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("kaehler_different_hf: window must be at least 1x1");

    SchemeIdeal ideal(rep.normalized);
    std::vector<BiPoly> minors = jacobian_minors(rep.generators.gens);
    SpanIdeal theta(std::move(minors), &ideal);
    rep.hf.window.assign(rows, std::vector<long long>(cols, 0));
    fill_window(rows, cols, [&](int i, int j) {
        rep.hf.window[i][j] = theta.dim({i, j}) - ideal.dim({i, j});
    });
    ThetaStable s = theta_stable_value(y);
    rep.simplePoints = s.value;
    rep.hf.meta.rowBound = static_cast<int>(s.t1);
    rep.hf.meta.colBound = static_cast<int>(s.t2);
    rep.hf.meta.eventual = s.value;
    return rep;
}

}  // namespace fatpoints
