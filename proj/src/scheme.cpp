#include "fatpoints/scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "fatpoints/ideal.hpp"

namespace fatpoints {

PointP1P1 PointP1P1::make(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
    if ((x0 == 0 && x1 == 0) || (y0 == 0 && y1 == 0))
        throw std::invalid_argument("point with [0:0] coordinate pair");
    PointP1P1 p{x0, x1, y0, y1};
    // canonical scaling: first nonzero coordinate of each factor becomes 1
    if (p.x0 != 0) {
        p.x1 /= p.x0;
        p.x0 = 1;
    } else {
        p.x1 = 1;
    }
    if (p.y0 != 0) {
        p.y1 /= p.y0;
        p.y0 = 1;
    } else {
        p.y1 = 1;
    }
    return p;
}

FatPointScheme::FatPointScheme(std::vector<FatEntry> entries) : entries_(std::move(entries)) {
    for (size_t a = 0; a < entries_.size(); ++a) {
        if (entries_[a].mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
        for (size_t b = 0; b < a; ++b)
            if (entries_[a].p == entries_[b].p) throw std::invalid_argument("duplicate point in scheme");
    }
    qIndex_.resize(entries_.size());
    rIndex_.resize(entries_.size());
    for (size_t a = 0; a < entries_.size(); ++a) {
        int qi = -1, ri = -1;
        for (size_t k = 0; k < qs_.size(); ++k)
            if (entries_[a].p.same_x(qs_[k])) qi = static_cast<int>(k);
        for (size_t k = 0; k < rs_.size(); ++k)
            if (entries_[a].p.same_y(rs_[k])) ri = static_cast<int>(k);
        if (qi < 0) {
            qi = static_cast<int>(qs_.size());
            qs_.push_back(entries_[a].p);
        }
        if (ri < 0) {
            ri = static_cast<int>(rs_.size());
            rs_.push_back(entries_[a].p);
        }
        qIndex_[a] = qi;
        rIndex_[a] = ri;
    }
}

FatPointScheme FatPointScheme::grid_ci(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("grid_ci requires d1, d2 >= 1");
    std::vector<FatEntry> es;
    for (int i = 1; i <= d1; ++i)
        for (int j = 1; j <= d2; ++j)
            es.push_back({PointP1P1::make(Rat(1), Rat(i), Rat(1), Rat(j)), 1});
    return FatPointScheme(std::move(es));
}

bool FatPointScheme::is_reduced() const {
    for (const auto& e : entries_)
        if (e.mult != 1) return false;
    return true;
}

long long FatPointScheme::degree() const {
    long long d = 0;
    for (const auto& e : entries_) d += static_cast<long long>(e.mult) * (e.mult + 1) / 2;
    return d;
}

FatPointScheme FatPointScheme::equimultiple(int m) const {
    if (m < 1) throw std::invalid_argument("equimultiple requires m >= 1");
    auto es = entries_;
    for (auto& e : es) e.mult = m;
    return FatPointScheme(std::move(es));
}

FatPointScheme FatPointScheme::thicken() const {
    auto es = entries_;
    for (auto& e : es) e.mult += 1;
    return FatPointScheme(std::move(es));
}

FatPointScheme FatPointScheme::remove_entry(int idx) const {
    if (idx < 0 || idx >= size()) throw std::out_of_range("remove_entry: bad index");
    auto es = entries_;
    es.erase(es.begin() + idx);
    return FatPointScheme(std::move(es));
}

FatPointScheme FatPointScheme::decrement(int idx) const {
    if (idx < 0 || idx >= size()) throw std::out_of_range("decrement: bad index");
    auto es = entries_;
    if (es[idx].mult == 1)
        es.erase(es.begin() + idx);
    else
        es[idx].mult -= 1;
    return FatPointScheme(std::move(es));
}

namespace {

// coefficient vectors indexed by the X1 (resp Y1) exponent
std::vector<Rat> conv(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// rows of powers 0..e of a linear form given by coefficients (c0, c1)
std::vector<std::vector<Rat>> powers(const Rat& c0, const Rat& c1, int e) {
    std::vector<std::vector<Rat>> p;
    p.push_back({Rat(1)});
    std::vector<Rat> lin{c0, c1};
    for (int k = 1; k <= e; ++k) p.push_back(conv(p.back(), lin));
    return p;
}

}  // namespace

RationalMatrix point_conditions(const PointP1P1& p, int m, BiDegree deg) {
    if (m < 1) throw std::invalid_argument("point_conditions requires m >= 1");
    if (deg.i < 0 || deg.j < 0) throw std::invalid_argument("point_conditions: negative bidegree");
    const int i = static_cast<int>(deg.i), j = static_cast<int>(deg.j);
    // substitution carrying p to [1:0]x[1:0]: images of X0,X1 are (x0,-x1),
    // (x1,x0) in the (X0,X1) coefficient basis, and likewise for Y
    auto px0 = powers(p.x0, -p.x1, i);
    auto px1 = powers(p.x1, p.x0, i);
    auto py0 = powers(p.y0, -p.y1, j);
    auto py1 = powers(p.y1, p.y0, j);
    // xpart[a1][u]: coefficient of X0^{i-u}X1^u in the image of X0^{i-a1}X1^{a1}
    std::vector<std::vector<Rat>> xpart(i + 1), ypart(j + 1);
    for (int a1 = 0; a1 <= i; ++a1) xpart[a1] = conv(px0[i - a1], px1[a1]);
    for (int b1 = 0; b1 <= j; ++b1) ypart[b1] = conv(py0[j - b1], py1[b1]);

    RationalMatrix cond(m * (m + 1) / 2, (i + 1) * (j + 1));
    int row = 0;
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v + u < m; ++v) {
            // columns follow monomial_basis order: index = a1*(j+1) + b1
            for (int a1 = 0; a1 <= i; ++a1)
                for (int b1 = 0; b1 <= j; ++b1)
                    cond.at(row, a1 * (j + 1) + b1) =
                        (u <= i && v <= j) ? xpart[a1][u] * ypart[b1][v] : Rat(0);
            ++row;
        }
    }
    return cond;
}

RationalMatrix scheme_conditions(const FatPointScheme& y, BiDegree deg) {
    const int n = static_cast<int>((deg.i + 1) * (deg.j + 1));
    int total = 0;
    for (const auto& e : y.entries()) total += e.mult * (e.mult + 1) / 2;
    RationalMatrix m(total, n);
    int row = 0;
    for (const auto& e : y.entries()) {
        RationalMatrix c = point_conditions(e.p, e.mult, deg);
        for (int r = 0; r < c.rows; ++r, ++row)
            for (int col = 0; col < n; ++col) m.at(row, col) = c.at(r, col);
    }
    return m;
}

long hf_value(const FatPointScheme& y, BiDegree deg) {
    if (deg.i < 0 || deg.j < 0) return 0;
    if (y.empty()) return 0;  // empty scheme: unit ideal, zero ring
    return rank_exact(scheme_conditions(y, deg));
}

long ideal_dim(const FatPointScheme& y, BiDegree deg) {
    if (deg.i < 0 || deg.j < 0) return 0;
    return (deg.i + 1) * (deg.j + 1) - hf_value(y, deg);
}

std::vector<BiPoly> ideal_basis(const FatPointScheme& y, BiDegree deg) {
    SchemeIdeal ideal(y);
    return ideal.basis_polys(deg);
}

TupleBundle tuples(const FatPointScheme& y) {
    if (y.empty()) throw std::invalid_argument("tuples: empty scheme");
    TupleBundle b;
    b.r = y.r();
    b.t = y.t();
    b.nu.assign(y.r(), 0);
    b.nuPrime.assign(y.t(), 0);
    std::vector<std::vector<long long>> rowMults(y.r()), colMults(y.t());
    for (int e = 0; e < y.size(); ++e) {
        rowMults[y.q_index(e)].push_back(y.entries()[e].mult);
        colMults[y.r_index(e)].push_back(y.entries()[e].mult);
        b.nu[y.q_index(e)]++;
        b.nuPrime[y.r_index(e)]++;
    }
    auto fill = [](const std::vector<std::vector<long long>>& groups, std::vector<long long>& tuple,
                   std::vector<long long>& hat, long long& len) {
        for (const auto& ms : groups) {
            long long top = *std::max_element(ms.begin(), ms.end());
            len += top;
            for (long long k = 0; k < top; ++k) {
                long long a = 0;
                for (long long m : ms) a += std::max<long long>(m - k, 0);
                tuple.push_back(a);
                if (k == 0) hat.push_back(a + static_cast<long long>(ms.size()));
            }
        }
        std::sort(tuple.begin(), tuple.end(), std::greater<>());
    };
    fill(rowMults, b.alpha, b.alphaHat, b.l);
    fill(colMults, b.beta, b.betaHat, b.lPrime);
    auto conjugate = [](const std::vector<long long>& t) {
        std::vector<long long> s;
        if (t.empty()) return s;
        for (long long k = 1; k <= t[0]; ++k)
            s.push_back(static_cast<long long>(
                std::count_if(t.begin(), t.end(), [&](long long v) { return v >= k; })));
        return s;
    };
    b.alphaStar = conjugate(b.alpha);
    b.betaStar = conjugate(b.beta);
    return b;
}

std::pair<int, int> default_hf_window(const FatPointScheme& y) {
    if (y.empty()) return {2, 2};
    TupleBundle b = tuples(y);
    return {static_cast<int>(b.l + b.r + 2), static_cast<int>(b.lPrime + b.t + 2)};
}

HilbertMatrix hf(const FatPointScheme& y, int rows, int cols, ExecMode mode) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("hf: window must be at least 1x1");
    HilbertMatrix h;
    h.window.assign(rows, std::vector<long long>(cols, 0));
    if (!y.empty()) {
        fill_window(
            rows, cols, [&](int i, int j) { h.window[i][j] = hf_value(y, {i, j}); }, mode);
        TupleBundle b = tuples(y);
        h.meta.rowBound = static_cast<int>(std::max<long long>(b.l + b.r - 1, 0));
        h.meta.colBound = static_cast<int>(std::max<long long>(b.lPrime + b.t - 1, 0));
    } else {
        h.meta.rowBound = 0;
        h.meta.colBound = 0;
    }
    h.meta.eventual = y.degree();
    return h;
}

HilbertMatrix hf(const FatPointScheme& y, ExecMode mode) {
    auto [r, c] = default_hf_window(y);
    return hf(y, r, c, mode);
}

namespace {

// HF of S/(I + (L1,L2)) at deg: hf(deg) minus the rank of the multiples of L1
// and L2 reduced modulo the ideal component.
long quotient_hf_entry(const SchemeIdeal& ideal, const BiPoly& l1, const BiPoly& l2, BiDegree deg) {
    const auto& comp = ideal.component(deg);
    std::vector<std::vector<Rat>> residues;
    auto push_multiples = [&](const BiPoly& lin, BiDegree mdeg) {
        for (const Monomial& m : monomial_basis(mdeg)) {
            BiPoly f = lin * BiPoly::term(m, Rat(1));
            std::vector<Rat> v = coeff_vector(f, deg);
            comp.reduce(v);
            residues.push_back(std::move(v));
        }
    };
    push_multiples(l1, {deg.i - 1, deg.j});
    push_multiples(l2, {deg.i, deg.j - 1});
    long rank = residues.empty() ? 0 : span_dim(residues);
    return ideal.hf_value(deg) - rank;
}

bool certificate_holds(const SchemeIdeal& ideal, const BiPoly& l1, const BiPoly& l2,
                       const IntMatrix& delta) {
    for (size_t i = 0; i < delta.size(); ++i)
        for (size_t j = 0; j < delta[i].size(); ++j)
            if (quotient_hf_entry(ideal, l1, l2, {static_cast<long>(i), static_cast<long>(j)}) !=
                delta[i][j])
                return false;
    return true;
}

}  // namespace

std::optional<NzdPair> find_nzd_pair(const FatPointScheme& y, long budget) {
    if (y.empty()) return NzdPair{BiPoly::variable(Var::X0), BiPoly::variable(Var::Y0)};

    // L1 = X0 + c*X1 avoiding every first component; at most r values of c fail
    BiPoly l1;
    for (long c = 0;; ++c) {
        bool ok = true;
        for (const auto& q : y.q_points())
            if (q.x0 + Rat(c) * q.x1 == 0) ok = false;
        if (ok) {
            l1 = BiPoly::variable(Var::X0) + Rat(c) * BiPoly::variable(Var::X1);
            break;
        }
    }

    auto [rows, cols] = default_hf_window(y);
    HilbertMatrix h = hf(y, rows, cols);
    IntMatrix delta = first_difference(h);
    // a regular pair forces HF of the double quotient = mixed difference >= 0
    for (const auto& row : delta)
        for (long long v : row)
            if (v < 0) return std::nullopt;

    SchemeIdeal ideal(y);
    long tried = 0;
    for (long c = 0; tried < budget; ++c) {
        bool ok = true;
        for (const auto& r : y.r_points())
            if (r.y0 + Rat(c) * r.y1 == 0) ok = false;
        if (!ok) continue;
        ++tried;
        BiPoly l2 = BiPoly::variable(Var::Y0) + Rat(c) * BiPoly::variable(Var::Y1);
        if (!certificate_holds(ideal, l1, l2, delta)) continue;
        // decisive re-check on a grown window
        HilbertMatrix h2 = hf(y, rows + 2, cols + 2);
        IntMatrix delta2 = first_difference(h2);
        if (certificate_holds(ideal, l1, l2, delta2)) return NzdPair{l1, l2};
    }
    return std::nullopt;
}

AcmResult is_acm(const FatPointScheme& y) {
    AcmResult res;
    res.cert = find_nzd_pair(y, y.degree() + 1);
    res.acm = res.cert.has_value();
    return res;
}

FatPointScheme normalized_scheme(const FatPointScheme& y, const NzdPair& cert, LinearChange* outChange) {
    Rat u0 = cert.l1.coefficient({1, 0, 0, 0}), u1 = cert.l1.coefficient({0, 1, 0, 0});
    Rat w0 = cert.l2.coefficient({0, 0, 1, 0}), w1 = cert.l2.coefficient({0, 0, 0, 1});
    if ((u0 == 0 && u1 == 0) || (w0 == 0 && w1 == 0))
        throw std::invalid_argument("normalized_scheme: degenerate certificate forms");
    std::vector<FatEntry> es;
    for (const auto& e : y.entries()) {
        // p' = B p with B = [[u0,u1],[-u1,u0]]; then X0(p') = L1(p) != 0
        Rat nx0 = u0 * e.p.x0 + u1 * e.p.x1;
        Rat nx1 = -u1 * e.p.x0 + u0 * e.p.x1;
        Rat ny0 = w0 * e.p.y0 + w1 * e.p.y1;
        Rat ny1 = -w1 * e.p.y0 + w0 * e.p.y1;
        es.push_back({PointP1P1::make(nx0, nx1, ny0, ny1), e.mult});
    }
    if (outChange) {
        // substitution matrix A = B^{-1}: maps the old ideal onto the new one
        LinearChange c;
        Rat dx = u0 * u0 + u1 * u1, dy = w0 * w0 + w1 * w1;
        c.x[0][0] = u0 / dx;
        c.x[0][1] = -u1 / dx;
        c.x[1][0] = u1 / dx;
        c.x[1][1] = u0 / dx;
        c.y[0][0] = w0 / dy;
        c.y[0][1] = -w1 / dy;
        c.y[1][0] = w1 / dy;
        c.y[1][1] = w0 / dy;
        *outChange = c;
    }
    return FatPointScheme(std::move(es));
}

}  // namespace fatpoints
