#include "fatpoints/bipoly.hpp"

#include <cctype>
#include <sstream>

namespace fatpoints {

std::vector<Monomial> monomial_basis(BiDegree deg) {
    std::vector<Monomial> out;
    if (deg.i < 0 || deg.j < 0) return out;
    out.reserve(static_cast<size_t>((deg.i + 1) * (deg.j + 1)));
    // descending lex on (a0,a1,b0,b1): a0 from deg.i down, then b0 from deg.j down
    for (long a0 = deg.i; a0 >= 0; --a0)
        for (long b0 = deg.j; b0 >= 0; --b0)
            out.push_back({static_cast<int>(a0), static_cast<int>(deg.i - a0), static_cast<int>(b0),
                           static_cast<int>(deg.j - b0)});
    return out;
}

BiPoly BiPoly::constant(const Rat& c) {
    BiPoly f;
    f.add_term({}, c);
    return f;
}

BiPoly BiPoly::variable(Var v) {
    Monomial m;
    switch (v) {
        case Var::X0: m.a0 = 1; break;
        case Var::X1: m.a1 = 1; break;
        case Var::Y0: m.b0 = 1; break;
        case Var::Y1: m.b1 = 1; break;
    }
    return term(m, Rat(1));
}

BiPoly BiPoly::term(const Monomial& m, const Rat& c) {
    BiPoly f;
    f.add_term(m, c);
    return f;
}

void BiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat BiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<BiDegree> BiPoly::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    BiDegree d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

bool BiPoly::is_bihomogeneous() const { return terms_.empty() || bidegree().has_value(); }

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly f = *this;
    for (const auto& [m, c] : o.terms_) f.add_term(m, c);
    return f;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly f = *this;
    for (const auto& [m, c] : o.terms_) f.add_term(m, -c);
    return f;
}

BiPoly BiPoly::operator-() const {
    BiPoly f;
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly f;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) f.add_term(m1 * m2, c1 * c2);
    return f;
}

BiPoly operator*(const Rat& c, const BiPoly& f) {
    BiPoly g;
    if (c == 0) return g;
    for (const auto& [m, co] : f.terms_) g.terms_.emplace(m, c * co);
    return g;
}

BiPoly BiPoly::partial(Var v) const {
    BiPoly g;
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        int e = 0;
        switch (v) {
            case Var::X0: e = m.a0; d.a0--; break;
            case Var::X1: e = m.a1; d.a1--; break;
            case Var::Y0: e = m.b0; d.b0--; break;
            case Var::Y1: e = m.b1; d.b1--; break;
        }
        if (e > 0) g.add_term(d, Rat(e) * c);
    }
    return g;
}

Rat BiPoly::evaluate(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const {
    if (!is_bihomogeneous())
        throw std::invalid_argument("evaluate: polynomial is not bihomogeneous");
    auto pw = [](const Rat& b, int e) {
        Rat r(1);
        for (int k = 0; k < e; ++k) r *= b;
        return r;
    };
    Rat v(0);
    for (const auto& [m, c] : terms_)
        v += c * pw(x0, m.a0) * pw(x1, m.a1) * pw(y0, m.b0) * pw(y1, m.b1);
    return v;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant_term = m == Monomial{};
        bool unit = a == 1;
        if (!unit || constant_term) os << a.get_str();
        bool need_star = !unit || constant_term;
        auto factor = [&](const char* name, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        factor("X0", m.a0);
        factor("X1", m.a1);
        factor("Y0", m.b0);
        factor("Y1", m.b1);
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    // factor := rational | var ('^' int)?
    // term := factor ('*' factor)*
    BiPoly term() {
        BiPoly f = BiPoly::constant(Rat(1));
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                long num = integer();
                long den = 1;
                if (peek() == '/') {
                    ++pos;
                    den = integer();
                    if (den == 0) fail("zero denominator");
                }
                f = make_rat(num, den) * f;
            } else if (c == 'X' || c == 'Y') {
                ++pos;
                if (pos >= s.size() || (s[pos] != '0' && s[pos] != '1')) fail("expected variable index 0 or 1");
                int idx = s[pos] - '0';
                ++pos;
                Var v = c == 'X' ? (idx == 0 ? Var::X0 : Var::X1) : (idx == 0 ? Var::Y0 : Var::Y1);
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = static_cast<int>(integer());
                }
                BiPoly p = BiPoly::constant(Rat(1));
                for (int k = 0; k < e; ++k) p = p * BiPoly::variable(v);
                f = f * p;
            } else {
                fail("expected coefficient or variable");
            }
            if (peek() == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        return f;
    }

    BiPoly poly() {
        BiPoly f;
        bool first = true;
        while (!eof()) {
            int sign = 1;
            char c = peek();
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            BiPoly t = term();
            f = sign > 0 ? f + t : f - t;
            first = false;
        }
        if (first) fail("empty polynomial");
        return f;
    }
};

}  // namespace

BiPoly BiPoly::parse(const std::string& text) {
    Parser p(text);
    return p.poly();
}

LinearChange LinearChange::identity() {
    LinearChange c;
    c.x[0][0] = 1;
    c.x[1][1] = 1;
    c.y[0][0] = 1;
    c.y[1][1] = 1;
    return c;
}

LinearChange LinearChange::to_origin(const Rat& ax0, const Rat& ax1, const Rat& ay0, const Rat& ay1) {
    if ((ax0 == 0 && ax1 == 0) || (ay0 == 0 && ay1 == 0))
        throw std::invalid_argument("to_origin: zero coordinate pair");
    LinearChange c;
    // substitution matrix rows are variable images; columns (point, companion)
    c.x[0][0] = ax0;
    c.x[0][1] = -ax1;
    c.x[1][0] = ax1;
    c.x[1][1] = ax0;
    c.y[0][0] = ay0;
    c.y[0][1] = -ay1;
    c.y[1][0] = ay1;
    c.y[1][1] = ay0;
    return c;
}

LinearChange LinearChange::inverse() const {
    if (!is_invertible()) throw std::invalid_argument("inverse of singular change");
    LinearChange r;
    Rat dx = det_x(), dy = det_y();
    r.x[0][0] = x[1][1] / dx;
    r.x[0][1] = -x[0][1] / dx;
    r.x[1][0] = -x[1][0] / dx;
    r.x[1][1] = x[0][0] / dx;
    r.y[0][0] = y[1][1] / dy;
    r.y[0][1] = -y[0][1] / dy;
    r.y[1][0] = -y[1][0] / dy;
    r.y[1][1] = y[0][0] / dy;
    return r;
}

BiPoly apply_change(const LinearChange& c, const BiPoly& f) {
    if (!c.is_invertible()) throw std::invalid_argument("apply_change: change is not invertible");
    BiPoly ix0 = c.x[0][0] * BiPoly::variable(Var::X0) + c.x[0][1] * BiPoly::variable(Var::X1);
    BiPoly ix1 = c.x[1][0] * BiPoly::variable(Var::X0) + c.x[1][1] * BiPoly::variable(Var::X1);
    BiPoly iy0 = c.y[0][0] * BiPoly::variable(Var::Y0) + c.y[0][1] * BiPoly::variable(Var::Y1);
    BiPoly iy1 = c.y[1][0] * BiPoly::variable(Var::Y0) + c.y[1][1] * BiPoly::variable(Var::Y1);
    // memoized powers; exponents in practice stay small
    std::vector<BiPoly> p0{BiPoly::constant(Rat(1))}, p1{BiPoly::constant(Rat(1))},
        p2{BiPoly::constant(Rat(1))}, p3{BiPoly::constant(Rat(1))};
    auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    BiPoly out;
    for (const auto& [m, co] : f.terms()) {
        BiPoly t = co * power(p0, ix0, m.a0);
        t = t * power(p1, ix1, m.a1);
        t = t * power(p2, iy0, m.b0);
        t = t * power(p3, iy1, m.b1);
        out = out + t;
    }
    return out;
}

}  // namespace fatpoints
