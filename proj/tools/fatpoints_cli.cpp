#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fatpoints/different.hpp"
#include "fatpoints/kaehler.hpp"
#include "fatpoints/render.hpp"
#include "fatpoints/schemeio.hpp"
#include "fatpoints/separators.hpp"

using namespace fatpoints;

namespace {

struct Options {
    std::string schemePath;
    int rows = -1, cols = -1;
    std::string format = "pretty";
    bool oracle = false;
    std::string closed;      // "", "large-i", "large-j"
    long closedIndex = -1;   // fixed j (large-i) or fixed i (large-j)
    int index = 0;           // entry index for separators
    std::string of = "hf";   // matrix selector for diff
};

RenderFormat format_of(const Options& opt) {
    auto f = parse_format(opt.format);
    if (!f) throw CLI::ValidationError("--format", "unknown format: " + opt.format);
    return *f;
}

FatPointScheme require_points(const SchemeFile& file, const std::string& verb) {
    if (!file.has_points())
        throw std::invalid_argument(verb + " requires a fat point scheme file, not explicit generators");
    return *file.scheme;
}

std::pair<int, int> window_or(const Options& opt, std::pair<int, int> dflt) {
    return {opt.rows >= 0 ? opt.rows : dflt.first, opt.cols >= 0 ? opt.cols : dflt.second};
}

void print_tuple_line(const char* name, const std::vector<long long>& v) {
    std::cout << name << ":";
    for (long long x : v) std::cout << ' ' << x;
    std::cout << '\n';
}

int run_hf(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "hf");
    auto [rows, cols] = window_or(opt, default_hf_window(y));
    std::cout << render_matrix(hf(y, rows, cols), format_of(opt));
    return 0;
}

int run_omega(const Options& opt) {
    SchemeFile file = load_scheme_file(opt.schemePath);
    RenderFormat fmt = format_of(opt);

    if (file.has_generators()) {
        if (!opt.closed.empty())
            throw std::invalid_argument("closed forms require a fat point scheme file");
        if (!opt.oracle)
            throw std::invalid_argument(
                "omega on a generator file requires --oracle; the sequence formula is proved only "
                "for fat point schemes");
        int rows = opt.rows >= 0 ? opt.rows : 8, cols = opt.cols >= 0 ? opt.cols : 8;
        SpanIdeal ideal(file.generators);
        SpanIdeal thick = ideal.squared();
        HilbertMatrix formula = hf_omega_formula(ideal, thick, rows, cols);
        HilbertMatrix oracle = hf_omega_oracle(ideal, rows, cols);
        std::cout << "formula:\n" << render_matrix(formula, fmt);
        std::cout << "oracle:\n" << render_matrix(oracle, fmt);
        std::cout << "verdict: " << (formula.window == oracle.window ? "EQUAL" : "DIFFER") << '\n';
        return 0;
    }

    FatPointScheme y = require_points(file, "omega");
    if (!opt.closed.empty()) {
        Direction dir;
        if (opt.closed == "large-i")
            dir = Direction::large_i;
        else if (opt.closed == "large-j")
            dir = Direction::large_j;
        else
            throw std::invalid_argument("unknown closed-form selector: " + opt.closed);
        if (opt.closedIndex < 0) throw std::invalid_argument("--closed requires --index");
        std::cout << hf_omega_closed(y, dir, opt.closedIndex) << '\n';
        return 0;
    }
    auto [rows, cols] = window_or(opt, default_hf_window(y));
    HilbertMatrix formula = hf_omega(y, rows, cols);
    if (!opt.oracle) {
        std::cout << render_matrix(formula, fmt);
        return 0;
    }
    HilbertMatrix oracle = hf_omega_oracle(y, rows, cols);
    std::cout << "formula:\n" << render_matrix(formula, fmt);
    std::cout << "oracle:\n" << render_matrix(oracle, fmt);
    std::cout << "verdict: " << (formula.window == oracle.window ? "EQUAL" : "DIFFER") << '\n';
    return 0;
}

int run_theta(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "theta");
    ThetaReport rep = kaehler_different_hf(y, opt.rows, opt.cols);
    std::cout << render_matrix(rep.hf, format_of(opt));
    return 0;
}

int run_tuples(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "tuples");
    TupleBundle b = tuples(y);
    print_tuple_line("alpha", b.alpha);
    print_tuple_line("alphaStar", b.alphaStar);
    print_tuple_line("alphaHat", b.alphaHat);
    print_tuple_line("beta", b.beta);
    print_tuple_line("betaStar", b.betaStar);
    print_tuple_line("betaHat", b.betaHat);
    std::cout << "l: " << b.l << "  l': " << b.lPrime << "  r: " << b.r << "  t: " << b.t << '\n';
    std::cout << "degree: " << y.degree() << '\n';
    return 0;
}

int run_acm(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "acm");
    AcmResult res = is_acm(y);
    if (res.acm) {
        std::cout << "ACM: yes\n";
        std::cout << "L1 = " << res.cert->l1.str() << '\n';
        std::cout << "L2 = " << res.cert->l2.str() << '\n';
    } else {
        std::cout << "ACM: no\n";
    }
    return 0;
}

int run_predicate(const Options& opt, const std::string& verb) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), verb);
    bool value = false;
    if (verb == "cbp")
        value = is_cbp(y);
    else if (verb == "ci")
        value = is_ci(y);
    else
        value = is_aci(y);
    std::cout << (verb == "cbp" ? "CBP" : verb == "ci" ? "CI" : "ACI") << ": "
              << (value ? "yes" : "no") << '\n';
    return 0;
}

void print_generators(const GeneratorSet& gens) {
    for (const auto& [g, d] : gens.gens)
        std::cout << "(" << d.i << "," << d.j << "): " << g.str() << '\n';
}

int run_separators(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "separators");
    GeneratorSet seps = minimal_separators(y, opt.index);
    if (!seps.verified) throw std::runtime_error("separator sweep failed to verify");
    DegreeTuple degs = separator_degrees(seps);
    std::cout << "degrees:";
    for (const auto& d : degs) std::cout << " (" << d.i << "," << d.j << ")";
    std::cout << '\n';
    print_generators(seps);
    return 0;
}

int run_generators(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "generators");
    GeneratorSet gens = minimal_generators(y);
    if (!gens.verified) throw std::runtime_error("generator sweep failed to verify");
    print_generators(gens);
    return 0;
}

int run_diff(const Options& opt) {
    FatPointScheme y = require_points(load_scheme_file(opt.schemePath), "diff");
    IntMatrix d;
    if (opt.of == "hf") {
        auto [rows, cols] = window_or(opt, default_hf_window(y));
        d = first_difference(hf(y, rows, cols));
    } else if (opt.of == "omega") {
        auto [rows, cols] = window_or(opt, default_hf_window(y));
        d = first_difference(hf_omega(y, rows, cols));
    } else if (opt.of == "theta") {
        d = first_difference(kaehler_different_hf(y, opt.rows, opt.cols).hf);
    } else {
        throw std::invalid_argument("unknown matrix selector: " + opt.of);
    }
    std::cout << render_matrix(d, format_of(opt));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bigraded Hilbert functions of fat point schemes in P1xP1"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scheme", opt.schemePath, "scheme file (JSON)")->required();
        return sub;
    };
    auto add_window = [&](CLI::App* sub) {
        sub->add_option("--rows", opt.rows, "window rows (default: stabilization window)");
        sub->add_option("--cols", opt.cols, "window columns (default: stabilization window)");
        sub->add_option("--format", opt.format, "pretty|csv|json")
            ->capture_default_str()
            ->check(CLI::IsMember({"pretty", "csv", "json"}));
        return sub;
    };

    auto* cHf = add_window(add_common(app.add_subcommand("hf", "Hilbert function of the scheme")));
    auto* cOmega = add_window(add_common(
        app.add_subcommand("omega", "Hilbert function of the Kaehler differential module")));
    cOmega->add_flag("--oracle", opt.oracle, "also run the presentation oracle and compare");
    cOmega->add_option("--closed", opt.closed, "closed-form value: large-i|large-j")
        ->check(CLI::IsMember({"large-i", "large-j"}));
    cOmega->add_option("--index", opt.closedIndex, "fixed index for --closed");
    auto* cTheta = add_window(add_common(
        app.add_subcommand("theta", "Hilbert function of the Kaehler different (ACM only)")));
    auto* cTuples = add_common(app.add_subcommand("tuples", "alpha/beta tuple bundle"));
    auto* cAcm = add_common(app.add_subcommand("acm", "ACM test with certificate"));
    auto* cCbp = add_common(app.add_subcommand("cbp", "Cayley-Bacharach property (reduced only)"));
    auto* cCi = add_common(app.add_subcommand("ci", "complete intersection test (reduced only)"));
    auto* cAci =
        add_common(app.add_subcommand("aci", "almost complete intersection test (reduced only)"));
    auto* cSep = add_common(app.add_subcommand("separators", "minimal separators of one entry"));
    cSep->add_option("--index", opt.index, "entry index")->capture_default_str();
    auto* cDiff = add_window(add_common(app.add_subcommand("diff", "first difference matrix")));
    cDiff->add_option("--of", opt.of, "hf|omega|theta")
        ->capture_default_str()
        ->check(CLI::IsMember({"hf", "omega", "theta"}));
    auto* cGens = add_common(app.add_subcommand("generators", "minimal ideal generators"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cHf->parsed()) return run_hf(opt);
        if (cOmega->parsed()) return run_omega(opt);
        if (cTheta->parsed()) return run_theta(opt);
        if (cTuples->parsed()) return run_tuples(opt);
        if (cAcm->parsed()) return run_acm(opt);
        if (cCbp->parsed()) return run_predicate(opt, "cbp");
        if (cCi->parsed()) return run_predicate(opt, "ci");
        if (cAci->parsed()) return run_predicate(opt, "aci");
        if (cSep->parsed()) return run_separators(opt);
        if (cDiff->parsed()) return run_diff(opt);
        if (cGens->parsed()) return run_generators(opt);
    } catch (const FileNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const MalformedScheme& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
