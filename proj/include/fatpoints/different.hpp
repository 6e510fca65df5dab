#pragma once

#include <utility>
#include <vector>

#include "fatpoints/bipoly.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/ideal.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

struct GeneratorSet {
    std::vector<std::pair<BiPoly, BiDegree>> gens;  // sweep order: (i+j, i) ascending
    bool verified = false;                          // degreewise generation confirmed on the window
    int windowRows = 0, windowCols = 0;             // window the sweep covered
};

// Minimal generators of target/base as a module over S, by the graded Nakayama
// sweep: new generators at (i,j) are a complement basis of
// S_{1,0}*J_{i-1,j} + S_{0,1}*J_{i,j-1} + base_{i,j} inside J_{i,j}.
// The sweep stops once two consecutive window enlargements add nothing and the
// generated module matches the target degreewise on the enlarged window; the
// window is capped at capRows x capCols (verified=false when the cap is hit).
GeneratorSet sweep_generators(const DegreewiseIdeal& target, const DegreewiseIdeal* base,
                              int startRows, int startCols, int capRows, int capCols);

// Minimal generators of the defining ideal of a fat point scheme.
GeneratorSet minimal_generators(const FatPointScheme& y);

struct ThetaReport {
    HilbertMatrix hf;            // window of HF of the Kaehler different
    long long simplePoints = 0;  // eventual value
    // coordinate normalization making X0, Y0 the regular sequence
    NzdPair certificate;
    LinearChange change;
    FatPointScheme normalized;
    GeneratorSet generators;  // minimal generators of the normalized ideal
};

// HF of the Kaehler different: ideal of 2x2 Jacobian minors d(Fa,Fb)/d(X1,Y1)
// of the minimal generators, taken in coordinates where X0, Y0 form a regular
// sequence. Requires the scheme to be ACM. Window -1 picks the default.
ThetaReport kaehler_different_hf(const FatPointScheme& y, int rows = -1, int cols = -1);

// Eventual value (count of multiplicity-1 points) together with the doubled
// separator-degree bounds (t1,t2) from which it is attained.
struct ThetaStable {
    long long value = 0;
    long long t1 = 0, t2 = 0;
};
ThetaStable theta_stable_value(const FatPointScheme& y);

// Default theta window: covers both (t1,t2) and (2r-2,2t-2) plus a guard band.
std::pair<int, int> default_theta_window(const FatPointScheme& y);

// Jacobian minors of all generator pairs (zero minors dropped).
std::vector<BiPoly> jacobian_minors(const std::vector<std::pair<BiPoly, BiDegree>>& gens);

}  // namespace fatpoints
