#pragma once

// Frozen expected values for the worked examples. Every matrix here was
// transcribed by hand and is the reference the computations must reproduce;
// regenerating any of them from library output defeats the point.

#include <string>

#include "fatpoints/hilbert.hpp"
#include "fatpoints/scheme.hpp"

namespace fixtures {

using fatpoints::FatEntry;
using fatpoints::FatPointScheme;
using fatpoints::IntMatrix;
using fatpoints::PointP1P1;

inline FatPointScheme grid_point_scheme(std::initializer_list<std::tuple<int, int, int>> pts) {
    std::vector<FatEntry> es;
    for (auto [qi, rj, m] : pts)
        es.push_back({PointP1P1::make(1, qi, 1, rj), m});
    return FatPointScheme(std::move(es));
}

// Y = 2 P11 + 2 P12 + P23 + P31 + 2 P32 with Q_i = R_i = [1:i], degree 11.
inline FatPointScheme scheme_ex23() {
    return grid_point_scheme({{1, 1, 2}, {1, 2, 2}, {2, 3, 1}, {3, 1, 1}, {3, 2, 2}});
}

inline const IntMatrix ex23_hf_y = {
    {1, 2, 3, 4, 5, 5},
    {2, 4, 6, 8, 8, 8},
    {3, 6, 9, 10, 10, 10},
    {4, 8, 10, 11, 11, 11},
    {5, 8, 10, 11, 11, 11},
    {5, 8, 10, 11, 11, 11},
};

// V = thickening of Y, degree 24.
inline const IntMatrix ex23_hf_v = {
    {1, 2, 3, 4, 5, 6, 7, 8, 8},
    {2, 4, 6, 8, 10, 12, 14, 14, 14},
    {3, 6, 9, 12, 15, 18, 18, 18, 18},
    {4, 8, 12, 16, 20, 21, 21, 21, 21},
    {5, 10, 15, 20, 22, 23, 23, 23, 23},
    {6, 12, 18, 21, 23, 24, 24, 24, 24},
    {7, 14, 18, 21, 23, 24, 24, 24, 24},
    {8, 14, 18, 21, 23, 24, 24, 24, 24},
    {8, 14, 18, 21, 23, 24, 24, 24, 24},
};

// Differential module of the same Y; eventual value 31 from (5,5).
inline const IntMatrix ex39_omega = {
    {0, 2, 4, 6, 8, 9, 8, 7, 7},
    {2, 8, 14, 20, 24, 22, 20, 20, 20},
    {4, 14, 24, 32, 31, 28, 28, 28, 28},
    {6, 20, 32, 35, 33, 32, 32, 32, 32},
    {8, 24, 31, 33, 33, 32, 32, 32, 32},
    {9, 22, 28, 32, 32, 31, 31, 31, 31},
    {8, 20, 28, 32, 32, 31, 31, 31, 31},
    {7, 20, 28, 32, 32, 31, 31, 31, 31},
    {7, 20, 28, 32, 32, 31, 31, 31, 31},
};

// Subscheme cut out by X1^2 and Y0 - Y1: the presentation oracle gives the
// first matrix, the thickening formula the second; they differ from row 3 on.
inline IntMatrix ex37_true(int rows, int cols) {
    IntMatrix t(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int r = i > 2 ? 2 : i;  // rows repeat from row 2 on
            long long headers[3] = {0, 2, 3};
            long long tails[3] = {1, 4, 5};
            t[i][j] = j == 0 ? headers[r] : tails[r];
        }
    return t;
}

inline IntMatrix ex37_wrong(int rows, int cols) {
    IntMatrix t = ex37_true(rows, cols);
    for (int i = 3; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t[i][j] = j == 0 ? 2 : 4;
    return t;
}

// First difference of the differential module of 3 * CI(2,3).
inline const IntMatrix ex57_delta = {
    {0, 2, 2, 2, 2, 2, 2, 2, 2, 1, -1, -1, 0},
    {2, 4, 4, 4, 4, 4, 4, 4, 4, 1, -1, -1, 0},
    {2, 4, 4, 4, 4, 4, 3, 1, 1, 0, 0, 0, 0},
    {2, 4, 4, 4, 4, 4, 1, -1, -1, 0, 0, 0, 0},
    {2, 4, 4, 3, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {2, 4, 4, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

// Differential module of 3 * (the 8-point almost complete intersection
// {P11..P13, P21..P23, P31, P32}); eventual value 160 from (11,11).
inline const IntMatrix aci14 = {
    {0, 2, 4, 6, 8, 10, 12, 14, 16, 17, 16, 15, 15, 15},
    {2, 8, 14, 20, 26, 32, 38, 44, 50, 52, 50, 48, 48, 48},
    {4, 14, 24, 34, 44, 54, 64, 74, 83, 84, 81, 79, 79, 79},
    {6, 20, 34, 48, 62, 76, 89, 100, 108, 109, 106, 104, 104, 104},
    {8, 26, 44, 62, 80, 98, 112, 121, 126, 127, 125, 123, 123, 123},
    {10, 32, 54, 76, 98, 119, 132, 138, 143, 144, 142, 140, 140, 140},
    {12, 38, 64, 89, 112, 132, 144, 148, 153, 155, 153, 151, 151, 151},
    {14, 44, 74, 100, 121, 138, 148, 153, 158, 160, 158, 156, 156, 156},
    {16, 50, 83, 108, 126, 143, 153, 158, 164, 166, 164, 162, 162, 162},
    {17, 52, 84, 109, 127, 144, 155, 160, 166, 168, 166, 164, 164, 164},
    {16, 50, 81, 106, 125, 142, 153, 158, 164, 166, 164, 162, 162, 162},
    {15, 48, 79, 104, 123, 140, 151, 156, 162, 164, 162, 160, 160, 160},
    {15, 48, 79, 104, 123, 140, 151, 156, 162, 164, 162, 160, 160, 160},
    {15, 48, 79, 104, 123, 140, 151, 156, 162, 164, 162, 160, 160, 160},
};

// Kaehler different of {P11, P12, P13, P21, P22}; r=2, t=3, eventual value 5
// reached at (2,4) = (2r-2, 2t-2).
inline const IntMatrix sec6_theta = {
    {0, 0, 0, 0, 1, 1},
    {0, 0, 1, 2, 3, 3},
    {0, 1, 3, 4, 5, 5},
    {0, 1, 3, 4, 5, 5},
    {0, 1, 3, 4, 5, 5},
    {0, 1, 3, 4, 5, 5},
};

inline std::string data_path(const std::string& name) {
    return std::string(FP_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
