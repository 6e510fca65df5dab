#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fatpoints {

using IntMatrix = std::vector<std::vector<long long>>;

// A rectangular window of Hilbert-function values starting at bidegree (0,0),
// plus stabilization metadata when the source provides it: the function is
// constant in i for i >= rowBound, in j for j >= colBound, with the given
// eventual value on the doubly-stable quadrant.
struct HilbertMeta {
    int rowBound = -1;
    int colBound = -1;
    std::optional<long long> eventual;
};

struct HilbertMatrix {
    IntMatrix window;
    HilbertMeta meta;

    int rows() const { return static_cast<int>(window.size()); }
    int cols() const { return window.empty() ? 0 : static_cast<int>(window[0].size()); }
    long long at(int i, int j) const {
        if (i < 0 || j < 0) return 0;  // off-quadrant values vanish
        if (i >= rows() || j >= cols()) throw std::out_of_range("HilbertMatrix::at outside window");
        return window[i][j];
    }
};

// Mixed first difference D(i,j) = H(i,j) - H(i-1,j) - H(i,j-1) + H(i-1,j-1),
// with H = 0 off the first quadrant. Same window shape as the input.
inline IntMatrix first_difference(const IntMatrix& h) {
    IntMatrix d(h.size());
    auto get = [&](int i, int j) -> long long {
        if (i < 0 || j < 0) return 0;
        return h[i][j];
    };
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
        d[i].resize(h[i].size());
        for (int j = 0; j < static_cast<int>(h[i].size()); ++j)
            d[i][j] = get(i, j) - get(i - 1, j) - get(i, j - 1) + get(i - 1, j - 1);
    }
    return d;
}

inline IntMatrix first_difference(const HilbertMatrix& h) { return first_difference(h.window); }

}  // namespace fatpoints
