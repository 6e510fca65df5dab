#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fatpoints {

// Window entries are independent, so they may be evaluated concurrently.
// Results are deterministic regardless of mode: each cell writes only its own
// slot. The serial path is the reference implementation used in tests and as
// the benchmark baseline.
enum class ExecMode { serial, parallel };

template <class F>
void fill_window(int rows, int cols, F&& fn, ExecMode mode = ExecMode::parallel) {
    if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) fn(i, j);
    } else {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) fn(i, j);
    }
}

}  // namespace fatpoints
