#pragma once

#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints {

// Dense exact matrix over Q, row-major. Intended for the moderate sizes that
// arise from bidegree components (up to a few thousand columns).
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static RationalMatrix from_rows(const std::vector<std::vector<Rat>>& rws);
};

// Exact rank by fraction-free Bareiss elimination over Z after clearing row
// denominators. Deterministic pivoting: columns left to right, first nonzero
// row top-down within the column.
long rank_exact(const RationalMatrix& m);

// Kernel basis in reduced echelon normal form: one vector per free column of
// the RREF, unit at its free column, zeros at the other free columns.
std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m);

// Dimension of the span of the given coefficient vectors (all the same length).
long span_dim(const std::vector<std::vector<Rat>>& vecs);

// Row space held in reduced row echelon form; supports incremental insertion,
// canonical reduction, and membership tests. Fully deterministic.
class Subspace {
  public:
    explicit Subspace(int ambient) : n_(ambient) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the rows and, if a nonzero residue remains, normalizes
    // and installs it (keeping RREF). Returns true when the dimension grew.
    bool insert(std::vector<Rat> v);

    // Canonical residue of v modulo the row space: zero at every pivot column.
    void reduce(std::vector<Rat>& v) const;
    bool contains(std::vector<Rat> v) const;

    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

  private:
    int n_;
    std::vector<std::vector<Rat>> rows_;  // sorted by pivot column
    std::vector<int> pivots_;
};

}  // namespace fatpoints
