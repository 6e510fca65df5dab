#include "fatpoints/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rat>>& rws) {
    RationalMatrix m;
    m.rows = static_cast<int>(rws.size());
    m.cols = rws.empty() ? 0 : static_cast<int>(rws[0].size());
    m.a.reserve(static_cast<size_t>(m.rows) * m.cols);
    for (const auto& r : rws) {
        if (static_cast<int>(r.size()) != m.cols)
            throw std::invalid_argument("from_rows: ragged row lengths");
        m.a.insert(m.a.end(), r.begin(), r.end());
    }
    return m;
}

long rank_exact(const RationalMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    // clear denominators per row; rank is invariant under row scaling
    std::vector<std::vector<Int>> z(m.rows, std::vector<Int>(m.cols));
    for (int r = 0; r < m.rows; ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols; ++c) {
            const Rat& q = m.at(r, c);
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        for (int c = 0; c < m.cols; ++c) {
            const Rat& q = m.at(r, c);
            z[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }
    long rank = 0;
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (z[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(z[row], z[piv]);
        for (int r = row + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                Int t = z[row][col] * z[r][c] - z[r][col] * z[row][c];
                mpz_divexact(z[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[r][col] = 0;
        }
        prev = z[row][col];
        ++rank;
        ++row;
    }
    return rank;
}

bool Subspace::insert(std::vector<Rat> v) {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("Subspace::insert: wrong length");
    reduce(v);
    int lead = -1;
    for (int c = 0; c < n_; ++c)
        if (v[c] != 0) {
            lead = c;
            break;
        }
    if (lead < 0) return false;
    Rat inv = v[lead];
    for (int c = lead; c < n_; ++c) v[c] /= inv;
    // eliminate the new pivot column from existing rows to keep RREF
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat f = rows_[r][lead];
        if (f != 0)
            for (int c = lead; c < n_; ++c) rows_[r][c] -= f * v[c];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

void Subspace::reduce(std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("Subspace::reduce: wrong length");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat f = v[pivots_[r]];
        if (f == 0) continue;
        const auto& row = rows_[r];
        for (int c = pivots_[r]; c < n_; ++c)
            if (row[c] != 0) v[c] -= f * row[c];
    }
}

bool Subspace::contains(std::vector<Rat> v) const {
    reduce(v);
    for (const Rat& q : v)
        if (q != 0) return false;
    return true;
}

std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m) {
    Subspace rowspace(m.cols);
    for (int r = 0; r < m.rows; ++r) {
        std::vector<Rat> v(m.a.begin() + static_cast<size_t>(r) * m.cols,
                           m.a.begin() + static_cast<size_t>(r + 1) * m.cols);
        rowspace.insert(std::move(v));
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : rowspace.pivots()) is_pivot[p] = true;
    std::vector<std::vector<Rat>> kernel;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        const auto& rows = rowspace.rows();
        const auto& pivs = rowspace.pivots();
        for (size_t r = 0; r < rows.size(); ++r) v[pivs[r]] = -rows[r][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

long span_dim(const std::vector<std::vector<Rat>>& vecs) {
    if (vecs.empty()) return 0;
    size_t n = vecs[0].size();
    for (const auto& v : vecs)
        if (v.size() != n) throw std::invalid_argument("span_dim: mismatched vector lengths");
    return rank_exact(RationalMatrix::from_rows(vecs));
}

}  // namespace fatpoints
