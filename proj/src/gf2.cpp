#include "hbar/gf2.hpp"

#include <utility>

#include "hbar/error.hpp"

namespace hbar {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    if (cols > 64 || rows < 0 || cols < 0) fail("SizeOverflow", "GF(2) matrices are limited to 64 columns");
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::adjacency(const Graph& g) {
    Gf2Matrix m(g.order(), g.order());
    for (int i = 0; i < g.order(); ++i) m.data_[i] = g.neighbors(i);
    return m;
}

void Gf2Matrix::set(int r, int c, bool v) {
    if (v)
        data_[r] |= std::uint64_t(1) << c;
    else
        data_[r] &= ~(std::uint64_t(1) << c);
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
    if (cols_ != o.rows_) fail("DimMismatch", "GF(2) product shape mismatch");
    Gf2Matrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (int k = 0; k < cols_; ++k)
            if (get(r, k)) acc ^= o.data_[k];
        p.data_[r] = acc;
    }
    return p;
}

bool Gf2Matrix::is_alternating() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        if (get(i, i)) return false;
        for (int j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    }
    return true;
}

int gf2_rank(Gf2Matrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.get(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m.row(piv), m.row(rank));
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, c)) m.row(r) ^= m.row(rank);
        ++rank;
    }
    return rank;
}

Gf2Matrix gf2_inverse(const Gf2Matrix& m) {
    const int n = m.rows();
    if (m.cols() != n) fail("DimMismatch", "inverse of a non-square GF(2) matrix");
    Gf2Matrix a = m, inv = Gf2Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a.get(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) fail("Singular", "GF(2) matrix is singular");
        std::swap(a.row(piv), a.row(c));
        std::swap(inv.row(piv), inv.row(c));
        for (int r = 0; r < n; ++r)
            if (r != c && a.get(r, c)) {
                a.row(r) ^= a.row(c);
                inv.row(r) ^= inv.row(c);
            }
    }
    return inv;
}

namespace {

// Bilinear form x^T A y with x, y as column bitsets.
bool form(const Gf2Matrix& a, std::uint64_t x, std::uint64_t y) {
    int acc = 0;
    for (int i = 0; i < a.rows(); ++i)
        if ((x >> i) & 1u) acc ^= __builtin_parityll(a.row(i) & y);
    return acc;
}

} // namespace

SymplecticForm symplectic_canonical_form(const Gf2Matrix& a) {
    if (!a.is_alternating()) fail("NotAlternating", "matrix must be symmetric with zero diagonal");
    const int n = a.rows();
    // Symplectic Gram-Schmidt on the standard basis.
    std::vector<std::uint64_t> pool;
    for (int i = 0; i < n; ++i) pool.push_back(std::uint64_t(1) << i);
    std::vector<std::uint64_t> cols;
    int k = 0;
    for (;;) {
        int pi = -1, pj = -1;
        for (std::size_t i = 0; i < pool.size() && pi < 0; ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                if (form(a, pool[i], pool[j])) {
                    pi = int(i);
                    pj = int(j);
                    break;
                }
        if (pi < 0) break;
        const std::uint64_t u = pool[pi], v = pool[pj];
        cols.push_back(u);
        cols.push_back(v);
        ++k;
        std::vector<std::uint64_t> rest;
        for (std::size_t t = 0; t < pool.size(); ++t) {
            if (int(t) == pi || int(t) == pj) continue;
            std::uint64_t x = pool[t];
            // Project out the new hyperbolic pair.
            if (form(a, x, v)) x ^= u;
            if (form(a, x, u)) x ^= v;
            rest.push_back(x);
        }
        pool = std::move(rest);
    }
    for (auto x : pool) cols.push_back(x);
    SymplecticForm out;
    out.k = k;
    out.L = Gf2Matrix(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            if ((cols[c] >> r) & 1u) out.L.set(r, c, true);
    return out;
}

} // namespace hbar
