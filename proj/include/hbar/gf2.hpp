#pragma once

#include <cstdint>
#include <vector>

#include "hbar/graph.hpp"

namespace hbar {

// Dense matrix over GF(2); each row is one 64-bit word, so cols <= 64.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int n);
    static Gf2Matrix adjacency(const Graph& g);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (data_[r] >> c) & 1u; }
    void set(int r, int c, bool v);
    std::uint64_t row(int r) const { return data_[r]; }
    std::uint64_t& row(int r) { return data_[r]; }

    Gf2Matrix transpose() const;
    Gf2Matrix operator*(const Gf2Matrix& o) const;
    bool operator==(const Gf2Matrix& o) const = default;

    bool is_alternating() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> data_;
};

int gf2_rank(Gf2Matrix m);
Gf2Matrix gf2_inverse(const Gf2Matrix& m);

struct SymplecticForm {
    Gf2Matrix L; // invertible, L^T A L = J + ... + J + 0
    int k = 0;   // number of J blocks
};

SymplecticForm symplectic_canonical_form(const Gf2Matrix& a);

} // namespace hbar
