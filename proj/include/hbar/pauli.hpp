#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hbar/graph.hpp"

namespace hbar {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Sign-free Pauli string; qubit q is I/X/Z/Y for (x,z) = (0,0)/(1,0)/(0,1)/(1,1).
struct PauliString {
    int len = 1;
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    static PauliString parse(const std::string& s);
    std::string str() const;
    char letter(int q) const;
    int weight() const { return __builtin_popcount(x | z); }
    bool operator==(const PauliString& o) const = default;
};

bool anticommutes(const PauliString& p, const PauliString& q);
Graph frustration_graph(const std::vector<PauliString>& strings);
CMatrix to_dense(const PauliString& p);
// Leading '-' or '+' is consumed and returned as the sign.
PauliString parse_signed(const std::string& s, int& sign);

// Pauli strings whose frustration graph equals the source graph.
class Realization {
public:
    Realization() = default;
    explicit Realization(std::vector<PauliString> strings);
    Realization(std::vector<PauliString> strings, const Graph& expected);

    const std::vector<PauliString>& strings() const { return strings_; }
    const Graph& graph() const { return graph_; }
    int length() const { return strings_.empty() ? 0 : strings_.front().len; }
    int dim() const { return 1 << length(); }
    int size() const { return int(strings_.size()); }
    const std::vector<CMatrix>& dense() const;

private:
    std::vector<PauliString> strings_;
    Graph graph_;
    mutable std::vector<CMatrix> dense_;
};

Realization realize_min(const Graph& g);

std::vector<PauliString> parse_strings(const std::vector<std::string>& text);

} // namespace hbar
