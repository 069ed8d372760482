#pragma once

#include <string>
#include <vector>

#include "hbar/graph.hpp"
#include "hbar/pauli.hpp"

namespace hbar::fixtures {

Graph cycle(int n);
Graph anticycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph claw();
Graph g7();
// The 15 non-identity two-qubit strings, ordered IX, IY, IZ, XI, ..., ZZ.
std::vector<PauliString> two_qubit_strings();
Graph g15();
// Nine four-qubit strings realizing the nine-vertex example graph.
std::vector<PauliString> g9_strings();
Graph g9();
// Smallest h-imperfect graphs: C5 plus a sixth vertex adjacent to {0,1,4}, {0,1,2,4}, or all.
Graph h_imperfect_a();
Graph h_imperfect_b();
Graph h_imperfect_c();

CMatrix projector(const CVector& v);
CMatrix maximally_mixed(int dim);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// (00+11), (00-11), (01+10), (01-10), each normalized.
std::vector<CVector> bell_states();
CMatrix bell_diagonal(const std::vector<double>& p);
// (|0ij> +- |1 ~i ~j>)/sqrt 2 for ij = 00, 10, 01, 11 in that order, + before -.
std::vector<CVector> ghz_states();
// ZZI, ZIZ, IZZ, XXX, -YYX, -YXY, -XYY.
std::vector<std::string> ghz_stabilizers();
// Five pairwise anticommuting two-qubit strings IX, IZ, XY, YY, ZY.
std::vector<PauliString> s5_strings();
// IY, XX, YZ, ZX, ZY, ZZ.
std::vector<PauliString> s6_strings();
// v times the average of |psi_S><psi_S| over s6_strings plus (1-v) I/16, psi_S = sum_j |j> (S|j>) / 2.
CMatrix rho_v(double v);
// (1-p)|Psi3><Psi3| + p|Phi'><Phi'| on two qutrits, levels labelled 1..3 as 0..2.
CMatrix qutrit_rho(double p);
// Entangled state with no fidelity witness, mixed with 1/1000 white noise.
CMatrix qutrit_unfaithful();

struct Hamiltonian {
    std::vector<double> coeffs;
    std::vector<PauliString> strings;
};
// X1 + Z1 + Yn + sum_i (X_i X_i+1 + Z_i Z_i+1): frustration graph C_{2n+1}.
Hamiltonian chain_hamiltonian(int n);
// Adds Y_i Y_i+1 to every bond; the bonds are listed as XX, YY, ZZ per site.
Hamiltonian chain_hamiltonian_xyz(int n);

// cycle(7), anticycle(9), complete(4), empty(3), G7, G15, claw, G9.
Graph by_name(const std::string& name);
std::vector<std::string> names();

} // namespace hbar::fixtures
