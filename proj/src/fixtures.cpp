#include "hbar/fixtures.hpp"

#include <cmath>
#include <regex>

#include "hbar/error.hpp"

namespace hbar::fixtures {

Graph cycle(int n) {
    if (n < 3) fail("BadFixture", "cycles need at least 3 vertices", std::to_string(n));
    return cycle_graph(n);
}

Graph anticycle(int n) { return complement(cycle(n)); }
Graph complete(int n) { return complete_graph(n); }
Graph empty(int n) { return empty_graph(n); }

Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph g7() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                     {0, 3}, {0, 4}, {1, 3}, {1, 4}, {6, 3}, {6, 4}, {2, 5}});
}

std::vector<PauliString> two_qubit_strings() {
    const char* letters = "IXYZ";
    std::vector<PauliString> out;
    for (int l = 1; l < 16; ++l) out.push_back(PauliString::parse({letters[l / 4], letters[l % 4]}));
    return out;
}

Graph g15() { return frustration_graph(two_qubit_strings()); }

std::vector<PauliString> g9_strings() {
    return parse_strings({"XIII", "IXII", "IIXI", "ZIII", "IZII", "ZZZI", "YZYX", "YYXX", "YXZZ"});
}

Graph g9() { return frustration_graph(g9_strings()); }

namespace {

Graph c5_plus(std::initializer_list<int> nbrs) {
    Graph g(6);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int v : nbrs) g.add_edge(5, v);
    return g;
}

} // namespace

Graph h_imperfect_a() { return c5_plus({0, 1, 4}); }
Graph h_imperfect_b() { return c5_plus({0, 1, 2, 4}); }
Graph h_imperfect_c() { return c5_plus({0, 1, 2, 3, 4}); }

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

CMatrix maximally_mixed(int dim) { return CMatrix::Identity(dim, dim) / double(dim); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace {

CVector ket(int dim, std::initializer_list<std::pair<int, cplx>> amps) {
    CVector v = CVector::Zero(dim);
    for (auto [i, a] : amps) v(i) += a;
    return v;
}

} // namespace

std::vector<CVector> bell_states() {
    const double h = 1 / std::sqrt(2.0);
    return {ket(4, {{0, h}, {3, h}}), ket(4, {{0, h}, {3, -h}}), ket(4, {{1, h}, {2, h}}), ket(4, {{1, h}, {2, -h}})};
}

CMatrix bell_diagonal(const std::vector<double>& p) {
    if (p.size() != 4) fail("DimMismatch", "Bell diagonal states take four weights");
    auto b = bell_states();
    CMatrix rho = CMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) rho += p[i] * projector(b[i]);
    return rho;
}

std::vector<CVector> ghz_states() {
    const double h = 1 / std::sqrt(2.0);
    std::vector<CVector> out;
    for (int lead : {0, 4, 2, 6})
        for (double sign : {1.0, -1.0}) out.push_back(ket(8, {{lead, h}, {7 - lead, sign * h}}));
    return out;
}

std::vector<std::string> ghz_stabilizers() { return {"ZZI", "ZIZ", "IZZ", "XXX", "-YYX", "-YXY", "-XYY"}; }

std::vector<PauliString> s5_strings() { return parse_strings({"IX", "IZ", "XY", "YY", "ZY"}); }

std::vector<PauliString> s6_strings() { return parse_strings({"IY", "XX", "YZ", "ZX", "ZY", "ZZ"}); }

CMatrix rho_v(double v) {
    CMatrix avg = CMatrix::Zero(16, 16);
    for (const auto& s : s6_strings()) {
        const CMatrix m = to_dense(s);
        CVector psi = CVector::Zero(16);
        for (int j = 0; j < 4; ++j) psi += kron(CMatrix(ket(4, {{j, 1.0}})), CMatrix(m.col(j))) / 2.0;
        avg += projector(psi) / 6.0;
    }
    return v * avg + (1 - v) * maximally_mixed(16);
}

CMatrix qutrit_rho(double p) {
    const CVector psi3 = ket(9, {{0, 1.0}, {4, 1.0}, {8, 1.0}}) / std::sqrt(3.0);
    const CVector phi = ket(9, {{5, 1.0}, {7, 1.0}}) / std::sqrt(2.0);
    return (1 - p) * projector(psi3) + p * projector(phi);
}

CMatrix qutrit_unfaithful() {
    // The amplitudes are rounded; renormalize.
    const CVector phi1 = ket(9, {{4, 0.628}, {8, -0.778}}).normalized();
    const CVector phi2 = ket(9, {{1, 0.807}, {2, -0.185}, {3, -0.102}, {4, -0.027}, {5, 0.011},
                                 {6, 0.551}, {7, -0.024}, {8, -0.022}}).normalized();
    return 0.999 * (0.50179 * projector(phi1) + 0.49821 * projector(phi2)) + 0.001 * maximally_mixed(9);
}

namespace {

PauliString on_sites(int len, std::initializer_list<std::pair<int, char>> letters) {
    std::string s(len, 'I');
    for (auto [q, c] : letters) s[q] = c;
    return PauliString::parse(s);
}

Hamiltonian chain(int n, const std::string& bonds) {
    if (n < 2) fail("BadFixture", "chains need at least 2 sites", std::to_string(n));
    Hamiltonian h;
    h.strings = {on_sites(n, {{0, 'X'}}), on_sites(n, {{0, 'Z'}}), on_sites(n, {{n - 1, 'Y'}})};
    for (int i = 0; i + 1 < n; ++i)
        for (char c : bonds) h.strings.push_back(on_sites(n, {{i, c}, {i + 1, c}}));
    h.coeffs.assign(h.strings.size(), 1.0);
    return h;
}

} // namespace

Hamiltonian chain_hamiltonian(int n) { return chain(n, "XZ"); }
Hamiltonian chain_hamiltonian_xyz(int n) { return chain(n, "XYZ"); }

Graph by_name(const std::string& name) {
    static const std::regex param(R"((cycle|anticycle|complete|empty)\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, param)) {
        const int n = std::stoi(m[2]);
        if (m[1] == "cycle") return cycle(n);
        if (m[1] == "anticycle") return anticycle(n);
        if (m[1] == "complete") return complete(n);
        return empty(n);
    }
    if (name == "G7") return g7();
    if (name == "G9") return g9();
    if (name == "G15") return g15();
    if (name == "claw") return claw();
    fail("UnknownFixture", "no fixture with this name", name);
}

std::vector<std::string> names() {
    return {"cycle(n)", "anticycle(n)", "complete(n)", "empty(n)", "G7", "G9", "G15", "claw"};
}

} // namespace hbar::fixtures
