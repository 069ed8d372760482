#include "hbar/pauli.hpp"

#include <cctype>

#include "hbar/error.hpp"
#include "hbar/gf2.hpp"

namespace hbar {

PauliString PauliString::parse(const std::string& raw) {
    PauliString p;
    std::vector<char> letters;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        unsigned char c = raw[i];
        // U+1D7D9 (double-struck one) is accepted as identity.
        if (c == 0xF0 && raw.compare(i, 4, "\xF0\x9D\x9F\x99") == 0) {
            letters.push_back('I');
            i += 3;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == '1') c = 'I';
        c = char(std::toupper(c));
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') fail("BadPauli", "unknown Pauli letter", raw);
        letters.push_back(char(c));
    }
    if (letters.empty()) fail("BadPauli", "empty Pauli string", raw);
    if (letters.size() > 32) fail("SizeOverflow", "Pauli strings are limited to 32 qubits", raw);
    p.len = int(letters.size());
    for (int q = 0; q < p.len; ++q) {
        char c = letters[q];
        if (c == 'X' || c == 'Y') p.x |= 1u << q;
        if (c == 'Z' || c == 'Y') p.z |= 1u << q;
    }
    return p;
}

char PauliString::letter(int q) const {
    const bool a = (x >> q) & 1u, b = (z >> q) & 1u;
    return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
}

std::string PauliString::str() const {
    std::string s;
    for (int q = 0; q < len; ++q) s.push_back(letter(q));
    return s;
}

PauliString parse_signed(const std::string& s, int& sign) {
    sign = 1;
    std::size_t start = 0;
    while (start < s.size() && s[start] == ' ') ++start;
    if (start < s.size() && (s[start] == '-' || s[start] == '+')) {
        if (s[start] == '-') sign = -1;
        ++start;
    }
    return PauliString::parse(s.substr(start));
}

bool anticommutes(const PauliString& p, const PauliString& q) {
    if (p.len != q.len) fail("LengthMismatch", "Pauli strings differ in length", p.str() + " vs " + q.str());
    return __builtin_parity((p.x & q.z) ^ (p.z & q.x));
}

Graph frustration_graph(const std::vector<PauliString>& s) {
    if (s.empty()) fail("EmptyInput", "no Pauli strings given");
    Graph g(int(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (anticommutes(s[i], s[j])) g.add_edge(int(i), int(j));
    return g;
}

CMatrix to_dense(const PauliString& p) {
    if (p.len > 6) fail("SizeOverflow", "dense rendering is limited to 6 qubits", p.str());
    const int d = 1 << p.len;
    CMatrix m = CMatrix::Zero(d, d);
    // Qubit 0 is the most significant tensor factor.
    for (int col = 0; col < d; ++col) {
        int row = 0;
        cplx amp = 1.0;
        for (int q = 0; q < p.len; ++q) {
            const int bit = (col >> (p.len - 1 - q)) & 1;
            const char c = p.letter(q);
            int out = bit;
            if (c == 'X') {
                out = bit ^ 1;
            } else if (c == 'Y') {
                out = bit ^ 1;
                amp *= bit ? cplx(0, -1) : cplx(0, 1);
            } else if (c == 'Z') {
                if (bit) amp = -amp;
            }
            row |= out << (p.len - 1 - q);
        }
        m(row, col) = amp;
    }
    return m;
}

Realization::Realization(std::vector<PauliString> strings) : strings_(std::move(strings)) {
    if (strings_.empty()) fail("EmptyInput", "a realization needs at least one string");
    graph_ = frustration_graph(strings_);
}

Realization::Realization(std::vector<PauliString> strings, const Graph& expected)
    : Realization(std::move(strings)) {
    if (!(graph_ == expected)) fail("RealizationMismatch", "frustration graph differs from the source graph");
}

const std::vector<CMatrix>& Realization::dense() const {
    if (dense_.empty())
        for (const auto& s : strings_) dense_.push_back(to_dense(s));
    return dense_;
}

Realization realize_min(const Graph& g) {
    const int n = g.order();
    if (n < 1) fail("EmptyInput", "graph has no vertices");
    Gf2Matrix a = Gf2Matrix::adjacency(g);
    SymplecticForm sf = symplectic_canonical_form(a);
    const int ell = std::max(1, sf.k);
    std::vector<PauliString> out(n);
    for (auto& s : out) s.len = ell;
    if (sf.k == 0) {
        for (auto& s : out) s.z = 1;
        return Realization(out, g);
    }
    // Rows 2i and 2i+1 of L^{-1} are u_i and v_i.
    Gf2Matrix m = gf2_inverse(sf.L);
    for (int p = 0; p < n; ++p)
        for (int i = 0; i < ell; ++i) {
            if (m.get(2 * i, p)) out[p].x |= 1u << i;
            if (m.get(2 * i + 1, p)) out[p].z |= 1u << i;
        }
    return Realization(out, g);
}

std::vector<PauliString> parse_strings(const std::vector<std::string>& text) {
    std::vector<PauliString> out;
    for (const auto& t : text) out.push_back(PauliString::parse(t));
    for (const auto& p : out)
        if (p.len != out.front().len) fail("LengthMismatch", "Pauli strings differ in length", p.str());
    return out;
}

} // namespace hbar
