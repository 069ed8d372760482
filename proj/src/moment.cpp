#include <algorithm>
#include <map>

#include "hbar/error.hpp"
#include "hbar/moment.hpp"

namespace hbar {

Mask Word::mask() const {
    Mask m = 0;
    for (int i : letters) m |= Mask(1) << i;
    return m;
}

namespace {

std::vector<int> letters_of(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

// Appends letter x to a normal-form word, returning the sign picked up.
int push_letter(const Graph& g, Mask& word, int x) {
    Mask above = word & ~((Mask(2) << x) - 1);
    int sign = (popcount(above & g.neighbors(x)) & 1) ? -1 : 1;
    word ^= Mask(1) << x;
    return sign;
}

std::string word_str(Mask m) {
    std::string s;
    for (int i : letters_of(m)) s += "x" + std::to_string(i + 1);
    return s;
}

} // namespace

Word normal_form(const std::vector<int>& indices, const Graph& g) {
    Mask word = 0;
    int sign = 1;
    for (int x : indices) {
        if (x < 0 || x >= g.order()) fail("BadIndex", "letter index out of range", std::to_string(x));
        sign *= push_letter(g, word, x);
    }
    return {letters_of(word), sign};
}

bool reversal_odd(Mask word, const Graph& g) {
    int edges = 0;
    for (Mask m = word; m; m &= m - 1) edges += popcount(g.neighbors(lowest(m)) & word);
    return (edges / 2) & 1;
}

int StateMonomial::degree() const {
    int d = popcount(word);
    for (Mask f : factors) d += popcount(f);
    return d;
}

std::string StateMonomial::str() const {
    std::string s = word_str(word);
    for (Mask f : factors) s += "<" + word_str(f) + ">";
    return s.empty() ? "1" : s;
}

bool StateMonomial::operator<(const StateMonomial& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    if (word != o.word) return word < o.word;
    return factors < o.factors;
}

bool StateMonomial::operator==(const StateMonomial& o) const { return word == o.word && factors == o.factors; }

BasisLevel parse_basis_level(const std::string& s) {
    if (s == "A" || s == "a") return BasisLevel::A;
    if (s == "B" || s == "b") return BasisLevel::B;
    if (s == "BT" || s == "bt") return BasisLevel::BT;
    if (s == "C" || s == "c") return BasisLevel::C;
    fail("BadBasis", "basis level must be A, B, BT or C", s);
}

std::string basis_level_name(BasisLevel level) {
    switch (level) {
    case BasisLevel::A: return "A";
    case BasisLevel::B: return "B";
    case BasisLevel::BT: return "BT";
    default: return "C";
    }
}

std::vector<StateMonomial> build_basis(const Graph& g, BasisLevel level, int max_size) {
    const int n = g.order();
    if (n > 12) fail("SizeOverflow", "moment bases are limited to 12 vertices", std::to_string(n));
    auto bit = [](int i) { return Mask(1) << i; };
    std::vector<StateMonomial> out;
    auto add = [&](Mask word, std::vector<Mask> factors) {
        std::sort(factors.begin(), factors.end());
        StateMonomial m{word, std::move(factors)};
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    };
    add(0, {});
    for (int i = 0; i < n; ++i) add(bit(i), {bit(i)});
    if (level != BasisLevel::A) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) add(bit(i) | bit(j), {bit(i), bit(j)});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !g.adjacent(i, j)) add(bit(i), {bit(j), bit(i) | bit(j)});
    }
    if (level == BasisLevel::BT || level == BasisLevel::C)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) add(bit(i) | bit(j) | bit(k), {bit(i), bit(j), bit(k)});
    if (level == BasisLevel::C) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g.adjacent(i, j)) continue;
                const Mask p = bit(i) | bit(j);
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    add(p | bit(k), {p, bit(k)});
                    add(bit(i) | bit(k), {p, bit(j), bit(k)});
                    add(bit(j) | bit(k), {p, bit(i), bit(k)});
                    add(bit(k), {p, bit(i), bit(j), bit(k)});
                }
            }
    }
    if (int(out.size()) > max_size)
        fail("SizeOverflow", "moment basis exceeds the solver budget", std::to_string(out.size()));
    return out;
}

MomentEntry moment_entry(const Graph& g, const StateMonomial& u, const StateMonomial& v) {
    Mask word = u.word;
    int sign = 1;
    // u* is u.word reversed; appending v.word letter by letter reduces u* v.
    {
        auto lu = letters_of(u.word);
        word = 0;
        for (auto it = lu.rbegin(); it != lu.rend(); ++it) sign *= push_letter(g, word, *it);
        for (int x : letters_of(v.word)) sign *= push_letter(g, word, x);
    }
    MomentEntry e;
    e.key = u.factors;
    e.key.insert(e.key.end(), v.factors.begin(), v.factors.end());
    if (word) e.key.push_back(word);
    for (Mask f : e.key)
        if (reversal_odd(f, g)) return e; // sign 0
    std::sort(e.key.begin(), e.key.end());
    e.sign = sign;
    return e;
}

MomentProblem build_moment_problem(const Graph& g, BasisLevel level, int max_size) {
    return build_moment_problem(g, build_basis(g, level, max_size));
}

MomentProblem build_moment_problem(const Graph& g, std::vector<StateMonomial> basis) {
    MomentProblem p;
    p.graph = g;
    p.basis = std::move(basis);
    const int n = int(p.basis.size());
    p.cls.assign(n, std::vector<int>(n, -2));
    p.sgn.assign(n, std::vector<int>(n, 0));
    std::map<MomentKey, int> index;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            MomentEntry e = moment_entry(g, p.basis[r], p.basis[c]);
            int k = -2;
            if (e.sign != 0) {
                if (e.key.empty()) {
                    k = -1;
                } else {
                    auto [it, fresh] = index.emplace(e.key, int(p.classes.size()));
                    if (fresh) p.classes.push_back(e.key);
                    k = it->second;
                }
            }
            p.cls[r][c] = p.cls[c][r] = k;
            p.sgn[r][c] = p.sgn[c][r] = e.sign;
        }
    p.square_class.assign(g.order(), -1);
    for (int i = 0; i < g.order(); ++i) {
        auto it = index.find(MomentKey{Mask(1) << i, Mask(1) << i});
        if (it != index.end()) p.square_class[i] = it->second;
    }
    return p;
}

} // namespace hbar
