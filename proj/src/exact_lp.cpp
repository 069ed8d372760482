#include "hbar/exact_lp.hpp"

#include "hbar/error.hpp"

namespace hbar {

void ExactLp::add_row(std::vector<Rational> row, Sense s, Rational rhs) {
    a.push_back(std::move(row));
    sense.push_back(s);
    b.push_back(std::move(rhs));
}

namespace {

struct Tableau {
    int m = 0, ncols = 0;
    std::vector<std::vector<Rational>> t; // m rows, ncols + 1 entries (last = rhs)
    std::vector<int> basis;

    void pivot(int r, int c) {
        const Rational p = t[r][c];
        for (auto& v : t[r]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][c] == 0) continue;
            const Rational f = t[i][c];
            for (int j = 0; j <= ncols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Maximize obj over columns in [0, limit); returns false when unbounded.
    bool optimize(const std::vector<Rational>& obj, int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit && enter < 0; ++j) {
                bool in_basis = false;
                for (int b : basis) in_basis |= (b == j);
                if (in_basis) continue;
                Rational rc = obj[j];
                for (int i = 0; i < m; ++i)
                    if (t[i][j] != 0) rc -= obj[basis[i]] * t[i][j];
                if (rc > 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][ncols] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

ExactLpResult solve_exact_lp(const ExactLp& lp) {
    const int m = int(lp.a.size());
    const int n = int(lp.c.size());
    for (const auto& row : lp.a)
        if (int(row.size()) != n) fail("DimMismatch", "LP row length differs from objective length");

    int slacks = 0, arts = 0;
    std::vector<Sense> sense = lp.sense;
    std::vector<int> flip(m, 1);
    for (int i = 0; i < m; ++i) {
        if (lp.b[i] < 0) {
            flip[i] = -1;
            if (sense[i] == Sense::Le)
                sense[i] = Sense::Ge;
            else if (sense[i] == Sense::Ge)
                sense[i] = Sense::Le;
        }
        if (sense[i] != Sense::Eq) ++slacks;
        if (sense[i] != Sense::Le) ++arts;
    }
    Tableau tab;
    tab.m = m;
    tab.ncols = n + slacks + arts;
    tab.t.assign(m, std::vector<Rational>(tab.ncols + 1));
    tab.basis.assign(m, -1);
    int s = n, a = n + slacks;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.t[i][j] = flip[i] * lp.a[i][j];
        tab.t[i][tab.ncols] = flip[i] * lp.b[i];
        if (sense[i] == Sense::Le) {
            tab.t[i][s] = 1;
            tab.basis[i] = s++;
        } else if (sense[i] == Sense::Ge) {
            tab.t[i][s++] = -1;
            tab.t[i][a] = 1;
            tab.basis[i] = a++;
        } else {
            tab.t[i][a] = 1;
            tab.basis[i] = a++;
        }
    }

    ExactLpResult res;
    if (arts > 0) {
        std::vector<Rational> phase1(tab.ncols, 0);
        for (int j = n + slacks; j < tab.ncols; ++j) phase1[j] = -1;
        tab.optimize(phase1, tab.ncols);
        Rational infeas = 0;
        for (int i = 0; i < m; ++i)
            if (tab.basis[i] >= n + slacks) infeas += tab.t[i][tab.ncols];
        if (infeas != 0) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        for (int i = 0; i < tab.m; ++i) {
            if (tab.basis[i] < n + slacks) continue;
            int col = -1;
            for (int j = 0; j < n + slacks && col < 0; ++j)
                if (tab.t[i][j] != 0) col = j;
            if (col >= 0) {
                tab.pivot(i, col);
            } else {
                tab.t.erase(tab.t.begin() + i);
                tab.basis.erase(tab.basis.begin() + i);
                --tab.m;
                --i;
            }
        }
    }
    std::vector<Rational> obj(tab.ncols, 0);
    for (int j = 0; j < n; ++j) obj[j] = lp.c[j];
    if (!tab.optimize(obj, n + slacks)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x.assign(n, 0);
    for (int i = 0; i < tab.m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.ncols];
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += lp.c[j] * res.x[j];
    return res;
}

} // namespace hbar
