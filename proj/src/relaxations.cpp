#include <cmath>

#include "hbar/error.hpp"
#include "hbar/moment.hpp"

namespace hbar {

namespace {

void check_weights_len(const Graph& g, const std::vector<double>& w) {
    if (int(w.size()) != g.order()) fail("DimMismatch", "weight vector length differs from the vertex count");
    for (double x : w)
        if (x < 0) fail("NegativeWeight", "weights must be nonnegative");
}

// Moment matrix as block 0 with one variable per class.
LmiProblem moment_lmi(const MomentProblem& mp) {
    LmiProblem p;
    const int n = int(mp.basis.size());
    p.blocks = {n};
    p.num_vars = int(mp.classes.size());
    p.c.assign(p.num_vars, 0.0);
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            const int k = mp.cls[r][c];
            if (k == -2) continue;
            p.add(0, r, c, k == -1 ? -1 : k, mp.sgn[r][c]);
        }
    return p;
}

int square_var(const MomentProblem& mp, int i) {
    const int k = mp.square_class[i];
    if (k < 0) fail("BadBasis", "basis does not expose <x_i>^2", std::to_string(i));
    return k;
}

} // namespace

SdpSolution lambda_r(const Graph& g, const std::vector<double>& w, BasisLevel level, const SdpOptions& opt) {
    check_weights_len(g, w);
    MomentProblem mp = build_moment_problem(g, level);
    LmiProblem p = moment_lmi(mp);
    for (int i = 0; i < g.order(); ++i) p.c[square_var(mp, i)] += w[i];
    return solve_lmi(p, opt);
}

SdpSolution lambda_basis(const Graph& g, const std::vector<double>& w, const std::vector<StateMonomial>& basis,
                         const SdpOptions& opt) {
    check_weights_len(g, w);
    MomentProblem mp = build_moment_problem(g, basis);
    LmiProblem p = moment_lmi(mp);
    for (int i = 0; i < g.order(); ++i) p.c[square_var(mp, i)] += w[i];
    return solve_lmi(p, opt);
}

SdpSolution lovasz_theta(const Graph& g, const std::vector<double>& w, const SdpOptions& opt) {
    check_weights_len(g, w);
    const int n = g.order();
    if (n > 12) fail("SizeOverflow", "theta is limited to 12 vertices");
    LmiProblem p;
    p.blocks = {n};
    if (n == 0) return solve_lmi(p, opt);
    // X_{n-1,n-1} = 1 - sum of the other diagonal entries.
    const int last = n - 1;
    p.add(0, last, last, -1, 1.0);
    p.c0 = w[last];
    for (int i = 0; i < last; ++i) {
        const int v = p.num_vars++;
        p.add(0, i, i, v, 1.0);
        p.add(0, last, last, v, -1.0);
        p.c.push_back(w[i] - w[last]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            const int v = p.num_vars++;
            p.add(0, i, j, v, 1.0);
            p.c.push_back(2.0 * std::sqrt(w[i] * w[j]));
        }
    return solve_lmi(p, opt);
}

OmegaResult omega_r(const Graph& g, BasisLevel level, const SdpOptions& opt) {
    const int n = g.order();
    if (n == 0) fail("EmptyGraph", "omega needs at least one vertex");
    MomentProblem mp = build_moment_problem(g, level);
    LmiProblem p = moment_lmi(mp);
    // 1/omega = min over distributions w of lambda_r(w) = max t with <x_i>^2 >= t.
    const int t = p.num_vars++;
    p.c.push_back(1.0);
    for (int i = 0; i < n; ++i) {
        p.blocks.push_back(1);
        p.add(1 + i, 0, 0, square_var(mp, i), 1.0);
        p.add(1 + i, 0, 0, t, -1.0);
    }
    OmegaResult res;
    res.sdp = solve_lmi(p, opt);
    res.inverse = res.sdp.value;
    res.omega = 1.0 / res.inverse;
    double total = 0;
    for (int i = 0; i < n; ++i) total += std::max(0.0, res.sdp.multipliers[1 + i](0, 0));
    for (int i = 0; i < n; ++i)
        res.weights.push_back(total > 0 ? std::max(0.0, res.sdp.multipliers[1 + i](0, 0)) / total : 1.0 / n);
    return res;
}

SdpSolution uncertainty_sdp(const Graph& g, int target, const std::vector<double>& caps, BasisLevel level,
                            const SdpOptions& opt) {
    const int n = g.order();
    if (target < 0 || target >= n) fail("BadIndex", "target vertex out of range", std::to_string(target));
    if (int(caps.size()) != n) fail("DimMismatch", "cap vector length differs from the vertex count");
    for (int j = 0; j < n; ++j)
        if (j != target && (caps[j] < 0 || caps[j] > 1)) fail("BadCap", "caps must lie in [0,1]");
    MomentProblem mp = build_moment_problem(g, level);
    std::vector<int> capped;
    for (int j = 0; j < n; ++j)
        if (j != target && caps[j] < 1) capped.push_back(j);

    // <x_j>^2 >= 1 - c_j - s; feasible iff max s >= 0.
    if (!capped.empty()) {
        LmiProblem p = moment_lmi(mp);
        const int s = p.num_vars++;
        p.c.push_back(-1.0);
        for (std::size_t q = 0; q < capped.size(); ++q) {
            const int j = capped[q];
            p.blocks.push_back(1);
            p.add(1 + int(q), 0, 0, square_var(mp, j), 1.0);
            p.add(1 + int(q), 0, 0, s, 1.0);
            p.add(1 + int(q), 0, 0, -1, -(1.0 - caps[j]));
        }
        SdpSolution phase1 = solve_lmi(p, opt);
        if (-phase1.value > 1e-5) fail("Infeasible", "caps are inconsistent at this level");
    }

    LmiProblem p = moment_lmi(mp);
    p.c[square_var(mp, target)] = 1.0;
    p.c0 = -1.0;
    for (std::size_t q = 0; q < capped.size(); ++q) {
        const int j = capped[q];
        p.blocks.push_back(1);
        p.add(1 + int(q), 0, 0, square_var(mp, j), 1.0);
        p.add(1 + int(q), 0, 0, -1, -(1.0 - caps[j]));
    }
    // Minimizing 1 - <x_i>^2 is maximizing its negation.
    SdpSolution sol = solve_lmi(p, opt);
    sol.value = -sol.value;
    sol.dual_value = -sol.dual_value;
    return sol;
}

std::vector<double> square_expectations(const Graph& g, BasisLevel level, const SdpSolution& s) {
    MomentProblem mp = build_moment_problem(g, level);
    std::vector<double> out;
    for (int i = 0; i < g.order(); ++i) {
        const int k = square_var(mp, i);
        if (k >= int(s.y.size())) fail("DimMismatch", "solution does not match the moment problem");
        out.push_back(s.y[k]);
    }
    return out;
}

} // namespace hbar
