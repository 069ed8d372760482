#include <cmath>

#include "hbar/beta.hpp"
#include "hbar/error.hpp"
#include "hbar/stab.hpp"

#include <algorithm>

namespace hbar {

double generalized_objective(const Realization& r, const std::vector<double>& w, int k, const State& psi) {
    auto e = expectations(r, psi);
    double v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * std::pow(std::abs(e[i]), k);
    return v;
}

State generalized_gradient(const Realization& r, const std::vector<double>& w, int k, const State& psi) {
    const auto& s = r.dense();
    auto e = expectations(r, psi);
    State g = State::Zero(psi.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (w[i] == 0 || e[i] == 0) continue;
        // d/dpsi of <S> in real coordinates is 2 S psi.
        const double coef = w[i] * k * std::pow(std::abs(e[i]), k - 1) * (e[i] > 0 ? 1.0 : -1.0);
        g += (2.0 * coef) * (s[i] * psi);
    }
    // Project onto the tangent space of the sphere.
    g -= psi.dot(g).real() * psi;
    return g;
}

double generalized_beta_lower(const Realization& r, const std::vector<double>& w, int k,
                              const GeneralizedOptions& opt) {
    if (k < 2) fail("DomainError", "power k must be at least 2");
    if (r.length() > 5) fail("SizeOverflow", "generalized beta is limited to 5 qubits");
    if (int(w.size()) != r.size()) fail("DimMismatch", "weight vector length differs from the string count");
    // Starts: the k = 2 optimum, joint eigenstates of heavy stable sets, random states.
    std::vector<State> starts;
    starts.push_back(seesaw(r, w, {2, 500, 1e-12, opt.seed}).state);
    std::vector<Mask> sets = enumerate_stable_sets(r.graph()).maximal;
    auto weight_of = [&](Mask m) {
        double v = 0;
        for (Mask t = m; t; t &= t - 1) v += w[lowest(t)];
        return v;
    };
    std::stable_sort(sets.begin(), sets.end(), [&](Mask a, Mask b) { return weight_of(a) > weight_of(b); });
    for (std::size_t i = 0; i < sets.size() && i < 8; ++i) {
        CMatrix h = CMatrix::Zero(r.dim(), r.dim());
        for (Mask t = sets[i]; t; t &= t - 1) h += w[lowest(t)] * r.dense()[lowest(t)];
        starts.push_back(top_eigen(h).vector.normalized());
    }
    for (int rs = 0; rs < std::max(1, opt.restarts); ++rs) starts.push_back(random_state(r.dim(), opt.seed + 104729ULL * rs));

    double best = 0;
    for (State psi : starts) {
        double f = generalized_objective(r, w, k, psi);
        double step = 1.0;
        for (int it = 0; it < opt.max_iter; ++it) {
            State g = generalized_gradient(r, w, k, psi);
            const double gn2 = g.squaredNorm();
            if (gn2 < 1e-22) break;
            // Armijo backtracking with retraction by normalization.
            double t = std::min(1.0, step * 2.0);
            State next;
            double fn = f;
            bool accepted = false;
            for (int ls = 0; ls < 60; ++ls) {
                next = (psi + t * g).normalized();
                fn = generalized_objective(r, w, k, next);
                if (fn >= f + 1e-4 * t * gn2) {
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted) break;
            step = t;
            const double gain = fn - f;
            psi = next;
            f = fn;
            if (gain < opt.tol && gn2 < 1e-16) break;
        }
        best = std::max(best, f);
    }
    return best;
}

} // namespace hbar
