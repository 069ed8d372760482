#include <cmath>
#include <random>

#include "hbar/beta.hpp"
#include "hbar/error.hpp"

namespace hbar {

State random_state(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    State psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = cplx(g(rng), g(rng));
    return psi.normalized();
}

std::vector<double> expectations(const Realization& r, const State& psi) {
    std::vector<double> e;
    for (const auto& s : r.dense()) e.push_back(psi.dot(s * psi).real());
    return e;
}

double beta_objective(const Realization& r, const std::vector<double>& w, const State& psi) {
    auto e = expectations(r, psi);
    double v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i] * e[i];
    return v;
}

namespace {

void check_inputs(const Realization& r, const std::vector<double>& w) {
    if (int(w.size()) != r.size()) fail("DimMismatch", "weight vector length differs from the string count");
    if (r.length() > 6) fail("SizeOverflow", "see-saw is limited to 6 qubits");
    double total = 0;
    for (double x : w) {
        if (x < 0) fail("NegativeWeight", "weights must be nonnegative");
        total += x;
    }
    if (total <= 0) fail("DegenerateWeights", "all weights are zero");
}

SeesawResult run_once(const Realization& r, const std::vector<double>& w, State psi, const SeesawOptions& opt) {
    const auto& s = r.dense();
    const int n = r.size();
    SeesawResult res;
    res.state = psi;
    res.value = beta_objective(r, w, psi);
    res.trace.push_back(res.value);
    std::vector<double> b(n);
    for (int it = 0; it < opt.max_iter; ++it) {
        auto e = expectations(r, res.state);
        double norm = 0;
        for (int i = 0; i < n; ++i) {
            b[i] = std::sqrt(w[i]) * e[i];
            norm += b[i] * b[i];
        }
        norm = std::sqrt(norm);
        // A state orthogonal to every direction: fall back to the weight direction.
        if (norm < 1e-300) {
            norm = 0;
            for (int i = 0; i < n; ++i) norm += w[i];
            norm = std::sqrt(norm);
            for (int i = 0; i < n; ++i) b[i] = std::sqrt(w[i]);
        }
        for (double& x : b) x /= norm;
        CMatrix a = CMatrix::Zero(r.dim(), r.dim());
        for (int i = 0; i < n; ++i)
            if (b[i] != 0) a += (b[i] * std::sqrt(w[i])) * s[i];
        State next = top_abs_eigen(a).vector.normalized();
        double v = beta_objective(r, w, next);
        res.iterations = it + 1;
        res.b = b;
        if (v >= res.value) {
            const double gain = v - res.value;
            res.value = v;
            res.state = next;
            res.trace.push_back(v);
            if (gain < opt.tol) break;
        } else {
            break;
        }
    }
    return res;
}

} // namespace

SeesawResult seesaw(const Realization& r, const std::vector<double>& w, const SeesawOptions& opt,
                    const std::optional<State>& init) {
    check_inputs(r, w);
    SeesawResult best;
    best.value = -1;
    const int restarts = std::max(1, opt.restarts);
    for (int k = 0; k < restarts; ++k) {
        State start = (k == 0 && init) ? State(init->normalized()) : random_state(r.dim(), opt.seed + 7919ULL * k);
        if (start.size() != r.dim()) fail("DimMismatch", "initial state dimension differs from 2^l");
        SeesawResult cur = run_once(r, w, start, opt);
        if (cur.value > best.value) {
            cur.restarts_used = k + 1;
            best = std::move(cur);
        }
    }
    best.restarts_used = restarts;
    best.seed = opt.seed;
    return best;
}

} // namespace hbar
