#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbar/linalg.hpp"
#include "hbar/pauli.hpp"

namespace hbar {

using State = CVector;

State random_state(int dim, std::uint64_t seed);
std::vector<double> expectations(const Realization& r, const State& psi);
double beta_objective(const Realization& r, const std::vector<double>& w, const State& psi);

struct SeesawOptions {
    int restarts = 10;
    int max_iter = 500;
    double tol = 1e-10;
    std::uint64_t seed = 20240601;
};

struct SeesawResult {
    double value = 0;
    State state;
    std::vector<double> b;
    int iterations = 0;
    int restarts_used = 0;
    std::uint64_t seed = 0;
    std::vector<double> trace; // objective after each iteration of the best run
};

// Restart 0 uses `init` when given; the others start from seeded random states.
SeesawResult seesaw(const Realization& r, const std::vector<double>& w, const SeesawOptions& opt = {},
                    const std::optional<State>& init = std::nullopt);

// Occupation-number basis of the symmetric subspace of (C^d)^{\otimes M}.
class BoseBasis {
public:
    BoseBasis(int d, int copies);
    int d() const { return d_; }
    int copies() const { return m_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<std::uint16_t>& occupation(std::size_t i) const { return states_[i]; }
    std::size_t index(const std::vector<std::uint16_t>& occ) const;
    static double dimension(int d, int copies);

private:
    int d_, m_;
    std::vector<std::vector<std::uint16_t>> states_;
    std::vector<std::uint64_t> keys_;
    std::uint64_t key(const std::vector<std::uint16_t>& occ) const;
};

// Real two-particle matrix T[(p,q),(r,s)] = sum_i w_i S_i[p,r] S_i[q,s].
RMatrix two_body_matrix(const Realization& r, const std::vector<double>& w);

// Applies (1/C(M,2)) sum_{a<b} T_ab on the symmetric subspace.
class TwoBodyOperator {
public:
    TwoBodyOperator(const BoseBasis& basis, const RMatrix& t);
    void apply(const RVector& in, RVector& out) const;
    RMatrix dense() const;
    // One-copy reduced density matrix of a symmetric state.
    CMatrix reduced(const RVector& psi) const;

private:
    const BoseBasis& basis_;
    struct Term {
        int p, q;
        double value;
    };
    std::vector<std::vector<Term>> by_rs_; // index r*d+s
    double scale_;
};

struct DefinettiOptions {
    double max_dim = 2e6;
    int max_local_dim = 4;
};

struct DefinettiResult {
    int m = 0;
    int d = 0;
    std::size_t basis_dim = 0;
    double lambda_max = 0;
    double upper_bound = 0;
    double rigorous_error = 0;
    double residual = 0;
    RVector eigenvector;
    State warm_state;
};

DefinettiResult definetti_upper(const Realization& r, const std::vector<double>& w, int m,
                                const DefinettiOptions& opt = {});
// Top eigenvector of the one-copy reduced state of the symmetric eigenvector.
State warm_start_state(const DefinettiResult& dfr);

struct GeneralizedOptions {
    int restarts = 10;
    int max_iter = 2000;
    double tol = 1e-12;
    std::uint64_t seed = 20240601;
};

double generalized_objective(const Realization& r, const std::vector<double>& w, int k, const State& psi);
// Riemannian gradient on the unit sphere (real-coordinates convention).
State generalized_gradient(const Realization& r, const std::vector<double>& w, int k, const State& psi);
double generalized_beta_lower(const Realization& r, const std::vector<double>& w, int k,
                              const GeneralizedOptions& opt = {});

struct QubitBudget {
    double l = 0;
    long long m = 0;
    long long L = 0;
};

QubitBudget qubit_budget(double n, double c, double eps);

// Level with 4 |w|_1 d / (m+2) <= 1/4 for |w|_1 = n.
int definetti_rounding_level(int n, int d);
long long alpha_via_definetti(const Realization& r, const std::vector<double>& w, const DefinettiOptions& opt = {});

} // namespace hbar
