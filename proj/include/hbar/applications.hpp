#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbar/decider.hpp"
#include "hbar/fixtures.hpp"

namespace hbar {

// Hermitian, unit trace and PSD within 1e-10, else BadState.
void check_density(const CMatrix& rho);

// beta(G,w): alpha when G is certified hbar-perfect, else the upper end of a bracket.
struct Threshold {
    double value = 0;
    std::string source; // "alpha" or the bracket's upper source
    bool certified = false;
};
Threshold beta_threshold(const Graph& g, const std::vector<double>& w, const DeciderOptions& opt = {});

struct FacetSlack {
    std::vector<std::int64_t> normal;
    std::int64_t rhs = 0;
    double slack = 0; // rhs - normal . p
};

struct WitnessReport {
    std::vector<double> point; // |<S_i (x) S'_i>|
    std::vector<double> weights;
    double value = 0; // sum w_i p_i
    Threshold threshold;
    std::vector<FacetSlack> violated; // filled when G is certified
    bool entangled = false;
};

WitnessReport nonlinear_witness(const CMatrix& rho, const Realization& a, const Realization& b,
                                const std::vector<double>& w, const DeciderOptions& opt = {});
// Expectation-only mode: p given directly for the graph g.
WitnessReport nonlinear_witness_point(const Graph& g, const std::vector<double>& p, const std::vector<double>& w,
                                      const DeciderOptions& opt = {});

struct BellReport {
    std::vector<double> point; // |<XX>|, |<YY>|, |<ZZ>|
    bool algebraic = false;    // max p_i > 1/2
    bool polytope = false;     // point outside STAB(K3)
    bool entangled = false;
};
BellReport bell_diagonal_classify(const std::vector<double>& p);

struct GhzReport {
    std::vector<double> point; // |<O_i>| for the seven GHZ stabilizers
    double value = 0;
    bool algebraic = false;    // max p_i > 1/2
    bool genuine = false;      // value > 3
};
// Mixture of ghz_states() with weights p.
GhzReport ghz_diagonal_classify(const std::vector<double>& p);

struct QutritReport {
    double lhs = 0;
    bool entangled = false; // lhs > 4 + 1e-9
};
QutritReport qutrit_cover_witness(const CMatrix& rho);

struct Bipartition {
    std::vector<int> side; // parties in the first part
    Graph graph;
    Threshold threshold;
};

struct MultipartiteCriterion {
    std::vector<PauliString> stabilizers;
    std::vector<int> signs;
    std::vector<double> weights;
    std::vector<Bipartition> bipartitions;
    double biseparable = 0;      // max over bipartitions
    double fully_separable = 0;  // min over bipartitions
};

// Parties are the qubits of the stabilizers; bipartitions keep party 0 on the first side.
MultipartiteCriterion multipartite_criterion(const std::vector<std::string>& stabilizers, const std::vector<double>& w,
                                             const DeciderOptions& opt = {});

struct MultipartiteReport {
    std::vector<double> point; // |<O_i>|
    double value = 0;
    bool genuine = false;          // value > biseparable bound
    bool not_fully_separable = false;
};
MultipartiteReport evaluate_multipartite(const MultipartiteCriterion& c, const std::vector<double>& expectations);
MultipartiteReport evaluate_multipartite(const MultipartiteCriterion& c, const CMatrix& rho);

struct EntanglementEstimate {
    double taxicab_distance = 0;   // L1 distance to the union hull
    double euclidean_distance = 0;
    double lambda_gap = 0;         // max over sign patterns
    double hs_norm = 0;            // (tr[(sum O_i (x) O_i)^2])^(1/4)
    double trace_lower = 0;        // E_T >= d_T / lambda_gap
    double hs_lower = 0;           // E_HS >= d / hs_norm
};
// Needs every bipartition graph certified hbar-perfect (NotCertified otherwise).
EntanglementEstimate entanglement_estimates(const MultipartiteCriterion& c, const std::vector<double>& expectations);
EntanglementEstimate entanglement_estimates(const MultipartiteCriterion& c, const CMatrix& rho);
double lambda_gap(const std::vector<PauliString>& ops, long long max_patterns = 1LL << 20);

struct DeltaBounds {
    Rational alpha_star;          // fractional packing of the complement
    double lower = 0;             // 1/alpha*
    double theta = 0;             // theta of the complement
    double upper = 0;             // 1/theta
    std::optional<double> refined_upper;   // 1/omega_r
    std::optional<double> transitive_lower; // beta bracket / n on vertex-transitive graphs
    std::optional<double> transitive_upper;
};
DeltaBounds delta_bounds(const Graph& g, bool refine = false, BasisLevel level = BasisLevel::B,
                         const BracketOptions& bracket = {});

struct UncertaintyResult {
    bool feasible = false;
    Rational min_variance;
    std::vector<Rational> variances; // optimizer x
    bool certified = false;          // false: only a lower bound
};
// min x_i over x in 1 - STAB(G) with x_j <= caps_j (j != i); caps[target] is ignored.
UncertaintyResult uncertainty_lp(const Graph& g, int target, const std::vector<Rational>& caps,
                                 const DeciderOptions& opt = {});

struct GroundBound {
    std::vector<double> weights;
    double objective = 0;        // sum a_i^2 / w_i with alpha(G,w) <= 1
    double bound = 0;            // -sqrt(objective)
    bool certified = false;      // G hbar-perfect, so the bound is valid
    std::optional<double> exact; // lowest eigenvalue when l <= 6
};

struct GroundOptions {
    double eps = 1e-12;
    double newton_tol = 1e-10;
    double gap_tol = 1e-12;
    bool exact = true;
};

// Log-barrier Newton over {w >= eps, sum_{i in I} w_i <= 1 for maximal stable I}.
GroundBound ground_bound(const std::vector<double>& a, const std::vector<PauliString>& strings,
                         const GroundOptions& opt = {});
// Fixed weights: -sqrt(sum a_i^2/w_i * beta(G,w)).
GroundBound ground_bound_for_weights(const std::vector<double>& a, const std::vector<PauliString>& strings,
                                     const std::vector<double>& w, const GroundOptions& opt = {});
double exact_ground_energy(const std::vector<double>& a, const std::vector<PauliString>& strings);

} // namespace hbar
