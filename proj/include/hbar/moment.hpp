#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbar/beta.hpp"
#include "hbar/graph.hpp"
#include "hbar/linalg.hpp"

namespace hbar {

// Signed product of letters in ascending order.
struct Word {
    std::vector<int> letters;
    int sign = 1;
    Mask mask() const;
};

Word normal_form(const std::vector<int>& indices, const Graph& g);

// <u> = <u*> forces <u> = 0 when reversing u costs an odd number of swaps.
bool reversal_odd(Mask word, const Graph& g);

struct StateMonomial {
    Mask word = 0;
    std::vector<Mask> factors; // sorted, each a normal-form word inside <.>
    int degree() const;
    std::string str() const; // e.g. "x1<x2><x1x2>"
    bool operator<(const StateMonomial& o) const;
    bool operator==(const StateMonomial& o) const;
};

// BT is B plus the triple products x_ix_jx_k<x_i><x_j><x_k>, the first family of C.
enum class BasisLevel { A, B, BT, C };
BasisLevel parse_basis_level(const std::string& s);
std::string basis_level_name(BasisLevel level);

std::vector<StateMonomial> build_basis(const Graph& g, BasisLevel level, int max_size = 400);

// Key of an entry: sorted multiset of nonzero word masks standing for a product of pseudo-expectations.
using MomentKey = std::vector<Mask>;

struct MomentEntry {
    int sign = 0; // 0: forced zero
    MomentKey key;
};

MomentEntry moment_entry(const Graph& g, const StateMonomial& u, const StateMonomial& v);

struct MomentProblem {
    Graph graph;
    std::vector<StateMonomial> basis;
    std::vector<MomentKey> classes;      // variable classes; the empty key is not a variable
    std::vector<std::vector<int>> cls;   // entry -> class index, -1 pinned to 1, -2 pinned to 0
    std::vector<std::vector<int>> sgn;   // entry sign
    std::vector<int> square_class;       // class of <x_i>^2 per vertex (-1 if absent)
};

MomentProblem build_moment_problem(const Graph& g, BasisLevel level, int max_size = 400);
MomentProblem build_moment_problem(const Graph& g, std::vector<StateMonomial> basis);

// maximize c.y + c0 subject to F0 + sum_k y_k F_k in a product of PSD blocks (size-1 blocks are scalars >= 0).
struct LmiProblem {
    std::vector<int> blocks;
    int num_vars = 0;
    std::vector<double> c;
    double c0 = 0;
    struct Term {
        int block, row, col, var; // var -1 is the constant F0; row <= col
        double coef;
    };
    std::vector<Term> terms;
    void add(int block, int row, int col, int var, double coef);
};

// Auto runs the interior-point method on problems small enough for a dense Schur complement
// and falls back to ADMM, whose tolerance is floored at 1e-7.
enum class SdpMethod { Auto, Admm, Ipm };
SdpMethod parse_sdp_method(const std::string& s);
std::string sdp_method_name(SdpMethod m);

struct SdpOptions {
    double tol = 1e-7;
    int max_iters = 200000;
    double rho = 1.0;
    SdpMethod method = SdpMethod::Auto;
    int ipm_max_iters = 100;
};

struct SdpSolution {
    double value = 0;
    double dual_value = 0;
    std::vector<double> y;
    std::vector<RMatrix> blocks;      // F0 + sum y_k F_k
    std::vector<RMatrix> multipliers; // dual PSD matrices
    RMatrix matrix;                   // first block
    double primal_residual = 0;
    double dual_residual = 0;
    double gap = 0;
    double min_eigenvalue = 0;
    int iterations = 0;
    bool converged = false;
    SdpMethod method = SdpMethod::Admm;
};

// Throws SolverStalled when the iteration budget runs out.
SdpSolution solve_lmi(const LmiProblem& p, const SdpOptions& opt = {});
SdpSolution solve_lmi_admm(const LmiProblem& p, const SdpOptions& opt = {});
SdpSolution solve_lmi_ipm(const LmiProblem& p, const SdpOptions& opt = {});

SdpSolution lambda_r(const Graph& g, const std::vector<double>& w, BasisLevel level, const SdpOptions& opt = {});
SdpSolution lambda_basis(const Graph& g, const std::vector<double>& w, const std::vector<StateMonomial>& basis,
                         const SdpOptions& opt = {});
SdpSolution lovasz_theta(const Graph& g, const std::vector<double>& w, const SdpOptions& opt = {});

struct OmegaResult {
    double omega = 0;
    double inverse = 0;          // 1/omega, the delta estimate
    std::vector<double> weights; // optimal distribution
    SdpSolution sdp;
};

OmegaResult omega_r(const Graph& g, BasisLevel level, const SdpOptions& opt = {});

// Lower bound on the variance 1 - <x_i>^2 given caps 1 - <x_j>^2 <= c_j (c_i ignored).
SdpSolution uncertainty_sdp(const Graph& g, int target, const std::vector<double>& caps, BasisLevel level,
                            const SdpOptions& opt = {});

// Squared expectations <x_i>^2 read from a solved moment problem.
std::vector<double> square_expectations(const Graph& g, BasisLevel level, const SdpSolution& s);

struct ExtractOptions {
    int max_iter = 3000;
    double tol = 1e-12;
    std::optional<double> threshold; // NoGoodSign when no residual falls below it
    int max_full_traversal = 12;
};

struct ExtractResult {
    State state;
    double residual = 0;
    std::vector<int> signs;
    int tried = 0;
};

// Fits tr(rho S_i) = a_i sqrt(t_i) over density matrices; hints are tried first, then every sign vector.
ExtractResult extract_state(const Realization& r, const std::vector<double>& targets,
                            const std::vector<std::vector<int>>& sign_hints = {}, const ExtractOptions& opt = {});

} // namespace hbar
