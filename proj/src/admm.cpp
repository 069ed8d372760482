#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include <Eigen/Sparse>

#include "hbar/error.hpp"
#include "hbar/moment.hpp"

namespace hbar {

void LmiProblem::add(int block, int row, int col, int var, double coef) {
    if (row > col) std::swap(row, col);
    terms.push_back({block, row, col, var, coef});
}

namespace {

struct Blocks {
    std::vector<RMatrix> m;
    explicit Blocks(const std::vector<int>& sizes) {
        for (int s : sizes) m.push_back(RMatrix::Zero(s, s));
    }
    double norm() const {
        double s = 0;
        for (const auto& b : m) s += b.squaredNorm();
        return std::sqrt(s);
    }
};

double dot(const Blocks& a, const Blocks& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.m.size(); ++i) s += (a.m[i].array() * b.m[i].array()).sum();
    return s;
}

void project_psd(RMatrix& x) {
    if (x.rows() == 1) {
        x(0, 0) = std::max(0.0, x(0, 0));
        return;
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> es(x);
    RVector ev = es.eigenvalues().cwiseMax(0.0);
    x = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

double min_eigenvalue(const RMatrix& x) {
    if (x.rows() == 0) return 0;
    if (x.rows() == 1) return x(0, 0);
    return Eigen::SelfAdjointEigenSolver<RMatrix>(x, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

} // namespace

SdpSolution solve_lmi_admm(const LmiProblem& p, const SdpOptions& opt) {
    const int nv = p.num_vars;
    if (int(p.c.size()) != nv) fail("BadProblem", "objective length differs from the variable count");

    // Group terms by matrix position; off-diagonal positions count twice in the trace inner product.
    std::map<std::tuple<int, int, int>, std::vector<std::pair<int, double>>> pos;
    for (const auto& t : p.terms) {
        if (t.block < 0 || t.block >= int(p.blocks.size()) || t.col >= p.blocks[t.block] || t.row < 0)
            fail("BadProblem", "term outside its block");
        pos[{t.block, t.row, t.col}].push_back({t.var, t.coef});
    }
    struct Pos {
        int block, row, col;
        double mult, f0;
        std::vector<std::pair<int, double>> vars;
    };
    std::vector<Pos> entries;
    for (auto& [key, list] : pos) {
        Pos e{std::get<0>(key), std::get<1>(key), std::get<2>(key), 0, 0, {}};
        e.mult = e.row == e.col ? 1.0 : 2.0;
        std::map<int, double> acc;
        for (auto [v, c] : list) {
            if (v < 0) e.f0 += c;
            else acc[v] += c;
        }
        for (auto [v, c] : acc)
            if (c != 0) e.vars.push_back({v, c});
        entries.push_back(std::move(e));
    }

    std::vector<Eigen::Triplet<double>> trip;
    for (const auto& e : entries)
        for (auto [a, ca] : e.vars)
            for (auto [b, cb] : e.vars) trip.emplace_back(a, b, e.mult * ca * cb);
    Eigen::SparseMatrix<double> gram(nv, nv);
    gram.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    if (nv > 0) {
        ldlt.compute(gram);
        if (ldlt.info() != Eigen::Success) fail("BadProblem", "constraint map is not injective");
        for (int k = 0; k < nv; ++k)
            if (ldlt.vectorD()(k) <= 1e-12) fail("BadProblem", "constraint map is not injective");
    }

    auto adjoint = [&](const Blocks& a) {
        RVector out = RVector::Zero(nv);
        for (const auto& e : entries) {
            const double x = e.mult * a.m[e.block](e.row, e.col);
            for (auto [v, c] : e.vars) out(v) += c * x;
        }
        return out;
    };
    auto apply = [&](const RVector& y, bool with_f0) {
        Blocks out(p.blocks);
        for (const auto& e : entries) {
            double x = with_f0 ? e.f0 : 0.0;
            for (auto [v, c] : e.vars) x += c * y(v);
            out.m[e.block](e.row, e.col) = x;
            out.m[e.block](e.col, e.row) = x;
        }
        return out;
    };

    RVector c = Eigen::Map<const RVector>(p.c.data(), nv);
    RVector zero = RVector::Zero(nv);
    const Blocks f0 = apply(zero, true);

    Blocks s(p.blocks), lam(p.blocks), prev(p.blocks);
    RVector y = zero;
    double rho = opt.rho;
    SdpSolution sol;
    sol.method = SdpMethod::Admm;
    const int check_every = 10;
    for (int it = 1; it <= opt.max_iters; ++it) {
        Blocks rhs_b = s;
        for (std::size_t b = 0; b < s.m.size(); ++b) rhs_b.m[b] -= f0.m[b] + lam.m[b] / rho;
        RVector rhs = c / rho + adjoint(rhs_b);
        if (nv > 0) y = ldlt.solve(rhs);
        Blocks m = apply(y, true);
        prev = s;
        for (std::size_t b = 0; b < s.m.size(); ++b) {
            s.m[b] = m.m[b] + lam.m[b] / rho;
            project_psd(s.m[b]);
        }
        Blocks diff = m;
        for (std::size_t b = 0; b < s.m.size(); ++b) {
            diff.m[b] -= s.m[b];
            lam.m[b] += rho * diff.m[b];
        }
        if (it % check_every != 0 && it != opt.max_iters) continue;

        Blocks ds = s;
        for (std::size_t b = 0; b < s.m.size(); ++b) ds.m[b] -= prev.m[b];
        const double rp = diff.norm();
        const double rd = rho * adjoint(ds).norm();
        const double pobj = c.dot(y) + p.c0;
        const double dobj = -dot(lam, f0) + p.c0;
        const double gap = std::abs(pobj - dobj);
        sol.iterations = it;
        sol.primal_residual = rp;
        sol.dual_residual = rd;
        sol.gap = gap;
        sol.value = pobj;
        sol.dual_value = dobj;
        if (rp < opt.tol && rd < opt.tol && gap < opt.tol) {
            sol.converged = true;
            sol.blocks = m.m;
            break;
        }
        if (it % (5 * check_every) == 0) {
            if (rp > 10 * rd) rho *= 2;
            else if (rd > 10 * rp) rho /= 2;
            rho = std::clamp(rho, 1e-6, 1e6);
        }
        if (it == opt.max_iters) sol.blocks = m.m;
    }
    sol.y.assign(y.data(), y.data() + nv);
    for (auto& b : lam.m) sol.multipliers.push_back(-b);
    sol.min_eigenvalue = sol.blocks.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < sol.blocks.size(); ++b)
        sol.min_eigenvalue = std::min(sol.min_eigenvalue, min_eigenvalue(sol.blocks[b]));
    if (!sol.blocks.empty()) sol.matrix = sol.blocks[0];
    if (!sol.converged)
        fail("SolverStalled", "SDP solver did not reach the requested tolerance",
             "primal_residual=" + std::to_string(sol.primal_residual) +
                 " dual_residual=" + std::to_string(sol.dual_residual) + " gap=" + std::to_string(sol.gap));
    return sol;
}

} // namespace hbar
