#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include <Eigen/Sparse>

#include "hbar/error.hpp"
#include "hbar/moment.hpp"

namespace hbar {

SdpMethod parse_sdp_method(const std::string& s) {
    if (s == "auto") return SdpMethod::Auto;
    if (s == "admm") return SdpMethod::Admm;
    if (s == "ipm") return SdpMethod::Ipm;
    fail("BadOption", "sdp method must be auto, admm or ipm", s);
}

std::string sdp_method_name(SdpMethod m) {
    switch (m) {
    case SdpMethod::Auto: return "auto";
    case SdpMethod::Admm: return "admm";
    default: return "ipm";
    }
}

namespace {

using Mats = std::vector<RMatrix>;

// Coefficient of y_k at (row, col) of a block, both triangles listed.
struct Entry {
    int row, col, var;
    double coef;
};

double inner(const Mats& a, const Mats& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i].array() * b[i].array()).sum();
    return s;
}

double frob(const Mats& a) { return std::sqrt(inner(a, a)); }

// Largest step t <= 1/0 with x + t d still PSD (infinity when unbounded).
double max_step(const RMatrix& x, const RMatrix& d) {
    if (x.rows() == 1) return d(0, 0) < 0 ? -x(0, 0) / d(0, 0) : std::numeric_limits<double>::infinity();
    Eigen::LLT<RMatrix> llt(x);
    RMatrix l = llt.matrixL();
    RMatrix t = l.triangularView<Eigen::Lower>().solve(d);
    t = l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
    const double lam = Eigen::SelfAdjointEigenSolver<RMatrix>(0.5 * (t + t.transpose()), Eigen::EigenvaluesOnly)
                           .eigenvalues()(0);
    return lam >= 0 ? std::numeric_limits<double>::infinity() : -1.0 / lam;
}

} // namespace

// Infeasible primal-dual path following with the HKM direction and a Mehrotra corrector.
// Primal: min <F0, X> s.t. <F_k, X> = -c_k, X >= 0. Dual: max c.y s.t. S = F0 + sum y_k F_k >= 0.
SdpSolution solve_lmi_ipm(const LmiProblem& p, const SdpOptions& opt) {
    const int nv = p.num_vars;
    const int nb = int(p.blocks.size());
    if (int(p.c.size()) != nv) fail("BadProblem", "objective length differs from the variable count");

    std::vector<std::map<std::tuple<int, int, int>, double>> acc(nb);
    Mats f0;
    for (int s : p.blocks) f0.push_back(RMatrix::Zero(s, s));
    for (const auto& t : p.terms) {
        if (t.block < 0 || t.block >= nb || t.col >= p.blocks[t.block] || t.row < 0)
            fail("BadProblem", "term outside its block");
        if (t.var < 0) {
            f0[t.block](t.row, t.col) += t.coef;
            if (t.row != t.col) f0[t.block](t.col, t.row) += t.coef;
        } else {
            acc[t.block][{t.row, t.col, t.var}] += t.coef;
            if (t.row != t.col) acc[t.block][{t.col, t.row, t.var}] += t.coef;
        }
    }
    std::vector<std::vector<Entry>> ent(nb);
    for (int b = 0; b < nb; ++b)
        for (const auto& [key, v] : acc[b])
            if (v != 0) ent[b].push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});

    const RVector c = Eigen::Map<const RVector>(p.c.data(), nv);
    int total = 0;
    for (int s : p.blocks) total += s;

    // <F_k, Y> for every k.
    auto adjoint = [&](const Mats& y) {
        RVector out = RVector::Zero(nv);
        for (int b = 0; b < nb; ++b)
            for (const auto& e : ent[b]) out(e.var) += e.coef * y[b](e.row, e.col);
        return out;
    };
    auto apply = [&](const RVector& y) {
        Mats out = f0;
        for (int b = 0; b < nb; ++b)
            for (const auto& e : ent[b]) out[b](e.row, e.col) += e.coef * y(e.var);
        return out;
    };

    // Gram matrix of the F_k, used to restore <F, dX> = rp exactly after each solve.
    std::vector<Eigen::Triplet<double>> trip;
    for (int b = 0; b < nb; ++b) {
        std::map<std::pair<int, int>, std::vector<std::pair<int, double>>> at;
        for (const auto& e : ent[b]) at[{e.row, e.col}].push_back({e.var, e.coef});
        for (const auto& [key, list] : at)
            for (auto [k, ck] : list)
                for (auto [l, cl] : list) trip.emplace_back(k, l, ck * cl);
    }
    Eigen::SparseMatrix<double> gram(nv, nv);
    gram.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> gram_ldlt;
    if (nv > 0) {
        gram_ldlt.compute(gram);
        if (gram_ldlt.info() != Eigen::Success) fail("BadProblem", "constraint map is not injective");
    }
    auto apply_linear = [&](const RVector& y) {
        Mats out;
        for (int sz : p.blocks) out.push_back(RMatrix::Zero(sz, sz));
        for (int b = 0; b < nb; ++b)
            for (const auto& e : ent[b]) out[b](e.row, e.col) += e.coef * y(e.var);
        return out;
    };

    double fnorm = 0;
    for (int b = 0; b < nb; ++b) fnorm = std::max(fnorm, f0[b].norm());
    std::vector<double> colnorm(nv, 0.0);
    for (int b = 0; b < nb; ++b)
        for (const auto& e : ent[b]) colnorm[e.var] += e.coef * e.coef;
    double xi = std::max(10.0, std::sqrt(double(total))), eta = std::max(10.0, std::sqrt(double(total)));
    for (int k = 0; k < nv; ++k) {
        const double an = std::sqrt(colnorm[k]);
        if (an > 0) xi = std::max(xi, total * (1 + std::abs(c(k))) / (1 + an));
        eta = std::max(eta, an);
    }
    eta = std::max(eta, (1 + fnorm) / std::sqrt(double(total)));

    Mats x, s;
    for (int sz : p.blocks) {
        x.push_back(xi * RMatrix::Identity(sz, sz));
        s.push_back(eta * RMatrix::Identity(sz, sz));
    }
    RVector y = RVector::Zero(nv);

    SdpSolution sol;
    sol.method = SdpMethod::Ipm;
    Mats sinv(nb);
    RMatrix schur(nv, nv);
    for (int it = 1; it <= opt.ipm_max_iters; ++it) {
        // Residuals: rp = -c - <F,X>, rd = F0 + F y - S.
        const RVector rp = -c - adjoint(x);
        Mats rd = apply(y);
        for (int b = 0; b < nb; ++b) rd[b] -= s[b];
        const double pobj = inner(f0, x) + p.c0;
        const double dobj = c.dot(y) + p.c0;
        sol.iterations = it;
        sol.primal_residual = frob(rd);
        sol.dual_residual = rp.norm();
        sol.gap = std::abs(pobj - dobj);
        sol.value = dobj;
        sol.dual_value = pobj;
        if (sol.primal_residual < opt.tol && sol.dual_residual < opt.tol && sol.gap < opt.tol) {
            sol.converged = true;
            break;
        }
        const double mu = inner(x, s) / total;

        for (int b = 0; b < nb; ++b) {
            if (p.blocks[b] == 1) sinv[b] = RMatrix::Constant(1, 1, 1.0 / s[b](0, 0));
            else sinv[b] = s[b].llt().solve(RMatrix::Identity(p.blocks[b], p.blocks[b]));
        }
        // M_kl = tr(F_k X F_l S^-1).
        schur.setZero();
        for (int b = 0; b < nb; ++b) {
            const RMatrix& xb = x[b];
            const RMatrix& sb = sinv[b];
            for (const auto& e1 : ent[b])
                for (const auto& e2 : ent[b])
                    schur(e1.var, e2.var) += e1.coef * e2.coef * xb(e1.col, e2.row) * sb(e2.col, e1.row);
        }
        schur = 0.5 * (schur + schur.transpose());
        Eigen::LDLT<RMatrix> ldlt(schur);
        if (ldlt.info() != Eigen::Success) fail("SolverStalled", "Schur complement factorization failed");

        // Direction for target sigma*mu with an optional second-order term.
        auto direction = [&](double sigma, const Mats* dxp, const Mats* dsp, Mats& dx, Mats& ds, RVector& dy) {
            Mats g(nb);
            for (int b = 0; b < nb; ++b) {
                g[b] = sigma * mu * sinv[b] - x[b] - x[b] * rd[b] * sinv[b];
                if (dxp) g[b] -= (*dxp)[b] * (*dsp)[b] * sinv[b];
            }
            // <F, dX> = rp with dX = G - X (F dy) S^-1 symmetrized, so M dy = <F, G> - rp.
            RVector rhs = adjoint(g) - rp;
            dy = ldlt.solve(rhs);
            ds = rd;
            Mats fdy = apply(dy);
            for (int b = 0; b < nb; ++b) ds[b] += fdy[b] - f0[b];
            dx.assign(nb, RMatrix());
            for (int b = 0; b < nb; ++b) {
                RMatrix t = sigma * mu * sinv[b] - x[b] - x[b] * ds[b] * sinv[b];
                if (dxp) t -= (*dxp)[b] * (*dsp)[b] * sinv[b];
                dx[b] = 0.5 * (t + t.transpose());
            }
            if (nv > 0) {
                Mats fix = apply_linear(gram_ldlt.solve(RVector(rp - adjoint(dx))));
                for (int b = 0; b < nb; ++b) dx[b] += fix[b];
            }
        };
        auto steps = [&](const Mats& dx, const Mats& ds) {
            double ap = 1, ad = 1;
            for (int b = 0; b < nb; ++b) {
                ap = std::min(ap, 0.95 * max_step(x[b], dx[b]));
                ad = std::min(ad, 0.95 * max_step(s[b], ds[b]));
            }
            return std::pair{ap, ad};
        };

        Mats dx, ds;
        RVector dy;
        direction(0.0, nullptr, nullptr, dx, ds, dy);
        auto [ap, ad] = steps(dx, ds);
        Mats xa = x, sa = s;
        for (int b = 0; b < nb; ++b) {
            xa[b] += ap * dx[b];
            sa[b] += ad * ds[b];
        }
        const double mu_aff = inner(xa, sa) / total;
        const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
        Mats dxp = dx, dsp = ds;
        direction(sigma, &dxp, &dsp, dx, ds, dy);
        std::tie(ap, ad) = steps(dx, ds);
        for (int b = 0; b < nb; ++b) {
            x[b] += ap * dx[b];
            s[b] += ad * ds[b];
        }
        y += ad * dy;
    }

    sol.y.assign(y.data(), y.data() + nv);
    sol.blocks = apply(y);
    sol.multipliers = x;
    sol.min_eigenvalue = sol.blocks.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    for (const auto& b : sol.blocks) {
        const double m = b.rows() == 1 ? b(0, 0)
                                       : Eigen::SelfAdjointEigenSolver<RMatrix>(b, Eigen::EigenvaluesOnly).eigenvalues()(0);
        sol.min_eigenvalue = std::min(sol.min_eigenvalue, m);
    }
    if (!sol.blocks.empty()) sol.matrix = sol.blocks[0];
    if (!sol.converged)
        fail("SolverStalled", "SDP solver did not reach the requested tolerance",
             "primal_residual=" + std::to_string(sol.primal_residual) +
                 " dual_residual=" + std::to_string(sol.dual_residual) + " gap=" + std::to_string(sol.gap));
    return sol;
}

SdpSolution solve_lmi(const LmiProblem& p, const SdpOptions& opt) {
    if (opt.method == SdpMethod::Ipm) return solve_lmi_ipm(p, opt);
    if (opt.method == SdpMethod::Admm) return solve_lmi_admm(p, opt);
    long long nnz = 0;
    for (int b : p.blocks) nnz += 1LL * b * b;
    if (nnz <= 12000 && p.num_vars <= 2500) {
        try {
            return solve_lmi_ipm(p, opt);
        } catch (const Error& e) {
            if (e.code() != "SolverStalled") throw;
        }
    }
    SdpOptions first_order = opt;
    first_order.tol = std::max(opt.tol, 1e-7);
    return solve_lmi_admm(p, first_order);
}

} // namespace hbar
