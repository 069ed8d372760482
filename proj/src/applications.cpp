#include <algorithm>
#include <cmath>
#include <numeric>

#include "hbar/applications.hpp"
#include "hbar/error.hpp"
#include "hbar/exact_lp.hpp"

namespace hbar {

void check_density(const CMatrix& rho) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) fail("BadState", "density matrix must be square");
    if ((rho - rho.adjoint()).norm() > 1e-10) fail("BadState", "density matrix is not Hermitian");
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-10) fail("BadState", "density matrix trace differs from 1");
    const double lo = Eigen::SelfAdjointEigenSolver<CMatrix>(rho, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (lo < -1e-10) fail("BadState", "density matrix has a negative eigenvalue", std::to_string(lo));
}

namespace {

Weights exact_weights(const std::vector<double>& w) {
    Weights out;
    for (double x : w) {
        if (!(x >= 0) || !std::isfinite(x)) fail("NegativeWeight", "weights must be finite and nonnegative");
        out.push_back(Rational(x));
    }
    return out;
}

double expectation(const CMatrix& rho, const CMatrix& op) { return (rho * op).trace().real(); }

std::vector<std::vector<double>> maximal_stable_vectors(const Graph& g) {
    std::vector<std::vector<double>> out;
    for (Mask s : enumerate_stable_sets(g).maximal) {
        std::vector<double> v(g.order(), 0.0);
        for (Mask t = s; t; t &= t - 1) v[lowest(t)] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

Threshold beta_threshold(const Graph& g, const std::vector<double>& w, const DeciderOptions& opt) {
    if (int(w.size()) != g.order()) fail("DimMismatch", "weight vector length differs from the vertex count");
    const Weights ew = exact_weights(w);
    Threshold t;
    if (decide(g, opt).status == HbarStatus::Perfect) {
        t.value = to_double(alpha(g, ew).value);
        t.source = "alpha";
        t.certified = true;
        return t;
    }
    BetaBracket b = beta_bracket(g, w, opt.bracket);
    t.value = b.upper;
    t.source = b.upper_src;
    return t;
}

WitnessReport nonlinear_witness_point(const Graph& g, const std::vector<double>& p, const std::vector<double>& w,
                                      const DeciderOptions& opt) {
    if (int(p.size()) != g.order()) fail("DimMismatch", "point length differs from the vertex count");
    WitnessReport r;
    r.point = p;
    r.weights = w;
    r.threshold = beta_threshold(g, w, opt);
    for (std::size_t i = 0; i < p.size(); ++i) r.value += w[i] * p[i];
    if (r.threshold.certified) {
        for (const auto& f : stab_facets(g).facets) {
            double lhs = 0;
            for (std::size_t i = 0; i < p.size(); ++i) lhs += f.normal[i] * p[i];
            if (lhs > f.rhs + 1e-9) r.violated.push_back({f.normal, f.rhs, f.rhs - lhs});
        }
    }
    r.entangled = !r.violated.empty() || r.value > r.threshold.value + 1e-9;
    return r;
}

WitnessReport nonlinear_witness(const CMatrix& rho, const Realization& a, const Realization& b,
                                const std::vector<double>& w, const DeciderOptions& opt) {
    if (a.size() != b.size() || !(a.graph() == b.graph()))
        fail("GraphMismatch", "the two string sets have different frustration graphs");
    if (rho.rows() != a.dim() * b.dim()) fail("DimMismatch", "state dimension differs from 2^(l+l')");
    check_density(rho);
    std::vector<double> p;
    for (int i = 0; i < a.size(); ++i) p.push_back(std::abs(expectation(rho, fixtures::kron(a.dense()[i], b.dense()[i]))));
    return nonlinear_witness_point(a.graph(), p, w, opt);
}

BellReport bell_diagonal_classify(const std::vector<double>& p) {
    if (p.size() != 4) fail("NotDistribution", "Bell diagonal states take four weights");
    double total = 0;
    for (double x : p) {
        if (!(x >= -1e-12)) fail("NotDistribution", "weights must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1) > 1e-9) fail("NotDistribution", "weights must sum to 1");
    const CMatrix rho = fixtures::bell_diagonal(p);
    BellReport r;
    for (const char* s : {"XX", "YY", "ZZ"}) r.point.push_back(std::abs(expectation(rho, to_dense(PauliString::parse(s)))));
    r.algebraic = *std::max_element(p.begin(), p.end()) > 0.5 + 1e-12;
    // STAB(K3) is x + y + z <= 1; the sum equals max(4 p_max - 1, 1 - 4 p_min).
    r.polytope = r.point[0] + r.point[1] + r.point[2] > 1 + 4e-12;
    if (r.algebraic != r.polytope) fail("InternalError", "Bell diagonal tests disagree");
    r.entangled = r.algebraic;
    return r;
}

GhzReport ghz_diagonal_classify(const std::vector<double>& p) {
    if (p.size() != 8) fail("NotDistribution", "GHZ diagonal states take eight weights");
    double total = 0;
    for (double x : p) {
        if (!(x >= -1e-12)) fail("NotDistribution", "weights must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1) > 1e-9) fail("NotDistribution", "weights must sum to 1");
    const auto states = fixtures::ghz_states();
    CMatrix rho = CMatrix::Zero(8, 8);
    for (int k = 0; k < 8; ++k) rho += p[k] * fixtures::projector(states[k]);
    GhzReport r;
    for (const auto& s : fixtures::ghz_stabilizers()) {
        int sign = 1;
        const PauliString o = parse_signed(s, sign);
        r.point.push_back(std::abs(expectation(rho, to_dense(o))));
        r.value += r.point.back();
    }
    const double pmax = *std::max_element(p.begin(), p.end());
    r.algebraic = pmax > 0.5 + 1e-12;
    r.genuine = r.value > 3 + 1e-9;
    if (std::abs(pmax - 0.5) > 1e-8 && r.algebraic != r.genuine) fail("InternalError", "GHZ diagonal tests disagree");
    return r;
}

QutritReport qutrit_cover_witness(const CMatrix& rho) {
    if (rho.rows() != 9 || rho.cols() != 9) fail("BadDimension", "qutrit witness needs a 9x9 state");
    check_density(rho);
    auto local = [](int skip) {
        int a = -1, b = -1;
        for (int k = 0; k < 3; ++k)
            if (k != skip) (a < 0 ? a : b) = k;
        std::vector<CMatrix> ops(3, CMatrix::Zero(3, 3));
        ops[0](a, b) = ops[0](b, a) = 1;
        ops[1](a, b) = cplx(0, -1);
        ops[1](b, a) = cplx(0, 1);
        ops[2](a, a) = 1;
        ops[2](b, b) = -1;
        return ops;
    };
    QutritReport r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto a = local(i), b = local(j);
            for (int k = 0; k < 3; ++k) r.lhs += std::abs(expectation(rho, fixtures::kron(a[k], b[k])));
        }
    r.entangled = r.lhs > 4 + 1e-9;
    return r;
}

MultipartiteCriterion multipartite_criterion(const std::vector<std::string>& stabilizers, const std::vector<double>& w,
                                             const DeciderOptions& opt) {
    MultipartiteCriterion c;
    for (const auto& s : stabilizers) {
        int sign = 1;
        c.stabilizers.push_back(parse_signed(s, sign));
        c.signs.push_back(sign);
    }
    if (c.stabilizers.empty()) fail("EmptyInput", "no stabilizers given");
    if (w.size() != c.stabilizers.size()) fail("DimMismatch", "weight vector length differs from the stabilizer count");
    c.weights = w;
    const int parties = c.stabilizers[0].len;
    if (parties < 2 || parties > 5) fail("SizeOverflow", "multipartite criteria take 2 to 5 parties");
    for (const auto& s : c.stabilizers)
        if (s.len != parties) fail("DimMismatch", "stabilizers act on different numbers of parties");
    for (std::size_t i = 0; i < c.stabilizers.size(); ++i)
        for (std::size_t j = i + 1; j < c.stabilizers.size(); ++j)
            if (anticommutes(c.stabilizers[i], c.stabilizers[j]))
                fail("NonCommutingStabilizers", "stabilizers must commute",
                     c.stabilizers[i].str() + " " + c.stabilizers[j].str());

    c.biseparable = -std::numeric_limits<double>::infinity();
    c.fully_separable = std::numeric_limits<double>::infinity();
    const int full = (1 << parties) - 1;
    for (int side = 1; side < full; ++side) {
        // Party 0 is the most significant qubit; keep it on the first side.
        if (!((side >> (parties - 1)) & 1)) continue;
        Bipartition bp;
        std::string keep;
        for (int q = 0; q < parties; ++q)
            if ((side >> (parties - 1 - q)) & 1) bp.side.push_back(q);
        std::vector<PauliString> local;
        for (const auto& s : c.stabilizers) {
            std::string t;
            for (int q : bp.side) t += s.letter(q);
            local.push_back(PauliString::parse(t));
        }
        bp.graph = frustration_graph(local);
        bp.threshold = beta_threshold(bp.graph, w, opt);
        c.biseparable = std::max(c.biseparable, bp.threshold.value);
        c.fully_separable = std::min(c.fully_separable, bp.threshold.value);
        c.bipartitions.push_back(std::move(bp));
    }
    return c;
}

MultipartiteReport evaluate_multipartite(const MultipartiteCriterion& c, const std::vector<double>& expectations) {
    if (expectations.size() != c.stabilizers.size()) fail("DimMismatch", "expectation count differs from the stabilizers");
    MultipartiteReport r;
    for (std::size_t i = 0; i < expectations.size(); ++i) {
        r.point.push_back(std::abs(expectations[i]));
        r.value += c.weights[i] * r.point.back();
    }
    r.genuine = r.value > c.biseparable + 1e-9;
    r.not_fully_separable = r.value > c.fully_separable + 1e-9;
    return r;
}

namespace {

std::vector<double> stabilizer_expectations(const MultipartiteCriterion& c, const CMatrix& rho) {
    if (rho.rows() != (1 << c.stabilizers[0].len)) fail("DimMismatch", "state dimension differs from 2^parties");
    check_density(rho);
    std::vector<double> e;
    for (std::size_t i = 0; i < c.stabilizers.size(); ++i)
        e.push_back(c.signs[i] * expectation(rho, to_dense(c.stabilizers[i])));
    return e;
}

std::vector<double> project_simplex(std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double acc = 0, theta = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        acc += u[k];
        const double t = (acc - 1) / double(k + 1);
        if (u[k] - t > 0) theta = t;
    }
    for (double& x : v) x = std::max(0.0, x - theta);
    return v;
}

} // namespace

MultipartiteReport evaluate_multipartite(const MultipartiteCriterion& c, const CMatrix& rho) {
    return evaluate_multipartite(c, stabilizer_expectations(c, rho));
}

double lambda_gap(const std::vector<PauliString>& ops, long long max_patterns) {
    const int k = int(ops.size());
    if (k == 0) return 0;
    if (k - 1 >= 62 || (1LL << (k - 1)) > max_patterns)
        fail("BudgetExceeded", "too many sign patterns", std::to_string(k) + " operators");
    std::vector<CMatrix> dense;
    for (const auto& o : ops) dense.push_back(to_dense(o));
    double best = 0;
    // The gap is invariant under a global sign flip, so the first sign stays +1.
    for (long long pat = 0; pat < (1LL << (k - 1)); ++pat) {
        CMatrix h = dense[0];
        for (int i = 1; i < k; ++i) h += (((pat >> (i - 1)) & 1) ? -1.0 : 1.0) * dense[i];
        const auto ev = Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
        best = std::max(best, ev(ev.size() - 1) - ev(0));
    }
    return best;
}

EntanglementEstimate entanglement_estimates(const MultipartiteCriterion& c, const std::vector<double>& expectations) {
    const int n = int(c.stabilizers.size());
    if (int(expectations.size()) != n) fail("DimMismatch", "expectation count differs from the stabilizers");
    if (n > 20) fail("BudgetExceeded", "entanglement estimates take at most 20 stabilizers");
    std::vector<std::vector<double>> verts;
    for (const auto& bp : c.bipartitions) {
        if (!bp.threshold.certified)
            fail("NotCertified", "a bipartition graph is not certified hbar-perfect");
        for (auto& v : maximal_stable_vectors(bp.graph)) verts.push_back(std::move(v));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<double> q;
    for (double e : expectations) q.push_back(std::abs(e));
    const int k = int(verts.size());

    EntanglementEstimate est;
    // L1 distance to the down-closed hull: min sum s_i, s_i + (V lambda)_i >= q_i, lambda in the simplex.
    ExactLp lp;
    lp.c.assign(n + k, 0);
    for (int i = 0; i < n; ++i) lp.c[i] = -1;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(n + k, 0);
        row[i] = 1;
        for (int j = 0; j < k; ++j) row[n + j] = verts[j][i];
        lp.add_row(std::move(row), Sense::Ge, Rational(q[i]));
    }
    std::vector<Rational> simplex(n + k, 0);
    for (int j = 0; j < k; ++j) simplex[n + j] = 1;
    lp.add_row(simplex, Sense::Eq, 1);
    est.taxicab_distance = -to_double(solve_exact_lp(lp).value);

    // Euclidean distance: min over the simplex of |(q - V lambda)_+|^2 by projected gradient.
    double lip = 0;
    for (const auto& v : verts) lip += std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    lip = 2 * std::max(lip, 1.0);
    std::vector<double> lam(k, 1.0 / k);
    auto residual = [&](const std::vector<double>& l) {
        std::vector<double> r(q);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) r[i] -= l[j] * verts[j][i];
        for (double& x : r) x = std::max(0.0, x);
        return r;
    };
    auto value = [](const std::vector<double>& r) { return std::inner_product(r.begin(), r.end(), r.begin(), 0.0); };
    double fval = value(residual(lam));
    for (int it = 0; it < 100000; ++it) {
        const auto r = residual(lam);
        std::vector<double> next(k);
        for (int j = 0; j < k; ++j) {
            double g = 0;
            for (int i = 0; i < n; ++i) g -= 2 * r[i] * verts[j][i];
            next[j] = lam[j] - g / lip;
        }
        next = project_simplex(next);
        const double fn = value(residual(next));
        double move = 0;
        for (int j = 0; j < k; ++j) move = std::max(move, std::abs(next[j] - lam[j]));
        lam = next;
        fval = fn;
        if (move < 1e-12) break;
    }
    est.euclidean_distance = std::sqrt(fval);

    std::vector<PauliString> ops = c.stabilizers;
    est.lambda_gap = lambda_gap(ops);
    double hs = 0;
    for (const auto& a : ops)
        for (const auto& b : ops) {
            const double t = (to_dense(a) * to_dense(b)).trace().real();
            hs += t * t;
        }
    est.hs_norm = std::pow(hs, 0.25);
    est.trace_lower = est.lambda_gap > 0 ? est.taxicab_distance / est.lambda_gap : 0;
    est.hs_lower = est.hs_norm > 0 ? est.euclidean_distance / est.hs_norm : 0;
    return est;
}

EntanglementEstimate entanglement_estimates(const MultipartiteCriterion& c, const CMatrix& rho) {
    return entanglement_estimates(c, stabilizer_expectations(c, rho));
}

DeltaBounds delta_bounds(const Graph& g, bool refine, BasisLevel level, const BracketOptions& bracket) {
    if (g.order() > 10) fail("SizeOverflow", "delta bounds are limited to 10 vertices");
    const Graph gc = complement(g);
    DeltaBounds d;
    d.alpha_star = fractional_packing(gc);
    d.lower = 1.0 / to_double(d.alpha_star);
    d.theta = lovasz_theta(gc, std::vector<double>(g.order(), 1.0)).value;
    d.upper = 1.0 / d.theta;
    if (refine) d.refined_upper = omega_r(g, level).inverse;
    if (is_vertex_transitive(g)) {
        BetaBracket b = beta_bracket(g, std::vector<double>(g.order(), 1.0), bracket);
        d.transitive_lower = b.lower / g.order();
        d.transitive_upper = b.upper / g.order();
    }
    return d;
}

UncertaintyResult uncertainty_lp(const Graph& g, int target, const std::vector<Rational>& caps,
                                 const DeciderOptions& opt) {
    const int n = g.order();
    if (target < 0 || target >= n) fail("BadIndex", "target vertex out of range", std::to_string(target));
    if (int(caps.size()) != n) fail("DimMismatch", "cap vector length differs from the vertex count");
    ExactLp lp;
    lp.c.assign(n, 0);
    lp.c[target] = -1;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> row(n, 0);
        row[j] = 1;
        const bool capped = j != target;
        if (capped && (caps[j] < 0 || caps[j] > 1)) fail("DomainError", "caps must lie in [0,1]");
        lp.add_row(std::move(row), Sense::Le, capped ? caps[j] : Rational(1));
    }
    // normal . (1 - x) <= rhs  <=>  -normal . x <= rhs - sum normal.
    for (const auto& f : stab_facets(g).facets) {
        std::vector<Rational> row(n);
        Rational total = 0;
        for (int j = 0; j < n; ++j) {
            row[j] = -f.normal[j];
            total += f.normal[j];
        }
        lp.add_row(std::move(row), Sense::Le, Rational(f.rhs) - total);
    }
    const ExactLpResult res = solve_exact_lp(lp);
    if (res.status != LpStatus::Optimal) fail("Infeasible", "no state satisfies the variance caps");
    UncertaintyResult r;
    r.feasible = true;
    r.min_variance = -res.value;
    r.variances = res.x;
    r.certified = decide(g, opt).status == HbarStatus::Perfect;
    return r;
}

double exact_ground_energy(const std::vector<double>& a, const std::vector<PauliString>& strings) {
    if (a.size() != strings.size() || strings.empty()) fail("DimMismatch", "coefficient count differs from the strings");
    CMatrix h = CMatrix::Zero(1 << strings[0].len, 1 << strings[0].len);
    for (std::size_t i = 0; i < a.size(); ++i) h += a[i] * to_dense(strings[i]);
    return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

namespace {

void finish(GroundBound& gb, const std::vector<double>& a, const std::vector<PauliString>& strings,
            const GroundOptions& opt) {
    gb.bound = -std::sqrt(gb.objective);
    if (opt.exact && strings[0].len <= 6) gb.exact = exact_ground_energy(a, strings);
}

} // namespace

GroundBound ground_bound(const std::vector<double>& a, const std::vector<PauliString>& strings, const GroundOptions& opt) {
    const int n = int(strings.size());
    if (int(a.size()) != n || n == 0) fail("DimMismatch", "coefficient count differs from the strings");
    const Graph g = frustration_graph(strings);
    std::vector<Mask> stable = enumerate_stable_sets(g).maximal;
    std::vector<double> a2(n);
    for (int i = 0; i < n; ++i) a2[i] = a[i] * a[i];

    RVector w = RVector::Constant(n, 1.0 / (n + 1));
    const int m = int(stable.size()) + n;
    auto slacks = [&](const RVector& x, RVector& s) {
        s.resize(stable.size());
        for (std::size_t k = 0; k < stable.size(); ++k) {
            double t = 1;
            for (Mask b = stable[k]; b; b &= b - 1) t -= x(lowest(b));
            s(k) = t;
        }
    };
    auto feasible = [&](const RVector& x) {
        RVector s;
        slacks(x, s);
        return (x.array() > opt.eps).all() && (s.array() > 0).all();
    };
    auto barrier = [&](const RVector& x, double t) {
        RVector s;
        slacks(x, s);
        double f = 0;
        for (int i = 0; i < n; ++i) f += t * a2[i] / x(i) - std::log(x(i) - opt.eps);
        for (Eigen::Index k = 0; k < s.size(); ++k) f -= std::log(s(k));
        return f;
    };
    int stages = 0;
    for (double t = 1; double(m) / t > opt.gap_tol; t *= 10) {
        if (++stages > 40) fail("SolverStalled", "barrier schedule did not converge");
        for (int it = 0; it < 200; ++it) {
            RVector s;
            slacks(w, s);
            RVector grad(n);
            RMatrix hess = RMatrix::Zero(n, n);
            for (int i = 0; i < n; ++i) {
                const double d = w(i) - opt.eps;
                grad(i) = -t * a2[i] / (w(i) * w(i)) - 1 / d;
                hess(i, i) = 2 * t * a2[i] / (w(i) * w(i) * w(i)) + 1 / (d * d);
            }
            for (std::size_t k = 0; k < stable.size(); ++k) {
                RVector e = RVector::Zero(n);
                for (Mask b = stable[k]; b; b &= b - 1) e(lowest(b)) = 1;
                grad += e / s(k);
                hess += e * e.transpose() / (s(k) * s(k));
            }
            const RVector step = -hess.ldlt().solve(grad);
            const double dec = -grad.dot(step);
            if (dec / 2 < opt.newton_tol) break;
            double len = 1;
            const double f0 = barrier(w, t);
            while (!feasible(w + len * step) || barrier(w + len * step, t) > f0 - 0.25 * len * dec) {
                len *= 0.5;
                if (len < 1e-20) break;
            }
            if (len < 1e-20) break;
            w += len * step;
        }
    }
    GroundBound gb;
    gb.weights.assign(w.data(), w.data() + n);
    for (int i = 0; i < n; ++i) gb.objective += a2[i] / w(i);
    gb.certified = decide(g).status == HbarStatus::Perfect;
    finish(gb, a, strings, opt);
    return gb;
}

GroundBound ground_bound_for_weights(const std::vector<double>& a, const std::vector<PauliString>& strings,
                                     const std::vector<double>& w, const GroundOptions& opt) {
    const int n = int(strings.size());
    if (int(a.size()) != n || int(w.size()) != n || n == 0) fail("DimMismatch", "coefficient count differs from the strings");
    const Graph g = frustration_graph(strings);
    const Threshold beta = beta_threshold(g, w);
    GroundBound gb;
    gb.weights = w;
    for (int i = 0; i < n; ++i) {
        if (!(w[i] > 0)) fail("DomainError", "weights must be positive");
        gb.objective += a[i] * a[i] / w[i];
    }
    gb.objective *= beta.value;
    gb.certified = beta.certified;
    finish(gb, a, strings, opt);
    return gb;
}

} // namespace hbar
