#include <algorithm>
#include <cmath>
#include <limits>

#include "hbar/error.hpp"
#include "hbar/moment.hpp"

namespace hbar {

namespace {

struct Fit {
    CMatrix rho;
    double residual;
};

// Accelerated projected gradient for min sum_i (tr(rho S_i) - b_i)^2 over density matrices.
Fit fit_density(const std::vector<CMatrix>& s, const std::vector<double>& b, double lipschitz, const ExtractOptions& opt) {
    const int dim = int(s[0].rows());
    const int n = int(s.size());
    auto residuals = [&](const CMatrix& rho) {
        std::vector<double> r(n);
        for (int i = 0; i < n; ++i) r[i] = (rho * s[i]).trace().real() - b[i];
        return r;
    };
    auto value = [&](const std::vector<double>& r) {
        double v = 0;
        for (double x : r) v += x * x;
        return v;
    };
    CMatrix x = CMatrix::Identity(dim, dim) / double(dim);
    CMatrix z = x;
    double t = 1;
    double fx = value(residuals(x));
    for (int it = 0; it < opt.max_iter && fx > opt.tol; ++it) {
        auto r = residuals(z);
        CMatrix grad = CMatrix::Zero(dim, dim);
        for (int i = 0; i < n; ++i) grad += (2.0 * r[i]) * s[i];
        CMatrix next = project_density(z - grad / lipschitz);
        const double fn = value(residuals(next));
        const double tn = 0.5 * (1 + std::sqrt(1 + 4 * t * t));
        if (fn > fx) {
            // Restart momentum on an increase.
            z = x;
            t = 1;
            continue;
        }
        z = next + ((t - 1) / tn) * (next - x);
        const double gain = fx - fn;
        x = next;
        fx = fn;
        t = tn;
        if (gain < 1e-16 && it > 50) break;
    }
    return {x, fx};
}

} // namespace

ExtractResult extract_state(const Realization& r, const std::vector<double>& targets,
                            const std::vector<std::vector<int>>& sign_hints, const ExtractOptions& opt) {
    const int n = r.size();
    if (int(targets.size()) != n) fail("DimMismatch", "target length differs from the string count");
    if (r.length() > 5) fail("SizeOverflow", "state extraction is limited to 5 qubits");
    const auto& s = r.dense();
    std::vector<double> amp(n);
    std::vector<int> free_idx;
    for (int i = 0; i < n; ++i) {
        amp[i] = std::sqrt(std::clamp(targets[i], 0.0, 1.0));
        if (amp[i] > 1e-9) free_idx.push_back(i);
    }
    RMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = (s[i] * s[j]).trace().real();
    const double lipschitz =
        2.0 * std::max(1.0, Eigen::SelfAdjointEigenSolver<RMatrix>(gram, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff());

    ExtractResult best;
    best.residual = std::numeric_limits<double>::infinity();
    auto attempt = [&](const std::vector<int>& signs) {
        std::vector<double> b(n);
        for (int i = 0; i < n; ++i) b[i] = (signs[i] < 0 ? -1.0 : 1.0) * amp[i];
        Fit f = fit_density(s, b, lipschitz, opt);
        ++best.tried;
        if (f.residual < best.residual) {
            best.residual = f.residual;
            best.signs = signs;
            best.state = top_eigen(f.rho).vector.normalized();
        }
    };
    const double good = opt.threshold.value_or(1e-10);
    for (const auto& h : sign_hints) {
        if (int(h.size()) != n) fail("DimMismatch", "sign hint length differs from the string count");
        attempt(h);
        if (best.residual <= good) break;
    }
    if (best.residual > good && int(free_idx.size()) <= opt.max_full_traversal) {
        const std::size_t total = std::size_t(1) << free_idx.size();
        for (std::size_t mask = 0; mask < total && best.residual > good; ++mask) {
            std::vector<int> signs(n, 1);
            for (std::size_t q = 0; q < free_idx.size(); ++q)
                if ((mask >> q) & 1) signs[free_idx[q]] = -1;
            attempt(signs);
        }
    }
    if (best.tried == 0) attempt(std::vector<int>(n, 1));
    if (opt.threshold && best.residual > *opt.threshold)
        fail("NoGoodSign", "no sign vector reproduces the targets", "residual=" + std::to_string(best.residual));
    return best;
}

} // namespace hbar
