#include "hbar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hbar {

EigenPair top_eigen(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto n = h.rows();
    return {es.eigenvalues()(n - 1), es.eigenvectors().col(n - 1)};
}

EigenPair top_abs_eigen(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto n = h.rows();
    const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(n - 1);
    if (std::abs(lo) > std::abs(hi)) return {lo, es.eigenvectors().col(0)};
    return {hi, es.eigenvectors().col(n - 1)};
}

RealEigenPair top_eigen_symmetric(const LinearOp& op, Eigen::Index dim, double tol, int krylov,
                                  int max_restarts) {
    RealEigenPair out;
    if (dim <= 64) {
        RMatrix m(dim, dim);
        RVector e = RVector::Zero(dim), col(dim);
        for (Eigen::Index j = 0; j < dim; ++j) {
            e.setZero();
            e(j) = 1;
            op(e, col);
            m.col(j) = col;
        }
        m = 0.5 * (m + m.transpose());
        Eigen::SelfAdjointEigenSolver<RMatrix> es(m);
        out.value = es.eigenvalues()(dim - 1);
        out.vector = es.eigenvectors().col(dim - 1);
        op(out.vector, col);
        out.residual = (col - out.value * out.vector).norm();
        return out;
    }

    // Deterministic, generic start vector.
    RVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = 1.0 + 0.01 * std::sin(0.7 * double(i) + 0.3);
    v.normalize();
    const int k = int(std::min<Eigen::Index>(krylov, dim));
    RVector w(dim);
    for (int restart = 0; restart < max_restarts; ++restart) {
        RMatrix q(dim, k);
        std::vector<double> alpha, beta;
        q.col(0) = v;
        int steps = 0;
        for (int j = 0; j < k; ++j) {
            op(q.col(j), w);
            ++out.iterations;
            double a = q.col(j).dot(w);
            alpha.push_back(a);
            // Full reorthogonalization, twice for stability.
            for (int pass = 0; pass < 2; ++pass) w -= q.leftCols(j + 1) * (q.leftCols(j + 1).transpose() * w);
            steps = j + 1;
            double b = w.norm();
            if (j + 1 == k || b < 1e-14) break;
            beta.push_back(b);
            q.col(j + 1) = w / b;
        }
        RMatrix t = RMatrix::Zero(steps, steps);
        for (int j = 0; j < steps; ++j) {
            t(j, j) = alpha[j];
            if (j + 1 < steps) t(j, j + 1) = t(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<RMatrix> es(t);
        out.value = es.eigenvalues()(steps - 1);
        v = q.leftCols(steps) * es.eigenvectors().col(steps - 1);
        v.normalize();
        op(v, w);
        out.residual = (w - out.value * v).norm();
        out.vector = v;
        if (out.residual < tol) break;
    }
    return out;
}

CMatrix project_density(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
    RVector lam = es.eigenvalues();
    // Euclidean projection of lam onto {x >= 0, sum x = 1}.
    std::vector<double> s(lam.data(), lam.data() + lam.size());
    std::sort(s.begin(), s.end(), std::greater<>());
    double acc = 0, theta = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += s[i];
        double t = (acc - 1.0) / double(i + 1);
        if (s[i] - t > 0) theta = t;
    }
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::max(0.0, lam(i) - theta);
    return es.eigenvectors() * lam.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace hbar
