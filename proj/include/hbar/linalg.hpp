#pragma once

#include <functional>

#include <Eigen/Dense>

#include "hbar/pauli.hpp"

namespace hbar {

using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct EigenPair {
    double value = 0;
    CVector vector;
};

// Largest eigenvalue of a Hermitian matrix.
EigenPair top_eigen(const CMatrix& h);
// Eigenvector whose eigenvalue has the largest magnitude.
EigenPair top_abs_eigen(const CMatrix& h);

struct RealEigenPair {
    double value = 0;
    RVector vector;
    double residual = 0;
    int iterations = 0;
};

using LinearOp = std::function<void(const RVector& in, RVector& out)>;

// Largest eigenvalue of a real symmetric operator: dense for dim <= 64,
// restarted Lanczos with full reorthogonalization otherwise.
RealEigenPair top_eigen_symmetric(const LinearOp& op, Eigen::Index dim, double tol = 1e-10,
                                  int krylov = 60, int max_restarts = 200);

// Eigenvalues clipped into the probability simplex (Frobenius projection onto density matrices).
CMatrix project_density(const CMatrix& h);

} // namespace hbar
