#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hbar/beta.hpp"

namespace oracle {

// lambda_max of P_sym (T (x) 1) P_sym on (C^d)^{(x)M}, built densely.
inline double dense_definetti(const hbar::Realization& r, const std::vector<double>& w, int copies) {
    const int d = r.dim();
    int full = 1;
    for (int k = 0; k < copies; ++k) full *= d;
    hbar::RMatrix t = hbar::two_body_matrix(r, w);
    auto digits = [&](int idx) {
        std::vector<int> dg(copies);
        for (int k = copies - 1; k >= 0; --k) {
            dg[k] = idx % d;
            idx /= d;
        }
        return dg;
    };
    auto compose = [&](const std::vector<int>& dg) {
        int idx = 0;
        for (int x : dg) idx = idx * d + x;
        return idx;
    };
    hbar::RMatrix h = hbar::RMatrix::Zero(full, full);
    for (int col = 0; col < full; ++col) {
        auto c = digits(col);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                double v = t(p * d + q, c[0] * d + c[1]);
                if (v == 0) continue;
                auto rdg = c;
                rdg[0] = p;
                rdg[1] = q;
                h(compose(rdg), col) += v;
            }
    }
    hbar::RMatrix proj = hbar::RMatrix::Zero(full, full);
    std::vector<int> perm(copies);
    std::iota(perm.begin(), perm.end(), 0);
    int nperm = 0;
    do {
        ++nperm;
        for (int col = 0; col < full; ++col) {
            auto c = digits(col), pc = c;
            for (int k = 0; k < copies; ++k) pc[k] = c[perm[k]];
            proj(compose(pc), col) += 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    proj /= double(nperm);
    Eigen::SelfAdjointEigenSolver<hbar::RMatrix> ps(proj);
    std::vector<int> keep;
    for (int i = 0; i < full; ++i)
        if (ps.eigenvalues()(i) > 0.5) keep.push_back(i);
    hbar::RMatrix v(full, keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) v.col(j) = ps.eigenvectors().col(keep[j]);
    hbar::RMatrix red = v.transpose() * h * v;
    red = 0.5 * (red + red.transpose());
    Eigen::SelfAdjointEigenSolver<hbar::RMatrix> es(red);
    return es.eigenvalues().maxCoeff();
}

} // namespace oracle
