#include <algorithm>
#include <cmath>

#include "hbar/beta.hpp"
#include "hbar/error.hpp"

namespace hbar {

BoseBasis::BoseBasis(int d, int copies) : d_(d), m_(copies) {
    if (d < 1 || d > 4) fail("BudgetExceeded", "occupation basis supports local dimension <= 4");
    if (copies < 1 || copies > 65535) fail("BudgetExceeded", "copy count out of range");
    std::vector<std::uint16_t> occ(d, 0);
    // Enumerate compositions of M into d parts.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == d - 1) {
            occ[pos] = std::uint16_t(left);
            states_.push_back(occ);
            return;
        }
        for (int k = left; k >= 0; --k) {
            occ[pos] = std::uint16_t(k);
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, copies);
    std::sort(states_.begin(), states_.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    for (const auto& s : states_) keys_.push_back(key(s));
}

std::uint64_t BoseBasis::key(const std::vector<std::uint16_t>& occ) const {
    std::uint64_t k = 0;
    for (auto x : occ) k = (k << 16) | x;
    return k;
}

std::size_t BoseBasis::index(const std::vector<std::uint16_t>& occ) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key(occ));
    if (it == keys_.end() || *it != key(occ)) fail("Internal", "occupation vector outside the basis");
    return std::size_t(it - keys_.begin());
}

double BoseBasis::dimension(int d, int copies) {
    // C(M + d - 1, d - 1)
    double v = 1;
    for (int k = 1; k <= d - 1; ++k) v = v * double(copies + k) / double(k);
    return std::round(v);
}

RMatrix two_body_matrix(const Realization& r, const std::vector<double>& w) {
    const int d = r.dim();
    RMatrix t = RMatrix::Zero(d * d, d * d);
    const auto& s = r.dense();
    for (int i = 0; i < r.size(); ++i) {
        if (w[i] == 0) continue;
        for (int p = 0; p < d; ++p)
            for (int rr = 0; rr < d; ++rr) {
                cplx a = s[i](p, rr);
                if (a == cplx(0)) continue;
                for (int q = 0; q < d; ++q)
                    for (int ss = 0; ss < d; ++ss) {
                        cplx b = s[i](q, ss);
                        if (b == cplx(0)) continue;
                        // Products of two entries of the same Pauli string are real.
                        t(p * d + q, rr * d + ss) += w[i] * (a * b).real();
                    }
            }
    }
    return t;
}

TwoBodyOperator::TwoBodyOperator(const BoseBasis& basis, const RMatrix& t) : basis_(basis) {
    const int d = basis.d();
    by_rs_.resize(d * d);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s)
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    double v = t(p * d + q, r * d + s);
                    if (v != 0) by_rs_[r * d + s].push_back({p, q, v});
                }
    const double m = basis.copies();
    scale_ = m >= 2 ? 1.0 / (m * (m - 1) / 2) : 0.0;
}

void TwoBodyOperator::apply(const RVector& in, RVector& out) const {
    const int d = basis_.d();
    out = RVector::Zero(in.size());
    std::vector<std::uint16_t> occ;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const double c = in(Eigen::Index(i));
        if (c == 0) continue;
        occ = basis_.occupation(i);
        // 1/2 sum T_{pq,rs} a_p^+ a_q^+ a_s a_r
        for (int r = 0; r < d; ++r) {
            if (occ[r] == 0) continue;
            const double a1 = std::sqrt(double(occ[r]));
            --occ[r];
            for (int s = 0; s < d; ++s) {
                if (occ[s] == 0) continue;
                const double a2 = std::sqrt(double(occ[s]));
                --occ[s];
                for (const auto& term : by_rs_[r * d + s]) {
                    ++occ[term.q];
                    const double a3 = std::sqrt(double(occ[term.q]));
                    ++occ[term.p];
                    const double a4 = std::sqrt(double(occ[term.p]));
                    out(Eigen::Index(basis_.index(occ))) += 0.5 * scale_ * term.value * a1 * a2 * a3 * a4 * c;
                    --occ[term.p];
                    --occ[term.q];
                }
                ++occ[s];
            }
            ++occ[r];
        }
    }
}

RMatrix TwoBodyOperator::dense() const {
    const auto n = Eigen::Index(basis_.size());
    RMatrix m(n, n);
    RVector e(n), col(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        e.setZero();
        e(j) = 1;
        apply(e, col);
        m.col(j) = col;
    }
    return m;
}

CMatrix TwoBodyOperator::reduced(const RVector& psi) const {
    const int d = basis_.d();
    CMatrix rho = CMatrix::Zero(d, d);
    std::vector<std::uint16_t> occ;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const double c = psi(Eigen::Index(i));
        if (c == 0) continue;
        occ = basis_.occupation(i);
        for (int p = 0; p < d; ++p) {
            if (occ[p] == 0) continue;
            const double a1 = std::sqrt(double(occ[p]));
            --occ[p];
            for (int q = 0; q < d; ++q) {
                ++occ[q];
                const double a2 = std::sqrt(double(occ[q]));
                rho(p, q) += psi(Eigen::Index(basis_.index(occ))) * a1 * a2 * c;
                --occ[q];
            }
            ++occ[p];
        }
    }
    return rho / double(basis_.copies());
}

DefinettiResult definetti_upper(const Realization& r, const std::vector<double>& w, int m,
                                const DefinettiOptions& opt) {
    if (int(w.size()) != r.size()) fail("DimMismatch", "weight vector length differs from the string count");
    if (m < 0) fail("DomainError", "level m must be nonnegative");
    const int d = r.dim();
    if (d > opt.max_local_dim)
        fail("BudgetExceeded", "local dimension exceeds the de Finetti budget", "d=" + std::to_string(d));
    const double dim = BoseBasis::dimension(d, m + 2);
    if (dim > opt.max_dim)
        fail("BudgetExceeded", "symmetric subspace dimension exceeds the budget", "D=" + std::to_string(dim));
    BoseBasis basis(d, m + 2);
    TwoBodyOperator op(basis, two_body_matrix(r, w));
    RealEigenPair top = top_eigen_symmetric([&](const RVector& x, RVector& y) { op.apply(x, y); },
                                            Eigen::Index(basis.size()));
    DefinettiResult res;
    res.m = m;
    res.d = d;
    res.basis_dim = basis.size();
    res.lambda_max = top.value;
    res.upper_bound = top.value;
    res.residual = top.residual;
    double l1 = 0;
    for (double x : w) l1 += std::abs(x);
    res.rigorous_error = 4.0 * l1 * d / double(m + 2);
    res.eigenvector = top.vector;
    res.warm_state = top_eigen(op.reduced(top.vector)).vector.normalized();
    return res;
}

State warm_start_state(const DefinettiResult& dfr) { return dfr.warm_state; }

int definetti_rounding_level(int n, int d) { return 16 * n * d - 2; }

long long alpha_via_definetti(const Realization& r, const std::vector<double>& w, const DefinettiOptions& opt) {
    double l1 = 0;
    for (double x : w) l1 += x;
    // 4 |w|_1 d / (m+2) <= 1/4
    const int m = int(std::ceil(16.0 * l1 * r.dim() - 1e-9)) - 2;
    DefinettiResult res = definetti_upper(r, w, std::max(m, 0), opt);
    return std::llround(res.lambda_max);
}

} // namespace hbar
