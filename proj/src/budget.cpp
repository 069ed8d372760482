#include <cmath>

#include "hbar/beta.hpp"
#include "hbar/error.hpp"

namespace hbar {

QubitBudget qubit_budget(double n, double c, double eps) {
    if (!(c > 0) || !(n > c)) fail("DomainError", "need n > c > 0");
    if (!(eps > 0 && eps < 1.0) && eps != 1.0) fail("DomainError", "epsilon must lie in (0, 1]");
    QubitBudget b;
    b.l = 0.5 * std::log2(n / c);
    const double raw = std::log(n / c) / (eps * eps);
    b.m = (long long)std::ceil(raw - 1e-12);
    b.L = (b.m + 2) * (long long)std::ceil(b.l - 1e-12);
    return b;
}

} // namespace hbar
