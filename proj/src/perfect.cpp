#include "hbar/error.hpp"
#include "hbar/stab.hpp"

namespace hbar {

namespace {

bool has_odd_hole(const Graph& g) {
    const int n = g.order();
    for (int k = 5; k <= n; k += 2) {
        // Gosper's hack over all k-subsets.
        Mask s = (Mask(1) << k) - 1;
        const Mask limit = Mask(1) << n;
        while (s < limit) {
            if (is_odd_hole(g, s)) return true;
            Mask c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return false;
}

} // namespace

bool is_perfect(const Graph& g) {
    if (g.order() > 10) fail("SizeOverflow", "perfectness test is limited to 10 vertices");
    return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

} // namespace hbar
