#include <algorithm>
#include <cmath>

#include "hbar/bracket.hpp"
#include "hbar/error.hpp"

namespace hbar {

namespace {

bool settled(const BetaBracket& b, const BracketOptions& opt) {
    if (b.upper - b.lower < opt.tol) return true;
    if (!opt.target) return false;
    return b.lower > *opt.target + opt.tol || b.upper < *opt.target + opt.tol;
}

void improve(BetaBracket& b, const Realization& r, const std::vector<double>& w, const State& start,
             const SeesawOptions& base, const std::string& src) {
    SeesawOptions one = base;
    one.restarts = 1;
    SeesawResult s = seesaw(r, w, one, start);
    b.seesaw_iterations += s.iterations;
    if (s.value > b.lower) {
        b.lower = s.value;
        b.state = s.state;
        b.warm_src = src;
    }
}

std::vector<int> sign_pattern(const Realization& r, const State& psi) {
    std::vector<int> out;
    for (double e : expectations(r, psi)) out.push_back(e < 0 ? -1 : 1);
    return out;
}

} // namespace

BetaBracket beta_bracket(const Realization& r, const std::vector<double>& w, const BracketOptions& opt) {
    const Graph& g = r.graph();
    BetaBracket b;
    SeesawResult cold = seesaw(r, w, opt.seesaw);
    b.lower = cold.value;
    b.state = cold.state;
    b.warm_src = "random";
    b.seesaw_iterations = cold.iterations;

    auto offer = [&](const std::string& src, double v) {
        b.uppers.push_back({src, v, {}});
        if (v < b.upper) {
            b.upper = v;
            b.upper_src = src;
        }
    };

    if (opt.definetti_m > 0 && r.dim() <= opt.definetti.max_local_dim) {
        const std::string src = "definetti(" + std::to_string(opt.definetti_m) + ")";
        try {
            DefinettiResult d = definetti_upper(r, w, opt.definetti_m, opt.definetti);
            offer(src, d.upper_bound);
            improve(b, r, w, d.warm_state, opt.seesaw, src);
        } catch (const Error& e) {
            b.uppers.push_back({src, std::nan(""), e.code()});
        }
    }

    for (BasisLevel level : opt.levels) {
        if (settled(b, opt)) break;
        const std::string src = "sdp(" + basis_level_name(level) + ")";
        try {
            SdpSolution s = lambda_r(g, w, level, opt.sdp);
            // The primal objective bounds the relaxation from above by weak duality.
            offer(src, std::max(s.value, s.dual_value));
            if (settled(b, opt)) break;
            ExtractOptions eo;
            eo.max_full_traversal = opt.extract_traversal;
            if (r.length() <= 5) {
                ExtractResult ex = extract_state(r, square_expectations(g, level, s), {sign_pattern(r, b.state)}, eo);
                improve(b, r, w, ex.state, opt.seesaw, src);
            }
        } catch (const Error& e) {
            if (e.code() != "SolverStalled" && e.code() != "SizeOverflow") throw;
            b.uppers.push_back({src, std::nan(""), e.code()});
        }
    }
    return b;
}

BetaBracket beta_bracket(const Graph& g, const std::vector<double>& w, const BracketOptions& opt) {
    return beta_bracket(realize_min(g), w, opt);
}

} // namespace hbar
