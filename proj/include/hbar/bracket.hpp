#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hbar/beta.hpp"
#include "hbar/moment.hpp"

namespace hbar {

struct BracketOptions {
    SeesawOptions seesaw;
    int definetti_m = 16; // <= 0 disables the de Finetti bound
    DefinettiOptions definetti;
    std::vector<BasisLevel> levels{BasisLevel::A, BasisLevel::B, BasisLevel::BT};
    SdpOptions sdp;
    double tol = 1e-5;
    // Stop once the bracket decides lower > target + tol or upper < target + tol.
    std::optional<double> target;
    int extract_traversal = 8;
};

struct BoundRecord {
    std::string source;
    double value = 0;
    std::string note; // error code when the solver did not finish
};

struct BetaBracket {
    double lower = 0;
    double upper = std::numeric_limits<double>::infinity();
    std::string lower_src = "seesaw";
    std::string upper_src;
    std::string warm_src; // start that produced the best see-saw run
    State state;
    std::vector<BoundRecord> uppers;
    int seesaw_iterations = 0;
    double gap() const { return upper - lower; }
};

BetaBracket beta_bracket(const Realization& r, const std::vector<double>& w, const BracketOptions& opt = {});
BetaBracket beta_bracket(const Graph& g, const std::vector<double>& w, const BracketOptions& opt = {});

} // namespace hbar
