#pragma once

#include <vector>

#include "hbar/rational.hpp"

namespace hbar {

enum class Sense { Le, Eq, Ge };

// maximize c.x subject to rows (a_i . x  sense_i  b_i), x >= 0.
struct ExactLp {
    std::vector<std::vector<Rational>> a;
    std::vector<Sense> sense;
    std::vector<Rational> b;
    std::vector<Rational> c;

    void add_row(std::vector<Rational> row, Sense s, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct ExactLpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

// Dense two-phase tableau simplex with Bland's rule.
ExactLpResult solve_exact_lp(const ExactLp& lp);

} // namespace hbar
