#include "doctest.h"

#include <cmath>
#include <numeric>

#include "hbar/beta.hpp"
#include "hbar/fixtures.hpp"
#include "hbar/stab.hpp"
#include "dense_oracle.hpp"
#include "oracles.hpp"

using namespace hbar;

namespace {

std::vector<double> ones(int n) { return std::vector<double>(n, 1.0); }

Realization with_idle_qubit(const Realization& r) {
    std::vector<PauliString> out;
    for (auto s : r.strings()) {
        s.len += 1;
        out.push_back(s);
    }
    return Realization(out);
}

} // namespace

TEST_CASE("see-saw on the Bloch sphere") {
    Realization k3(parse_strings({"X", "Y", "Z"}));
    auto res = seesaw(k3, ones(3));
    CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(beta_objective(k3, ones(3), res.state) == doctest::Approx(res.value).epsilon(1e-9));
    CHECK(std::abs(res.state.norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(seesaw(k3, {0, 0, 0}), Error);
}

TEST_CASE("see-saw iterates are monotone and bounded by alpha from below") {
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracle::random_graph(rng, 3 + t % 4);
        Realization r = realize_min(g);
        if (r.length() > 3) continue;
        std::vector<double> w = to_doubles(oracle::random_weights(rng, g.order(), 3));
        w[0] += 1;
        auto res = seesaw(r, w, {4, 500, 1e-10, 5u + t});
        for (std::size_t i = 1; i < res.trace.size(); ++i) CHECK(res.trace[i] >= res.trace[i - 1] - 1e-12);
        Weights wr;
        for (double x : w) wr.emplace_back(x);
        CHECK(res.value >= to_double(alpha(g, wr).value) - 1e-9);
    }
}

TEST_CASE("see-saw certifies the anti-heptagon") {
    Realization r = realize_min(fixtures::anticycle(7));
    auto res = seesaw(r, ones(7), {50, 500, 1e-10, 1});
    CHECK(res.value > 2.0 + 1e-3);
}

TEST_CASE("see-saw is realization invariant") {
    for (const Graph& g : {fixtures::cycle(5), fixtures::anticycle(7), fixtures::g7()}) {
        Realization r = realize_min(g);
        auto a = seesaw(r, ones(g.order()), {20, 500, 1e-12, 3});
        auto b = seesaw(with_idle_qubit(r), ones(g.order()), {20, 500, 1e-12, 3});
        CHECK(std::abs(a.value - b.value) < 1e-6);
    }
}

TEST_CASE("occupation-basis operator matches the dense symmetric projection") {
    std::vector<Realization> small{Realization(parse_strings({"X", "Y", "Z"})), Realization(parse_strings({"Z"})),
                                   Realization(parse_strings({"X", "Z"}))};
    std::vector<Realization> two{realize_min(fixtures::cycle(5)), realize_min(fixtures::g15()),
                                 Realization(parse_strings({"XX", "YY", "ZZ", "XI", "IZ"}))};
    std::mt19937 rng(41);
    for (const auto& r : small)
        for (int copies = 2; copies <= 4; ++copies) {
            auto w = to_doubles(oracle::random_weights(rng, r.size(), 3));
            w[0] += 0.5;
            auto res = definetti_upper(r, w, copies - 2);
            CHECK(std::abs(res.lambda_max - oracle::dense_definetti(r, w, copies)) < 1e-10);
        }
    for (const auto& r : two)
        for (int copies = 2; copies <= 3; ++copies) {
            auto w = to_doubles(oracle::random_weights(rng, r.size(), 3));
            w[0] += 0.5;
            auto res = definetti_upper(r, w, copies - 2);
            CHECK(std::abs(res.lambda_max - oracle::dense_definetti(r, w, copies)) < 1e-10);
        }
}

TEST_CASE("de Finetti bounds") {
    CHECK(BoseBasis(4, 5).size() == std::size_t(BoseBasis::dimension(4, 5)));
    CHECK(BoseBasis::dimension(4, 5) == 56);
    Realization k3(parse_strings({"X", "Y", "Z"}));
    auto r10 = definetti_upper(k3, ones(3), 10);
    CHECK(r10.upper_bound >= 1.0 - 1e-9);
    CHECK(r10.upper_bound <= 1.2);
    CHECK(r10.rigorous_error == doctest::Approx(2.0));
    Realization z(parse_strings({"Z"}));
    for (int m : {0, 3, 9}) CHECK(definetti_upper(z, {1.0}, m).upper_bound == doctest::Approx(1.0).epsilon(1e-12));
    Realization c5 = realize_min(fixtures::cycle(5));
    double prev = 1e9;
    for (int m : {2, 4, 8, 16}) {
        double u = definetti_upper(c5, ones(5), m).upper_bound;
        CHECK(u >= 2.0 - 1e-9);
        CHECK(u <= prev + 1e-8);
        prev = u;
    }
    // Nested levels are monotone.
    for (int m = 0; m < 8; ++m)
        CHECK(definetti_upper(c5, ones(5), m + 2).upper_bound <= definetti_upper(c5, ones(5), m).upper_bound + 1e-8);
    CHECK_THROWS_AS(definetti_upper(realize_min(fixtures::g7()), ones(7), 2), Error);
}

TEST_CASE("warm starts") {
    Realization k3(parse_strings({"X", "Y", "Z"}));
    State s = warm_start_state(definetti_upper(k3, ones(3), 4));
    CHECK(beta_objective(k3, ones(3), s) >= 0.99);
    Realization z(parse_strings({"Z"}));
    State s1 = warm_start_state(definetti_upper(z, {1.0}, 3));
    CHECK(std::abs(std::abs(s1(0)) * std::abs(s1(1))) < 1e-9);
    Realization c5 = realize_min(fixtures::cycle(5));
    State w5 = warm_start_state(definetti_upper(c5, ones(5), 8));
    auto res = seesaw(c5, ones(5), {1, 100, 1e-14, 0}, w5);
    CHECK(res.value >= 2.0 - 1e-6);
    CHECK(res.iterations < 100);
}

TEST_CASE("generalized beta") {
    Realization c5 = realize_min(fixtures::cycle(5));
    double k2 = generalized_beta_lower(c5, ones(5), 2);
    CHECK(std::abs(k2 - seesaw(c5, ones(5)).value) < 1e-6);
    std::mt19937 rng(51);
    for (int t = 0; t < 6; ++t) {
        Graph g = oracle::random_graph(rng, 3 + t % 3);
        Realization r = realize_min(g);
        double a2 = generalized_beta_lower(r, ones(g.order()), 2);
        double a4 = generalized_beta_lower(r, ones(g.order()), 4);
        CHECK(a4 <= a2 + 1e-8);
    }
    Realization c7b = realize_min(fixtures::anticycle(7));
    double v32 = generalized_beta_lower(c7b, ones(7), 32);
    CHECK(v32 <= 2.05);
    CHECK(v32 >= 2.0 - 1e-6);
}

TEST_CASE("generalized gradient matches finite differences") {
    Realization r = realize_min(fixtures::g7());
    std::vector<double> w{1, 2, 1, 3, 1, 1, 2};
    for (int t = 0; t < 10; ++t) {
        State psi = random_state(r.dim(), 100 + t);
        State dir = random_state(r.dim(), 200 + t);
        dir -= psi.dot(dir).real() * psi;
        for (int k : {2, 3, 6}) {
            const double h = 1e-5;
            double fp = generalized_objective(r, w, k, psi + h * dir);
            double fm = generalized_objective(r, w, k, psi - h * dir);
            // Objective is not scale invariant, so differentiate the unnormalized map.
            State g = generalized_gradient(r, w, k, psi);
            double fd = (fp - fm) / (2 * h);
            double an = g.dot(dir).real();
            CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
        }
    }
}

TEST_CASE("qubit budget arithmetic") {
    auto b = qubit_budget(4, 1, 1);
    CHECK(b.l == doctest::Approx(1.0));
    CHECK(b.m == 2);
    CHECK(b.L == 4);
    auto c = qubit_budget(4096, 1, 0.1);
    CHECK(c.m == 832);
    CHECK(c.L == 5004);
    CHECK_THROWS_AS(qubit_budget(3, 3, 0.5), Error);
}

TEST_CASE("alpha by rounding the de Finetti value") {
    CHECK(definetti_rounding_level(3, 2) == 94);
    CHECK(definetti_rounding_level(5, 4) == 318);
    CHECK(alpha_via_definetti(Realization(parse_strings({"X", "Y", "Z"})), ones(3)) == 1);
    CHECK(alpha_via_definetti(Realization(parse_strings({"Z", "Z"})), ones(2)) == 2);
    CHECK_THROWS_AS(alpha_via_definetti(realize_min(fixtures::cycle(5)), ones(5)), Error);
}
