#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "hbar/bracket.hpp"
#include "hbar/decider.hpp"
#include "hbar/fixtures.hpp"
#include "hbar/graph6.hpp"
#include "hbar/stab.hpp"
#include "oracles.hpp"

using namespace hbar;

namespace {

std::vector<double> ones(int n) { return std::vector<double>(n, 1.0); }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

bool has_step(const HbarVerdict& v, StepKind k) {
    return std::any_of(v.certificate.begin(), v.certificate.end(), [&](const auto& s) { return s.kind == k; });
}

bool verified(const Graph& g, const HbarVerdict& v) {
    std::string why;
    const bool ok = verify_certificate(g, v, 1e-5, &why);
    if (!ok) MESSAGE(why);
    return ok;
}

} // namespace

TEST_CASE("bracket is tight on C5 and K3") {
    for (const Graph& g : {fixtures::cycle(5), fixtures::complete(3)}) {
        const double a = alpha(g);
        BetaBracket b = beta_bracket(g, ones(g.order()));
        CHECK(b.lower >= a - 1e-9);
        CHECK(b.lower <= b.upper + 1e-9);
        CHECK(b.upper - a < 1e-5);
    }
}

TEST_CASE("bracket separates the anticycle on seven vertices from alpha") {
    BetaBracket b = beta_bracket(fixtures::anticycle(7), ones(7));
    CHECK(b.lower > 2 + 1e-3);
    CHECK(b.lower <= b.upper + 1e-9);
    CHECK(b.gap() < 1e-4);
}

TEST_CASE("bracket with target stops once decided") {
    BracketOptions opt;
    opt.target = 2.0;
    BetaBracket b = beta_bracket(fixtures::anticycle(7), ones(7), opt);
    CHECK(b.lower > 2 + 1e-5);
    CHECK(b.uppers.empty());
}

TEST_CASE("decide: perfect graphs stop at the first step") {
    HbarVerdict v = decide(fixtures::complete(3));
    CHECK(v.status == HbarStatus::Perfect);
    REQUIRE(!v.certificate.empty());
    CHECK(v.certificate.front().kind == StepKind::Perfect);
    CHECK(verified(fixtures::complete(3), v));
}

TEST_CASE("numeric loop is vacuous on K3") {
    HbarVerdict v = numeric_facet_loop(fixtures::complete(3));
    CHECK(v.status == HbarStatus::Perfect);
    CHECK(!has_step(v, StepKind::Numeric));
}

TEST_CASE("decide: C5 is h-perfect") {
    HbarVerdict v = structural_certificate(fixtures::cycle(5));
    CHECK(v.status == HbarStatus::Perfect);
    CHECK(v.certificate.front().kind == StepKind::HPerfect);
}

TEST_CASE("decide: join of K1 and C5 splits") {
    const Graph g = join(complete_graph(1), cycle_graph(5));
    HbarVerdict v = decide(g);
    CHECK(v.status == HbarStatus::Perfect);
    CHECK(has_step(v, StepKind::Join));
    CHECK(has_step(v, StepKind::HPerfect));
    CHECK(verified(g, v));
}

TEST_CASE("decide: twins are removed") {
    const Graph g = copy_vertex(fixtures::anticycle(7), 3);
    HbarVerdict v = structural_certificate(g);
    // The anticycle is still induced, so the forbidden check fires first.
    CHECK(v.status == HbarStatus::Imperfect);
    const Graph h = split_vertex(copy_vertex(cycle_graph(5), 0), 2);
    HbarVerdict w = decide(h);
    CHECK(w.status == HbarStatus::Perfect);
    CHECK(verified(h, w));
}

TEST_CASE("decide: anticycle on seven vertices is imperfect with a replayable witness") {
    const Graph g = fixtures::anticycle(7);
    HbarVerdict v = decide(g);
    CHECK(v.status == HbarStatus::Imperfect);
    CHECK(v.certificate.front().kind == StepKind::Forbidden);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->alpha == 2);
    CHECK(v.witness->lower > 2 + 1e-3);
    const Realization r(v.witness->strings);
    std::vector<double> w(v.witness->weights.begin(), v.witness->weights.end());
    CHECK(std::abs(beta_objective(r, w, v.witness->state) - v.witness->lower) < 1e-9);
    CHECK(verified(g, v));
    CHECK(chromatic_number(g) == 4);
    REQUIRE(v.chromatic_number.has_value());
    CHECK(*v.chromatic_number == 4);
}

TEST_CASE("numeric loop alone finds the anticycle violation") {
    HbarVerdict v = numeric_facet_loop(fixtures::anticycle(7));
    CHECK(v.status == HbarStatus::Imperfect);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->lower > v.witness->alpha + 1e-3);
}

TEST_CASE("numeric loop certifies G7 on its single nontrivial facet") {
    const Graph g = fixtures::g7();
    HbarVerdict v = numeric_facet_loop(g);
    CHECK(v.status == HbarStatus::Perfect);
    int numeric = 0;
    for (const auto& s : v.certificate)
        if (s.kind == StepKind::Numeric) {
            ++numeric;
            CHECK(s.rhs == 2);
            CHECK(s.upper - 2 < 1e-4);
        }
    CHECK(numeric == 1);
    CHECK(verified(g, v));
}

TEST_CASE("verifier rejects tampered certificates") {
    const Graph g = join(complete_graph(1), cycle_graph(5));
    HbarVerdict v = decide(g);
    REQUIRE(verified(g, v));

    HbarVerdict flipped = v;
    flipped.status = HbarStatus::Imperfect;
    CHECK(!verify_certificate(g, flipped));

    HbarVerdict truncated = v;
    truncated.certificate.pop_back();
    CHECK(!verify_certificate(g, truncated));

    HbarVerdict wrong_parts = v;
    for (auto& s : wrong_parts.certificate)
        if (s.kind == StepKind::Join && s.parts.size() == 2) std::swap(s.parts[0].front(), s.parts[1].front());
    CHECK(!verify_certificate(g, wrong_parts));

    const Graph c7 = fixtures::anticycle(7);
    HbarVerdict claims_perfect = decide(fixtures::cycle(7));
    CHECK(!verify_certificate(c7, claims_perfect));
}

TEST_CASE("census reproduces the small-order table") {
    struct Expected {
        int n, perfect, h_perfect, hbar;
    };
    for (Expected e : {Expected{3, 2, 2, 2}, {4, 6, 6, 6}, {5, 20, 21, 21}, {6, 105, 109, 112}}) {
        const auto graphs = oracle::connected(e.n);
        const auto rows = census(graphs);
        REQUIRE(rows.size() == 1);
        const CensusRow& r = rows.front();
        CHECK(r.n == e.n);
        CHECK(r.connected == int(graphs.size()));
        CHECK(r.perfect == e.perfect);
        CHECK(r.h_perfect == e.h_perfect);
        CHECK(r.hbar_perfect == e.hbar);
        CHECK(r.hbar_imperfect == 0);
        CHECK(r.undetermined == 0);
    }
}

TEST_CASE("every certificate for n <= 6 replays, and relabeling does not change the verdict") {
    std::mt19937 rng(11);
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : oracle::connected(n)) {
            HbarVerdict v = decide(g);
            CHECK(verified(g, v));
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const Graph h = relabel(g, perm);
            HbarVerdict w = decide(h);
            CHECK(w.status == v.status);
            CHECK(verified(h, w));
        }
}

TEST_CASE("relabeled anticycles stay imperfect") {
    std::mt19937 rng(5);
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(fixtures::anticycle(7), perm);
        HbarVerdict v = decide(h);
        CHECK(v.status == HbarStatus::Imperfect);
        CHECK(verified(h, v));
    }
}

TEST_CASE("user forbidden patterns are honoured") {
    DeciderOptions opt;
    opt.forbidden.push_back(cycle_graph(5));
    HbarVerdict v = structural_certificate(fixtures::cycle(5), opt);
    CHECK(v.status == HbarStatus::Imperfect);
    CHECK(v.certificate.front().kind == StepKind::Forbidden);
    CHECK(!v.witness.has_value());
}

TEST_CASE("chromatic number matches small cases") {
    CHECK(chromatic_number(fixtures::cycle(5)) == 3);
    CHECK(chromatic_number(fixtures::complete(4)) == 4);
    CHECK(chromatic_number(fixtures::empty(3)) == 1);
    CHECK(chromatic_number(fixtures::cycle(6)) == 2);
}
