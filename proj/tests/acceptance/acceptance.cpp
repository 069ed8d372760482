#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hbar/applications.hpp"
#include "hbar/bracket.hpp"
#include "hbar/decider.hpp"
#include "hbar/fixtures.hpp"
#include "hbar/gf2.hpp"
#include "hbar/graph6.hpp"
#include "hbar/moment.hpp"
#include "hbar/stab.hpp"
#include "dense_oracle.hpp"
#include "oracles.hpp"

using namespace hbar;

namespace {

std::vector<double> ones(int n) { return std::vector<double>(n, 1.0); }

std::string fmt(double x, const char* spec = "%.6f") {
    char buf[32];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

// Collects named sub-checks; the criterion passes only if all of them do.
class Report {
public:
    void check(const std::string& id, bool ok, const std::string& detail) {
        items_.push_back({id, ok, detail});
    }
    void within(const std::string& id, double got, double want, double tol) {
        check(id, std::abs(got - want) <= tol, fmt(got) + " vs " + fmt(want) + " tol " + fmt(tol, "%g"));
    }
    void seconds(const std::string& id, double got, double budget) {
        std::ostringstream s;
        s.precision(1);
        s << std::fixed << got << "s <= " << budget << "s";
        check(id, got <= budget, s.str());
    }
    bool passed() const {
        return std::all_of(items_.begin(), items_.end(), [](const Item& i) { return i.ok; });
    }
    std::set<std::string> failed() const {
        std::set<std::string> out;
        for (const auto& i : items_)
            if (!i.ok) out.insert(i.id);
        return out;
    }
    std::string line(int criterion) const {
        std::string s = "criterion " + std::to_string(criterion) + ": " + (passed() ? "PASS" : "FAIL");
        for (const auto& i : items_) s += " | " + i.id + (i.ok ? " ok " : " FAILED ") + i.detail;
        return s;
    }

private:
    struct Item {
        std::string id;
        bool ok;
        std::string detail;
    };
    std::vector<Item> items_;
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void golden_bracket(Report& rep) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> w{1, 1, 1, 1, 1, 1, 1, 2, 2};
    Weights wr;
    for (double x : w) wr.emplace_back(int(x));
    const Graph g = fixtures::g9();
    const Rational a = alpha(g, wr).value;
    rep.check("alpha", a == 3, "alpha = " + to_string(a));
    rep.check("brute_alpha", oracle::brute_alpha(g, wr) == 3, "brute force agrees");
    rep.within("levelA", lambda_r(g, w, BasisLevel::A).value, 3.236068, 1e-3);
    const SdpSolution sb = lambda_r(g, w, BasisLevel::B);
    rep.within("levelB", sb.value, 3.044815, 1e-3);
    // One see-saw run started from the state extracted from the level-B moments.
    const Realization r(fixtures::g9_strings());
    const ExtractResult ex = extract_state(r, square_expectations(g, BasisLevel::B, sb));
    SeesawOptions so;
    so.restarts = 1;
    rep.within("warm_seesaw", seesaw(r, w, so, ex.state).value, 3.044815, 1e-4);
    rep.within("bracket_lower", beta_bracket(r, w).lower, 3.044815, 1e-4);
    rep.seconds("runtime", since(t0), 120);
}

void anticycle_imperfect(Report& rep) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = fixtures::anticycle(7);
    HbarVerdict v = decide(g);
    rep.check("decide", v.status == HbarStatus::Imperfect, status_name(v.status));
    rep.check("replay", verify_certificate(g, v), "certificate replays");
    SeesawOptions so;
    so.restarts = 50;
    SeesawResult s = seesaw(realize_min(g), ones(7), so);
    rep.check("seesaw", s.value > 2 + 1e-3, fmt(s.value) + " > 2.001");
    rep.check("restarts", s.restarts_used <= 50, std::to_string(s.restarts_used) + " restarts");
    rep.seconds("runtime", since(t0), 60);
}

void g7_certified(Report& rep) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = fixtures::g7();
    HbarVerdict v = numeric_facet_loop(g);
    rep.check("status", v.status == HbarStatus::Perfect, status_name(v.status));
    int numeric = 0;
    double gap = 0;
    for (const auto& s : v.certificate)
        if (s.kind == StepKind::Numeric) {
            ++numeric;
            gap = std::max(gap, s.upper - double(s.rhs));
            rep.check("rhs", s.rhs == 2, "facet rhs " + std::to_string(s.rhs));
        }
    rep.check("facets", numeric == 1, std::to_string(numeric) + " nontrivial facet(s)");
    rep.check("gap", gap < 1e-4, "gap " + fmt(gap, "%.2e"));
    rep.check("replay", verify_certificate(g, v), "certificate replays");
    rep.seconds("runtime", since(t0), 300);
}

void census_table(Report& rep) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Expected {
        int n, perfect, h_perfect, hbar;
    };
    for (Expected e : {Expected{3, 2, 2, 2}, {4, 6, 6, 6}, {5, 20, 21, 21}, {6, 105, 109, 112}}) {
        const auto rows = census(oracle::connected(e.n));
        const CensusRow& r = rows.front();
        const bool ok = rows.size() == 1 && r.perfect == e.perfect && r.h_perfect == e.h_perfect &&
                        r.hbar_perfect == e.hbar && r.hbar_imperfect == 0 && r.undetermined == 0;
        rep.check("n" + std::to_string(e.n), ok,
                  std::to_string(r.perfect) + "/" + std::to_string(r.h_perfect) + "/" + std::to_string(r.hbar_perfect));
    }
    const auto graphs7 = oracle::connected(7);
    const auto rows = census(graphs7);
    const CensusRow& r = rows.front();
    rep.check("n7_perfect", r.perfect == 724, std::to_string(r.perfect) + " perfect");
    rep.check("n7_hperfect", r.h_perfect == 780, std::to_string(r.h_perfect) + " h-perfect");
    rep.check("n7_imperfect",
              r.hbar_imperfect == 1 && r.imperfect.size() == 1 &&
                  isomorphic(parse_graph6(r.imperfect.front()), fixtures::anticycle(7)),
              std::to_string(r.hbar_imperfect) + " imperfect" +
                  (r.imperfect.empty() ? std::string() : " (" + r.imperfect.front() + ")"));
    rep.check("n7_open", r.undetermined == 0, std::to_string(r.undetermined) + " undetermined");
    rep.seconds("runtime", since(t0), 4 * 3600);
}

void ground_gaps(Report& rep) {
    const auto t0 = std::chrono::steady_clock::now();
    const double want[] = {0.084594, 0.13099, 0.098687};
    for (int n = 2; n <= 4; ++n) {
        const auto h = fixtures::chain_hamiltonian(n);
        GroundBound g = ground_bound(h.coeffs, h.strings);
        const double closed = -std::sqrt(n * (2.0 * n + 1));
        rep.within("H" + std::to_string(n) + "_bound", g.bound, closed, 1e-6);
        rep.within("H" + std::to_string(n), exact_ground_energy(h.coeffs, h.strings) - closed, want[n - 2], 1e-4);
    }
    const auto h = fixtures::chain_hamiltonian_xyz(2);
    GroundBound g = ground_bound_for_weights(h.coeffs, h.strings, {2, 2, 1, 1, 1, 1});
    rep.within("Ht2_bound", g.bound, -std::sqrt(15.0), 1e-5);
    rep.within("Ht2_exact", exact_ground_energy(h.coeffs, h.strings), -3.722935, 1e-5);
    rep.seconds("runtime", since(t0), 60);
}

void entanglement_suite(Report& rep) {
    MultipartiteCriterion c = multipartite_criterion(fixtures::ghz_stabilizers(), ones(7));
    const CMatrix ghz = fixtures::projector(fixtures::ghz_states()[0]);
    MultipartiteReport r = evaluate_multipartite(c, ghz);
    rep.within("ghz_value", r.value, 7, 1e-9);
    rep.within("ghz_bisep", c.biseparable, 3, 1e-9);
    MultipartiteCriterion cw = multipartite_criterion(fixtures::ghz_stabilizers(), {0, 1, 1, 2, 0, 0, 0});
    rep.within("weighted_value", evaluate_multipartite(cw, ghz).value, 4, 1e-9);
    rep.within("weighted_bisep", cw.biseparable, 3, 1e-9);
    rep.within("weighted_full", cw.fully_separable, 2, 1e-9);
    rep.within("trace_lower", entanglement_estimates(c, ghz).trace_lower, 0.5, 1e-9);
    rep.within("qutrit", qutrit_cover_witness(fixtures::qutrit_unfaithful()).lhs, 4.8514, 1e-3);

    const Realization s5(fixtures::s5_strings());
    auto fires = [&](double v) { return nonlinear_witness(fixtures::rho_v(v), s5, s5, ones(5)).entangled; };
    double lo = 0, hi = 1;
    const bool ends = !fires(lo) && fires(hi);
    for (int k = 0; k < 40; ++k) (fires(0.5 * (lo + hi)) ? hi : lo) = 0.5 * (lo + hi);
    rep.check("rho_v", ends && std::abs(hi - 0.6) <= 1e-3 && !fires(0.6 - 1e-3) && fires(0.6 + 1e-3),
              "flips at v = " + fmt(hi));
}

void delta_brackets(Report& rep) {
    bool exact = true;
    for (int n = 2; n <= 8; ++n) {
        DeltaBounds d = delta_bounds(complete_graph(n), true);
        exact = exact && Rational(1) / d.alpha_star == Rational(1, n) && d.transitive_lower &&
                std::abs(*d.transitive_lower - 1.0 / n) < 1e-6 && std::abs(*d.transitive_upper - 1.0 / n) < 1e-6;
    }
    rep.check("K_n", exact, "1/alpha* = 1/n exactly for n = 2..8, transitive bracket agrees");
    DeltaBounds c5 = delta_bounds(cycle_graph(5));
    rep.check("C5_packing", Rational(1) / c5.alpha_star == Rational(2, 5), "1/alpha* = " + to_string(Rational(1) / c5.alpha_star));
    rep.check("C5_transitive", c5.transitive_lower && std::abs(*c5.transitive_lower - 0.4) < 1e-6 &&
                                   std::abs(*c5.transitive_upper - 0.4) < 1e-6,
              "transitive bracket " + (c5.transitive_lower ? fmt(*c5.transitive_lower) : std::string("missing")));
    rep.within("theta", delta_bounds(cycle_graph(7)).theta, 1 + 1 / std::cos(M_PI / 7), 1e-5);
}

void property_suites(Report& rep) {
    std::mt19937 rng(20240601);

    int sandwich_bad = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 5;
        Graph g = oracle::random_graph(rng, n);
        Weights wr = oracle::random_weights(rng, n, 3);
        wr[t % n] += 1;
        std::vector<double> w = to_doubles(wr);
        const double a = to_double(oracle::brute_alpha(g, wr));
        BracketOptions opt;
        opt.seesaw.restarts = 4;
        BetaBracket b = beta_bracket(g, w, opt);
        bool ok = a <= b.lower + 1e-9 && b.lower <= b.upper + 1e-6;
        for (const auto& u : b.uppers)
            if (u.note.empty()) ok = ok && u.value >= b.lower - 1e-6;
        sandwich_bad += !ok;
    }
    rep.check("sandwich", sandwich_bad == 0, std::to_string(sandwich_bad) + "/100 violations");

    double worst = 0;
    std::vector<Realization> qubit{Realization(parse_strings({"X", "Y", "Z"})), Realization(parse_strings({"Z"})),
                                   Realization(parse_strings({"X", "Z"}))};
    std::vector<Realization> ququart{realize_min(fixtures::cycle(5)), realize_min(fixtures::g15()),
                                     Realization(parse_strings({"XX", "YY", "ZZ", "XI", "IZ"}))};
    auto compare = [&](const Realization& r, int copies) {
        auto w = to_doubles(oracle::random_weights(rng, r.size(), 3));
        w[0] += 0.5;
        worst = std::max(worst, std::abs(definetti_upper(r, w, copies - 2).lambda_max - oracle::dense_definetti(r, w, copies)));
    };
    for (const auto& r : qubit)
        for (int copies = 2; copies <= 4; ++copies) compare(r, copies);
    for (const auto& r : ququart)
        for (int copies = 2; copies <= 3; ++copies) compare(r, copies);
    rep.check("definetti", worst < 1e-10, "max deviation " + fmt(worst, "%.2e"));

    int realize_bad = 0, realize_total = 0;
    std::vector<Graph> small{Graph(1), complete_graph(2)};
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = n <= 2 ? std::vector<Graph>{small[n - 1]} : oracle::connected(n);
        for (const Graph& g : graphs) {
            ++realize_total;
            Realization r = realize_min(g);
            const int half = gf2_rank(Gf2Matrix::adjacency(g)) / 2;
            realize_bad += !(frustration_graph(r.strings()) == g && r.length() == std::max(1, half));
        }
    }
    rep.check("realize", realize_bad == 0,
              std::to_string(realize_bad) + "/" + std::to_string(realize_total) + " mismatches");

    int hull_bad = 0, hull_total = 0, inside = 0;
    std::uniform_int_distribution<int> num(0, 12);
    std::uniform_real_distribution<double> u(0, 1);
    for (int n = 2; n <= 6; ++n) {
        const auto graphs = n == 2 ? std::vector<Graph>{complete_graph(2)} : oracle::connected(n);
        for (const Graph& g : graphs) {
            StabPolytope p = stab_facets(g);
            for (int k = 0; k < 100; ++k) {
                std::vector<Rational> x(n);
                if (k % 2 == 0) {
                    for (auto& xi : x) xi = Rational(num(rng), 12);
                } else {
                    // Scaled convex combination of two stable sets lands near the boundary.
                    const Mask s = p.vertices[rng() % p.vertices.size()], t = p.vertices[rng() % p.vertices.size()];
                    const Rational lam(num(rng), 12), scale(10 + num(rng) % 5, 12);
                    for (int i = 0; i < n; ++i)
                        x[i] = scale * (lam * int((s >> i) & 1u) + (1 - lam) * int((t >> i) & 1u));
                }
                const bool by_lp = in_hull_lp(p, x);
                inside += by_lp;
                ++hull_total;
                hull_bad += point_membership(p, x).inside != by_lp;
            }
        }
    }
    rep.check("facets", hull_bad == 0,
              std::to_string(hull_bad) + "/" + std::to_string(hull_total) + " disagreements, " +
                  std::to_string(inside) + " inside");

    int ops_bad = 0;
    for (int t = 0; t < 60; ++t) {
        const int na = 1 + t % 5, nb = 1 + (t * 3) % 5;
        Graph a = oracle::random_graph(rng, na), b = oracle::random_graph(rng, nb);
        Weights wa = oracle::random_weights(rng, na), wb = oracle::random_weights(rng, nb);
        Weights wab(wa);
        wab.insert(wab.end(), wb.begin(), wb.end());
        const Rational aa = alpha(a, wa).value, ab = alpha(b, wb).value;
        ops_bad += alpha(join(a, b), wab).value != std::max(aa, ab);
        ops_bad += alpha(disjoint_union(a, b), wab).value != aa + ab;
        ops_bad += alpha(join(a, b), wab).value != oracle::brute_alpha(join(a, b), wab);
        const Graph c = oracle::random_graph(rng, 1 + t % 4), d = oracle::random_graph(rng, 1 + (t * 7) % 4);
        ops_bad += alpha(lexicographic_product(c, d)) != alpha(c) * alpha(d);
        const int v = t % na;
        Weights w = oracle::random_weights(rng, na + 1);
        Weights merged(w.begin(), w.begin() + na), maxed(w.begin(), w.begin() + na);
        merged[v] += w[na];
        maxed[v] = std::max(w[v], w[na]);
        ops_bad += alpha(copy_vertex(a, v), w).value != alpha(a, merged).value;
        ops_bad += alpha(split_vertex(a, v), w).value != alpha(a, maxed).value;
    }
    rep.check("alpha_ops", ops_bad == 0, std::to_string(ops_bad) + "/360 identity failures");
}

const std::vector<std::function<void(Report&)>> criteria{golden_bracket, anticycle_imperfect, g7_certified,
                                                         census_table,   ground_gaps,         entanglement_suite,
                                                         delta_brackets, property_suites};

} // namespace

// Usage: acceptance [--criterion N] [--expect-red id,id,...]
// Exit status is 0 when the failing sub-checks are exactly the expected-red set.
int main(int argc, char** argv) {
    std::vector<int> which;
    std::set<std::string> expected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            which.push_back(std::stoi(argv[++i]));
        } else if (arg == "--expect-red" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string id; std::getline(ss, id, ',');) expected.insert(id);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--expect-red id,...]\n");
            return 2;
        }
    }
    if (which.empty())
        for (int c = 1; c <= int(criteria.size()); ++c) which.push_back(c);
    std::set<std::string> failed;
    for (int c : which) {
        if (c < 1 || c > int(criteria.size())) {
            std::fprintf(stderr, "no criterion %d\n", c);
            return 2;
        }
        Report rep;
        try {
            criteria[c - 1](rep);
        } catch (const std::exception& e) {
            rep.check("exception", false, e.what());
        }
        std::printf("%s\n", rep.line(c).c_str());
        std::fflush(stdout);
        for (const auto& id : rep.failed()) failed.insert(id);
    }
    if (failed == expected) return 0;
    for (const auto& id : expected)
        if (!failed.count(id)) std::printf("expected red sub-check %s now passes\n", id.c_str());
    return 1;
}
