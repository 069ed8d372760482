#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "hbar/decider.hpp"
#include "hbar/error.hpp"
#include "hbar/fixtures.hpp"
#include "hbar/graph6.hpp"

namespace hbar {

std::string status_name(HbarStatus s) {
    switch (s) {
    case HbarStatus::Perfect: return "Perfect";
    case HbarStatus::Imperfect: return "Imperfect";
    default: return "Undetermined";
    }
}

std::string step_name(StepKind k) {
    switch (k) {
    case StepKind::Forbidden: return "forbidden_subgraph";
    case StepKind::Perfect: return "perfect";
    case StepKind::HPerfect: return "h_perfect";
    case StepKind::Twin: return "twin_reduction";
    case StepKind::Join: return "join_split";
    case StepKind::Components: return "component_split";
    case StepKind::G15: return "g15_subgraph";
    case StepKind::FacetZero: return "facet_zero_recursion";
    default: return "numeric";
    }
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 16) fail("SizeOverflow", "chromatic number is limited to 16 vertices");
    if (n == 0) return 0;
    const Mask full = g.all();
    std::vector<int> best(std::size_t(full) + 1, n + 1);
    best[0] = 0;
    for (Mask m = 1; m <= full; ++m) {
        const Mask low = m & -m;
        const Mask rest = m & ~low;
        // Colour class containing the lowest vertex: a stable subset of m.
        for (Mask s = rest;; s = (s - 1) & rest) {
            const Mask cls = s | low;
            if (g.is_stable(cls)) best[m] = std::min(best[m], best[m & ~cls] + 1);
            if (s == 0) break;
        }
    }
    return best[full];
}

namespace {

HbarStatus worst(HbarStatus a, HbarStatus b) {
    if (a == HbarStatus::Imperfect || b == HbarStatus::Imperfect) return HbarStatus::Imperfect;
    if (a == HbarStatus::Undetermined || b == HbarStatus::Undetermined) return HbarStatus::Undetermined;
    return HbarStatus::Perfect;
}

bool nontrivial(const Graph& g, const Facet& f) {
    const FacetTag t = classify_facet(g, f).tag;
    return t != FacetTag::Nonnegativity && t != FacetTag::Clique;
}

std::vector<int> pick(const std::vector<int>& verts, Mask local) {
    std::vector<int> out;
    for (Mask t = local; t; t &= t - 1) out.push_back(verts[lowest(t)]);
    return out;
}

struct Decider {
    const Graph& root;
    const DeciderOptions& opt;
    HbarVerdict& out;
    bool structural;
    bool numeric;
    std::vector<Graph> forbidden;
    Graph g15 = fixtures::g15();

    Decider(const Graph& g, const DeciderOptions& o, HbarVerdict& v, bool s, bool num)
        : root(g), opt(o), out(v), structural(s), numeric(num) {
        forbidden = {fixtures::anticycle(7), fixtures::anticycle(9)};
        forbidden.insert(forbidden.end(), o.forbidden.begin(), o.forbidden.end());
    }

    std::size_t push(StepKind kind, int depth, const std::vector<int>& verts, HbarStatus outcome) {
        CertificateStep s;
        s.kind = kind;
        s.depth = depth;
        s.vertices = verts;
        s.outcome = outcome;
        out.certificate.push_back(std::move(s));
        return out.certificate.size() - 1;
    }

    void witness_for_pattern(const std::vector<int>& labels) {
        if (out.witness) return;
        Graph sub = induced_subgraph(root, labels);
        Realization r = realize_min(sub);
        std::vector<double> w(labels.size(), 1.0);
        SeesawOptions so = opt.bracket.seesaw;
        so.restarts = opt.witness_restarts;
        SeesawResult s = seesaw(r, w, so);
        const int a = alpha(sub);
        if (s.value <= a + opt.tol) return;
        out.witness = ImperfectWitness{labels, std::vector<std::int64_t>(labels.size(), 1), a, s.value, r.strings(), s.state};
    }

    HbarStatus facet_numeric(const std::vector<int>& verts, const Facet& f, int depth) {
        const Graph g = induced_subgraph(root, verts);
        const Mask supp = facet_support(f);
        const std::vector<int> labels = pick(verts, supp);
        std::vector<std::int64_t> normal;
        std::vector<double> w;
        for (Mask t = supp; t; t &= t - 1) {
            normal.push_back(f.normal[lowest(t)]);
            w.push_back(double(f.normal[lowest(t)]));
        }
        const Graph sg = induced_subgraph(g, supp);
        Realization r = realize_min(sg);
        BracketOptions bo = opt.bracket;
        bo.target = double(f.rhs);
        bo.tol = opt.tol;
        BetaBracket b = beta_bracket(r, w, bo);
        HbarStatus st = HbarStatus::Undetermined;
        if (b.lower > f.rhs + opt.tol) {
            st = HbarStatus::Imperfect;
            if (!out.witness) out.witness = ImperfectWitness{labels, normal, f.rhs, b.lower, r.strings(), b.state};
        } else if (b.upper < f.rhs + opt.tol) {
            st = HbarStatus::Perfect;
        } else {
            out.gap = std::max(out.gap, b.upper - double(f.rhs));
        }
        auto& s = out.certificate[push(StepKind::Numeric, depth, labels, st)];
        s.normal = normal;
        s.rhs = f.rhs;
        s.lower = b.lower;
        s.upper = b.upper;
        s.lower_src = b.lower_src;
        s.upper_src = b.upper_src;
        return st;
    }

    HbarStatus numeric_loop(const std::vector<int>& verts, const StabPolytope& p, int depth,
                            const std::set<Mask>& settled) {
        HbarStatus st = HbarStatus::Perfect;
        for (const auto& f : p.facets) {
            if (!nontrivial(p.graph, f) || settled.count(facet_support(f))) continue;
            st = worst(st, facet_numeric(verts, f, depth));
            if (st == HbarStatus::Imperfect) break;
        }
        return st;
    }

    HbarStatus run(const std::vector<int>& verts, int depth) {
        const Graph g = induced_subgraph(root, verts);
        const int n = g.order();
        if (n > 10) fail("SizeOverflow", "the decider is limited to 10 vertices", std::to_string(n));
        if (!structural) return numeric_loop(verts, stab_facets(g), depth, {});

        for (const Graph& pat : forbidden) {
            auto emb = find_induced_subgraph(g, pat);
            if (!emb) continue;
            std::vector<int> labels;
            for (int v : *emb) labels.push_back(verts[v]);
            auto& s = out.certificate[push(StepKind::Forbidden, depth, verts, HbarStatus::Imperfect)];
            s.map = labels;
            s.pattern = to_graph6(pat);
            witness_for_pattern(labels);
            return HbarStatus::Imperfect;
        }
        if (is_perfect(g)) {
            push(StepKind::Perfect, depth, verts, HbarStatus::Perfect);
            return HbarStatus::Perfect;
        }
        const StabPolytope poly = stab_facets(g);
        if (is_h_perfect(poly)) {
            push(StepKind::HPerfect, depth, verts, HbarStatus::Perfect);
            return HbarStatus::Perfect;
        }
        if (auto tw = find_twins(g)) {
            const std::size_t at = push(StepKind::Twin, depth, verts, HbarStatus::Undetermined);
            out.certificate[at].map = {verts[tw->first], verts[tw->second]};
            std::vector<int> rest = verts;
            rest.erase(rest.begin() + tw->second);
            const HbarStatus st = run(rest, depth + 1);
            out.certificate[at].outcome = st;
            return st;
        }
        const auto split = [&](StepKind kind, const std::vector<Mask>& parts) {
            const std::size_t at = push(kind, depth, verts, HbarStatus::Undetermined);
            for (Mask m : parts) out.certificate[at].parts.push_back(pick(verts, m));
            HbarStatus st = HbarStatus::Perfect;
            for (Mask m : parts) {
                st = worst(st, run(pick(verts, m), depth + 1));
                if (st == HbarStatus::Imperfect) break;
            }
            out.certificate[at].outcome = st;
            return st;
        };
        if (auto co = connected_components(complement(g)); co.size() > 1) return split(StepKind::Join, co);
        if (auto cc = connected_components(g); cc.size() > 1) return split(StepKind::Components, cc);
        if (realize_min(g).length() <= 2) {
            if (auto emb = find_induced_subgraph(g15, g)) {
                auto& s = out.certificate[push(StepKind::G15, depth, verts, HbarStatus::Perfect)];
                s.map = *emb;
                return HbarStatus::Perfect;
            }
        }

        // Facets with a zero coordinate only involve a smaller induced subgraph.
        std::set<Mask> supports;
        bool full = false;
        for (const auto& f : poly.facets) {
            if (!nontrivial(g, f)) continue;
            const Mask s = facet_support(f);
            if (s == g.all()) full = true;
            else supports.insert(s);
        }
        std::set<Mask> settled;
        if (!supports.empty() && depth < root.order()) {
            const std::size_t at = push(StepKind::FacetZero, depth, verts, HbarStatus::Undetermined);
            for (Mask m : supports) out.certificate[at].parts.push_back(pick(verts, m));
            HbarStatus st = HbarStatus::Perfect;
            for (Mask m : supports) {
                const HbarStatus sub = run(pick(verts, m), depth + 1);
                if (sub == HbarStatus::Perfect) settled.insert(m);
                st = worst(st, sub);
                if (st == HbarStatus::Imperfect) break;
            }
            out.certificate[at].outcome = st;
            if (st == HbarStatus::Imperfect || (st == HbarStatus::Perfect && !full)) return st;
        }
        if (!numeric) return HbarStatus::Undetermined;
        return numeric_loop(verts, poly, depth, settled);
    }
};

HbarVerdict run_decider(const Graph& g, const DeciderOptions& opt, bool structural, bool numeric) {
    HbarVerdict v;
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    Decider d(g, opt, v, structural, numeric);
    v.status = d.run(all, 0);
    if (v.status != HbarStatus::Undetermined) v.gap = 0;
    if (v.status == HbarStatus::Imperfect) v.chromatic_number = chromatic_number(g);
    return v;
}

bool why_not(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool same_set(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

HbarVerdict structural_certificate(const Graph& g, const DeciderOptions& opt) { return run_decider(g, opt, true, false); }

HbarVerdict numeric_facet_loop(const Graph& g, const DeciderOptions& opt) { return run_decider(g, opt, false, true); }

HbarVerdict decide(const Graph& g, const DeciderOptions& opt) {
    return run_decider(g, opt, true, !opt.structural_only);
}

bool verify_certificate(const Graph& g, const HbarVerdict& v, double tol, std::string* why) {
    const Graph g15 = fixtures::g15();
    auto child_exists = [&](std::size_t from, int depth, const std::vector<int>& verts) {
        for (std::size_t k = from + 1; k < v.certificate.size(); ++k)
            if (v.certificate[k].depth == depth && same_set(v.certificate[k].vertices, verts)) return true;
        return false;
    };
    auto in_range = [&](const std::vector<int>& vs) {
        std::set<int> seen;
        for (int x : vs)
            if (x < 0 || x >= g.order() || !seen.insert(x).second) return false;
        return true;
    };
    bool standard_forbidden = false;
    for (std::size_t k = 0; k < v.certificate.size(); ++k) {
        const CertificateStep& s = v.certificate[k];
        const std::string at = "step " + std::to_string(k) + " (" + step_name(s.kind) + ")";
        if (!in_range(s.vertices)) return why_not(why, at + ": bad vertex list");
        const Graph sub = induced_subgraph(g, s.vertices);
        switch (s.kind) {
        case StepKind::Forbidden: {
            const Graph pat = parse_graph6(s.pattern);
            if (!in_range(s.map) || int(s.map.size()) != pat.order()) return why_not(why, at + ": bad embedding");
            if (!(induced_subgraph(g, s.map) == pat)) return why_not(why, at + ": embedding is not induced");
            if (isomorphic(pat, fixtures::anticycle(7)) || isomorphic(pat, fixtures::anticycle(9)))
                standard_forbidden = true;
            break;
        }
        case StepKind::Perfect:
            if (!is_perfect(sub)) return why_not(why, at + ": subgraph is not perfect");
            break;
        case StepKind::HPerfect:
            if (!is_h_perfect(sub)) return why_not(why, at + ": subgraph is not h-perfect");
            break;
        case StepKind::Twin: {
            if (s.map.size() != 2) return why_not(why, at + ": twin pair missing");
            const int u = s.map[0], w = s.map[1];
            if (std::find(s.vertices.begin(), s.vertices.end(), u) == s.vertices.end() ||
                std::find(s.vertices.begin(), s.vertices.end(), w) == s.vertices.end() || u == w)
                return why_not(why, at + ": twins outside the subgraph");
            for (int x : s.vertices)
                if (x != u && x != w && g.adjacent(u, x) != g.adjacent(w, x))
                    return why_not(why, at + ": vertices are not twins");
            std::vector<int> rest;
            for (int x : s.vertices)
                if (x != w) rest.push_back(x);
            if (!child_exists(k, s.depth + 1, rest)) return why_not(why, at + ": reduced graph not decided");
            break;
        }
        case StepKind::Join:
        case StepKind::Components: {
            std::vector<int> all;
            for (const auto& p : s.parts) all.insert(all.end(), p.begin(), p.end());
            if (!same_set(all, s.vertices) || !in_range(all)) return why_not(why, at + ": parts do not partition");
            for (std::size_t a = 0; a < s.parts.size(); ++a)
                for (std::size_t b = a + 1; b < s.parts.size(); ++b)
                    for (int x : s.parts[a])
                        for (int y : s.parts[b])
                            if (g.adjacent(x, y) != (s.kind == StepKind::Join))
                                return why_not(why, at + ": parts are not separated");
            if (s.outcome == HbarStatus::Perfect)
                for (const auto& p : s.parts)
                    if (!child_exists(k, s.depth + 1, p)) return why_not(why, at + ": part not decided");
            break;
        }
        case StepKind::G15: {
            if (int(s.map.size()) != sub.order()) return why_not(why, at + ": bad embedding");
            for (int x : s.map)
                if (x < 0 || x >= g15.order()) return why_not(why, at + ": bad embedding");
            if (!(induced_subgraph(g15, s.map) == sub)) return why_not(why, at + ": embedding is not induced");
            break;
        }
        case StepKind::FacetZero: {
            const StabPolytope p = stab_facets(sub);
            std::set<Mask> supports;
            for (const auto& f : p.facets)
                if (nontrivial(sub, f) && facet_support(f) != sub.all()) supports.insert(facet_support(f));
            if (supports.size() != s.parts.size()) return why_not(why, at + ": facet supports differ");
            for (Mask m : supports) {
                const auto labels = pick(s.vertices, m);
                if (std::none_of(s.parts.begin(), s.parts.end(), [&](const auto& q) { return same_set(q, labels); }))
                    return why_not(why, at + ": facet supports differ");
                if (s.outcome == HbarStatus::Perfect && !child_exists(k, s.depth + 1, labels))
                    return why_not(why, at + ": support not decided");
            }
            break;
        }
        case StepKind::Numeric: {
            if (s.normal.size() != s.vertices.size()) return why_not(why, at + ": normal size");
            Weights w;
            for (auto x : s.normal) {
                if (x < 0) return why_not(why, at + ": negative facet weight");
                w.push_back(Rational(x));
            }
            if (alpha(sub, w).value != Rational(s.rhs)) return why_not(why, at + ": rhs differs from alpha");
            if (s.outcome == HbarStatus::Perfect && !(s.upper < s.rhs + tol))
                return why_not(why, at + ": upper bound does not certify the facet");
            if (s.outcome == HbarStatus::Imperfect && !(s.lower > s.rhs + tol))
                return why_not(why, at + ": lower bound does not exceed alpha");
            break;
        }
        }
    }
    if (v.witness) {
        const ImperfectWitness& w = *v.witness;
        if (!in_range(w.vertices) || w.weights.size() != w.vertices.size()) return why_not(why, "witness: bad support");
        const Graph sub = induced_subgraph(g, w.vertices);
        Realization r(w.strings);
        if (!(r.graph() == sub)) return why_not(why, "witness: strings do not realize the subgraph");
        Weights wr;
        std::vector<double> wd;
        for (auto x : w.weights) {
            wr.push_back(Rational(x));
            wd.push_back(double(x));
        }
        if (alpha(sub, wr).value != Rational(w.alpha)) return why_not(why, "witness: alpha differs");
        const double val = beta_objective(r, wd, w.state);
        if (std::abs(val - w.lower) > 1e-9) return why_not(why, "witness: stored value not reproduced");
        if (!(val > w.alpha + tol)) return why_not(why, "witness: no violation");
    }
    if (v.status == HbarStatus::Imperfect && !v.witness && !standard_forbidden)
        return why_not(why, "imperfect verdict without a witness");
    if (v.status == HbarStatus::Perfect)
        for (const auto& s : v.certificate)
            if (s.outcome == HbarStatus::Imperfect) return why_not(why, "perfect verdict with an imperfect step");
    return true;
}

std::vector<CensusRow> census(const std::vector<Graph>& graphs, const DeciderOptions& opt, int jobs) {
    struct Item {
        bool connected, perfect, h_perfect;
        HbarVerdict verdict;
    };
    std::vector<Item> items(graphs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(graphs.size());
    auto worker = [&] {
        for (std::size_t i; (i = next++) < graphs.size();) {
            try {
                const Graph& g = graphs[i];
                items[i].connected = is_connected(g);
                items[i].perfect = is_perfect(g);
                items[i].h_perfect = items[i].perfect || is_h_perfect(g);
                items[i].verdict = decide(g, opt);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (!errors[i].empty()) fail("CensusError", errors[i], to_graph6(graphs[i]));

    std::map<int, CensusRow> rows;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CensusRow& row = rows[graphs[i].order()];
        row.n = graphs[i].order();
        const Item& it = items[i];
        ++row.graphs;
        row.connected += it.connected;
        row.perfect += it.perfect;
        row.h_perfect += it.h_perfect;
        switch (it.verdict.status) {
        case HbarStatus::Perfect: ++row.hbar_perfect; break;
        case HbarStatus::Imperfect:
            ++row.hbar_imperfect;
            row.imperfect.push_back(to_graph6(graphs[i]));
            row.imperfect_chromatic.push_back(it.verdict.chromatic_number.value_or(0));
            break;
        default:
            ++row.undetermined;
            row.open.push_back(to_graph6(graphs[i]));
        }
    }
    std::vector<CensusRow> out;
    for (auto& [n, row] : rows) out.push_back(std::move(row));
    return out;
}

} // namespace hbar
