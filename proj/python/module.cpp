#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hbar/applications.hpp"
#include "hbar/error.hpp"
#include "hbar/graph6.hpp"
#include "hbar/stab.hpp"

namespace py = pybind11;
using namespace hbar;
using namespace pybind11::literals;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

Weights exact_weights(const py::object& w, int n) {
    if (w.is_none()) return unit_weights(n);
    Weights out;
    for (auto x : w) out.push_back(parse_rational(py::str(x).cast<std::string>()));
    return out;
}

std::vector<double> float_weights(const std::optional<std::vector<double>>& w, int n) {
    return w ? *w : std::vector<double>(n, 1.0);
}

std::vector<std::string> strings_of(const std::vector<PauliString>& s) {
    std::vector<std::string> out;
    for (const auto& p : s) out.push_back(p.str());
    return out;
}

std::vector<int> mask_list(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

BracketOptions bracket_options(std::uint64_t seed, const std::string& basis, double tol) {
    BracketOptions o;
    o.seesaw.seed = seed;
    o.tol = tol;
    o.levels.clear();
    const BasisLevel top = parse_basis_level(basis);
    for (BasisLevel l : {BasisLevel::A, BasisLevel::B, BasisLevel::BT, BasisLevel::C}) {
        o.levels.push_back(l);
        if (l == top) break;
    }
    return o;
}

py::dict bracket_dict(const BetaBracket& b) {
    py::list uppers;
    for (const auto& u : b.uppers) uppers.append(py::dict("source"_a = u.source, "value"_a = u.value, "note"_a = u.note));
    return py::dict("lower"_a = b.lower, "upper"_a = b.upper, "lower_src"_a = b.lower_src, "upper_src"_a = b.upper_src,
                    "warm_src"_a = b.warm_src, "uppers"_a = uppers, "state"_a = b.state);
}

py::dict verdict_dict(const Graph& g, const HbarVerdict& v) {
    py::list steps;
    for (const auto& s : v.certificate)
        steps.append(py::dict("step"_a = step_name(s.kind), "depth"_a = s.depth, "vertices"_a = s.vertices,
                              "map"_a = s.map, "parts"_a = s.parts, "pattern"_a = s.pattern, "normal"_a = s.normal,
                              "rhs"_a = s.rhs, "lower"_a = s.lower, "upper"_a = s.upper,
                              "outcome"_a = status_name(s.outcome)));
    py::dict d("status"_a = status_name(v.status), "certificate"_a = steps, "gap"_a = v.gap,
               "verified"_a = verify_certificate(g, v));
    if (v.witness)
        d["witness"] = py::dict("vertices"_a = v.witness->vertices, "weights"_a = v.witness->weights,
                                "alpha"_a = v.witness->alpha, "lower"_a = v.witness->lower,
                                "strings"_a = strings_of(v.witness->strings), "state"_a = v.witness->state);
    if (v.chromatic_number) d["chromatic_number"] = *v.chromatic_number;
    return d;
}

py::dict threshold_dict(const Threshold& t) {
    return py::dict("value"_a = t.value, "source"_a = t.source, "certified"_a = t.certified);
}

} // namespace

PYBIND11_MODULE(_hbar, m) {
    m.doc() = "Frustration graphs of Pauli strings: alpha, beta brackets, hbar-perfectness and applications";
    m.attr("__version__") = HBAR_VERSION;

    static py::exception<Error> error(m, "HbarError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(e.code(), std::string(e.what()), e.context());
            PyErr_SetObject(error.ptr(), args.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>())
        .def(py::init<int, const std::vector<std::pair<int, int>>&>())
        .def_static("from_graph6", &parse_graph6)
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

    m.def("complement", &complement);
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);
    m.def("induced_subgraph", py::overload_cast<const Graph&, const std::vector<int>&>(&induced_subgraph));
    m.def("isomorphic", &isomorphic);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("read_graph6_file", &read_graph6_file);

    m.def("frustration_graph", [](const std::vector<std::string>& s) { return frustration_graph(parse_strings(s)); });
    m.def("realize", [](const Graph& g) { return strings_of(realize_min(g).strings()); });

    m.def("alpha", [](const Graph& g, const py::object& w) { return fraction(alpha(g, exact_weights(w, g.order())).value); },
          "g"_a, "weights"_a = py::none());
    m.def("facets", [](const Graph& g) {
        const StabPolytope p = stab_facets(g);
        const auto classes = classify_facets(p);
        py::list out;
        for (std::size_t i = 0; i < p.facets.size(); ++i)
            out.append(py::dict("normal"_a = p.facets[i].normal, "rhs"_a = p.facets[i].rhs,
                                "class"_a = tag_name(classes[i].tag)));
        return out;
    });
    m.def("maximal_stable_sets", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (Mask s : enumerate_stable_sets(g).maximal) out.push_back(mask_list(s));
        return out;
    });
    m.def("is_perfect", &is_perfect);
    m.def("is_h_perfect", py::overload_cast<const Graph&>(&is_h_perfect));
    m.def("fractional_packing", [](const Graph& g) { return fraction(fractional_packing(g)); });
    m.def("lovasz_theta", [](const Graph& g) { return lovasz_theta(g, std::vector<double>(g.order(), 1.0)).value; });

    m.def(
        "beta_bracket",
        [](const Graph& g, const std::optional<std::vector<double>>& w, std::uint64_t seed, const std::string& basis,
           double tol) { return bracket_dict(beta_bracket(g, float_weights(w, g.order()), bracket_options(seed, basis, tol))); },
        "g"_a, "weights"_a = py::none(), "seed"_a = 20240601, "basis"_a = "BT", "tol"_a = 1e-5);
    m.def(
        "seesaw",
        [](const std::vector<std::string>& strings, const std::optional<std::vector<double>>& w, int restarts,
           std::uint64_t seed) {
            const Realization r(parse_strings(strings));
            SeesawOptions o;
            o.restarts = restarts;
            o.seed = seed;
            const SeesawResult s = seesaw(r, float_weights(w, r.size()), o);
            return py::dict("value"_a = s.value, "state"_a = s.state, "iterations"_a = s.iterations);
        },
        "strings"_a, "weights"_a = py::none(), "restarts"_a = 10, "seed"_a = 20240601);

    m.def(
        "decide",
        [](const Graph& g, double tol, std::uint64_t seed, const std::vector<Graph>& forbidden) {
            DeciderOptions o;
            o.tol = tol;
            o.bracket = bracket_options(seed, "BT", tol);
            o.forbidden = forbidden;
            return verdict_dict(g, decide(g, o));
        },
        "g"_a, "tol"_a = 1e-5, "seed"_a = 20240601, "forbidden"_a = std::vector<Graph>{});
    m.def(
        "census",
        [](const std::vector<Graph>& graphs, int jobs) {
            py::list out;
            for (const auto& r : census(graphs, {}, jobs))
                out.append(py::dict("n"_a = r.n, "graphs"_a = r.graphs, "connected"_a = r.connected,
                                    "perfect"_a = r.perfect, "h_perfect"_a = r.h_perfect,
                                    "hbar_perfect"_a = r.hbar_perfect, "hbar_imperfect"_a = r.hbar_imperfect,
                                    "undetermined"_a = r.undetermined, "imperfect"_a = r.imperfect));
            return out;
        },
        "graphs"_a, "jobs"_a = 1);

    m.def(
        "ground_bound",
        [](const std::vector<double>& a, const std::vector<std::string>& strings,
           const std::optional<std::vector<double>>& w) {
            const auto s = parse_strings(strings);
            const GroundBound g = w ? ground_bound_for_weights(a, s, *w) : ground_bound(a, s);
            py::dict d("weights"_a = g.weights, "objective"_a = g.objective, "bound"_a = g.bound,
                       "certified"_a = g.certified);
            if (g.exact) d["exact"] = *g.exact;
            return d;
        },
        "coeffs"_a, "strings"_a, "weights"_a = py::none());

    m.def(
        "delta_bounds",
        [](const Graph& g, bool refine) {
            const DeltaBounds d = delta_bounds(g, refine);
            py::dict out("alpha_star"_a = fraction(d.alpha_star), "lower"_a = d.lower, "theta"_a = d.theta,
                         "upper"_a = d.upper);
            if (d.refined_upper) out["refined_upper"] = *d.refined_upper;
            if (d.transitive_lower) {
                out["transitive_lower"] = *d.transitive_lower;
                out["transitive_upper"] = *d.transitive_upper;
            }
            return out;
        },
        "g"_a, "refine"_a = false);

    m.def(
        "uncertainty_lp",
        [](const Graph& g, int target, const py::object& caps) {
            const UncertaintyResult u = uncertainty_lp(g, target, exact_weights(caps, g.order()));
            py::list x;
            for (const auto& v : u.variances) x.append(fraction(v));
            return py::dict("min_variance"_a = fraction(u.min_variance), "variances"_a = x, "certified"_a = u.certified);
        },
        "g"_a, "target"_a, "caps"_a);

    m.def("qubit_budget", [](double n, double c, double eps) {
        const QubitBudget q = qubit_budget(n, c, eps);
        return py::dict("l"_a = q.l, "m"_a = q.m, "L"_a = q.L);
    });

    m.def(
        "nonlinear_witness",
        [](const CMatrix& rho, const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::optional<std::vector<double>>& w) {
            const Realization ra(parse_strings(a)), rb(parse_strings(b));
            const WitnessReport r = nonlinear_witness(rho, ra, rb, float_weights(w, ra.size()));
            return py::dict("point"_a = r.point, "value"_a = r.value, "threshold"_a = threshold_dict(r.threshold),
                            "violated"_a = r.violated.size(), "entangled"_a = r.entangled);
        },
        "rho"_a, "strings_a"_a, "strings_b"_a, "weights"_a = py::none());
    m.def("bell_diagonal_classify", [](const std::vector<double>& p) {
        const BellReport r = bell_diagonal_classify(p);
        return py::dict("point"_a = r.point, "entangled"_a = r.entangled, "algebraic"_a = r.algebraic,
                        "polytope"_a = r.polytope);
    });
    m.def("ghz_diagonal_classify", [](const std::vector<double>& p) {
        const GhzReport r = ghz_diagonal_classify(p);
        return py::dict("point"_a = r.point, "value"_a = r.value, "genuine"_a = r.genuine);
    });
    m.def("qutrit_cover_witness", [](const CMatrix& rho) {
        const QutritReport r = qutrit_cover_witness(rho);
        return py::dict("lhs"_a = r.lhs, "entangled"_a = r.entangled);
    });
    m.def(
        "multipartite_criterion",
        [](const std::vector<std::string>& stabs, const std::optional<std::vector<double>>& w,
           const std::optional<std::vector<double>>& expectations, bool estimates) {
            const MultipartiteCriterion c = multipartite_criterion(stabs, float_weights(w, int(stabs.size())));
            py::list bps;
            for (const auto& bp : c.bipartitions)
                bps.append(py::dict("side"_a = bp.side, "graph"_a = bp.graph, "threshold"_a = threshold_dict(bp.threshold)));
            py::dict d("bipartitions"_a = bps, "biseparable"_a = c.biseparable, "fully_separable"_a = c.fully_separable);
            if (expectations) {
                const MultipartiteReport r = evaluate_multipartite(c, *expectations);
                d["value"] = r.value;
                d["genuine"] = r.genuine;
                d["not_fully_separable"] = r.not_fully_separable;
                if (estimates) {
                    const EntanglementEstimate e = entanglement_estimates(c, *expectations);
                    d["taxicab_distance"] = e.taxicab_distance;
                    d["euclidean_distance"] = e.euclidean_distance;
                    d["lambda_gap"] = e.lambda_gap;
                    d["trace_lower"] = e.trace_lower;
                    d["hs_lower"] = e.hs_lower;
                }
            }
            return d;
        },
        "stabilizers"_a, "weights"_a = py::none(), "expectations"_a = py::none(), "estimates"_a = false);

    auto fx = m.def_submodule("fixtures", "Named graphs, states and Hamiltonians");
    fx.def("graph", &fixtures::by_name);
    fx.def("names", &fixtures::names);
    fx.def("anticycle", &fixtures::anticycle);
    fx.def("bell_diagonal", &fixtures::bell_diagonal);
    fx.def("ghz_states", &fixtures::ghz_states);
    fx.def("ghz_stabilizers", &fixtures::ghz_stabilizers);
    fx.def("s5_strings", [] { return strings_of(fixtures::s5_strings()); });
    fx.def("rho_v", &fixtures::rho_v);
    fx.def("qutrit_rho", &fixtures::qutrit_rho);
    fx.def("qutrit_unfaithful", &fixtures::qutrit_unfaithful);
    fx.def("chain_hamiltonian", [](int n) {
        const auto h = fixtures::chain_hamiltonian(n);
        return py::make_tuple(h.coeffs, strings_of(h.strings));
    });
    fx.def("chain_hamiltonian_xyz", [](int n) {
        const auto h = fixtures::chain_hamiltonian_xyz(n);
        return py::make_tuple(h.coeffs, strings_of(h.strings));
    });
}
