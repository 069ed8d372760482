#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hbar/applications.hpp"
#include "hbar/error.hpp"
#include "hbar/graph6.hpp"
#include "hbar/stab.hpp"

using json = nlohmann::ordered_json;
using namespace hbar;

namespace {

struct Run {
    std::uint64_t seed = 20240601;
    double tol = 1e-5;
    double sdp_tol = 1e-7;
    int sdp_max_iters = 200000;
    std::string sdp_method = "auto";
    std::string basis = "BT";
    int definetti_m = 16;
    int restarts = 10;
    int jobs = 1;
    bool pretty = false;
    std::string output;
    std::string digest_feed;
    bool stdin_used = false;

    json config() const {
        return {{"seed", seed},         {"tol", tol},
                {"sdp_tol", sdp_tol},   {"sdp_max_iters", sdp_max_iters},
                {"sdp_method", sdp_method}, {"basis", basis},
                {"definetti_m", definetti_m}, {"restarts", restarts},
                {"jobs", jobs}};
    }

    std::vector<BasisLevel> levels() const {
        std::vector<BasisLevel> out;
        const BasisLevel top = parse_basis_level(basis);
        for (BasisLevel l : {BasisLevel::A, BasisLevel::B, BasisLevel::BT, BasisLevel::C}) {
            out.push_back(l);
            if (l == top) break;
        }
        return out;
    }

    SdpOptions sdp() const {
        SdpOptions o;
        o.tol = sdp_tol;
        o.max_iters = sdp_max_iters;
        o.method = parse_sdp_method(sdp_method);
        return o;
    }

    BracketOptions bracket() const {
        BracketOptions o;
        o.seesaw.seed = seed;
        o.seesaw.restarts = restarts;
        o.definetti_m = definetti_m;
        o.levels = levels();
        o.sdp = sdp();
        o.tol = tol;
        return o;
    }

    DeciderOptions decider() const {
        DeciderOptions o;
        o.tol = tol;
        o.bracket = bracket();
        return o;
    }

    // Reads a file, or stdin for "-"; every byte read feeds the input digest.
    std::string slurp(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_used) fail("UsageError", "stdin can be read only once");
            stdin_used = true;
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(path, std::ios::binary);
            if (!in) fail("IoError", "cannot open file", path);
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        note(text);
        return text;
    }

    void note(const std::string& text) {
        digest_feed += std::to_string(text.size());
        digest_feed += ':';
        digest_feed += text;
    }
};

std::string sha256(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return "sha256:" + hex;
}

json num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}

json nums(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

json rat(const Rational& r) { return to_string(r); }

json mask_list(Mask m) {
    json a = json::array();
    for (; m; m &= m - 1) a.push_back(lowest(m));
    return a;
}

json string_list(const std::vector<PauliString>& s) {
    json a = json::array();
    for (const auto& p : s) a.push_back(p.str());
    return a;
}

std::vector<Graph> read_graphs(Run& run, const std::string& arg) {
    if (arg == "-" || std::filesystem::is_regular_file(arg)) {
        std::istringstream in(run.slurp(arg));
        auto graphs = read_graph6_stream(in);
        if (graphs.empty()) fail("EmptyInput", "no graphs in input", arg);
        return graphs;
    }
    run.note(arg);
    return {parse_graph6(arg)};
}

Graph read_graph(Run& run, const std::string& arg) {
    auto graphs = read_graphs(run, arg);
    if (graphs.size() != 1) fail("UsageError", "expected a single graph", arg);
    return graphs.front();
}

json read_json(Run& run, const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
        text = arg;
        run.note(text);
    } else {
        text = run.slurp(arg);
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", "invalid JSON", e.what());
    }
}

std::vector<double> read_doubles(Run& run, const std::string& arg) {
    const json j = read_json(run, arg);
    if (!j.is_array()) fail("ParseError", "expected a JSON array of numbers", arg);
    std::vector<double> out;
    for (const auto& x : j) {
        if (x.is_number()) out.push_back(x.get<double>());
        else if (x.is_string()) out.push_back(to_double(parse_rational(x.get<std::string>())));
        else fail("ParseError", "expected a number", x.dump());
    }
    return out;
}

std::vector<Rational> read_rationals(Run& run, const std::string& arg) {
    const json j = read_json(run, arg);
    if (!j.is_array()) fail("ParseError", "expected a JSON array", arg);
    std::vector<Rational> out;
    for (const auto& x : j) {
        if (x.is_number_integer()) out.emplace_back(x.get<long long>());
        else if (x.is_number()) out.emplace_back(x.get<double>());
        else if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
        else fail("ParseError", "expected a number or \"p/q\"", x.dump());
    }
    return out;
}

std::vector<std::string> read_words(Run& run, const std::string& arg) {
    std::istringstream in(run.slurp(arg));
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    if (out.empty()) fail("EmptyInput", "no Pauli strings in input", arg);
    return out;
}

// Either a JSON matrix of reals, a matrix of [re, im] pairs, or {"real": ..., "imag": ...}.
CMatrix read_density(Run& run, const std::string& arg) {
    const json j = read_json(run, arg);
    auto rows_of = [&](const json& m) {
        if (!m.is_array() || m.empty()) fail("ParseError", "density matrix must be a non-empty array of rows");
        return m;
    };
    const json re = j.is_object() ? rows_of(j.at("real")) : rows_of(j);
    const int dim = int(re.size());
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (!re[r].is_array() || int(re[r].size()) != dim) fail("ParseError", "density matrix must be square");
        for (int c = 0; c < dim; ++c) {
            const json& e = re[r][c];
            if (e.is_array() && e.size() == 2) rho(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
            else rho(r, c) = e.get<double>();
        }
    }
    if (j.is_object() && j.contains("imag")) {
        const json im = rows_of(j.at("imag"));
        if (int(im.size()) != dim) fail("ParseError", "imaginary part has the wrong shape");
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) rho(r, c) += cplx(0, im[r].at(c).get<double>());
    }
    return rho;
}

std::vector<double> weights_or_ones(Run& run, const std::string& arg, int n) {
    if (arg.empty()) return std::vector<double>(n, 1.0);
    auto w = read_doubles(run, arg);
    if (int(w.size()) != n) fail("DimMismatch", "weight vector length differs from the vertex count");
    return w;
}

json bracket_json(const BetaBracket& b) {
    json uppers = json::array();
    for (const auto& u : b.uppers) {
        json e = {{"source", u.source}, {"value", num(u.value)}};
        if (!u.note.empty()) e["note"] = u.note;
        uppers.push_back(e);
    }
    return {{"lower", num(b.lower)},         {"upper", num(b.upper)},   {"gap", num(b.gap())},
            {"lower_src", b.lower_src},      {"upper_src", b.upper_src}, {"warm_src", b.warm_src},
            {"seesaw_iterations", b.seesaw_iterations}, {"uppers", uppers}};
}

json verdict_json(const Graph& g, const HbarVerdict& v, double tol) {
    json steps = json::array();
    for (const auto& s : v.certificate) {
        json e = {{"step", step_name(s.kind)}, {"depth", s.depth}, {"vertices", s.vertices}};
        if (!s.map.empty()) e["map"] = s.map;
        if (!s.parts.empty()) e["parts"] = s.parts;
        if (!s.pattern.empty()) e["pattern"] = s.pattern;
        if (!s.normal.empty()) {
            e["normal"] = s.normal;
            e["rhs"] = s.rhs;
        }
        if (s.kind == StepKind::Numeric) {
            e["lower"] = num(s.lower);
            e["upper"] = num(s.upper);
            e["lower_src"] = s.lower_src;
            e["upper_src"] = s.upper_src;
        }
        e["outcome"] = status_name(s.outcome);
        steps.push_back(e);
    }
    std::string why;
    json out = {{"graph6", to_graph6(g)}, {"n", g.order()}, {"status", status_name(v.status)}, {"certificate", steps}};
    if (v.witness) {
        const auto& w = *v.witness;
        out["witness"] = {{"vertices", w.vertices}, {"weights", w.weights}, {"alpha", w.alpha},
                          {"lower", num(w.lower)},   {"strings", string_list(w.strings)}};
    }
    if (v.status == HbarStatus::Undetermined) out["gap"] = num(v.gap);
    if (v.chromatic_number) out["chromatic_number"] = *v.chromatic_number;
    out["verified"] = verify_certificate(g, v, tol, &why);
    if (!why.empty()) out["verify_note"] = why;
    return out;
}

json threshold_json(const Threshold& t) {
    return {{"value", num(t.value)}, {"source", t.source}, {"certified", t.certified}};
}

void emit(const Run& run, const json& j) {
    std::string text = run.pretty ? j.dump(2) : j.dump();
    text += '\n';
    if (run.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(run.output, std::ios::binary);
        if (!out) fail("IoError", "cannot write output", run.output);
        out << text;
    }
}

std::string census_table(const json& rows) {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3s %8s %10s %8s %10s %12s %14s %12s\n", "n", "graphs", "connected", "perfect",
                  "h_perfect", "hbar_perfect", "hbar_imperfect", "undetermined");
    os << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%3d %8d %10d %8d %10d %12d %14d %12d\n", r["n"].get<int>(),
                      r["graphs"].get<int>(), r["connected"].get<int>(), r["perfect"].get<int>(),
                      r["h_perfect"].get<int>(), r["hbar_perfect"].get<int>(), r["hbar_imperfect"].get<int>(),
                      r["undetermined"].get<int>());
        os << buf;
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    Run run;
    if (const char* s = std::getenv("HBAR_SEED")) run.seed = std::strtoull(s, nullptr, 10);

    CLI::App app{"Graph parameters of Pauli frustration graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(HBAR_VERSION));
    app.add_option("--seed", run.seed, "Random seed (HBAR_SEED overrides the default)");
    app.add_option("--tol", run.tol, "Decision tolerance");
    app.add_option("--sdp-tol", run.sdp_tol, "SDP stopping tolerance");
    app.add_option("--sdp-max-iters", run.sdp_max_iters, "First-order SDP iteration cap");
    app.add_option("--sdp-method", run.sdp_method, "auto, ipm or admm");
    app.add_option("--basis", run.basis, "Highest moment level: A, B, BT or C");
    app.add_option("--m", run.definetti_m, "de Finetti copies (0 disables)");
    app.add_option("--restarts", run.restarts, "See-saw restarts");
    app.add_option("--jobs", run.jobs, "Worker threads for census")->check(CLI::PositiveNumber);
    app.add_flag("--pretty", run.pretty, "Indented JSON; census prints a table");
    app.add_option("-o,--output", run.output, "Write the result to a file");

    std::string graph_arg, weights_arg, forbidden_arg, coeffs_arg, strings_arg, state_arg, strings_b_arg, expect_arg,
        stabs_arg, caps_arg;
    int target = 0;
    double qb_n = 0, qb_c = 0, qb_eps = 0;
    bool refine = false, use_sdp = false, use_lp = false, estimates = false;

    auto* realize = app.add_subcommand("realize", "Minimal-length Pauli realization");
    realize->add_option("graph", graph_arg, "graph6 string, file or -")->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "Exact weighted independence number");
    alpha_cmd->add_option("graph", graph_arg)->required();
    alpha_cmd->add_option("--weights", weights_arg, "JSON array (file, - or inline)");

    auto* beta_cmd = app.add_subcommand("beta", "Bracket of the weighted beta number");
    beta_cmd->add_option("graph", graph_arg)->required();
    beta_cmd->add_option("--weights", weights_arg);

    auto* facets = app.add_subcommand("facets", "Facets of the stable set polytope");
    facets->add_option("graph", graph_arg)->required();

    auto* hperf = app.add_subcommand("check-hperfect", "Is every facet a rank facet of a clique or odd hole");
    hperf->add_option("graph", graph_arg)->required();
    auto* perf = app.add_subcommand("check-perfect", "Perfect graph test");
    perf->add_option("graph", graph_arg)->required();

    auto* decide_cmd = app.add_subcommand("decide-hbar", "Decide hbar-perfectness with a certificate");
    decide_cmd->add_option("graph", graph_arg)->required();
    decide_cmd->add_option("--forbidden", forbidden_arg, "Extra forbidden induced subgraphs (.g6)");

    auto* census_cmd = app.add_subcommand("census", "Tally a graph6 file by class");
    census_cmd->add_option("file", graph_arg)->required();

    auto* ground = app.add_subcommand("ground-bound", "Lower bound on the ground energy of sum a_i S_i");
    ground->add_option("--coeffs", coeffs_arg)->required();
    ground->add_option("--strings", strings_arg)->required();
    ground->add_option("--weights", weights_arg, "Fixed weights instead of optimizing");

    auto* delta = app.add_subcommand("delta", "Bracket of the shadow-tomography parameter delta");
    delta->add_option("graph", graph_arg)->required();
    delta->add_flag("--refine-omega", refine);

    auto* witness = app.add_subcommand("witness", "Nonlinear bipartite entanglement witness");
    witness->add_option("--state", state_arg)->required();
    witness->add_option("--strings-a", strings_arg)->required();
    witness->add_option("--strings-b", strings_b_arg)->required();
    witness->add_option("--weights", weights_arg);

    auto* ghz = app.add_subcommand("ghz-criterion", "Multipartite criterion from stabilizer expectations");
    auto* ghz_in = ghz->add_option_group("input");
    ghz_in->add_option("--expectations", expect_arg);
    ghz_in->add_option("--state", state_arg);
    ghz_in->require_option(1);
    ghz->add_option("--stabilizers", stabs_arg, "Signed Pauli strings (default: three-qubit GHZ)");
    ghz->add_option("--weights", weights_arg);
    ghz->add_flag("--estimates", estimates, "Entanglement measure lower bounds");

    auto* unc = app.add_subcommand("uncertainty", "Minimum variance of one observable under variance caps");
    unc->add_option("graph", graph_arg)->required();
    unc->add_option("--target", target)->required();
    unc->add_option("--caps", caps_arg)->required();
    auto* lp_flag = unc->add_flag("--lp", use_lp);
    unc->add_flag("--sdp", use_sdp)->excludes(lp_flag);

    auto* budget = app.add_subcommand("qubit-budget", "Qubits needed for de Finetti rounding");
    budget->add_option("--n", qb_n)->required();
    budget->add_option("--c", qb_c)->required();
    budget->add_option("--eps", qb_eps)->required();

    auto error_out = [&](const std::string& code, const std::string& message, const std::string& context) {
        json e = {{"error", {{"code", code}, {"message", message}, {"context", context}}},
                  {"tool_version", HBAR_VERSION}};
        std::cout << (run.pretty ? e.dump(2) : e.dump()) << '\n';
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_out("UsageError", e.what(), "");
        return 2;
    }

    try {
        json result;
        if (*realize) {
            const Graph g = read_graph(run, graph_arg);
            const Realization r = realize_min(g);
            result = {{"graph6", to_graph6(g)}, {"n", g.order()}, {"length", r.length()},
                      {"strings", string_list(r.strings())}, {"round_trip", r.graph() == g}};
        } else if (*alpha_cmd) {
            const Graph g = read_graph(run, graph_arg);
            Weights w;
            if (weights_arg.empty()) w = unit_weights(g.order());
            else w = read_rationals(run, weights_arg);
            const AlphaResult a = alpha(g, w);
            result = {{"graph6", to_graph6(g)}, {"alpha", rat(a.value)}, {"argmax", mask_list(a.argmax)}};
        } else if (*beta_cmd) {
            const Graph g = read_graph(run, graph_arg);
            const auto w = weights_or_ones(run, weights_arg, g.order());
            const BetaBracket b = beta_bracket(g, w, run.bracket());
            result = {{"graph6", to_graph6(g)}, {"weights", nums(w)}, {"alpha", num(alpha_double(g, w))},
                      {"bracket", bracket_json(b)}};
        } else if (*facets) {
            const Graph g = read_graph(run, graph_arg);
            const StabPolytope p = stab_facets(g);
            const auto classes = classify_facets(p);
            json fs = json::array();
            for (std::size_t i = 0; i < p.facets.size(); ++i) {
                json f = {{"normal", p.facets[i].normal}, {"rhs", p.facets[i].rhs}, {"class", tag_name(classes[i].tag)}};
                if (classes[i].tag == FacetTag::OddHole) f["hole_size"] = 2 * classes[i].a + 1;
                fs.push_back(f);
            }
            result = {{"graph6", to_graph6(g)}, {"n", g.order()}, {"vertices", p.vertices.size()}, {"facets", fs}};
        } else if (*hperf) {
            const Graph g = read_graph(run, graph_arg);
            const StabPolytope p = stab_facets(g);
            const auto classes = classify_facets(p);
            json other = json::array();
            std::map<std::string, int> counts;
            for (std::size_t i = 0; i < classes.size(); ++i) {
                ++counts[tag_name(classes[i].tag)];
                if (classes[i].tag == FacetTag::Other)
                    other.push_back({{"normal", p.facets[i].normal}, {"rhs", p.facets[i].rhs}});
            }
            result = {{"graph6", to_graph6(g)}, {"h_perfect", is_h_perfect(p)}, {"facet_classes", counts},
                      {"other_facets", other}};
        } else if (*perf) {
            const Graph g = read_graph(run, graph_arg);
            result = {{"graph6", to_graph6(g)}, {"perfect", is_perfect(g)}};
        } else if (*decide_cmd) {
            const auto graphs = read_graphs(run, graph_arg);
            DeciderOptions opt = run.decider();
            if (!forbidden_arg.empty()) {
                std::istringstream in(run.slurp(forbidden_arg));
                opt.forbidden = read_graph6_stream(in);
            }
            json verdicts = json::array();
            for (const Graph& g : graphs) verdicts.push_back(verdict_json(g, decide(g, opt), run.tol));
            result = graphs.size() == 1 ? verdicts.front() : json{{"results", verdicts}};
        } else if (*census_cmd) {
            const auto graphs = read_graphs(run, graph_arg);
            const auto rows = census(graphs, run.decider(), run.jobs);
            json out = json::array();
            for (const auto& r : rows)
                out.push_back({{"n", r.n},
                               {"graphs", r.graphs},
                               {"connected", r.connected},
                               {"perfect", r.perfect},
                               {"h_perfect", r.h_perfect},
                               {"hbar_perfect", r.hbar_perfect},
                               {"hbar_imperfect", r.hbar_imperfect},
                               {"undetermined", r.undetermined},
                               {"imperfect", r.imperfect},
                               {"imperfect_chromatic", r.imperfect_chromatic},
                               {"open", r.open}});
            result = {{"rows", out}};
            if (run.pretty && run.output.empty()) {
                std::cout << census_table(out);
                return 0;
            }
        } else if (*ground) {
            const auto a = read_doubles(run, coeffs_arg);
            const auto s = parse_strings(read_words(run, strings_arg));
            GroundBound gb = weights_arg.empty() ? ground_bound(a, s)
                                                 : ground_bound_for_weights(a, s, read_doubles(run, weights_arg));
            result = {{"strings", string_list(s)},   {"coeffs", nums(a)},           {"weights", nums(gb.weights)},
                      {"objective", num(gb.objective)}, {"bound", num(gb.bound)}, {"certified", gb.certified}};
            if (gb.exact) result["exact"] = num(*gb.exact);
        } else if (*delta) {
            const Graph g = read_graph(run, graph_arg);
            const DeltaBounds d = delta_bounds(g, refine, parse_basis_level(run.basis), run.bracket());
            result = {{"graph6", to_graph6(g)}, {"alpha_star_complement", rat(d.alpha_star)}, {"lower", num(d.lower)},
                      {"theta_complement", num(d.theta)}, {"upper", num(d.upper)}};
            if (d.refined_upper) result["refined_upper"] = num(*d.refined_upper);
            if (d.transitive_lower) {
                result["transitive_lower"] = num(*d.transitive_lower);
                result["transitive_upper"] = num(*d.transitive_upper);
            }
        } else if (*witness) {
            const CMatrix rho = read_density(run, state_arg);
            const Realization a(parse_strings(read_words(run, strings_arg)));
            const Realization b(parse_strings(read_words(run, strings_b_arg)));
            const auto w = weights_or_ones(run, weights_arg, a.size());
            const WitnessReport r = nonlinear_witness(rho, a, b, w, run.decider());
            json viol = json::array();
            for (const auto& f : r.violated) viol.push_back({{"normal", f.normal}, {"rhs", f.rhs}, {"slack", num(f.slack)}});
            result = {{"point", nums(r.point)},       {"weights", nums(r.weights)},
                      {"value", num(r.value)},        {"threshold", threshold_json(r.threshold)},
                      {"violated_facets", viol},      {"verdict", r.entangled ? "entangled" : "undecided"}};
        } else if (*ghz) {
            std::vector<std::string> stabs =
                stabs_arg.empty() ? fixtures::ghz_stabilizers() : read_words(run, stabs_arg);
            const auto w = weights_or_ones(run, weights_arg, int(stabs.size()));
            const MultipartiteCriterion c = multipartite_criterion(stabs, w, run.decider());
            std::vector<double> e;
            if (!expect_arg.empty()) {
                e = read_doubles(run, expect_arg);
            } else {
                const CMatrix rho = read_density(run, state_arg);
                check_density(rho);
                for (std::size_t i = 0; i < c.stabilizers.size(); ++i)
                    e.push_back(c.signs[i] * (rho * to_dense(c.stabilizers[i])).trace().real());
            }
            const MultipartiteReport r = evaluate_multipartite(c, e);
            json bps = json::array();
            for (const auto& bp : c.bipartitions)
                bps.push_back({{"side", bp.side}, {"graph6", to_graph6(bp.graph)}, {"threshold", threshold_json(bp.threshold)}});
            result = {{"stabilizers", stabs},
                      {"weights", nums(w)},
                      {"bipartitions", bps},
                      {"biseparable_bound", num(c.biseparable)},
                      {"fully_separable_bound", num(c.fully_separable)},
                      {"point", nums(r.point)},
                      {"value", num(r.value)},
                      {"genuine", r.genuine},
                      {"not_fully_separable", r.not_fully_separable}};
            if (estimates) {
                const EntanglementEstimate est = entanglement_estimates(c, e);
                result["estimates"] = {{"taxicab_distance", num(est.taxicab_distance)},
                                       {"euclidean_distance", num(est.euclidean_distance)},
                                       {"lambda_gap", num(est.lambda_gap)},
                                       {"hs_norm", num(est.hs_norm)},
                                       {"trace_lower", num(est.trace_lower)},
                                       {"hs_lower", num(est.hs_lower)}};
            }
        } else if (*unc) {
            const Graph g = read_graph(run, graph_arg);
            const auto caps = read_rationals(run, caps_arg);
            result = {{"graph6", to_graph6(g)}, {"target", target}};
            if (use_sdp) {
                std::vector<double> dc;
                for (const auto& c : caps) dc.push_back(to_double(c));
                const SdpSolution s = uncertainty_sdp(g, target, dc, parse_basis_level(run.basis), run.sdp());
                result["method"] = "sdp";
                result["min_variance"] = num(s.value);
                result["converged"] = s.converged;
            } else {
                const UncertaintyResult u = uncertainty_lp(g, target, caps, run.decider());
                json x = json::array();
                for (const auto& v : u.variances) x.push_back(rat(v));
                result["method"] = "lp";
                result["min_variance"] = rat(u.min_variance);
                result["variances"] = x;
                result["certified"] = u.certified;
            }
        } else if (*budget) {
            const QubitBudget q = qubit_budget(qb_n, qb_c, qb_eps);
            result = {{"l", num(q.l)}, {"m", q.m}, {"L", q.L}};
        }
        json out = {{"tool_version", HBAR_VERSION},
                    {"command", app.get_subcommands().front()->get_name()},
                    {"config", run.config()},
                    {"input_digest", sha256(run.digest_feed)},
                    {"result", result}};
        emit(run, out);
        return 0;
    } catch (const Error& e) {
        error_out(e.code(), e.what(), e.context());
        return 1;
    } catch (const std::exception& e) {
        error_out("InternalError", e.what(), "");
        return 1;
    }
}
