#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbar/bracket.hpp"
#include "hbar/rational.hpp"
#include "hbar/stab.hpp"

namespace hbar {

enum class HbarStatus { Perfect, Imperfect, Undetermined };
std::string status_name(HbarStatus s);

enum class StepKind { Forbidden, Perfect, HPerfect, Twin, Join, Components, G15, FacetZero, Numeric };
std::string step_name(StepKind k);

// Every vertex list refers to labels of the graph passed to decide.
struct CertificateStep {
    StepKind kind = StepKind::Perfect;
    int depth = 0;
    std::vector<int> vertices;             // subgraph the step applies to
    std::vector<int> map;                  // twin pair, or embedding pattern vertex -> label
    std::vector<std::vector<int>> parts;   // join sides, components, facet supports
    std::string pattern;                   // graph6 of a forbidden pattern
    std::vector<std::int64_t> normal;      // facet over `vertices`
    std::int64_t rhs = 0;
    double lower = 0, upper = 0;
    std::string lower_src, upper_src;
    HbarStatus outcome = HbarStatus::Perfect;
};

struct ImperfectWitness {
    std::vector<int> vertices;           // support of the weight vector
    std::vector<std::int64_t> weights;   // over `vertices`
    std::int64_t alpha = 0;
    double lower = 0;
    std::vector<PauliString> strings;    // realization of the induced subgraph on `vertices`
    State state;
};

struct HbarVerdict {
    HbarStatus status = HbarStatus::Undetermined;
    std::vector<CertificateStep> certificate;
    std::optional<ImperfectWitness> witness;
    double gap = 0; // largest upper - alpha over facets left open
    std::optional<int> chromatic_number;
};

struct DeciderOptions {
    double tol = 1e-5;
    std::vector<Graph> forbidden; // appended to the anticycles on 7 and 9 vertices
    BracketOptions bracket;
    int witness_restarts = 50;
    bool structural_only = false;
};

HbarVerdict structural_certificate(const Graph& g, const DeciderOptions& opt = {});
HbarVerdict numeric_facet_loop(const Graph& g, const DeciderOptions& opt = {});
HbarVerdict decide(const Graph& g, const DeciderOptions& opt = {});

// Replays every step with graph predicates only; witness values are recomputed from the stored state.
bool verify_certificate(const Graph& g, const HbarVerdict& v, double tol = 1e-5, std::string* why = nullptr);

int chromatic_number(const Graph& g);

struct CensusRow {
    int n = 0;
    int graphs = 0;
    int connected = 0;
    int perfect = 0;
    int h_perfect = 0;
    int hbar_perfect = 0;
    int hbar_imperfect = 0;
    int undetermined = 0;
    std::vector<std::string> imperfect;    // graph6 of imperfect graphs
    std::vector<int> imperfect_chromatic;
    std::vector<std::string> open;         // graph6 of undetermined graphs
};

// Rows sorted by order; graphs decided on `jobs` threads.
std::vector<CensusRow> census(const std::vector<Graph>& graphs, const DeciderOptions& opt = {}, int jobs = 1);

} // namespace hbar
