#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/clique.hpp"
#include "folkman/gamma.hpp"
#include "folkman/instance.hpp"
#include "folkman/oracle.hpp"

namespace folkman {

// graph6 is label-free, so constructions serialize their labeling alongside:
// v[i-1] / u[i-1] hold the 1-based vertex id of v_i / u_i.
struct GammaLabels {
    std::vector<int> v;
    std::vector<int> u;
};

// The artifact's scientific output: a schema-versioned record binding a graph
// (graph6), an instance, a verdict, and enough witness material to re-check
// the claim offline. Vertex ids in witnesses and labels are 1-based.
struct Certificate {
    std::string schema_version;
    std::string tool_version;
    std::string verdict;  // arrows | not-arrows | clique-value | check-report
    std::optional<std::string> graph_g6;
    std::optional<ArrowInstance> instance;
    std::optional<GammaLabels> labels;
    std::optional<Coloring> witness_coloring;      // not-arrows
    std::optional<std::vector<int>> witness_clique;  // clique-value, 1-based ids
    std::optional<int> clique_value;
    std::optional<CheckReport> check;
    std::optional<SearchStats> stats;
    std::optional<std::string> notes;
};

Certificate make_arrow_certificate(const Graph& g, const ArrowInstance& inst,
                                   const ArrowResult& res);
Certificate make_clique_certificate(const Graph& g, const CliqueResult& res);
Certificate make_check_certificate(const CheckReport& rep,
                                   const Graph* g = nullptr);

// Deterministic JSON (keys sorted, 2-space indent). Wall time is omitted when
// the stats came from a deterministic run, so such output is byte-identical
// across machines.
std::string certificate_to_json(const Certificate& cert);

// Strict parse: malformed JSON, unknown keys, or wrong field shapes raise
// ParseError. Accepts only the current schema_version.
Certificate certificate_from_json(const std::string& text);

// Re-validates the certificate from scratch: graph6 round-trip, instance
// arithmetic, and the witness (free coloring or clique membership) against
// the decoded graph. Throws ReplayError on any mismatch.
void replay_certificate(const Certificate& cert);

}  // namespace folkman
