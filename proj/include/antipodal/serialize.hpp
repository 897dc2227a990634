#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "antipodal/exact_solver.hpp"
#include "antipodal/formula.hpp"
#include "antipodal/graph.hpp"
#include "antipodal/radio.hpp"

namespace antipodal {

using Json = nlohmann::json;

// All parse functions throw std::invalid_argument on malformed input.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Named families are referenced by parameters; custom graphs are embedded.
Json graph_ref(const Graph& g);
Graph graph_from_ref(const Json& ref);

/// A coloring file: graph reference, k, colors, and free-form metadata.
struct ColoringDocument {
  Graph graph;
  Coloring coloring;
  std::optional<std::vector<int>> ordering;  // meta.ordering when present
  Json meta = Json::object();
};

Json coloring_document(const Graph& g, const Coloring& coloring, Json meta = Json::object());
/// gen output: coloring plus construction and formula metadata.
Json construction_document(const Graph& g, const Construction& c);
ColoringDocument parse_coloring_document(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const MinimalityCertificate& cert);
Json to_json(const FormulaResult& f);
Json to_json(const PatternReport& report);
/// Timing is left out unless asked for so repeated runs print identical bytes.
Json to_json(const ExactResult& result, bool include_timing = false);

}  // namespace antipodal
