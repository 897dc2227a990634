#pragma once

#include <optional>
#include <string>

#include "antipodal/graph.hpp"
#include "antipodal/radio.hpp"

namespace antipodal {

enum class ExactStatus { Solved, TimedOut };

std::string to_string(ExactStatus status);

struct SolverBudget {
  long long max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

struct ExactResult {
  ExactStatus status = ExactStatus::TimedOut;
  int value = 0;        // optimum when Solved, best span found otherwise
  int lower_bound = 0;  // equals value when Solved
  Coloring witness;
  long long nodes = 0;
  double elapsed_seconds = 0.0;
  std::string incumbent_source;  // "construction", "supplied" or "greedy"
};

/// rc_k(G) by depth-first search over a fixed vertex order (degree descending,
/// then index). Each round asks for a coloring with span below the incumbent;
/// the search ends when a round is exhausted or the budget runs out.
ExactResult exact_rc_k(const Graph& graph, const DistanceMatrix& dist, int k,
                       SolverBudget budget = {},
                       std::optional<Coloring> incumbent = std::nullopt);

/// Cheap lower bound from vertex pairs and triples.
int rc_k_lower_bound(const DistanceMatrix& dist, int k);

}  // namespace antipodal
