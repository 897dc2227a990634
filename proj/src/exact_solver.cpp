#include "antipodal/exact_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "antipodal/gp_constructions.hpp"
#include "antipodal/torus_constructions.hpp"

namespace antipodal {

std::string to_string(ExactStatus status) {
  return status == ExactStatus::Solved ? "Solved" : "TimedOut";
}

int rc_k_lower_bound(const DistanceMatrix& dist, int k) {
  const int n = dist.order();
  auto req = [&](int a, int b) { return std::max(0, 1 + k - dist(a, b)); };
  int best = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) best = std::max(best, req(a, b));
  // Three vertices: whichever sits in the middle, the outer two are separated
  // by the sum of its two gaps.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const int mid_a = std::max(req(b, a) + req(a, c), req(b, c));
        const int mid_b = std::max(req(a, b) + req(b, c), req(a, c));
        const int mid_c = std::max(req(a, c) + req(c, b), req(a, b));
        best = std::max(best, std::min({mid_a, mid_b, mid_c}));
      }
    }
  }
  return best;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  Search(const DistanceMatrix& d, int k_, bool pin, SolverBudget b, Clock::time_point t0)
      : dist(d), k(k_), n(d.order()), pin_first_to_zero(pin), budget(b), start(t0) {}

  const DistanceMatrix& dist;
  int k;
  int n;
  std::vector<int> order;
  bool pin_first_to_zero;
  SolverBudget budget;
  Clock::time_point start;
  long long nodes = 0;
  bool out_of_budget = false;

  int max_color = 0;
  int words = 0;
  // domains[depth][vertex * words + w]: colors still open for vertex at that depth.
  std::vector<std::vector<std::uint64_t>> domains;
  std::vector<int> colors;

  bool tick() {
    ++nodes;
    if (nodes > budget.max_nodes) out_of_budget = true;
    if ((nodes & 0xfff) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      if (elapsed.count() > budget.max_seconds) out_of_budget = true;
    }
    return !out_of_budget;
  }

  // Is there a coloring with every color in 0..target?
  bool feasible(int target) {
    max_color = target;
    words = (target + 1 + 63) / 64;
    domains.assign(n + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) * words, 0));
    auto& root = domains[0];
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c <= target; ++c) root[v * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    // Symmetry: vertex-transitive families can put a color-0 vertex first;
    // otherwise g -> target - g lets the first vertex sit in the lower half.
    const int first = order[0];
    const int first_max = pin_first_to_zero ? 0 : target / 2;
    for (int c = first_max + 1; c <= target; ++c) {
      root[first * words + c / 64] &= ~(std::uint64_t{1} << (c % 64));
    }
    colors.assign(n, -1);
    return descend(0);
  }

  bool descend(int depth) {
    if (depth == n) return true;
    if (!tick()) return false;
    const int v = order[depth];
    const auto& dom = domains[depth];
    for (int c = 0; c <= max_color; ++c) {
      if (!(dom[v * words + c / 64] >> (c % 64) & 1)) continue;
      auto& next = domains[depth + 1];
      next = dom;
      bool dead = false;
      for (int later = depth + 1; later < n && !dead; ++later) {
        const int w = order[later];
        const int gap = 1 + k - dist(v, w);
        if (gap <= 0) continue;
        const int lo = std::max(0, c - gap + 1);
        const int hi = std::min(max_color, c + gap - 1);
        std::uint64_t* row = next.data() + static_cast<std::size_t>(w) * words;
        for (int x = lo; x <= hi; ++x) row[x / 64] &= ~(std::uint64_t{1} << (x % 64));
        bool any = false;
        for (int i = 0; i < words && !any; ++i) any = row[i] != 0;
        dead = !any;
      }
      if (dead) continue;
      colors[v] = c;
      if (descend(depth + 1)) return true;
      if (out_of_budget) return false;
    }
    colors[v] = -1;
    return false;
  }
};

bool vertex_transitive_family(const Graph& g) {
  return g.family() == Family::Cycle || g.family() == Family::Gp || g.family() == Family::Torus;
}

std::optional<Coloring> construction_incumbent(const Graph& g, const DistanceMatrix& dist, int k) {
  if (k != dist.diameter() - 1) return std::nullopt;
  try {
    if (g.family() == Family::Gp) return gp_antipodal_coloring(g.param("n"));
    if (g.family() == Family::Torus) {
      const int r = g.param("r");
      const int s = g.param("s");
      if (r % 2 == 1 && s % 2 == 1) return std::nullopt;
      return torus_antipodal_coloring(r, s);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

ExactResult exact_rc_k(const Graph& graph, const DistanceMatrix& dist, int k, SolverBudget budget,
                       std::optional<Coloring> incumbent) {
  const int n = graph.order();
  if (dist.order() != n) throw std::invalid_argument("distance matrix does not match graph");
  if (k < 1 || k > std::max(dist.diameter(), 1)) {
    throw std::invalid_argument("k must satisfy 1 <= k <= diameter");
  }
  const auto start = Clock::now();

  ExactResult result;
  if (incumbent) {
    if (incumbent->k != k) throw std::invalid_argument("incumbent was built for a different k");
    result.incumbent_source = "supplied";
  } else if ((incumbent = construction_incumbent(graph, dist, k))) {
    result.incumbent_source = "construction";
  } else {
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    incumbent = greedy_coloring_along(seq, dist, k);
    result.incumbent_source = "greedy";
  }
  if (!verify_radio_k(dist, *incumbent, k).valid) {
    throw std::invalid_argument("incumbent coloring is not a valid radio k-coloring");
  }
  result.witness = *incumbent;
  result.lower_bound = rc_k_lower_bound(dist, k);

  Search search(dist, k, vertex_transitive_family(graph), budget, start);
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return graph.degree(a) > graph.degree(b); });

  result.status = ExactStatus::Solved;
  while (span(result.witness) > result.lower_bound) {
    const int target = span(result.witness) - 1;
    if (search.feasible(target)) {
      result.witness = Coloring{search.colors, k};
      continue;
    }
    if (search.out_of_budget) {
      result.status = ExactStatus::TimedOut;
      break;
    }
    result.lower_bound = target + 1;  // exhausted: nothing fits in 0..target
  }
  result.value = span(result.witness);
  if (result.status == ExactStatus::Solved) result.lower_bound = result.value;
  result.nodes = search.nodes;
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace antipodal
