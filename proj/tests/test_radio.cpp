#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "antipodal/radio.hpp"

using namespace antipodal;

namespace {

// Random valid coloring: walk a random vertex order and place each vertex at
// the least feasible color above a random jitter.
Coloring random_valid(const DistanceMatrix& d, int k, std::mt19937& rng) {
  const int n = d.order();
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  std::vector<int> colors(n, -1);
  for (int v : seq) {
    int c = std::uniform_int_distribution<int>(0, 2 * k)(rng);
    for (bool ok = false; !ok; ++c) {
      ok = true;
      for (int w = 0; w < n && ok; ++w) {
        if (colors[w] < 0 || w == v) continue;
        ok = std::abs(colors[w] - c) >= 1 + k - d(v, w);
      }
      if (ok) colors[v] = c;
    }
  }
  const int lo = *std::min_element(colors.begin(), colors.end());
  for (int& c : colors) c -= lo;
  return {colors, k};
}

}  // namespace

TEST_CASE("C4 radio 1-coloring examples") {
  auto d = all_pairs_distances(make_cycle(4));
  CHECK(verify_radio_k(d, {{0, 1, 0, 1}, 1}).valid);
  auto bad = verify_radio_k(d, {{0, 0, 1, 1}, 1});
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 2);
  CHECK(bad.violations[0] == Violation{0, 1, 1, 0});
  CHECK(bad.violations[1] == Violation{2, 3, 1, 0});
  CHECK(span(Coloring{{0, 1, 0, 1}, 1}) == 1);
}

TEST_CASE("verifier argument checks") {
  auto d = all_pairs_distances(make_cycle(4));
  CHECK_THROWS_AS(verify_radio_k(d, {{0, 1, 0}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_radio_k(d, {{0, 1, 0, 1}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(verify_radio_k(d, {{0, 1, 0, 1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(verify_radio_k(d, {{0, -1, 0, 1}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_radio_k(d, {{0, 1, 0, 1}, 1}, 2), std::invalid_argument);
}

TEST_CASE("skipping wide gaps gives the same report") {
  std::mt19937 rng(11);
  auto d = all_pairs_distances(make_torus(3, 4));
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> colors(12);
    for (int& c : colors) c = std::uniform_int_distribution<int>(0, 8)(rng);
    Coloring g{colors, k};
    auto full = verify_radio_k(d, g);
    auto fast = verify_radio_k(d, g, VerifyOptions{true});
    REQUIRE(full.valid == fast.valid);
    REQUIRE(full.violations == fast.violations);
  }
}

TEST_CASE("verifier is complete against a pairwise recount") {
  std::mt19937 rng(5);
  auto d = all_pairs_distances(make_gp(5));
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> colors(10);
    for (int& c : colors) c = std::uniform_int_distribution<int>(0, 6)(rng);
    Coloring g{colors, 2};
    std::size_t bad = 0;
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v) bad += std::abs(colors[u] - colors[v]) < 3 - d(u, v);
    auto rep = verify_radio_k(d, g);
    REQUIRE(rep.violations.size() == bad);
    REQUIRE(rep.valid == (bad == 0));
  }
}

TEST_CASE("span identity holds on random valid colorings, independent of ties") {
  std::mt19937 rng(2024);
  std::vector<Graph> graphs{make_cycle(7), make_gp(4), make_gp(5), make_torus(3, 4),
                            make_torus(3, 3), make_path(6)};
  for (const auto& g : graphs) {
    auto d = all_pairs_distances(g);
    for (int k = 1; k <= d.diameter(); ++k) {
      for (int trial = 0; trial < 30; ++trial) {
        auto col = random_valid(d, k, rng);
        REQUIRE(verify_radio_k(d, col).valid);
        auto o = order_by_color(col, d);
        REQUIRE(span_identity_residual(o, d, k) == 0);
        // reversed tie order among equal colors
        std::vector<int> seq = o.order;
        std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) {
          return col.colors[a] != col.colors[b] ? col.colors[a] < col.colors[b] : a > b;
        });
        auto o2 = ordering_from_sequence(col, d, seq);
        REQUIRE(span_identity_residual(o2, d, k) == 0);
      }
    }
  }
}

TEST_CASE("ordering helpers") {
  auto d = all_pairs_distances(make_cycle(4));
  Coloring g{{1, 0, 1, 0}, 1};
  auto o = order_by_color(g, d);
  CHECK(o.order == std::vector<int>{1, 3, 0, 2});
  CHECK(o.vertex_at(1) == 1);
  CHECK(o.epsilon(2) == 0);
  CHECK(o.epsilon(3) == 0);
  std::vector<int> unsorted{0, 1, 2, 3};
  CHECK_THROWS_AS(ordering_from_sequence(g, d, unsorted), std::invalid_argument);
  std::vector<int> repeated{1, 1, 0, 2};
  CHECK_THROWS_AS(ordering_from_sequence(g, d, repeated), std::invalid_argument);
  Coloring shifted{{2, 1, 2, 1}, 1};
  CHECK_THROWS_AS(span_identity_residual(order_by_color(shifted, d), d, 1), std::invalid_argument);
  CHECK_THROWS_AS(span_identity_residual(o, d, 2), std::invalid_argument);
}

TEST_CASE("certificate refuses non-antipodal k") {
  auto d = all_pairs_distances(make_gp(4));
  Coloring g{{0, 1, 2, 3, 4, 5, 6, 7}, 1};
  CHECK_THROWS_AS(minimality_certificate(order_by_color(g, d), d), std::invalid_argument);
}

TEST_CASE("greedy coloring along a sequence is tight and valid") {
  auto d = all_pairs_distances(make_gp(6));
  std::vector<int> seq(12);
  for (int i = 0; i < 12; ++i) seq[i] = i;
  auto g = greedy_coloring_along(seq, d, 3);
  CHECK(verify_radio_k(d, g).valid);
  CHECK(g.colors[0] == 0);
  for (int i = 1; i < 12; ++i) {
    CHECK(g.colors[seq[i]] >= g.colors[seq[i - 1]]);
    // one less would break something
    if (g.colors[seq[i]] == g.colors[seq[i - 1]]) continue;
    auto worse = g;
    --worse.colors[seq[i]];
    bool broke = false;
    for (int j = 0; j < i; ++j)
      broke = broke || std::abs(worse.colors[seq[j]] - worse.colors[seq[i]]) < 4 - d(seq[i], seq[j]);
    CHECK(broke);
  }
}
