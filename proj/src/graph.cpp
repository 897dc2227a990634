#include "antipodal/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace antipodal {

std::string to_string(Family family) {
  switch (family) {
    case Family::Cycle: return "cycle";
    case Family::Gp: return "gp";
    case Family::Torus: return "torus";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family family_from_string(const std::string& name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "gp") return Family::Gp;
  if (name == "torus") return Family::Torus;
  if (name == "custom") return Family::Custom;
  throw std::invalid_argument("unknown graph family: " + name);
}

std::string to_string(const VertexLabel& label) {
  if (const auto* gp = std::get_if<GpVertex>(&label)) {
    return (gp->ring == Ring::Outer ? "x" : "y") + std::to_string(gp->pos);
  }
  const auto& grid = std::get<GridVertex>(label);
  return "(" + std::to_string(grid.i) + "," + std::to_string(grid.j) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges, Family family,
             std::map<std::string, int> params, std::vector<VertexLabel> labels)
    : n_(n), family_(family), params_(std::move(params)), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);

  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.assign(offsets_.back(), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }

  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n) {
      throw std::invalid_argument("label count does not match vertex count");
    }
    for (int v = 0; v < n; ++v) {
      if (!label_index_.emplace(labels_[v], v).second) {
        throw std::invalid_argument("duplicate vertex label " + to_string(labels_[v]));
      }
    }
  }
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return {adjacency_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

bool Graph::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) throw std::out_of_range("graph has no parameter " + key);
  return it->second;
}

const VertexLabel& Graph::label(int v) const {
  if (labels_.empty()) throw std::logic_error("graph carries no labels");
  return labels_.at(v);
}

int Graph::index_of(const VertexLabel& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw std::out_of_range("unknown label " + to_string(label));
  return it->second;
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!g.is_connected()) throw std::logic_error(std::string(what) + " produced a disconnected graph");
}

}  // namespace

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  Graph g(n, std::move(edges), Family::Cycle, {{"n", n}});
  require_connected(g, "make_cycle");
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph make_cartesian_product(const Graph& g, const Graph& h) {
  if (!g.is_connected() || !h.is_connected()) {
    throw std::invalid_argument("cartesian product factors must be connected");
  }
  const int ng = g.order();
  const int nh = h.order();
  auto index = [nh](int a, int b) { return a * nh + b; };
  std::vector<Edge> edges;
  for (int a = 0; a < ng; ++a) {
    for (const auto& [b1, b2] : h.edges()) edges.emplace_back(index(a, b1), index(a, b2));
  }
  for (const auto& [a1, a2] : g.edges()) {
    for (int b = 0; b < nh; ++b) edges.emplace_back(index(a1, b), index(a2, b));
  }
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(ng) * nh);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) labels.emplace_back(GridVertex{a, b});
  Graph product(ng * nh, std::move(edges), Family::Custom, {}, std::move(labels));
  require_connected(product, "make_cartesian_product");
  return product;
}

Graph make_gp(int n) {
  if (n < 3) throw std::invalid_argument("GP(n,1) needs n >= 3");
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) {
    edges.emplace_back(j, (j + 1) % n);
    edges.emplace_back(n + j, n + (j + 1) % n);
    edges.emplace_back(j, n + j);
  }
  std::vector<VertexLabel> labels;
  for (int j = 0; j < n; ++j) labels.emplace_back(GpVertex{Ring::Outer, j});
  for (int j = 0; j < n; ++j) labels.emplace_back(GpVertex{Ring::Inner, j});
  Graph g(2 * n, std::move(edges), Family::Gp, {{"n", n}}, std::move(labels));
  require_connected(g, "make_gp");
  return g;
}

Graph make_torus(int r, int s) {
  if (r < 3 || s < 3) throw std::invalid_argument("torus needs r, s >= 3");
  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      edges.emplace_back(i * s + j, i * s + (j + 1) % s);
      edges.emplace_back(i * s + j, ((i + 1) % r) * s + j);
      labels.emplace_back(GridVertex{i, j});
    }
  }
  Graph g(r * s, std::move(edges), Family::Torus, {{"r", r}, {"s", s}}, std::move(labels));
  require_connected(g, "make_torus");
  return g;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {
  if (dist_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("distance matrix has the wrong size");
  }
  diameter_ = dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

std::span<const int> DistanceMatrix::row(int u) const {
  return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  std::queue<int> frontier;
  for (int source = 0; source < n; ++source) {
    int* row = dist.data() + static_cast<std::size_t>(source) * n;
    row[source] = 0;
    frontier.push(source);
    int reached = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          ++reached;
          frontier.push(w);
        }
      }
    }
    if (reached != n) throw std::invalid_argument("graph is disconnected");
  }
  return DistanceMatrix(n, std::move(dist));
}

int cycle_distance(int n, int i, int j) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("cycle vertex out of range");
  const int diff = i > j ? i - j : j - i;
  return std::min(diff, n - diff);
}

int torus_distance(int r, int s, GridVertex a, GridVertex b) {
  return cycle_distance(r, a.i, b.i) + cycle_distance(s, a.j, b.j);
}

int gp_diameter_formula(int n) {
  if (n < 3) throw std::invalid_argument("GP(n,1) needs n >= 3");
  return n % 2 == 0 ? (n + 2) / 2 : (n + 1) / 2;
}

int torus_diameter_formula(int r, int s) {
  if (r < 3 || s < 3) throw std::invalid_argument("torus needs r, s >= 3");
  return r / 2 + s / 2;
}

}  // namespace antipodal
