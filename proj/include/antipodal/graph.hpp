#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace antipodal {

enum class Family { Cycle, Gp, Torus, Custom };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

/// Outer cycle vertices are x_j, inner cycle vertices are y_j.
enum class Ring { Outer, Inner };

struct GpVertex {
  Ring ring = Ring::Outer;
  int pos = 0;
  auto operator<=>(const GpVertex&) const = default;
};

/// Coordinate label used by the torus and by Cartesian products (factor indices).
struct GridVertex {
  int i = 0;
  int j = 0;
  auto operator<=>(const GridVertex&) const = default;
};

using VertexLabel = std::variant<GpVertex, GridVertex>;

std::string to_string(const VertexLabel& label);

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction rejects self-loops, duplicate edges and out-of-range endpoints.
/// Connectivity is not required here; the family constructors check it and
/// all_pairs_distances() refuses disconnected input.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges, Family family = Family::Custom,
        std::map<std::string, int> params = {},
        std::vector<VertexLabel> labels = {});

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  Family family() const { return family_; }
  const std::map<std::string, int>& params() const { return params_; }
  int param(const std::string& key) const;

  bool has_labels() const { return !labels_.empty(); }
  const VertexLabel& label(int v) const;
  const std::vector<VertexLabel>& labels() const { return labels_; }
  /// Throws std::out_of_range for an unknown label.
  int index_of(const VertexLabel& label) const;

  bool is_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> adjacency_;
  Family family_;
  std::map<std::string, int> params_;
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, int> label_index_;
};

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_cartesian_product(const Graph& g, const Graph& h);
/// GP(n,1): x_j at index j, y_j at index n + j.
Graph make_gp(int n);
/// T_{r,s} = C_r x C_s: (i, j) at index i * s + j.
Graph make_torus(int r, int s);

/// All-pairs hop distances with the diameter cached.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> dist);

  int order() const { return n_; }
  int operator()(int u, int v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  int diameter() const { return diameter_; }
  std::span<const int> row(int u) const;

 private:
  int n_;
  std::vector<int> dist_;
  int diameter_ = 0;
};

/// BFS from every source. Throws std::invalid_argument on disconnected input.
DistanceMatrix all_pairs_distances(const Graph& g);

int cycle_distance(int n, int i, int j);
int torus_distance(int r, int s, GridVertex a, GridVertex b);
int gp_diameter_formula(int n);
int torus_diameter_formula(int r, int s);

}  // namespace antipodal
