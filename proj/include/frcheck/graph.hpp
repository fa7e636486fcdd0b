#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frcheck/edge_set.hpp"

namespace frcheck {

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable 3-regular loopless multigraph. Vertices are 0..n-1, edges are
/// numbered by their position in the construction list, and each vertex keeps
/// its three incident edge indices in ascending order.
class CubicGraph {
 public:
  CubicGraph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::array<EdgeIndex, 3>& incident(Vertex v) const { return incidence_[v]; }

  /// True when no two edges join the same pair of vertices.
  bool is_simple() const;

  /// Structural fingerprint over (n, edge list). Two graphs with the same
  /// labeled edge list share it; matchings and covers carry it to detect
  /// mixing objects from different graphs.
  std::uint64_t id() const { return id_; }

  /// The edges shared by the incidence lists of u and v, ascending.
  std::vector<EdgeIndex> edges_between(Vertex u, Vertex v) const;

  /// Edge multiset as sorted (min, max) pairs; equality of these is what
  /// "same labeled graph" means throughout.
  std::vector<std::pair<Vertex, Vertex>> labeled_edges() const;

  friend CubicGraph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeIndex, 3>> incidence_;
  std::uint64_t id_ = 0;
};

/// Validates and builds a cubic graph; edge indices equal list positions.
/// Throws Error with LoopEdge, InvalidEdge, OddOrder or NotCubic.
CubicGraph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

struct GraphDiagnostics {
  bool connected = true;
  bool bridgeless = true;
  std::optional<EdgeIndex> bridge_witness;
};

// A disconnected graph is reported as not bridgeless; the witness is only set
// when an actual bridge exists.
GraphDiagnostics diagnose(const CubicGraph& g);

// Connectivity of g with the edges in `removed` deleted. Returns the
// component index of every vertex and the number of components.
struct Components {
  std::vector<int> label;
  int count = 0;
};
Components components_without(const CubicGraph& g, const EdgeSet& removed);

// All bridges of g minus `removed`, ascending.
std::vector<EdgeIndex> bridges_without(const CubicGraph& g, const EdgeSet& removed);

/// The vertex shared by edges e and f, or nullopt if they are not adjacent.
/// Parallel edges share two vertices; the smaller one is returned.
std::optional<Vertex> shared_vertex(const CubicGraph& g, EdgeIndex e, EdgeIndex f);

}  // namespace frcheck
