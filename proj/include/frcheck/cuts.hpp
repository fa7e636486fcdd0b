#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frcheck/covers.hpp"
#include "frcheck/graph.hpp"

namespace frcheck {

/// A minimal disconnecting edge set together with the two vertex sides.
/// side_a is the side holding the lowest-numbered vertex.
struct EdgeCut {
  std::vector<EdgeIndex> edges;  // ascending
  std::vector<Vertex> side_a;    // ascending
  std::vector<Vertex> side_b;    // ascending
  bool trivial = false;          // one side is a single vertex

  int size() const { return static_cast<int>(edges.size()); }
};

/// Validates that `edges` is a minimal disconnecting set of g and computes the
/// sides. Throws InvalidCut.
EdgeCut make_cut(const CubicGraph& g, std::vector<EdgeIndex> edges);

/// Every minimal disconnecting edge set with at most `max_size` edges
/// (1 <= max_size <= 3), ordered by size and then lexicographically.
std::vector<EdgeCut> enumerate_small_cuts(const CubicGraph& g, int max_size);

// True when the subgraph induced by `side` contains a cycle (a pair of
// parallel edges counts).
bool side_has_cycle(const CubicGraph& g, const std::vector<Vertex>& side);

struct CyclicConnectivity {
  bool holds = true;
  /// Set when g has no two vertex-disjoint cycles (theta, K4, K3,3), so no
  /// cut can separate cycles and `holds` is vacuous.
  bool vacuous = false;
  /// First cut of size <= 3 with a cycle on both sides, when holds is false.
  std::optional<EdgeCut> witness;
};

/// Requires a connected graph (Disconnected otherwise).
CyclicConnectivity is_cyclically_4_edge_connected(const CubicGraph& g);

/// The two smaller cubic graphs obtained from a 2- or 3-edge-cut, with the
/// maps needed to move matchings between them and the original.
///
/// 2-cut: each part gets one new edge joining its two cut endpoints.
/// 3-cut: each part gets one new vertex joined to its three cut endpoints;
/// new_edges_1[i], new_edges_2[i] and cut.edges[i] correspond.
struct SplitResult {
  CubicGraph original;
  EdgeCut cut;
  CubicGraph g1;  // built on cut.side_a
  CubicGraph g2;  // built on cut.side_b
  std::vector<EdgeIndex> new_edges_1;
  std::vector<EdgeIndex> new_edges_2;
  // original vertex -> (part 1 or 2, vertex in that part)
  std::vector<std::pair<int, Vertex>> vertex_map;
  // part edge -> original edge, or -1 for a new edge
  std::vector<EdgeIndex> edge_origin_1;
  std::vector<EdgeIndex> edge_origin_2;

  bool is_three_cut() const { return cut.size() == 3; }
  const CubicGraph& part(int which) const { return which == 1 ? g1 : g2; }
};

SplitResult split_2cut(const CubicGraph& g, const EdgeCut& cut);
SplitResult split_3cut(const CubicGraph& g, const EdgeCut& cut);

/// Frequencies of the new edges of one part under an FR-triple of that part.
/// For a 3-cut part the three values are asserted to sum to 3 and stay <= 2.
std::vector<int> cut_frequencies(const SplitResult& split, int part, const CoverList& triple);

/// Glues FR-triples of the two parts into an FR-triple of the original graph.
/// Entries are paired in t1 order with the first unused t2 entry that uses
/// the same new edge. Throws FrequencyMismatch or MixedSplit.
CoverList glue_triples(const SplitResult& split, const CoverList& t1, const CoverList& t2);

/// Glues every frequency-compatible pair of FR-triples of the two parts.
std::vector<CoverList> glue_all(const SplitResult& split, SearchControl control = {});

}  // namespace frcheck
