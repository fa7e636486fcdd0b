#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frcheck/edge_set.hpp"
#include "frcheck/graph.hpp"

namespace frcheck {

inline constexpr std::size_t kDefaultMatchingLimit = 1'000'000;

struct PerfectMatching {
  EdgeSet edges;
  std::uint64_t graph_id = 0;

  bool contains(EdgeIndex e) const { return edges.contains(e); }
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

bool is_perfect_matching(const CubicGraph& g, const EdgeSet& s);

// Wraps an edge set already known to be a perfect matching of g. Throws
// InvalidEdge if it is not.
PerfectMatching make_matching(const CubicGraph& g, const std::vector<EdgeIndex>& edges);

/// All perfect matchings of g, sorted lexicographically by their ascending
/// edge index lists. Throws LimitExceeded when more than `limit` exist.
std::vector<PerfectMatching> enumerate_perfect_matchings(
    const CubicGraph& g, std::size_t limit = kDefaultMatchingLimit);

}  // namespace frcheck
