#include "frcheck/matchings.hpp"

#include <algorithm>

#include "frcheck/error.hpp"

namespace frcheck {

bool is_perfect_matching(const CubicGraph& g, const EdgeSet& s) {
  std::vector<int> hits(g.vertex_count(), 0);
  for (EdgeIndex e : s.to_vector()) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++hits[g.edge(e).u];
    ++hits[g.edge(e).v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

PerfectMatching make_matching(const CubicGraph& g, const std::vector<EdgeIndex>& edges) {
  for (EdgeIndex e : edges)
    if (e < 0 || e >= g.edge_count())
      throw Error(ErrorCode::InvalidEdge, "edge index out of range");
  auto set = EdgeSet::from_indices(g.edge_count(), edges);
  if (static_cast<int>(edges.size()) != set.size() || !is_perfect_matching(g, set))
    throw Error(ErrorCode::InvalidEdge, "edge set is not a perfect matching");
  return {std::move(set), g.id()};
}

namespace {

class Enumerator {
 public:
  Enumerator(const CubicGraph& g, std::size_t limit)
      : g_(g), limit_(limit), covered_(g.vertex_count(), 0), current_(g.edge_count()) {}

  std::vector<PerfectMatching> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  // Matches the lowest uncovered vertex at or after `from` through each of
  // its edges whose far end is still free.
  void extend(Vertex from) {
    while (from < g_.vertex_count() && covered_[from]) ++from;
    if (from == g_.vertex_count()) {
      if (found_.size() == limit_) throw LimitExceeded(limit_);
      found_.push_back({current_, g_.id()});
      return;
    }
    covered_[from] = 1;
    for (EdgeIndex e : g_.incident(from)) {
      Vertex w = g_.edge(e).other(from);
      if (covered_[w]) continue;
      covered_[w] = 1;
      current_.insert(e);
      extend(from + 1);
      current_.erase(e);
      covered_[w] = 0;
    }
    covered_[from] = 0;
  }

  const CubicGraph& g_;
  std::size_t limit_;
  std::vector<char> covered_;
  EdgeSet current_;
  std::vector<PerfectMatching> found_;
};

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g, std::size_t limit) {
  auto all = Enumerator(g, limit).run();
  std::vector<std::pair<std::vector<EdgeIndex>, std::size_t>> keys;
  keys.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) keys.emplace_back(all[i].edges.to_vector(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<PerfectMatching> sorted;
  sorted.reserve(all.size());
  for (auto& [key, i] : keys) sorted.push_back(std::move(all[i]));
  return sorted;
}

}  // namespace frcheck
