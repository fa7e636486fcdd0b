#include "frcheck/graph.hpp"

#include <algorithm>
#include <string>

#include <fmt/core.h>

#include "frcheck/error.hpp"

namespace frcheck {
namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

CubicGraph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  CubicGraph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (std::size_t j = 0; j < edge_list.size(); ++j) {
    auto [u, v] = edge_list[j];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::InvalidEdge,
                  fmt::format("edge {} = ({}, {}) outside 0..{}", j, u, v, n - 1));
    if (u == v) throw Error(ErrorCode::LoopEdge, fmt::format("edge {} is a loop at {}", j, u));
    g.edges_.push_back({u, v});
  }
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, fmt::format("n = {} is odd", n));

  std::vector<int> degree(n, 0);
  g.incidence_.assign(n, {-1, -1, -1});
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    for (Vertex w : {g.edges_[j].u, g.edges_[j].v}) {
      if (degree[w] < 3) g.incidence_[w][degree[w]] = j;
      ++degree[w];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] != 3)
      throw Error(ErrorCode::NotCubic, fmt::format("vertex {} has degree {}", v, degree[v]));

  std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, static_cast<std::uint64_t>(n));
  for (const auto& e : g.edges_)
    h = fnv1a(h, (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v));
  g.id_ = h;
  return g;
}

bool CubicGraph::is_simple() const {
  auto pairs = labeled_edges();
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::vector<EdgeIndex> CubicGraph::edges_between(Vertex u, Vertex v) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e : incidence_[u])
    if (edges_[e].other(u) == v) out.push_back(e);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> CubicGraph::labeled_edges() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

Components components_without(const CubicGraph& g, const EdgeSet& removed) {
  Components c;
  c.label.assign(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (c.label[s] >= 0) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(v)) {
        if (removed.contains(e)) continue;
        Vertex w = g.edge(e).other(v);
        if (c.label[w] < 0) {
          c.label[w] = c.count;
          stack.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

std::vector<EdgeIndex> bridges_without(const CubicGraph& g, const EdgeSet& removed) {
  // Iterative lowlink DFS; the tree edge is skipped by index, so a parallel
  // partner of the tree edge counts as a back edge.
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeIndex> bridges;
  struct Frame {
    Vertex v;
    EdgeIndex via;
    int next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < 3) {
        EdgeIndex e = g.incident(top.v)[top.next++];
        if (e == top.via || removed.contains(e)) continue;
        Vertex w = g.edge(e).other(top.v);
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[top.v] = std::min(low[top.v], order[w]);
        }
      } else {
        Frame done = top;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > order[parent]) bridges.push_back(done.via);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

GraphDiagnostics diagnose(const CubicGraph& g) {
  GraphDiagnostics d;
  EdgeSet none(g.edge_count());
  d.connected = components_without(g, none).count <= 1;
  auto bridges = bridges_without(g, none);
  if (!bridges.empty()) d.bridge_witness = bridges.front();
  d.bridgeless = d.connected && bridges.empty();
  return d;
}

std::optional<Vertex> shared_vertex(const CubicGraph& g, EdgeIndex e, EdgeIndex f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  std::optional<Vertex> best;
  for (Vertex w : {a.u, a.v})
    if (b.has(w) && (!best || w < *best)) best = w;
  return best;
}

}  // namespace frcheck
