#include "frcheck/cuts.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <fmt/core.h>

#include "frcheck/error.hpp"

namespace frcheck {
namespace {

[[noreturn]] void invalid_cut(const std::string& why) { throw Error(ErrorCode::InvalidCut, why); }

bool connected_without(const CubicGraph& g, const std::vector<EdgeIndex>& removed) {
  return components_without(g, EdgeSet::from_indices(g.edge_count(), removed)).count <= 1;
}

bool is_bipartite(const CubicGraph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Connected cubic multigraphs without two vertex-disjoint cycles are exactly
// the theta graph, K4 and K3,3: any double edge in a larger graph leaves at
// least as many edges as vertices behind, and among simple graphs the
// wheels and K3,p are the only candidates, of which K4 = W3 and K3,3 are cubic.
bool lacks_disjoint_cycles(const CubicGraph& g) {
  const int n = g.vertex_count();
  if (n == 2) return true;
  if (n == 4) return g.is_simple();
  if (n == 6) return g.is_simple() && is_bipartite(g);
  return false;
}

}  // namespace

EdgeCut make_cut(const CubicGraph& g, std::vector<EdgeIndex> edges) {
  std::sort(edges.begin(), edges.end());
  if (edges.empty()) invalid_cut("empty edge set");
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) invalid_cut("repeated edge");
  for (EdgeIndex e : edges)
    if (e < 0 || e >= g.edge_count()) invalid_cut(fmt::format("edge {} out of range", e));

  auto comps = components_without(g, EdgeSet::from_indices(g.edge_count(), edges));
  if (comps.count != 2) invalid_cut(fmt::format("removal leaves {} components", comps.count));
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<EdgeIndex> rest;
    for (std::size_t x = 0; x < edges.size(); ++x)
      if (x != skip) rest.push_back(edges[x]);
    if (!connected_without(g, rest)) invalid_cut("edge set is not minimal");
  }

  EdgeCut cut;
  cut.edges = std::move(edges);
  const int label_a = comps.label.empty() ? 0 : comps.label[0];
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    (comps.label[v] == label_a ? cut.side_a : cut.side_b).push_back(v);
  cut.trivial = cut.side_a.size() == 1 || cut.side_b.size() == 1;
  return cut;
}

std::vector<EdgeCut> enumerate_small_cuts(const CubicGraph& g, int max_size) {
  if (max_size < 1 || max_size > 3) throw Error(ErrorCode::BadParameter, "max_size must be 1, 2 or 3");
  if (!diagnose(g).connected) throw Error(ErrorCode::Disconnected, "cut enumeration needs a connected graph");
  const int m = g.edge_count();
  std::vector<EdgeCut> cuts;
  EdgeSet removed(m);

  // A minimal cut {a, ..., c} with c largest leaves G - {a, ...} connected and
  // makes c one of its bridges.
  auto bridges_above = [&](EdgeIndex floor) {
    auto all = bridges_without(g, removed);
    all.erase(all.begin(), std::upper_bound(all.begin(), all.end(), floor));
    return all;
  };

  for (EdgeIndex a : bridges_above(-1)) cuts.push_back(make_cut(g, {a}));
  if (max_size >= 2) {
    for (EdgeIndex a = 0; a < m; ++a) {
      if (!connected_without(g, {a})) continue;
      removed.insert(a);
      for (EdgeIndex b : bridges_above(a))
        if (connected_without(g, {b})) cuts.push_back(make_cut(g, {a, b}));
      removed.erase(a);
    }
  }
  if (max_size >= 3) {
    for (EdgeIndex a = 0; a < m; ++a) {
      for (EdgeIndex b = a + 1; b < m; ++b) {
        if (!connected_without(g, {a, b})) continue;
        removed.insert(a);
        removed.insert(b);
        for (EdgeIndex c : bridges_above(b))
          if (connected_without(g, {a, c}) && connected_without(g, {b, c}))
            cuts.push_back(make_cut(g, {a, b, c}));
        removed.erase(b);
        removed.erase(a);
      }
    }
  }
  std::stable_sort(cuts.begin(), cuts.end(), [](const EdgeCut& x, const EdgeCut& y) {
    return std::make_pair(x.size(), x.edges) < std::make_pair(y.size(), y.edges);
  });
  return cuts;
}

bool side_has_cycle(const CubicGraph& g, const std::vector<Vertex>& side) {
  std::vector<int> parent(g.vertex_count(), -1);
  for (Vertex v : side) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    if (parent[e.u] < 0 || parent[e.v] < 0) continue;
    Vertex ru = find(e.u), rv = find(e.v);
    if (ru == rv) return true;
    parent[ru] = rv;
  }
  return false;
}

CyclicConnectivity is_cyclically_4_edge_connected(const CubicGraph& g) {
  if (!diagnose(g).connected) throw Error(ErrorCode::Disconnected, "graph is not connected");
  CyclicConnectivity result;
  result.vacuous = lacks_disjoint_cycles(g);
  if (result.vacuous) return result;
  for (auto& cut : enumerate_small_cuts(g, 3)) {
    if (side_has_cycle(g, cut.side_a) && side_has_cycle(g, cut.side_b)) {
      result.holds = false;
      result.witness = std::move(cut);
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

struct CutEnd {
  Vertex in_a;
  Vertex in_b;
};

std::vector<CutEnd> cut_ends(const CubicGraph& g, const EdgeCut& cut) {
  std::vector<char> in_a(g.vertex_count(), 0);
  for (Vertex v : cut.side_a) in_a[v] = 1;
  std::vector<CutEnd> ends;
  for (EdgeIndex e : cut.edges) {
    const Edge& edge = g.edge(e);
    ends.push_back(in_a[edge.u] ? CutEnd{edge.u, edge.v} : CutEnd{edge.v, edge.u});
  }
  return ends;
}

// Builds one part: the side's vertices renumbered ascending, its internal
// edges in original order, then the edges produced by `attach`.
template <class Attach>
void build_part(const CubicGraph& g, const std::vector<Vertex>& side, int which, SplitResult& out,
                CubicGraph& part, std::vector<EdgeIndex>& origin, std::vector<EdgeIndex>& added,
                Attach&& attach) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t x = 0; x < side.size(); ++x) {
    local[side[x]] = static_cast<Vertex>(x);
    out.vertex_map[side[x]] = {which, static_cast<Vertex>(x)};
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  origin.clear();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (local[edge.u] >= 0 && local[edge.v] >= 0) {
      edges.emplace_back(local[edge.u], local[edge.v]);
      origin.push_back(e);
    }
  }
  int n = static_cast<int>(side.size());
  for (auto [u, v] : attach(local, n)) {
    added.push_back(static_cast<EdgeIndex>(edges.size()));
    edges.emplace_back(u, v);
    origin.push_back(-1);
  }
  part = build_graph(n, edges);
}

}  // namespace

SplitResult split_2cut(const CubicGraph& g, const EdgeCut& cut) {
  if (cut.size() != 2) invalid_cut("a 2-cut split needs exactly two cut edges");
  SplitResult out;
  out.original = g;
  out.cut = make_cut(g, cut.edges);
  auto ends = cut_ends(g, out.cut);
  if (ends[0].in_a == ends[1].in_a || ends[0].in_b == ends[1].in_b)
    invalid_cut("cut edges share an endpoint");
  out.vertex_map.assign(g.vertex_count(), {0, -1});

  build_part(g, out.cut.side_a, 1, out, out.g1, out.edge_origin_1, out.new_edges_1,
             [&](const std::vector<Vertex>& local, int&) {
               return std::vector<std::pair<Vertex, Vertex>>{{local[ends[0].in_a], local[ends[1].in_a]}};
             });
  build_part(g, out.cut.side_b, 2, out, out.g2, out.edge_origin_2, out.new_edges_2,
             [&](const std::vector<Vertex>& local, int&) {
               return std::vector<std::pair<Vertex, Vertex>>{{local[ends[0].in_b], local[ends[1].in_b]}};
             });
  return out;
}

SplitResult split_3cut(const CubicGraph& g, const EdgeCut& cut) {
  if (cut.size() != 3) invalid_cut("a 3-cut split needs exactly three cut edges");
  SplitResult out;
  out.original = g;
  out.cut = make_cut(g, cut.edges);
  if (out.cut.trivial) invalid_cut("trivial 3-cut");
  auto ends = cut_ends(g, out.cut);
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y)
      if (ends[x].in_a == ends[y].in_a || ends[x].in_b == ends[y].in_b)
        invalid_cut("cut edges do not form a matching");
  out.vertex_map.assign(g.vertex_count(), {0, -1});

  auto star = [&](bool side_a) {
    return [&ends, side_a](const std::vector<Vertex>& local, int& n) {
      Vertex hub = n++;
      std::vector<std::pair<Vertex, Vertex>> spokes;
      for (const auto& end : ends) spokes.emplace_back(local[side_a ? end.in_a : end.in_b], hub);
      return spokes;
    };
  };
  build_part(g, out.cut.side_a, 1, out, out.g1, out.edge_origin_1, out.new_edges_1, star(true));
  build_part(g, out.cut.side_b, 2, out, out.g2, out.edge_origin_2, out.new_edges_2, star(false));
  return out;
}

namespace {

// Which new edge each entry of a part triple uses: for 2-cut parts 1 or 0
// (uses the new edge or not), for 3-cut parts the position 0..2 of the spoke.
std::vector<int> entry_keys(const SplitResult& split, int part, const CoverList& triple) {
  const CubicGraph& g = split.part(part);
  if (triple.graph_id != g.id()) throw Error(ErrorCode::MixedSplit, "triple does not belong to this split part");
  if (!is_valid_fr_triple(g, triple))
    throw Error(ErrorCode::BadParameter, "input is not an FR-triple of the split part");
  const auto& added = part == 1 ? split.new_edges_1 : split.new_edges_2;
  std::vector<int> keys;
  for (const auto& pm : triple.matchings) {
    if (!split.is_three_cut()) {
      keys.push_back(pm.contains(added[0]) ? 1 : 0);
      continue;
    }
    int key = -1;
    for (int x = 0; x < 3; ++x)
      if (pm.contains(added[x])) key = x;
    if (key < 0) throw std::logic_error("3-cut part matching avoids every spoke of the new vertex");
    keys.push_back(key);
  }
  return keys;
}

}  // namespace

std::vector<int> cut_frequencies(const SplitResult& split, int part, const CoverList& triple) {
  auto keys = entry_keys(split, part, triple);
  if (!split.is_three_cut()) return {static_cast<int>(std::count(keys.begin(), keys.end(), 1))};
  std::vector<int> k(3, 0);
  for (int key : keys) ++k[key];
  if (std::accumulate(k.begin(), k.end(), 0) != 3 || *std::max_element(k.begin(), k.end()) > 2)
    throw std::logic_error("cut frequencies violate k1 + k2 + k3 = 3, ki <= 2");
  return k;
}

CoverList glue_triples(const SplitResult& split, const CoverList& t1, const CoverList& t2) {
  auto keys1 = entry_keys(split, 1, t1);
  auto keys2 = entry_keys(split, 2, t2);
  if (cut_frequencies(split, 1, t1) != cut_frequencies(split, 2, t2))
    throw Error(ErrorCode::FrequencyMismatch, "the parts use the cut with different frequencies");

  const CubicGraph& g = split.original;
  std::vector<char> used(3, 0);
  std::vector<PerfectMatching> glued;
  for (int x = 0; x < 3; ++x) {
    int y = 0;
    while (used[y] || keys2[y] != keys1[x]) ++y;
    used[y] = 1;

    EdgeSet edges(g.edge_count());
    for (EdgeIndex e : t1.matchings[x].edges.to_vector())
      if (split.edge_origin_1[e] >= 0) edges.insert(split.edge_origin_1[e]);
    for (EdgeIndex e : t2.matchings[y].edges.to_vector())
      if (split.edge_origin_2[e] >= 0) edges.insert(split.edge_origin_2[e]);
    if (split.is_three_cut()) {
      edges.insert(split.cut.edges[keys1[x]]);
    } else if (keys1[x] == 1) {
      for (EdgeIndex e : split.cut.edges) edges.insert(e);
    }
    if (!is_perfect_matching(g, edges)) throw std::logic_error("glued entry is not a perfect matching");
    glued.push_back({std::move(edges), g.id()});
  }
  auto result = make_cover(CoverKind::FR, std::move(glued));
  if (!is_fr_triple(result)) throw std::logic_error("glued triple is not an FR-triple");
  return result;
}

std::vector<CoverList> glue_all(const SplitResult& split, SearchControl control) {
  auto triples1 = CoverSearch(split.g1, control).enumerate_fr_triples(control.matching_limit);
  auto triples2 = CoverSearch(split.g2, control).enumerate_fr_triples(control.matching_limit);
  std::map<std::vector<int>, std::vector<const CoverList*>> by_profile;
  for (const auto& t : triples2) by_profile[cut_frequencies(split, 2, t)].push_back(&t);
  std::vector<CoverList> glued;
  for (const auto& t1 : triples1) {
    auto it = by_profile.find(cut_frequencies(split, 1, t1));
    if (it == by_profile.end()) continue;
    for (const CoverList* t2 : it->second) glued.push_back(glue_triples(split, t1, *t2));
  }
  return glued;
}

}  // namespace frcheck
