#include "frcheck/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include <fmt/core.h>

#include "frcheck/error.hpp"

namespace frcheck {

CubicGraph k4() {
  return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph k33() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) edges.emplace_back(a, b);
  return build_graph(6, edges);
}

CubicGraph prism3() {
  return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

CubicGraph petersen() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                          {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

CubicGraph theta() { return build_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

CubicGraph flower_snark(int k) {
  if (k < 5 || k % 2 == 0)
    throw Error(ErrorCode::BadParameter, fmt::format("flower snark needs odd k >= 5, got {}", k));
  // Gadget i: hub a_i = 4i joined to b_i, c_i, d_i. The b's form a k-cycle;
  // the c's and d's form one 2k-cycle c_0 .. c_{k-1} d_0 .. d_{k-1}.
  auto a = [](int i) { return 4 * i; };
  auto b = [](int i) { return 4 * i + 1; };
  auto c = [](int i) { return 4 * i + 2; };
  auto d = [](int i) { return 4 * i + 3; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(a(i), c(i));
    edges.emplace_back(a(i), d(i));
  }
  for (int i = 0; i < k; ++i) edges.emplace_back(b(i), b((i + 1) % k));
  for (int i = 0; i + 1 < k; ++i) {
    edges.emplace_back(c(i), c(i + 1));
    edges.emplace_back(d(i), d(i + 1));
  }
  edges.emplace_back(c(k - 1), d(0));
  edges.emplace_back(d(k - 1), c(0));
  return build_graph(4 * k, edges);
}

CubicGraph k4_minus_join() {
  return build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                         {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
                         {2, 6}, {3, 7}});
}

CubicGraph triangle_petersen() {
  // Triangle on 0, 1, 2 replaces Petersen vertex 0; Petersen vertex v >= 1
  // becomes v + 2. Triangle corner t takes over the edge to 0's t-th neighbour.
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
  int corner = 0;
  const CubicGraph p = petersen();
  for (const auto& e : p.edges()) {
    if (e.u == 0 || e.v == 0)
      edges.emplace_back(corner++, e.other(0) + 2);
    else
      edges.emplace_back(e.u + 2, e.v + 2);
  }
  return build_graph(12, edges);
}

CubicGraph named_graph(std::string_view name) {
  static const std::map<std::string, CubicGraph (*)(), std::less<>> fixed{
      {"K4", &k4},
      {"K3_3", &k33},
      {"prism_3", &prism3},
      {"petersen", &petersen},
      {"theta", &theta},
      {"k4_minus_join", &k4_minus_join},
      {"triangle_petersen", &triangle_petersen},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();

  constexpr std::string_view flower = "flower_snark(";
  if (name.substr(0, flower.size()) == flower && name.back() == ')') {
    auto digits = name.substr(flower.size(), name.size() - flower.size() - 1);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCode::BadParameter, fmt::format("bad flower snark parameter '{}'", digits));
    return flower_snark(k);
  }
  throw Error(ErrorCode::UnknownName, fmt::format("no named graph '{}'", name));
}

std::vector<std::string> named_graph_names() {
  return {"K4", "K3_3", "prism_3", "petersen", "theta", "flower_snark(k)", "k4_minus_join",
          "triangle_petersen"};
}

// ---------------------------------------------------------------------------

Gadget build_theorem1_gadget(const CubicGraph& g, EdgeIndex e) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::InvalidEdge, fmt::format("edge {} out of range", e));
  if (!diagnose(g).bridgeless) throw Error(ErrorCode::NotBridgeless, "gadget input must be bridgeless");

  Gadget out;
  GadgetProvenance& prov = out.provenance;
  prov.petersen = petersen();
  prov.copy = g;
  prov.removed_edge = e;

  const int n = g.vertex_count();
  const Vertex lo = std::min(g.edge(e).u, g.edge(e).v);
  const Vertex hi = std::max(g.edge(e).u, g.edge(e).v);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int slot = 0; slot < kGadgetSlots; ++slot) {
    CopyEmbedding& emb = prov.copies[slot];
    emb.vertex.resize(n);
    for (Vertex x = 0; x < n; ++x) emb.vertex[x] = 10 + slot * n + x;
    emb.edge.assign(g.edge_count(), -1);
    for (EdgeIndex c = 0; c < g.edge_count(); ++c) {
      if (c == e) continue;
      emb.edge[c] = static_cast<EdgeIndex>(edges.size());
      edges.emplace_back(emb.vertex[g.edge(c).u], emb.vertex[g.edge(c).v]);
    }
    const Edge& pe = prov.petersen.edge(slot);
    prov.cut_pair[slot][0] = static_cast<EdgeIndex>(edges.size());
    edges.emplace_back(std::min(pe.u, pe.v), emb.vertex[lo]);
    prov.cut_pair[slot][1] = static_cast<EdgeIndex>(edges.size());
    edges.emplace_back(std::max(pe.u, pe.v), emb.vertex[hi]);
  }
  out.graph = build_graph(10 + kGadgetSlots * n, edges);
  prov.gadget_id = out.graph.id();
  return out;
}

namespace {

void require_gadget_triple(const CoverList& h_triple, const GadgetProvenance& prov) {
  if (h_triple.graph_id != prov.gadget_id)
    throw Error(ErrorCode::MixedGraphs, "triple does not belong to this gadget");
  if (!is_fr_triple(h_triple)) throw Error(ErrorCode::BadParameter, "input is not an FR-triple");
}

// Whether the entry uses cut pair `slot`; the two cut edges always agree
// because every copy side has an even number of vertices.
bool uses_pair(const PerfectMatching& pm, const GadgetProvenance& prov, int slot) {
  bool first = pm.contains(prov.cut_pair[slot][0]);
  if (first != pm.contains(prov.cut_pair[slot][1]))
    throw std::logic_error(fmt::format("matching uses one edge of cut pair {}", slot));
  return first;
}

}  // namespace

CoverList project_triple_to_petersen(const CoverList& h_triple, const GadgetProvenance& prov) {
  require_gadget_triple(h_triple, prov);
  std::vector<PerfectMatching> projected;
  for (const auto& pm : h_triple.matchings) {
    std::vector<EdgeIndex> edges;
    for (int slot = 0; slot < kGadgetSlots; ++slot)
      if (uses_pair(pm, prov, slot)) edges.push_back(slot);
    projected.push_back(make_matching(prov.petersen, edges));
  }
  return make_cover(CoverKind::FR, std::move(projected));
}

CoverList restrict_triple_to_copy(const CoverList& h_triple, const GadgetProvenance& prov, int slot) {
  require_gadget_triple(h_triple, prov);
  if (slot < 0 || slot >= kGadgetSlots)
    throw Error(ErrorCode::BadParameter, fmt::format("slot {} outside 0..14", slot));
  const CopyEmbedding& emb = prov.copies[slot];
  std::vector<PerfectMatching> restricted;
  for (const auto& pm : h_triple.matchings) {
    std::vector<EdgeIndex> edges;
    for (EdgeIndex c = 0; c < prov.copy.edge_count(); ++c) {
      if (c == prov.removed_edge) {
        if (uses_pair(pm, prov, slot)) edges.push_back(c);
      } else if (pm.contains(emb.edge[c])) {
        edges.push_back(c);
      }
    }
    restricted.push_back(make_matching(prov.copy, edges));
  }
  return make_cover(CoverKind::FR, std::move(restricted));
}

CoverList assemble_gadget_triple(const Gadget& gadget, const CoverList& petersen_triple,
                                 const std::vector<CoverList>& copy_triples) {
  const GadgetProvenance& prov = gadget.provenance;
  if (!is_valid_fr_triple(prov.petersen, petersen_triple))
    throw Error(ErrorCode::BadParameter, "not an FR-triple of the Petersen graph");
  if (static_cast<int>(copy_triples.size()) != kGadgetSlots)
    throw Error(ErrorCode::BadParameter, "need one copy triple per slot");

  const CubicGraph& h = gadget.graph;
  std::vector<EdgeSet> entries(3, EdgeSet(h.edge_count()));
  for (int slot = 0; slot < kGadgetSlots; ++slot) {
    const CoverList& ct = copy_triples[slot];
    if (!is_valid_fr_triple(prov.copy, ct))
      throw Error(ErrorCode::BadParameter, fmt::format("copy triple {} is not an FR-triple", slot));
    std::vector<char> taken(3, 0);
    for (int x = 0; x < 3; ++x) {
      bool uses = petersen_triple.matchings[x].contains(slot);
      int y = 0;
      while (y < 3 && (taken[y] || ct.matchings[y].contains(prov.removed_edge) != uses)) ++y;
      if (y == 3)
        throw Error(ErrorCode::FrequencyMismatch,
                    fmt::format("slot {}: copy frequency on e differs from Petersen edge frequency", slot));
      taken[y] = 1;
      for (EdgeIndex c : ct.matchings[y].edges.to_vector())
        if (c != prov.removed_edge) entries[x].insert(prov.copies[slot].edge[c]);
      if (uses) {
        entries[x].insert(prov.cut_pair[slot][0]);
        entries[x].insert(prov.cut_pair[slot][1]);
      }
    }
  }
  std::vector<PerfectMatching> list;
  for (auto& set : entries) {
    if (!is_perfect_matching(h, set)) throw std::logic_error("assembled entry is not a perfect matching");
    list.push_back({std::move(set), h.id()});
  }
  auto result = make_cover(CoverKind::FR, std::move(list));
  if (!is_fr_triple(result)) throw std::logic_error("assembled triple is not an FR-triple");
  return result;
}

std::optional<CoverList> find_gadget_triple(const Gadget& gadget, SearchControl control) {
  const GadgetProvenance& prov = gadget.provenance;
  auto outer = CoverSearch(prov.petersen, control).find_fr_triple();
  if (!outer) return std::nullopt;
  auto nu = frequency_vector(*outer);

  CoverSearch inner(prov.copy, control);
  std::map<int, std::optional<CoverList>> by_frequency;
  std::vector<CoverList> copy_triples;
  for (int slot = 0; slot < kGadgetSlots; ++slot) {
    int want = nu[slot];
    if (!by_frequency.contains(want))
      by_frequency[want] = inner.find_constrained_fr_triple({prov.removed_edge, want, {}, {}});
    if (!by_frequency[want]) return std::nullopt;
    copy_triples.push_back(*by_frequency[want]);
  }
  return assemble_gadget_triple(gadget, *outer, copy_triples);
}

}  // namespace frcheck
