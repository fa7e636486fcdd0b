#pragma once

// Splits the copies off a gadget one 2-edge-cut at a time and compares every
// piece against the graph it should be. Returns a description of each
// mismatch; empty means the gadget decomposes exactly as built.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "frcheck/constructions.hpp"
#include "frcheck/covers.hpp"
#include "frcheck/cuts.hpp"

namespace gadget_check {

using namespace frcheck;

inline std::vector<std::pair<Vertex, Vertex>> pulled_back(const CubicGraph& part,
                                                          const std::vector<Vertex>& back) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : part.edges()) {
    auto u = back[e.u], v = back[e.v];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The 15 splits in slot order; split j cuts copy j off the frame left by
// split j-1 (split 0 acts on H).
inline std::vector<SplitResult> split_chain(const Gadget& gadget) {
  std::vector<SplitResult> chain;
  const auto& prov = gadget.provenance;
  CubicGraph frame = gadget.graph;
  std::vector<EdgeIndex> frame_edge_to_h(frame.edge_count());
  std::iota(frame_edge_to_h.begin(), frame_edge_to_h.end(), 0);
  for (int j = 0; j < kGadgetSlots; ++j) {
    std::vector<EdgeIndex> cut_edges;
    for (EdgeIndex c : prov.cut_pair[j])
      cut_edges.push_back(static_cast<EdgeIndex>(
          std::find(frame_edge_to_h.begin(), frame_edge_to_h.end(), c) - frame_edge_to_h.begin()));
    std::sort(cut_edges.begin(), cut_edges.end());
    chain.push_back(split_2cut(frame, make_cut(frame, cut_edges)));
    const auto& s = chain.back();
    std::vector<EdgeIndex> next(s.g1.edge_count());
    for (EdgeIndex x = 0; x < s.g1.edge_count(); ++x)
      next[x] = s.edge_origin_1[x] < 0 ? -1 : frame_edge_to_h[s.edge_origin_1[x]];
    frame = s.g1;
    frame_edge_to_h = std::move(next);
  }
  return chain;
}

inline std::vector<std::string> split_mismatches(const Gadget& gadget) {
  std::vector<std::string> bad;
  const auto& h = gadget.graph;
  const auto& prov = gadget.provenance;
  const auto& g = prov.copy;
  const auto e = g.edge(prov.removed_edge);

  auto chain = split_chain(gadget);
  std::vector<Vertex> frame_to_h(h.vertex_count());
  std::iota(frame_to_h.begin(), frame_to_h.end(), 0);
  for (int j = 0; j < kGadgetSlots; ++j) {
    const auto& s = chain[j];
    const auto& frame = s.original;
    std::map<Vertex, Vertex> copy_of;
    for (Vertex x = 0; x < g.vertex_count(); ++x) copy_of[prov.copies[j].vertex[x]] = x;
    std::vector<Vertex> back1(s.g1.vertex_count()), back2(s.g2.vertex_count());
    for (Vertex v = 0; v < frame.vertex_count(); ++v) {
      auto [part, w] = s.vertex_map[v];
      if (part == 1)
        back1[w] = frame_to_h[v];
      else
        back2[w] = copy_of.at(frame_to_h[v]);
    }
    // the copy part is G itself with e restored as the new edge
    if (pulled_back(s.g2, back2) != g.labeled_edges()) bad.push_back(fmt::format("slot {}: copy part differs", j));
    auto n2 = s.g2.edge(s.new_edges_2[0]);
    if (std::set<Vertex>{back2[n2.u], back2[n2.v]} != std::set<Vertex>{e.u, e.v})
      bad.push_back(fmt::format("slot {}: copy new edge is not e", j));
    // the frame part gets Petersen edge j back
    auto n1 = s.g1.edge(s.new_edges_1[0]);
    auto pj = prov.petersen.edge(j);
    if (std::set<Vertex>{back1[n1.u], back1[n1.v]} != std::set<Vertex>{pj.u, pj.v})
      bad.push_back(fmt::format("slot {}: frame new edge is not Petersen edge {}", j, j));
    frame_to_h = back1;
  }
  // Petersen vertices keep their numbers 0..9 in H
  if (pulled_back(chain.back().g1, frame_to_h) != prov.petersen.labeled_edges())
    bad.push_back("remaining frame is not Petersen");
  return bad;
}

// An FR-triple of H built by undoing the split chain: start from the least
// FR-triple of the bare frame and glue the copies back in reverse order, each
// with the least copy triple whose new-edge frequency matches.
inline CoverList glue_chain(const std::vector<SplitResult>& chain) {
  CoverList t = *find_fr_triple(chain.back().g1);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    int k = cut_frequencies(*it, 1, t)[0];
    auto copy_triple = find_constrained_fr_triple(it->g2, {it->new_edges_2[0], k, {}, {}});
    if (!copy_triple) throw std::runtime_error("copy has no FR-triple with the frame's cut frequency");
    t = glue_triples(*it, t, *copy_triple);
  }
  return t;
}

}  // namespace gadget_check
