#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frcheck/covers.hpp"
#include "frcheck/graph.hpp"

namespace frcheck {

// Canonically labeled graphs. Petersen: outer cycle 0..4, spokes i-(i+5),
// inner pentagram on 5..9; its edges are numbered outer cycle, spokes, then
// pentagram.
CubicGraph k4();
CubicGraph k33();
CubicGraph prism3();
CubicGraph petersen();
CubicGraph theta();
CubicGraph flower_snark(int k);      // odd k >= 5; 4k vertices
CubicGraph k4_minus_join();          // two K4-minus-an-edge blocks joined by two edges
CubicGraph triangle_petersen();      // Petersen with vertex 0 blown up into a triangle

/// Looks up "K4", "K3_3", "prism_3", "petersen", "theta", "flower_snark(k)",
/// "k4_minus_join", "triangle_petersen". Throws UnknownName / BadParameter.
CubicGraph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

inline constexpr int kGadgetSlots = 15;

struct CopyEmbedding {
  std::vector<Vertex> vertex;   // copy vertex -> H vertex
  std::vector<EdgeIndex> edge;  // copy edge -> H edge, -1 for the removed edge
};

/// Where everything of the source graph and the Petersen frame lives in H.
/// Slot j pairs Petersen edge j with copy j.
struct GadgetProvenance {
  std::uint64_t gadget_id = 0;  // id of H
  CubicGraph petersen;
  CubicGraph copy;               // the input graph G
  EdgeIndex removed_edge = 0;    // e, in G's numbering
  std::array<std::array<EdgeIndex, 2>, kGadgetSlots> cut_pair{};
  std::array<CopyEmbedding, kGadgetSlots> copies;
};

struct Gadget {
  CubicGraph graph;
  GadgetProvenance provenance;
};

/// Petersen graph with every edge j replaced by a 2-edge-cut into a copy of
/// G - e. The cut pair of slot j joins the smaller endpoint of Petersen edge j
/// to the image of e's smaller endpoint, and the larger to the larger.
/// Throws NotBridgeless.
Gadget build_theorem1_gadget(const CubicGraph& g, EdgeIndex e);

/// Petersen edge j is in a projected entry iff the H entry uses cut pair j.
CoverList project_triple_to_petersen(const CoverList& h_triple, const GadgetProvenance& prov);

/// The entries of an H-triple seen inside copy `slot` (0-based), with e put
/// back wherever the entry uses the slot's cut pair.
CoverList restrict_triple_to_copy(const CoverList& h_triple, const GadgetProvenance& prov, int slot);

/// Assembles an FR-triple of H slot by slot from an FR-triple of Petersen and
/// one FR-triple of G per slot whose frequency on e equals the Petersen
/// triple's frequency on edge j. Throws FrequencyMismatch.
CoverList assemble_gadget_triple(const Gadget& gadget, const CoverList& petersen_triple,
                                 const std::vector<CoverList>& copy_triples);

/// Least FR-triple of Petersen, then for each slot the least FR-triple of G
/// with the matching frequency on e, assembled. nullopt if some slot has no
/// such triple.
std::optional<CoverList> find_gadget_triple(const Gadget& gadget, SearchControl control = {});

}  // namespace frcheck
