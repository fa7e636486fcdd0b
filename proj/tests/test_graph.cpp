#include <doctest.h>

#include <algorithm>
#include <set>

#include "frcheck/constructions.hpp"
#include "frcheck/error.hpp"
#include "frcheck/graph.hpp"
#include "frcheck/graph_text.hpp"
#include "oracles.hpp"

using namespace frcheck;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Timeout;
}

// Two K4s with one edge subdivided each, the subdivision vertices joined.
CubicGraph subdivided_k4_pair() {
  return build_graph(10, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                          {5, 9}, {9, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8},
                          {4, 9}});
}

// Two doubled-edge triangles hanging off a single edge.
CubicGraph bridged_multigraph() {
  return build_graph(6, {{1, 2}, {1, 2}, {0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 5}, {3, 4}, {3, 5}});
}

std::vector<CubicGraph> all_named() {
  std::vector<CubicGraph> out;
  for (std::string name : {"K4", "K3_3", "prism_3", "petersen", "theta", "flower_snark(5)",
                           "flower_snark(7)", "k4_minus_join", "triangle_petersen"})
    out.push_back(named_graph(name));
  return out;
}

}  // namespace

TEST_CASE("build_graph accepts K4 and the theta multigraph") {
  auto g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.is_simple());
  CHECK(g.edge(3) == Edge{1, 2});

  auto theta = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(theta.edge_count() == 3);
  CHECK_FALSE(theta.is_simple());
  CHECK(theta.edges_between(0, 1) == std::vector<EdgeIndex>{0, 1, 2});
}

TEST_CASE("build_graph rejects malformed input") {
  CHECK(code_of([] { build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }) == ErrorCode::NotCubic);
  CHECK(code_of([] { build_graph(2, {{0, 0}, {0, 1}, {1, 1}}); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 2}}); }) == ErrorCode::OddOrder);
  CHECK(code_of([] { build_graph(2, {{0, 1}, {0, 1}, {0, 2}}); }) == ErrorCode::InvalidEdge);
}

TEST_CASE("incidence lists agree with the edge list") {
  for (const auto& g : all_named()) {
    std::vector<int> degree(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
      ++degree[e.u];
      ++degree[e.v];
    }
    CHECK(2 * g.edge_count() == 3 * g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(degree[v] == 3);
      for (EdgeIndex e : g.incident(v)) CHECK(g.edge(e).has(v));
    }
  }
}

TEST_CASE("diagnose") {
  auto p = diagnose(petersen());
  CHECK(p.connected);
  CHECK(p.bridgeless);
  CHECK_FALSE(p.bridge_witness);

  auto two_k4 = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  CHECK_FALSE(diagnose(two_k4).connected);
  CHECK_FALSE(diagnose(two_k4).bridgeless);

  for (const auto& g : {bridged_multigraph(), subdivided_k4_pair()}) {
    auto d = diagnose(g);
    CHECK(d.connected);
    REQUIRE_FALSE(d.bridgeless);
    REQUIRE(d.bridge_witness);
    auto expected = oracle::bridges(g);
    CHECK(std::find(expected.begin(), expected.end(), *d.bridge_witness) != expected.end());
    CHECK(oracle::component_count(g, {*d.bridge_witness}) == 2);
  }
  CHECK(*diagnose(bridged_multigraph()).bridge_witness == 4);
  CHECK(*diagnose(subdivided_k4_pair()).bridge_witness == 14);
}

TEST_CASE("bridgeless iff no single edge removal disconnects") {
  auto graphs = all_named();
  graphs.push_back(bridged_multigraph());
  graphs.push_back(subdivided_k4_pair());
  for (const auto& g : graphs) {
    auto oracle_bridges = oracle::bridges(g);
    CHECK(diagnose(g).bridgeless == oracle_bridges.empty());
    CHECK(bridges_without(g, EdgeSet(g.edge_count())) == oracle_bridges);
  }
}

TEST_CASE("shared_vertex") {
  auto g = k4();
  CHECK(shared_vertex(g, 0, 1) == 0);
  CHECK(shared_vertex(g, 0, 5) == std::nullopt);
  CHECK(shared_vertex(theta(), 0, 2) == 0);
}

TEST_CASE("graph6 reference encodings") {
  // Reference strings produced by an independent encoder (networkx).
  CHECK(encode_graph_text(k4(), TextFormat::Graph6) == "C~");
  CHECK(encode_graph_text(k33(), TextFormat::Graph6) == "EFz_");
  CHECK(encode_graph_text(prism3(), TextFormat::Graph6) == "E{Sw");
  CHECK(encode_graph_text(petersen(), TextFormat::Graph6) == "IheA@GUAo");
  CHECK(encode_graph_text(k4_minus_join(), TextFormat::Graph6) == "G}?HWw");
  CHECK(encode_graph_text(triangle_petersen(), TextFormat::Graph6) == "K{CIH?OAOJ?U");
  CHECK(encode_graph_text(flower_snark(5), TextFormat::Graph6) == "Ss@HOo?@GD?K???C_@O?K??@?@G_@P??o");
}

TEST_CASE("sparse6 reference encodings") {
  CHECK(encode_graph_text(k4(), TextFormat::Sparse6) == ":CcKI");
  CHECK(encode_graph_text(theta(), TextFormat::Sparse6) == ":A_");
  CHECK(encode_graph_text(petersen(), TextFormat::Sparse6) == ":I`ES@obGkqegW~");
  CHECK(encode_graph_text(k4_minus_join(), TextFormat::Sparse6) == ":Ga@_\\QcUsV");
  CHECK(encode_graph_text(flower_snark(5), TextFormat::Sparse6) ==
        ":S___d@CaCbChDGeGfGlHKiKjKp@LObMOaNO");
}

TEST_CASE("parse_graph_text") {
  SUBCASE("Petersen size byte") {
    auto text = encode_graph_text(petersen(), TextFormat::Graph6);
    CHECK(text.front() == static_cast<char>(63 + 10));
    CHECK(text.front() == 'I');
    CHECK(parse_graph_text(text).labeled_edges() == petersen().labeled_edges());
  }
  SUBCASE("headers and whitespace") {
    CHECK(parse_graph_text(">>graph6<<C~\n").labeled_edges() == k4().labeled_edges());
    CHECK(parse_graph_text(">>sparse6<<:A_  ").labeled_edges() == theta().labeled_edges());
    CHECK_FALSE(strip_record(">>graph6<<"));
    CHECK_FALSE(strip_record("   "));
  }
  SUBCASE("4-cycle is not cubic") {
    // 4-cycle 0-1-2-3: upper-triangle bits 101101.
    CHECK(code_of([] { parse_graph_text("Cl"); }) == ErrorCode::NotCubic);
  }
  SUBCASE("malformed records") {
    CHECK(code_of([] { parse_graph_text("C~~"); }) == ErrorCode::MalformedRecord);
    CHECK(code_of([] { parse_graph_text("C"); }) == ErrorCode::MalformedRecord);
    CHECK(code_of([] { parse_graph_text(""); }) == ErrorCode::MalformedRecord);
    CHECK(code_of([] { parse_graph_text("C\x20"); }) == ErrorCode::MalformedRecord);
    CHECK(code_of([] { parse_graph_text("&C~"); }) == ErrorCode::MalformedRecord);
  }
}

TEST_CASE("encode rejects graph6 for multigraphs") {
  CHECK(code_of([] { encode_graph_text(theta(), TextFormat::Graph6); }) ==
        ErrorCode::SimpleFormatOnMultigraph);
  CHECK(canonical_text(theta()) == ":A_");
  CHECK(canonical_text(k4()) == "C~");
}

TEST_CASE("round trip over named graphs in both formats") {
  for (const auto& g : all_named()) {
    auto s6 = parse_graph_text(encode_graph_text(g, TextFormat::Sparse6));
    CHECK(s6.labeled_edges() == g.labeled_edges());
    if (g.is_simple()) {
      auto g6 = parse_graph_text(encode_graph_text(g, TextFormat::Graph6));
      CHECK(g6.labeled_edges() == g.labeled_edges());
    }
  }
}

TEST_CASE("sparse6 round trip on larger orders") {
  // Flower snarks cross the 63-vertex size-field boundary at k = 17.
  for (int k : {5, 15, 17, 21}) {
    auto g = flower_snark(k);
    CHECK(parse_graph_text(encode_graph_text(g, TextFormat::Sparse6)).labeled_edges() ==
          g.labeled_edges());
    CHECK(parse_graph_text(encode_graph_text(g, TextFormat::Graph6)).labeled_edges() ==
          g.labeled_edges());
  }
}
