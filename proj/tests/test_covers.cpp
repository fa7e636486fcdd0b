#include <doctest.h>

#include <map>

#include "frcheck/constructions.hpp"
#include "frcheck/covers.hpp"
#include "frcheck/error.hpp"
#include "oracles.hpp"

using namespace frcheck;

namespace {

using oracle::EdgeList;

// Indices of the cover's entries in the canonical matching list.
EdgeList indices_of(const std::vector<PerfectMatching>& all, const CoverList& cover) {
  EdgeList out;
  for (const auto& m : cover.matchings)
    out.push_back(static_cast<int>(std::find(all.begin(), all.end(), m) - all.begin()));
  return out;
}

std::vector<EdgeList> picks_to_lists(const std::vector<PerfectMatching>& all, const EdgeList& picks) {
  std::vector<EdgeList> out;
  for (int p : picks) out.push_back(all[p].edges.to_vector());
  return out;
}

// Least multiset (in lexicographic order) meeting `pred`, or empty.
std::optional<EdgeList> least(const std::vector<PerfectMatching>& all, int m, int k,
                              const std::function<bool(const std::vector<int>&)>& pred) {
  for (const auto& picks : oracle::multisets(static_cast<int>(all.size()), k))
    if (pred(oracle::frequencies(m, picks_to_lists(all, picks)))) return picks;
  return std::nullopt;
}

bool meets(const std::vector<int>& nu, const FrequencySpec& s) {
  return nu[s.e] == s.i && (!s.f || nu[*s.f] == *s.j);
}

std::vector<FrequencySpec> every_spec(const CubicGraph& g) {
  std::vector<FrequencySpec> specs;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    for (int i = 0; i <= 2; ++i) specs.push_back({e, i, {}, {}});
  for (auto [e, f] : adjacent_pairs(g))
    for (auto [i, j] : valid_pair_targets()) specs.push_back({e, i, f, j});
  return specs;
}

const char* const kSmall[] = {"K4", "K3_3", "prism_3", "petersen", "theta", "k4_minus_join"};

}  // namespace

TEST_CASE("frequency vectors on K4 and Petersen") {
  auto g = k4();
  auto ms = enumerate_perfect_matchings(g);
  auto all3 = frequency_vector(make_cover(CoverKind::FR, {ms[0], ms[1], ms[2]}));
  CHECK(all3.nu == std::vector<int>(6, 1));
  auto same = frequency_vector(make_cover(CoverKind::FR, {ms[0], ms[0], ms[0]}));
  for (EdgeIndex e = 0; e < 6; ++e) CHECK(same[e] == (ms[0].contains(e) ? 3 : 0));

  auto p = petersen();
  auto pm = enumerate_perfect_matchings(p);
  CHECK(frequency_vector(make_cover(CoverKind::BergeFulkerson, pm)).nu == std::vector<int>(15, 2));
}

TEST_CASE("is_fr_triple") {
  auto ms = enumerate_perfect_matchings(k4());
  CHECK(is_fr_triple(make_cover(CoverKind::FR, {ms[0], ms[1], ms[2]})));
  CHECK_FALSE(is_fr_triple(make_cover(CoverKind::FR, {ms[0], ms[0], ms[0]})));

  auto pm = enumerate_perfect_matchings(petersen());
  for (const auto& t : oracle::multisets(6, 3))
    if (t[0] < t[1] && t[1] < t[2])
      CHECK(is_fr_triple(make_cover(CoverKind::FR, {pm[t[0]], pm[t[1]], pm[t[2]]})));
}

TEST_CASE("make_cover validates length and graph") {
  auto a = enumerate_perfect_matchings(k4());
  auto b = enumerate_perfect_matchings(petersen());
  CHECK_THROWS_AS(make_cover(CoverKind::FR, {a[0], a[1]}), Error);
  try {
    make_cover(CoverKind::FR, {a[0], a[1], b[0]});
    FAIL("expected MixedGraphs");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedGraphs);
  }
}

TEST_CASE("vertex identity holds for every found cover") {
  for (std::string name : kSmall) {
    CAPTURE(name);
    auto g = named_graph(name);
    CoverSearch search(g);
    for (auto found : {search.find_fr_triple(), search.find_berge_cover(), search.find_bf_cover()}) {
      REQUIRE(found);
      auto nu = frequency_vector(*found);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int sum = 0;
        for (EdgeIndex e : g.incident(v)) sum += nu[e];
        CHECK(sum == found->size());
      }
    }
  }
}

TEST_CASE("searches agree with a plain multiset filter") {
  for (std::string name : kSmall) {
    CAPTURE(name);
    auto g = named_graph(name);
    CoverSearch search(g);
    const auto& all = search.matchings();
    REQUIRE(all.size() <= 8);
    const int m = g.edge_count();

    auto fr = least(all, m, 3, [](const auto& nu) { return *std::max_element(nu.begin(), nu.end()) <= 2; });
    auto found_fr = search.find_fr_triple();
    REQUIRE(found_fr.has_value() == fr.has_value());
    if (fr) CHECK(indices_of(all, *found_fr) == *fr);

    std::vector<EdgeList> every_fr;
    for (const auto& picks : oracle::multisets(static_cast<int>(all.size()), 3)) {
      auto nu = oracle::frequencies(m, picks_to_lists(all, picks));
      if (*std::max_element(nu.begin(), nu.end()) <= 2) every_fr.push_back(picks);
    }
    std::vector<EdgeList> enumerated;
    for (const auto& t : search.enumerate_fr_triples()) enumerated.push_back(indices_of(all, t));
    CHECK(enumerated == every_fr);

    auto berge = least(all, m, 5, [](const auto& nu) { return *std::min_element(nu.begin(), nu.end()) >= 1; });
    auto found_berge = search.find_berge_cover();
    REQUIRE(found_berge.has_value() == berge.has_value());
    if (berge) CHECK(indices_of(all, *found_berge) == *berge);

    auto bf = least(all, m, 6, [](const auto& nu) { return std::all_of(nu.begin(), nu.end(), [](int x) { return x == 2; }); });
    auto found_bf = search.find_bf_cover();
    REQUIRE(found_bf.has_value() == bf.has_value());
    if (bf) CHECK(indices_of(all, *found_bf) == *bf);

    for (const auto& spec : every_spec(g)) {
      auto want = least(all, m, 3, [&](const auto& nu) {
        return *std::max_element(nu.begin(), nu.end()) <= 2 && meets(nu, spec);
      });
      auto got = search.find_constrained_fr_triple(spec);
      REQUIRE(got.has_value() == want.has_value());
      if (want) {
        CHECK(indices_of(all, *got) == *want);
        CHECK(is_valid_fr_triple(g, *got));
        CHECK(satisfies(*got, spec));
      }
    }
  }
}

TEST_CASE("theta multigraph covers") {
  auto g = theta();
  auto fr = find_fr_triple(g);
  REQUIRE(fr);
  CHECK(is_valid_fr_triple(g, *fr));
  // the least one repeats a matching: ({0}, {0}, {1})
  CHECK(fr->edge_lists() == std::vector<std::vector<EdgeIndex>>{{0}, {0}, {1}});
  auto triples = enumerate_fr_triples(g);
  CHECK(std::any_of(triples.begin(), triples.end(), [](const CoverList& t) {
    return t.edge_lists() == std::vector<std::vector<EdgeIndex>>{{0}, {1}, {2}};
  }));
  CHECK(find_berge_cover(g));
  CHECK(find_bf_cover(g));
}

TEST_CASE("K4 examples") {
  auto g = k4();
  auto ms = enumerate_perfect_matchings(g);
  auto fr = find_fr_triple(g);
  REQUIRE(fr);
  CHECK(is_valid_fr_triple(g, *fr));

  auto triples = enumerate_fr_triples(g);
  auto has = [&](std::vector<int> picks) {
    return std::any_of(triples.begin(), triples.end(), [&](const CoverList& t) {
      return indices_of(ms, t) == picks;
    });
  };
  CHECK(has({0, 1, 2}));
  CHECK(has({0, 0, 1}));

  // edges 0 = 01 and 1 = 02 share vertex 0.
  FrequencySpec spec{0, 2, 1, 1};
  auto t = find_constrained_fr_triple(g, spec);
  REQUIRE(t);
  auto nu = frequency_vector(*t);
  CHECK(nu[0] == 2);
  CHECK(nu[1] == 1);
  int fe = static_cast<int>(std::find_if(ms.begin(), ms.end(), [](const auto& m) { return m.contains(0); }) - ms.begin());
  CHECK(std::count(t->matchings.begin(), t->matchings.end(), ms[fe]) == 2);

  try {
    find_constrained_fr_triple(g, {0, 0, 1, 0});
    FAIL("expected InvalidFrequencySpec");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidFrequencySpec);
  }

  auto berge = find_berge_cover(g);
  REQUIRE(berge);
  CHECK(frequency_vector(*berge).min() >= 1);
  auto bf = find_bf_cover(g);
  REQUIRE(bf);
  CHECK(indices_of(ms, *bf) == std::vector<int>{0, 0, 1, 1, 2, 2});
}

TEST_CASE("spec validation") {
  auto g = k4();
  auto code = [&](FrequencySpec s) {
    try {
      validate_spec(g, s);
    } catch (const Error& e) {
      return std::optional<ErrorCode>(e.code());
    }
    return std::optional<ErrorCode>();
  };
  CHECK_FALSE(code({0, 2, {}, {}}));
  CHECK_FALSE(code({0, 0, {}, {}}));
  CHECK(code({0, 3, {}, {}}) == ErrorCode::InvalidFrequencySpec);
  CHECK(code({0, 2, 1, 2}) == ErrorCode::InvalidFrequencySpec);  // i + j = 4
  CHECK(code({0, 1, 5, 1}) == ErrorCode::InvalidFrequencySpec);  // 01 and 23 disjoint
  CHECK(code({0, 1, 0, 1}) == ErrorCode::InvalidFrequencySpec);
  CHECK(code({9, 1, {}, {}}) == ErrorCode::InvalidFrequencySpec);
  CHECK(third_edge(g, 0, 1) == 2);
  CHECK(valid_pair_targets().size() == 7);
  CHECK(adjacent_pairs(g).size() == 24);  // 4 vertices, 6 ordered pairs each
  CHECK(adjacent_pairs(theta()).size() == 6);
}

TEST_CASE("Petersen FR-triples") {
  auto g = petersen();
  CoverSearch search(g);
  auto triples = search.enumerate_fr_triples();
  CHECK(triples.size() == 20);
  for (const auto& t : triples) {
    std::set<EdgeList> distinct;
    for (const auto& m : t.matchings) distinct.insert(m.edges.to_vector());
    CHECK(distinct.size() == 3);
    auto nu = frequency_vector(t).nu;
    CHECK(std::count(nu.begin(), nu.end(), 2) == 3);
    CHECK(std::count(nu.begin(), nu.end(), 1) == 9);
    CHECK(std::count(nu.begin(), nu.end(), 0) == 3);
  }
  // Every two Petersen matchings share an edge, so (F, F, F') never works.
  const auto& all = search.matchings();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) CHECK((all[a].edges & all[b].edges).size() > 0);

  for (EdgeIndex e = 0; e < 15; ++e) {
    auto t = search.find_constrained_fr_triple({e, 0, {}, {}});
    REQUIRE(t);
    for (const auto& m : t->matchings) CHECK_FALSE(m.contains(e));
  }
}

TEST_CASE("Petersen Berge and BF covers") {
  auto g = petersen();
  CoverSearch search(g);
  const auto& all = search.matchings();
  auto bf = search.find_bf_cover();
  REQUIRE(bf);
  CHECK(indices_of(all, *bf) == std::vector<int>{0, 1, 2, 3, 4, 5});

  int covers = 0;
  for (const auto& picks : oracle::multisets(6, 6)) {
    auto nu = oracle::frequencies(15, picks_to_lists(all, picks));
    covers += std::all_of(nu.begin(), nu.end(), [](int x) { return x == 2; });
  }
  CHECK(covers == 1);

  for (int drop = 0; drop < 6; ++drop) {
    auto entries = bf->matchings;
    entries.erase(entries.begin() + drop);
    CHECK(is_valid_berge_cover(g, make_cover(CoverKind::Berge, entries)));
  }
  auto berge = search.find_berge_cover();
  REQUIRE(berge);
  CHECK(frequency_vector(*berge).min() == 1);
}

TEST_CASE("3-prism has a BF cover") {
  auto g = prism3();
  auto bf = find_bf_cover(g);
  REQUIRE(bf);
  CHECK(is_valid_bf_cover(g, *bf));
}

TEST_CASE("derive_fr_from_bf") {
  for (std::string name : {"K4", "petersen", "prism_3", "theta", "k4_minus_join"}) {
    CAPTURE(name);
    auto g = named_graph(name);
    auto bf = find_bf_cover(g);
    REQUIRE(bf);
    for (auto [e, f] : adjacent_pairs(g))
      for (auto [i, j] : valid_pair_targets()) {
        FrequencySpec spec{e, i, f, j};
        auto t = derive_fr_from_bf(g, *bf, spec);
        CHECK(is_valid_fr_triple(g, t));
        auto nu = frequency_vector(t);
        CHECK(nu[e] == i);
        CHECK(nu[f] == j);
        CHECK(nu[third_edge(g, e, f)] == 3 - i - j);
      }
  }

  auto g = k4();
  auto bf = *find_bf_cover(g);
  auto t = derive_fr_from_bf(g, bf, {0, 1, 1, 1});
  CHECK(frequency_vector(t).nu == std::vector<int>(6, 1));

  try {
    derive_fr_from_bf(g, bf, {0, 2, 1, 2});
    FAIL("expected InvalidFrequencySpec");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidFrequencySpec);
  }
  CHECK_THROWS_AS(derive_fr_from_bf(g, bf, {0, 2, {}, {}}), Error);
}

TEST_CASE("FR bound at a vertex") {
  // For any FR-triple and adjacent e, f with third edge g: nu(e) + nu(f) = 3 - nu(g) in [1, 3].
  for (std::string name : kSmall) {
    auto g = named_graph(name);
    for (const auto& t : enumerate_fr_triples(g)) {
      auto nu = frequency_vector(t);
      CHECK(nu.max() <= 2);
      for (auto [e, f] : adjacent_pairs(g)) {
        int s = nu[e] + nu[f];
        CHECK(s == 3 - nu[third_edge(g, e, f)]);
        CHECK(s >= 1);
        CHECK(s <= 3);
      }
    }
  }
}

TEST_CASE("deadline aborts a search") {
  SearchControl control;
  control.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CoverSearch search(flower_snark(9), control);
  auto timeout = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code() == ErrorCode::Timeout;
    }
    return false;
  };
  CHECK(timeout([&] { search.find_fr_triple(); }));
  CHECK(timeout([&] { search.find_berge_cover(); }));
  CHECK(timeout([&] { search.find_bf_cover(); }));
  CHECK(timeout([&] { search.find_constrained_fr_triple({0, 1, {}, {}}); }));
  CHECK(timeout([&] { search.enumerate_fr_triples(); }));

  SearchControl later;
  later.deadline = std::chrono::steady_clock::now() + std::chrono::hours(1);
  CHECK(CoverSearch(flower_snark(9), later).find_berge_cover());
}
