#include "frcheck/covers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <fmt/core.h>

#include "frcheck/error.hpp"

namespace frcheck {

std::string_view to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::FR: return "FR";
    case CoverKind::Berge: return "Berge";
    case CoverKind::BergeFulkerson: return "BergeFulkerson";
  }
  return "?";
}

int required_length(CoverKind kind) {
  switch (kind) {
    case CoverKind::FR: return 3;
    case CoverKind::Berge: return 5;
    case CoverKind::BergeFulkerson: return 6;
  }
  return 0;
}

std::vector<std::vector<EdgeIndex>> CoverList::edge_lists() const {
  std::vector<std::vector<EdgeIndex>> out;
  for (const auto& m : matchings) out.push_back(m.edges.to_vector());
  return out;
}

CoverList make_cover(CoverKind kind, std::vector<PerfectMatching> matchings) {
  if (static_cast<int>(matchings.size()) != required_length(kind))
    throw Error(ErrorCode::BadParameter,
                fmt::format("{} list needs {} matchings, got {}", to_string(kind),
                            required_length(kind), matchings.size()));
  for (const auto& m : matchings)
    if (m.graph_id != matchings.front().graph_id)
      throw Error(ErrorCode::MixedGraphs, "cover entries come from different graphs");
  CoverList c;
  c.kind = kind;
  c.graph_id = matchings.front().graph_id;
  c.matchings = std::move(matchings);
  return c;
}

int FrequencyVector::max() const { return nu.empty() ? 0 : *std::max_element(nu.begin(), nu.end()); }
int FrequencyVector::min() const { return nu.empty() ? 0 : *std::min_element(nu.begin(), nu.end()); }

FrequencyVector frequency_vector(const std::vector<PerfectMatching>& list) {
  FrequencyVector fv;
  if (list.empty()) return fv;
  fv.nu.assign(list.front().edges.universe(), 0);
  for (const auto& m : list) {
    if (m.graph_id != list.front().graph_id || m.edges.universe() != list.front().edges.universe())
      throw Error(ErrorCode::MixedGraphs, "list entries come from different graphs");
    for (EdgeIndex e : m.edges.to_vector()) ++fv.nu[e];
  }
  return fv;
}

FrequencyVector frequency_vector(const CoverList& cover) {
  auto fv = frequency_vector(cover.matchings);
  for (const auto& m : cover.matchings)
    if (m.graph_id != cover.graph_id)
      throw Error(ErrorCode::MixedGraphs, "entry does not belong to the cover's graph");
  return fv;
}

bool is_fr_triple(const CoverList& cover) {
  return cover.size() == 3 && frequency_vector(cover).max() <= 2;
}

namespace {

bool valid_entries(const CubicGraph& g, const CoverList& cover, CoverKind kind) {
  if (cover.graph_id != g.id() || cover.size() != required_length(kind)) return false;
  for (const auto& m : cover.matchings)
    if (m.graph_id != g.id() || m.edges.universe() != g.edge_count() ||
        !is_perfect_matching(g, m.edges))
      return false;
  return true;
}

}  // namespace

bool is_valid_fr_triple(const CubicGraph& g, const CoverList& cover) {
  return valid_entries(g, cover, CoverKind::FR) && frequency_vector(cover).max() <= 2;
}

bool is_valid_berge_cover(const CubicGraph& g, const CoverList& cover) {
  return valid_entries(g, cover, CoverKind::Berge) && frequency_vector(cover).min() >= 1;
}

bool is_valid_bf_cover(const CubicGraph& g, const CoverList& cover) {
  if (!valid_entries(g, cover, CoverKind::BergeFulkerson)) return false;
  auto fv = frequency_vector(cover);
  return fv.min() == 2 && fv.max() == 2;
}

void validate_spec(const CubicGraph& g, const FrequencySpec& spec) {
  auto bad = [](const std::string& why) { throw Error(ErrorCode::InvalidFrequencySpec, why); };
  auto in_range = [&](EdgeIndex x) { return x >= 0 && x < g.edge_count(); };
  if (!in_range(spec.e)) bad(fmt::format("edge {} out of range", spec.e));
  if (spec.i < 0 || spec.i > 2) bad(fmt::format("i = {} outside 0..2", spec.i));
  if (spec.f.has_value() != spec.j.has_value()) bad("f and j must be given together");
  if (!spec.f) return;
  EdgeIndex f = *spec.f;
  int j = *spec.j;
  if (!in_range(f)) bad(fmt::format("edge {} out of range", f));
  if (f == spec.e) bad("e and f must differ");
  if (!shared_vertex(g, spec.e, f)) bad(fmt::format("edges {} and {} are not adjacent", spec.e, f));
  if (j < 0 || j > 2) bad(fmt::format("j = {} outside 0..2", j));
  if (spec.i + j < 1 || spec.i + j > 3) bad(fmt::format("i + j = {} outside 1..3", spec.i + j));
}

EdgeIndex third_edge(const CubicGraph& g, EdgeIndex e, EdgeIndex f) {
  auto w = shared_vertex(g, e, f);
  if (!w || e == f) throw Error(ErrorCode::InvalidFrequencySpec, "edges are not adjacent");
  for (EdgeIndex x : g.incident(*w))
    if (x != e && x != f) return x;
  throw Error(ErrorCode::InvalidFrequencySpec, "no third edge");
}

bool satisfies(const CoverList& cover, const FrequencySpec& spec) {
  auto fv = frequency_vector(cover);
  if (fv[spec.e] != spec.i) return false;
  return !spec.f || fv[*spec.f] == *spec.j;
}

std::vector<std::pair<EdgeIndex, EdgeIndex>> adjacent_pairs(const CubicGraph& g) {
  std::vector<std::pair<EdgeIndex, EdgeIndex>> pairs;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (EdgeIndex e : g.incident(v))
      for (EdgeIndex f : g.incident(v))
        if (e != f) pairs.emplace_back(e, f);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<std::pair<int, int>> valid_pair_targets() {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (i + j >= 1 && i + j <= 3) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------

CoverSearch::CoverSearch(CubicGraph g, SearchControl control)
    : g_(std::move(g)), control_(control) {
  matchings_ = enumerate_perfect_matchings(g_, control_.matching_limit);
  last_containing_.assign(g_.edge_count(), -1);
  for (int idx = 0; idx < static_cast<int>(matchings_.size()); ++idx)
    for (EdgeIndex e : matchings_[idx].edges.to_vector()) last_containing_[e] = idx;
}

void CoverSearch::poll(std::size_t& counter) const {
  // checked on the first step and then every 65536 steps
  if ((counter++ & 0xffff) == 0 && control_.deadline &&
      std::chrono::steady_clock::now() > *control_.deadline)
    throw Error(ErrorCode::Timeout, "search deadline passed");
}

CoverList CoverSearch::cover_from(CoverKind kind, const std::vector<int>& picks) const {
  std::vector<PerfectMatching> list;
  for (int idx : picks) list.push_back(matchings_[idx]);
  return make_cover(kind, std::move(list));
}

namespace {

// Walks multisets a <= b <= c of matching indices in lexicographic order.
// Targets constrain how many entries contain e and f; `visit` returns true to
// stop the walk.
template <class Visit>
void walk_fr_triples(const std::vector<PerfectMatching>& ms, const FrequencySpec* spec,
                     const std::function<void()>& poll, Visit&& visit) {
  const int k = static_cast<int>(ms.size());
  std::vector<int> has_e(k, 0), has_f(k, 0);
  int target_e = 0, target_f = 0;
  if (spec) {
    target_e = spec->i;
    for (int x = 0; x < k; ++x) has_e[x] = ms[x].contains(spec->e);
    if (spec->f) {
      target_f = *spec->j;
      for (int x = 0; x < k; ++x) has_f[x] = ms[x].contains(*spec->f);
    }
  }
  // An entry contains at most one of two adjacent edges, so the open demand
  // for e and f together cannot exceed the open slots.
  auto feasible = [&](int ce, int cf, int slots) {
    return !spec || (ce <= target_e && cf <= target_f &&
                     (target_e - ce) + (target_f - cf) <= slots);
  };
  for (int a = 0; a < k; ++a) {
    int ca_e = has_e[a], ca_f = has_f[a];
    if (!feasible(ca_e, ca_f, 2)) continue;
    for (int b = a; b < k; ++b) {
      int cb_e = ca_e + has_e[b], cb_f = ca_f + has_f[b];
      if (!feasible(cb_e, cb_f, 1)) continue;
      EdgeSet common = ms[a].edges & ms[b].edges;
      for (int c = b; c < k; ++c) {
        poll();
        int ce = cb_e + has_e[c], cf = cb_f + has_f[c];
        if (spec && (ce != target_e || cf != target_f)) continue;
        if (common.intersects(ms[c].edges)) continue;
        if (visit(a, b, c)) return;
      }
    }
  }
}

}  // namespace

std::optional<CoverList> CoverSearch::find_fr_triple() const {
  std::size_t counter = 0;
  std::optional<CoverList> found;
  walk_fr_triples(matchings_, nullptr, [&] { poll(counter); }, [&](int a, int b, int c) {
    found = cover_from(CoverKind::FR, {a, b, c});
    return true;
  });
  return found;
}

std::vector<CoverList> CoverSearch::enumerate_fr_triples(std::size_t limit) const {
  std::size_t counter = 0;
  std::vector<CoverList> all;
  walk_fr_triples(matchings_, nullptr, [&] { poll(counter); }, [&](int a, int b, int c) {
    if (all.size() == limit) throw LimitExceeded(limit);
    all.push_back(cover_from(CoverKind::FR, {a, b, c}));
    return false;
  });
  return all;
}

std::optional<CoverList> CoverSearch::find_constrained_fr_triple(const FrequencySpec& spec) const {
  validate_spec(g_, spec);
  std::size_t counter = 0;
  std::optional<CoverList> found;
  walk_fr_triples(matchings_, &spec, [&] { poll(counter); }, [&](int a, int b, int c) {
    found = cover_from(CoverKind::FR, {a, b, c});
    return true;
  });
  return found;
}

std::optional<CoverList> CoverSearch::find_berge_cover() const {
  constexpr int kLength = 5;
  const int k = static_cast<int>(matchings_.size());
  const int m = g_.edge_count();
  const int half = g_.vertex_count() / 2;
  std::vector<std::vector<EdgeIndex>> lists;
  for (const auto& pm : matchings_) lists.push_back(pm.edges.to_vector());

  std::vector<int> count(m, 0), picks;
  int uncovered = m;
  std::size_t counter = 0;

  auto recurse = [&](auto&& self, int start) -> bool {
    poll(counter);
    int slots = kLength - static_cast<int>(picks.size());
    if (slots == 0) return uncovered == 0;
    if (uncovered > slots * half) return false;
    for (EdgeIndex e = 0; e < m; ++e)
      if (count[e] == 0 && last_containing_[e] < start) return false;
    if (slots == 1) {
      // the last entry has to contain every uncovered edge
      EdgeSet open(m);
      for (EdgeIndex e = 0; e < m; ++e)
        if (count[e] == 0) open.insert(e);
      for (int idx = start; idx < k; ++idx)
        if (open.is_subset_of(matchings_[idx].edges)) {
          picks.push_back(idx);
          return true;
        }
      return false;
    }
    for (int idx = start; idx < k; ++idx) {
      for (EdgeIndex e : lists[idx])
        if (count[e]++ == 0) --uncovered;
      picks.push_back(idx);
      if (self(self, idx)) return true;
      picks.pop_back();
      for (EdgeIndex e : lists[idx])
        if (--count[e] == 0) ++uncovered;
    }
    return false;
  };
  if (k == 0 || !recurse(recurse, 0)) return std::nullopt;
  return cover_from(CoverKind::Berge, picks);
}

std::optional<CoverList> CoverSearch::find_bf_cover() const {
  constexpr int kLength = 6;
  const int k = static_cast<int>(matchings_.size());
  const int m = g_.edge_count();
  std::vector<std::vector<EdgeIndex>> lists;
  for (const auto& pm : matchings_) lists.push_back(pm.edges.to_vector());

  // Six matchings place 3n = 2m edge slots; with every count capped at 2,
  // reaching depth six means every count is exactly 2.
  std::vector<int> count(m, 0), picks;
  EdgeSet saturated(m);
  std::size_t counter = 0;

  auto recurse = [&](auto&& self, int start) -> bool {
    poll(counter);
    int slots = kLength - static_cast<int>(picks.size());
    if (slots == 0) return true;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (count[e] == 2) continue;
      if (last_containing_[e] < start || 2 - count[e] > slots) return false;
    }
    for (int idx = start; idx < k; ++idx) {
      if (saturated.intersects(matchings_[idx].edges)) continue;
      for (EdgeIndex e : lists[idx])
        if (++count[e] == 2) saturated.insert(e);
      picks.push_back(idx);
      if (self(self, idx)) return true;
      picks.pop_back();
      for (EdgeIndex e : lists[idx])
        if (count[e]-- == 2) saturated.erase(e);
    }
    return false;
  };
  if (k == 0 || !recurse(recurse, 0)) return std::nullopt;
  return cover_from(CoverKind::BergeFulkerson, picks);
}

std::optional<CoverList> find_fr_triple(const CubicGraph& g, SearchControl control) {
  return CoverSearch(g, control).find_fr_triple();
}

std::vector<CoverList> enumerate_fr_triples(const CubicGraph& g, SearchControl control) {
  return CoverSearch(g, control).enumerate_fr_triples(control.matching_limit);
}

std::optional<CoverList> find_constrained_fr_triple(const CubicGraph& g, const FrequencySpec& spec,
                                                    SearchControl control) {
  validate_spec(g, spec);
  return CoverSearch(g, control).find_constrained_fr_triple(spec);
}

std::optional<CoverList> find_berge_cover(const CubicGraph& g, SearchControl control) {
  return CoverSearch(g, control).find_berge_cover();
}

std::optional<CoverList> find_bf_cover(const CubicGraph& g, SearchControl control) {
  return CoverSearch(g, control).find_bf_cover();
}

CoverList derive_fr_from_bf(const CubicGraph& g, const CoverList& bf_cover,
                            const FrequencySpec& spec) {
  if (!spec.has_pair()) throw Error(ErrorCode::InvalidFrequencySpec, "derivation needs a pair (e, f)");
  validate_spec(g, spec);
  if (!is_valid_bf_cover(g, bf_cover))
    throw Error(ErrorCode::BadParameter, "input is not a Berge-Fulkerson cover of this graph");

  const EdgeIndex f = *spec.f;
  const EdgeIndex third = third_edge(g, spec.e, f);
  std::vector<int> through_e, through_f, through_third;
  for (int idx = 0; idx < bf_cover.size(); ++idx) {
    const auto& pm = bf_cover.matchings[idx];
    if (pm.contains(spec.e))
      through_e.push_back(idx);
    else if (pm.contains(f))
      through_f.push_back(idx);
    else if (pm.contains(third))
      through_third.push_back(idx);
    else
      throw std::logic_error("perfect matching misses the shared vertex");
  }
  std::vector<int> picks;
  picks.insert(picks.end(), through_e.begin(), through_e.begin() + spec.i);
  picks.insert(picks.end(), through_f.begin(), through_f.begin() + *spec.j);
  picks.insert(picks.end(), through_third.begin(), through_third.begin() + (3 - spec.i - *spec.j));
  std::sort(picks.begin(), picks.end());

  std::vector<PerfectMatching> chosen;
  for (int idx : picks) chosen.push_back(bf_cover.matchings[idx]);
  return make_cover(CoverKind::FR, std::move(chosen));
}

}  // namespace frcheck
