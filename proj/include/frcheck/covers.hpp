#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "frcheck/graph.hpp"
#include "frcheck/matchings.hpp"

namespace frcheck {

enum class CoverKind { FR, Berge, BergeFulkerson };

std::string_view to_string(CoverKind kind);
int required_length(CoverKind kind);  // 3, 5, 6

/// Ordered list of perfect matchings of one graph, repetition allowed.
struct CoverList {
  CoverKind kind = CoverKind::FR;
  std::uint64_t graph_id = 0;
  std::vector<PerfectMatching> matchings;

  int size() const { return static_cast<int>(matchings.size()); }
  std::vector<std::vector<EdgeIndex>> edge_lists() const;
};

/// Checks the length against the kind and that every entry belongs to the
/// same graph (MixedGraphs otherwise).
CoverList make_cover(CoverKind kind, std::vector<PerfectMatching> matchings);

struct FrequencyVector {
  std::vector<int> nu;

  int operator[](EdgeIndex e) const { return nu[e]; }
  int max() const;
  int min() const;
};

/// nu(e) = number of entries containing e. Throws MixedGraphs.
FrequencyVector frequency_vector(const CoverList& cover);
FrequencyVector frequency_vector(const std::vector<PerfectMatching>& list);

bool is_fr_triple(const CoverList& cover);

// From-scratch revalidation against g: ids, perfect matchings, length and
// the frequency condition of the kind.
bool is_valid_fr_triple(const CubicGraph& g, const CoverList& cover);
bool is_valid_berge_cover(const CubicGraph& g, const CoverList& cover);
bool is_valid_bf_cover(const CubicGraph& g, const CoverList& cover);

/// Target frequencies: nu(e) = i, and nu(f) = j when a pair is given.
struct FrequencySpec {
  EdgeIndex e = 0;
  int i = 0;
  std::optional<EdgeIndex> f;
  std::optional<int> j;

  bool has_pair() const { return f.has_value(); }
  friend bool operator==(const FrequencySpec&, const FrequencySpec&) = default;
  friend auto operator<=>(const FrequencySpec&, const FrequencySpec&) = default;
};

// Throws InvalidFrequencySpec. Pair mode requires e != f sharing an endpoint,
// 0 <= i, j <= 2 and 1 <= i + j <= 3.
void validate_spec(const CubicGraph& g, const FrequencySpec& spec);

/// The third edge at the vertex shared by adjacent edges e and f.
EdgeIndex third_edge(const CubicGraph& g, EdgeIndex e, EdgeIndex f);

bool satisfies(const CoverList& cover, const FrequencySpec& spec);

struct SearchControl {
  std::size_t matching_limit = kDefaultMatchingLimit;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Exhaustive searches over the canonical matching list of one graph. Every
/// search walks non-decreasing index multisets in lexicographic order, so the
/// witness returned is the least one.
class CoverSearch {
 public:
  explicit CoverSearch(CubicGraph g, SearchControl control = {});

  const CubicGraph& graph() const { return g_; }
  const std::vector<PerfectMatching>& matchings() const { return matchings_; }

  std::optional<CoverList> find_fr_triple() const;
  /// All FR-triples as multisets; throws LimitExceeded past `limit` triples.
  std::vector<CoverList> enumerate_fr_triples(std::size_t limit = kDefaultMatchingLimit) const;
  std::optional<CoverList> find_constrained_fr_triple(const FrequencySpec& spec) const;
  std::optional<CoverList> find_berge_cover() const;
  std::optional<CoverList> find_bf_cover() const;

 private:
  CoverList cover_from(CoverKind kind, const std::vector<int>& picks) const;
  void poll(std::size_t& counter) const;

  CubicGraph g_;
  SearchControl control_;
  std::vector<PerfectMatching> matchings_;
  // Largest index of a matching containing each edge, -1 if none.
  std::vector<int> last_containing_;
};

std::optional<CoverList> find_fr_triple(const CubicGraph& g, SearchControl control = {});
std::vector<CoverList> enumerate_fr_triples(const CubicGraph& g, SearchControl control = {});
std::optional<CoverList> find_constrained_fr_triple(const CubicGraph& g, const FrequencySpec& spec,
                                                    SearchControl control = {});
std::optional<CoverList> find_berge_cover(const CubicGraph& g, SearchControl control = {});
std::optional<CoverList> find_bf_cover(const CubicGraph& g, SearchControl control = {});

/// Builds an FR-triple meeting a pair spec out of a Berge-Fulkerson cover:
/// i entries through e, j through f and 3-i-j through the third edge at the
/// shared vertex, each bucket holding exactly two entries.
CoverList derive_fr_from_bf(const CubicGraph& g, const CoverList& bf_cover,
                            const FrequencySpec& spec);

// Every ordered adjacent pair (e, f), e != f, once each, ascending.
std::vector<std::pair<EdgeIndex, EdgeIndex>> adjacent_pairs(const CubicGraph& g);

// The seven (i, j) with 0 <= i, j <= 2 and 1 <= i + j <= 3.
std::vector<std::pair<int, int>> valid_pair_targets();

}  // namespace frcheck
