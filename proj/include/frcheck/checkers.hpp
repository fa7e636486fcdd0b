#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "frcheck/covers.hpp"
#include "frcheck/cuts.hpp"
#include "frcheck/graph.hpp"

namespace frcheck {

enum class Check { Berge, BergeFulkerson, FanRaspaud, Conj4, Conj5, Cyc4 };

std::string_view to_string(Check check);
// Accepts the report names plus the short forms bf and fr.
std::optional<Check> parse_check(std::string_view name);
const std::vector<Check>& all_checks();

enum class Verdict { Holds, Fails, Skipped };
std::string_view to_string(Verdict verdict);

struct VerdictEntry {
  Verdict verdict = Verdict::Skipped;
  std::string reason;  // set for Skipped: NotBridgeless, LimitExceeded, Timeout
};

struct Witness {
  std::optional<FrequencySpec> spec;
  CoverList cover;
};

enum class WitnessMode { None, First, All };

struct CheckOptions {
  std::set<Check> checks{all_checks().begin(), all_checks().end()};
  SearchControl control;
  // Keep going after the first unsatisfiable conj4/conj5 spec.
  bool collect_all_failures = false;
  // First: one witness per check. All: one witness per satisfied spec.
  WitnessMode witnesses = WitnessMode::First;
};

struct GraphId {
  std::string source;
  long line = 0;
  std::string text;  // canonical graph6/sparse6 encoding
};

struct ConjectureReport {
  GraphId graph_id;
  int n = 0;
  int m = 0;
  GraphDiagnostics diagnostics;
  // One entry per selected conjecture check (Cyc4 is reported separately).
  std::map<Check, VerdictEntry> verdicts;
  std::map<Check, std::vector<Witness>> witnesses;
  std::map<Check, std::vector<FrequencySpec>> counterexample_specs;
  std::optional<CyclicConnectivity> cyc4;
  std::string cyc4_skipped;  // reason when Cyc4 was selected but not computed
  std::map<std::string, double> timings_ms;
};

/// Runs every selected check on g by exhaustive search. Search failures are
/// captured as Skipped verdicts, never thrown.
ConjectureReport check_all(const CubicGraph& g, const CheckOptions& options = {}, GraphId id = {});

struct Violation {
  Check premise;     // reported Holds
  Check conclusion;  // reported Fails although implied by the premise
};

/// Verdict pairs that contradict the per-graph implications
/// BF => Berge, BF => Conj5 => Conj4 => Fan-Raspaud (transitively closed).
/// Skipped verdicts are exempt.
std::vector<Violation> implication_audit(const ConjectureReport& report);

}  // namespace frcheck
