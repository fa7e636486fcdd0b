#include "frcheck/checkers.hpp"

#include <chrono>
#include <utility>

#include "frcheck/error.hpp"
#include "frcheck/graph_text.hpp"

namespace frcheck {

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Berge: return "berge";
    case Check::BergeFulkerson: return "berge_fulkerson";
    case Check::FanRaspaud: return "fan_raspaud";
    case Check::Conj4: return "conj4";
    case Check::Conj5: return "conj5";
    case Check::Cyc4: return "cyc4";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  if (name == "bf") return Check::BergeFulkerson;
  if (name == "fr") return Check::FanRaspaud;
  for (Check c : all_checks())
    if (to_string(c) == name) return c;
  return std::nullopt;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks{Check::Berge, Check::BergeFulkerson, Check::FanRaspaud,
                                         Check::Conj4, Check::Conj5,          Check::Cyc4};
  return checks;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool past(const SearchControl& control) {
  return control.deadline && Clock::now() > *control.deadline;
}

class Runner {
 public:
  Runner(const CheckOptions& options, ConjectureReport& report, const CoverSearch& search)
      : options_(options), report_(report), search_(search) {}

  void run(Check check) {
    if (timed_out_ || past(options_.control)) {
      timed_out_ = true;
      report_.verdicts[check] = {Verdict::Skipped, "Timeout"};
      return;
    }
    auto start = Clock::now();
    try {
      report_.verdicts[check] = evaluate(check);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::Timeout) throw;
      timed_out_ = true;
      report_.verdicts[check] = {Verdict::Skipped, "Timeout"};
      report_.witnesses.erase(check);
    }
    report_.timings_ms[std::string(to_string(check))] = millis_since(start);
  }

 private:
  VerdictEntry evaluate(Check check) {
    switch (check) {
      case Check::Berge: return single(check, search_.find_berge_cover());
      case Check::BergeFulkerson: return single(check, search_.find_bf_cover());
      case Check::FanRaspaud: return single(check, search_.find_fr_triple());
      case Check::Conj4: return universal(check, conj4_specs());
      case Check::Conj5: return universal(check, conj5_specs());
      case Check::Cyc4: break;
    }
    return {};
  }

  VerdictEntry single(Check check, std::optional<CoverList> found) {
    if (!found) return {Verdict::Fails, {}};
    if (options_.witnesses != WitnessMode::None) report_.witnesses[check].push_back({std::nullopt, *found});
    return {Verdict::Holds, {}};
  }

  VerdictEntry universal(Check check, const std::vector<FrequencySpec>& specs) {
    bool failed = false;
    for (const auto& spec : specs) {
      if (past(options_.control)) throw Error(ErrorCode::Timeout, "check deadline passed");
      auto found = search_.find_constrained_fr_triple(spec);
      if (!found) {
        failed = true;
        report_.counterexample_specs[check].push_back(spec);
        if (!options_.collect_all_failures) break;
        continue;
      }
      auto& kept = report_.witnesses[check];
      if (options_.witnesses == WitnessMode::All ||
          (options_.witnesses == WitnessMode::First && kept.empty()))
        kept.push_back({spec, std::move(*found)});
    }
    if (report_.witnesses.contains(check) && report_.witnesses[check].empty())
      report_.witnesses.erase(check);
    return {failed ? Verdict::Fails : Verdict::Holds, {}};
  }

  std::vector<FrequencySpec> conj4_specs() const {
    std::vector<FrequencySpec> specs;
    for (EdgeIndex e = 0; e < search_.graph().edge_count(); ++e)
      for (int i = 0; i <= 2; ++i) specs.push_back({e, i, {}, {}});
    return specs;
  }

  std::vector<FrequencySpec> conj5_specs() const {
    std::vector<FrequencySpec> specs;
    for (auto [e, f] : adjacent_pairs(search_.graph()))
      for (auto [i, j] : valid_pair_targets()) specs.push_back({e, i, f, j});
    return specs;
  }

  const CheckOptions& options_;
  ConjectureReport& report_;
  const CoverSearch& search_;
  bool timed_out_ = false;
};

}  // namespace

ConjectureReport check_all(const CubicGraph& g, const CheckOptions& options, GraphId id) {
  ConjectureReport report;
  if (id.text.empty()) id.text = canonical_text(g);
  report.graph_id = std::move(id);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.diagnostics = diagnose(g);

  std::vector<Check> conjectures;
  for (Check c : all_checks())
    if (c != Check::Cyc4 && options.checks.contains(c)) conjectures.push_back(c);

  if (options.checks.contains(Check::Cyc4)) {
    if (!report.diagnostics.connected) {
      report.cyc4_skipped = "Disconnected";
    } else if (past(options.control)) {
      report.cyc4_skipped = "Timeout";
    } else {
      auto start = Clock::now();
      report.cyc4 = is_cyclically_4_edge_connected(g);
      report.timings_ms["cyc4"] = millis_since(start);
    }
  }

  auto skip_all = [&](const std::string& reason) {
    for (Check c : conjectures) report.verdicts[c] = {Verdict::Skipped, reason};
  };
  if (conjectures.empty()) return report;
  if (!report.diagnostics.bridgeless) {
    skip_all("NotBridgeless");
    return report;
  }

  auto start = Clock::now();
  std::optional<CoverSearch> search;
  try {
    search.emplace(g, options.control);
  } catch (const LimitExceeded&) {
    skip_all("LimitExceeded");
    return report;
  }
  report.timings_ms["matchings"] = millis_since(start);

  Runner runner(options, report, *search);
  for (Check c : conjectures) runner.run(c);
  return report;
}

std::vector<Violation> implication_audit(const ConjectureReport& report) {
  static const std::vector<std::pair<Check, Check>> implications{
      {Check::BergeFulkerson, Check::Berge},      {Check::BergeFulkerson, Check::Conj5},
      {Check::BergeFulkerson, Check::Conj4},      {Check::BergeFulkerson, Check::FanRaspaud},
      {Check::Conj5, Check::Conj4},               {Check::Conj5, Check::FanRaspaud},
      {Check::Conj4, Check::FanRaspaud},
  };
  auto verdict = [&](Check c) -> std::optional<Verdict> {
    auto it = report.verdicts.find(c);
    if (it == report.verdicts.end()) return std::nullopt;
    return it->second.verdict;
  };
  std::vector<Violation> violations;
  for (auto [premise, conclusion] : implications)
    if (verdict(premise) == Verdict::Holds && verdict(conclusion) == Verdict::Fails)
      violations.push_back({premise, conclusion});
  return violations;
}

}  // namespace frcheck
