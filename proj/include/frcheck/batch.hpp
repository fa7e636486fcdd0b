#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "frcheck/checkers.hpp"

namespace frcheck {

enum class OutputFormat { JsonLines, Csv, Human };

struct RunConfig {
  std::vector<std::string> inputs;  // "-" reads standard input
  std::set<Check> checks{all_checks().begin(), all_checks().end()};
  std::size_t matching_limit = kDefaultMatchingLimit;
  std::optional<double> timeout_seconds;  // per graph
  OutputFormat format = OutputFormat::JsonLines;
  WitnessMode witnesses = WitnessMode::First;
  int jobs = 1;
  bool collect_all_failures = false;
  bool timings = false;  // wall times make output run-dependent, so opt-in
};

namespace exit_status {
inline constexpr int kAllHold = 0;
inline constexpr int kSomeFail = 1;
inline constexpr int kInputError = 2;
}  // namespace exit_status

/// Checks every record of every input in order and writes one report record
/// per graph line. Malformed lines become error records; unreadable inputs
/// are reported on `err`. Returns the exit status.
int run_batch(const RunConfig& config, std::istream& standard_input, std::ostream& out,
              std::ostream& err);

nlohmann::ordered_json report_to_json(const ConjectureReport& report, const RunConfig& config);
std::string report_to_csv(const ConjectureReport& report);
std::string report_to_human(const ConjectureReport& report);
const std::string& csv_header();

// Error records for lines that do not decode to a cubic graph.
nlohmann::ordered_json error_to_json(const GraphId& id, const std::string& code,
                                     const std::string& message);
std::string error_to_csv(const GraphId& id, const std::string& code);

std::string verdict_text(const VerdictEntry& entry);

}  // namespace frcheck
