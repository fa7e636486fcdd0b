#include "frcheck/batch.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>
#include <variant>

#include <fmt/core.h>

#include "frcheck/error.hpp"
#include "frcheck/graph_text.hpp"

namespace frcheck {

using nlohmann::ordered_json;

std::string verdict_text(const VerdictEntry& entry) {
  std::string text(to_string(entry.verdict));
  if (entry.verdict == Verdict::Skipped) text += "(" + entry.reason + ")";
  return text;
}

namespace {

ordered_json spec_to_json(const FrequencySpec& spec) {
  ordered_json j;
  j["e"] = spec.e;
  j["i"] = spec.i;
  if (spec.f) {
    j["f"] = *spec.f;
    j["j"] = *spec.j;
  }
  return j;
}

ordered_json id_to_json(const GraphId& id) {
  return ordered_json{{"source", id.source}, {"line", id.line}, {"text", id.text}};
}

std::string cyc4_text(const ConjectureReport& report) {
  if (report.cyc4) return report.cyc4->holds ? "true" : "false";
  if (!report.cyc4_skipped.empty()) return "SKIPPED(" + report.cyc4_skipped + ")";
  return "";
}

}  // namespace

ordered_json report_to_json(const ConjectureReport& report, const RunConfig& config) {
  ordered_json j;
  j["graph_id"] = id_to_json(report.graph_id);
  j["n"] = report.n;
  j["m"] = report.m;
  j["diagnostics"] = {{"connected", report.diagnostics.connected},
                      {"bridgeless", report.diagnostics.bridgeless},
                      {"bridge_witness", report.diagnostics.bridge_witness
                                             ? ordered_json(*report.diagnostics.bridge_witness)
                                             : ordered_json(nullptr)}};
  ordered_json verdicts = ordered_json::object();
  for (const auto& [check, entry] : report.verdicts) verdicts[std::string(to_string(check))] = verdict_text(entry);
  j["verdicts"] = verdicts;

  if (!report.counterexample_specs.empty()) {
    ordered_json specs = ordered_json::object();
    for (const auto& [check, list] : report.counterexample_specs) {
      auto& arr = specs[std::string(to_string(check))] = ordered_json::array();
      for (const auto& spec : list) arr.push_back(spec_to_json(spec));
    }
    j["counterexample_specs"] = specs;
  }

  if (config.witnesses != WitnessMode::None) {
    ordered_json witnesses = ordered_json::object();
    for (const auto& [check, list] : report.witnesses) {
      auto& arr = witnesses[std::string(to_string(check))] = ordered_json::array();
      for (const auto& w : list) {
        ordered_json item;
        if (w.spec) item["spec"] = spec_to_json(*w.spec);
        item["matchings"] = w.cover.edge_lists();
        arr.push_back(item);
      }
    }
    j["witnesses"] = witnesses;
  }

  if (report.cyc4) {
    ordered_json cyc{{"holds", report.cyc4->holds}, {"vacuous", report.cyc4->vacuous}};
    if (report.cyc4->witness)
      cyc["witness"] = {{"edges", report.cyc4->witness->edges},
                        {"side_a", report.cyc4->witness->side_a},
                        {"side_b", report.cyc4->witness->side_b}};
    else
      cyc["witness"] = nullptr;
    j["cyc4"] = cyc;
  } else if (!report.cyc4_skipped.empty()) {
    j["cyc4"] = "SKIPPED(" + report.cyc4_skipped + ")";
  } else {
    j["cyc4"] = nullptr;
  }

  if (config.timings) j["timings_ms"] = report.timings_ms;
  return j;
}

const std::string& csv_header() {
  static const std::string header =
      "source,line,text,n,m,connected,bridgeless,berge,berge_fulkerson,fan_raspaud,conj4,conj5,cyc4,error";
  return header;
}

std::string report_to_csv(const ConjectureReport& report) {
  auto cell = [&](Check c) {
    auto it = report.verdicts.find(c);
    return it == report.verdicts.end() ? std::string() : verdict_text(it->second);
  };
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},", report.graph_id.source,
                     report.graph_id.line, report.graph_id.text, report.n, report.m,
                     report.diagnostics.connected, report.diagnostics.bridgeless, cell(Check::Berge),
                     cell(Check::BergeFulkerson), cell(Check::FanRaspaud), cell(Check::Conj4),
                     cell(Check::Conj5), cyc4_text(report));
}

std::string report_to_human(const ConjectureReport& report) {
  std::string line = fmt::format("{}:{} n={} m={}", report.graph_id.source, report.graph_id.line,
                                 report.n, report.m);
  if (!report.diagnostics.connected)
    line += " disconnected";
  else if (!report.diagnostics.bridgeless)
    line += fmt::format(" bridge={}", *report.diagnostics.bridge_witness);
  for (const auto& [check, entry] : report.verdicts)
    line += fmt::format(" {}={}", to_string(check), verdict_text(entry));
  if (auto cyc = cyc4_text(report); !cyc.empty()) line += " cyc4=" + cyc;
  for (const auto& [check, specs] : report.counterexample_specs)
    for (const auto& s : specs)
      line += s.f ? fmt::format(" [{} fails e={} i={} f={} j={}]", to_string(check), s.e, s.i, *s.f, *s.j)
                  : fmt::format(" [{} fails e={} i={}]", to_string(check), s.e, s.i);
  return line;
}

ordered_json error_to_json(const GraphId& id, const std::string& code, const std::string& message) {
  return ordered_json{{"graph_id", id_to_json(id)}, {"error", code}, {"message", message}};
}

std::string error_to_csv(const GraphId& id, const std::string& code) {
  return fmt::format("{},{},,,,,,,,,,,,{}", id.source, id.line, code);
}

// ---------------------------------------------------------------------------

namespace {

struct PendingLine {
  GraphId id;
  std::string raw;
};

struct LineError {
  std::string code;
  std::string message;
};

using Outcome = std::variant<ConjectureReport, LineError>;

Outcome process(const PendingLine& line, const RunConfig& config) {
  CubicGraph g;
  try {
    g = parse_graph_text(line.raw);
  } catch (const Error& err) {
    return LineError{std::string(to_string(err.code())), err.what()};
  }
  CheckOptions options;
  options.checks = config.checks;
  options.control.matching_limit = config.matching_limit;
  if (config.timeout_seconds)
    options.control.deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(*config.timeout_seconds));
  options.collect_all_failures = config.collect_all_failures;
  options.witnesses = config.witnesses;
  GraphId id = line.id;
  id.text = canonical_text(g);
  return check_all(g, options, id);
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {
    if (config_.format == OutputFormat::Csv) out_ << csv_header() << '\n';
  }

  void emit(const PendingLine& line, const Outcome& outcome) {
    if (const auto* bad = std::get_if<LineError>(&outcome)) {
      had_error_ = true;
      switch (config_.format) {
        case OutputFormat::JsonLines: out_ << error_to_json(line.id, bad->code, bad->message).dump() << '\n'; break;
        case OutputFormat::Csv: out_ << error_to_csv(line.id, bad->code) << '\n'; break;
        case OutputFormat::Human:
          out_ << fmt::format("{}:{} error {}", line.id.source, line.id.line, bad->message) << '\n';
          break;
      }
      return;
    }
    const auto& report = std::get<ConjectureReport>(outcome);
    for (const auto& [check, entry] : report.verdicts)
      if (entry.verdict == Verdict::Fails) had_failure_ = true;
    switch (config_.format) {
      case OutputFormat::JsonLines: out_ << report_to_json(report, config_).dump() << '\n'; break;
      case OutputFormat::Csv: out_ << report_to_csv(report) << '\n'; break;
      case OutputFormat::Human: out_ << report_to_human(report) << '\n'; break;
    }
  }

  void note_input_error() { had_error_ = true; }

  int status() const {
    if (had_error_) return exit_status::kInputError;
    return had_failure_ ? exit_status::kSomeFail : exit_status::kAllHold;
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
  bool had_error_ = false;
  bool had_failure_ = false;
};

// Runs a chunk of lines on up to `jobs` threads; outcomes keep input order.
std::vector<Outcome> process_chunk(const std::vector<PendingLine>& chunk, const RunConfig& config) {
  std::vector<Outcome> outcomes(chunk.size());
  int workers = std::max(1, std::min<int>(config.jobs, static_cast<int>(chunk.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < chunk.size(); ++i) outcomes[i] = process(chunk[i], config);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < chunk.size(); i = next++) outcomes[i] = process(chunk[i], config);
    });
  for (auto& t : pool) t.join();
  return outcomes;
}

}  // namespace

int run_batch(const RunConfig& config, std::istream& standard_input, std::ostream& out,
              std::ostream& err) {
  Emitter emitter(config, out);
  const std::size_t chunk_size = static_cast<std::size_t>(std::max(1, config.jobs)) * 8;
  std::vector<PendingLine> chunk;
  auto flush = [&] {
    auto outcomes = process_chunk(chunk, config);
    for (std::size_t i = 0; i < chunk.size(); ++i) emitter.emit(chunk[i], outcomes[i]);
    chunk.clear();
  };

  for (const auto& path : config.inputs) {
    std::ifstream file;
    std::istream* in = &standard_input;
    if (path != "-") {
      file.open(path);
      if (!file) {
        err << "frcheck: cannot open " << path << '\n';
        emitter.note_input_error();
        continue;
      }
      in = &file;
    }
    std::string raw;
    long line_no = 0;
    while (std::getline(*in, raw)) {
      ++line_no;
      if (!strip_record(raw)) continue;  // blank or header-only
      chunk.push_back({GraphId{path, line_no, {}}, raw});
      if (chunk.size() == chunk_size) flush();
    }
    if (in->bad()) {
      err << "frcheck: read error on " << path << '\n';
      emitter.note_input_error();
    }
  }
  flush();
  return emitter.status();
}

}  // namespace frcheck
