// frcheck: conjecture checks and constructions for bridgeless cubic graphs.
//
//   frcheck [check] [FILE...] --checks all --format jsonl
//   frcheck gadget --named petersen --edge 0
//   frcheck named flower_snark(5)
//   frcheck split --named k4_minus_join --cut 10,11

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frcheck/batch.hpp"
#include "frcheck/constructions.hpp"
#include "frcheck/cuts.hpp"
#include "frcheck/error.hpp"
#include "frcheck/graph_text.hpp"

namespace {

using namespace frcheck;

struct GraphSource {
  std::string named;
  std::string input;
  std::string text;
  long line = 0;  // 0 = first record
};

void add_source_options(CLI::App* app, GraphSource& src) {
  auto* named = app->add_option("--named", src.named, "Named graph, e.g. petersen or flower_snark(5)");
  auto* input = app->add_option("--input", src.input, "graph6/sparse6 file ('-' for stdin)");
  auto* text = app->add_option("--graph", src.text, "graph6/sparse6 record given inline");
  app->add_option("--line", src.line, "Line number of the record in --input (default: first record)")
      ->needs(input);
  named->excludes(input)->excludes(text);
  input->excludes(text);
}

CubicGraph load(const GraphSource& src) {
  if (!src.named.empty()) return named_graph(src.named);
  if (!src.text.empty()) return parse_graph_text(src.text);
  if (src.input.empty()) throw CLI::ValidationError("one of --named, --input or --graph is required");
  std::ifstream file;
  std::istream* in = &std::cin;
  if (src.input != "-") {
    file.open(src.input);
    if (!file) throw std::runtime_error("cannot open " + src.input);
    in = &file;
  }
  std::string raw;
  long line_no = 0;
  while (std::getline(*in, raw)) {
    ++line_no;
    if (src.line > 0 && line_no != src.line) continue;
    if (!strip_record(raw)) {
      if (src.line > 0) break;
      continue;
    }
    return parse_graph_text(raw);
  }
  throw std::runtime_error("no graph record found in " + src.input);
}

std::string encode(const CubicGraph& g, const std::string& format) {
  if (format == "graph6") return encode_graph_text(g, TextFormat::Graph6);
  if (format == "sparse6") return encode_graph_text(g, TextFormat::Sparse6);
  return canonical_text(g);
}

std::vector<EdgeIndex> parse_edge_list(const std::string& text) {
  std::vector<EdgeIndex> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) edges.push_back(std::stoi(item));
  return edges;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  static const std::vector<std::string> commands{"check", "gadget", "named", "split", "-h", "--help"};
  if (args.empty() || std::find(commands.begin(), commands.end(), args.front()) == commands.end())
    args.insert(args.begin(), "check");
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  CLI::App app{"Perfect-matching cover and FR-triple checks for bridgeless cubic graphs", "frcheck"};
  app.require_subcommand(1);

  RunConfig config;
  std::string checks = "all", format = "jsonl", witnesses = "first";
  auto* check = app.add_subcommand("check", "Check every graph record of the inputs");
  check->add_option("inputs", config.inputs, "graph6/sparse6 files, '-' for stdin");
  check->add_option("--checks", checks, "Comma list of berge,bf,fr,conj4,conj5,cyc4 or all");
  check->add_option("--matching-limit", config.matching_limit, "Maximum perfect matchings per graph")
      ->check(CLI::PositiveNumber);
  double timeout = 0;
  check->add_option("--timeout", timeout, "Per-graph time budget in seconds")
      ->check(CLI::PositiveNumber);
  check->add_option("--format", format, "jsonl | csv | human")
      ->check(CLI::IsMember({"jsonl", "json-lines", "csv", "human"}));
  check->add_option("--witnesses", witnesses, "none | first | all")
      ->check(CLI::IsMember({"none", "first", "all"}));
  check->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--collect-all", config.collect_all_failures, "Report every failing conj4/conj5 spec");
  check->add_flag("--timings", config.timings, "Include per-check wall times (ms)");

  GraphSource gadget_src;
  EdgeIndex gadget_edge = 0;
  std::string gadget_format = "sparse6";
  auto* gadget = app.add_subcommand("gadget", "Emit the Petersen frame gadget H(G, e)");
  add_source_options(gadget, gadget_src);
  gadget->add_option("--edge", gadget_edge, "Edge e of G")->required();
  gadget->add_option("--format", gadget_format, "sparse6 | graph6 | auto")
      ->check(CLI::IsMember({"sparse6", "graph6", "auto"}));

  std::string named_name, named_format = "auto";
  auto* named = app.add_subcommand("named", "Emit a named graph");
  named->add_option("name", named_name, "Graph name")->required();
  named->add_option("--format", named_format, "graph6 | sparse6 | auto")
      ->check(CLI::IsMember({"sparse6", "graph6", "auto"}));

  GraphSource split_src;
  std::string split_cut, split_format = "auto";
  auto* split = app.add_subcommand("split", "Emit the two parts of a 2- or 3-edge-cut split");
  add_source_options(split, split_src);
  split->add_option("--cut", split_cut, "Comma list of 2 or 3 edge indices")->required();
  split->add_option("--format", split_format, "graph6 | sparse6 | auto")
      ->check(CLI::IsMember({"sparse6", "graph6", "auto"}));

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_status::kInputError;
  }

  try {
    if (*check) {
      config.checks.clear();
      std::stringstream ss(checks);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (name == "all") {
          config.checks.insert(all_checks().begin(), all_checks().end());
        } else if (auto c = parse_check(name)) {
          config.checks.insert(*c);
        } else {
          std::cerr << "frcheck: unknown check '" << name << "'\n";
          return exit_status::kInputError;
        }
      }
      if (config.checks.empty()) {
        std::cerr << "frcheck: no checks selected\n";
        return exit_status::kInputError;
      }
      static const std::map<std::string, OutputFormat> formats{{"jsonl", OutputFormat::JsonLines},
                                                               {"json-lines", OutputFormat::JsonLines},
                                                               {"csv", OutputFormat::Csv},
                                                               {"human", OutputFormat::Human}};
      config.format = formats.at(format);
      config.witnesses = witnesses == "none"    ? WitnessMode::None
                         : witnesses == "all" ? WitnessMode::All
                                              : WitnessMode::First;
      if (timeout > 0) config.timeout_seconds = timeout;
      if (config.inputs.empty()) config.inputs.push_back("-");
      return run_batch(config, std::cin, std::cout, std::cerr);
    }
    if (*gadget) {
      auto built = build_theorem1_gadget(load(gadget_src), gadget_edge);
      std::cout << encode(built.graph, gadget_format) << '\n';
      return 0;
    }
    if (*named) {
      std::cout << encode(named_graph(named_name), named_format) << '\n';
      return 0;
    }
    if (*split) {
      auto g = load(split_src);
      auto cut = make_cut(g, parse_edge_list(split_cut));
      auto parts = cut.size() == 2 ? split_2cut(g, cut) : split_3cut(g, cut);
      std::cout << encode(parts.g1, split_format) << '\n' << encode(parts.g2, split_format) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "frcheck: " << e.what() << '\n';
    return exit_status::kInputError;
  }
  return exit_status::kInputError;
}
