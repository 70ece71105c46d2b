#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli/census.hpp"
#include "cli/serialize.hpp"
#include "raag/error.hpp"
#include "raag/graph6.hpp"
#include "raag/jsj.hpp"
#include "raag/presentation.hpp"
#include "raag/splitting.hpp"
#include "raag/verify.hpp"

namespace raag::cli {

namespace {

struct Options {
  std::string input = "-";
  bool g6 = false;
  std::string stage = "j";
  std::string format = "json";
  std::optional<std::size_t> n;
  std::size_t max_n = 6;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const Options& opts, std::istream& in) {
  if (opts.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(opts.input);
  if (!file) throw InputError("cannot open '" + opts.input + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

SimplicialGraph read_graph(const Options& opts, std::istream& in) {
  const auto text = read_all(opts, in);
  if (!opts.g6) return parse_graph(text);
  std::istringstream stream(text);
  auto graphs = parse_graph6_stream(stream);
  if (graphs.empty()) throw EmptyGraphError("no graph6 record in input");
  return std::move(graphs.front());
}

GraphOfGroups build_stage(const SimplicialGraph& g, const std::string& stage) {
  if (g.empty()) throw EmptyGraphError("input graph is empty");
  return stage == "j0" ? build_j0(g) : jsj(g);
}

int cmd_split(const Options& opts, std::istream& in, std::ostream& out) {
  const auto g = read_graph(opts, in);
  out << to_json(splits_over_Z(g)).dump() << '\n';
  return kOk;
}

int cmd_jsj(const Options& opts, std::istream& in, std::ostream& out) {
  const auto gog = build_stage(read_graph(opts, in), opts.stage);
  if (opts.format == "dot") {
    out << to_dot(gog);
  } else {
    out << to_json(gog).dump() << '\n';
  }
  return kOk;
}

int cmd_export_dot(const Options& opts, std::istream& in, std::ostream& out) {
  const auto g = read_graph(opts, in);
  if (opts.stage == "graph") {
    if (g.empty()) throw EmptyGraphError("input graph is empty");
    out << to_dot(g);
  } else {
    out << to_dot(build_stage(g, opts.stage));
  }
  return kOk;
}

int cmd_witness(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto g = read_graph(opts, in);
  const auto report = splits_over_Z(g);

  std::vector<std::string> defects;
  if (const auto* z = std::get_if<ZSplitWitness>(&report.witness)) {
    defects = z_witness_defects(g, *z);
  } else if (const auto* cover = std::get_if<NonSplitCover>(&report.witness)) {
    defects = cover_defects(g, *cover);
  } else {
    const auto tag = std::get<SmallCaseWitness>(report.witness).tag;
    const auto expected = g.order() == 1 ? SmallCase::Z : (g.size() == 1 ? SmallCase::Z2 : SmallCase::F2);
    if (g.order() > 2 || tag != expected) defects.push_back("small-case tag does not match the graph");
  }

  Json payload;
  payload["z_split"] = to_string(report.z_split);
  payload["witness"] = to_json(report.witness);
  payload["verified"] = defects.empty();
  payload["defects"] = defects;
  out << payload.dump() << '\n';
  for (const auto& d : defects) err << "witness defect: " << d << '\n';
  return defects.empty() ? kOk : kFailure;
}

int cmd_check(const Options& opts, std::istream& in, std::ostream& out) {
  const auto g = read_graph(opts, in);
  const auto gog = build_stage(g, "j");
  bool all = true;
  for (const auto& check : run_checks(g, gog)) {
    all = all && check.passed;
    out << check.name << ": " << (check.passed ? "pass" : "FAIL");
    if (!check.detail.empty()) out << ' ' << check.detail;
    out << '\n';
  }
  const bool same = normalized_relators(emit_presentation(gog)) == normalized_relators(raag_presentation(g));
  out << "relators: " << (same ? "match" : "differ") << " (informational)\n";
  return all ? kOk : kFailure;
}

Json row_json(const CensusRow& row) {
  Json hist = Json::object();
  for (const auto& [edges, count] : row.jsj_edge_histogram) hist[std::to_string(edges)] = count;
  return Json{{"n", row.n},
              {"graphs", row.graphs},
              {"connected", row.connected},
              {"splits_over_Z", row.splits_over_Z},
              {"biconnected", row.biconnected},
              {"oracle_biconnected", row.oracle_biconnected},
              {"oracle_agrees", row.disagreements == 0},
              {"jsj_edge_histogram", hist}};
}

int cmd_census(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<CensusRow> rows;
  if (opts.g6) {
    std::istringstream stream(read_all(opts, in));
    std::vector<std::size_t> orders;
    if (opts.n) orders.push_back(*opts.n);
    rows = census_rows(parse_graph6_stream(stream), orders);
  } else {
    const std::size_t lo = opts.n.value_or(3);
    const std::size_t hi = opts.n.value_or(opts.max_n);
    if (lo < 3 || hi > 6 || lo > hi) {
      err << "census: order must lie in [3, 6] for internal enumeration\n";
      return kCensusRange;
    }
    for (auto n = lo; n <= hi; ++n) rows.push_back(census_row(n));
  }

  if (opts.format == "table") {
    out << std::setw(3) << "n" << std::setw(10) << "graphs" << std::setw(11) << "connected" << std::setw(8)
        << "splits" << std::setw(13) << "biconnected" << std::setw(8) << "oracle" << "  jsj edges:count\n";
    for (const auto& row : rows) {
      out << std::setw(3) << row.n << std::setw(10) << row.graphs << std::setw(11) << row.connected << std::setw(8)
          << row.splits_over_Z << std::setw(13) << row.biconnected << std::setw(8)
          << (row.disagreements == 0 ? "ok" : "MISMATCH") << ' ';
      for (const auto& [edges, count] : row.jsj_edge_histogram) out << ' ' << edges << ':' << count;
      out << '\n';
    }
  } else {
    Json payload = Json::array();
    for (const auto& row : rows) payload.push_back(row_json(row));
    out << payload.dump() << '\n';
  }

  const bool consistent = std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.consistent(); });
  if (!consistent) {
    err << "census: lowpoint verdicts disagree with the removal oracle\n";
    return kOracleMismatch;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splittings and JSJ decompositions of right-angled Artin groups", "raag"};
  app.require_subcommand(1);

  Options opts;
  auto add_input = [&opts](CLI::App* sub) {
    sub->add_option("input", opts.input, "Edge-list file, or - for stdin")->capture_default_str();
    sub->add_flag("--g6", opts.g6, "Read graph6 instead of the edge-list format");
  };

  auto* split = app.add_subcommand("split", "Decide free and Z-splittings; JSON report with witness");
  add_input(split);

  auto* jsj_cmd = app.add_subcommand("jsj", "Emit the JSJ decomposition (J) or its precursor (J0)");
  add_input(jsj_cmd);
  jsj_cmd->add_option("--stage", opts.stage, "j0 or j")->check(CLI::IsMember({"j0", "j"}))->capture_default_str();
  jsj_cmd->add_option("--format", opts.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  auto* witness = app.add_subcommand("witness", "Emit the splitting witness and re-verify it");
  add_input(witness);

  auto* check = app.add_subcommand("check", "Run the consistency checks on the JSJ decomposition");
  add_input(check);

  auto* census = app.add_subcommand("census", "Splitting census over labeled graphs");
  add_input(census);
  census->add_option("--n", opts.n, "Single order");
  census->add_option("--max-n", opts.max_n, "Largest order (from 3)")->capture_default_str();
  census->add_option("--format", opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* export_dot = app.add_subcommand("export-dot", "DOT rendering of the graph (cut vertices black) or a stage");
  add_input(export_dot);
  export_dot->add_option("--stage", opts.stage, "graph, j0 or j")
      ->check(CLI::IsMember({"graph", "j0", "j"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kFailure;
  }

  try {
    if (split->parsed()) return cmd_split(opts, in, out);
    if (jsj_cmd->parsed()) return cmd_jsj(opts, in, out);
    if (witness->parsed()) return cmd_witness(opts, in, out, err);
    if (check->parsed()) return cmd_check(opts, in, out);
    if (census->parsed()) return cmd_census(opts, in, out, err);
    if (export_dot->parsed()) return cmd_export_dot(opts, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapacityError& e) {
    err << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const EmptyGraphError& e) {
    err << "empty graph: " << e.what() << '\n';
    return kEmptyGraph;
  } catch (const JsjPreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kJsjPrecondition;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace raag::cli
