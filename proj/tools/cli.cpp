#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "fixfactor/census.hpp"
#include "fixfactor/errors.hpp"
#include "fixfactor/io.hpp"
#include "fixfactor/ladder/json.hpp"

namespace fixfactor::cli {

namespace {

using nlohmann::json;

const char* const footer =
    "Exit codes: 0 success, 1 check failure, 2 usage, format or IO error.\n"
    "FIXFACTOR_SEED is reserved and ignored: every computation is deterministic.";

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

Partition classes_by(const FiniteSystem& sys, const std::string& by) {
  if (by == "stationary") return stabilize(sys).stationary();
  if (by == "oracle") return oracle_partition(sys);
  if (by == "sorb0") return sorb0_partition(sys);
  throw Error(ErrorCode::usage, "--by must be stationary, oracle or sorb0");
}

Outcome emit(const json& doc, int code = 0) { return {code, doc.dump(2) + "\n", {}}; }

Outcome decompose(const Command& cmd) {
  const FiniteSystem sys = io::read_system_file(cmd.input);
  if (cmd.format == "dot") return {0, io::export_dot(sys, stabilize(sys).stationary()), {}};
  json report = io::decomposition_report(sys);
  if (cmd.checks.empty()) return emit(report);
  bool passed = true;
  json checks = json::array();
  for (const auto& c : census::run_checks(sys, census::resolve_checks(cmd.checks))) {
    passed = passed && c.passed;
    checks.push_back({{"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
  }
  report["checks"] = std::move(checks);
  return emit(report, passed ? 0 : 1);
}

Outcome lyapunov(const Command& cmd) {
  const FiniteSystem sys = io::read_system_file(cmd.input);
  const PointSet m = io::parse_point_list(sys.space, cmd.set);
  return emit(io::stability_report_to_json(sys.space, stability_report(sys, m)));
}

Outcome ladder_command(const Command& cmd) {
  using namespace fixfactor::ladder;
  const LadderSpace space = LadderSpace::build(parse_term(cmd.input, cmd.nesting_cap));
  TraceOptions options;
  options.max_degree = OrdinalCNF::parse(cmd.max_degree);
  const LadderTrace trace = ladder_trace(space, options);
  json out{{"space", space_to_json(space)}, {"trace", trace_to_json(space, trace)}};
  std::vector<Point> points;
  json aorb = json::array();
  for (const auto& loc : cmd.locators) {
    points.push_back(space.parse_locator(loc));
    aorb.push_back({{"locator", loc},
                    {"point", points.back().key()},
                    {"region", space.describe(points.back())},
                    {"aorb0", region_set_to_json(space, ladder_aorb0(space, points.back()))}});
  }
  out["aorb0"] = std::move(aorb);
  if (!cmd.audit) return emit(out);
  bool ok = true;
  json audits = json::array();
  const auto record = [&](const AuditReport& r) {
    ok = ok && r.ok();
    audits.push_back(audit_to_json(r));
  };
  for (const auto& cut : standard_cuts) {
    const Window w = Window::build(space, cut.family_cut, cut.strand_cut);
    record(audit_trace(w, trace));
    for (const auto& p : points) record(audit_aorb0(w, p));
  }
  record(audit_window_stability(space, standard_cuts));
  out["audits"] = std::move(audits);
  return emit(out, ok ? 0 : 1);
}

Outcome window_command(const Command& cmd) {
  using namespace fixfactor::ladder;
  if (cmd.family_cut < 1 || cmd.strand_cut < 1) throw Error(ErrorCode::usage, "cuts must be at least 1");
  const LadderSpace space = LadderSpace::build(parse_term(cmd.input, cmd.nesting_cap));
  const Window w = Window::build(space, cmd.family_cut, cmd.strand_cut);
  json doc = window_to_json(w);
  if (!cmd.output.empty()) io::write_text_file(cmd.output, doc["system"].dump(2) + "\n");
  return emit(doc);
}

Outcome census_command(const Command& cmd) {
  census::CensusOptions options;
  options.points = cmd.points;
  options.up_to_iso = cmd.up_to_iso;
  options.checks = cmd.checks.empty() ? std::vector<std::string>{"all"} : cmd.checks;
  options.jobs = cmd.jobs;
  const census::CensusReport report = census::run_census(options);
  if (!cmd.output.empty()) {
    std::filesystem::create_directories(cmd.output);
    for (const auto& [name, tally] : report.checks) {
      if (tally.counterexample) {
        io::write_text_file(std::filesystem::path(cmd.output) / (name + ".json"),
                            io::dump_system(tally.counterexample->system));
      }
    }
  }
  return emit(census::report_to_json(report), report.all_passed() ? 0 : 1);
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Fixed-factor decomposition of topological dynamical systems", "fixfactor"};
  app.footer(footer);
  app.require_subcommand(1);

  const auto system_command = [&](const std::string& name, const std::string& description) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("system", cmd.input, "finite-system JSON file")->required();
    return sub;
  };
  auto* decompose_cmd = system_command("decompose", "stationary decomposition report");
  decompose_cmd->add_option("--format", cmd.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  decompose_cmd->add_option("--check", cmd.checks, "run census checks on this system (comma-separated or all)");
  system_command("trace", "superorbit partitions by degree");
  system_command("oracle", "maximal level sets of the fixed space");
  system_command("quotient", "quotient system")->add_option("--by", cmd.by, "stationary, oracle or sorb0");
  system_command("lyapunov", "stability of a set")
      ->add_option("--set", cmd.set, "comma-separated points")
      ->required();
  system_command("ergodic", "topological ergodicity");
  system_command("export-dot", "Graphviz rendering")->add_option("--by", cmd.by, "stationary, oracle or sorb0");

  auto* ladder_cmd = app.add_subcommand("ladder", "symbolic superorbit trace of a ladder term");
  ladder_cmd->add_option("term", cmd.input, "strand | ramp | cat(T)")->required();
  ladder_cmd->add_option("--max-degree", cmd.max_degree, "ordinal degree cap");
  ladder_cmd->add_option("--aorb0", cmd.locators, "locator whose approximating orbit to report");
  ladder_cmd->add_flag("--audit", cmd.audit, "audit results on the standard windows");
  ladder_cmd->add_option("--nesting-cap", cmd.nesting_cap, "maximum cat nesting");

  auto* window_cmd = app.add_subcommand("window", "finite verification window of a ladder term");
  window_cmd->add_option("term", cmd.input, "strand | ramp | cat(T)")->required();
  window_cmd->add_option("--family-cut", cmd.family_cut, "maximum index weight")->required();
  window_cmd->add_option("--strand-cut", cmd.strand_cut, "maximum |strand index|")->required();
  window_cmd->add_option("--system-out", cmd.output, "also write the finite system to this file");
  window_cmd->add_option("--nesting-cap", cmd.nesting_cap, "maximum cat nesting");

  auto* census_cmd = app.add_subcommand("census", "exhaustive verification over small systems");
  census_cmd->add_option("--points", cmd.points, "largest point count")->required();
  census_cmd->add_flag("--iso", cmd.up_to_iso, "one space per isomorphism class");
  census_cmd->add_option("--check", cmd.checks, "checks to run (comma-separated or all)");
  census_cmd->add_option("--jobs", cmd.jobs, "worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--counterexample-dir", cmd.output, "write one system file per failing check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.name = "help";
    cmd.help = app.help();
    for (auto* sub : app.get_subcommands()) cmd.help = sub->help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::usage, e.what());
  }
  cmd.name = app.get_subcommands().front()->get_name();
  cmd.checks = split_list(cmd.checks);
  return cmd;
}

Outcome execute(const Command& cmd) {
  try {
    if (cmd.name == "help") return {0, cmd.help, {}};
    if (cmd.name == "decompose") return decompose(cmd);
    if (cmd.name == "trace") {
      const FiniteSystem sys = io::read_system_file(cmd.input);
      return emit(io::trace_to_json(sys.space, stabilize(sys)));
    }
    if (cmd.name == "oracle") {
      const FiniteSystem sys = io::read_system_file(cmd.input);
      return emit({{"system_hash", io::system_hash(sys)},
                   {"classes", io::partition_to_json(sys.space, oracle_partition(sys))},
                   {"dim_fix", fixed_space_dimension(sys)}});
    }
    if (cmd.name == "quotient") {
      const FiniteSystem sys = io::read_system_file(cmd.input);
      return emit(io::quotient_to_json(sys, quotient(sys, classes_by(sys, cmd.by))));
    }
    if (cmd.name == "lyapunov") return lyapunov(cmd);
    if (cmd.name == "ergodic") {
      const FiniteSystem sys = io::read_system_file(cmd.input);
      return emit({{"ergodic", is_topologically_ergodic(sys)}, {"dim_fix", fixed_space_dimension(sys)}});
    }
    if (cmd.name == "export-dot") {
      const FiniteSystem sys = io::read_system_file(cmd.input);
      return {0, io::export_dot(sys, classes_by(sys, cmd.by)), {}};
    }
    if (cmd.name == "ladder") return ladder_command(cmd);
    if (cmd.name == "window") return window_command(cmd);
    if (cmd.name == "census") return census_command(cmd);
    throw Error(ErrorCode::usage, "unknown command '" + cmd.name + "'");
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::degree_cap ? 1 : 2;
    return {code, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::filesystem::filesystem_error& e) {
    return {2, {}, std::string("error: E_IO: ") + e.what() + "\n"};
  }
}

Outcome run(const std::vector<std::string>& args) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const Error& e) {
    return {2, {}, std::string("error: ") + e.what() + "\nRun with --help for usage.\n"};
  }
  return execute(cmd);
}

}  // namespace fixfactor::cli
