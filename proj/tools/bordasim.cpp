// bordasim: enumerate weak orders, simulate scenarios, verify suites and
// export graphs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "borda/scenario_io.hpp"

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

// "-" writes to standard output.
void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw borda::InputError(path + ": cannot open output file");
  out << text;
}

std::string enumerate_listing(int m) {
  const auto graph = borda::cover_graph(m);
  const auto& space = graph->space();
  std::ostringstream out;
  out << "id,order,scores,antipode,degree\n";
  for (borda::OrderId id = 0; id < space.size(); ++id) {
    out << id << ',' << space.to_text(id) << ",\"";
    const auto& s = space.scores(id);
    for (std::size_t a = 0; a < s.size(); ++a) out << (a ? " " : "") << s[a].to_string();
    out << "\"," << space.to_text(space.antipode(id)) << ',' << graph->neighbors(id).size() << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded Borda dynamics on influence networks"};
  app.require_subcommand(1);

  int enum_m = 3;
  bool enum_dot = false;
  std::string enum_out = "-";
  auto* enumerate = app.add_subcommand("enumerate", "List the weak orders on m alternatives");
  enumerate->add_option("m", enum_m, "Number of alternatives (2..6)")->required();
  enumerate->add_flag("--dot", enum_dot, "Emit the move graph in DOT form instead");
  enumerate->add_option("-o,--output", enum_out, "Output path, - for stdout");

  std::string sim_path, sim_csv, sim_report = "-";
  auto* simulate = app.add_subcommand("simulate", "Run a scenario until its orbit closes");
  simulate->add_option("scenario", sim_path, "Scenario JSON file")->required();
  simulate->add_option("--csv", sim_csv, "Trajectory CSV path, - for stdout");
  simulate->add_option("--report", sim_report, "Orbit report JSON path, - for stdout");

  std::string suite_path, suite_out = "-";
  auto* verify = app.add_subcommand("verify", "Run a verification suite manifest");
  verify->add_option("suite", suite_path, "Suite manifest JSON file")->required();
  verify->add_option("-o,--output", suite_out, "Outcomes JSON path, - for stdout");

  std::string dot_kind, dot_scenario, dot_out = "-";
  int dot_m = 3;
  auto* export_dot = app.add_subcommand("export-dot", "Export the move graph or a scenario network as DOT");
  export_dot->add_option("kind", dot_kind, "move-graph or network")
      ->required()
      ->check(CLI::IsMember({"move-graph", "network"}));
  export_dot->add_option("--m", dot_m, "Alternatives for move-graph");
  export_dot->add_option("--scenario", dot_scenario, "Scenario file for network");
  export_dot->add_option("-o,--output", dot_out, "Output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*enumerate) {
      if (enum_m < 2 || enum_m > borda::kMaxAlternatives) throw borda::InputError("m: supported range is 2..6");
      write_output(enum_out, enum_dot ? borda::cover_graph(enum_m)->to_dot() : enumerate_listing(enum_m));
      return kOk;
    }
    if (*simulate) {
      const auto loaded = borda::load_scenario(sim_path);
      const auto report = loaded.config.run();
      if (!sim_csv.empty()) write_output(sim_csv, borda::trajectory_csv(loaded.config, loaded.format, report));
      write_output(sim_report, borda::orbit_report_json(loaded.config, loaded.format, report).dump(2) + "\n");
      return kOk;
    }
    if (*verify) {
      const auto results = borda::run_suite(suite_path);
      write_output(suite_out, borda::suite_json(results).dump(2) + "\n");
      bool ok = true;
      for (const auto& r : results) {
        if (r.expect_pass && !r.outcome.passed()) {
          ok = false;
          std::cerr << "expected pass failed: " << r.label << " (" << borda::to_string(r.outcome.verdict) << ")\n";
        }
      }
      return ok ? kOk : kVerificationFailed;
    }
    if (*export_dot) {
      if (dot_kind == "move-graph") {
        if (dot_m < 2 || dot_m > borda::kMaxAlternatives) throw borda::InputError("--m: supported range is 2..6");
        write_output(dot_out, borda::cover_graph(dot_m)->to_dot());
      } else {
        if (dot_scenario.empty()) throw borda::InputError("--scenario: required for network export");
        const auto loaded = borda::load_scenario(dot_scenario);
        write_output(dot_out, loaded.config.system.network().to_dot(loaded.config.node_names));
      }
      return kOk;
    }
  } catch (const borda::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
