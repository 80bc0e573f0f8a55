// Command line front end.
//
// Exit codes: 0 the space is Fano (or the inspection succeeded), 1 the
// space is not Fano (boundary contact included), 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homtoric/errors.hpp"
#include "homtoric/problem_spec.hpp"
#include "homtoric/report.hpp"
#include "homtoric/toric_fiber.hpp"

namespace {

using namespace homtoric;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

int parse_range_bound(const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw SyntaxError("sweep range must look like 2..8");
  }
}

struct Command {
  CLI::App* app = nullptr;
  CLI::Option* json_flag = nullptr;

  OutputFormat format() const {
    return json_flag->count() > 0 ? OutputFormat::json : OutputFormat::human;
  }
};

Command add_command(CLI::App& app, const std::string& name, const std::string& description) {
  Command cmd;
  cmd.app = app.add_subcommand(name, description);
  cmd.json_flag = cmd.app->add_flag("--json", "machine-readable JSON output");
  auto* human_flag = cmd.app->add_flag("--human", "human-readable output (default)");
  cmd.json_flag->excludes(human_flag);
  human_flag->excludes(cmd.json_flag);
  return cmd;
}

int report_and_status(const ProblemSpec& spec, OutputFormat format) {
  const Evaluation ev = evaluate(spec);
  std::cout << emit_report(spec, ev, format);
  return ev.report.verdict ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Fano decision for twisted toric fibrations over flag manifolds"};
  app.require_subcommand(1);

  Command check = add_command(app, "check", "decide whether the space in a problem file is Fano");
  std::string check_input;
  check.app->add_option("input", check_input, "problem file, or - for stdin")->required();

  Command polytope =
      add_command(app, "polytope", "anticanonical polytope, barycenter and volume of a fiber");
  std::string polytope_input;
  polytope.app->add_option("input", polytope_input, "problem or fiber file, or - for stdin")
      ->required();

  Command flag_info = add_command(app, "flag-info", "roots, center and chamber of a flag manifold");
  std::string flag_input;
  flag_info.app->add_option("input", flag_input, "problem file (fiber and twist optional), or -")
      ->required();

  Command preset = add_command(app, "preset", "evaluate or emit a built-in example family");
  std::string preset_name;
  int preset_n = 0;
  bool preset_emit = false;
  preset.app->add_option("name", preset_name, "hirzebruch or so4n-cp2")->required();
  auto* preset_n_opt = preset.app->add_option("--n", preset_n, "family parameter");
  preset.app->add_flag("--emit", preset_emit, "print the problem document instead of deciding");

  Command sweep_cmd = add_command(app, "sweep", "evaluate a preset family over a parameter range");
  std::string sweep_name;
  std::string sweep_range;
  sweep_cmd.app->add_option("name", sweep_name, "hirzebruch or so4n-cp2")->required();
  sweep_cmd.app->add_option("--range", sweep_range, "inclusive range, e.g. 2..8")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*check.app) {
    const ProblemSpec spec = parse_spec(read_input(check_input));
    return report_and_status(spec, check.format());
  }

  if (*polytope.app) {
    Fan fan;
    const auto fiber = parse_fiber_part(read_input(polytope_input));
    if (const CpmFiber* cpm = std::get_if<CpmFiber>(&fiber)) {
      fan = make_cpm_fan(cpm->dim);
    } else {
      fan = std::get<Fan>(fiber);
    }
    const ValidatedFan validated = validate_fan(fan);
    if (!is_fano(validated)) {
      if (polytope.format() == OutputFormat::json) {
        std::cout << "{\n  \"fano\": false\n}\n";
      } else {
        std::cout << "Fano: no\n";
      }
      return 1;
    }
    std::cout << emit_polytope(canonical_polytope(validated), polytope.format());
    return 0;
  }

  if (*flag_info.app) {
    auto [group, marks] = parse_flag_part(read_input(flag_input));
    const FlagManifold fm = FlagManifold::build(FlagSpec{RootSystem::build(group), marks});
    std::cout << emit_flag_info(fm, flag_info.format());
    return 0;
  }

  if (*preset.app) {
    if (preset_n_opt->count() == 0) preset_n = (preset_name == "so4n-cp2") ? 5 : 1;
    const ProblemSpec spec = make_preset(preset_name, preset_n);
    if (preset_emit) {
      std::cout << emit_spec(spec);
      return 0;
    }
    return report_and_status(spec, preset.format());
  }

  if (*sweep_cmd.app) {
    const auto pos = sweep_range.find("..");
    if (pos == std::string::npos) throw SyntaxError("sweep range must look like 2..8");
    const int lo = parse_range_bound(sweep_range.substr(0, pos));
    const int hi = parse_range_bound(sweep_range.substr(pos + 2));
    const auto rows = sweep(sweep_name, lo, hi);
    std::cout << emit_sweep(sweep_name, rows, sweep_cmd.format());
    return 0;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << "\n";
    return 2;
  }
}
