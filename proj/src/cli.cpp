#include "sdc/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdc/analysis.hpp"
#include "sdc/codegen.hpp"
#include "sdc/dsl_io.hpp"
#include "sdc/montecarlo.hpp"
#include "sdc/renderer.hpp"

namespace sdc {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

void add_input(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("file", opts.path, "Diagram file (.json or .sd)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--input-format", opts.format, "Override the format inferred from the extension")
      ->check(CLI::IsMember({"auto", "json", "sd"}));
}

StateDiagram load(const InputOptions& opts) {
  const auto text = read_file(opts.path);
  InputFormat format = format_for_path(opts.path);
  if (opts.format == "json") format = InputFormat::Json;
  if (opts.format == "sd") format = InputFormat::Dsl;
  return parse(text, format);
}

void print_report(const std::string& path, const ValidationReport& report, std::ostream& err) {
  for (const auto& v : report.violations) {
    err << path << ": " << to_string(v.code) << ": "
        << (v.subject.empty() ? std::string("<empty>") : v.subject) << ": " << v.detail << "\n";
  }
}

}  // namespace

WalkTrace walk(const StateDiagram& d, const std::vector<Identifier>& messages) {
  WalkTrace trace;
  trace.start = d.start;
  Identifier current = d.start;
  for (const auto& msg : messages) {
    current = step(d, current, msg);
    trace.steps.push_back({msg, current});
  }
  return trace;
}

Observation parse_observation(const std::string& text) {
  std::size_t values[3] = {0, 0, 0};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, values[i]);
    if (ec != std::errc{} || next == p) {
      throw std::invalid_argument("observation '" + text + "' must look like n,m,reachable");
    }
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') {
        throw std::invalid_argument("observation '" + text + "' must look like n,m,reachable");
      }
      ++p;
    }
  }
  if (p != end) {
    throw std::invalid_argument("observation '" + text + "' must look like n,m,reachable");
  }
  return {values[0], values[1], values[2]};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"State diagram toolchain: validation, analysis, code generation and "
               "reachability statistics",
               "sdc"};
  app.require_subcommand(1);

  InputOptions validate_in;
  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram against all invariants");
  add_input(validate_cmd, validate_in);

  InputOptions stats_in;
  std::string stats_format = "text";
  auto* stats_cmd = app.add_subcommand("stats", "Counts, reachability and dead ends");
  add_input(stats_cmd, stats_in);
  stats_cmd->add_option("--format", stats_format)->check(CLI::IsMember({"json", "text"}));

  InputOptions gen_in;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an Elm model-view-update app");
  add_input(gen_cmd, gen_in);
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  InputOptions dot_in;
  std::string dot_out;
  auto* dot_cmd = app.add_subcommand("dot", "Export the diagram as Graphviz DOT");
  add_input(dot_cmd, dot_in);
  dot_cmd->add_option("--out", dot_out, "Output file (default stdout)");

  RandomModelConfig sim;
  bool sim_chart = false;
  auto* sim_cmd =
      app.add_subcommand("simulate", "Reachability distribution of uniform random diagrams");
  sim_cmd->add_option("--states", sim.n_states)->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--transitions", sim.n_transitions)->required();
  sim_cmd->add_option("--samples", sim.n_samples)->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
  sim_cmd->add_flag("--chart", sim_chart, "Print a text bar chart instead of JSON");

  std::vector<std::string> ad_obs;
  std::size_t ad_pmf_samples = 4000;
  std::size_t ad_null = 10000;
  std::uint64_t ad_seed = 0;
  auto* ad_cmd = app.add_subcommand(
      "ad-test", "Anderson-Darling test of observed reachabilities against random diagrams");
  ad_cmd->add_option("--obs", ad_obs, "states,transitions,reachable (repeatable)");
  ad_cmd->add_option("--pmf-samples", ad_pmf_samples)->capture_default_str();
  ad_cmd->add_option("--null", ad_null)->capture_default_str();
  ad_cmd->add_option("--seed", ad_seed)->capture_default_str();

  InputOptions walk_in;
  std::vector<std::string> walk_msgs;
  std::string walk_format = "text";
  auto* walk_cmd = app.add_subcommand("walk", "Replay messages from the start state");
  add_input(walk_cmd, walk_in);
  walk_cmd->add_option("--msgs", walk_msgs, "Comma-separated messages")->delimiter(',');
  walk_cmd->add_option("--format", walk_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  std::string current_file;
  try {
    if (validate_cmd->parsed()) {
      current_file = validate_in.path;
      const auto d = load(validate_in);
      out << "ok: " << validate_in.path << ": " << d.states.size() << " states, "
          << d.transitions.size() << " transitions\n";
    } else if (stats_cmd->parsed()) {
      current_file = stats_in.path;
      const auto s = stats(load(stats_in));
      out << (stats_format == "json" ? stats_to_json(s) : stats_to_text(s));
    } else if (gen_cmd->parsed()) {
      current_file = gen_in.path;
      write_output(gen_out, gen_app(load(gen_in)).full_module_src, out);
    } else if (dot_cmd->parsed()) {
      current_file = dot_in.path;
      write_output(dot_out, to_dot(load(dot_in)), out);
    } else if (sim_cmd->parsed()) {
      const auto pmf = reachability_pmf(sim);
      out << (sim_chart ? pmf_to_chart(pmf) : pmf_to_json(pmf));
    } else if (ad_cmd->parsed()) {
      std::vector<Observation> obs;
      try {
        for (const auto& text : ad_obs) obs.push_back(parse_observation(text));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (obs.empty()) obs = student_observations();
      out << ad_result_to_json(ad_test_simulated(obs, ad_pmf_samples, ad_null, ad_seed));
    } else if (walk_cmd->parsed()) {
      current_file = walk_in.path;
      const auto trace = walk(load(walk_in), walk_msgs);
      if (walk_format == "json") {
        nlohmann::ordered_json j;
        j["start"] = trace.start;
        j["trace"] = nlohmann::ordered_json::array();
        for (const auto& s : trace.steps) {
          j["trace"].push_back({{"message", s.message}, {"state", s.state}});
        }
        j["final"] = trace.final_state();
        out << j.dump() << "\n";
      } else {
        out << trace.start << "\n";
        for (const auto& s : trace.steps) out << s.message << " -> " << s.state << "\n";
      }
    }
  } catch (const SyntaxError& e) {
    err << current_file << ":" << e.line() << ":" << e.column() << ": syntax error: " << e.what()
        << "\n";
    return exit_code::kInvalid;
  } catch (const SchemaError& e) {
    err << current_file << ": schema error: " << e.what() << "\n";
    return exit_code::kInvalid;
  } catch (const ValidationError& e) {
    print_report(current_file, e.report(), err);
    return exit_code::kInvalid;
  } catch (const UnknownMessageError& e) {
    err << current_file << ": " << e.what() << "\n";
    return exit_code::kInvalid;
  } catch (const ReservedNameError& e) {
    err << current_file << ": " << e.what() << "\n";
    return exit_code::kInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    // CardinalityError, ConfigMismatchError and bad observation values all
    // come from flags.
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  return exit_code::kOk;
}

}  // namespace sdc
