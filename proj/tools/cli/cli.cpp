// Copyright 2026 The shishkin-rk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "output.hpp"
#include "shishkin/errors.hpp"
#include "shishkin/stepper.hpp"

namespace shishkin::cli {

namespace {

std::optional<double> parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  return text;
}

// Option storage shared by all subcommands; only one subcommand is parsed.
struct RawOptions {
  std::string problem = "layer1";
  std::string scheme = "heun";
  std::string mesh = "shishkin";
  std::string eps;
  std::string format = "csv";
  std::string out;
  std::size_t n_intervals = 0;
  int k_min = 0;
  int k_max = 0;
  int mesh_order = 2;
  double mesh_b = 1.0;
  double alpha = 0.5;
};

struct SubcommandOptions {
  CLI::App* app = nullptr;
  CLI::Option* n_intervals = nullptr;
  CLI::Option* k_min = nullptr;
  CLI::Option* k_max = nullptr;
  CLI::Option* eps = nullptr;
};

SubcommandOptions add_subcommand(CLI::App& app, const std::string& name,
                                 const std::string& description, RawOptions& raw) {
  SubcommandOptions sub;
  sub.app = app.add_subcommand(name, description);
  CLI::App& s = *sub.app;
  s.add_option("--problem", raw.problem, "Built-in problem: decay | layer1")
      ->capture_default_str();
  s.add_option("--scheme", raw.scheme,
               "heun | rk2_ralston | rk2_midpoint | rk3_a | rk3_kutta | gauss2")
      ->capture_default_str();
  s.add_option("--mesh,--type", raw.mesh, "Mesh kind: shishkin | uniform")
      ->capture_default_str();
  sub.n_intervals = s.add_option("--n-intervals", raw.n_intervals, "Number of intervals N");
  sub.k_min = s.add_option("--kmin", raw.k_min, "Smallest exponent k (N = 2^k)");
  sub.k_max = s.add_option("--kmax", raw.k_max, "Largest exponent k (N = 2^k)");
  sub.eps = s.add_option("--eps,--epsilon", raw.eps,
                         "Perturbation parameter(s): 0.25, 2^-4, comma-separated");
  s.add_option("--mesh-order", raw.mesh_order, "Shishkin parameter n")
      ->capture_default_str();
  s.add_option("--mesh-b", raw.mesh_b, "Shishkin parameter b")->capture_default_str();
  s.add_option("--alpha", raw.alpha, "Fraction of intervals inside the layer")
      ->capture_default_str();
  s.add_option("--format", raw.format, "Output format: csv | md")->capture_default_str();
  s.add_option("--out", raw.out, "Output file (default: standard output)");
  return sub;
}

template <typename Fn>
auto as_usage(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

RunConfig build_config(Command command, const RawOptions& raw,
                       const SubcommandOptions& sub) {
  RunConfig config;
  config.command = command;
  config.problem = as_usage([&] { return builtin_from_string(raw.problem); });
  config.scheme = as_usage([&] { return scheme_from_string(raw.scheme); });
  config.mesh.kind = as_usage([&] { return mesh_kind_from_string(raw.mesh); });
  config.mesh.method_order = raw.mesh_order;
  config.mesh.layer_constant = raw.mesh_b;
  config.mesh.split = raw.alpha;
  if (sub.n_intervals->count() > 0) config.n_intervals = raw.n_intervals;
  if (sub.k_min->count() > 0) config.k_min = raw.k_min;
  if (sub.k_max->count() > 0) config.k_max = raw.k_max;
  if (sub.eps->count() > 0) config.epsilons = parse_epsilon_list(raw.eps);
  if (raw.format == "csv") {
    config.format = OutputFormat::csv;
  } else if (raw.format == "md") {
    config.format = OutputFormat::md;
  } else {
    throw UsageError(fmt::format("unknown format '{}' (expected csv or md)", raw.format));
  }
  config.out_path = raw.out;
  config.validate();
  return config;
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error(fmt::format("cannot open '{}' for writing", path));
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Mesh config_mesh(const RunConfig& config, double epsilon) {
  return make_mesh(config.mesh, *config.n_intervals, epsilon);
}

void run_mesh(const RunConfig& config, std::ostream& out) {
  const double eps = config.epsilons.empty() ? 1.0 : config.epsilons.front();
  write_mesh_csv(out, config_mesh(config, eps));
}

void run_solve(const RunConfig& config, std::ostream& out) {
  const double eps = config.epsilons.front();
  const Problem problem = make_builtin(config.problem, eps);
  const Trajectory trajectory =
      integrate(config.scheme, problem, config_mesh(config, eps));
  write_solution_csv(out, trajectory, problem);
}

void run_sweep_command(const RunConfig& config, std::ostream& out) {
  SweepSpec spec;
  spec.scheme = config.scheme;
  spec.problem = config.problem;
  spec.epsilons = config.epsilons;
  spec.k_min = *config.k_min;
  spec.k_max = *config.k_max;
  spec.mesh = config.mesh;
  const ConvergenceTable table = run_sweep(spec);
  if (config.format == OutputFormat::md) {
    write_sweep_markdown(out, table);
  } else {
    write_sweep_csv(out, table);
  }
}

void run_stability(const RunConfig& config, std::ostream& out) {
  const double eps = config.epsilons.front();
  const Problem problem = make_builtin(config.problem, eps);
  const Trajectory trajectory =
      integrate(config.scheme, problem, config_mesh(config, eps));
  fmt::print(out, "{}\n",
             stability_line(config.scheme, eps, *config.n_intervals,
                            oscillation_count(trajectory),
                            max_error(trajectory, problem)));
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::mesh: return "mesh";
    case Command::solve: return "solve";
    case Command::sweep: return "sweep";
    case Command::stability: return "stability";
  }
  return "unknown";
}

double parse_epsilon(std::string_view text) {
  const std::string_view trimmed = trim(text);
  std::optional<double> value;
  if (trimmed.substr(0, 2) == "2^") {
    if (auto exponent = parse_double(trimmed.substr(2));
        exponent && std::isfinite(*exponent)) {
      value = std::exp2(*exponent);
    }
  } else {
    value = parse_double(trimmed);
  }
  if (!value) {
    throw UsageError(fmt::format(
        "cannot parse epsilon '{}' (expected e.g. 0.25 or 2^-4)", text));
  }
  if (!(*value > 0.0 && *value <= 1.0)) {
    throw UsageError(fmt::format("epsilon '{}' = {} is outside (0, 1]", text, *value));
  }
  return *value;
}

std::vector<double> parse_epsilon_list(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    values.push_back(parse_epsilon(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

void RunConfig::validate() const {
  const bool sweep = command == Command::sweep;
  if (sweep) {
    if (n_intervals) throw UsageError("sweep takes --kmin/--kmax, not --n-intervals");
    if (!k_min || !k_max) throw UsageError("sweep needs --kmin and --kmax");
    if (*k_min < 2 || *k_min >= *k_max || *k_max > kMaxSweepExponent) {
      throw UsageError(fmt::format("need 2 <= kmin < kmax <= {}, got {}..{}",
                                   kMaxSweepExponent, *k_min, *k_max));
    }
    if (epsilons.empty()) throw UsageError("sweep needs --eps");
  } else {
    if (k_min || k_max) {
      throw UsageError(fmt::format("{} takes --n-intervals, not --kmin/--kmax",
                                   to_string(command)));
    }
    if (!n_intervals) {
      throw UsageError(fmt::format("{} needs --n-intervals", to_string(command)));
    }
    if (*n_intervals < 1) throw UsageError("--n-intervals must be positive");
    const bool needs_eps = command != Command::mesh || mesh.kind == MeshKind::shishkin;
    if (needs_eps && epsilons.size() != 1) {
      throw UsageError(fmt::format("{} needs exactly one --epsilon", to_string(command)));
    }
    if (command == Command::mesh && mesh.kind == MeshKind::uniform && epsilons.size() > 1) {
      throw UsageError("mesh takes at most one --epsilon");
    }
  }
  if (format == OutputFormat::md && !sweep) {
    throw UsageError("--format md is only available for sweep");
  }
  for (double eps : epsilons) {
    if (!(eps > 0.0 && eps <= 1.0)) {
      throw UsageError(fmt::format("epsilon {} is outside (0, 1]", eps));
    }
  }
  if (mesh.kind == MeshKind::shishkin) {
    // Parameter checks that do not depend on the cell being run.
    const double eps = epsilons.empty() ? 1.0 : epsilons.front();
    if (sweep) {
      for (int k = *k_min; k <= *k_max; ++k) {
        as_usage([&] {
          ShishkinParams{std::size_t{1} << k, eps, mesh.method_order,
                         mesh.layer_constant, mesh.split}
              .validate();
          return 0;
        });
      }
    } else {
      as_usage([&] {
        ShishkinParams{*n_intervals, eps, mesh.method_order, mesh.layer_constant,
                       mesh.split}
            .validate();
        return 0;
      });
    }
  }
}

ParseResult parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Runge-Kutta solvers for singularly perturbed initial-value "
               "problems on Shishkin meshes",
               "shishkin"};
  app.require_subcommand(1);
  RawOptions raw;
  const SubcommandOptions mesh = add_subcommand(app, "mesh", "Write mesh nodes as CSV", raw);
  const SubcommandOptions solve =
      add_subcommand(app, "solve", "Integrate one problem and write the solution CSV", raw);
  const SubcommandOptions sweep =
      add_subcommand(app, "sweep", "Error and convergence-rate table over (epsilon, N = 2^k)", raw);
  const SubcommandOptions stability = add_subcommand(
      app, "stability", "One-line oscillation and error report for a single run", raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [command, sub] :
       {std::pair{Command::mesh, mesh}, std::pair{Command::solve, solve},
        std::pair{Command::sweep, sweep}, std::pair{Command::stability, stability}}) {
    if (sub.app->parsed()) return {build_config(command, raw, sub), {}};
  }
  throw UsageError("no command given");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kExitUsage;
  }
  try {
    // Render into a buffer first so a failing run leaves no partial output.
    std::ostringstream buffer;
    switch (config.command) {
      case Command::mesh: run_mesh(config, buffer); break;
      case Command::solve: run_solve(config, buffer); break;
      case Command::sweep: run_sweep_command(config, buffer); break;
      case Command::stability: run_stability(config, buffer); break;
    }
    OutputTarget target(config.out_path, out);
    target.stream() << buffer.str();
    target.stream().flush();
    if (!target.stream()) throw Error("failed writing output");
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  ParseResult parsed;
  try {
    parsed = parse_command_line(argc, argv);
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\nRun with --help for usage.\n", e.what());
    return kExitUsage;
  }
  if (!parsed.config) {
    fmt::print(out, "{}", parsed.help_text);
    return kExitOk;
  }
  return run(*parsed.config, out, err);
}

}  // namespace shishkin::cli
