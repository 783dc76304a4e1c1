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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shishkin/convergence.hpp"
#include "shishkin/mesh.hpp"
#include "shishkin/problem.hpp"
#include "shishkin/tableau.hpp"

namespace shishkin::cli {

/// Bad command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

enum class Command { mesh, solve, sweep, stability };
enum class OutputFormat { csv, md };

std::string_view to_string(Command command);

struct RunConfig {
  Command command = Command::solve;
  BuiltinName problem = BuiltinName::layer1;
  Scheme scheme = Scheme::heun;
  MeshSettings mesh;  ///< kind, n, b, alpha
  std::optional<std::size_t> n_intervals;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::vector<double> epsilons;
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  ///< empty: standard output

  /// Throws UsageError when the combination of fields is inconsistent.
  void validate() const;
};

/// Accepts a decimal ("0.25") or a power of two ("2^-7.225"). The result must
/// lie in (0, 1]. Throws UsageError otherwise.
double parse_epsilon(std::string_view text);

/// Comma-separated list of parse_epsilon() values.
std::vector<double> parse_epsilon_list(std::string_view text);

/// argv[0] is the program name. Throws UsageError on bad input; --help is
/// reported through the returned flag instead.
struct ParseResult {
  std::optional<RunConfig> config;  ///< empty when help was requested
  std::string help_text;
};
ParseResult parse_command_line(int argc, const char* const* argv);

/// Executes one command, writing to `out` unless config.out_path is set.
/// Returns 0, or 1 on a numerical failure (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line() + run() with exit-code mapping; what main() calls.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace shishkin::cli
