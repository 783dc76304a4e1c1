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

#include "output.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace shishkin::cli {

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

std::string epsilon_label(double epsilon) {
  if (epsilon > 0.0) {
    const double exponent = std::log2(epsilon);
    const std::string text = fmt::format("{:.6g}", exponent);
    const double rebuilt = std::exp2(std::stod(text));
    if (std::abs(rebuilt - epsilon) <= 1e-12 * epsilon) {
      return "2^" + text;
    }
  }
  return fmt::format("{:.6g}", epsilon);
}

void write_mesh_csv(std::ostream& out, const Mesh& mesh) {
  const auto nodes = mesh.nodes();
  const auto widths = mesh.widths();
  const double n = static_cast<double>(mesh.intervals());
  fmt::print(out, "i,xi,x,h\n");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double xi = static_cast<double>(i) / n;
    if (i < widths.size()) {
      fmt::print(out, "{},{},{},{}\n", i, format_real(xi), format_real(nodes[i]),
                 format_real(widths[i]));
    } else {
      fmt::print(out, "{},{},{},\n", i, format_real(xi), format_real(nodes[i]));
    }
  }
}

void write_solution_csv(std::ostream& out, const Trajectory& trajectory,
                        const Problem& problem) {
  const auto nodes = trajectory.mesh.nodes();
  fmt::print(out, "x,y_numeric,y_exact,abs_error\n");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double y = trajectory.values[i];
    if (problem.has_exact()) {
      const double exact = problem.exact(nodes[i]);
      fmt::print(out, "{},{},{},{}\n", format_real(nodes[i]), format_real(y),
                 format_real(exact), format_real(std::abs(exact - y)));
    } else {
      fmt::print(out, "{},{},,\n", format_real(nodes[i]), format_real(y));
    }
  }
}

void write_sweep_csv(std::ostream& out, const ConvergenceTable& table) {
  fmt::print(out, "epsilon,k,N,E_N,ord\n");
  const auto eps = table.epsilons();
  for (std::size_t e = 0; e < eps.size(); ++e) {
    for (int k : table.k_range()) {
      const TableEntry& entry = table.at(e, k);
      fmt::print(out, "{},{},{},{},{}\n", format_real(eps[e]), k,
                 std::size_t{1} << k, format_real(entry.error),
                 entry.order ? format_real(*entry.order) : std::string{});
    }
  }
}

void write_sweep_markdown(std::ostream& out, const ConvergenceTable& table) {
  const auto eps = table.epsilons();
  fmt::print(out, "| N |");
  for (double e : eps) {
    const std::string label = epsilon_label(e);
    fmt::print(out, " E_N eps={} | ord eps={} |", label, label);
  }
  fmt::print(out, "\n|---|");
  for (std::size_t e = 0; e < eps.size(); ++e) fmt::print(out, "---:|---:|");
  fmt::print(out, "\n");
  for (int k : table.k_range()) {
    fmt::print(out, "| 2^{} |", k);
    for (std::size_t e = 0; e < eps.size(); ++e) {
      const TableEntry& entry = table.at(e, k);
      fmt::print(out, " {:.2e} | {} |", entry.error,
                 entry.order ? fmt::format("{:.2f}", *entry.order) : std::string("-"));
    }
    fmt::print(out, "\n");
  }
}

std::string stability_line(Scheme scheme, double epsilon, std::size_t n_intervals,
                           std::size_t oscillations, double max_error) {
  return fmt::format("scheme={} epsilon={} N={} oscillations={} max_error={}",
                     to_string(scheme), format_real(epsilon), n_intervals,
                     oscillations, format_real(max_error));
}

}  // namespace shishkin::cli
