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

#include <iosfwd>
#include <string>

#include "shishkin/convergence.hpp"
#include "shishkin/mesh.hpp"
#include "shishkin/problem.hpp"
#include "shishkin/stepper.hpp"

namespace shishkin::cli {

/// Shortest round-trip-safe rendering used in every CSV field (17 significant
/// digits).
std::string format_real(double value);

/// "2^-7.225" when epsilon is a power of two (up to 1e-12 relative), otherwise
/// the decimal value.
std::string epsilon_label(double epsilon);

/// Header `i,xi,x,h`; the last row leaves h empty.
void write_mesh_csv(std::ostream& out, const Mesh& mesh);

/// Header `x,y_numeric,y_exact,abs_error`; the exact columns are empty when
/// the problem carries no exact solution.
void write_solution_csv(std::ostream& out, const Trajectory& trajectory,
                        const Problem& problem);

/// Header `epsilon,k,N,E_N,ord`, epsilon-major; ord empty where undefined.
void write_sweep_csv(std::ostream& out, const ConvergenceTable& table);

/// One row per N = 2^k, an (E_N, ord) column pair per epsilon; E_N with three
/// significant digits, ord with two decimals, `-` where undefined.
void write_sweep_markdown(std::ostream& out, const ConvergenceTable& table);

/// `scheme=<s> epsilon=<e> N=<n> oscillations=<count> max_error=<E>`
std::string stability_line(Scheme scheme, double epsilon, std::size_t n_intervals,
                           std::size_t oscillations, double max_error);

}  // namespace shishkin::cli
