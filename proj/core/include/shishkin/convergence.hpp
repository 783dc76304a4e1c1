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
#include <optional>
#include <span>
#include <vector>

#include "shishkin/mesh.hpp"
#include "shishkin/problem.hpp"
#include "shishkin/stepper.hpp"
#include "shishkin/tableau.hpp"

namespace shishkin {

/// E_N = max_i |y(x_i) - y_i| over every node of the trajectory.
double max_error(const Trajectory& trajectory, const Problem& problem);

/// Convergence rate r in E_N ~ (N^{-1} ln N)^r from two successive meshes,
/// N = 2^k:  (ln e_n - ln e_2n) / ln(2k / (k + 1)).
/// Throws DomainError for k < 2 or nonpositive errors.
double shishkin_order(double e_n, double e_2n, int k);

/// Mesh family used by sweeps and the CLI.
struct MeshSettings {
  MeshKind kind = MeshKind::shishkin;
  int method_order = 2;
  double layer_constant = 1.0;
  double split = 0.5;
};

/// Mesh with N intervals on [0, 1] for the given epsilon.
Mesh make_mesh(const MeshSettings& settings, std::size_t n_intervals,
               double epsilon);

struct SweepSpec {
  Scheme scheme = Scheme::heun;
  BuiltinName problem = BuiltinName::layer1;
  std::vector<double> epsilons;
  int k_min = 10;
  int k_max = 17;
  MeshSettings mesh;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct TableEntry {
  double error;
  std::optional<double> order;
};

/// (epsilon x k) grid of errors and rates, N = 2^k. The row for k_max has no
/// rate.
class ConvergenceTable {
 public:
  ConvergenceTable(Scheme scheme, BuiltinName problem, MeshKind mesh_kind,
                   std::vector<double> epsilons, int k_min, int k_max,
                   std::vector<TableEntry> entries);

  Scheme scheme() const noexcept { return scheme_; }
  BuiltinName problem() const noexcept { return problem_; }
  MeshKind mesh_kind() const noexcept { return mesh_kind_; }
  std::span<const double> epsilons() const noexcept { return epsilons_; }
  int k_min() const noexcept { return k_min_; }
  int k_max() const noexcept { return k_max_; }
  std::vector<int> k_range() const;

  /// Entry for epsilons()[eps_index] and N = 2^k; throws std::out_of_range.
  const TableEntry& at(std::size_t eps_index, int k) const;

 private:
  Scheme scheme_;
  BuiltinName problem_;
  MeshKind mesh_kind_;
  std::vector<double> epsilons_;
  int k_min_;
  int k_max_;
  std::vector<TableEntry> entries_;  // eps-major
};

/// Largest k accepted by run_sweep (2^k intervals per cell).
inline constexpr int kMaxSweepExponent = 24;

/// Integrates every (epsilon, k) cell and records E_N and the rate from
/// consecutive k. Cells run on independent worker threads; the table does not
/// depend on scheduling. Requires 2 <= k_min < k_max <= kMaxSweepExponent and
/// a nonempty epsilon list (DomainError otherwise). Cell failures are rethrown
/// as SweepError carrying (epsilon, k).
ConvergenceTable run_sweep(const SweepSpec& spec);

/// Strict sign changes between successive increments d_i = v[i+1] - v[i],
/// skipping increments with |d_i| <= 1e-14.
std::size_t oscillation_count(std::span<const double> values);
std::size_t oscillation_count(const Trajectory& trajectory);

}  // namespace shishkin
