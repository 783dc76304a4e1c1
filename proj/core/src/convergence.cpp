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

#include "shishkin/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "shishkin/errors.hpp"

namespace shishkin {

namespace {

constexpr double kDeadBand = 1e-14;

}  // namespace

double max_error(const Trajectory& trajectory, const Problem& problem) {
  if (!problem.has_exact()) {
    throw UnsupportedError(
        fmt::format("{}: E_N needs an exact solution", problem.name()));
  }
  const auto nodes = trajectory.mesh.nodes();
  if (nodes.size() != trajectory.values.size()) {
    throw DomainError(fmt::format("trajectory has {} values for {} nodes",
                                  trajectory.values.size(), nodes.size()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    worst = std::max(worst, std::abs(problem.exact(nodes[i]) - trajectory.values[i]));
  }
  return worst;
}

double shishkin_order(double e_n, double e_2n, int k) {
  if (k < 2) {
    throw DomainError(fmt::format("rate needs k >= 2 (N = 2^k), got {}", k));
  }
  if (!(e_n > 0.0) || !(e_2n > 0.0)) {
    throw DomainError(
        fmt::format("errors must be positive, got {} and {}", e_n, e_2n));
  }
  const double kd = static_cast<double>(k);
  return (std::log(e_n) - std::log(e_2n)) / std::log(2.0 * kd / (kd + 1.0));
}

Mesh make_mesh(const MeshSettings& settings, std::size_t n_intervals,
               double epsilon) {
  if (settings.kind == MeshKind::uniform) {
    return build_uniform_mesh(n_intervals, 0.0, 1.0);
  }
  return build_shishkin_mesh(ShishkinParams{n_intervals, epsilon,
                                            settings.method_order,
                                            settings.layer_constant,
                                            settings.split});
}

ConvergenceTable::ConvergenceTable(Scheme scheme, BuiltinName problem,
                                   MeshKind mesh_kind,
                                   std::vector<double> epsilons, int k_min,
                                   int k_max, std::vector<TableEntry> entries)
    : scheme_(scheme),
      problem_(problem),
      mesh_kind_(mesh_kind),
      epsilons_(std::move(epsilons)),
      k_min_(k_min),
      k_max_(k_max),
      entries_(std::move(entries)) {
  const auto rows = static_cast<std::size_t>(k_max_ - k_min_ + 1);
  if (k_max_ < k_min_ || entries_.size() != epsilons_.size() * rows) {
    throw DomainError("convergence table entries do not match its grid");
  }
}

std::vector<int> ConvergenceTable::k_range() const {
  std::vector<int> ks;
  for (int k = k_min_; k <= k_max_; ++k) ks.push_back(k);
  return ks;
}

const TableEntry& ConvergenceTable::at(std::size_t eps_index, int k) const {
  if (eps_index >= epsilons_.size() || k < k_min_ || k > k_max_) {
    throw std::out_of_range(
        fmt::format("no table entry for epsilon index {}, k = {}", eps_index, k));
  }
  const auto rows = static_cast<std::size_t>(k_max_ - k_min_ + 1);
  return entries_[eps_index * rows + static_cast<std::size_t>(k - k_min_)];
}

ConvergenceTable run_sweep(const SweepSpec& spec) {
  if (spec.epsilons.empty()) {
    throw DomainError("sweep needs at least one epsilon");
  }
  if (spec.k_min < 2 || spec.k_min >= spec.k_max ||
      spec.k_max > kMaxSweepExponent) {
    throw DomainError(fmt::format("sweep needs 2 <= k_min < k_max <= {}, got {}..{}",
                                  kMaxSweepExponent, spec.k_min, spec.k_max));
  }
  for (double eps : spec.epsilons) {
    if (!(eps > 0.0 && eps <= 1.0)) {
      throw DomainError(fmt::format("epsilon must lie in (0, 1], got {}", eps));
    }
  }

  const auto rows = static_cast<std::size_t>(spec.k_max - spec.k_min + 1);
  const std::size_t cells = spec.epsilons.size() * rows;
  std::vector<double> errors(cells, 0.0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_cell = cells;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      const double eps = spec.epsilons[cell / rows];
      const int k = spec.k_min + static_cast<int>(cell % rows);
      try {
        const Problem problem = make_builtin(spec.problem, eps);
        const Mesh mesh = make_mesh(spec.mesh, std::size_t{1} << k, eps);
        errors[cell] = max_error(integrate(spec.scheme, problem, mesh), problem);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        // Report the lowest failing cell so the message does not depend on
        // thread scheduling.
        if (cell < failed_cell) {
          failed_cell = cell;
          failure = std::current_exception();
        }
      }
    }
  };

  unsigned threads = spec.threads != 0 ? spec.threads
                                       : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  if (failure) {
    const double eps = spec.epsilons[failed_cell / rows];
    const int k = spec.k_min + static_cast<int>(failed_cell % rows);
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      throw SweepError(fmt::format("cell epsilon = {}, k = {}: {}", eps, k, e.what()),
                       eps, k);
    }
  }

  std::vector<TableEntry> entries(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    entries[cell].error = errors[cell];
    const std::size_t row = cell % rows;
    if (row + 1 < rows) {
      const double e_n = errors[cell];
      const double e_2n = errors[cell + 1];
      // A zero error (exact arithmetic hit) leaves the rate undefined.
      if (e_n > 0.0 && e_2n > 0.0) {
        entries[cell].order = shishkin_order(e_n, e_2n, spec.k_min + static_cast<int>(row));
      }
    }
  }
  return ConvergenceTable(spec.scheme, spec.problem, spec.mesh.kind,
                          spec.epsilons, spec.k_min, spec.k_max,
                          std::move(entries));
}

std::size_t oscillation_count(std::span<const double> values) {
  std::size_t changes = 0;
  int previous_sign = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double d = values[i + 1] - values[i];
    if (!(std::abs(d) > kDeadBand)) continue;
    const int sign = d > 0.0 ? 1 : -1;
    if (previous_sign != 0 && sign != previous_sign) ++changes;
    previous_sign = sign;
  }
  return changes;
}

std::size_t oscillation_count(const Trajectory& trajectory) {
  return oscillation_count(trajectory.values);
}

}  // namespace shishkin
