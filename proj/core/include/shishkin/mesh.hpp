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
#include <string>
#include <string_view>
#include <vector>

namespace shishkin {

enum class MeshKind { uniform, shishkin };

std::string_view to_string(MeshKind kind);

/// Parses "uniform" or "shishkin"; throws LookupError otherwise.
MeshKind mesh_kind_from_string(std::string_view name);

/// Inputs of a Shishkin mesh on [0, 1].
///
/// The transition point is sigma = min(1/2, (n/b) * eps * ln N). The first
/// split*N intervals cover [0, sigma] and the rest cover [sigma, 1].
struct ShishkinParams {
  std::size_t n_intervals = 0;  ///< N, even and >= 4
  double epsilon = 1.0;         ///< perturbation parameter in (0, 1]
  int method_order = 2;         ///< n >= 1
  double layer_constant = 1.0;  ///< b > 0
  double split = 0.5;           ///< alpha in (0, 1); alpha * N must be an integer

  /// Throws DomainError on the first violated invariant.
  void validate() const;
};

/// An ordered node sequence x_0 < ... < x_N together with the interval widths
/// h_i = x_{i+1} - x_i.
///
/// Generated meshes store widths in closed form per mesh piece, so every fine
/// (resp. coarse) interval has bit-identical width. A Mesh may hold invalid
/// data; run validate_mesh() on anything not built by this library.
class Mesh {
 public:
  Mesh(std::vector<double> nodes, std::vector<double> widths, MeshKind kind,
       std::optional<double> sigma = std::nullopt);

  /// Widths are taken as successive node differences.
  static Mesh from_nodes(std::vector<double> nodes,
                         MeshKind kind = MeshKind::uniform);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> widths() const noexcept { return widths_; }
  double node(std::size_t i) const { return nodes_.at(i); }
  double width(std::size_t i) const { return widths_.at(i); }

  /// Number of intervals N (nodes().size() - 1).
  std::size_t intervals() const noexcept {
    return nodes_.empty() ? 0 : nodes_.size() - 1;
  }
  MeshKind kind() const noexcept { return kind_; }
  /// Transition point; present for Shishkin meshes only.
  std::optional<double> sigma() const noexcept { return sigma_; }

  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }

 private:
  std::vector<double> nodes_;
  std::vector<double> widths_;
  MeshKind kind_;
  std::optional<double> sigma_;
};

double transition_point(const ShishkinParams& params);

/// The piecewise-linear Shishkin generating function phi(xi):
///   (sigma / alpha) * xi                              for xi <= alpha
///   sigma + (1 - sigma) * (xi - alpha) / (1 - alpha)  for xi >  alpha
/// Both branches give sigma at xi = alpha, phi(0) = 0 and phi(1) = 1.
double generating_function(double sigma, double alpha, double xi);

Mesh build_shishkin_mesh(const ShishkinParams& params);

/// Shishkin geometry for a given transition point, bypassing the sigma formula.
Mesh build_from_sigma(std::size_t n_intervals, double alpha, double sigma);

Mesh build_uniform_mesh(std::size_t n_intervals, double x_lo = 0.0,
                        double x_hi = 1.0);

struct MeshViolation {
  enum class Kind {
    too_few_nodes,
    width_count,
    non_finite,
    non_monotone,
    left_endpoint,
    right_endpoint,
    nonpositive_width,
    width_mismatch,
    width_sum,
  };

  Kind kind;
  std::size_t index;  ///< offending node/interval index, 0 when not applicable
  std::string message;
};

std::string_view to_string(MeshViolation::Kind kind);

/// Checks the Mesh invariants against the domain [x_lo, x_hi]. Returns an
/// empty report iff the mesh is valid; never throws.
std::vector<MeshViolation> validate_mesh(const Mesh& mesh, double x_lo = 0.0,
                                         double x_hi = 1.0);

}  // namespace shishkin
