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

#include "shishkin/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "shishkin/errors.hpp"

namespace shishkin {

namespace {

constexpr double kSigmaCap = 0.5;
constexpr double kEndpointTol = 1e-12;
constexpr double kWidthTol = 1e-12;

// Number of layer intervals alpha * N; throws if it is not an integer.
std::size_t layer_intervals(std::size_t n_intervals, double alpha) {
  const double scaled = alpha * static_cast<double>(n_intervals);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, scaled)) {
    throw DomainError(fmt::format(
        "split alpha={} times N={} is not an integer", alpha, n_intervals));
  }
  return static_cast<std::size_t>(rounded);
}

void check_split(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(fmt::format("split alpha must lie in (0, 1), got {}", alpha));
  }
}

void check_sigma(double sigma) {
  if (!(sigma > 0.0 && sigma <= kSigmaCap)) {
    throw DomainError(
        fmt::format("transition point sigma must lie in (0, 0.5], got {}", sigma));
  }
}

}  // namespace

std::string_view to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::uniform:
      return "uniform";
    case MeshKind::shishkin:
      return "shishkin";
  }
  return "unknown";
}

MeshKind mesh_kind_from_string(std::string_view name) {
  if (name == "uniform") return MeshKind::uniform;
  if (name == "shishkin") return MeshKind::shishkin;
  throw LookupError(fmt::format("unknown mesh kind '{}'", name));
}

void ShishkinParams::validate() const {
  if (n_intervals < 4 || n_intervals % 2 != 0) {
    throw DomainError(
        fmt::format("N must be even and at least 4, got {}", n_intervals));
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError(fmt::format("epsilon must lie in (0, 1], got {}", epsilon));
  }
  if (method_order < 1) {
    throw DomainError(fmt::format("method order n must be >= 1, got {}", method_order));
  }
  if (!(layer_constant > 0.0) || !std::isfinite(layer_constant)) {
    throw DomainError(fmt::format("layer constant b must be > 0, got {}", layer_constant));
  }
  check_split(split);
  layer_intervals(n_intervals, split);
}

Mesh::Mesh(std::vector<double> nodes, std::vector<double> widths, MeshKind kind,
           std::optional<double> sigma)
    : nodes_(std::move(nodes)),
      widths_(std::move(widths)),
      kind_(kind),
      sigma_(sigma) {}

Mesh Mesh::from_nodes(std::vector<double> nodes, MeshKind kind) {
  std::vector<double> widths;
  if (nodes.size() > 1) {
    widths.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      widths.push_back(nodes[i + 1] - nodes[i]);
    }
  }
  return Mesh(std::move(nodes), std::move(widths), kind);
}

double transition_point(const ShishkinParams& params) {
  params.validate();
  const double n = static_cast<double>(params.method_order);
  const double log_n = std::log(static_cast<double>(params.n_intervals));
  return std::min(kSigmaCap, (n / params.layer_constant) * params.epsilon * log_n);
}

double generating_function(double sigma, double alpha, double xi) {
  check_sigma(sigma);
  check_split(alpha);
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw DomainError(fmt::format("xi must lie in [0, 1], got {}", xi));
  }
  if (xi <= alpha) {
    return (sigma / alpha) * xi;
  }
  return sigma + (1.0 - sigma) * (xi - alpha) / (1.0 - alpha);
}

Mesh build_from_sigma(std::size_t n_intervals, double alpha, double sigma) {
  if (n_intervals < 2) {
    throw DomainError(fmt::format("N must be at least 2, got {}", n_intervals));
  }
  check_split(alpha);
  check_sigma(sigma);
  const std::size_t fine = layer_intervals(n_intervals, alpha);
  if (fine == 0 || fine == n_intervals) {
    throw DomainError("split leaves one mesh piece without intervals");
  }

  const double n = static_cast<double>(n_intervals);
  const double fine_width = (sigma / alpha) / n;
  const double coarse_width = ((1.0 - sigma) / (1.0 - alpha)) / n;

  std::vector<double> nodes(n_intervals + 1);
  std::vector<double> widths(n_intervals);
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    nodes[i] = generating_function(sigma, alpha, static_cast<double>(i) / n);
  }
  for (std::size_t i = 0; i < n_intervals; ++i) {
    widths[i] = i < fine ? fine_width : coarse_width;
  }
  return Mesh(std::move(nodes), std::move(widths), MeshKind::shishkin, sigma);
}

Mesh build_shishkin_mesh(const ShishkinParams& params) {
  const double sigma = transition_point(params);
  return build_from_sigma(params.n_intervals, params.split, sigma);
}

Mesh build_uniform_mesh(std::size_t n_intervals, double x_lo, double x_hi) {
  if (n_intervals < 1) {
    throw DomainError("uniform mesh needs at least one interval");
  }
  if (!(x_lo < x_hi) || !std::isfinite(x_lo) || !std::isfinite(x_hi)) {
    throw DomainError(fmt::format("degenerate interval [{}, {}]", x_lo, x_hi));
  }
  const double n = static_cast<double>(n_intervals);
  const double length = x_hi - x_lo;
  const double h = length / n;

  std::vector<double> nodes(n_intervals + 1);
  for (std::size_t i = 0; i < n_intervals; ++i) {
    nodes[i] = x_lo + length * (static_cast<double>(i) / n);
  }
  nodes[n_intervals] = x_hi;
  return Mesh(std::move(nodes), std::vector<double>(n_intervals, h),
              MeshKind::uniform);
}

std::string_view to_string(MeshViolation::Kind kind) {
  using K = MeshViolation::Kind;
  switch (kind) {
    case K::too_few_nodes: return "too_few_nodes";
    case K::width_count: return "width_count";
    case K::non_finite: return "non_finite";
    case K::non_monotone: return "non_monotone";
    case K::left_endpoint: return "left_endpoint";
    case K::right_endpoint: return "right_endpoint";
    case K::nonpositive_width: return "nonpositive_width";
    case K::width_mismatch: return "width_mismatch";
    case K::width_sum: return "width_sum";
  }
  return "unknown";
}

std::vector<MeshViolation> validate_mesh(const Mesh& mesh, double x_lo,
                                         double x_hi) {
  using K = MeshViolation::Kind;
  std::vector<MeshViolation> report;
  const auto nodes = mesh.nodes();
  const auto widths = mesh.widths();

  if (nodes.size() < 2) {
    report.push_back({K::too_few_nodes, 0,
                      fmt::format("mesh has {} nodes, need at least 2", nodes.size())});
    return report;
  }
  if (widths.size() != nodes.size() - 1) {
    report.push_back({K::width_count, 0,
                      fmt::format("{} widths for {} nodes", widths.size(), nodes.size())});
    return report;
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i])) {
      report.push_back({K::non_finite, i, fmt::format("node {} is not finite", i)});
    }
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      report.push_back({K::non_monotone, i,
                        fmt::format("node {} ({}) does not exceed node {} ({})", i,
                                    nodes[i], i - 1, nodes[i - 1])});
    }
  }
  if (std::abs(nodes.front() - x_lo) > kEndpointTol) {
    report.push_back({K::left_endpoint, 0,
                      fmt::format("first node {} differs from {}", nodes.front(), x_lo)});
  }
  if (std::abs(nodes.back() - x_hi) > kEndpointTol) {
    report.push_back({K::right_endpoint, nodes.size() - 1,
                      fmt::format("last node {} differs from {}", nodes.back(), x_hi)});
  }

  long double width_sum = 0.0L;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    width_sum += widths[i];
    if (!(widths[i] > 0.0)) {
      report.push_back({K::nonpositive_width, i,
                        fmt::format("width {} is {}", i, widths[i])});
    }
    const double diff = nodes[i + 1] - nodes[i];
    if (std::abs(widths[i] - diff) > kWidthTol) {
      report.push_back({K::width_mismatch, i,
                        fmt::format("width {} is {} but nodes differ by {}", i,
                                    widths[i], diff)});
    }
  }
  const double span = nodes.back() - nodes.front();
  if (std::abs(static_cast<double>(width_sum) - span) > kWidthTol) {
    report.push_back({K::width_sum, 0,
                      fmt::format("widths sum to {}, span is {}",
                                  static_cast<double>(width_sum),
                                  nodes.back() - nodes.front())});
  }
  return report;
}

}  // namespace shishkin
