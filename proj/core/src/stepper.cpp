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

#include "shishkin/stepper.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "shishkin/errors.hpp"

namespace shishkin {

namespace {

constexpr double kDomainTol = 1e-12;
constexpr double kSingularTol = 1e-14;

void check_step_bounds(const Problem& problem, double x, double h) {
  if (!(x >= problem.x0() - kDomainTol &&
        x + h <= problem.domain_end() + kDomainTol)) {
    throw DomainError(fmt::format("step [{}, {}] leaves problem domain [{}, {}]",
                                  x, x + h, problem.x0(), problem.domain_end()));
  }
}

}  // namespace

double explicit_rk_step(const ButcherTableau& tableau, const Problem& problem,
                        double x, double y, double h) {
  if (!tableau.is_explicit()) {
    throw UnsupportedError("explicit driver called with an implicit tableau");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError(fmt::format("step size must be positive, got {}", h));
  }
  check_step_bounds(problem, x, h);

  const std::size_t s = tableau.stages();
  std::array<double, ButcherTableau::kMaxStages> k{};
  for (std::size_t j = 0; j < s; ++j) {
    double acc = 0.0;
    for (std::size_t q = 0; q < j; ++q) acc += tableau.a(j, q) * k[q];
    const double stage_y = y + h * acc;
    if (!std::isfinite(stage_y)) {
      throw EvaluationError(
          fmt::format("stage {} argument is not finite at x = {}", j + 1, x));
    }
    try {
      k[j] = problem.rhs(x + tableau.c(j) * h, stage_y);
    } catch (const EvaluationError& e) {
      throw EvaluationError(fmt::format("stage {}: {}", j + 1, e.what()));
    }
  }

  double increment = 0.0;
  for (std::size_t j = 0; j < s; ++j) increment += tableau.b(j) * k[j];
  const double next = y + h * increment;
  if (!std::isfinite(next)) {
    throw EvaluationError(fmt::format("step from x = {} is not finite", x));
  }
  return next;
}

double gauss2_linear_step(const Problem& problem, double x, double y, double h) {
  if (!problem.has_linear_form()) {
    throw UnsupportedError(
        fmt::format("{}: gauss2 needs a linear problem", problem.name()));
  }
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw DomainError(fmt::format("step size must be nonnegative, got {}", h));
  }
  if (h == 0.0) return y;
  check_step_bounds(problem, x, h);

  const double gamma = std::sqrt(3.0) / 6.0;
  const auto [p1, q1] = problem.linear_coeffs(x + (0.5 - gamma) * h);
  const auto [p2, q2] = problem.linear_coeffs(x + (0.5 + gamma) * h);

  const double denom = (1.0 - 0.25 * p1 * h) * (1.0 - 0.25 * p2 * h) -
                       p1 * p2 * (1.0 / 16.0 - gamma * gamma) * h * h;
  if (!(std::abs(denom) > kSingularTol)) {
    throw SingularStepError(
        fmt::format("gauss2 stage system singular at x = {}, h = {} (D = {})",
                    x, h, denom),
        x, h);
  }
  const double numer = (p1 * y + q1) * (1.0 + p2 * gamma * h) +
                       (p2 * y + q2) * (1.0 - p1 * gamma * h);
  const double next = y + 0.5 * h * numer / denom;
  if (!std::isfinite(next)) {
    throw EvaluationError(fmt::format("gauss2 step from x = {} is not finite", x));
  }
  return next;
}

Trajectory integrate(Scheme scheme, const Problem& problem, const Mesh& mesh) {
  if (mesh.intervals() < 1) {
    throw DomainError("mesh has no intervals");
  }
  if (std::abs(mesh.front() - problem.x0()) > kDomainTol ||
      std::abs(mesh.back() - problem.domain_end()) > kDomainTol) {
    throw DomainError(fmt::format("mesh spans [{}, {}] but problem domain is [{}, {}]",
                                  mesh.front(), mesh.back(), problem.x0(),
                                  problem.domain_end()));
  }
  const ButcherTableau& tableau = named_tableau(scheme);
  if (!tableau.is_explicit() && !problem.has_linear_form()) {
    throw UnsupportedError(fmt::format(
        "{} is implicit; only linear problems are supported", to_string(scheme)));
  }

  const auto nodes = mesh.nodes();
  const auto widths = mesh.widths();
  std::vector<double> values(nodes.size());
  values[0] = problem.y0();
  for (std::size_t i = 0; i < widths.size(); ++i) {
    try {
      values[i + 1] =
          tableau.is_explicit()
              ? explicit_rk_step(tableau, problem, nodes[i], values[i], widths[i])
              : gauss2_linear_step(problem, nodes[i], values[i], widths[i]);
    } catch (const Error& e) {
      throw IntegrationError(fmt::format("step {}: {}", i, e.what()), i);
    }
  }
  return Trajectory{mesh, std::move(values), scheme, problem.name(),
                    problem.epsilon()};
}

}  // namespace shishkin
