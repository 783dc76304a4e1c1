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

#include <string>
#include <vector>

#include "shishkin/mesh.hpp"
#include "shishkin/problem.hpp"
#include "shishkin/tableau.hpp"

namespace shishkin {

/// Numerical solution y_0..y_N on the nodes of `mesh`.
struct Trajectory {
  Mesh mesh;
  std::vector<double> values;
  Scheme scheme;
  std::string problem_id;
  double epsilon;
};

/// One step of an explicit Runge-Kutta method:
///   k_j = f(x + c_j h, y + h * sum_{q<j} a_{j,q} k_q),  j = 1..s
///   y_next = y + h * sum_j b_j k_j
/// Stages are evaluated in order and the weighted sum is accumulated in
/// ascending j, so results are bit-reproducible.
///
/// Throws UnsupportedError for an implicit tableau, DomainError for h <= 0 or
/// a step leaving the problem domain, EvaluationError naming the stage when a
/// stage value is not finite.
double explicit_rk_step(const ButcherTableau& tableau, const Problem& problem,
                        double x, double y, double h);

/// One step of the 2-stage Gauss method on y' = p(x) y + q(x), with the stage
/// system eliminated in closed form. With gamma = sqrt(3)/6,
/// p1 = p(x + (1/2 - gamma) h), p2 = p(x + (1/2 + gamma) h) (q likewise):
///
///   D      = (1 - p1 h/4)(1 - p2 h/4) - p1 p2 (1/16 - gamma^2) h^2
///   y_next = y + h/2 * [(p1 y + q1)(1 + p2 gamma h) + (p2 y + q2)(1 - p1 gamma h)] / D
///
/// h = 0 returns y. Throws UnsupportedError without a linear form and
/// SingularStepError when |D| <= 1e-14.
double gauss2_linear_step(const Problem& problem, double x, double y, double h);

/// Advances `scheme` across every interval of `mesh`, starting from y0.
/// gauss2 requires a linear problem. Throws DomainError if the mesh does not
/// span the problem domain; step failures are rethrown as IntegrationError
/// carrying the interval index.
Trajectory integrate(Scheme scheme, const Problem& problem, const Mesh& mesh);

}  // namespace shishkin
