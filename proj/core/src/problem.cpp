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

#include "shishkin/problem.hpp"

#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "shishkin/errors.hpp"

namespace shishkin {

namespace {

constexpr double kDomainTol = 1e-12;
constexpr double kInitialTol = 1e-12;

constexpr std::array kBuiltins{BuiltinName::decay, BuiltinName::layer1};

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError(fmt::format("epsilon must lie in (0, 1], got {}", epsilon));
  }
}

Problem make_decay(double eps) {
  return Problem(
      "decay", eps, 0.0, 1.0, 1.0,
      [eps](double, double y) { return -y / eps; },
      Problem::LinearForm{[eps](double) { return -1.0 / eps; },
                          [](double) { return 0.0; }},
      [eps](double x) { return std::exp(-x / eps); });
}

Problem make_layer1(double eps) {
  auto rhs = [eps](double x, double y) {
    const double e = std::exp(-x / eps);
    return (-x * y + eps + e + x * (x - e + 1.0)) / eps;
  };
  auto p = [eps](double x) { return -x / eps; };
  auto q = [eps](double x) {
    const double e = std::exp(-x / eps);
    return (eps + e + x * (x - e + 1.0)) / eps;
  };
  auto exact = [eps](double x) { return x - std::exp(-x / eps) + 1.0; };
  return Problem("layer1", eps, 0.0, 0.0, 1.0, std::move(rhs),
                 Problem::LinearForm{std::move(p), std::move(q)},
                 std::move(exact));
}

}  // namespace

std::string_view to_string(BuiltinName name) {
  switch (name) {
    case BuiltinName::decay:
      return "decay";
    case BuiltinName::layer1:
      return "layer1";
  }
  return "unknown";
}

BuiltinName builtin_from_string(std::string_view name) {
  for (BuiltinName b : kBuiltins) {
    if (to_string(b) == name) return b;
  }
  throw LookupError(fmt::format("unknown problem '{}' (expected decay or layer1)", name));
}

std::span<const BuiltinName> all_builtins() { return kBuiltins; }

Problem::Problem(std::string name, double epsilon, double x0, double y0,
                 double domain_end, Rhs rhs, std::optional<LinearForm> linear,
                 Function exact)
    : name_(std::move(name)),
      epsilon_(epsilon),
      x0_(x0),
      y0_(y0),
      domain_end_(domain_end),
      rhs_(std::move(rhs)),
      linear_(std::move(linear)),
      exact_(std::move(exact)) {
  check_epsilon(epsilon_);
  if (!(domain_end_ > x0_)) {
    throw DomainError(
        fmt::format("domain end {} must exceed x0 {}", domain_end_, x0_));
  }
  if (!rhs_) {
    throw DomainError("problem needs a right-hand side");
  }
  if (linear_ && (!linear_->p || !linear_->q)) {
    throw DomainError("linear form needs both p and q");
  }
  if (exact_ && std::abs(exact_(x0_) - y0_) > kInitialTol) {
    throw DomainError(fmt::format(
        "exact solution gives {} at x0 but y0 is {}", exact_(x0_), y0_));
  }
}

Problem Problem::linear(std::string name, double epsilon, double x0, double y0,
                        double domain_end, Function p, Function q,
                        Function exact) {
  auto rhs = [p, q](double x, double y) { return p(x) * y + q(x); };
  return Problem(std::move(name), epsilon, x0, y0, domain_end, std::move(rhs),
                 LinearForm{std::move(p), std::move(q)}, std::move(exact));
}

void Problem::check_point(double x) const {
  if (!(x >= x0_ - kDomainTol && x <= domain_end_ + kDomainTol)) {
    throw DomainError(fmt::format("x = {} outside problem domain [{}, {}]", x,
                                  x0_, domain_end_));
  }
}

double Problem::rhs(double x, double y) const {
  check_point(x);
  const double f = rhs_(x, y);
  if (!std::isfinite(f)) {
    throw EvaluationError(
        fmt::format("{}: f({}, {}) is not finite", name_, x, y));
  }
  return f;
}

LinearCoefficients Problem::linear_coeffs(double x) const {
  if (!linear_) {
    throw UnsupportedError(fmt::format("{}: problem has no linear form", name_));
  }
  check_point(x);
  return {linear_->p(x), linear_->q(x)};
}

double Problem::exact(double x) const {
  if (!exact_) {
    throw UnsupportedError(fmt::format("{}: no exact solution attached", name_));
  }
  check_point(x);
  return exact_(x);
}

Problem make_builtin(BuiltinName name, double epsilon) {
  check_epsilon(epsilon);
  switch (name) {
    case BuiltinName::decay:
      return make_decay(epsilon);
    case BuiltinName::layer1:
      return make_layer1(epsilon);
  }
  throw LookupError("unknown builtin problem");
}

}  // namespace shishkin
