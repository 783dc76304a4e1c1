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

#include "shishkin/tableau.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "shishkin/errors.hpp"

namespace shishkin {

namespace {

constexpr std::array kSchemes{Scheme::heun,  Scheme::rk2_ralston,
                              Scheme::rk2_midpoint, Scheme::rk3_a,
                              Scheme::rk3_kutta, Scheme::gauss2};

ButcherTableau two_stage_explicit(double b1, double b2, double c2) {
  return ButcherTableau(2, {0.0, 0.0, c2, 0.0}, {b1, b2}, {0.0, c2});
}

ButcherTableau make_tableau(Scheme scheme) {
  switch (scheme) {
    case Scheme::heun:
      return two_stage_explicit(1.0 / 2.0, 1.0 / 2.0, 1.0);
    case Scheme::rk2_ralston:
      return two_stage_explicit(1.0 / 4.0, 3.0 / 4.0, 2.0 / 3.0);
    case Scheme::rk2_midpoint:
      return two_stage_explicit(0.0, 1.0, 1.0 / 2.0);
    case Scheme::rk3_a:
      return ButcherTableau(3,
                            {0.0, 0.0, 0.0,
                             1.0 / 2.0, 0.0, 0.0,
                             0.0, 3.0 / 4.0, 0.0},
                            {2.0 / 9.0, 3.0 / 9.0, 4.0 / 9.0},
                            {0.0, 1.0 / 2.0, 3.0 / 4.0});
    case Scheme::rk3_kutta:
      return ButcherTableau(3,
                            {0.0, 0.0, 0.0,
                             1.0 / 2.0, 0.0, 0.0,
                             -1.0, 2.0, 0.0},
                            {1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0},
                            {0.0, 1.0 / 2.0, 1.0});
    case Scheme::gauss2: {
      const double gamma = std::sqrt(3.0) / 6.0;
      return ButcherTableau(2,
                            {1.0 / 4.0, 1.0 / 4.0 - gamma,
                             1.0 / 4.0 + gamma, 1.0 / 4.0},
                            {1.0 / 2.0, 1.0 / 2.0},
                            {1.0 / 2.0 - gamma, 1.0 / 2.0 + gamma});
    }
  }
  throw LookupError("unknown scheme");
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::heun: return "heun";
    case Scheme::rk2_ralston: return "rk2_ralston";
    case Scheme::rk2_midpoint: return "rk2_midpoint";
    case Scheme::rk3_a: return "rk3_a";
    case Scheme::rk3_kutta: return "rk3_kutta";
    case Scheme::gauss2: return "gauss2";
  }
  return "unknown";
}

Scheme scheme_from_string(std::string_view name) {
  for (Scheme s : kSchemes) {
    if (to_string(s) == name) return s;
  }
  throw LookupError(fmt::format("unknown scheme '{}'", name));
}

std::span<const Scheme> all_schemes() { return kSchemes; }

int nominal_order(Scheme scheme) {
  switch (scheme) {
    case Scheme::heun:
    case Scheme::rk2_ralston:
    case Scheme::rk2_midpoint:
      return 2;
    case Scheme::rk3_a:
    case Scheme::rk3_kutta:
    case Scheme::gauss2:
      return 3;
  }
  return 0;
}

ButcherTableau::ButcherTableau(std::size_t stages, std::vector<double> a,
                               std::vector<double> b, std::vector<double> c)
    : stages_(stages), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (stages_ == 0 || stages_ > kMaxStages) {
    throw DomainError(fmt::format("stage count must lie in [1, {}], got {}",
                                  kMaxStages, stages_));
  }
  if (a_.size() != stages_ * stages_ || b_.size() != stages_ ||
      c_.size() != stages_) {
    throw DomainError(fmt::format(
        "tableau sizes inconsistent with s = {}: |A| = {}, |b| = {}, |c| = {}",
        stages_, a_.size(), b_.size(), c_.size()));
  }
  explicit_ = true;
  for (std::size_t j = 0; j < stages_; ++j) {
    for (std::size_t q = j; q < stages_; ++q) {
      if (a_[j * stages_ + q] != 0.0) explicit_ = false;
    }
  }
}

double ButcherTableau::row_sum_defect() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < stages_; ++j) {
    double row = 0.0;
    for (std::size_t q = 0; q < stages_; ++q) row += a(j, q);
    worst = std::max(worst, std::abs(c_[j] - row));
  }
  return worst;
}

const ButcherTableau& named_tableau(Scheme scheme) {
  static const std::array<ButcherTableau, kSchemes.size()> tableaux = [] {
    return std::array<ButcherTableau, kSchemes.size()>{
        make_tableau(kSchemes[0]), make_tableau(kSchemes[1]),
        make_tableau(kSchemes[2]), make_tableau(kSchemes[3]),
        make_tableau(kSchemes[4]), make_tableau(kSchemes[5])};
  }();
  const auto it = std::find(kSchemes.begin(), kSchemes.end(), scheme);
  if (it == kSchemes.end()) throw LookupError("unknown scheme");
  return tableaux[static_cast<std::size_t>(it - kSchemes.begin())];
}

const ButcherTableau& named_tableau(std::string_view name) {
  return named_tableau(scheme_from_string(name));
}

bool OrderConditionReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const OrderCondition& c) { return c.passed; });
}

double OrderConditionReport::max_residual() const {
  double worst = 0.0;
  for (const auto& c : conditions) worst = std::max(worst, c.residual);
  return worst;
}

OrderConditionReport verify_order_conditions(const ButcherTableau& tableau,
                                             int target_order,
                                             double tolerance) {
  if (target_order < 1 || target_order > 3) {
    throw DomainError(
        fmt::format("order conditions are checked for orders 1-3, got {}", target_order));
  }
  const std::size_t s = tableau.stages();
  OrderConditionReport report{target_order, tolerance, {}};
  auto add = [&](int order, std::string label, double value, double expected) {
    const double residual = std::abs(value - expected);
    report.conditions.push_back({order, std::move(label), value, expected,
                                 residual, residual <= tolerance});
  };

  double sum_b = 0.0;
  for (std::size_t j = 0; j < s; ++j) sum_b += tableau.b(j);
  add(1, "sum b_j = 1", sum_b, 1.0);
  if (target_order < 2) return report;

  double sum_bc = 0.0;
  for (std::size_t j = 0; j < s; ++j) sum_bc += tableau.b(j) * tableau.c(j);
  add(2, "sum b_j c_j = 1/2", sum_bc, 1.0 / 2.0);
  if (target_order < 3) return report;

  double sum_bcc = 0.0;
  double sum_bac = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    sum_bcc += tableau.b(j) * tableau.c(j) * tableau.c(j);
    double ac = 0.0;
    for (std::size_t q = 0; q < s; ++q) ac += tableau.a(j, q) * tableau.c(q);
    sum_bac += tableau.b(j) * ac;
  }
  add(3, "sum b_j c_j^2 = 1/3", sum_bcc, 1.0 / 3.0);
  add(3, "sum b_j a_jq c_q = 1/6", sum_bac, 1.0 / 6.0);
  return report;
}

}  // namespace shishkin
