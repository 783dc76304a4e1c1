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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shishkin {

/// Named Runge-Kutta schemes.
enum class Scheme {
  heun,          ///< 2-stage, b = (1/2, 1/2), c2 = a21 = 1
  rk2_ralston,   ///< 2-stage, b = (1/4, 3/4), c2 = a21 = 2/3
  rk2_midpoint,  ///< 2-stage, b = (0, 1),     c2 = a21 = 1/2
  rk3_a,         ///< 3-stage, b = (2, 3, 4)/9, c = (0, 1/2, 3/4)
  rk3_kutta,     ///< 3-stage, b = (1, 4, 1)/6, c = (0, 1/2, 1)
  gauss2,        ///< 2-stage implicit Gauss-Legendre, gamma = sqrt(3)/6
};

std::string_view to_string(Scheme scheme);

/// Throws LookupError on unknown names.
Scheme scheme_from_string(std::string_view name);

std::span<const Scheme> all_schemes();

/// Highest order whose conditions the scheme is expected to satisfy among the
/// checked orders {1, 2, 3}.
int nominal_order(Scheme scheme);

/// Coefficients (A, b, c) of an s-stage Runge-Kutta method. A is stored
/// row-major; indices are zero-based.
class ButcherTableau {
 public:
  static constexpr std::size_t kMaxStages = 8;

  /// Throws DomainError on mismatched sizes, s = 0 or s > kMaxStages.
  /// Consistency (sum b = 1, c = row sums of A) is not enforced here; see
  /// verify_order_conditions() and row_sum_defect().
  ButcherTableau(std::size_t stages, std::vector<double> a,
                 std::vector<double> b, std::vector<double> c);

  std::size_t stages() const noexcept { return stages_; }
  double a(std::size_t j, std::size_t q) const { return a_[j * stages_ + q]; }
  double b(std::size_t j) const { return b_[j]; }
  double c(std::size_t j) const { return c_[j]; }
  std::span<const double> weights() const noexcept { return b_; }
  std::span<const double> nodes() const noexcept { return c_; }

  /// True iff A is strictly lower triangular.
  bool is_explicit() const noexcept { return explicit_; }

  /// max_j |c_j - sum_q a_{j,q}|.
  double row_sum_defect() const;

 private:
  std::size_t stages_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
  bool explicit_;
};

const ButcherTableau& named_tableau(Scheme scheme);
const ButcherTableau& named_tableau(std::string_view name);

struct OrderCondition {
  int order;
  std::string label;
  double value;
  double expected;
  double residual;
  bool passed;
};

struct OrderConditionReport {
  int target_order;
  double tolerance;
  std::vector<OrderCondition> conditions;

  bool passed() const;
  double max_residual() const;
};

/// Checks the classical order conditions up to `target_order` (1, 2 or 3):
///   order 1: sum b_j = 1
///   order 2: sum b_j c_j = 1/2
///   order 3: sum b_j c_j^2 = 1/3,  sum_j b_j sum_q a_{j,q} c_q = 1/6
/// Throws DomainError for targets outside {1, 2, 3}.
OrderConditionReport verify_order_conditions(const ButcherTableau& tableau,
                                             int target_order,
                                             double tolerance = 1e-14);

}  // namespace shishkin
