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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace shishkin {

enum class BuiltinName {
  decay,   ///< eps y' = -y, y(0) = 1, exact e^{-x/eps}
  layer1,  ///< eps y' = -x y + eps + e^{-x/eps} + x (x - e^{-x/eps} + 1), y(0) = 0
};

std::string_view to_string(BuiltinName name);

/// Throws LookupError for anything but "decay" and "layer1".
BuiltinName builtin_from_string(std::string_view name);

std::span<const BuiltinName> all_builtins();

struct LinearCoefficients {
  double p;
  double q;
};

/// Scalar initial-value problem y' = f(x, y), y(x0) = y0 on [x0, a].
///
/// f is stored already divided by epsilon. epsilon is kept for mesh
/// construction and reporting only.
class Problem {
 public:
  using Rhs = std::function<double(double, double)>;
  using Function = std::function<double(double)>;

  /// y' = p(x) y + q(x).
  struct LinearForm {
    Function p;
    Function q;
  };

  /// Throws DomainError if epsilon is outside (0, 1], the domain is empty,
  /// rhs is empty, or exact(x0) differs from y0 by more than 1e-12.
  Problem(std::string name, double epsilon, double x0, double y0,
          double domain_end, Rhs rhs,
          std::optional<LinearForm> linear = std::nullopt,
          Function exact = nullptr);

  /// Builds rhs(x, y) = p(x) y + q(x) from the linear form.
  static Problem linear(std::string name, double epsilon, double x0, double y0,
                        double domain_end, Function p, Function q,
                        Function exact = nullptr);

  const std::string& name() const noexcept { return name_; }
  double epsilon() const noexcept { return epsilon_; }
  double x0() const noexcept { return x0_; }
  double y0() const noexcept { return y0_; }
  double domain_end() const noexcept { return domain_end_; }
  bool has_linear_form() const noexcept { return linear_.has_value(); }
  bool has_exact() const noexcept { return static_cast<bool>(exact_); }

  /// f(x, y). Throws DomainError when x leaves [x0, a] by more than 1e-12 and
  /// EvaluationError on a non-finite result.
  double rhs(double x, double y) const;

  /// (p(x), q(x)); throws UnsupportedError without a linear form.
  LinearCoefficients linear_coeffs(double x) const;

  /// y(x, eps); throws UnsupportedError without an exact solution.
  double exact(double x) const;

 private:
  void check_point(double x) const;

  std::string name_;
  double epsilon_;
  double x0_;
  double y0_;
  double domain_end_;
  Rhs rhs_;
  std::optional<LinearForm> linear_;
  Function exact_;
};

/// The two closed-form test problems on [0, 1].
Problem make_builtin(BuiltinName name, double epsilon);

}  // namespace shishkin
