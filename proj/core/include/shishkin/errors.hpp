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
#include <stdexcept>
#include <string>

namespace shishkin {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (bad mesh
/// parameters, epsilon out of (0, 1], k < 2 in the order formula, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A right-hand side, stage or exact solution produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// The problem or tableau lacks a capability the operation needs
/// (no linear form, no exact solution, implicit tableau in the explicit driver).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Unknown scheme or problem name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// The linear Gauss step hit a (near) zero denominator.
class SingularStepError : public Error {
 public:
  SingularStepError(const std::string& what, double x, double h)
      : Error(what), x_(x), h_(h) {}

  double x() const noexcept { return x_; }
  double h() const noexcept { return h_; }

 private:
  double x_;
  double h_;
};

/// A step failed while integrating over a mesh; `step()` is the interval index i
/// of the failing update x_i -> x_{i+1}.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// A sweep cell failed; carries the (epsilon, k) coordinates of the cell.
class SweepError : public Error {
 public:
  SweepError(const std::string& what, double epsilon, int k)
      : Error(what), epsilon_(epsilon), k_(k) {}

  double epsilon() const noexcept { return epsilon_; }
  int k() const noexcept { return k_; }

 private:
  double epsilon_;
  int k_;
};

}  // namespace shishkin
