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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shishkin/errors.hpp"
#include "shishkin/problem.hpp"

namespace shishkin {
namespace {

TEST(Builtins, RhsExamples) {
  EXPECT_EQ(make_builtin(BuiltinName::decay, 1.0).rhs(0.3, 2.0), -2.0);
  EXPECT_EQ(make_builtin(BuiltinName::decay, 0.25).rhs(0.0, 1.0), -4.0);
  EXPECT_EQ(make_builtin(BuiltinName::layer1, 1.0).rhs(0.0, 0.0), 2.0);
}

TEST(Builtins, LinearCoefficientExamples) {
  const auto d = make_builtin(BuiltinName::decay, 0.25).linear_coeffs(0.7);
  EXPECT_EQ(d.p, -4.0);
  EXPECT_EQ(d.q, 0.0);
  const auto l = make_builtin(BuiltinName::layer1, 1.0).linear_coeffs(0.0);
  EXPECT_EQ(l.p, 0.0);
  EXPECT_EQ(l.q, 2.0);
}

TEST(Builtins, ExactExamples) {
  EXPECT_EQ(make_builtin(BuiltinName::decay, 0.125).exact(0.0), 1.0);
  EXPECT_NEAR(make_builtin(BuiltinName::decay, 0.5).exact(0.5), 0.3678794, 5e-8);
  EXPECT_NEAR(make_builtin(BuiltinName::layer1, std::exp2(-30)).exact(1.0), 2.0, 1e-15);
  EXPECT_EQ(make_builtin(BuiltinName::layer1, 0.1).exact(0.0), 0.0);
}

TEST(Builtins, Metadata) {
  const Problem p = make_builtin(BuiltinName::layer1, 0.5);
  EXPECT_EQ(p.name(), "layer1");
  EXPECT_EQ(p.epsilon(), 0.5);
  EXPECT_EQ(p.x0(), 0.0);
  EXPECT_EQ(p.y0(), 0.0);
  EXPECT_EQ(p.domain_end(), 1.0);
  EXPECT_TRUE(p.has_linear_form());
  EXPECT_TRUE(p.has_exact());
  const Problem d = make_builtin(BuiltinName::decay, 0.5);
  EXPECT_EQ(d.y0(), 1.0);
}

TEST(Builtins, NameLookup) {
  for (BuiltinName name : all_builtins()) {
    EXPECT_EQ(builtin_from_string(to_string(name)), name);
  }
  EXPECT_EQ(all_builtins().size(), 2u);
  EXPECT_THROW(builtin_from_string("layer2"), LookupError);
  EXPECT_THROW(builtin_from_string(""), LookupError);
}

TEST(Builtins, EpsilonRange) {
  for (BuiltinName name : all_builtins()) {
    EXPECT_THROW(make_builtin(name, 0.0), DomainError);
    EXPECT_THROW(make_builtin(name, -0.5), DomainError);
    EXPECT_THROW(make_builtin(name, 1.0000001), DomainError);
    EXPECT_THROW(make_builtin(name, NAN), DomainError);
    EXPECT_NO_THROW(make_builtin(name, 1.0));
    EXPECT_NO_THROW(make_builtin(name, 1e-300));
  }
}

// The exact solution satisfies the ODE: a centred difference of y matches f(x, y(x)).
TEST(Builtins, ExactSolvesEquation) {
  for (BuiltinName name : all_builtins()) {
    for (double eps : {1.0, 0.25, 0.0625}) {
      const Problem p = make_builtin(name, eps);
      for (double x = 0.05; x < 0.95; x += 0.1) {
        const double h = 1e-5 * eps;
        const double deriv = (p.exact(x + h) - p.exact(x - h)) / (2.0 * h);
        const double f = p.rhs(x, p.exact(x));
        EXPECT_NEAR(deriv, f, 1e-5 * (1.0 + std::abs(f))) << to_string(name) << " x=" << x;
      }
    }
  }
}

TEST(Builtins, RhsMatchesIndependentFormula) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-3.0, 3.0), ue(-12.0, 0.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double eps = std::exp2(ue(rng));
    const double x = ux(rng);
    const double y = uy(rng);
    EXPECT_EQ(make_builtin(BuiltinName::layer1, eps).rhs(x, y), oracle::layer1_rhs(eps, x, y));
    EXPECT_EQ(make_builtin(BuiltinName::decay, eps).rhs(x, y), oracle::decay_rhs(eps, x, y));
  }
}

TEST(Builtins, LinearFormConsistent) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-3.0, 3.0), ue(-12.0, 0.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double eps = std::exp2(ue(rng));
    const double x = ux(rng);
    const double y = uy(rng);
    for (BuiltinName name : all_builtins()) {
      const Problem p = make_builtin(name, eps);
      const auto [pc, qc] = p.linear_coeffs(x);
      const double f = p.rhs(x, y);
      EXPECT_NEAR(pc * y + qc, f, 1e-13 * (std::abs(pc * y) + std::abs(qc) + 1.0));
    }
  }
}

TEST(ProblemDomain, RejectsPointsOutside) {
  const Problem p = make_builtin(BuiltinName::layer1, 0.5);
  EXPECT_NO_THROW(p.rhs(-5e-13, 0.0));
  EXPECT_NO_THROW(p.rhs(1.0 + 5e-13, 0.0));
  EXPECT_THROW(p.rhs(-1e-9, 0.0), DomainError);
  EXPECT_THROW(p.rhs(1.001, 0.0), DomainError);
  EXPECT_THROW(p.exact(1.5), DomainError);
  EXPECT_THROW(p.linear_coeffs(-0.5), DomainError);
}

TEST(ProblemEvaluation, NonFiniteRhs) {
  const Problem p = make_builtin(BuiltinName::decay, 1.0);
  EXPECT_THROW(p.rhs(0.5, INFINITY), EvaluationError);
  EXPECT_THROW(p.rhs(0.5, NAN), EvaluationError);
  const Problem q("blowup", 1.0, 0.0, 1.0, 1.0, [](double, double y) { return y / 0.0; });
  EXPECT_THROW(q.rhs(0.5, 1.0), EvaluationError);
}

TEST(ProblemCapabilities, MissingPieces) {
  const Problem p("plain", 1.0, 0.0, 1.0, 2.0, [](double, double y) { return y * y; });
  EXPECT_FALSE(p.has_linear_form());
  EXPECT_FALSE(p.has_exact());
  EXPECT_THROW(p.linear_coeffs(0.5), UnsupportedError);
  EXPECT_THROW(p.exact(0.5), UnsupportedError);
  EXPECT_EQ(p.rhs(1.5, 3.0), 9.0);
}

TEST(ProblemConstruction, Invariants) {
  auto f = [](double, double y) { return -y; };
  EXPECT_THROW(Problem("x", 0.0, 0.0, 1.0, 1.0, f), DomainError);
  EXPECT_THROW(Problem("x", 1.0, 1.0, 1.0, 1.0, f), DomainError);
  EXPECT_THROW(Problem("x", 1.0, 0.0, 1.0, 1.0, nullptr), DomainError);
  EXPECT_THROW(Problem("x", 1.0, 0.0, 1.0, 1.0, f, std::nullopt,
                       [](double) { return 2.0; }),
               DomainError);
  EXPECT_THROW(Problem("x", 1.0, 0.0, 1.0, 1.0, f,
                       Problem::LinearForm{[](double) { return -1.0; }, nullptr}),
               DomainError);
}

TEST(ProblemConstruction, LinearFactory) {
  const Problem p = Problem::linear(
      "affine", 1.0, 0.0, 1.0, 1.0, [](double) { return -1.0; },
      [](double) { return 1.0; }, [](double) { return 1.0; });
  EXPECT_TRUE(p.has_linear_form());
  EXPECT_EQ(p.rhs(0.3, 1.0), 0.0);
  EXPECT_EQ(p.rhs(0.3, 3.0), -2.0);
}

}  // namespace
}  // namespace shishkin
