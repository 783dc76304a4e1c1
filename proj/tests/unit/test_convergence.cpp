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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shishkin/convergence.hpp"
#include "shishkin/errors.hpp"

namespace shishkin {
namespace {

// Frozen output of an independent double-precision reimplementation (Heun,
// layer1, Shishkin mesh n = 2, b = 1, alpha = 1/2, sigma capped at 1/2).
constexpr double kHeunEps2K10 = 4.9670631441234292e-07;
constexpr double kHeunEps2K11 = 1.2431912521648769e-07;

Trajectory synthetic(std::vector<double> nodes, std::vector<double> values) {
  return Trajectory{Mesh::from_nodes(std::move(nodes)), std::move(values), Scheme::heun,
                    "synthetic", 1.0};
}

Problem linear_exact(double slope) {
  return Problem::linear(
      "line", 1.0, 0.0, 0.0, 1.0, [](double) { return 0.0; },
      [slope](double) { return slope; }, [slope](double x) { return slope * x; });
}

TEST(MaxError, ExactTrajectoryIsZero) {
  const Problem layer = make_builtin(BuiltinName::layer1, 0.1);
  const Mesh mesh = build_uniform_mesh(8);
  std::vector<double> values;
  for (double x : mesh.nodes()) values.push_back(layer.exact(x));
  EXPECT_EQ(max_error(Trajectory{mesh, values, Scheme::heun, "layer1", 0.1}, layer), 0.0);
}

TEST(MaxError, TwoNodeSynthetic) {
  EXPECT_NEAR(max_error(synthetic({0.0, 1.0}, {0.0, 0.5}), linear_exact(0.4)), 0.1, 1e-15);
}

TEST(MaxError, Errors) {
  const Problem no_exact("plain", 1.0, 0.0, 0.0, 1.0, [](double, double) { return 0.0; });
  EXPECT_THROW(max_error(synthetic({0.0, 1.0}, {0.0, 0.0}), no_exact), UnsupportedError);
  EXPECT_THROW(max_error(synthetic({0.0, 1.0}, {0.0}), linear_exact(1.0)), DomainError);
}

TEST(MaxError, HeunLayerMatchesFrozenOracle) {
  const double eps = 0.25;
  const Problem layer = make_builtin(BuiltinName::layer1, eps);
  for (auto [n, frozen] : {std::pair{1024u, kHeunEps2K10}, std::pair{2048u, kHeunEps2K11}}) {
    const Mesh mesh = make_mesh({}, n, eps);
    const double e = max_error(integrate(Scheme::heun, layer, mesh), layer);
    EXPECT_LE(oracle::rel_diff(e, frozen), 1e-12) << n;
  }
}

TEST(MaxError, HeunMatchesInlineOracleAcrossEpsilon) {
  for (int e = 2; e <= 10; e += 2) {
    const double eps = std::exp2(-e);
    const Problem layer = make_builtin(BuiltinName::layer1, eps);
    for (std::size_t n : {64u, 1024u}) {
      const double ours = max_error(integrate(Scheme::heun, layer, make_mesh({}, n, eps)), layer);
      const double theirs = oracle::heun_layer1_error(oracle::shishkin_nodes(n, eps), eps);
      EXPECT_LE(oracle::rel_diff(ours, theirs), 1e-9) << "eps=2^-" << e << " N=" << n;
    }
  }
}

TEST(ShishkinOrder, Examples) {
  EXPECT_NEAR(shishkin_order(1.49e-06, 4.51e-07, 10), 2.00, 0.005);
  EXPECT_EQ(shishkin_order(3e-5, 3e-5, 7), 0.0);
  EXPECT_NEAR(shishkin_order(8e-3, 1e-3, 3), std::log(8.0) / std::log(1.5), 1e-14);
  EXPECT_NEAR(shishkin_order(8e-3, 1e-3, 3), 5.12853387405436433, 1e-14);
}

TEST(ShishkinOrder, ScaleInvariant) {
  for (double c : {1e-6, 0.5, 3.0, 1e8}) {
    for (int k : {2, 5, 12, 20}) {
      EXPECT_NEAR(shishkin_order(c * 2.3e-4, c * 5.1e-5, k), shishkin_order(2.3e-4, 5.1e-5, k),
                  1e-12);
    }
  }
}

TEST(ShishkinOrder, Errors) {
  EXPECT_THROW(shishkin_order(1e-3, 1e-4, 1), DomainError);
  EXPECT_THROW(shishkin_order(1e-3, 1e-4, 0), DomainError);
  EXPECT_THROW(shishkin_order(0.0, 1e-4, 5), DomainError);
  EXPECT_THROW(shishkin_order(1e-3, -1e-4, 5), DomainError);
  EXPECT_THROW(shishkin_order(NAN, 1e-4, 5), DomainError);
}

TEST(MakeMesh, FollowsSettings) {
  MeshSettings uniform;
  uniform.kind = MeshKind::uniform;
  EXPECT_EQ(make_mesh(uniform, 8, 1e-3).kind(), MeshKind::uniform);
  MeshSettings custom{MeshKind::shishkin, 1, 2.0, 0.25};
  const Mesh m = make_mesh(custom, 16, 1e-3);
  EXPECT_DOUBLE_EQ(*m.sigma(), 0.5 * 1e-3 * std::log(16.0));
  EXPECT_EQ(m.node(4), *m.sigma());
}

SweepSpec heun_spec(std::vector<double> eps, int k_min, int k_max) {
  SweepSpec spec;
  spec.scheme = Scheme::heun;
  spec.problem = BuiltinName::layer1;
  spec.epsilons = std::move(eps);
  spec.k_min = k_min;
  spec.k_max = k_max;
  return spec;
}

TEST(RunSweep, LayoutAndFrozenValues) {
  const ConvergenceTable table = run_sweep(heun_spec({0.25}, 10, 11));
  EXPECT_EQ(table.k_range(), (std::vector<int>{10, 11}));
  EXPECT_EQ(table.scheme(), Scheme::heun);
  EXPECT_EQ(table.problem(), BuiltinName::layer1);
  EXPECT_EQ(table.mesh_kind(), MeshKind::shishkin);
  EXPECT_LE(oracle::rel_diff(table.at(0, 10).error, kHeunEps2K10), 1e-12);
  EXPECT_LE(oracle::rel_diff(table.at(0, 11).error, kHeunEps2K11), 1e-12);
  ASSERT_TRUE(table.at(0, 10).order.has_value());
  EXPECT_NEAR(*table.at(0, 10).order, shishkin_order(kHeunEps2K10, kHeunEps2K11, 10), 1e-10);
  EXPECT_FALSE(table.at(0, 11).order.has_value());
  EXPECT_THROW(table.at(1, 10), std::out_of_range);
  EXPECT_THROW(table.at(0, 12), std::out_of_range);
}

TEST(RunSweep, ThreadCountDoesNotChangeResults) {
  SweepSpec spec = heun_spec({0.25, 1.0 / 64.0, 1.0 / 1024.0}, 6, 10);
  spec.threads = 1;
  const ConvergenceTable serial = run_sweep(spec);
  spec.threads = 7;
  const ConvergenceTable parallel = run_sweep(spec);
  for (std::size_t e = 0; e < 3; ++e) {
    for (int k : serial.k_range()) {
      EXPECT_EQ(serial.at(e, k).error, parallel.at(e, k).error);
      EXPECT_EQ(serial.at(e, k).order, parallel.at(e, k).order);
    }
  }
}

TEST(RunSweep, HeunSecondOrderOnResolvedLayer) {
  // ord settles at 2 once sigma < 1/2.
  const ConvergenceTable table = run_sweep(heun_spec({1.0 / 64.0}, 11, 15));
  for (int k = 11; k <= 14; ++k) {
    EXPECT_GE(*table.at(0, k).order, 1.9) << k;
    EXPECT_LE(*table.at(0, k).order, 2.1) << k;
  }
}

TEST(RunSweep, GaussErrorDecreasesUntilFloor) {
  SweepSpec spec = heun_spec({0.25, 1.0 / 16.0, 1.0 / 64.0, 1.0 / 256.0, 1.0 / 1024.0}, 8, 14);
  spec.scheme = Scheme::gauss2;
  const ConvergenceTable table = run_sweep(spec);
  for (std::size_t e = 0; e < 5; ++e) {
    for (int k = 8; k < 14; ++k) {
      if (table.at(e, k).error <= 1e-12) break;
      EXPECT_LT(table.at(e, k + 1).error, table.at(e, k).error) << "eps index " << e << " k=" << k;
    }
  }
}

TEST(RunSweep, PreconditionErrors) {
  EXPECT_THROW(run_sweep(heun_spec({}, 10, 11)), DomainError);
  EXPECT_THROW(run_sweep(heun_spec({0.25}, 1, 4)), DomainError);
  EXPECT_THROW(run_sweep(heun_spec({0.25}, 5, 5)), DomainError);
  EXPECT_THROW(run_sweep(heun_spec({0.25}, 6, 5)), DomainError);
  EXPECT_THROW(run_sweep(heun_spec({0.25}, 10, kMaxSweepExponent + 1)), DomainError);
  EXPECT_THROW(run_sweep(heun_spec({0.0}, 4, 5)), DomainError);
  EXPECT_THROW(run_sweep(heun_spec({2.0}, 4, 5)), DomainError);
}

TEST(RunSweep, CellFailureNamesCell) {
  // alpha = 1/3 is only admissible when 3 divides N, which no power of two does.
  SweepSpec spec = heun_spec({0.5, 0.25}, 4, 6);
  spec.mesh.split = 1.0 / 3.0;
  try {
    run_sweep(spec);
    FAIL() << "expected SweepError";
  } catch (const SweepError& e) {
    EXPECT_EQ(e.epsilon(), 0.5);
    EXPECT_EQ(e.k(), 4);
  }
}

TEST(RunSweep, GaussNeedsLinearProblemAlwaysSatisfiedByBuiltins) {
  SweepSpec spec = heun_spec({0.5}, 4, 5);
  spec.scheme = Scheme::gauss2;
  spec.problem = BuiltinName::decay;
  EXPECT_NO_THROW(run_sweep(spec));
}

TEST(ConvergenceTableLayout, RejectsMismatchedEntries) {
  EXPECT_THROW(ConvergenceTable(Scheme::heun, BuiltinName::layer1, MeshKind::uniform, {0.5}, 4,
                                5, std::vector<TableEntry>(3)),
               DomainError);
}

TEST(OscillationCount, Examples) {
  const std::vector<double> monotone{0.0, 0.1, 0.3, 0.7, 1.0};
  EXPECT_EQ(oscillation_count(monotone), 0u);
  const std::vector<double> alternating{1.0, -0.5, 0.25, -0.125};
  EXPECT_EQ(oscillation_count(alternating), 2u);
}

TEST(OscillationCount, DeadBandAndShortInput) {
  const std::vector<double> jitter{1.0, 1.0 + 5e-15, 1.0, 1.0 + 5e-15, 1.0};
  EXPECT_EQ(oscillation_count(jitter), 0u);
  // Flat stretches are skipped, not treated as a sign.
  const std::vector<double> plateau{0.0, 1.0, 1.0, 1.0, 2.0, 1.0};
  EXPECT_EQ(oscillation_count(plateau), 1u);
  EXPECT_EQ(oscillation_count(std::vector<double>{}), 0u);
  EXPECT_EQ(oscillation_count(std::vector<double>{3.0}), 0u);
  EXPECT_EQ(oscillation_count(std::vector<double>{3.0, -1.0}), 0u);
}

TEST(OscillationCount, GaussUniformMeshIsMonotone) {
  const double eps = std::exp2(-7.225);
  const Problem layer = make_builtin(BuiltinName::layer1, eps);
  const Trajectory t = integrate(Scheme::gauss2, layer, build_uniform_mesh(32));
  EXPECT_EQ(oscillation_count(t), 0u);
}

}  // namespace
}  // namespace shishkin
