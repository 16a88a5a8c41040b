// Copyright 2026 The Linsan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linsan/lp_solver.h"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "linsan/error.h"
#include "testing/test_util.h"

namespace linsan {
namespace {

using testing::VertexEnumerationMin;

TEST(LpSolverTest, ForcedObjective) {
  LinearProgram lp;
  lp.objective = {1.0, 1.0};
  lp.eq_matrix = Matrix::FromRows({{1.0, 1.0}});
  lp.eq_rhs = {1.0};
  const LpSolution solution = Solve(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_NEAR(solution.objective_value, 1.0, 1e-12);
  EXPECT_NEAR(solution.values[0] + solution.values[1], 1.0, 1e-12);
  EXPECT_GE(solution.values[0], -1e-12);
  EXPECT_GE(solution.values[1], -1e-12);
}

TEST(LpSolverTest, InfeasibleContradiction) {
  LinearProgram lp;
  lp.objective = {1.0};
  lp.eq_matrix = Matrix::FromRows({{1.0}, {1.0}});
  lp.eq_rhs = {1.0, 2.0};
  EXPECT_EQ(Solve(lp).status, LpStatus::kInfeasible);
}

TEST(LpSolverTest, Unbounded) {
  LinearProgram lp;
  lp.objective = {-1.0, 0.0};
  lp.eq_matrix = Matrix::FromRows({{1.0, -1.0}});
  lp.eq_rhs = {0.0};
  EXPECT_EQ(Solve(lp).status, LpStatus::kUnbounded);
}

// Transfer system for the reference dataset, secret 1, level 0.5: supplies
// 0.14 and 0.035, demands 0.105 and 0.07, every reroute costing 1. Any
// feasible routing ships the whole 0.175.
TEST(LpSolverTest, DegenerateUnitCostTransportation) {
  LinearProgram lp;
  lp.objective = {1.0, 1.0, 1.0, 1.0};
  lp.eq_matrix = Matrix::FromRows({
      {1.0, 1.0, 0.0, 0.0},  // supply c
      {0.0, 0.0, 1.0, 1.0},  // supply d
      {1.0, 0.0, 1.0, 0.0},  // demand a
      {0.0, 1.0, 0.0, 1.0},  // demand b
  });
  lp.eq_rhs = {0.14, 0.035, 0.105, 0.07};
  const LpSolution solution = Solve(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_NEAR(solution.objective_value, 0.175, 1e-12);
}

TEST(LpSolverTest, UpperBoundsRespected) {
  LinearProgram lp;
  lp.objective = {-1.0, 0.0};
  lp.eq_matrix = Matrix::FromRows({{1.0, 1.0}});
  lp.eq_rhs = {10.0};
  lp.upper = {3.0, std::numeric_limits<double>::infinity()};
  const LpSolution solution = Solve(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_NEAR(solution.values[0], 3.0, 1e-12);
  EXPECT_NEAR(solution.objective_value, -3.0, 1e-12);
}

TEST(LpSolverTest, LowerBoundsShifted) {
  LinearProgram lp;
  lp.objective = {1.0, 1.0};
  lp.eq_matrix = Matrix::FromRows({{1.0, 1.0}});
  lp.eq_rhs = {5.0};
  lp.lower = {2.0, 0.0};
  const LpSolution solution = Solve(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);
  EXPECT_GE(solution.values[0], 2.0 - 1e-12);
  EXPECT_NEAR(solution.objective_value, 5.0, 1e-12);
}

TEST(LpSolverTest, CrossedBoundsInfeasible) {
  LinearProgram lp;
  lp.objective = {1.0};
  lp.eq_matrix = Matrix(0, 1);
  lp.eq_rhs = {};
  lp.lower = {2.0};
  lp.upper = {1.0};
  EXPECT_EQ(Solve(lp).status, LpStatus::kInfeasible);
}

TEST(LpSolverTest, DimensionMismatchThrows) {
  LinearProgram lp;
  lp.objective = {1.0, 2.0};
  lp.eq_matrix = Matrix::FromRows({{1.0}});
  lp.eq_rhs = {1.0};
  try {
    Solve(lp);
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(LpSolverTest, MatchesVertexEnumerationOnRandomLps) {
  std::mt19937_64 rng(20250101);
  std::uniform_int_distribution<std::size_t> n_dist(6, 12);
  std::uniform_int_distribution<std::size_t> m_dist(2, 5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> cost(0.0, 1.0);
  std::uniform_real_distribution<double> point(0.0, 2.0);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = n_dist(rng);
    const std::size_t m = m_dist(rng);
    LinearProgram lp;
    lp.objective.resize(n);
    // Nonnegative costs keep the problem bounded below over x >= 0.
    for (double& c : lp.objective) c = cost(rng);
    lp.eq_matrix = Matrix(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) lp.eq_matrix(r, c) = coef(rng);
    }
    // Feasibility by construction: rhs = A x0 for a nonnegative x0.
    std::vector<double> x0(n);
    for (double& v : x0) v = point(rng);
    lp.eq_rhs.assign(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        lp.eq_rhs[r] += lp.eq_matrix(r, c) * x0[c];
      }
    }
    const LpSolution solution = Solve(lp);
    ASSERT_EQ(solution.status, LpStatus::kOptimal);
    const auto oracle =
        VertexEnumerationMin(lp.objective, lp.eq_matrix, lp.eq_rhs);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_NEAR(solution.objective_value, *oracle, 1e-7);

    // Residuals and bounds per the solution contract.
    for (std::size_t r = 0; r < m; ++r) {
      double lhs = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        lhs += lp.eq_matrix(r, c) * solution.values[c];
      }
      EXPECT_NEAR(lhs, lp.eq_rhs[r], 1e-9);
    }
    for (double v : solution.values) EXPECT_GE(v, -1e-12);
    ++solved;
  }
  EXPECT_EQ(solved, 40);
}

TEST(LpSolverTest, DeterministicAcrossRuns) {
  std::mt19937_64 rng(8);
  LinearProgram lp;
  const std::size_t n = 10, m = 4;
  lp.objective.resize(n);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (double& c : lp.objective) c = std::abs(coef(rng));
  lp.eq_matrix = Matrix(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) lp.eq_matrix(r, c) = coef(rng);
  }
  std::vector<double> x0(n, 0.5);
  lp.eq_rhs.assign(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      lp.eq_rhs[r] += lp.eq_matrix(r, c) * x0[c];
    }
  }
  const LpSolution first = Solve(lp);
  const LpSolution second = Solve(lp);
  ASSERT_EQ(first.status, LpStatus::kOptimal);
  ASSERT_EQ(second.status, LpStatus::kOptimal);
  for (std::size_t c = 0; c < n; ++c) {
    EXPECT_EQ(first.values[c], second.values[c]);
  }
}

// A dual-feasible vector certifies a lower bound on the optimum.
TEST(LpSolverTest, WeakDualitySpotCheck) {
  std::mt19937_64 rng(246);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const std::size_t n = 8, m = 3;
  LinearProgram lp;
  lp.objective.resize(n);
  for (double& c : lp.objective) c = 0.05 + std::abs(coef(rng));
  lp.eq_matrix = Matrix(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) lp.eq_matrix(r, c) = coef(rng);
  }
  std::vector<double> x0(n, 1.0);
  lp.eq_rhs.assign(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      lp.eq_rhs[r] += lp.eq_matrix(r, c) * x0[c];
    }
  }
  const LpSolution solution = Solve(lp);
  ASSERT_EQ(solution.status, LpStatus::kOptimal);

  // Scale a random y until A^T y <= c holds componentwise.
  std::vector<double> y(m);
  for (double& v : y) v = coef(rng);
  double scale = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    double aty = 0.0;
    for (std::size_t r = 0; r < m; ++r) aty += lp.eq_matrix(r, c) * y[r];
    if (aty > 0.0) scale = std::min(scale, lp.objective[c] / aty);
  }
  double bound = 0.0;
  for (std::size_t r = 0; r < m; ++r) bound += scale * y[r] * lp.eq_rhs[r];
  EXPECT_GE(solution.objective_value, bound - 1e-9);
}

}  // namespace
}  // namespace linsan
