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

#include "linsan/nonmarkov_mechanism.h"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "linsan/error.h"
#include "linsan/lp_solver.h"

namespace linsan {

namespace {

// Per-secret data for the surplus-to-deficit transfer. All masses carry
// the alpha factor already: surplus_mass[k] is how much probability the
// k-th surplus symbol must shed, deficit_mass[k] how much the k-th deficit
// symbol must absorb. The two totals agree because conditional deviations
// from the marginal sum to zero.
struct TransferPlan {
  std::vector<std::size_t> deficit;
  std::vector<std::size_t> surplus;
  std::vector<double> deficit_mass;
  std::vector<double> surplus_mass;
  double total_mass = 0.0;
};

TransferPlan PlanTransfer(const Matrix& cond, const Dist& p_x, std::size_t s,
                          double alpha) {
  TransferPlan plan;
  for (std::size_t x = 0; x < p_x.size(); ++x) {
    if (p_x[x] >= cond(s, x)) {
      plan.deficit.push_back(x);
      plan.deficit_mass.push_back(alpha * (p_x[x] - cond(s, x)));
    } else {
      plan.surplus.push_back(x);
      const double mass = alpha * (cond(s, x) - p_x[x]);
      plan.surplus_mass.push_back(mass);
      plan.total_mass += mass;
    }
  }
  return plan;
}

// Fills one slice's diagonal and zero pattern; the surplus-to-deficit
// block is left to the caller. Deficit rows become identity rows: their
// stay probability saturates at 1, and pushing a deficit symbol anywhere
// else would only deepen its shortfall.
Matrix SliceSkeleton(const Matrix& cond, const Dist& p_x, std::size_t s,
                     const TransferPlan& plan) {
  const std::size_t n = p_x.size();
  Matrix slice(n, n, 0.0);
  for (std::size_t x : plan.deficit) slice(x, x) = 1.0;
  for (std::size_t k = 0; k < plan.surplus.size(); ++k) {
    const std::size_t x = plan.surplus[k];
    // Equivalent to 1 - alpha * (1 - p_x(x) / cond(s, x)); written via the
    // shed mass so a slice row and its off-diagonal budget agree exactly.
    slice(x, x) = 1.0 - plan.surplus_mass[k] / cond(s, x);
  }
  return slice;
}

std::vector<Matrix> BuildSlices(
    const JointDistribution& joint, Alpha alpha,
    const std::function<void(std::size_t s, const TransferPlan&,
                             const Matrix& cond, Matrix& slice)>& fill_cross) {
  const Matrix cond = joint.ConditionalXGivenS();
  const Dist& p_x = joint.marginal_x();
  const double a = alpha.value();
  std::vector<Matrix> slices;
  slices.reserve(joint.s_alphabet().size());
  for (std::size_t s = 0; s < joint.s_alphabet().size(); ++s) {
    TransferPlan plan = PlanTransfer(cond, p_x, s, a);
    Matrix slice = SliceSkeleton(cond, p_x, s, plan);
    if (!plan.surplus.empty()) {
      fill_cross(s, plan, cond, slice);
    }
    slices.push_back(std::move(slice));
  }
  return slices;
}

}  // namespace

SupportPartition PartitionSupports(const JointDistribution& joint) {
  const Matrix cond = joint.ConditionalXGivenS();
  const Dist& p_x = joint.marginal_x();
  SupportPartition partition;
  partition.deficit.resize(joint.s_alphabet().size());
  partition.surplus.resize(joint.s_alphabet().size());
  for (std::size_t s = 0; s < cond.rows(); ++s) {
    for (std::size_t x = 0; x < cond.cols(); ++x) {
      if (p_x[x] >= cond(s, x)) {
        partition.deficit[s].push_back(x);
      } else {
        partition.surplus[s].push_back(x);
      }
    }
  }
  return partition;
}

Mechanism Mechanism::FromTensor(Alphabet s_alphabet, Alphabet x_alphabet,
                                std::vector<Matrix> slices) {
  if (slices.size() != s_alphabet.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one slice per secret symbol required");
  }
  const std::size_t n = x_alphabet.size();
  for (std::size_t s = 0; s < slices.size(); ++s) {
    Matrix& slice = slices[s];
    if (slice.rows() != n || slice.cols() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "slice for '" + s_alphabet.label(s) +
                      "' does not match the public alphabet");
    }
    for (std::size_t x = 0; x < n; ++x) {
      double row_sum = 0.0;
      for (std::size_t y = 0; y < n; ++y) {
        // LP completions can carry round-off slightly below zero.
        if (slice(x, y) < 0.0 && slice(x, y) >= -1e-9) slice(x, y) = 0.0;
        if (!(slice(x, y) >= 0.0)) {
          throw Error(ErrorCode::kNegativeEntry,
                      "mechanism entry (" + s_alphabet.label(s) + ", " +
                          x_alphabet.label(x) + ", " + x_alphabet.label(y) +
                          ") is negative");
        }
        row_sum += slice(x, y);
      }
      if (std::abs(row_sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::kRowNotStochastic,
                    "mechanism row (" + s_alphabet.label(s) + ", " +
                        x_alphabet.label(x) + ") sums to " +
                        std::to_string(row_sum));
      }
      for (std::size_t y = 0; y < n; ++y) slice(x, y) /= row_sum;
    }
  }
  return Mechanism(std::move(s_alphabet), std::move(x_alphabet),
                   std::move(slices));
}

Mechanism Mechanism::FromMarkov(const MarkovMechanism& markov,
                                Alphabet s_alphabet) {
  std::vector<Matrix> slices(s_alphabet.size(), markov.rows());
  return Mechanism(std::move(s_alphabet), markov.x_alphabet(),
                   std::move(slices));
}

Mechanism TvOptimalMechanism(const JointDistribution& joint, Alpha alpha) {
  // Proportional completion: each surplus symbol spreads its shed mass
  // over the deficit symbols in proportion to their shortfalls. Feasible
  // by construction and independent of symbol order.
  std::vector<Matrix> slices = BuildSlices(
      joint, alpha,
      [](std::size_t s, const TransferPlan& plan, const Matrix& cond,
         Matrix& slice) {
        for (std::size_t i = 0; i < plan.surplus.size(); ++i) {
          const std::size_t x_in = plan.surplus[i];
          for (std::size_t k = 0; k < plan.deficit.size(); ++k) {
            const double flow =
                plan.surplus_mass[i] * plan.deficit_mass[k] / plan.total_mass;
            slice(x_in, plan.deficit[k]) = flow / cond(s, x_in);
          }
        }
      });
  return Mechanism::FromTensor(joint.s_alphabet(), joint.x_alphabet(),
                               std::move(slices));
}

Mechanism DistortionOptimalMechanism(const JointDistribution& joint,
                                     Alpha alpha, const DistortionMatrix& d) {
  if (d.size() != joint.x_alphabet().size()) {
    throw Error(ErrorCode::kInvalidDistortion,
                "distortion matrix does not match the public alphabet");
  }
  const Dist& p_s = joint.marginal_s();
  std::vector<Matrix> slices = BuildSlices(
      joint, alpha,
      [&](std::size_t s, const TransferPlan& plan, const Matrix& cond,
          Matrix& slice) {
        // Transportation LP in flow variables f(i, k): surplus symbol i
        // ships f(i, k) of probability mass to deficit symbol k. Row and
        // column totals are fixed by the transfer plan; the distortion
        // weights decide the routing.
        const std::size_t ns = plan.surplus.size();
        const std::size_t nd = plan.deficit.size();
        LinearProgram lp;
        lp.objective.resize(ns * nd);
        lp.eq_matrix = Matrix(ns + nd, ns * nd);
        lp.eq_rhs.resize(ns + nd);
        for (std::size_t i = 0; i < ns; ++i) {
          for (std::size_t k = 0; k < nd; ++k) {
            lp.objective[i * nd + k] =
                p_s[s] * d(plan.surplus[i], plan.deficit[k]);
            lp.eq_matrix(i, i * nd + k) = 1.0;
            lp.eq_matrix(ns + k, i * nd + k) = 1.0;
          }
          lp.eq_rhs[i] = plan.surplus_mass[i];
        }
        for (std::size_t k = 0; k < nd; ++k) {
          lp.eq_rhs[ns + k] = plan.deficit_mass[k];
        }
        const LpSolution solution = Solve(lp);
        if (solution.status != LpStatus::kOptimal) {
          // The transportation polytope is never empty (supplies equal
          // demands), so this indicates a solver bug.
          throw Error(ErrorCode::kLpInfeasible,
                      "transfer LP unsolvable for secret '" +
                          joint.s_alphabet().label(s) + "'");
        }
        for (std::size_t i = 0; i < ns; ++i) {
          const std::size_t x_in = plan.surplus[i];
          for (std::size_t k = 0; k < nd; ++k) {
            slice(x_in, plan.deficit[k]) =
                solution.values[i * nd + k] / cond(s, x_in);
          }
        }
      });
  return Mechanism::FromTensor(joint.s_alphabet(), joint.x_alphabet(),
                               std::move(slices));
}

MarkovMechanism InducedChannel(const Mechanism& mechanism,
                               const JointDistribution& joint) {
  if (mechanism.s_alphabet() != joint.s_alphabet() ||
      mechanism.x_alphabet() != joint.x_alphabet()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mechanism and joint alphabets differ");
  }
  const Matrix posterior = joint.ConditionalSGivenX();  // (x, s)
  const std::size_t n = mechanism.x_alphabet().size();
  Matrix rows(n, n, 0.0);
  for (std::size_t x_in = 0; x_in < n; ++x_in) {
    for (std::size_t s = 0; s < mechanism.s_alphabet().size(); ++s) {
      const double weight = posterior(x_in, s);
      if (weight == 0.0) continue;
      for (std::size_t y = 0; y < n; ++y) {
        rows(x_in, y) += weight * mechanism(s, x_in, y);
      }
    }
  }
  return MarkovMechanism::FromRows(mechanism.x_alphabet(), std::move(rows));
}

RealizationReport VerifyRealization(const Mechanism& mechanism,
                                    const JointDistribution& joint,
                                    Alpha alpha) {
  const Matrix cond = joint.ConditionalXGivenS();
  const Dist& p_x = joint.marginal_x();
  const double a = alpha.value();
  RealizationReport report;
  for (std::size_t s = 0; s < joint.s_alphabet().size(); ++s) {
    for (std::size_t y = 0; y < p_x.size(); ++y) {
      double achieved = 0.0;
      for (std::size_t x_in = 0; x_in < p_x.size(); ++x_in) {
        achieved += mechanism(s, x_in, y) * cond(s, x_in);
      }
      const double target = (1.0 - a) * cond(s, y) + a * p_x[y];
      report.max_target_residual =
          std::max(report.max_target_residual, std::abs(achieved - target));
    }
    for (std::size_t x_in = 0; x_in < p_x.size(); ++x_in) {
      double row_sum = 0.0;
      for (std::size_t y = 0; y < p_x.size(); ++y) {
        row_sum += mechanism(s, x_in, y);
      }
      report.max_stochasticity_residual =
          std::max(report.max_stochasticity_residual, std::abs(row_sum - 1.0));
    }
  }
  return report;
}

}  // namespace linsan
