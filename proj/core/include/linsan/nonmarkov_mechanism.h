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

#ifndef LINSAN_NONMARKOV_MECHANISM_H_
#define LINSAN_NONMARKOV_MECHANISM_H_

#include <cstddef>
#include <vector>

#include "linsan/distortion.h"
#include "linsan/joint_distribution.h"
#include "linsan/markov_mechanism.h"
#include "linsan/reduction_channel.h"
#include "linsan/types.h"

namespace linsan {

// Per-secret split of the public alphabet by how the conditional row
// compares to the marginal. Symbols in `deficit` sit at or below the
// marginal and absorb probability; symbols in `surplus` sit above it and
// shed their excess. Ties (conditional equal to marginal) go to `deficit`
// and carry zero mass either way. For every s the shed surplus mass
// equals the absorbed deficit mass.
struct SupportPartition {
  std::vector<std::vector<std::size_t>> deficit;
  std::vector<std::vector<std::size_t>> surplus;
};

SupportPartition PartitionSupports(const JointDistribution& joint);

// Secret-aware randomization: a tensor P_{Y|S,X}(y|s,x_in) whose (s, x_in)
// slices are stochastic rows. The Markov mechanism is the special case
// whose slices do not depend on s.
class Mechanism {
 public:
  // slices[s] is the row-stochastic matrix P_{Y|S=s,X}(y|x_in).
  // Rows validated within 1e-9 and renormalized.
  static Mechanism FromTensor(Alphabet s_alphabet, Alphabet x_alphabet,
                              std::vector<Matrix> slices);

  // Lifts a secret-oblivious mechanism to a constant-in-s tensor.
  static Mechanism FromMarkov(const MarkovMechanism& markov,
                              Alphabet s_alphabet);

  double operator()(std::size_t s, std::size_t x_in, std::size_t y) const {
    return slices_[s](x_in, y);
  }
  const Matrix& slice(std::size_t s) const { return slices_[s]; }
  const Alphabet& s_alphabet() const { return s_alphabet_; }
  const Alphabet& x_alphabet() const { return x_alphabet_; }

 private:
  Mechanism(Alphabet s_alphabet, Alphabet x_alphabet,
            std::vector<Matrix> slices)
      : s_alphabet_(std::move(s_alphabet)),
        x_alphabet_(std::move(x_alphabet)),
        slices_(std::move(slices)) {}

  Alphabet s_alphabet_;
  Alphabet x_alphabet_;
  std::vector<Matrix> slices_;
};

// Mechanism minimizing total-variation utility loss at level alpha.
//
// Each deficit symbol keeps itself with the largest feasible stay
// probability (saturated diagonal); each surplus symbol keeps itself with
// stay probability 1 - alpha * (1 - P_X(x)/P_{X|S}(x|s)) and spreads the
// remainder over deficit symbols only. The spread is underdetermined; the
// canonical completion used here moves surplus mass proportionally to each
// deficit symbol's shortfall, which is deterministic, order-independent,
// and always feasible. Any other nonnegative completion meeting the same
// row and column totals is equally optimal for total variation.
Mechanism TvOptimalMechanism(const JointDistribution& joint, Alpha alpha);

// Mechanism minimizing expected distortion at level alpha. Shares the
// diagonal and zero structure of TvOptimalMechanism; the surplus-to-deficit
// spread is chosen per secret by a small transportation LP weighted by d.
//
// Globally optimal when d obeys the triangle inequality (0/1 cost and any
// metric qualify). Costs that violate it can make a relay cheaper than a
// direct transfer -- shipping surplus mass through an intermediate symbol
// along two cheap edges -- and such routings fall outside this structure.
Mechanism DistortionOptimalMechanism(const JointDistribution& joint,
                                     Alpha alpha, const DistortionMatrix& d);

// Averages the tensor over the posterior of the secret given the input:
// P_{Y|X}(y|x_in) = sum_s P(y|s,x_in) * P_{S|X}(s|x_in). This is the
// channel an observer of (X, Y) alone experiences.
MarkovMechanism InducedChannel(const Mechanism& mechanism,
                               const JointDistribution& joint);

struct RealizationReport {
  // Worst absolute deviation of sum_{x'} P(y|s,x') P_{X|S}(x'|s) from the
  // linear-reduction target row, over all (s, y).
  double max_target_residual = 0.0;
  // Worst |row sum - 1| over all (s, x_in) slices.
  double max_stochasticity_residual = 0.0;

  bool Passes(double tol = 1e-9) const {
    return max_target_residual <= tol && max_stochasticity_residual <= tol;
  }
};

// Checks that a mechanism actually realizes the linear-reduction channel
// of `joint` at `alpha`.
RealizationReport VerifyRealization(const Mechanism& mechanism,
                                    const JointDistribution& joint,
                                    Alpha alpha);

}  // namespace linsan

#endif  // LINSAN_NONMARKOV_MECHANISM_H_
