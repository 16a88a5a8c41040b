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

#ifndef LINSAN_MARKOV_MECHANISM_H_
#define LINSAN_MARKOV_MECHANISM_H_

#include "linsan/distortion.h"
#include "linsan/reduction_channel.h"
#include "linsan/types.h"

namespace linsan {

// Randomization of X alone: a row-stochastic matrix P_{Y|X}(y|x_in).
// Because it never consults the secret, composing it with any dataset
// whose public marginal is p_x realizes the linear-reduction channel.
class MarkovMechanism {
 public:
  // The closed form: keep the input symbol with probability
  // 1 - alpha * (1 - p_x(y)), otherwise hop to y with probability
  // alpha * p_x(y). Rows are stochastic by construction.
  static MarkovMechanism ForMarginal(const Dist& p_x,
                                     const Alphabet& x_alphabet, Alpha alpha);

  // Arbitrary P_{Y|X} matrix (also the shape of channels induced from
  // secret-aware mechanisms). Rows validated within 1e-9, renormalized.
  static MarkovMechanism FromRows(Alphabet x_alphabet, Matrix rows);

  const Alphabet& x_alphabet() const { return x_alphabet_; }
  // rows(x_in, y).
  const Matrix& rows() const { return rows_; }

  // P_Y(y) = sum_x p_x(x) * rows(x, y).
  Dist OutputMarginal(const Dist& p_x) const;

 private:
  MarkovMechanism(Alphabet x_alphabet, Matrix rows)
      : x_alphabet_(std::move(x_alphabet)), rows_(std::move(rows)) {}

  Alphabet x_alphabet_;
  Matrix rows_;
};

// Closed-form expected distortion of the marginal-based mechanism:
// alpha * sum_{x != y} p_x(x) p_x(y) d(x, y).
double MarkovExpectedDistortion(const Dist& p_x, Alpha alpha,
                                const DistortionMatrix& d);

// Closed-form total-variation distance to the identity channel, in the
// half-l1 convention: alpha * (1 - sum_x p_x(x)^2). The full-l1 value is
// exactly twice this.
double MarkovDtvHalf(const Dist& p_x, Alpha alpha);
double MarkovDtvFull(const Dist& p_x, Alpha alpha);

}  // namespace linsan

#endif  // LINSAN_MARKOV_MECHANISM_H_
