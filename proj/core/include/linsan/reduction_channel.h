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

#ifndef LINSAN_REDUCTION_CHANNEL_H_
#define LINSAN_REDUCTION_CHANNEL_H_

#include "linsan/joint_distribution.h"
#include "linsan/types.h"

namespace linsan {

// Privacy level in (0, 1]. The level scales how far each conditional row
// is pulled toward the marginal; 1 yields an output independent of the
// secret. Zero is rejected (no reduction at all); use IdentityChannel for
// an unreduced baseline.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Conditional distribution of the released symbol given the secret,
// rows indexed by s. Rows are stochastic within 1e-12.
class SoftChannel {
 public:
  // Validates rows (nonnegative, sum 1 within 1e-9) and renormalizes.
  static SoftChannel FromRows(Alphabet s_alphabet, Alphabet y_alphabet,
                              Matrix rows);

  const Alphabet& s_alphabet() const { return s_alphabet_; }
  const Alphabet& y_alphabet() const { return y_alphabet_; }
  const Matrix& rows() const { return rows_; }

  // P_Y(y) = sum_s p_s(s) * rows(s, y).
  Dist OutputMarginal(const Dist& p_s) const;

 private:
  SoftChannel(Alphabet s_alphabet, Alphabet y_alphabet, Matrix rows)
      : s_alphabet_(std::move(s_alphabet)),
        y_alphabet_(std::move(y_alphabet)),
        rows_(std::move(rows)) {}

  Alphabet s_alphabet_;
  Alphabet y_alphabet_;
  Matrix rows_;
};

// The linear-reduction target channel:
//   P_{Y|S}(y|s) = (1 - alpha) * P_{X|S}(y|s) + alpha * P_X(y).
// Every row is a convex pull toward the marginal, so the output marginal
// equals P_X for every alpha and the released data keeps answering
// aggregate queries on X exactly.
SoftChannel LinearReduce(const JointDistribution& joint, Alpha alpha);

// Baseline channel releasing X unchanged: rows equal P_{X|S}.
SoftChannel IdentityChannel(const JointDistribution& joint);

// Joint law of (S, Y) when Y is drawn through the channel.
JointDistribution InducedJoint(const SoftChannel& channel, const Dist& p_s);

}  // namespace linsan

#endif  // LINSAN_REDUCTION_CHANNEL_H_
