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

#ifndef LINSAN_JOINT_DISTRIBUTION_H_
#define LINSAN_JOINT_DISTRIBUTION_H_

#include "linsan/types.h"

namespace linsan {

// Finite joint law over a secret alphabet S and a public alphabet X.
// Immutable after construction and safe to share across threads.
//
// Validation rejects zero marginals (dead symbols) instead of dropping
// them: every leakage ratio downstream is undefined on empty support, so
// callers must pre-prune their alphabets.
class JointDistribution {
 public:
  // Builds from a full joint pmf indexed (s, x). Entries must be
  // nonnegative and sum to 1 within 1e-9; the pmf is then renormalized
  // exactly so downstream identities hold to float precision.
  static JointDistribution FromJoint(Alphabet s_alphabet, Alphabet x_alphabet,
                                     Matrix p);

  // Builds from per-secret conditionals: p(s, x) = p_s(s) * p_x_given_s(s, x).
  // Each conditional row must sum to 1 within 1e-9.
  static JointDistribution FromConditional(Alphabet s_alphabet,
                                           Alphabet x_alphabet,
                                           const Matrix& p_x_given_s,
                                           const Dist& p_s);

  const Alphabet& s_alphabet() const { return s_alphabet_; }
  const Alphabet& x_alphabet() const { return x_alphabet_; }

  // Renormalized pmf, indexed (s, x).
  const Matrix& pmf() const { return p_; }

  const Dist& marginal_s() const { return p_s_; }
  const Dist& marginal_x() const { return p_x_; }

  // Row-stochastic conditionals. ConditionalXGivenS is indexed (s, x);
  // ConditionalSGivenX is indexed (x, s).
  Matrix ConditionalXGivenS() const;
  Matrix ConditionalSGivenX() const;

 private:
  JointDistribution(Alphabet s_alphabet, Alphabet x_alphabet, Matrix p,
                    Dist p_s, Dist p_x)
      : s_alphabet_(std::move(s_alphabet)),
        x_alphabet_(std::move(x_alphabet)),
        p_(std::move(p)),
        p_s_(std::move(p_s)),
        p_x_(std::move(p_x)) {}

  Alphabet s_alphabet_;
  Alphabet x_alphabet_;
  Matrix p_;
  Dist p_s_;
  Dist p_x_;
};

}  // namespace linsan

#endif  // LINSAN_JOINT_DISTRIBUTION_H_
