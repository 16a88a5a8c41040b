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

#ifndef LINSAN_UTILITY_METRICS_H_
#define LINSAN_UTILITY_METRICS_H_

#include "linsan/distortion.h"
#include "linsan/markov_mechanism.h"
#include "linsan/types.h"

namespace linsan {

// Utility losses of a randomization P_{Y|X} measured against the identity
// channel (the lossless release). Two total-variation conventions are in
// circulation that differ by an exact factor of two; both are computed and
// labeled so reports are unambiguous:
//   half: 1 - sum_x p_x(x) * channel(x, x)
//   full: sum_{x,y} p_x(x) * |channel(x, y) - [y == x]|

struct DtvPair {
  double half = 0.0;
  double full = 0.0;
};

// The two fields are computed by independent routes (diagonal shortfall
// vs. the full deviation sum); full == 2 * half up to float error.
DtvPair Dtv(const MarkovMechanism& channel, const Dist& p_x);

// sum_{x,y} p_x(x) * channel(x, y) * d(x, y).
double ExpectedDistortion(const MarkovMechanism& channel, const Dist& p_x,
                          const DistortionMatrix& d);

// Shannon entropy in bits, 0 log 0 := 0.
double EntropyBits(const Dist& p);

// I(X;Y) in bits for Y drawn from the channel with X ~ p_x.
double MutualInformationBits(const MarkovMechanism& channel, const Dist& p_x);

struct UtilityReport {
  double dtv_half = 0.0;
  double dtv_full = 0.0;
  double expected_distortion = 0.0;
  double mi_bits = 0.0;
  double entropy_x_bits = 0.0;
  double utility_loss_bits = 0.0;  // H(X) - I(X;Y)
};

UtilityReport ReportUtility(const MarkovMechanism& channel, const Dist& p_x,
                            const DistortionMatrix& d);

}  // namespace linsan

#endif  // LINSAN_UTILITY_METRICS_H_
