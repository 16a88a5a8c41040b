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

#ifndef LINSAN_SANITIZE_H_
#define LINSAN_SANITIZE_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "linsan/joint_distribution.h"
#include "linsan/nonmarkov_mechanism.h"

namespace linsan {

// One labeled observation: the secret value and the public value.
struct Record {
  std::string s;
  std::string x;
};

// Maximum-likelihood empirical joint from raw records. Every declared
// symbol must appear at least once (marginal-wise); unobserved symbols are
// a data problem the caller has to resolve, not something to smooth over,
// so they surface as kDeadSymbol.
JointDistribution EstimateJoint(std::span<const Record> records,
                                const Alphabet& s_alphabet,
                                const Alphabet& x_alphabet);

// Applies a mechanism to a record stream. Draws are inverse-CDF over the
// fixed output label order, fed by a seeded mt19937_64 mapped to [0,1)
// through its high 53 bits. Both pieces have pinned-down semantics in the
// standard, so identical seeds give identical output on any platform.
// Single-owner: each draw advances the generator; parallel sanitization
// needs independent instances with distinct seeds.
class Sanitizer {
 public:
  // Identifier of the draw algorithm, recorded in output metadata.
  static constexpr const char* kRngId = "mt19937_64/u53";

  Sanitizer(Mechanism mechanism, std::uint64_t seed);

  const Mechanism& mechanism() const { return mechanism_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t draw_count() const { return draw_count_; }

  // Throws kUnknownLabel if the record uses undeclared symbols.
  std::string SanitizeOne(const Record& record);
  std::vector<std::string> Sanitize(std::span<const Record> records);

 private:
  double NextUnit();

  Mechanism mechanism_;
  std::mt19937_64 rng_;
  std::uint64_t seed_;
  std::uint64_t draw_count_ = 0;
};

}  // namespace linsan

#endif  // LINSAN_SANITIZE_H_
