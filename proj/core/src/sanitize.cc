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

#include "linsan/sanitize.h"

#include <string>

#include "linsan/error.h"

namespace linsan {

JointDistribution EstimateJoint(std::span<const Record> records,
                                const Alphabet& s_alphabet,
                                const Alphabet& x_alphabet) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no records to estimate from");
  }
  Matrix counts(s_alphabet.size(), x_alphabet.size(), 0.0);
  for (const Record& record : records) {
    counts(s_alphabet.IndexOf(record.s), x_alphabet.IndexOf(record.x)) += 1.0;
  }
  const double n = static_cast<double>(records.size());
  for (std::size_t s = 0; s < counts.rows(); ++s) {
    for (std::size_t x = 0; x < counts.cols(); ++x) counts(s, x) /= n;
  }
  return JointDistribution::FromJoint(s_alphabet, x_alphabet,
                                      std::move(counts));
}

Sanitizer::Sanitizer(Mechanism mechanism, std::uint64_t seed)
    : mechanism_(std::move(mechanism)), rng_(seed), seed_(seed) {}

double Sanitizer::NextUnit() {
  ++draw_count_;
  // Top 53 bits of the engine output, uniform on [0, 1). Unlike the
  // standard distributions, this mapping is the same on every platform.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::string Sanitizer::SanitizeOne(const Record& record) {
  const std::size_t s = mechanism_.s_alphabet().IndexOf(record.s);
  const std::size_t x = mechanism_.x_alphabet().IndexOf(record.x);
  const Matrix& slice = mechanism_.slice(s);
  const double u = NextUnit();
  double cumulative = 0.0;
  const std::size_t n = mechanism_.x_alphabet().size();
  for (std::size_t y = 0; y + 1 < n; ++y) {
    cumulative += slice(x, y);
    if (u < cumulative) return mechanism_.x_alphabet().label(y);
  }
  return mechanism_.x_alphabet().label(n - 1);
}

std::vector<std::string> Sanitizer::Sanitize(std::span<const Record> records) {
  std::vector<std::string> output;
  output.reserve(records.size());
  for (const Record& record : records) {
    output.push_back(SanitizeOne(record));
  }
  return output;
}

}  // namespace linsan
