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

#include "linsan/types.h"

#include <cmath>
#include <unordered_set>

#include "linsan/error.h"

namespace linsan {

Matrix Matrix::FromRows(
    std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols()) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged initializer rows");
    }
    std::size_t c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Alphabet::Alphabet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::kInvalidAlphabet, "alphabet must be nonempty");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidAlphabet,
                  "duplicate symbol '" + label + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::Find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Alphabet::IndexOf(std::string_view label) const {
  if (auto i = Find(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel,
              "symbol '" + std::string(label) + "' is not in the alphabet");
}

Dist Dist::FromValues(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "distribution has no entries");
  }
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kNegativeEntry,
                  "probability " + std::to_string(v) + " is negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kSumNotOne,
                "probabilities sum to " + std::to_string(sum));
  }
  for (double& v : values) v /= sum;
  return Dist(std::move(values));
}

}  // namespace linsan
