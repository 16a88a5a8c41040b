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

#ifndef LINSAN_TYPES_H_
#define LINSAN_TYPES_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linsan {

// Dense row-major matrix of doubles. Sizes here are alphabet-sized (a
// handful of symbols), so no sparse or vectorized machinery.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix FromRows(
      std::initializer_list<std::initializer_list<double>> rows);

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> Row(std::size_t r) { return {&data_[r * cols_], cols_}; }
  std::span<const double> Row(std::size_t r) const {
    return {&data_[r * cols_], cols_};
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Ordered set of distinct symbol names. The order is fixed at construction
// and defines the index <-> label mapping used by every matrix and tensor.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> Find(std::string_view label) const;
  // Like Find, but throws kUnknownLabel.
  std::size_t IndexOf(std::string_view label) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// Probability vector over one alphabet. Entries are nonnegative and sum to
// one after construction (renormalized; residual drift below 1e-12).
class Dist {
 public:
  // Validates entries >= 0 and |sum - 1| <= 1e-9, then renormalizes.
  static Dist FromValues(std::vector<double> values);

  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

 private:
  explicit Dist(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

}  // namespace linsan

#endif  // LINSAN_TYPES_H_
