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

#include <random>

#include <benchmark/benchmark.h>

#include "linsan/lp_solver.h"
#include "linsan/markov_mechanism.h"
#include "linsan/nonmarkov_mechanism.h"
#include "linsan/privacy_metrics.h"
#include "linsan/reduction_channel.h"
#include "linsan/sanitize.h"
#include "linsan/utility_metrics.h"

namespace linsan {
namespace {

JointDistribution BenchJoint(std::size_t n_s, std::size_t n_x) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> cell(0.05, 1.0);
  Matrix p(n_s, n_x);
  double sum = 0.0;
  for (std::size_t s = 0; s < n_s; ++s) {
    for (std::size_t x = 0; x < n_x; ++x) {
      p(s, x) = cell(rng);
      sum += p(s, x);
    }
  }
  for (std::size_t s = 0; s < n_s; ++s) {
    for (std::size_t x = 0; x < n_x; ++x) p(s, x) /= sum;
  }
  std::vector<std::string> s_labels, x_labels;
  for (std::size_t i = 0; i < n_s; ++i) s_labels.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < n_x; ++i) x_labels.push_back("x" + std::to_string(i));
  return JointDistribution::FromJoint(Alphabet(s_labels), Alphabet(x_labels),
                                      std::move(p));
}

void BM_LinearReduce(benchmark::State& state) {
  const JointDistribution joint = BenchJoint(state.range(0), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(LinearReduce(joint, Alpha(0.5)));
  }
}
BENCHMARK(BM_LinearReduce)->Arg(4)->Arg(6)->Arg(12);

void BM_PrivacyReport(benchmark::State& state) {
  const JointDistribution joint = BenchJoint(state.range(0), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReportPrivacy(joint, Alpha(0.5)));
  }
}
BENCHMARK(BM_PrivacyReport)->Arg(4)->Arg(12);

void BM_TvOptimalMechanism(benchmark::State& state) {
  const JointDistribution joint = BenchJoint(state.range(0), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TvOptimalMechanism(joint, Alpha(0.5)));
  }
}
BENCHMARK(BM_TvOptimalMechanism)->Arg(4)->Arg(6)->Arg(12);

void BM_DistortionOptimalMechanism(benchmark::State& state) {
  const JointDistribution joint = BenchJoint(state.range(0), state.range(0));
  const DistortionMatrix hamming =
      DistortionMatrix::Hamming(joint.x_alphabet().size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        DistortionOptimalMechanism(joint, Alpha(0.5), hamming));
  }
}
BENCHMARK(BM_DistortionOptimalMechanism)->Arg(4)->Arg(6)->Arg(12);

void BM_LpSolveTransportation(benchmark::State& state) {
  // Balanced transportation instance with n supplies and n demands.
  const std::size_t n = state.range(0);
  LinearProgram lp;
  lp.objective.resize(n * n);
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> cost(0.1, 2.0);
  for (double& c : lp.objective) c = cost(rng);
  lp.eq_matrix = Matrix(2 * n, n * n);
  lp.eq_rhs.assign(2 * n, 1.0 / n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      lp.eq_matrix(i, i * n + k) = 1.0;
      lp.eq_matrix(n + k, i * n + k) = 1.0;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(lp));
  }
}
BENCHMARK(BM_LpSolveTransportation)->Arg(4)->Arg(8)->Arg(12);

void BM_MutualInformation(benchmark::State& state) {
  const JointDistribution joint = BenchJoint(6, state.range(0));
  const MarkovMechanism mechanism = MarkovMechanism::ForMarginal(
      joint.marginal_x(), joint.x_alphabet(), Alpha(0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MutualInformationBits(mechanism, joint.marginal_x()));
  }
}
BENCHMARK(BM_MutualInformation)->Arg(6)->Arg(12);

void BM_SanitizeRecords(benchmark::State& state) {
  const JointDistribution joint = BenchJoint(4, 8);
  const Mechanism mechanism = TvOptimalMechanism(joint, Alpha(0.5));
  std::vector<Record> records;
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> s_pick(0, 3), x_pick(0, 7);
  for (int i = 0; i < 1000; ++i) {
    records.push_back({joint.s_alphabet().label(s_pick(rng)),
                       joint.x_alphabet().label(x_pick(rng))});
  }
  for (auto _ : state) {
    Sanitizer sanitizer(mechanism, 9001);
    benchmark::DoNotOptimize(sanitizer.Sanitize(records));
  }
}
BENCHMARK(BM_SanitizeRecords);

}  // namespace
}  // namespace linsan

BENCHMARK_MAIN();
