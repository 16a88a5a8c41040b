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

#ifndef LINSAN_CLI_COMMANDS_H_
#define LINSAN_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linsan/distortion.h"
#include "linsan/error.h"
#include "linsan/formats.h"
#include "linsan/joint_distribution.h"

namespace linsan::cli {

// Exit-code contract: 0 success, 2 parse, 3 domain validation, 4 internal
// infeasibility (a bug, not bad input), 5 data/label mismatch.
int ExitCodeFor(ErrorCode code);

enum class Family { kMarkov, kNonMarkovTv, kNonMarkovDistortion };

Family ParseFamilyName(const std::string& name);
const char* FamilyName(Family family);

// One row of a privacy-utility sweep. Privacy columns describe the
// reduction channel at alpha (identical across families); utility columns
// describe the named family's induced randomization of X.
struct TradeoffPoint {
  double alpha = 0.0;
  double ldp_y = 0.0;
  double loglift_y = 0.0;
  double ldp_approx = 0.0;
  double loglift_approx = 0.0;
  double dtv_half = 0.0;
  double dtv_full = 0.0;
  double expected_distortion = 0.0;
  double mi_bits = 0.0;
  double utility_loss_bits = 0.0;
  Family family = Family::kMarkov;
};

// Grid spec: either "start:stop:step" or an explicit comma list; every
// point must lie in (0, 1].
std::vector<double> ParseAlphaGrid(const std::string& spec);

// Computes points family-major (each family's alphas strictly increasing).
// Points are evaluated in parallel up to `threads` workers but always
// returned in grid order.
std::vector<TradeoffPoint> ComputeSweep(const JointDistribution& joint,
                                        const std::vector<double>& grid,
                                        const std::vector<Family>& families,
                                        const DistortionMatrix& distortion,
                                        unsigned threads);

void WriteSweepTsv(std::ostream& out, const std::vector<TradeoffPoint>& points,
                   bool nats);

struct InspectOptions {
  std::string input_path;
  InputFormat format = InputFormat::kAuto;
  std::optional<double> alpha;
  bool nats = false;
};

struct MechanizeOptions {
  std::string input_path;
  InputFormat format = InputFormat::kAuto;
  double alpha = 0.0;
  std::string family;
  std::string distortion_path;  // required iff family is nonmarkov_distortion
  std::string out_path;         // empty: write to `out`
};

struct SweepOptions {
  std::string input_path;
  InputFormat format = InputFormat::kAuto;
  std::string grid = "0.05:1.0:0.05";
  std::vector<std::string> families;  // empty: all three
  std::string distortion_path;        // empty: 0/1 cost
  std::string out_path;
  bool nats = false;
};

struct SanitizeOptions {
  std::string records_path;
  std::string mechanism_path;
  std::uint64_t seed = 0;
  std::string out_path;
};

// Each command returns 0 on success and throws linsan::Error otherwise;
// map the code with ExitCodeFor. Output goes to `out` unless the options
// name a file.
int RunInspect(const InspectOptions& options, std::ostream& out);
int RunMechanize(const MechanizeOptions& options, std::ostream& out);
int RunSweep(const SweepOptions& options, std::ostream& out);
int RunSanitize(const SanitizeOptions& options, std::ostream& out);

// Sweep parallelism cap from the environment (LINSAN_THREADS), falling
// back to the hardware count.
unsigned SweepThreadBudget();

}  // namespace linsan::cli

#endif  // LINSAN_CLI_COMMANDS_H_
