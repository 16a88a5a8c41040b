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

#include "linsan/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "linsan/markov_mechanism.h"
#include "linsan/nonmarkov_mechanism.h"
#include "linsan/privacy_metrics.h"
#include "linsan/reduction_channel.h"
#include "linsan/sanitize.h"
#include "linsan/utility_metrics.h"

namespace linsan::cli {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double InBase(double bits, bool nats) { return nats ? bits * kLn2 : bits; }

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  }
  return out;
}

// Routes command output to a file when requested, else to the default
// stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = OpenOutput(path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

MarkovMechanism BuildFamilyChannel(const JointDistribution& joint, Alpha alpha,
                                   Family family,
                                   const DistortionMatrix& distortion) {
  switch (family) {
    case Family::kMarkov:
      return MarkovMechanism::ForMarginal(joint.marginal_x(),
                                          joint.x_alphabet(), alpha);
    case Family::kNonMarkovTv:
      return InducedChannel(TvOptimalMechanism(joint, alpha), joint);
    case Family::kNonMarkovDistortion:
      return InducedChannel(DistortionOptimalMechanism(joint, alpha,
                                                       distortion),
                            joint);
  }
  throw Error(ErrorCode::kParseError, "unreachable family");
}

TradeoffPoint EvaluatePoint(const JointDistribution& joint, double alpha_value,
                            Family family,
                            const DistortionMatrix& distortion) {
  const Alpha alpha(alpha_value);
  TradeoffPoint point;
  point.alpha = alpha_value;
  point.family = family;

  const PrivacyReport privacy = ReportPrivacy(joint, alpha);
  point.ldp_y = privacy.ldp_bits;
  point.loglift_y = privacy.log_lift_bits;
  point.ldp_approx = privacy.ldp_first_order_bits;
  point.loglift_approx = privacy.log_lift_first_order_bits;

  const MarkovMechanism channel =
      BuildFamilyChannel(joint, alpha, family, distortion);
  const UtilityReport utility =
      ReportUtility(channel, joint.marginal_x(), distortion);
  point.dtv_half = utility.dtv_half;
  point.dtv_full = utility.dtv_full;
  point.expected_distortion = utility.expected_distortion;
  point.mi_bits = utility.mi_bits;
  point.utility_loss_bits = utility.utility_loss_bits;
  return point;
}

void PrintMarginal(std::ostream& out, const std::string& key, const Dist& p) {
  out << key << ": ";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out << ',';
    out << FormatSig9(p[i]);
  }
  out << "\n";
}

std::string WitnessLabel(const Alphabet& alphabet, std::size_t i) {
  return alphabet.label(i);
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return 2;
    case ErrorCode::kLpInfeasible:
    case ErrorCode::kNumericalBreakdown:
      return 4;
    case ErrorCode::kUnknownLabel:
      return 5;
    default:
      return 3;
  }
}

Family ParseFamilyName(const std::string& name) {
  if (name == "markov") return Family::kMarkov;
  if (name == "nonmarkov_tv") return Family::kNonMarkovTv;
  if (name == "nonmarkov_distortion") return Family::kNonMarkovDistortion;
  throw Error(ErrorCode::kParseError,
              "unknown family '" + name +
                  "' (markov | nonmarkov_tv | nonmarkov_distortion)");
}

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kMarkov:
      return "markov";
    case Family::kNonMarkovTv:
      return "nonmarkov_tv";
    case Family::kNonMarkovDistortion:
      return "nonmarkov_distortion";
  }
  return "unknown";
}

std::vector<double> ParseAlphaGrid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    const auto fields = SplitCsv(spec);
    if (fields.size() != 1) {
      throw Error(ErrorCode::kParseError,
                  "grid must be start:stop:step or a comma list, not both");
    }
    double start = 0, stop = 0, step = 0;
    std::string token;
    std::vector<std::string> parts;
    for (char c : spec) {
      if (c == ':') {
        parts.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
    parts.push_back(token);
    if (parts.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  "grid spec '" + spec + "' is not start:stop:step");
    }
    start = ParseProb(parts[0], "grid start");
    stop = ParseProb(parts[1], "grid stop");
    step = ParseProb(parts[2], "grid step");
    if (step <= 0 || stop < start) {
      throw Error(ErrorCode::kParseError,
                  "grid spec '" + spec + "' does not advance");
    }
    for (int k = 0;; ++k) {
      double value = start + k * step;
      if (value > stop + 1e-12) break;
      // Accumulated stepping can land a hair past the endpoint.
      if (value > stop) value = stop;
      grid.push_back(value);
    }
  } else {
    for (const std::string& token : SplitCsv(spec)) {
      grid.push_back(ParseProb(token, "grid value"));
    }
  }
  if (grid.empty()) {
    throw Error(ErrorCode::kParseError, "grid spec produced no points");
  }
  for (double value : grid) {
    if (!(value > 0.0 && value <= 1.0)) {
      throw Error(ErrorCode::kAlphaOutOfRange,
                  "grid point " + FormatSig9(value) + " is outside (0, 1]");
    }
  }
  return grid;
}

unsigned SweepThreadBudget() {
  unsigned budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LINSAN_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) {
      budget = static_cast<unsigned>(parsed);
    }
  }
  return budget;
}

std::vector<TradeoffPoint> ComputeSweep(const JointDistribution& joint,
                                        const std::vector<double>& grid,
                                        const std::vector<Family>& families,
                                        const DistortionMatrix& distortion,
                                        unsigned threads) {
  struct Task {
    double alpha;
    Family family;
  };
  std::vector<Task> tasks;
  for (Family family : families) {
    for (double alpha : grid) tasks.push_back({alpha, family});
  }
  std::vector<TradeoffPoint> points(tasks.size());

  const unsigned workers = std::max(
      1u, static_cast<unsigned>(
              std::min<std::size_t>(threads, tasks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      points[i] =
          EvaluatePoint(joint, tasks[i].alpha, tasks[i].family, distortion);
    }
    return points;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          points[i] = EvaluatePoint(joint, tasks[i].alpha, tasks[i].family,
                                    distortion);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return points;
}

void WriteSweepTsv(std::ostream& out, const std::vector<TradeoffPoint>& points,
                   bool nats) {
  out << "# linsan sweep v1\n";
  out << "# base: " << (nats ? "nats" : "bits") << "\n";
  out << "alpha\tldp_y\tloglift_y\tldp_approx\tloglift_approx\tdtv_half\t"
         "dtv_full\texpected_distortion\tmi\tutility_loss\tfamily\n";
  for (const TradeoffPoint& p : points) {
    out << FormatSig9(p.alpha) << '\t' << FormatSig9(InBase(p.ldp_y, nats))
        << '\t' << FormatSig9(InBase(p.loglift_y, nats)) << '\t'
        << FormatSig9(InBase(p.ldp_approx, nats)) << '\t'
        << FormatSig9(InBase(p.loglift_approx, nats)) << '\t'
        << FormatSig9(p.dtv_half) << '\t' << FormatSig9(p.dtv_full) << '\t'
        << FormatSig9(p.expected_distortion) << '\t'
        << FormatSig9(InBase(p.mi_bits, nats)) << '\t'
        << FormatSig9(InBase(p.utility_loss_bits, nats)) << '\t'
        << FamilyName(p.family) << "\n";
  }
}

int RunInspect(const InspectOptions& options, std::ostream& out) {
  const Dataset dataset = LoadDataset(options.input_path, options.format);
  const JointDistribution& joint = dataset.joint;
  const bool nats = options.nats;
  const char* unit = nats ? "nats" : "bits";

  const PrivacyReport dataset_privacy =
      ReportPrivacy(IdentityChannel(joint), joint.marginal_s());

  out << "format: " << FormatName(dataset.source_format) << "\n";
  out << "s_alphabet: ";
  for (std::size_t i = 0; i < joint.s_alphabet().size(); ++i) {
    if (i > 0) out << ',';
    out << joint.s_alphabet().label(i);
  }
  out << "\nx_alphabet: ";
  for (std::size_t i = 0; i < joint.x_alphabet().size(); ++i) {
    if (i > 0) out << ',';
    out << joint.x_alphabet().label(i);
  }
  out << "\n";
  PrintMarginal(out, "p_s", joint.marginal_s());
  PrintMarginal(out, "p_x", joint.marginal_x());
  out << "entropy_x_" << unit << ": "
      << FormatSig9(InBase(EntropyBits(joint.marginal_x()), nats)) << "\n";
  out << "entropy_s_" << unit << ": "
      << FormatSig9(InBase(EntropyBits(joint.marginal_s()), nats)) << "\n";
  out << "ldp_" << unit << ": "
      << FormatSig9(InBase(dataset_privacy.ldp_bits, nats)) << "\n";
  out << "ldp_witness: y="
      << WitnessLabel(joint.x_alphabet(), dataset_privacy.ldp_witness.y)
      << ",s="
      << WitnessLabel(joint.s_alphabet(), dataset_privacy.ldp_witness.s_num)
      << ",s'="
      << WitnessLabel(joint.s_alphabet(), dataset_privacy.ldp_witness.s_den)
      << "\n";
  out << "log_lift_" << unit << ": "
      << FormatSig9(InBase(dataset_privacy.log_lift_bits, nats)) << "\n";
  out << "log_lift_witness: y="
      << WitnessLabel(joint.x_alphabet(), dataset_privacy.log_lift_witness.y)
      << ",s="
      << WitnessLabel(joint.s_alphabet(), dataset_privacy.log_lift_witness.s)
      << "\n";

  if (options.alpha.has_value()) {
    const Alpha alpha(*options.alpha);
    const PrivacyReport channel_privacy = ReportPrivacy(joint, alpha);
    out << "alpha: " << FormatSig9(alpha.value()) << "\n";
    out << "ldp_y_" << unit << ": "
        << FormatSig9(InBase(channel_privacy.ldp_bits, nats)) << "\n";
    out << "log_lift_y_" << unit << ": "
        << FormatSig9(InBase(channel_privacy.log_lift_bits, nats)) << "\n";
    out << "ldp_first_order_" << unit << ": "
        << FormatSig9(InBase(channel_privacy.ldp_first_order_bits, nats))
        << "\n";
    out << "log_lift_first_order_" << unit << ": "
        << FormatSig9(InBase(channel_privacy.log_lift_first_order_bits, nats))
        << "\n";
    const DistortionMatrix hamming =
        DistortionMatrix::Hamming(joint.x_alphabet().size());
    for (Family family : {Family::kMarkov, Family::kNonMarkovTv,
                          Family::kNonMarkovDistortion}) {
      const MarkovMechanism channel =
          BuildFamilyChannel(joint, alpha, family, hamming);
      const UtilityReport utility =
          ReportUtility(channel, joint.marginal_x(), hamming);
      const std::string suffix = std::string("_") + FamilyName(family);
      out << "dtv_half" << suffix << ": " << FormatSig9(utility.dtv_half)
          << "\n";
      out << "dtv_full" << suffix << ": " << FormatSig9(utility.dtv_full)
          << "\n";
      out << "expected_distortion" << suffix << ": "
          << FormatSig9(utility.expected_distortion) << "\n";
      out << "mi_" << unit << suffix << ": "
          << FormatSig9(InBase(utility.mi_bits, nats)) << "\n";
      out << "utility_loss_" << unit << suffix << ": "
          << FormatSig9(InBase(utility.utility_loss_bits, nats)) << "\n";
    }
  }
  return 0;
}

int RunMechanize(const MechanizeOptions& options, std::ostream& out) {
  const Family family = ParseFamilyName(options.family);
  if (family == Family::kNonMarkovDistortion && options.distortion_path.empty()) {
    throw Error(ErrorCode::kInvalidDistortion,
                "family nonmarkov_distortion requires --distortion");
  }
  const Dataset dataset = LoadDataset(options.input_path, options.format);
  const JointDistribution& joint = dataset.joint;
  const Alpha alpha(options.alpha);

  Mechanism mechanism = [&] {
    switch (family) {
      case Family::kMarkov:
        return Mechanism::FromMarkov(
            MarkovMechanism::ForMarginal(joint.marginal_x(),
                                         joint.x_alphabet(), alpha),
            joint.s_alphabet());
      case Family::kNonMarkovTv:
        return TvOptimalMechanism(joint, alpha);
      case Family::kNonMarkovDistortion:
        return DistortionOptimalMechanism(
            joint, alpha,
            LoadDistortion(options.distortion_path, joint.x_alphabet()));
    }
    throw Error(ErrorCode::kParseError, "unreachable family");
  }();

  const RealizationReport realization =
      VerifyRealization(mechanism, joint, alpha);
  if (!realization.Passes()) {
    throw Error(ErrorCode::kLpInfeasible,
                "constructed mechanism misses its target (residual " +
                    FormatSig9(realization.max_target_residual) + ")");
  }

  MechanismMetadata metadata;
  metadata.family = FamilyName(family);
  metadata.alpha = alpha.value();
  metadata.base = "bits";
  metadata.rng_id = Sanitizer::kRngId;
  char hash_hex[17];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(ReadFileBytes(options.input_path))));
  metadata.input_hash = hash_hex;

  OutputTarget target(options.out_path, out);
  WriteMechanism(target.stream(), mechanism, metadata);
  return 0;
}

int RunSweep(const SweepOptions& options, std::ostream& out) {
  const Dataset dataset = LoadDataset(options.input_path, options.format);
  const JointDistribution& joint = dataset.joint;
  const std::vector<double> grid = ParseAlphaGrid(options.grid);

  std::vector<Family> families;
  if (options.families.empty()) {
    families = {Family::kMarkov, Family::kNonMarkovTv,
                Family::kNonMarkovDistortion};
  } else {
    for (const std::string& name : options.families) {
      families.push_back(ParseFamilyName(name));
    }
  }

  const DistortionMatrix distortion =
      options.distortion_path.empty()
          ? DistortionMatrix::Hamming(joint.x_alphabet().size())
          : LoadDistortion(options.distortion_path, joint.x_alphabet());

  const std::vector<TradeoffPoint> points =
      ComputeSweep(joint, grid, families, distortion, SweepThreadBudget());

  OutputTarget target(options.out_path, out);
  WriteSweepTsv(target.stream(), points, options.nats);
  return 0;
}

int RunSanitize(const SanitizeOptions& options, std::ostream& out) {
  const std::vector<Record> records =
      LoadRecords(options.records_path, InputFormat::kAuto);
  MechanismFile file = ReadMechanismFromPath(options.mechanism_path);

  Sanitizer sanitizer(std::move(file.mechanism), options.seed);
  const std::vector<std::string> output = sanitizer.Sanitize(records);

  OutputTarget target(options.out_path, out);
  std::ostream& stream = target.stream();
  stream << "# linsan sanitized v1\n";
  stream << "# seed: " << options.seed << "\n";
  stream << "# rng: " << Sanitizer::kRngId << "\n";
  if (!file.metadata.family.empty()) {
    stream << "# mechanism_family: " << file.metadata.family << "\n";
  }
  stream << "y\n";
  for (const std::string& label : output) {
    stream << label << "\n";
  }
  return 0;
}

}  // namespace linsan::cli
