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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "linsan/commands.h"
#include "linsan/error.h"
#include "linsan/formats.h"
#include "linsan/nonmarkov_mechanism.h"
#include "linsan/utility_metrics.h"
#include "testing/test_util.h"

namespace linsan::cli {
namespace {

using linsan::testing::ReferenceJoint;
using linsan::testing::SampleRecords;

constexpr char kConditionalFile[] =
    "#P_S\n"
    "1,0.3\n"
    "2,0.7\n"
    "#P_X|S,a,b,c,d\n"
    "1,0.2,0.1,0.5,0.2\n"
    "2,0.5,0.3,0.1,0.1\n";

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/" + name;
}

std::string WriteFile(const std::string& name, const std::string& contents) {
  const std::string path = TempPath(name);
  std::ofstream out(path);
  out << contents;
  return path;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int CodeOf(const std::function<void()>& fn) {
  try {
    fn();
    return 0;
  } catch (const Error& e) {
    return ExitCodeFor(e.code());
  }
}

TEST(FormatsTest, ConditionalAutodetectAndValues) {
  const std::string path = WriteFile("cond.csv", kConditionalFile);
  const Dataset dataset = LoadDataset(path, InputFormat::kAuto);
  EXPECT_EQ(dataset.source_format, InputFormat::kConditional);
  EXPECT_NEAR(dataset.joint.marginal_x()[0], 0.41, 1e-12);
  EXPECT_NEAR(dataset.joint.pmf()(0, 2), 0.15, 1e-12);
  EXPECT_EQ(dataset.joint.x_alphabet().label(3), "d");
}

TEST(FormatsTest, JointTripletsAutodetect) {
  const std::string path = WriteFile("joint.csv",
                                     "s,x,prob\n"
                                     "1,a,0.06\n1,b,0.03\n1,c,0.15\n1,d,0.06\n"
                                     "2,a,0.35\n2,b,0.21\n2,c,0.07\n2,d,0.07\n");
  const Dataset dataset = LoadDataset(path, InputFormat::kAuto);
  EXPECT_EQ(dataset.source_format, InputFormat::kJoint);
  EXPECT_NEAR(dataset.joint.marginal_s()[0], 0.3, 1e-12);
  EXPECT_NEAR(dataset.joint.marginal_x()[2], 0.22, 1e-12);
}

TEST(FormatsTest, RecordsAutodetectEstimates) {
  std::string contents = "s,x\n";
  for (int i = 0; i < 3; ++i) contents += "u,a\n";
  for (int i = 0; i < 7; ++i) contents += "v,b\n";
  const std::string path = WriteFile("records.csv", contents);
  const Dataset dataset = LoadDataset(path, InputFormat::kAuto);
  EXPECT_EQ(dataset.source_format, InputFormat::kRecords);
  EXPECT_NEAR(dataset.joint.pmf()(0, 0), 0.3, 1e-12);
  const std::vector<Record> records = LoadRecords(path, InputFormat::kAuto);
  EXPECT_EQ(records.size(), 10u);
}

TEST(FormatsTest, ForcedFormatSkipsDetection) {
  // Headerless records only parse when the format is forced.
  const std::string path = WriteFile("headerless.csv", "u,a\nv,b\nu,b\nv,a\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(path, InputFormat::kAuto); }), 2);
  const Dataset dataset = LoadDataset(path, InputFormat::kRecords);
  EXPECT_EQ(dataset.joint.s_alphabet().size(), 2u);
}

TEST(FormatsTest, MalformedInputsGiveParseError) {
  EXPECT_EQ(CodeOf([&] {
              LoadDataset(WriteFile("bad1.csv", "s,x,prob\n1,a\n"),
                          InputFormat::kAuto);
            }),
            2);
  EXPECT_EQ(CodeOf([&] {
              LoadDataset(WriteFile("bad2.csv", "s,x,prob\n1,a,zebra\n"),
                          InputFormat::kAuto);
            }),
            2);
  EXPECT_EQ(CodeOf([&] {
              LoadDataset(WriteFile("bad3.csv", "s,x,prob\n1,a,0.5\n1,a,0.5\n"),
                          InputFormat::kAuto);
            }),
            2);
  EXPECT_EQ(CodeOf([&] { LoadDataset(TempPath("missing.csv"),
                                     InputFormat::kAuto); }),
            2);
}

TEST(FormatsTest, ValidationFailuresGiveDomainError) {
  // Sums to 0.9: parses fine, fails validation.
  EXPECT_EQ(CodeOf([&] {
              LoadDataset(WriteFile("domain.csv",
                                    "s,x,prob\n1,a,0.5\n2,b,0.4\n"),
                          InputFormat::kAuto);
            }),
            3);
}

TEST(FormatsTest, ExactFormattingRoundTrips) {
  for (double v : {0.1, 0.705, 1.0 / 3.0, 0.7200000000000001, 1e-17}) {
    const std::string text = FormatExact(v);
    EXPECT_EQ(std::stod(text), v) << text;
  }
  EXPECT_EQ(FormatSig9(0.724598), "0.724598");
}

TEST(FormatsTest, DistortionFileMatchedByLabel) {
  const std::string dataset_path = WriteFile("cond2.csv", kConditionalFile);
  const Dataset dataset = LoadDataset(dataset_path, InputFormat::kAuto);
  // Columns deliberately out of alphabet order.
  const std::string d_path = WriteFile("dist.csv",
                                       "y,b,a,c,d\n"
                                       "a,1,0,2,3\n"
                                       "b,0,1,2,3\n"
                                       "c,2,2,0,1\n"
                                       "d,3,3,1,0\n");
  const DistortionMatrix d =
      LoadDistortion(d_path, dataset.joint.x_alphabet());
  EXPECT_DOUBLE_EQ(d(0, 1), 1.0);  // a -> b
  EXPECT_DOUBLE_EQ(d(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(d(2, 3), 1.0);  // c -> d
  EXPECT_DOUBLE_EQ(d(3, 0), 3.0);  // d -> a
}

TEST(ExitCodesTest, ContractIsStable) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kParseError), 2);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kSumNotOne), 3);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kAlphaOutOfRange), 3);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kDeadSymbol), 3);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kInvalidDistortion), 3);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kLpInfeasible), 4);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNumericalBreakdown), 4);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kUnknownLabel), 5);
}

TEST(InspectCommandTest, ReportsReferenceLeakage) {
  const std::string path = WriteFile("inspect.csv", kConditionalFile);
  InspectOptions options;
  options.input_path = path;
  std::ostringstream out;
  EXPECT_EQ(RunInspect(options, out), 0);
  const std::string text = out.str();
  EXPECT_NE(text.find("ldp_bits: 2.32192809"), std::string::npos) << text;
  EXPECT_NE(text.find("log_lift_bits: 1.26303441"), std::string::npos);
  EXPECT_NE(text.find("entropy_x_bits: 1.88473675"), std::string::npos);
}

TEST(InspectCommandTest, NatsConversion) {
  const std::string path = WriteFile("inspect2.csv", kConditionalFile);
  InspectOptions options;
  options.input_path = path;
  options.nats = true;
  std::ostringstream out;
  EXPECT_EQ(RunInspect(options, out), 0);
  // log2(5) * ln(2) = ln(5)
  EXPECT_NE(out.str().find("ldp_nats: 1.60943791"), std::string::npos)
      << out.str();
}

TEST(InspectCommandTest, AlphaSection) {
  const std::string path = WriteFile("inspect3.csv", kConditionalFile);
  InspectOptions options;
  options.input_path = path;
  options.alpha = 0.5;
  std::ostringstream out;
  EXPECT_EQ(RunInspect(options, out), 0);
  const std::string text = out.str();
  EXPECT_NE(text.find("ldp_y_bits: 1.169925"), std::string::npos);
  EXPECT_NE(text.find("log_lift_y_bits: 0.710493383"), std::string::npos);
  EXPECT_NE(text.find("dtv_full_markov: 0.709"), std::string::npos);
}

TEST(MechanizeCommandTest, AlphaOutOfRangeIsDomainError) {
  const std::string path = WriteFile("mech0.csv", kConditionalFile);
  MechanizeOptions options;
  options.input_path = path;
  options.alpha = 0.0;
  options.family = "markov";
  std::ostringstream out;
  EXPECT_EQ(CodeOf([&] { RunMechanize(options, out); }), 3);
}

TEST(MechanizeCommandTest, DistortionFamilyRequiresFile) {
  const std::string path = WriteFile("mech1.csv", kConditionalFile);
  MechanizeOptions options;
  options.input_path = path;
  options.alpha = 0.5;
  options.family = "nonmarkov_distortion";
  std::ostringstream out;
  EXPECT_EQ(CodeOf([&] { RunMechanize(options, out); }), 3);
}

TEST(MechanizeCommandTest, WritesVerifiableMechanism) {
  const std::string path = WriteFile("mech2.csv", kConditionalFile);
  for (const char* family : {"markov", "nonmarkov_tv"}) {
    MechanizeOptions options;
    options.input_path = path;
    options.alpha = 0.5;
    options.family = family;
    options.out_path = TempPath(std::string("mech_out_") + family + ".csv");
    std::ostringstream unused;
    ASSERT_EQ(RunMechanize(options, unused), 0);

    const MechanismFile file = ReadMechanismFromPath(options.out_path);
    EXPECT_EQ(file.metadata.family, family);
    EXPECT_DOUBLE_EQ(file.metadata.alpha, 0.5);
    EXPECT_EQ(file.metadata.rng_id, "mt19937_64/u53");
    EXPECT_FALSE(file.metadata.input_hash.empty());
    EXPECT_TRUE(
        VerifyRealization(file.mechanism, ReferenceJoint(), Alpha(0.5))
            .Passes());
  }
}

TEST(MechanizeCommandTest, MarkovDiagonalsInFile) {
  const std::string path = WriteFile("mech_markov.csv", kConditionalFile);
  MechanizeOptions options;
  options.input_path = path;
  options.alpha = 0.5;
  options.family = "markov";
  options.out_path = TempPath("mech_markov_out.csv");
  std::ostringstream unused;
  ASSERT_EQ(RunMechanize(options, unused), 0);
  const MechanismFile file = ReadMechanismFromPath(options.out_path);
  // Stay probabilities 1 - alpha * (1 - P_X(x)), identical across secrets.
  const double expected[] = {0.705, 0.62, 0.61, 0.565};
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t x = 0; x < 4; ++x) {
      EXPECT_NEAR(file.mechanism(s, x, x), expected[x], 1e-12);
    }
  }
  // Hop probabilities alpha * P_X(y).
  EXPECT_NEAR(file.mechanism(0, 1, 0), 0.205, 1e-12);
}

TEST(InspectCommandTest, IndependentDatasetLeaksNothing) {
  const std::string path = WriteFile("indep.csv",
                                     "#P_S\n"
                                     "1,0.4\n"
                                     "2,0.6\n"
                                     "#P_X|S,a,b\n"
                                     "1,0.3,0.7\n"
                                     "2,0.3,0.7\n");
  InspectOptions options;
  options.input_path = path;
  std::ostringstream out;
  EXPECT_EQ(RunInspect(options, out), 0);
  EXPECT_NE(out.str().find("ldp_bits: 0\n"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("log_lift_bits: 0\n"), std::string::npos);
}

TEST(MechanizeCommandTest, TvDiagonalsInFile) {
  const std::string path = WriteFile("mech3.csv", kConditionalFile);
  MechanizeOptions options;
  options.input_path = path;
  options.alpha = 0.5;
  options.family = "nonmarkov_tv";
  options.out_path = TempPath("mech_diag.csv");
  std::ostringstream unused;
  ASSERT_EQ(RunMechanize(options, unused), 0);
  const MechanismFile file = ReadMechanismFromPath(options.out_path);
  EXPECT_NEAR(file.mechanism(0, 0, 0), 1.0, 1e-12);
  EXPECT_NEAR(file.mechanism(0, 1, 1), 1.0, 1e-12);
  EXPECT_NEAR(file.mechanism(0, 2, 2), 0.72, 1e-12);
  EXPECT_NEAR(file.mechanism(0, 3, 3), 0.825, 1e-12);
}

TEST(FormatsTest, MechanismFileWithoutAlphabetsRejected) {
  std::istringstream in("s,x_in,y,prob\n1,a,a,1\n");
  EXPECT_EQ(CodeOf([&] { ReadMechanism(in); }), 2);
}

TEST(FormatsTest, LoadRecordsRejectsDatasetFormats) {
  const std::string path = WriteFile("notrecords.csv", kConditionalFile);
  EXPECT_EQ(CodeOf([&] { LoadRecords(path, InputFormat::kAuto); }), 2);
}

TEST(FormatsTest, MechanismFileRoundTripsBitExactly) {
  const JointDistribution joint = ReferenceJoint();
  for (double a : {0.137, 0.5, 0.913}) {
    const Mechanism mechanism = TvOptimalMechanism(joint, Alpha(a));
    std::ostringstream out;
    MechanismMetadata metadata;
    metadata.family = "nonmarkov_tv";
    metadata.alpha = a;
    metadata.rng_id = "mt19937_64/u53";
    metadata.input_hash = "0";
    WriteMechanism(out, mechanism, metadata);
    std::istringstream in(out.str());
    const MechanismFile file = ReadMechanism(in);
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) {
          EXPECT_EQ(file.mechanism(s, x, y), mechanism(s, x, y));
        }
      }
    }
  }
}

std::vector<std::vector<std::string>> ParseTsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream fields_in(line);
    while (std::getline(fields_in, field, '\t')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

TEST(SweepCommandTest, GridParsing) {
  const auto grid = ParseAlphaGrid("0.011:1.0:0.05");
  ASSERT_EQ(grid.size(), 20u);
  EXPECT_NEAR(grid[0], 0.011, 1e-15);
  EXPECT_NEAR(grid[10], 0.511, 1e-12);
  EXPECT_NEAR(grid.back(), 0.961, 1e-12);

  const auto list = ParseAlphaGrid("0.25,0.5,1.0");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_DOUBLE_EQ(list[2], 1.0);

  EXPECT_EQ(CodeOf([] { ParseAlphaGrid("0:1:0.1"); }), 3);
  EXPECT_EQ(CodeOf([] { ParseAlphaGrid("nonsense"); }), 2);
}

TEST(SweepCommandTest, PinnedRowsAndByteStability) {
  const std::string path = WriteFile("sweep.csv", kConditionalFile);
  SweepOptions options;
  options.input_path = path;
  options.grid = "0.011:1.0:0.05";
  options.out_path = TempPath("sweep_a.tsv");
  std::ostringstream unused;
  ASSERT_EQ(RunSweep(options, unused), 0);
  options.out_path = TempPath("sweep_b.tsv");
  ASSERT_EQ(RunSweep(options, unused), 0);

  const std::string first = ReadAll(TempPath("sweep_a.tsv"));
  EXPECT_EQ(first, ReadAll(TempPath("sweep_b.tsv")));

  const auto rows = ParseTsv(first);
  ASSERT_FALSE(rows.empty());
  const auto& header = rows[0];
  ASSERT_EQ(header.size(), 11u);
  EXPECT_EQ(header[0], "alpha");
  EXPECT_EQ(header[6], "dtv_full");
  EXPECT_EQ(header[10], "family");

  bool found_markov_row = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row[10] == "markov" && row[0] == "0.511") {
      EXPECT_NEAR(std::stod(row[6]), 0.724598, 1e-6);
      found_markov_row = true;
    }
    if (row[10] == "nonmarkov_tv") {
      EXPECT_NEAR(std::stod(row[5]), 0.21 * std::stod(row[0]), 1e-9);
    }
  }
  EXPECT_TRUE(found_markov_row);
}

TEST(SweepCommandTest, RowsReconstructAndVerify) {
  const JointDistribution joint = ReferenceJoint();
  const DistortionMatrix hamming = DistortionMatrix::Hamming(4);
  const std::vector<double> grid = {0.2, 0.5, 0.9};
  const std::vector<Family> families = {Family::kMarkov, Family::kNonMarkovTv,
                                        Family::kNonMarkovDistortion};
  const auto points = ComputeSweep(joint, grid, families, hamming, 2);
  ASSERT_EQ(points.size(), 9u);
  for (const TradeoffPoint& point : points) {
    const Alpha alpha(point.alpha);
    Mechanism mechanism = [&] {
      switch (point.family) {
        case Family::kMarkov:
          return Mechanism::FromMarkov(
              MarkovMechanism::ForMarginal(joint.marginal_x(),
                                           joint.x_alphabet(), alpha),
              joint.s_alphabet());
        case Family::kNonMarkovTv:
          return TvOptimalMechanism(joint, alpha);
        case Family::kNonMarkovDistortion:
          return DistortionOptimalMechanism(joint, alpha, hamming);
      }
      throw Error(ErrorCode::kParseError, "unreachable");
    }();
    EXPECT_TRUE(VerifyRealization(mechanism, joint, alpha).Passes());
    // Utility columns match a recomputation through the induced channel.
    const MarkovMechanism channel = InducedChannel(mechanism, joint);
    const DtvPair dtv = Dtv(channel, joint.marginal_x());
    EXPECT_NEAR(dtv.half, point.dtv_half, 1e-12);
  }
}

TEST(SweepCommandTest, FamiliesAlphaOrdering) {
  const std::string path = WriteFile("sweep2.csv", kConditionalFile);
  SweepOptions options;
  options.input_path = path;
  options.grid = "0.2,0.5,1.0";
  options.families = {"markov", "nonmarkov_tv"};
  std::ostringstream out;
  ASSERT_EQ(RunSweep(options, out), 0);
  const auto rows = ParseTsv(out.str());
  ASSERT_EQ(rows.size(), 7u);  // header + 2 families * 3 alphas
  double prev = 0.0;
  std::string prev_family = rows[1][10];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][10] != prev_family) {
      prev = 0.0;
      prev_family = rows[i][10];
    }
    const double alpha = std::stod(rows[i][0]);
    EXPECT_GT(alpha, prev);
    prev = alpha;
    if (rows[i][0] == "1") {
      // Full reduction: perfect privacy in every family's row.
      EXPECT_NEAR(std::stod(rows[i][1]), 0.0, 1e-12);
      EXPECT_NEAR(std::stod(rows[i][2]), 0.0, 1e-12);
    }
  }
}

TEST(SweepCommandTest, SteppedGridEndpointIsExact) {
  // 0.05:1.0:0.05 must end exactly at 1.0 despite accumulated stepping.
  const auto grid = ParseAlphaGrid("0.05:1.0:0.05");
  ASSERT_EQ(grid.size(), 20u);
  EXPECT_EQ(grid.back(), 1.0);
}

TEST(SanitizeCommandTest, EndToEndDeterminism) {
  const JointDistribution joint = ReferenceJoint();
  std::string records_text = "s,x\n";
  for (const Record& r : SampleRecords(joint, 2000, 11)) {
    records_text += r.s + "," + r.x + "\n";
  }
  const std::string records_path = WriteFile("san_records.csv", records_text);
  const std::string dataset_path = WriteFile("san_data.csv", kConditionalFile);

  MechanizeOptions mech;
  mech.input_path = dataset_path;
  mech.alpha = 1.0;
  mech.family = "markov";
  mech.out_path = TempPath("san_mech.csv");
  std::ostringstream unused;
  ASSERT_EQ(RunMechanize(mech, unused), 0);

  SanitizeOptions sanitize;
  sanitize.records_path = records_path;
  sanitize.mechanism_path = mech.out_path;
  sanitize.seed = 42;
  sanitize.out_path = TempPath("san_out_a.csv");
  ASSERT_EQ(RunSanitize(sanitize, unused), 0);
  sanitize.out_path = TempPath("san_out_b.csv");
  ASSERT_EQ(RunSanitize(sanitize, unused), 0);

  const std::string first = ReadAll(TempPath("san_out_a.csv"));
  EXPECT_EQ(first, ReadAll(TempPath("san_out_b.csv")));
  EXPECT_NE(first.find("# seed: 42"), std::string::npos);
  EXPECT_NE(first.find("# rng: mt19937_64/u53"), std::string::npos);

  // Full reduction: outputs distribute like the public marginal.
  std::map<std::string, double> frequency;
  std::istringstream in(first);
  std::string line;
  double count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == "y") continue;
    frequency[line] += 1.0;
    count += 1.0;
  }
  EXPECT_NEAR(frequency["a"] / count, 0.41, 0.05);
}

TEST(SanitizeCommandTest, UndeclaredLabelExitsFive) {
  const std::string dataset_path = WriteFile("san_data2.csv", kConditionalFile);
  MechanizeOptions mech;
  mech.input_path = dataset_path;
  mech.alpha = 0.5;
  mech.family = "markov";
  mech.out_path = TempPath("san_mech2.csv");
  std::ostringstream unused;
  ASSERT_EQ(RunMechanize(mech, unused), 0);

  const std::string records_path =
      WriteFile("san_records2.csv", "s,x\n1,a\n9,zz\n");
  SanitizeOptions sanitize;
  sanitize.records_path = records_path;
  sanitize.mechanism_path = mech.out_path;
  sanitize.seed = 7;
  sanitize.out_path = TempPath("san_out2.csv");
  EXPECT_EQ(CodeOf([&] { RunSanitize(sanitize, unused); }), 5);
}

TEST(ThreadBudgetTest, EnvOverride) {
  setenv("LINSAN_THREADS", "3", 1);
  EXPECT_EQ(SweepThreadBudget(), 3u);
  setenv("LINSAN_THREADS", "not-a-number", 1);
  EXPECT_GE(SweepThreadBudget(), 1u);
  unsetenv("LINSAN_THREADS");
}

}  // namespace
}  // namespace linsan::cli
