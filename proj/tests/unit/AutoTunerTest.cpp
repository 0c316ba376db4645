/**
 * @file AutoTunerTest.cpp
 * @brief Search space, reductions, metric providers and the full-search tuner.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <random>

#include "lanemd/Errors.h"
#include "lanemd/tuning/AutoTuner.h"
#include "lanemd/tuning/Configuration.h"
#include "lanemd/tuning/MetricProvider.h"
#include "lanemd/tuning/Reduction.h"

using namespace lanemd;

namespace {

SearchSpaceOptions linkedCellsC01C08() {
  SearchSpaceOptions o;
  o.containers = {ContainerKind::linkedCells};
  o.traversals = {TraversalKind::lc_c01, TraversalKind::lc_c08};
  return o;
}

Configuration config(ContainerKind c, TraversalKind t, bool n3, PatternKind p) { return {c, t, n3, p}; }

std::filesystem::path tempFile(const std::string &name, const std::string &content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(ConfigurationTest, twelveConfigsForC01AndC08) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  ASSERT_EQ(space.size(), 12);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(space[k].traversal, TraversalKind::lc_c01);
    EXPECT_FALSE(space[k].newton3);
  }
  EXPECT_TRUE(std::is_sorted(space.begin(), space.end()));
}

TEST(ConfigurationTest, clusterContainerDropsCellTraversals) {
  SearchSpaceOptions o;
  o.containers = {ContainerKind::verletClusterLists};
  o.traversals = {TraversalKind::lc_c08};
  EXPECT_THROW(enumerateSearchSpace(o), InvalidConfigurationError);
  o.traversals = {TraversalKind::lc_c08, TraversalKind::vcl};
  for (const auto &c : enumerateSearchSpace(o)) EXPECT_EQ(c.traversal, TraversalKind::vcl);
}

TEST(ConfigurationTest, singleOptionsGiveOneConfig) {
  SearchSpaceOptions o;
  o.containers = {ContainerKind::linkedCells};
  o.traversals = {TraversalKind::lc_c18};
  o.newton3 = {true};
  o.patterns = {PatternKind::halfByTwo};
  const auto space = enumerateSearchSpace(o);
  ASSERT_EQ(space.size(), 1);
  EXPECT_EQ(space[0], config(ContainerKind::linkedCells, TraversalKind::lc_c18, true, PatternKind::halfByTwo));
}

TEST(ConfigurationTest, fullSpaceSize) { EXPECT_EQ(enumerateSearchSpace({}).size(), 28); }

TEST(ConfigurationTest, emptyListThrows) {
  SearchSpaceOptions o;
  o.patterns.clear();
  EXPECT_THROW(enumerateSearchSpace(o), InvalidConfigurationError);
}

TEST(ConfigurationTest, validity) {
  EXPECT_FALSE(isValid(config(ContainerKind::linkedCells, TraversalKind::lc_c01, true, PatternKind::oneByV)));
  EXPECT_TRUE(isValid(config(ContainerKind::linkedCells, TraversalKind::lc_c01, false, PatternKind::oneByV)));
  EXPECT_FALSE(isValid(config(ContainerKind::linkedCells, TraversalKind::vcl, true, PatternKind::oneByV)));
  EXPECT_FALSE(isValid(config(ContainerKind::verletClusterLists, TraversalKind::lc_c18, true, PatternKind::oneByV)));
  EXPECT_TRUE(isValid(config(ContainerKind::verletClusterLists, TraversalKind::vcl, false, PatternKind::vByOne)));
}

TEST(ConfigurationTest, stringRoundTrip) {
  for (const auto &c : enumerateSearchSpace({})) EXPECT_EQ(configurationFromString(c.toString()), c);
  EXPECT_EQ(configurationFromString("LinkedCells,lc_c08,true,2/VectorLengthDiv2").newton3, true);
  EXPECT_THROW(configurationFromString("LinkedCells,lc_c01,on,1/VectorLength"), InvalidConfigurationError);
  EXPECT_THROW(configurationFromString("LinkedCells,lc_c08,on"), InvalidConfigurationError);
  EXPECT_THROW(configurationFromString("Octree,lc_c08,on,1/VectorLength"), InvalidConfigurationError);
}

TEST(ReductionTest, examples) {
  const std::vector<double> s{3., 5., 7.};
  EXPECT_EQ(reduceSamples(s, Reduction::mean), 5.);
  EXPECT_EQ(reduceSamples(s, Reduction::min), 3.);
  EXPECT_EQ(reduceSamples(std::vector<double>{3., 9., 5.}, Reduction::median), 5.);
  EXPECT_EQ(reduceSamples(std::vector<double>{4., 1., 3., 2.}, Reduction::median), 2.5);
  EXPECT_THROW(reduceSamples(std::vector<double>{}, Reduction::mean), InvalidParameterError);
  EXPECT_EQ(reductionFromString("median"), Reduction::median);
  EXPECT_THROW(reductionFromString("max"), InvalidParameterError);
}

TEST(SelectOptimumTest, examples) {
  const auto a = config(ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::oneByV);
  const auto b = config(ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::vByOne);
  const auto c = config(ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::twoByHalf);
  std::vector<Evidence> ev{{a, {10.}, 10., false}, {b, {7.}, 7., false}, {c, {9.}, 9., false}};
  EXPECT_EQ(selectOptimum(ev), b);
  std::vector<Evidence> tie{{a, {5.}, 5., false}, {b, {5.}, 5., false}};
  EXPECT_EQ(selectOptimum(tie), a);
  std::vector<Evidence> single{{c, {1.}, 1., false}};
  EXPECT_EQ(selectOptimum(single), c);
}

TEST(SelectOptimumTest, missingEvidenceThrows) {
  const auto a = config(ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::oneByV);
  EXPECT_THROW(selectOptimum(std::vector<Evidence>{}), InvalidParameterError);
  EXPECT_THROW(selectOptimum(std::vector<Evidence>{{a, {}, 0., false}}), InvalidParameterError);
}

TEST(SelectOptimumTest, failedEvidenceIsSkipped) {
  const auto a = config(ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::oneByV);
  const auto b = config(ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::vByOne);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(selectOptimum(std::vector<Evidence>{{a, {}, inf, true}, {b, {3.}, 3., false}}), b);
}

TEST(SpeedupTest, examples) {
  EXPECT_DOUBLE_EQ(computeSpeedup(10., 8.), 1.25);
  EXPECT_DOUBLE_EQ(computeSpeedup(4.5, 4.5), 1.);
  EXPECT_DOUBLE_EQ(computeSpeedup(22., 10.), 2.2);
  EXPECT_THROW(computeSpeedup(1., 0.), InvalidParameterError);
}

TEST(MetricProviderTest, laneOpsIsLaneSlots) {
  LaneOpMetric m;
  KernelStats s;
  s.laneSlots = 1234;
  m.beginRegion();
  EXPECT_EQ(m.endRegion(s), 1234.);
  EXPECT_EQ(m.name(), "laneops");
}

TEST(MetricProviderTest, wallClockIsNonNegative) {
  WallClockMetric m;
  m.beginRegion();
  EXPECT_GE(m.endRegion({}), 0.);
}

TEST(MetricProviderTest, replayReadsFileInOrder) {
  const auto path = tempFile("lanemd_replay_ok.txt", "1.5\n\n2\n  3.25  \n");
  auto m = ReplayMetric::fromFile(path);
  EXPECT_EQ(m.endRegion({}), 1.5);
  EXPECT_EQ(m.endRegion({}), 2.);
  EXPECT_EQ(m.endRegion({}), 3.25);
  EXPECT_THROW(m.endRegion({}), IoError);
}

TEST(MetricProviderTest, replayRejectsBadInput) {
  EXPECT_THROW(ReplayMetric::fromFile(tempFile("lanemd_replay_bad.txt", "1\nabc\n")), ParseError);
  EXPECT_THROW(ReplayMetric::fromFile(tempFile("lanemd_replay_neg.txt", "-1\n")), ParseError);
  EXPECT_THROW(ReplayMetric::fromFile("/nonexistent/replay.txt"), IoError);
}

TEST(MetricProviderTest, factory) {
  EXPECT_EQ(makeMetricProvider("time")->name(), "time");
  EXPECT_EQ(makeMetricProvider("laneops")->name(), "laneops");
  const auto path = tempFile("lanemd_replay_factory.txt", "4\n");
  EXPECT_EQ(makeMetricProvider("replay:" + path.string())->name(), "replay");
  EXPECT_THROW(makeMetricProvider("joules"), InvalidParameterError);
}

TEST(AutoTunerTest, phaseLengthIsSamplesTimesConfigs) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 10;
  policy.tuningInterval = 500;
  AutoTuner tuner(space, policy);
  std::size_t tuningIterations = 0;
  for (std::size_t it = 0; it < 500; ++it) {
    tuner.next(it);
    if (tuner.inTuningPhase()) ++tuningIterations;
    tuner.addSample(1. + static_cast<double>(it % 7));
  }
  EXPECT_EQ(tuningIterations, 120);
}

TEST(AutoTunerTest, configsCycleInEnumerationOrder) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 2;
  policy.tuningInterval = 30;
  AutoTuner tuner(space, policy);
  for (std::size_t it = 0; it < 24; ++it) {
    EXPECT_EQ(tuner.next(it), space[it / 2]);
    tuner.addSample(5.);
  }
  EXPECT_FALSE(tuner.inTuningPhase());
  EXPECT_EQ(tuner.next(24), space[0]);  // tie: first wins
  for (std::size_t it = 24; it < 30; ++it) {
    tuner.next(it);
    EXPECT_FALSE(tuner.inTuningPhase());
  }
  tuner.next(30);
  EXPECT_TRUE(tuner.inTuningPhase());
  EXPECT_EQ(tuner.phase(), 1);
}

TEST(AutoTunerTest, singleConfigAlwaysChosen) {
  const auto space = std::vector<Configuration>{
      config(ContainerKind::verletClusterLists, TraversalKind::vcl, true, PatternKind::halfByTwo)};
  TuningPolicy policy;
  policy.samplesPerConfig = 1;
  policy.tuningInterval = 1;
  AutoTuner tuner(space, policy);
  for (std::size_t it = 0; it < 10; ++it) {
    EXPECT_EQ(tuner.next(it), space[0]);
    EXPECT_TRUE(tuner.inTuningPhase());
    tuner.addSample(1.);
  }
  EXPECT_EQ(tuner.selectedPerPhase().size(), 10);
}

TEST(AutoTunerTest, cheapestConfigSelected) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  const auto cheap = space[7];
  TuningPolicy policy;
  policy.samplesPerConfig = 3;
  policy.tuningInterval = 40;
  AutoTuner tuner(space, policy);
  for (std::size_t it = 0; it < 200; ++it) {
    const auto &c = tuner.next(it);
    tuner.addSample(c == cheap ? 1. : 2. + static_cast<double>(it % 3));
  }
  ASSERT_EQ(tuner.selectedPerPhase().size(), 5);
  for (const auto &s : tuner.selectedPerPhase()) EXPECT_EQ(s, cheap);
}

TEST(AutoTunerTest, everyConfigGetsExactlySSamples) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 4;
  policy.tuningInterval = 60;
  AutoTuner tuner(space, policy);
  std::size_t it = 0;
  for (; it < 48; ++it) {
    tuner.next(it);
    tuner.addSample(1.);
  }
  for (const auto &e : tuner.evidence()) EXPECT_EQ(e.samples.size(), 4);
}

TEST(AutoTunerTest, rebuildSamplesAreRetaken) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 2;
  policy.tuningInterval = 100;
  policy.maxRetakes = 2;
  AutoTuner tuner(space, policy);
  tuner.next(0);
  tuner.addSample(100., true);  // displaced
  EXPECT_EQ(tuner.retakes(), 1);
  EXPECT_EQ(tuner.next(1), space[0]);
  tuner.addSample(100., true);  // displaced again
  tuner.next(2);
  tuner.addSample(100., true);  // retake limit reached: accepted
  EXPECT_EQ(tuner.retakes(), 2);
  EXPECT_EQ(tuner.evidence()[0].samples.size(), 1);
  tuner.next(3);
  tuner.addSample(1.);
  EXPECT_EQ(tuner.evidence()[0].samples, (std::vector<double>{100., 1.}));
  EXPECT_EQ(tuner.next(4), space[1]);
}

TEST(AutoTunerTest, retakesCanBeDisabled) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 1;
  policy.tuningInterval = 12;
  policy.retakeOnRebuild = false;
  AutoTuner tuner(space, policy);
  tuner.next(0);
  tuner.addSample(3., true);
  EXPECT_EQ(tuner.retakes(), 0);
  EXPECT_EQ(tuner.next(1), space[1]);
}

TEST(AutoTunerTest, failedConfigIsNeverSelected) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 1;
  policy.tuningInterval = 12;
  AutoTuner tuner(space, policy);
  for (std::size_t it = 0; it < 12; ++it) {
    tuner.next(it);
    if (it == 0) {
      tuner.reportFailure();
    } else {
      tuner.addSample(10. + static_cast<double>(it));
    }
  }
  ASSERT_EQ(tuner.selectedPerPhase().size(), 1);
  EXPECT_EQ(tuner.selectedPerPhase()[0], space[1]);
  EXPECT_TRUE(std::isinf(tuner.evidence()[0].reducedValue));
}

TEST(AutoTunerTest, argminInvariantUnderPositiveScaling) {
  const auto space = enumerateSearchSpace(linkedCellsC01C08());
  TuningPolicy policy;
  policy.samplesPerConfig = 3;
  policy.tuningInterval = 36;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(1., 100.);
  std::vector<double> values(360);
  for (auto &v : values) v = u(rng);
  std::vector<Configuration> reference;
  for (double scale : {1., 0.001, 3.7, 1e6}) {
    AutoTuner tuner(space, policy);
    for (std::size_t it = 0; it < values.size(); ++it) {
      tuner.next(it);
      tuner.addSample(values[it] * scale);
    }
    if (reference.empty()) reference = tuner.selectedPerPhase();
    EXPECT_EQ(tuner.selectedPerPhase(), reference) << scale;
  }
}

TEST(AutoTunerTest, intervalShorterThanPhaseThrows) {
  TuningPolicy policy;
  policy.samplesPerConfig = 3;
  policy.tuningInterval = 35;
  EXPECT_THROW(AutoTuner(enumerateSearchSpace(linkedCellsC01C08()), policy), InvalidParameterError);
  EXPECT_THROW(AutoTuner({}, TuningPolicy{}), InvalidConfigurationError);
}
