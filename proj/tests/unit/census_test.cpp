#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixfactor/census.hpp"
#include "fixfactor/errors.hpp"
#include "oracles.hpp"

namespace fixfactor::census {
namespace {

TEST(EnumeratePreorders, LabeledCountsMatchBruteForce) {
  const std::size_t expected[] = {0, 1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_preorders(n).size(), expected[n]);
    EXPECT_EQ(oracle::preorders(n).size(), expected[n]);
  }
}

TEST(EnumeratePreorders, SameSetAsBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto got = enumerate_preorders(n);
    const auto want = oracle::preorders(n);
    EXPECT_EQ(std::set(got.begin(), got.end()), std::set(want.begin(), want.end()));
  }
}

// Orbits of labeled preorders under point permutations.
std::size_t brute_iso_count(std::size_t n) {
  std::set<std::vector<std::uint64_t>> canonical;
  for (const auto& up : oracle::preorders(n)) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
      std::vector<std::uint64_t> image(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (up[x] >> y & 1) image[perm[x]] |= std::uint64_t{1} << perm[y];
        }
      }
      if (best.empty() || image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    canonical.insert(best);
  }
  return canonical.size();
}

TEST(EnumeratePreorders, IsomorphismClasses) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_preorders(n, true).size(), brute_iso_count(n)) << n;
  EXPECT_EQ(enumerate_preorders(5, true).size(), 139u);
  EXPECT_EQ(enumerate_preorders(6, true).size(), 718u);
}

TEST(ContinuousMaps, MatchBruteForce) {
  for (const auto& up : oracle::preorders(3)) {
    const auto space = space_from_masks(up);
    auto want = oracle::monotone_maps(oracle::space_of(up));
    std::sort(want.begin(), want.end());
    EXPECT_EQ(continuous_maps(space), want);
  }
}

TEST(EnumerateSystems, SmallCounts) {
  EXPECT_EQ(enumerate_preorders(2).size(), 4u);
  EXPECT_EQ(enumerate_preorders(3).size(), 29u);
  std::size_t sierpinski_systems = 0;
  for (const auto& sys : enumerate_systems(2)) {
    if (sys.space.specializes(0, 1) && !sys.space.specializes(1, 0)) ++sierpinski_systems;
  }
  EXPECT_EQ(sierpinski_systems, 3u);
  EXPECT_EQ(enumerate_systems(3).size(), oracle::all_systems(3).size() - oracle::all_systems(2).size());
}

TEST(EnumerateSystems, SizeLimits) {
  try {
    for_each_system(6, false, [](FiniteSystem) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size);
  }
  EXPECT_THROW(for_each_system(7, true, [](FiniteSystem) {}), Error);
}

TEST(SampleSystems, DeterministicAndValid) {
  const auto a = sample_systems(5, 20, 42);
  const auto b = sample_systems(5, 20, 42);
  EXPECT_EQ(a, b);
  for (const auto& sys : a) EXPECT_EQ(sys.size(), 5u);
}

TEST(RunCensus, ThreePointsAllTheoremChecksPass) {
  CensusOptions options;
  options.points = 3;
  options.checks = {"oracle-equivalence", "stabilization-degree-0", "absolute-stability-finest", "definition-direct"};
  const auto report = run_census(options);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.topologies, 1u + 4u + 29u);
  EXPECT_EQ(report.systems, oracle::all_systems(3).size());
  for (const auto& [name, tally] : report.checks) EXPECT_EQ(tally.passed + tally.failed, report.systems) << name;
  EXPECT_EQ(report.stabilization_histogram.at("0"), report.systems);
}

TEST(RunCensus, ErgodicCountMatchesLevelSetOracle) {
  CensusOptions options;
  options.points = 3;
  options.checks = {"ergodicity-equivalence"};
  const auto report = run_census(options);
  std::size_t ergodic = 0;
  for (const auto& sys : oracle::all_systems(3)) ergodic += oracle::count_classes(oracle::level_set_labels(sys)) == 1;
  EXPECT_EQ(report.ergodic, ergodic);
}

TEST(RunCensus, ContainmentCounterexampleIsMinimal) {
  CensusOptions options;
  options.points = 3;
  options.checks = {"containment-lemma-plain"};
  const auto report = run_census(options);
  const auto& tally = report.checks.at("containment-lemma-plain");
  ASSERT_TRUE(tally.counterexample.has_value());
  EXPECT_EQ(tally.counterexample->points, 2u);
  // Replaying the stored system reproduces the failure.
  const auto replay = run_checks(tally.counterexample->system, {"containment-lemma-plain"});
  ASSERT_EQ(replay.size(), 1u);
  EXPECT_FALSE(replay[0].passed);
}

TEST(RunCensus, IndependentOfJobCount) {
  CensusOptions options;
  options.points = 3;
  options.checks = {"all"};
  const auto one = report_to_json(run_census(options));
  options.jobs = 4;
  EXPECT_EQ(report_to_json(run_census(options)), one);
}

TEST(Checks, UnknownNameIsUsageError) {
  try {
    (void)resolve_checks({"no-such-check"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::usage);
  }
  EXPECT_EQ(resolve_checks({"all"}), check_names());
}

}  // namespace
}  // namespace fixfactor::census
