#include <gtest/gtest.h>

#include "fixfactor/decomposition.hpp"
#include "fixfactor/errors.hpp"
#include "oracles.hpp"

namespace fixfactor {
namespace {

using oracle::Mask;

FiniteSystem cycle6(std::size_t step) {
  std::vector<std::string> pts;
  std::vector<std::size_t> f;
  for (std::size_t i = 0; i < 6; ++i) {
    pts.push_back(std::to_string(i));
    f.push_back((i + step) % 6);
  }
  return make_system(FiniteSpace::build(pts, {}), f);
}

// Discrete {a, b, c} with a and b swapped and c fixed.
FiniteSystem swap_ab() { return make_system(FiniteSpace::build({"a", "b", "c"}, {}), {1, 0, 2}); }
FiniteSystem sierpinski(std::vector<std::size_t> f) {
  return make_system(FiniteSpace::build({"a", "b"}, {{"a", "b"}}), std::move(f));
}

PointSet named(const FiniteSystem& s, std::initializer_list<const char*> pts) {
  PointSet out(s.size());
  for (const char* p : pts) out.insert(s.space.require(p));
  return out;
}

Partition parts(std::vector<std::size_t> labels) { return Partition::from_labels(labels); }

TEST(Aorb0, Examples) {
  const auto c = cycle6(2);
  EXPECT_EQ(aorb0(c, 0), named(c, {"0", "2", "4"}));
  const auto s = sierpinski({0, 1});
  EXPECT_EQ(aorb0(s, 1), named(s, {"a", "b"}));
  const auto w = swap_ab();
  EXPECT_EQ(aorb0(w, 0), named(w, {"a", "b"}));
}

TEST(Aorb0, MatchesDefinitionOnCensus) {
  for (const auto& sys : oracle::all_systems(3)) {
    for (std::size_t x = 0; x < sys.size(); ++x) {
      EXPECT_EQ(oracle::mask_of(aorb0(sys, x)), oracle::aorb0(sys, x));
      EXPECT_EQ(reference_intersection(sys, ReferenceMode::base, x), aorb0(sys, x));
    }
  }
}

TEST(GeneratedPartition, Examples) {
  std::vector<PointSet> singles;
  for (std::size_t x = 0; x < 4; ++x) singles.push_back(PointSet::singleton(4, x));
  EXPECT_EQ(generated_partition(4, singles), Partition::identity(4));
  std::vector<PointSet> whole(4, PointSet::full(4));
  EXPECT_EQ(generated_partition(4, whole), Partition::single(4));
  const auto c = cycle6(2);
  std::vector<PointSet> cover;
  for (std::size_t x = 0; x < 6; ++x) cover.push_back(aorb0(c, x));
  EXPECT_EQ(generated_partition(6, cover), parts({0, 1, 0, 1, 0, 1}));
}

TEST(GeneratedPartition, RejectsCoverMissingItsPoint) {
  std::vector<PointSet> cover{PointSet::singleton(2, 1), PointSet::singleton(2, 1)};
  try {
    (void)generated_partition(2, cover);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cover);
  }
}

TEST(Sorb0, Examples) {
  EXPECT_EQ(sorb0_partition(swap_ab()), parts({0, 0, 1}));
  EXPECT_EQ(sorb0_partition(sierpinski({0, 0})).class_count(), 1u);
}

TEST(Sorb0, FiniteLadderGeneratorIsOneClass) {
  // Two fixed ends joined by an orbit a0 -> a1 -> a2 whose points each sit
  // over both ends, as in the finite shadow of a strand.
  const auto space = FiniteSpace::build({"lo", "hi", "a0", "a1", "a2"},
                                        {{"lo", "a0"}, {"lo", "a1"}, {"lo", "a2"}, {"hi", "a0"}, {"hi", "a1"}, {"hi", "a2"}});
  const auto sys = make_system(space, {0, 1, 3, 4, 4});
  EXPECT_EQ(sorb0_partition(sys).class_count(), 1u);
  EXPECT_EQ(oracle_partition(sys).class_count(), 1u);
}

TEST(MinSaturatedOpen, Examples) {
  for (const auto& sys : oracle::all_systems(3)) {
    const std::size_t n = sys.size();
    for (std::size_t x = 0; x < n; ++x) {
      EXPECT_EQ(min_saturated_open_nbhd(sys, Partition::identity(n), x), sys.space.minimal_open(x));
      EXPECT_EQ(min_saturated_open_nbhd(sys, Partition::single(n), x), PointSet::full(n));
    }
  }
  const auto w = swap_ab();
  const auto p = parts({0, 0, 1});
  EXPECT_EQ(min_saturated_open_nbhd(w, p, 0), named(w, {"a", "b"}));
  EXPECT_EQ(min_saturated_open_nbhd(w, p, 2), named(w, {"c"}));
}

TEST(SorbClosure, Examples) {
  const auto chain = make_system(FiniteSpace::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {0, 1, 2});
  const auto p = parts({0, 1, 1});
  const auto u = named(chain, {"b"});
  EXPECT_EQ(sorb_closure(chain, p, u), PointSet::full(3));
  EXPECT_EQ(oracle::sorb_closure(chain.space, oracle::labels_of(p), oracle::mask_of(u)), Mask{7});
  EXPECT_EQ(sorb_closure(chain, Partition::identity(3), u), chain.space.closure(u));
  EXPECT_EQ(sorb_closure(chain, Partition::single(3), u), PointSet::full(3));
}

TEST(AorbSucc, Examples) {
  const auto w = swap_ab();
  EXPECT_EQ(aorb_succ(w, sorb0_partition(w), 0), named(w, {"a", "b"}));
  const auto s = sierpinski({0, 0});
  EXPECT_EQ(aorb_succ(s, sorb0_partition(s), 1), PointSet::full(2));
  EXPECT_EQ(aorb_succ(w, Partition::single(3), 2), PointSet::full(3));
}

// Every partition of n points with invariant classes, as label vectors.
std::vector<std::vector<std::size_t>> invariant_partitions(const FiniteSystem& sys) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = sys.size();
  std::vector<std::size_t> rgs(n, 0);
  const auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      for (std::size_t x = 0; x < n; ++x) {
        if (rgs[sys.map(x)] != rgs[x]) return;
      }
      out.push_back(rgs);
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      rgs[i] = c;
      self(self, i + 1, c == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  return out;
}

TEST(AorbSucc, MatchesDefinitionForEveryInvariantPartition) {
  for (const auto& sys : oracle::all_systems(3)) {
    for (const auto& labels : invariant_partitions(sys)) {
      const auto p = Partition::from_labels(labels);
      for (std::size_t x = 0; x < sys.size(); ++x) {
        EXPECT_EQ(oracle::mask_of(aorb_succ(sys, p, x)), oracle::aorb_succ(sys, labels, x));
      }
    }
  }
}

TEST(ReferenceIntersection, SierpinskiAndSizeBound) {
  const auto s = sierpinski({0, 1});
  EXPECT_EQ(reference_intersection(s, ReferenceMode::base, 1), PointSet::full(2));
  std::vector<std::string> pts;
  std::vector<std::size_t> f;
  for (std::size_t i = 0; i < 13; ++i) {
    pts.push_back("x" + std::to_string(i));
    f.push_back(i);
  }
  const auto big = make_system(FiniteSpace::build(pts, {}), f);
  try {
    (void)reference_intersection(big, ReferenceMode::base, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size);
  }
}

TEST(DegreeStep, FixpointsAndCollapse) {
  const auto w = swap_ab();
  const auto p0 = sorb0_partition(w);
  EXPECT_EQ(degree_step(w, p0), p0);
  EXPECT_EQ(degree_step(w, Partition::single(3)), Partition::single(3));
  for (const auto& sys : oracle::all_systems(3)) {
    const auto p = sorb0_partition(sys);
    const auto next = degree_step(sys, p);
    EXPECT_TRUE(p.refines(next));
    if (sys.space.is_discrete()) {
      EXPECT_EQ(next, p);
    }
  }
}

TEST(Stabilize, Examples) {
  const auto w = swap_ab();
  const auto t = stabilize(w);
  EXPECT_TRUE(t.stabilization_degree.is_zero());
  EXPECT_EQ(t.entries.front().partition, parts({0, 0, 1}));
  EXPECT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[0].partition, t.entries[1].partition);
  const auto s = stabilize(sierpinski({0, 0}));
  EXPECT_EQ(s.stationary().class_count(), 1u);
  EXPECT_EQ(t.at(OrdinalCNF::finite(5)), t.stationary());
}

TEST(Stabilize, TraceInvariantsOnCensus) {
  for (const auto& sys : oracle::all_systems(3)) {
    const auto t = stabilize(sys);
    const auto level = oracle::level_set_labels(sys);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      const auto& p = t.entries[i].partition;
      if (i > 0) {
        EXPECT_LT(t.entries[i - 1].degree, t.entries[i].degree);
        EXPECT_TRUE(t.entries[i - 1].partition.refines(p));
      }
      EXPECT_TRUE(p.refines(Partition::from_labels(level)));
      for (const auto& cls : p.classes()) EXPECT_TRUE(sys.map.image(cls).is_subset_of(cls));
    }
    EXPECT_TRUE(oracle::same_partition(oracle::labels_of(t.stationary()), level));
  }
}

TEST(Quotient, Examples) {
  const auto s = sierpinski({0, 1});
  const auto id = quotient(s, Partition::identity(2));
  EXPECT_EQ(id.quotient.size(), 2u);
  EXPECT_TRUE(id.quotient.space.specializes(0, 1));
  const auto w = swap_ab();
  EXPECT_EQ(quotient(w, Partition::single(3)).quotient.size(), 1u);
  const auto q = quotient(w, parts({0, 0, 1}));
  EXPECT_EQ(q.quotient.size(), 2u);
  EXPECT_TRUE(q.quotient.space.is_discrete());
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(q.projection[w.map(x)], q.quotient.map(q.projection[x]));
    EXPECT_EQ(q.quotient.map(q.projection[x]), q.projection[x]);
  }
}

TEST(Quotient, RejectsNonInvariantClasses) {
  try {
    (void)quotient(swap_ab(), parts({0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invariance);
  }
}

TEST(Quotient, ProjectionIsContinuousAndCommutes) {
  for (const auto& sys : oracle::all_systems(3)) {
    const auto q = quotient(sys, stabilize(sys).stationary());
    EXPECT_TRUE(q.quotient.space.is_discrete());
    for (std::size_t x = 0; x < sys.size(); ++x) {
      EXPECT_EQ(q.projection[sys.map(x)], q.quotient.map(q.projection[x]));
      for (std::size_t y = 0; y < sys.size(); ++y) {
        if (sys.space.specializes(x, y)) {
          EXPECT_TRUE(q.quotient.space.specializes(q.projection[x], q.projection[y]));
        }
      }
    }
  }
}

TEST(Oracle, Examples) {
  const auto c = cycle6(2);
  EXPECT_EQ(oracle_partition(c).class_count(), 2u);
  EXPECT_EQ(fixed_space_dimension(c), 2u);
  for (std::vector<std::size_t> f : {std::vector<std::size_t>{0, 0}, {0, 1}, {1, 1}}) {
    EXPECT_EQ(oracle_partition(sierpinski(f)).class_count(), 1u);
  }
}

TEST(Oracle, MatchesLevelSetsOfInvariantFunctions) {
  for (const auto& sys : oracle::all_systems(3)) {
    const auto level = oracle::level_set_labels(sys);
    EXPECT_TRUE(oracle::same_partition(oracle::labels_of(oracle_partition(sys)), level));
    EXPECT_EQ(fixed_space_dimension(sys), oracle::count_classes(level));
  }
}

TEST(Ergodic, Examples) {
  EXPECT_TRUE(is_topologically_ergodic(sierpinski({0, 0})));
  EXPECT_FALSE(is_topologically_ergodic(swap_ab()));
  EXPECT_EQ(fixed_space_dimension(swap_ab()), 2u);
  EXPECT_TRUE(is_topologically_ergodic(cycle6(1)));
}

TEST(Prolongation, Examples) {
  const auto s = sierpinski({0, 1});
  EXPECT_EQ(prolongation_d1(s, 1), PointSet::full(2));
  for (const auto& sys : oracle::all_systems(3)) {
    for (std::size_t x = 0; x < sys.size(); ++x) {
      EXPECT_EQ(prolongation_d1(sys, x), aorb0(sys, x));
      EXPECT_EQ(prolongation_d2(sys, x), prolongation_d1(sys, x));
    }
  }
}

TEST(ForwardOrbit, IsLeastInvariantSuperset) {
  for (const auto& sys : oracle::all_systems(3)) {
    for (Mask m = 1; m <= oracle::full_mask(sys.size()); ++m) {
      const Mask expected = oracle::intersect_all(
          sys.size(), [&](Mask c) { return (m & ~c) == 0 && oracle::is_invariant(sys, c); });
      EXPECT_EQ(oracle::mask_of(forward_orbit(sys, oracle::set_of(sys.size(), m))), expected);
    }
  }
}

}  // namespace
}  // namespace fixfactor
