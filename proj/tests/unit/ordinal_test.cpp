#include <gtest/gtest.h>

#include <random>

#include "fixfactor/errors.hpp"
#include "fixfactor/ordinal.hpp"

namespace fixfactor {
namespace {

// Dense coefficient vector indexed by exponent; an independent model of
// ordinals below w^w.
using Dense = std::vector<std::uint64_t>;
constexpr std::size_t dense_width = 4;

Dense dense(const OrdinalCNF& o) {
  Dense d(dense_width, 0);
  for (const auto& t : o.terms()) d[t.exponent] = t.coefficient;
  return d;
}

int dense_compare(const Dense& a, const Dense& b) {
  for (std::size_t e = dense_width; e-- > 0;) {
    if (a[e] != b[e]) return a[e] < b[e] ? -1 : 1;
  }
  return 0;
}

Dense dense_add(const Dense& a, const Dense& b) {
  std::size_t lead = dense_width;
  for (std::size_t e = dense_width; e-- > 0;) {
    if (b[e] != 0) {
      lead = e;
      break;
    }
  }
  if (lead == dense_width) return a;
  Dense out(dense_width, 0);
  for (std::size_t e = lead + 1; e < dense_width; ++e) out[e] = a[e];
  out[lead] = a[lead] + b[lead];
  for (std::size_t e = 0; e < lead; ++e) out[e] = b[e];
  return out;
}

OrdinalCNF random_ordinal(std::mt19937_64& rng) {
  std::vector<OrdinalCNF::Term> terms;
  for (std::uint32_t e = 3; e-- > 0;) {
    if (rng() % 2) terms.push_back({e, 1 + rng() % 3});
  }
  return OrdinalCNF::from_terms(terms);
}

TEST(OrdinalParse, Examples) {
  EXPECT_TRUE(OrdinalCNF::parse("0").is_zero());
  const auto a = OrdinalCNF::parse("w+1");
  ASSERT_EQ(a.terms().size(), 2u);
  EXPECT_EQ(a.terms()[0].exponent, 1u);
  EXPECT_EQ(a.terms()[0].coefficient, 1u);
  EXPECT_EQ(a.terms()[1].exponent, 0u);
  const auto b = OrdinalCNF::parse("w^2+w*3+2");
  EXPECT_EQ(b, OrdinalCNF::from_terms({{2, 1}, {1, 3}, {0, 2}}));
}

TEST(OrdinalParse, RoundTripsCanonicalText) {
  for (const char* text : {"0", "1", "7", "w", "w*2", "w+3", "w^2", "w^3*4+w+1", "w^10*2+w^4+5"}) {
    EXPECT_EQ(OrdinalCNF::parse(text).format(), text);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto o = random_ordinal(rng);
    EXPECT_EQ(OrdinalCNF::parse(o.format()), o);
  }
}

TEST(OrdinalParse, RejectsMalformedAndNonCanonical) {
  for (const char* text : {"", "+", "w+", "1+w", "w+w", "w*1", "w^1", "w^0", "w^w", "01", "w*0", "x", "w^2+w^3", "-1", "2+1"}) {
    try {
      (void)OrdinalCNF::parse(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ordinal) << text;
    }
  }
}

TEST(OrdinalOrder, Examples) {
  EXPECT_GT(OrdinalCNF::parse("w"), OrdinalCNF::finite(5));
  EXPECT_EQ(OrdinalCNF::parse("w").successor(), OrdinalCNF::parse("w+1"));
  EXPECT_TRUE(OrdinalCNF::parse("w").is_limit());
  EXPECT_TRUE(OrdinalCNF::parse("w*2").is_limit());
  EXPECT_FALSE(OrdinalCNF::parse("w+3").is_limit());
  EXPECT_TRUE(OrdinalCNF::parse("w+3").is_successor());
  EXPECT_EQ(compare(OrdinalCNF::parse("w^2"), OrdinalCNF::parse("w*9+9")), std::strong_ordering::greater);
}

TEST(OrdinalOrder, MatchesDenseModel) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_ordinal(rng);
    const auto b = random_ordinal(rng);
    const int expected = dense_compare(dense(a), dense(b));
    const auto got = a <=> b;
    EXPECT_EQ(got < 0, expected < 0);
    EXPECT_EQ(got == 0, expected == 0);
    EXPECT_EQ(dense(a + b), dense_add(dense(a), dense(b)));
  }
}

TEST(OrdinalOrder, TotalOrderLaws) {
  std::mt19937_64 rng(9);
  std::vector<OrdinalCNF> sample;
  for (int i = 0; i < 60; ++i) sample.push_back(random_ordinal(rng));
  for (const auto& a : sample) {
    EXPECT_TRUE(a == a);
    for (const auto& b : sample) {
      EXPECT_EQ((a < b) + (a == b) + (b < a), 1);
      for (const auto& c : sample) {
        if (a < b && b < c) {
          EXPECT_LT(a, c);
        }
      }
    }
  }
}

TEST(OrdinalOrder, SuccessorHasNothingBetween) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_ordinal(rng);
    const auto s = a.successor();
    EXPECT_LT(a, s);
    EXPECT_EQ(s.predecessor(), a);
    EXPECT_TRUE(s.is_successor());
    for (int j = 0; j < 30; ++j) {
      const auto b = random_ordinal(rng);
      EXPECT_FALSE(a < b && b < s);
    }
    if (!a.is_zero()) {
      EXPECT_NE(a.is_limit(), a.is_successor());
    }
  }
  EXPECT_FALSE(OrdinalCNF{}.is_limit());
  EXPECT_FALSE(OrdinalCNF{}.is_successor());
}

TEST(OrdinalArithmetic, AdditionLaws) {
  const auto w = OrdinalCNF::omega_power(1);
  EXPECT_EQ(OrdinalCNF::finite(1) + w, w);
  EXPECT_EQ(w + OrdinalCNF::finite(1), OrdinalCNF::parse("w+1"));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_ordinal(rng);
    const auto b = random_ordinal(rng);
    const auto c = random_ordinal(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + OrdinalCNF{}, a);
    EXPECT_EQ(OrdinalCNF{} + a, a);
    EXPECT_LE(a, a + b);
    EXPECT_EQ(a + OrdinalCNF::finite(1), a.successor());
  }
}

TEST(OrdinalFromTerms, RejectsNonCanonicalTerms) {
  EXPECT_THROW((void)OrdinalCNF::from_terms({{1, 0}}), Error);
  EXPECT_THROW((void)OrdinalCNF::from_terms({{1, 1}, {2, 1}}), Error);
  EXPECT_EQ(OrdinalCNF::finite(4).finite_value(), 4u);
  EXPECT_FALSE(OrdinalCNF::parse("w").finite_value().has_value());
}

}  // namespace
}  // namespace fixfactor
