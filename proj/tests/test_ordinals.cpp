#include <gtest/gtest.h>

#include <array>
#include <random>

#include "hindlab/error.hpp"
#include "hindlab/ordinals.hpp"

using namespace hindlab;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }

// Ordinals below w^3 as (c2, c1, c0) with the textbook addition.
using Small = std::array<std::uint64_t, 3>;

Small small_add(const Small& a, const Small& b) {
  if (b[0] > 0) return {a[0] + b[0], b[1], b[2]};
  if (b[1] > 0) return {a[0], a[1] + b[1], b[2]};
  return {a[0], a[1], a[2] + b[2]};
}

Ordinal from_small(const Small& s) {
  std::vector<Ordinal::Term> terms;
  for (int i = 0; i < 3; ++i) {
    if (s[i] > 0) terms.push_back({Ordinal::nat(2 - i), s[i]});
  }
  return Ordinal::from_terms(terms);
}

// Largeness straight from the recursion: 0-large always; (a+1)-large iff
// nonempty and the rest is a-large; limit l: l[min]-large.
bool large_by_recursion(std::vector<unsigned> set, const Ordinal& alpha) {
  if (alpha.is_zero()) return true;
  if (set.empty()) return false;
  if (alpha.is_successor()) {
    set.erase(set.begin());
    return large_by_recursion(set, predecessor(alpha));
  }
  return large_by_recursion(set, fundamental_sequence(alpha, set.front()));
}

}  // namespace

TEST(Ordinal, CompareExamples) {
  EXPECT_LT(O("w*2+1"), O("w^2"));
  EXPECT_EQ(O("0"), Ordinal::nat(0));
  EXPECT_GT(O("w^w"), O("w^3"));
  EXPECT_LT(O("w^2*3+w+5"), O("w^2*3+w*2"));
  EXPECT_LT(O("5"), O("w"));
}

TEST(Ordinal, ArithmeticExamples) {
  EXPECT_EQ(add(O("w"), O("1")), O("w+1"));
  EXPECT_EQ(add(O("1"), O("w")), O("w"));
  EXPECT_EQ(mul_nat(O("w^2*3+w"), 2), O("w^2*6+w"));
  EXPECT_EQ(omega_pow(O("0")), O("1"));
  EXPECT_EQ(add(O("w^2+w*3"), O("w^2*2+1")), O("w^2*3+1"));
}

TEST(Ordinal, SmallModelAgrees) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    Small a{rng() % 4, rng() % 4, rng() % 4}, b{rng() % 4, rng() % 4, rng() % 4};
    EXPECT_EQ(add(from_small(a), from_small(b)), from_small(small_add(a, b)));
    const std::uint64_t k = 1 + rng() % 4;
    Small r = a;
    for (std::uint64_t i = 1; i < k; ++i) r = small_add(r, a);
    EXPECT_EQ(mul_nat(from_small(a), k), from_small(r));
    EXPECT_EQ(compare(from_small(a), from_small(b)), a <=> b);
    EXPECT_TRUE(add(from_small(a), from_small(b)).well_formed());
  }
}

TEST(Ordinal, AdditionIsAssociativeNotCommutative) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    Small a{rng() % 3, rng() % 3, rng() % 3}, b{rng() % 3, rng() % 3, rng() % 3}, c{rng() % 3, rng() % 3, rng() % 3};
    const auto x = from_small(a), y = from_small(b), z = from_small(c);
    EXPECT_EQ(add(add(x, y), z), add(x, add(y, z)));
  }
  EXPECT_NE(add(O("1"), O("w")), add(O("w"), O("1")));
}

TEST(Ordinal, FundamentalSequenceExamples) {
  EXPECT_EQ(fundamental_sequence(O("w"), 3), O("3"));
  EXPECT_EQ(fundamental_sequence(O("w^2"), 2), O("w*2"));
  EXPECT_EQ(fundamental_sequence(O("w^2+w"), 4), O("w^2+4"));
  EXPECT_EQ(fundamental_sequence(O("w^w"), 3), O("w^3"));
  EXPECT_EQ(fundamental_sequence(O("w*2"), 0), O("w"));
  EXPECT_THROW(fundamental_sequence(O("w+1"), 2), NotALimit);
  EXPECT_THROW(fundamental_sequence(O("0"), 2), NotALimit);
}

TEST(Ordinal, FundamentalSequenceIsIncreasingBelowLimit) {
  for (const char* text : {"w", "w^2", "w^2*2+w", "w^w", "w^(w+1)", "w^(w^w)+w^3"}) {
    const auto l = O(text);
    for (std::uint64_t n = 0; n < 12; ++n) {
      const auto a = fundamental_sequence(l, n), b = fundamental_sequence(l, n + 1);
      EXPECT_LT(a, l) << text;
      EXPECT_LT(a, b) << text;
      EXPECT_TRUE(a.well_formed());
    }
  }
}

TEST(Ordinal, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "7", "w", "w+5", "w^2*3+w+5", "w^w", "w^(w+1)*2+w^3", "w^(w^2*2)+1"}) {
    EXPECT_EQ(to_string(O(text)), text);
  }
  EXPECT_EQ(to_string(O("w^2*3+w*1+5")), "w^2*3+w+5");
  EXPECT_EQ(to_string(O("w + w")), "w*2");
  EXPECT_THROW(O("w^"), ParseError);
  EXPECT_THROW(O("x"), ParseError);
  EXPECT_THROW(O("w*0"), ParseError);
  EXPECT_THROW(Ordinal::from_terms({{Ordinal::nat(0), 1}, {Ordinal::nat(1), 1}}), InvalidElement);
}

TEST(Largeness, Examples) {
  const std::vector<unsigned> any{3, 4};
  EXPECT_TRUE(is_alpha_large(any, O("0")));
  EXPECT_TRUE(is_alpha_large(std::vector<unsigned>{5}, O("1")));
  EXPECT_TRUE(is_alpha_large(std::vector<unsigned>{2, 5, 9}, O("w")));
  EXPECT_FALSE(is_alpha_large(std::vector<unsigned>{3}, O("w")));
  EXPECT_FALSE(is_alpha_large(std::vector<unsigned>{}, O("1")));
  EXPECT_TRUE(is_alpha_large(std::vector<unsigned>{}, O("0")));
}

TEST(Largeness, MatchesRecursion) {
  std::mt19937_64 rng(13);
  const std::vector<Ordinal> alphas{O("1"), O("3"), O("w"), O("w+2"), O("w*2"), O("w*3+1"), O("w^2"), O("w^2+w")};
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<unsigned> set;
    for (unsigned v = 1; v <= 14; ++v) {
      if (rng() % 3 == 0) set.push_back(v);
    }
    for (const auto& a : alphas) EXPECT_EQ(is_alpha_large(set, a), large_by_recursion(set, a));
  }
}

TEST(Largeness, PartitionPiece) {
  const std::vector<unsigned> a{1, 2, 3};
  EXPECT_EQ(partition_large_piece(a, {{1, 3}, {2}}, O("0")).index, std::optional<std::size_t>(0));
  EXPECT_EQ(partition_large_piece(a, {{}, {1, 2, 3}}, O("0")).index, std::optional<std::size_t>(1));
  EXPECT_THROW(partition_large_piece(a, {{1}, {2}}, O("0")), PreconditionFailed);
  EXPECT_THROW(partition_large_piece(a, {{1, 2}, {2, 3}}, O("0")), PreconditionFailed);
  // {1,2} is not 3-large, so it cannot be split into two pieces with the guarantee.
  EXPECT_THROW(partition_large_piece(std::vector<unsigned>{1, 2}, {{1}, {2}}, O("0")), PreconditionFailed);
}

TEST(Largeness, LeastLargeSet) {
  EXPECT_EQ(large_length_set(O("0"), 4, 10), std::optional<IntSet>(IntSet{4}));
  EXPECT_EQ(large_length_set(O("1"), 2, 10), std::optional<IntSet>(IntSet{2, 3}));
  EXPECT_EQ(large_length_set(O("1"), 3, 10), std::optional<IntSet>(IntSet{3, 4, 5}));
  EXPECT_EQ(large_length_set(O("0"), 5, 4), std::nullopt);
  EXPECT_EQ(large_length_set(O("1"), 3, 4), std::nullopt);
  const auto b = large_length_set(O("2"), 1, 64);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(is_alpha_large(*b, O("w^2")));
}

TEST(Largeness, LeastLargeSetIsLexicographicallyLeast) {
  // Compare against brute force over all subsets of [m, 10].
  for (unsigned m = 1; m <= 4; ++m) {
    for (const char* beta : {"0", "1"}) {
      const Ordinal alpha = omega_pow(O(beta));
      std::optional<IntSet> best;
      for (std::uint32_t mask = 1; mask < (1u << (11 - m)); ++mask) {
        IntSet s;
        for (unsigned i = 0; i < 11 - m; ++i) {
          if (mask >> i & 1) s.push_back(m + i);
        }
        if (large_by_recursion(s, alpha) && (!best || s < *best)) best = s;
      }
      EXPECT_EQ(large_length_set(O(beta), m, 10), best) << beta << " " << m;
    }
  }
}
