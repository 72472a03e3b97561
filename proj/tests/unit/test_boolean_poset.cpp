#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "symdual/boolean_poset.hpp"
#include "symdual/error.hpp"
#include "test_support.hpp"

using namespace symdual;
using symdual::testing::S;

namespace {

// brute force: every family of subsets closed under supersets
std::size_t count_up_sets(int c) {
  const std::uint32_t n = 1u << c;
  std::size_t count = 0;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    bool closed = true;
    for (std::uint32_t b = 0; b < n && closed; ++b)
      if ((f >> b) & 1u)
        for (int i = 0; i < c; ++i)
          if (!((f >> (b | (1u << i))) & 1u)) closed = false;
    count += closed;
  }
  return count;
}

}  // namespace

TEST(SubsetMask, Complement) {
  EXPECT_EQ(complement(SubsetMask{}, 3), S({1, 2, 3}));
  EXPECT_EQ(complement(S({1, 2}), 3), S({3}));
  EXPECT_EQ(complement(S({2}), 3), S({1, 3}));
}

TEST(SubsetMask, StandardOrder) {
  EXPECT_TRUE(standard_before(S({1, 2, 3}), S({2, 3})));
  EXPECT_TRUE(standard_before(S({2, 3}), S({1})));
  EXPECT_EQ(subset_lex_compare(S({1, 3}), S({1, 3})), std::strong_ordering::equal);
  std::vector<SubsetMask> expected = {S({1, 2, 3}), S({1, 2}), S({1, 3}), S({2, 3}),
                                      S({1}),       S({2}),    S({3}),    SubsetMask{}};
  EXPECT_EQ(standard_order(3), expected);
}

TEST(SubsetMask, StandardOrderIsTotal) {
  for (int c = 1; c <= 5; ++c) {
    auto order = standard_order(c);
    ASSERT_EQ(order.size(), std::size_t{1} << c);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      EXPECT_TRUE(standard_before(order[i], order[i + 1]));
      EXPECT_GE(order[i].size(), order[i + 1].size());
    }
  }
}

TEST(Family, ComplementFamily) {
  Family j = Family::of(3, {S({1, 2}), S({2, 3}), S({1, 3}), S({1, 2, 3})});
  EXPECT_EQ(complement_family(j), Family::of(3, {S({3}), S({1}), S({2}), SubsetMask{}}));
  EXPECT_TRUE(complement_family(Family(3)).empty());
  Family ideal = upper_closure(Family::of(3, {S({2}), S({3})})).family();
  EXPECT_EQ(complement_family(ideal),
            Family::of(3, {S({1, 3}), S({1, 2}), S({3}), S({1}), S({2}), SubsetMask{}}));
}

TEST(Family, ComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Family f = Family::from_word(4, rng() & 0xffff);
    EXPECT_EQ(complement_family(complement_family(f)), f);
  }
}

TEST(OrderIdeal, UpperClosure) {
  EXPECT_EQ(upper_closure(Family::of(3, {S({2}), S({3})})).family(),
            Family::of(3, {S({2}), S({3}), S({1, 2}), S({2, 3}), S({1, 3}), S({1, 2, 3})}));
  EXPECT_EQ(upper_closure(Family::of(3, {S({1, 2, 3})})).family(), Family::of(3, {S({1, 2, 3})}));
  EXPECT_TRUE(upper_closure(Family(3)).family().empty());
}

TEST(OrderIdeal, FromFamilyValidates) {
  EXPECT_THROW(OrderIdeal::from_family(Family::of(3, {S({1})})), Error);
  EXPECT_NO_THROW(OrderIdeal::from_family(Family::of(2, {S({1}), S({1, 2})})));
}

TEST(Antichain, MinimalElements) {
  EXPECT_EQ(minimal_elements(Family::of(3, {S({2}), S({1, 2}), S({2, 3})})).family(),
            Family::of(3, {S({2})}));
  Family rest = Family::everything(3) - upper_closure(Family::of(3, {S({2}), S({3})})).family();
  rest.erase(SubsetMask{});
  EXPECT_EQ(minimal_elements(rest).family(), Family::of(3, {S({1})}));
  EXPECT_THROW(Antichain::from_family(Family::of(2, {S({1}), S({1, 2})})), Error);
}

TEST(Antichain, BijectionWithOrderIdeals) {
  for (int c = 1; c <= 4; ++c) {
    auto ideals = enumerate_order_ideals(c);
    std::set<Family> seen;
    for (const auto& j : ideals) {
      Antichain a = minimal_elements(j.family());
      EXPECT_EQ(upper_closure(a.family()).family(), j.family());
      EXPECT_TRUE(seen.insert(a.family()).second);
    }
    EXPECT_EQ(enumerate_antichains(c).size(), ideals.size());
  }
}

TEST(OrderIdeal, DedekindCounts) {
  EXPECT_EQ(enumerate_order_ideals(1).size(), 3u);
  EXPECT_EQ(enumerate_order_ideals(2).size(), 6u);
  EXPECT_EQ(enumerate_order_ideals(3).size(), 20u);
  EXPECT_EQ(enumerate_order_ideals(4).size(), 168u);
  EXPECT_EQ(enumerate_order_ideals(5).size(), 7581u);
  EXPECT_EQ(enumerate_antichains(1).size(), 3u);
  EXPECT_EQ(enumerate_antichains(3).size(), 20u);
  for (int c = 1; c <= 4; ++c) EXPECT_EQ(enumerate_order_ideals(c).size(), count_up_sets(c));
}

TEST(OrderIdeal, DedekindSixByVisitor) {
  std::size_t count = 0;
  for_each_order_ideal_word(6, [&](std::uint64_t) { ++count; });
  EXPECT_EQ(count, 7828354u);
  EXPECT_EQ(proper_order_ideal_words(6).size(), 7828352u);
}

TEST(OrderIdeal, EnumerationCap) {
  Limits tight;
  tight.enumeration_max_c = 3;
  EXPECT_THROW(enumerate_order_ideals(4, tight), Error);
  try {
    enumerate_order_ideals(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientSizeExceeded);
  }
}

TEST(OrderIdeal, ComplementOfIdealIsLowerSet) {
  // complements of an upper set form a lower set, and 2^[c] minus an upper set is a lower set
  for (const auto& j : enumerate_order_ideals(4)) {
    Family comp = complement_family(j.family());
    EXPECT_EQ(lower_closure(comp), comp);
    Family rest = Family::everything(4) - j.family();
    EXPECT_EQ(lower_closure(rest), rest);
  }
}

TEST(Words, AgreeWithFamilies) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int c = 1 + static_cast<int>(rng() % 6);
    std::uint64_t mask = c == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << c)) - 1;
    std::uint64_t w = rng() & mask;
    Family f = Family::from_word(c, w);
    EXPECT_EQ(words::upper_closure(w, c), upper_closure(f).family().word());
    EXPECT_EQ(words::lower_closure(w, c), lower_closure(f).word());
    EXPECT_EQ(words::minimal_elements(w, c), minimal_elements(f).family().word());
    EXPECT_EQ(words::complement_family(w, c), complement_family(f).word());
  }
}
