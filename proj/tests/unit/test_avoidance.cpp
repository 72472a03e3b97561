#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symdual/avoidance.hpp"
#include "symdual/error.hpp"
#include "test_support.hpp"

using namespace symdual;
using symdual::testing::S;

namespace {

FiberCounts counts(int c, std::initializer_list<std::pair<SubsetMask, std::int64_t>> entries) {
  FiberCounts k(c);
  for (auto [t, v] : entries) k.add(t, v);
  return k;
}

bool is_avoiding(std::span<const SubsetMask> f, std::span<const SubsetMask> g,
                 const std::vector<std::size_t>& sigma) {
  std::set<std::size_t> image(sigma.begin(), sigma.end());
  if (image.size() != f.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (sigma[i] >= g.size() || !f[i].disjoint(g[sigma[i]])) return false;
  return true;
}

// roles of f and g swapped: for every order ideal I, sum_I l_S <= sum_I k_{S^C}
bool swapped_condition(const FiberCounts& k, const FiberCounts& l, int c) {
  for (const auto& j : enumerate_order_ideals(c)) {
    std::int64_t lhs = 0, rhs = 0;
    for (SubsetMask t : j.family().members()) {
      lhs += l[t];
      rhs += k[complement(t, c)];
    }
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace

TEST(Avoidance, SmallExamples) {
  EXPECT_TRUE(avoidance_feasible(counts(2, {{S({1}), 1}}), counts(2, {{S({2}), 1}})));
  EXPECT_FALSE(avoidance_feasible(counts(1, {{S({1}), 1}}), counts(1, {{S({1}), 1}})));
  auto cert = find_violated_ideal(counts(1, {{S({1}), 1}}), counts(1, {{S({1}), 1}}));
  ASSERT_TRUE(cert.has_value());
}

TEST(Avoidance, TotalMismatch) {
  try {
    avoidance_feasible(counts(2, {{S({1}), 2}}), counts(2, {{S({2}), 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TotalMismatch);
  }
}

TEST(Avoidance, DualMonomialHasNoAvoidingPermutation) {
  // A = columns {12},{13},{23},∅ against B = A_2(2)*A_3(2) at n = 4
  std::vector<SubsetMask> f = {S({1, 2}), S({1, 3}), S({2, 3}), SubsetMask{}};
  std::vector<SubsetMask> b = {S({2}), S({2}), S({3}), S({3})};
  EXPECT_FALSE(find_avoiding_permutation(3, f, b).sigma.has_value());
  std::vector<SubsetMask> bc;
  for (auto t : b) bc.push_back(complement(t, 3));
  EXPECT_FALSE(find_avoiding_permutation(3, f, bc).sigma.has_value());
}

TEST(Avoidance, ConstructiveExamples) {
  std::vector<SubsetMask> empty2 = {SubsetMask{}, SubsetMask{}};
  std::vector<SubsetMask> g = {S({1}), S({2})};
  auto r = find_avoiding_permutation(2, empty2, g);
  ASSERT_TRUE(r.sigma.has_value());
  EXPECT_TRUE(is_avoiding(empty2, g, *r.sigma));

  std::vector<SubsetMask> f = {S({1}), S({2})};
  r = find_avoiding_permutation(2, f, g);
  ASSERT_TRUE(r.sigma.has_value());
  EXPECT_EQ(*r.sigma, (std::vector<std::size_t>{1, 0}));
}

TEST(Avoidance, RandomAgainstBruteForce) {
  std::mt19937_64 rng(42);
  int feasible = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int c = 1 + static_cast<int>(rng() % 3);
    std::size_t n = 1 + rng() % 7;
    auto f = symdual::testing::random_values(rng, c, n);
    auto g = symdual::testing::random_values(rng, c, n);
    auto r = find_avoiding_permutation(c, f, g);
    auto brute = brute_force_avoidance(f, g);
    ASSERT_EQ(r.sigma.has_value(), brute.has_value()) << "trial " << trial;
    FiberCounts k = FiberCounts::of(c, f);
    FiberCounts l = FiberCounts::of(c, g);
    EXPECT_EQ(avoidance_feasible(k, l), brute.has_value());
    EXPECT_EQ(swapped_condition(k, l, c), brute.has_value());
    if (r.sigma) {
      ++feasible;
      EXPECT_TRUE(is_avoiding(f, g, *r.sigma));
      EXPECT_FALSE(r.certificate.has_value());
    } else {
      // the certificate is a proper ideal with sum_J k_T > sum_J l_{T^C}
      ASSERT_TRUE(r.certificate.has_value());
      std::int64_t lhs = 0, rhs = 0;
      for (SubsetMask t : r.certificate->family().members()) {
        lhs += k[t];
        rhs += l[complement(t, c)];
      }
      EXPECT_GT(lhs, rhs);
    }
  }
  EXPECT_GT(feasible, 1000);
  EXPECT_LT(feasible, 9000);
}

TEST(Avoidance, SigmaIsZeroBased) {
  std::vector<SubsetMask> f = {S({1}), S({1}), S({2})};
  std::vector<SubsetMask> g = {S({1}), S({2}), S({2})};
  auto r = find_avoiding_permutation(2, f, g);
  ASSERT_TRUE(r.sigma.has_value());
  EXPECT_TRUE(is_avoiding(f, g, *r.sigma));
}
