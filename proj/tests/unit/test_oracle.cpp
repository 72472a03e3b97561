#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symdual/counting.hpp"
#include "symdual/error.hpp"
#include "symdual/oracle.hpp"
#include "test_support.hpp"

using namespace symdual;
using namespace symdual::testing;

TEST(ExpandOrbit, Sizes) {
  auto orbit = expand_orbit(TypeVector(3, {{S({2}), 2}, {S({3}), 2}}), 4);
  EXPECT_EQ(orbit.size(), 6u);
  EXPECT_EQ(std::set<DenseMonomial>(orbit.begin(), orbit.end()).size(), 6u);
  EXPECT_EQ(expand_orbit(TypeVector(2, {{S({1, 2}), 3}}), 3).size(), 1u);
  auto row = expand_orbit(TypeVector(1, {{S({1}), 1}}), 3);
  std::set<std::uint32_t> bits;
  for (const auto& m : row) bits.insert(m.bits);
  EXPECT_EQ(bits, (std::set<std::uint32_t>{1, 2, 4}));
}

TEST(ExpandOrbit, CanonicalFormIsInvariant) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int c = 1 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 5);
    TypeVector tv = random_type_vector(rng, c, n);
    auto orbit = expand_orbit(tv, n);
    EXPECT_EQ(BigInt(orbit.size()), orbit_size(tv, n));
    for (const auto& m : orbit) EXPECT_EQ(m.orbit(), tv);
  }
}

TEST(ExpandOrbit, TooLarge) {
  try {
    expand_orbit(TypeVector(3, {{S({1}), 1}}), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InstanceTooLarge);
  }
}

TEST(BruteInDual, Examples) {
  auto gens = expand_system(GeneratorSystem(1, {TypeVector(1, {{S({1}), 1}})}), 1);
  EXPECT_TRUE(brute_in_dual(gens, DenseMonomial{1, 1, 1}));
  EXPECT_FALSE(brute_in_dual(gens, DenseMonomial{1, 1, 0}));
  auto one = expand_system(one_orbit_system(), 4);
  auto b = DenseMonomial::of_matrix(standard_matrix(TypeVector(3, {{S({2}), 2}, {S({3}), 2}}), 4));
  EXPECT_TRUE(brute_in_dual(one, b));
  EXPECT_THROW(brute_in_dual(one, DenseMonomial{3, 5, 0}), Error);
}

TEST(BruteMinGens, Examples) {
  EXPECT_EQ(brute_min_gens_dual(one_orbit_system(), 4).size(), 15u);
  EXPECT_EQ(brute_min_gens_dual(two_orbit_system(), 4).size(), 14u);
  EXPECT_EQ(brute_min_gens_dual(GeneratorSystem(1, {TypeVector(1, {{S({1}), 1}})}), 3),
            std::vector<TypeVector>{TypeVector(1, {{S({1}), 3}})});
  EXPECT_THROW(brute_min_gens_dual(one_orbit_system(), 7), Error);
}

TEST(BruteMinGens, ScanAgrees) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int c = 1 + static_cast<int>(rng() % 3);
    GeneratorSystem g = random_system(rng, c, 2, 3);
    std::int64_t n = std::min<std::int64_t>(g.max_weight() + 1, 18 / c);
    if (n < g.max_weight()) continue;
    EXPECT_EQ(brute_min_gens_dual(g, n), scan_min_gens_dual(g, n));
  }
}

TEST(BruteDivides, Examples) {
  TypeVector b(3, {{S({2}), 3}, {S({3}), 1}});
  EXPECT_TRUE(brute_divides(b, b, 4));
  EXPECT_TRUE(brute_divides(TypeVector(3, {{S({2}), 3}}), b, 4));
  EXPECT_FALSE(brute_divides(TypeVector(3, {{S({2}), 3}}), TypeVector(3, {{S({2}), 2}, {S({3}), 2}}), 4));
  EXPECT_THROW(brute_divides(b, b, 8), Error);
}

TEST(BruteFVector, ZeroIdealBelowWidth) {
  // below the generator width the ideal is zero and every monomial is a face
  GeneratorSystem g = two_orbit_system();
  auto f = brute_f_vector(g, 2);
  for (std::int64_t j = 0; j <= 5; ++j)
    EXPECT_EQ(f.at(j), BigInt(type_vectors_of_degree(3, j + 1, 2).size())) << "j=" << j;
}

TEST(BruteFVector, EdgeExample) { EXPECT_EQ(brute_f_vector(edge_system(), 3).at(1), 3); }

TEST(Involution, Holds) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    GeneratorSystem g = random_system(rng, 2, 2, 3);
    EXPECT_TRUE(brute_dual_involution_check(g, 3));
  }
  EXPECT_TRUE(brute_dual_involution_check(one_orbit_system(), 4));
  EXPECT_TRUE(brute_dual_involution_check(two_orbit_system(), 4));
}

TEST(Involution, ReversesInclusion) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    int c = 1 + static_cast<int>(rng() % 3);
    int n = std::min(4, 16 / c);
    GeneratorSystem small = random_system(rng, c, 1, std::min(n, 3));
    auto extra = random_type_vector(rng, c, std::min(n, 3), false);
    std::vector<TypeVector> both = small.generators();
    both.push_back(extra);
    GeneratorSystem big(c, both);
    auto small_gens = expand_system(small, n);
    auto big_gens = expand_system(big, n);
    auto ideal_small = brute_ideal_table(small_gens, c, n);
    auto ideal_big = brute_ideal_table(big_gens, c, n);
    auto dual_small = brute_dual_table(small_gens, c, n);
    auto dual_big = brute_dual_table(big_gens, c, n);
    for (std::size_t x = 0; x < ideal_small.size(); ++x) {
      if (ideal_small[x]) EXPECT_TRUE(ideal_big[x]);
      if (dual_big[x]) EXPECT_TRUE(dual_small[x]);
    }
  }
}

TEST(Involution, DualIsSymmetric) {
  auto gens = expand_system(two_orbit_system(), 4);
  auto dual = brute_dual_table(gens, 3, 4);
  auto minimal = minimal_members(dual, 12);
  std::set<std::uint32_t> set(minimal.begin(), minimal.end());
  for (auto m : minimal) {
    DenseMonomial d{3, 4, m};
    for (const auto& other : expand_orbit(d.orbit(), 4)) EXPECT_TRUE(set.count(other.bits));
  }
}
