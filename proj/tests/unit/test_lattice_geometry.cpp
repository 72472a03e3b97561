#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "symdual/error.hpp"
#include "symdual/lattice_geometry.hpp"
#include "test_support.hpp"

using namespace symdual;
using namespace symdual::testing;

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void for_each_box_point(int k, std::int64_t lo, std::int64_t hi,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(k), lo);
  while (true) {
    visit(x);
    int i = 0;
    while (i < k && x[static_cast<std::size_t>(i)] == hi) x[static_cast<std::size_t>(i++)] = lo;
    if (i == k) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

void check_partition(const SumPolyhedron& p, std::int64_t lo, std::int64_t hi) {
  auto orthants = cone_decompose(p);
  for_each_box_point(p.k, lo, hi, [&](const std::vector<std::int64_t>& x) {
    int hits = 0;
    for (const auto& o : orthants) hits += o.contains(x);
    ASSERT_EQ(hits, p.contains(x) ? 1 : 0);
  });
}

}  // namespace

TEST(ConeDecompose, ExamplePartitionsBox) { check_partition(cone_example(), -2, 12); }

TEST(ConeDecompose, OneDimensional) {
  SumPolyhedron p;
  p.k = 1;
  p.lower[S({1})] = 4;
  auto orthants = cone_decompose(p);
  ASSERT_EQ(orthants.size(), 1u);
  EXPECT_EQ(orthants[0].apex, std::vector<std::int64_t>{4});
  EXPECT_TRUE(orthants[0].fixed.empty());
}

TEST(ConeDecompose, Infeasible) {
  SumPolyhedron p;
  p.k = 2;
  p.lower[S({1})] = 0;
  p.lower[S({2})] = 0;
  p.lower[S({1, 2})] = 4;
  p.upper[S({1, 2})] = 3;
  EXPECT_TRUE(cone_decompose(p).empty());
  EXPECT_EQ(count_on_slice({}, 5), 0);
}

TEST(ConeDecompose, Preconditions) {
  SumPolyhedron p;
  p.k = 9;
  for (int i = 0; i < 9; ++i) p.lower[SubsetMask(1u << i)] = 0;
  try {
    cone_decompose(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionExceeded);
  }
  SumPolyhedron q;
  q.k = 2;
  q.lower[S({1})] = 0;
  EXPECT_THROW(cone_decompose(q), Error);
}

TEST(ConeDecompose, RandomPartitions) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    check_partition(random_polyhedron(rng, k), -4, k <= 3 ? 9 : 6);
  }
}

TEST(CountOnSlice, Example) {
  auto orthants = cone_decompose(cone_example());
  EXPECT_EQ(count_on_slice(orthants, 5), 5);
  EXPECT_EQ(count_on_slice(orthants, 3), 0);
  auto points = enumerate_slice(cone_example(), 5, kMaxBoxPoints);
  std::set<std::vector<std::int64_t>> got(points.begin(), points.end());
  std::set<std::vector<std::int64_t>> expected = {{1, 2, 2}, {2, 1, 2}, {1, 3, 1}, {2, 2, 1}, {3, 1, 1}};
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(enumerate_slice(cone_example(), 3, kMaxBoxPoints).empty());
}

TEST(CountOnSlice, FreeOrthantIsStarsAndBars) {
  for (int k = 1; k <= 5; ++k) {
    Orthant o{k, std::vector<std::int64_t>(static_cast<std::size_t>(k), 0), SubsetMask{}};
    for (std::int64_t n = 0; n <= 12; ++n) EXPECT_EQ(count_on_orthant(o, n), binomial(n + k - 1, k - 1));
  }
  Orthant low{2, {3, 4}, SubsetMask{}};
  EXPECT_EQ(count_on_orthant(low, 6), 0);
}

TEST(CountOnSlice, ShiftedBinomialIsWrong) {
  // all free, m = 3, no fixed part: the variant C(n - a + m - sum c_i, m - 1) with a = 0
  Orthant o{3, {1, 2, 0}, SubsetMask{}};
  const std::int64_t m = 3;
  std::int64_t mismatches = 0;
  for (std::int64_t n = 3; n <= 20; ++n) {
    BigInt direct = 0;
    for (std::int64_t a = 1; a <= n; ++a)
      for (std::int64_t b = 2; a + b <= n; ++b) direct += 1;
    EXPECT_EQ(count_on_orthant(o, n), direct);
    mismatches += binomial(n - 0 + m - o.apex_sum(), m - 1) != direct;
  }
  EXPECT_EQ(mismatches, 18);
}

TEST(CountOnSlice, RandomAgainstEnumeration) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    SumPolyhedron p = random_polyhedron(rng, k);
    auto orthants = cone_decompose(p);
    for (std::int64_t n = 0; n <= 25; ++n)
      ASSERT_EQ(count_on_slice(orthants, n),
                BigInt(enumerate_slice(p, n, kMaxBoxPoints).size()))
          << "trial " << trial << " n=" << n;
  }
}

TEST(CountOnSlice, PolynomialPastThreshold) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    auto orthants = cone_decompose(random_polyhedron(rng, k));
    std::int64_t t = std::max<std::int64_t>(polynomial_threshold(orthants), 0);
    // k-th finite differences of a degree k-1 polynomial vanish
    std::vector<BigInt> v;
    for (std::int64_t n = t; n <= t + 3 * k + 4; ++n) v.push_back(count_on_slice(orthants, n));
    for (int d = 0; d < k; ++d)
      for (std::size_t i = 0; i + 1 < v.size() - static_cast<std::size_t>(d); ++i) v[i] = v[i + 1] - v[i];
    for (std::size_t i = 0; i < v.size() - static_cast<std::size_t>(k); ++i) EXPECT_EQ(v[i], 0);
  }
}

TEST(EnumerateSlice, BoxLimit) {
  SumPolyhedron p;
  p.k = 4;
  for (int i = 0; i < 4; ++i) p.lower[SubsetMask(1u << i)] = -3;
  try {
    enumerate_slice(p, 2000, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoxTooLarge);
  }
}
