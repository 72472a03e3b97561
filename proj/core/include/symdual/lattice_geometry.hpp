#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symdual/orbit_monomials.hpp"

namespace symdual {

inline constexpr int kMaxPolyhedronDim = 8;

// {x ∈ R^k : Σ_{i∈T} x_i ≥ a_T for T in lower, Σ_{i∈T} x_i ≤ b_T for T in upper}.
// Subsets of [k] use the SubsetMask bit convention. Every coordinate needs a
// singleton lower bound; other missing keys mean no constraint.
struct SumPolyhedron {
  int k = 0;
  std::map<SubsetMask, std::int64_t> lower;
  std::map<SubsetMask, std::int64_t> upper;

  bool contains(const std::vector<std::int64_t>& x) const;
};

// x_i = apex_i for i in fixed, x_i ≥ apex_i otherwise.
struct Orthant {
  int k = 0;
  std::vector<std::int64_t> apex;
  SubsetMask fixed;

  bool contains(const std::vector<std::int64_t>& x) const;
  int free_count() const { return k - fixed.size(); }
  std::int64_t apex_sum() const;
  bool operator==(const Orthant&) const = default;
};

std::vector<Orthant> cone_decompose(const SumPolyhedron& p);

BigInt count_on_orthant(const Orthant& o, std::int64_t n);
BigInt count_on_slice(const std::vector<Orthant>& orthants, std::int64_t n);
// Every n at or above this value lies where each orthant's slice count is polynomial.
std::int64_t polynomial_threshold(const std::vector<Orthant>& orthants);

inline constexpr std::int64_t kMaxBoxPoints = 50'000'000;
std::vector<std::vector<std::int64_t>> enumerate_slice(const SumPolyhedron& p, std::int64_t n,
                                                       std::int64_t box_limit);

}  // namespace symdual
