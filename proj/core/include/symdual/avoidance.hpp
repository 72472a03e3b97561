#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symdual/boolean_poset.hpp"

namespace symdual {

// Fiber sizes |f^{-1}(T)| of a map N -> 2^[c], indexed by mask (∅ included).
class FiberCounts {
 public:
  FiberCounts() = default;
  explicit FiberCounts(int c);
  static FiberCounts of(int c, std::span<const SubsetMask> values);

  int ambient() const { return c_; }
  std::int64_t operator[](SubsetMask t) const { return counts_[t.bits()]; }
  void add(SubsetMask t, std::int64_t delta);
  std::int64_t total() const { return total_; }
  std::vector<SubsetMask> nonzero() const;

 private:
  int c_ = 0;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

// An order ideal J with Σ_{T∈J} k_T > Σ_{T∈J} l_{T^C}, if one exists.
std::optional<OrderIdeal> find_violated_ideal(const FiberCounts& k, const FiberCounts& l,
                                              const Limits& limits = {});
bool avoidance_feasible(const FiberCounts& k, const FiberCounts& l, const Limits& limits = {});

struct AvoidanceResult {
  // sigma[i] = σ(i), 0-based, with f[i] ∩ g[sigma[i]] = ∅.
  std::optional<std::vector<std::size_t>> sigma;
  std::optional<OrderIdeal> certificate;
};

AvoidanceResult find_avoiding_permutation(int c, std::span<const SubsetMask> f,
                                          std::span<const SubsetMask> g, const Limits& limits = {});

inline constexpr std::size_t kBruteForceMaxN = 8;
std::optional<std::vector<std::size_t>> brute_force_avoidance(std::span<const SubsetMask> f,
                                                              std::span<const SubsetMask> g);

}  // namespace symdual
