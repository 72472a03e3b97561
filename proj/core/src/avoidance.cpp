#include "symdual/avoidance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace symdual {

FiberCounts::FiberCounts(int c) : c_(c), counts_(std::size_t{1} << c, 0) {
  if (c < 0 || c > kMaxAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "c outside [0,16]");
}

FiberCounts FiberCounts::of(int c, std::span<const SubsetMask> values) {
  FiberCounts k(c);
  for (SubsetMask t : values) k.add(t, 1);
  return k;
}

void FiberCounts::add(SubsetMask t, std::int64_t delta) {
  if (!t.subset_of(SubsetMask::full(c_)))
    throw Error(ErrorKind::AmbientSizeExceeded, "fiber key outside [c]");
  counts_[t.bits()] += delta;
  total_ += delta;
}

std::vector<SubsetMask> FiberCounts::nonzero() const {
  std::vector<SubsetMask> out;
  for (std::uint32_t b = 0; b < counts_.size(); ++b)
    if (counts_[b] != 0) out.emplace_back(b);
  return out;
}

namespace {

std::optional<std::uint64_t> violated_word(const FiberCounts& k, const FiberCounts& l,
                                           const Limits& limits) {
  int c = k.ambient();
  std::uint32_t all = (1u << c) - 1u;
  auto ks = k.nonzero();
  auto ls = l.nonzero();
  for (std::uint64_t j : proper_order_ideal_words(c, limits)) {
    std::int64_t lhs = 0, rhs = 0;
    for (SubsetMask t : ks)
      if ((j >> t.bits()) & 1u) lhs += k[t];
    for (SubsetMask s : ls)
      if ((j >> (all ^ s.bits())) & 1u) rhs += l[s];
    if (lhs > rhs) return j;
  }
  return std::nullopt;
}

void check_pair(const FiberCounts& k, const FiberCounts& l) {
  if (k.ambient() != l.ambient()) throw Error(ErrorKind::SchemaViolation, "fiber ambient mismatch");
  if (k.total() != l.total())
    throw Error(ErrorKind::TotalMismatch, "totals " + std::to_string(k.total()) + " and " +
                                              std::to_string(l.total()) + " differ");
}

}  // namespace

std::optional<OrderIdeal> find_violated_ideal(const FiberCounts& k, const FiberCounts& l,
                                              const Limits& limits) {
  check_pair(k, l);
  auto w = violated_word(k, l, limits);
  if (!w) return std::nullopt;
  return OrderIdeal::from_family(Family::from_word(k.ambient(), *w));
}

bool avoidance_feasible(const FiberCounts& k, const FiberCounts& l, const Limits& limits) {
  check_pair(k, l);
  return !violated_word(k, l, limits).has_value();
}

namespace {

struct Subproblem {
  std::vector<std::size_t> left;   // indices into f
  std::vector<std::size_t> right;  // indices into g
};

FiberCounts counts_of(int c, std::span<const SubsetMask> values, const std::vector<std::size_t>& idx) {
  FiberCounts k(c);
  for (std::size_t i : idx) k.add(values[i], 1);
  return k;
}

}  // namespace

AvoidanceResult find_avoiding_permutation(int c, std::span<const SubsetMask> f,
                                          std::span<const SubsetMask> g, const Limits& limits) {
  if (f.size() != g.size()) throw Error(ErrorKind::TotalMismatch, "f and g differ in length");
  const std::size_t n = f.size();
  AvoidanceResult result;
  {
    auto k = FiberCounts::of(c, f);
    auto l = FiberCounts::of(c, g);
    if (auto w = violated_word(k, l, limits)) {
      result.certificate = OrderIdeal::from_family(Family::from_word(c, *w));
      return result;
    }
  }

  std::vector<std::size_t> sigma(n, n);
  std::vector<Subproblem> work;
  work.push_back({std::vector<std::size_t>(n), std::vector<std::size_t>(n)});
  std::iota(work.back().left.begin(), work.back().left.end(), 0);
  std::iota(work.back().right.begin(), work.back().right.end(), 0);
  const std::uint32_t all = (1u << c) - 1u;

  while (!work.empty()) {
    Subproblem p = std::move(work.back());
    work.pop_back();
    if (p.left.size() != p.right.size())
      throw Error(ErrorKind::InternalInvariant, "unbalanced avoidance split");
    if (p.left.empty()) continue;

    // T0: the largest nonempty f-value; S0 ⊇ T0 the largest with a g-value S0^C.
    std::size_t pick_left = n;
    for (std::size_t i : p.left) {
      if (f[i].empty()) continue;
      if (pick_left == n || standard_before(f[i], f[pick_left])) pick_left = i;
    }
    if (pick_left == n) {
      for (std::size_t t = 0; t < p.left.size(); ++t) sigma[p.left[t]] = p.right[t];
      continue;
    }
    SubsetMask t0 = f[pick_left];
    std::size_t pick_right = n;
    for (std::size_t j : p.right) {
      if (!g[j].disjoint(t0)) continue;
      if (pick_right == n) {
        pick_right = j;
        continue;
      }
      SubsetMask s_new(all ^ g[j].bits()), s_old(all ^ g[pick_right].bits());
      if (standard_before(s_new, s_old)) pick_right = j;
    }
    if (pick_right == n)
      throw Error(ErrorKind::InternalInvariant, "feasible instance has no partner for T0");

    Subproblem rest;
    for (std::size_t i : p.left)
      if (i != pick_left) rest.left.push_back(i);
    for (std::size_t j : p.right)
      if (j != pick_right) rest.right.push_back(j);
    auto w = violated_word(counts_of(c, f, rest.left), counts_of(c, g, rest.right), limits);
    if (!w) {
      sigma[pick_left] = pick_right;
      work.push_back(std::move(rest));
      continue;
    }
    // J0 is tight for p: split into the part mapped into J0 and the rest.
    std::uint64_t j0 = *w;
    Subproblem inside, outside;
    for (std::size_t i : p.left) ((j0 >> f[i].bits()) & 1u ? inside : outside).left.push_back(i);
    for (std::size_t j : p.right)
      ((j0 >> (all ^ g[j].bits())) & 1u ? inside : outside).right.push_back(j);
    if (inside.left.empty() || outside.left.empty())
      throw Error(ErrorKind::InternalInvariant, "tight ideal does not split the instance");
    work.push_back(std::move(outside));
    work.push_back(std::move(inside));
  }

  for (std::size_t i = 0; i < n; ++i)
    if (sigma[i] >= n || !f[i].disjoint(g[sigma[i]]))
      throw Error(ErrorKind::InternalInvariant, "constructed permutation does not avoid");
  std::vector<std::size_t> seen(n, 0);
  for (std::size_t j : sigma)
    if (seen[j]++) throw Error(ErrorKind::InternalInvariant, "constructed map is not a permutation");
  result.sigma = std::move(sigma);
  return result;
}

std::optional<std::vector<std::size_t>> brute_force_avoidance(std::span<const SubsetMask> f,
                                                              std::span<const SubsetMask> g) {
  if (f.size() != g.size()) throw Error(ErrorKind::TotalMismatch, "f and g differ in length");
  if (f.size() > kBruteForceMaxN)
    throw Error(ErrorKind::InstanceTooLarge, "brute force limited to N <= 8");
  std::vector<std::size_t> sigma(f.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i) ok = f[i].disjoint(g[sigma[i]]);
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

}  // namespace symdual
