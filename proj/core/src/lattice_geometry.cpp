#include "symdual/lattice_geometry.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace symdual {

namespace {

std::int64_t sum_on(const std::vector<std::int64_t>& x, std::uint32_t mask) {
  std::int64_t s = 0;
  for (std::uint32_t b = mask; b; b &= b - 1) s += x[std::countr_zero(b)];
  return s;
}

void validate(const SumPolyhedron& p) {
  if (p.k < 0 || p.k > kMaxPolyhedronDim)
    throw Error(ErrorKind::DimensionExceeded, "k=" + std::to_string(p.k) + " outside [0,8]");
  auto in_range = [&](SubsetMask t) { return t.subset_of(SubsetMask((1u << p.k) - 1u)); };
  for (const auto& [t, a] : p.lower)
    if (!in_range(t)) throw Error(ErrorKind::SchemaViolation, "lower key outside [k]");
  for (const auto& [t, b] : p.upper)
    if (!in_range(t)) throw Error(ErrorKind::SchemaViolation, "upper key outside [k]");
  for (int i = 0; i < p.k; ++i)
    if (!p.lower.count(SubsetMask(1u << i)))
      throw Error(ErrorKind::SchemaViolation,
                  "coordinate " + std::to_string(i + 1) + " has no singleton lower bound");
}

using Bounds = std::map<std::uint32_t, std::int64_t>;

struct Decomposer {
  int k;
  std::vector<Orthant>* out;

  // Lower constraints on the active coordinates; partial holds values for the others.
  void run(std::uint32_t active, const Bounds& lower, std::vector<std::int64_t> partial,
           std::uint32_t fixed) {
    if (active == 0) {
      out->push_back(Orthant{k, std::move(partial), SubsetMask(fixed)});
      return;
    }
    int q = 31 - std::countl_zero(active);
    std::uint32_t qbit = 1u << q;
    std::uint32_t rest = active & ~qbit;
    std::int64_t a_q = lower.at(qbit);

    auto floor_of = [&](std::uint32_t s) {
      std::int64_t m = 0;
      for (std::uint32_t b = s; b; b &= b - 1) m += lower.at(b & (~b + 1u));
      auto it = lower.find(s);
      return it == lower.end() ? m : std::max(m, it->second);
    };
    std::int64_t top = a_q;
    for (const auto& [t, a] : lower)
      if ((t & qbit) && t != qbit) top = std::max(top, a - std::min<std::int64_t>(0, floor_of(t & ~qbit)));

    Bounds sub;
    for (const auto& [t, a] : lower)
      if (!(t & qbit)) sub[t] = a;
    {
      auto p = partial;
      p[q] = top;
      run(rest, sub, std::move(p), fixed);
    }
    for (std::int64_t i = a_q; i < top; ++i) {
      Bounds slab = sub;
      for (const auto& [t, a] : lower) {
        if (!(t & qbit) || t == qbit) continue;
        std::uint32_t r = t & ~qbit;
        auto it = slab.find(r);
        slab[r] = it == slab.end() ? a - i : std::max(it->second, a - i);
      }
      auto p = partial;
      p[q] = i;
      run(rest, slab, std::move(p), fixed | qbit);
    }
  }
};

}  // namespace

bool SumPolyhedron::contains(const std::vector<std::int64_t>& x) const {
  for (const auto& [t, a] : lower)
    if (sum_on(x, t.bits()) < a) return false;
  for (const auto& [t, b] : upper)
    if (sum_on(x, t.bits()) > b) return false;
  return true;
}

bool Orthant::contains(const std::vector<std::int64_t>& x) const {
  for (int i = 0; i < k; ++i) {
    if (fixed.contains(i + 1) ? x[i] != apex[i] : x[i] < apex[i]) return false;
  }
  return true;
}

std::int64_t Orthant::apex_sum() const {
  std::int64_t s = 0;
  for (auto v : apex) s += v;
  return s;
}

std::vector<Orthant> cone_decompose(const SumPolyhedron& p) {
  validate(p);
  std::vector<Orthant> out;
  if (auto it = p.lower.find(SubsetMask()); it != p.lower.end() && it->second > 0) return out;
  if (auto it = p.upper.find(SubsetMask()); it != p.upper.end() && it->second < 0) return out;

  const std::uint32_t all = (1u << p.k) - 1u;
  Bounds lower;
  for (const auto& [t, a] : p.lower)
    if (!t.empty()) lower[t.bits()] = a;

  std::uint32_t bounded = 0;
  for (const auto& [t, b] : p.upper) bounded |= t.bits();

  Decomposer d{p.k, &out};
  if (bounded == 0) {
    d.run(all, lower, std::vector<std::int64_t>(p.k, 0), 0);
    return out;
  }

  // Coordinates under an upper bound take finitely many values: enumerate them.
  std::vector<int> coords;
  std::vector<std::int64_t> lo, hi;
  long double volume = 1;
  for (int j = 0; j < p.k; ++j) {
    if (!((bounded >> j) & 1u)) continue;
    std::int64_t a = lower.at(1u << j);
    std::int64_t h = INT64_MAX;
    for (const auto& [t, b] : p.upper) {
      if (!t.contains(j + 1)) continue;
      std::int64_t others = 0;
      for (std::uint32_t r = t.bits() & ~(1u << j); r; r &= r - 1) others += lower.at(r & (~r + 1u));
      h = std::min(h, b - others);
    }
    if (h < a) return out;
    coords.push_back(j);
    lo.push_back(a);
    hi.push_back(h);
    volume *= static_cast<long double>(h - a + 1);
  }
  if (volume > static_cast<long double>(kMaxBoxPoints))
    throw Error(ErrorKind::BoxTooLarge, "bounded coordinates span too many points");

  const std::uint32_t free_coords = all & ~bounded;
  std::vector<std::int64_t> w(p.k, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    if (idx < coords.size()) {
      for (std::int64_t v = lo[idx]; v <= hi[idx]; ++v) {
        w[coords[idx]] = v;
        walk(idx + 1);
      }
      return;
    }
    for (const auto& [t, a] : lower)
      if ((t & ~bounded) == 0 && sum_on(w, t) < a) return;
    for (const auto& [t, b] : p.upper)
      if (sum_on(w, t.bits()) > b) return;
    Bounds reduced;
    for (const auto& [t, a] : lower) {
      std::uint32_t r = t & free_coords;
      if (r == 0) continue;
      std::int64_t bound = a - sum_on(w, t & bounded);
      auto it = reduced.find(r);
      reduced[r] = it == reduced.end() ? bound : std::max(it->second, bound);
    }
    d.run(free_coords, reduced, w, bounded);
  };
  walk(0);
  return out;
}

BigInt count_on_orthant(const Orthant& o, std::int64_t n) {
  int m = o.free_count();
  std::int64_t slack = n - o.apex_sum();
  if (m == 0) return slack == 0 ? 1 : 0;
  if (slack < 0) return 0;
  // C(slack + m − 1, m − 1)
  BigInt b = 1;
  for (int i = 1; i < m; ++i) {
    b *= slack + i;
    b /= i;
  }
  return b;
}

BigInt count_on_slice(const std::vector<Orthant>& orthants, std::int64_t n) {
  BigInt total = 0;
  for (const Orthant& o : orthants) total += count_on_orthant(o, n);
  return total;
}

std::int64_t polynomial_threshold(const std::vector<Orthant>& orthants) {
  std::int64_t t = INT64_MIN;
  for (const Orthant& o : orthants) {
    int m = o.free_count();
    t = std::max(t, m == 0 ? o.apex_sum() + 1 : o.apex_sum() - m + 1);
  }
  return t == INT64_MIN ? 0 : t;
}

std::vector<std::vector<std::int64_t>> enumerate_slice(const SumPolyhedron& p, std::int64_t n,
                                                       std::int64_t box_limit) {
  validate(p);
  std::vector<std::vector<std::int64_t>> out;
  if (p.k == 0) {
    if (n == 0 && p.contains({})) out.emplace_back();
    return out;
  }
  std::vector<std::int64_t> lo(p.k), hi(p.k);
  std::int64_t lo_sum = 0;
  for (int j = 0; j < p.k; ++j) lo_sum += lo[j] = p.lower.at(SubsetMask(1u << j));
  long double volume = 1;
  for (int j = 0; j < p.k; ++j) {
    hi[j] = n - (lo_sum - lo[j]);
    if (hi[j] > box_limit || lo[j] < -box_limit)
      throw Error(ErrorKind::BoxTooLarge, "slice leaves the box of radius " + std::to_string(box_limit));
    if (hi[j] < lo[j]) return out;
    if (j + 1 < p.k) volume *= static_cast<long double>(hi[j] - lo[j] + 1);
  }
  if (volume > static_cast<long double>(kMaxBoxPoints))
    throw Error(ErrorKind::BoxTooLarge, "slice box holds too many points");
  std::vector<std::int64_t> x(p.k);
  std::function<void(int, std::int64_t)> walk = [&](int j, std::int64_t left) {
    if (j + 1 == p.k) {
      if (left < lo[j] || left > hi[j]) return;
      x[j] = left;
      if (p.contains(x)) out.push_back(x);
      return;
    }
    for (std::int64_t v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      walk(j + 1, left - v);
    }
  };
  walk(0, n);
  return out;
}

}  // namespace symdual
