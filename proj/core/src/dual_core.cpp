#include "symdual/dual_core.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>

namespace symdual {

namespace {

constexpr std::int64_t kMinusInf = std::numeric_limits<std::int64_t>::min();

void require_system_width(const GeneratorSystem& g, std::int64_t n) {
  if (n < g.max_weight())
    throw Error(ErrorKind::WidthTooSmall,
                "n=" + std::to_string(n) + " below m=" + std::to_string(g.max_weight()));
}

void check_tuple_cap(int c, const Limits& limits) {
  int cap = std::min(limits.tuple_max_c, kMaxWordAmbient);
  if (c > cap)
    throw Error(ErrorKind::AmbientSizeExceeded,
                "tuple enumeration needs c <= " + std::to_string(cap) + ", got " + std::to_string(c));
}

std::int64_t sum_over(std::uint64_t family, const TypeVector& tv) {
  std::int64_t s = 0;
  for (const auto& e : tv.entries())
    if ((family >> e.support.bits()) & 1u) s += e.count;
  return s;
}

// Dense counts indexed by mask, with ℓ_∅ = n − weight.
std::vector<std::int64_t> dense(const TypeVector& tv, std::int64_t n) {
  std::vector<std::int64_t> d(std::size_t{1} << tv.ambient(), 0);
  for (const auto& e : tv.entries()) d[e.support.bits()] = e.count;
  d[0] = n - tv.weight();
  return d;
}

}  // namespace

std::int64_t GenFamily::fixed_total() const {
  std::int64_t t = 0;
  for (const auto& [s, v] : fixed) t += v;
  return t;
}

bool GenFamily::operator<(const GenFamily& o) const {
  if (c != o.c) return c < o.c;
  if (fixed != o.fixed) return fixed < o.fixed;
  return antichain < o.antichain;
}

std::int64_t k_of_antichain(const TypeVector& a, const Antichain& antichain) {
  int c = a.ambient();
  if (antichain.ambient() != c) throw Error(ErrorKind::SchemaViolation, "antichain ambient mismatch");
  OrderIdeal j = upper_closure(antichain.family());
  std::int64_t k = 0;
  for (const auto& e : a.entries())
    if (!j.contains(complement(e.support, c))) k += e.count;
  return k;
}

bool in_dual_single(const TypeVector& a, const TypeVector& b, std::int64_t n, const Limits& limits) {
  require_width(a, n);
  require_width(b, n);
  int c = a.ambient();
  if (b.ambient() != c) throw Error(ErrorKind::SchemaViolation, "ambient mismatch");
  auto ell = dense(b, n);
  std::uint32_t all = (1u << c) - 1u;
  for (std::uint64_t j : proper_order_ideal_words(c, limits)) {
    std::int64_t rhs = 0;
    for (std::uint32_t t = 0; t <= all; ++t)
      if ((j >> t) & 1u) rhs += ell[all ^ t];
    if (sum_over(j, a) > rhs) return true;
  }
  return false;
}

bool in_dual(const GeneratorSystem& g, const TypeVector& b, std::int64_t n, const Limits& limits) {
  require_system_width(g, n);
  for (const TypeVector& a : g.generators())
    if (!in_dual_single(a, b, n, limits)) return false;
  return true;
}

bool divides_up_to_sym(const TypeVector& bp, const TypeVector& b, std::int64_t n) {
  require_width(bp, n);
  require_width(b, n);
  int c = bp.ambient();
  if (b.ambient() != c) throw Error(ErrorKind::SchemaViolation, "ambient mismatch");
  auto supp = bp.supports();
  if (supp.size() > 20) throw Error(ErrorKind::InstanceTooLarge, "support too large");
  const std::uint32_t subsets = 1u << supp.size();
  for (std::uint32_t e = 1; e < subsets; ++e) {
    Family gens(c);
    for (std::size_t i = 0; i < supp.size(); ++i)
      if ((e >> i) & 1u) gens.insert(supp[i]);
    OrderIdeal j = upper_closure(gens);
    std::int64_t lhs = 0, rhs = 0;
    for (const auto& en : bp.entries())
      if (j.contains(en.support)) lhs += en.count;
    for (const auto& en : b.entries())
      if (j.contains(en.support)) rhs += en.count;
    if (lhs > rhs) return false;
  }
  return true;
}

DualMembership::DualMembership(const GeneratorSystem& g, const Limits& limits)
    : system_(g), ideals_(proper_order_ideal_words(g.ambient(), limits)) {
  for (const TypeVector& a : g.generators()) {
    std::vector<std::int64_t> sums;
    sums.reserve(ideals_.size());
    for (std::uint64_t j : ideals_) sums.push_back(sum_over(j, a));
    k_sums_.push_back(std::move(sums));
  }
}

bool DualMembership::contains_dense(const std::vector<std::int64_t>& ell) const {
  const std::uint32_t all = static_cast<std::uint32_t>(ell.size()) - 1u;
  std::vector<std::int64_t> rhs(ideals_.size(), 0);
  for (std::size_t x = 0; x < ideals_.size(); ++x) {
    std::uint64_t j = ideals_[x];
    std::int64_t r = 0;
    for (std::uint32_t s = 0; s <= all; ++s)
      if (ell[s] && ((j >> (all ^ s)) & 1u)) r += ell[s];
    rhs[x] = r;
  }
  for (const auto& sums : k_sums_) {
    bool hit = false;
    for (std::size_t x = 0; x < ideals_.size() && !hit; ++x) hit = sums[x] > rhs[x];
    if (!hit) return false;
  }
  return true;
}

bool DualMembership::contains(const TypeVector& b, std::int64_t n) const {
  require_width(b, n);
  require_system_width(system_, n);
  return contains_dense(dense(b, n));
}

bool DualMembership::is_minimal(const TypeVector& b, std::int64_t n) const {
  require_width(b, n);
  require_system_width(system_, n);
  auto ell = dense(b, n);
  if (!contains_dense(ell)) return false;
  for (const auto& e : b.entries()) {
    std::uint32_t t = e.support.bits();
    for (std::uint32_t bits = t; bits; bits &= bits - 1) {
      std::uint32_t smaller = t & ~(bits & (~bits + 1u));
      --ell[t];
      ++ell[smaller];
      bool still = contains_dense(ell);
      ++ell[t];
      --ell[smaller];
      if (still) return false;
    }
  }
  return true;
}

namespace {

// Compositions of total into parts.size() positive parts, visiting each.
void positive_compositions(std::int64_t total, std::size_t parts, std::vector<std::int64_t>& cur,
                           const std::function<void()>& visit) {
  if (cur.size() + 1 == parts) {
    if (total >= 1) {
      cur.push_back(total);
      visit();
      cur.pop_back();
    }
    return;
  }
  std::int64_t remaining_parts = static_cast<std::int64_t>(parts - cur.size() - 1);
  for (std::int64_t v = 1; v <= total - remaining_parts; ++v) {
    cur.push_back(v);
    positive_compositions(total - v, parts, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OneOrbitClass> one_orbit_classes(const TypeVector& a, std::int64_t n,
                                             const Limits& limits) {
  require_width(a, n);
  int c = a.ambient();
  std::vector<OneOrbitClass> classes;
  std::uint32_t all = (1u << c) - 1u;
  auto k_of_ideal = [&](std::uint64_t j) {
    std::int64_t k = 0;
    for (const auto& e : a.entries())
      if (!((j >> (all ^ e.support.bits())) & 1u)) k += e.count;
    return k;
  };
  for (std::uint64_t j : proper_order_ideal_words(c, limits)) {
    std::uint64_t cw = words::minimal_elements(j, c);
    std::int64_t kc = k_of_ideal(j);
    if (kc < 1) continue;
    OneOrbitClass cls{minimal_elements(Family::from_word(c, cw)), kc, {}};
    std::vector<SubsetMask> members = cls.antichain.members();
    std::sort(members.begin(), members.end(), standard_before);
    const std::size_t size = members.size();
    // k_max[d]: largest k over antichains C' below C whose ideal meets C in d
    const std::uint64_t below = words::lower_closure(cw, c);
    std::vector<std::int64_t> k_max(std::size_t{1} << size, kMinusInf);
    for (std::uint64_t jp : proper_order_ideal_words(c, limits)) {
      std::uint64_t cpw = words::minimal_elements(jp, c);
      if (cpw == cw || (cpw & ~below)) continue;
      std::uint32_t d = 0;
      for (std::size_t i = 0; i < size; ++i)
        if ((jp >> members[i].bits()) & 1u) d |= 1u << i;
      k_max[d] = std::max(k_max[d], k_of_ideal(jp));
    }
    std::vector<std::int64_t> parts;
    positive_compositions(n + 1 - kc, size, parts, [&] {
      for (std::uint32_t d = 0; d < (1u << size); ++d) {
        if (k_max[d] == kMinusInf) continue;
        std::int64_t outside = 0;
        for (std::size_t i = 0; i < size; ++i)
          if (!((d >> i) & 1u)) outside += parts[i];
        if (outside <= k_max[d] - kc) return;
      }
      TypeVector tv(c);
      for (std::size_t i = 0; i < size; ++i) tv.set(members[i], parts[i]);
      cls.members.push_back(std::move(tv));
    });
    std::sort(cls.members.begin(), cls.members.end(), output_before);
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<TypeVector> one_orbit_min_gens(const TypeVector& a, std::int64_t n, const Limits& limits) {
  require_width(a, n);
  auto classes = one_orbit_classes(a, n, limits);
  std::int64_t threshold = 0;
  for (const auto& cls : classes) threshold = std::max(threshold, cls.k_c - 1);
  if (n < threshold) return min_gens(GeneratorSystem(a.ambient(), {a}), n, limits);
  std::vector<TypeVector> out;
  for (auto& cls : classes)
    for (auto& tv : cls.members) out.push_back(std::move(tv));
  std::sort(out.begin(), out.end(), output_before);
  return out;
}

std::vector<GenFamily> generator_families(const GeneratorSystem& g, const Limits& limits) {
  const int c = g.ambient();
  check_tuple_cap(c, limits);
  const auto& ideals = proper_order_ideal_words(c, limits);
  const std::uint64_t full = words::full(c);
  const std::size_t s = g.size();

  struct Choice {
    std::uint64_t jbar;
    std::int64_t k;
  };
  std::vector<std::vector<Choice>> usable(s);
  long double tuples = 1;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::uint64_t j : ideals) {
      std::int64_t k = sum_over(j, g.generators()[i]);
      if (k >= 1) usable[i].push_back({words::complement_family(j, c), k});
    }
    tuples *= static_cast<long double>(usable[i].size());
  }
  if (tuples > static_cast<long double>(limits.tuple_budget))
    throw Error(ErrorKind::CapExceeded, "ideal tuple count exceeds budget");

  std::set<GenFamily> found;
  std::vector<std::size_t> pick(s, 0);
  if (std::any_of(usable.begin(), usable.end(), [](const auto& u) { return u.empty(); })) return {};

  struct Var {
    std::uint32_t mask;
    std::uint32_t lam;
    std::int64_t bound;
  };
  std::vector<Var> vars;
  std::vector<std::int64_t> sums(s), values;
  std::vector<std::int64_t> limit(s);

  while (true) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s; ++i) {
      r |= usable[i][pick[i]].jbar;
      limit[i] = usable[i][pick[i]].k - 1;
    }
    std::uint64_t c_word = words::minimal_elements(full & ~r, c);
    Antichain antichain = minimal_elements(Family::from_word(c, c_word));

    auto lam_of = [&](std::uint32_t mask) {
      std::uint32_t lam = 0;
      for (std::size_t i = 0; i < s; ++i)
        if ((usable[i][pick[i]].jbar >> mask) & 1u) lam |= 1u << i;
      return lam;
    };
    vars.clear();
    for (std::uint64_t w = r; w; w &= w - 1) {
      std::uint32_t mask = static_cast<std::uint32_t>(std::countr_zero(w));
      std::uint32_t lam = lam_of(mask);
      bool minimal_in_cell = true;
      for (std::uint32_t bits = mask; bits && minimal_in_cell; bits &= bits - 1)
        if (lam_of(mask & ~(bits & (~bits + 1u))) == lam) minimal_in_cell = false;
      if (!minimal_in_cell) continue;
      std::int64_t bound = -1;
      for (std::size_t i = 0; i < s; ++i)
        if ((lam >> i) & 1u) bound = bound < 0 ? limit[i] : std::min(bound, limit[i]);
      vars.push_back({mask, lam, bound});
    }

    std::fill(sums.begin(), sums.end(), 0);
    values.assign(vars.size(), 0);
    std::function<void(std::size_t)> assign = [&](std::size_t v) {
      if (v == vars.size()) {
        GenFamily fam{c, {}, antichain};
        for (std::size_t x = 0; x < vars.size(); ++x)
          if (values[x]) fam.fixed.emplace_back(SubsetMask(vars[x].mask), values[x]);
        found.insert(std::move(fam));
        return;
      }
      const Var& var = vars[v];
      std::int64_t room = var.bound;
      for (std::size_t i = 0; i < s; ++i)
        if ((var.lam >> i) & 1u) room = std::min(room, limit[i] - sums[i]);
      for (std::int64_t x = 0; x <= room; ++x) {
        values[v] = x;
        for (std::size_t i = 0; i < s; ++i)
          if ((var.lam >> i) & 1u) sums[i] += x;
        assign(v + 1);
        for (std::size_t i = 0; i < s; ++i)
          if ((var.lam >> i) & 1u) sums[i] -= x;
      }
      values[v] = 0;
    };
    assign(0);

    std::size_t i = 0;
    while (i < s && ++pick[i] == usable[i].size()) pick[i++] = 0;
    if (i == s) break;
  }
  return {found.begin(), found.end()};
}

std::vector<TypeVector> expand_family(const GenFamily& family, std::int64_t n) {
  std::vector<TypeVector> out;
  std::int64_t free = n - family.fixed_total();
  if (free < 0) return out;
  TypeVector base(family.c);
  for (const auto& [s, v] : family.fixed) base.add(s, v);
  std::vector<SubsetMask> members = family.antichain.members();
  if (members.empty()) {
    if (free == 0) out.push_back(base);
    return out;
  }
  std::sort(members.begin(), members.end(), standard_before);
  std::function<void(std::size_t, std::int64_t, TypeVector&)> go = [&](std::size_t i, std::int64_t left,
                                                                      TypeVector& tv) {
    if (i + 1 == members.size()) {
      tv.add(members[i], left);
      out.push_back(tv);
      tv.add(members[i], -left);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      tv.add(members[i], v);
      go(i + 1, left - v, tv);
      tv.add(members[i], -v);
    }
  };
  go(0, free, base);
  return out;
}

std::vector<TypeVector> general_candidates(const GeneratorSystem& g, std::int64_t n,
                                           const Limits& limits) {
  require_system_width(g, n);
  std::unordered_set<TypeVector, TypeVectorHash> seen;
  for (const GenFamily& fam : generator_families(g, limits))
    for (TypeVector& tv : expand_family(fam, n)) seen.insert(std::move(tv));
  std::vector<TypeVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), output_before);
  return out;
}

std::vector<TypeVector> min_gens_from_families(const DualMembership& membership,
                                               const std::vector<GenFamily>& families,
                                               std::int64_t n, Pruning pruning) {
  require_system_width(membership.system(), n);
  std::unordered_set<TypeVector, TypeVectorHash> seen;
  for (const GenFamily& fam : families)
    for (TypeVector& tv : expand_family(fam, n)) seen.insert(std::move(tv));
  std::vector<TypeVector> candidates(seen.begin(), seen.end());
  std::sort(candidates.begin(), candidates.end(), output_before);

  std::vector<TypeVector> out;
  if (pruning == Pruning::SingleVariable) {
    for (TypeVector& b : candidates) {
      if (!membership.contains(b, n))
        throw Error(ErrorKind::InternalInvariant, "candidate " + b.to_string() + " not in the dual");
      if (membership.is_minimal(b, n)) out.push_back(std::move(b));
    }
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
        dominated = j != i && divides_up_to_sym(candidates[j], candidates[i], n);
      if (!dominated) out.push_back(candidates[i]);
    }
  }
  return out;
}

std::vector<TypeVector> min_gens(const GeneratorSystem& g, std::int64_t n, const Limits& limits,
                                 Pruning pruning) {
  require_system_width(g, n);
  DualMembership membership(g, limits);
  return min_gens_from_families(membership, generator_families(g, limits), n, pruning);
}

MinDegreeResult min_degree_gens(const GeneratorSystem& g, std::int64_t n, const Limits& limits) {
  auto gens = min_gens(g, n, limits);
  MinDegreeResult r;
  if (gens.empty()) throw Error(ErrorKind::InternalInvariant, "dual has no generators");
  r.degree = gens.front().degree();
  for (auto& b : gens)
    if (b.degree() == r.degree) r.generators.push_back(std::move(b));
  return r;
}

}  // namespace symdual
