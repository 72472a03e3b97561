#include "symdual/boolean_poset.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

namespace symdual {

std::string_view error_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientSizeExceeded: return "ambient-size-exceeded";
    case ErrorKind::MalformedMatrix: return "malformed-matrix";
    case ErrorKind::WidthTooSmall: return "width-too-small";
    case ErrorKind::WidthMismatch: return "width-mismatch";
    case ErrorKind::TotalMismatch: return "total-mismatch";
    case ErrorKind::InstanceTooLarge: return "instance-too-large";
    case ErrorKind::DimensionExceeded: return "dimension-exceeded";
    case ErrorKind::BoxTooLarge: return "box-too-large";
    case ErrorKind::InsufficientSamples: return "insufficient-samples";
    case ErrorKind::NoStableWindow: return "no-stable-window";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::SchemaViolation: return "schema-violation";
    case ErrorKind::InternalInvariant: return "internal-invariant";
  }
  return "unknown";
}

namespace {

void check_ambient(int c) {
  if (c < 0 || c > kMaxAmbient)
    throw Error(ErrorKind::AmbientSizeExceeded, "c=" + std::to_string(c) + " outside [0,16]");
}

void check_enumeration(int c, const Limits& limits) {
  check_ambient(c);
  int cap = std::min(limits.enumeration_max_c, kMaxWordAmbient);
  if (c > cap)
    throw Error(ErrorKind::AmbientSizeExceeded,
                "order-ideal enumeration needs c <= " + std::to_string(cap) + ", got " +
                    std::to_string(c));
}

}  // namespace

SubsetMask SubsetMask::of(std::initializer_list<int> rows) {
  std::uint32_t bits = 0;
  for (int r : rows) {
    if (r < 1 || r > kMaxAmbient)
      throw Error(ErrorKind::AmbientSizeExceeded, "row " + std::to_string(r) + " out of range");
    bits |= 1u << (r - 1);
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::rows() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

SubsetMask complement(SubsetMask t, int c) { return SubsetMask(~t.bits() & ((1u << c) - 1u)); }

std::strong_ordering subset_lex_compare(SubsetMask s, SubsetMask t) {
  if (s == t) return std::strong_ordering::equal;
  int ss = s.size(), ts = t.size();
  if (ss != ts) return ss <=> ts;
  // Below the smallest element of the symmetric difference the sorted lists agree.
  std::uint32_t diff = s.bits() ^ t.bits();
  std::uint32_t lowest = diff & (~diff + 1u);
  return (s.bits() & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::vector<SubsetMask> standard_order(int c) {
  check_ambient(c);
  std::vector<SubsetMask> all;
  all.reserve(std::size_t{1} << c);
  for (std::uint32_t b = 0; b < (1u << c); ++b) all.emplace_back(b);
  std::sort(all.begin(), all.end(), standard_before);
  return all;
}

// Family

Family::Family(int c) : c_(c) {
  check_ambient(c);
  words_.assign(((std::size_t{1} << c) + 63) / 64, 0);
}

Family Family::of(int c, std::initializer_list<SubsetMask> members) {
  Family f(c);
  for (SubsetMask m : members) {
    if (!m.subset_of(SubsetMask::full(c)))
      throw Error(ErrorKind::AmbientSizeExceeded, "member outside 2^[c]");
    f.insert(m);
  }
  return f;
}

Family Family::from_word(int c, std::uint64_t word) {
  if (c > kMaxWordAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "word family needs c <= 6");
  Family f(c);
  f.words_[0] = word & words::full(c);
  return f;
}

Family Family::everything(int c) {
  Family f(c);
  std::size_t total = std::size_t{1} << c;
  for (std::size_t i = 0; i < f.words_.size(); ++i) {
    std::size_t lo = i * 64;
    std::size_t n = std::min<std::size_t>(64, total - lo);
    f.words_[i] = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }
  return f;
}

std::size_t Family::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<SubsetMask> Family::members() const {
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (std::uint64_t w = words_[i]; w; w &= w - 1)
      out.emplace_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
  return out;
}

std::uint64_t Family::word() const {
  if (c_ > kMaxWordAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "word family needs c <= 6");
  return words_.empty() ? 0 : words_[0];
}

Family Family::operator|(const Family& o) const {
  Family r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

Family Family::operator&(const Family& o) const {
  Family r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

Family Family::operator-(const Family& o) const {
  Family r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

bool Family::subset_of(const Family& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

OrderIdeal OrderIdeal::from_family(Family f) {
  if (!(upper_closure(f).family() == f))
    throw Error(ErrorKind::SchemaViolation, "family is not closed under supersets");
  return OrderIdeal(std::move(f));
}

Antichain Antichain::from_family(Family f) {
  if (!(minimal_elements(f).family() == f))
    throw Error(ErrorKind::SchemaViolation, "family is not an antichain");
  return Antichain(std::move(f));
}

Family complement_family(const Family& f) {
  int c = f.ambient();
  Family r(c);
  for (SubsetMask t : f.members()) r.insert(complement(t, c));
  return r;
}

OrderIdeal upper_closure(const Family& gens) {
  int c = gens.ambient();
  Family r = gens;
  // Visiting masks in increasing order sees every subset before its supersets.
  for (std::uint32_t b = 0; b < (1u << c); ++b) {
    if (!r.contains(SubsetMask(b))) continue;
    for (int i = 0; i < c; ++i) r.insert(SubsetMask(b | (1u << i)));
  }
  return OrderIdeal(std::move(r));
}

Family lower_closure(const Family& gens) {
  int c = gens.ambient();
  Family r = gens;
  for (std::uint32_t b = (1u << c); b-- > 0;) {
    if (!r.contains(SubsetMask(b))) continue;
    for (int i = 0; i < c; ++i) r.insert(SubsetMask(b & ~(1u << i)));
  }
  return r;
}

Antichain minimal_elements(const Family& f) {
  int c = f.ambient();
  Family r(c);
  for (SubsetMask t : f.members()) {
    bool minimal = true;
    for (std::uint32_t sub = (t.bits() - 1) & t.bits();; sub = (sub - 1) & t.bits()) {
      if (sub != t.bits() && f.contains(SubsetMask(sub))) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (minimal) r.insert(t);
  }
  return Antichain(std::move(r));
}

// Word-level routines

namespace words {

std::uint64_t full(int c) {
  std::size_t n = std::size_t{1} << c;
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

std::uint64_t complement_family(std::uint64_t f, int c) {
  std::uint64_t r = 0;
  std::uint32_t all = (1u << c) - 1u;
  for (; f; f &= f - 1) r |= std::uint64_t{1} << (all ^ static_cast<std::uint32_t>(std::countr_zero(f)));
  return r;
}

std::uint64_t upper_closure(std::uint64_t f, int c) {
  for (std::uint32_t b = 0; b < (1u << c); ++b)
    if ((f >> b) & 1u)
      for (int i = 0; i < c; ++i) f |= std::uint64_t{1} << (b | (1u << i));
  return f;
}

std::uint64_t lower_closure(std::uint64_t f, int c) {
  for (std::uint32_t b = (1u << c); b-- > 0;)
    if ((f >> b) & 1u)
      for (int i = 0; i < c; ++i) f |= std::uint64_t{1} << (b & ~(1u << i));
  return f;
}

std::uint64_t minimal_elements(std::uint64_t f, int c) {
  std::uint64_t strictly_above = 0;
  for (std::uint64_t g = f; g; g &= g - 1) {
    std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(g));
    for (int i = 0; i < c; ++i)
      if (!((b >> i) & 1u)) strictly_above |= std::uint64_t{1} << (b | (1u << i));
  }
  strictly_above = upper_closure(strictly_above, c);
  return f & ~strictly_above;
}

}  // namespace words

namespace {

struct IdealEnumerator {
  int c;
  std::vector<std::uint32_t> order;  // standard order, largest sets first
  const std::function<void(std::uint64_t)>* visit;

  void run(std::size_t idx, std::uint64_t word) {
    if (idx == order.size()) {
      (*visit)(word);
      return;
    }
    std::uint32_t s = order[idx];
    bool can_include = true;
    for (int i = 0; i < c && can_include; ++i)
      if (!((s >> i) & 1u) && !((word >> (s | (1u << i))) & 1u)) can_include = false;
    run(idx + 1, word);
    if (can_include) run(idx + 1, word | (std::uint64_t{1} << s));
  }
};

}  // namespace

void for_each_order_ideal_word(int c, const std::function<void(std::uint64_t)>& visit,
                               const Limits& limits) {
  check_enumeration(c, limits);
  IdealEnumerator e{c, {}, &visit};
  for (SubsetMask m : standard_order(c)) e.order.push_back(m.bits());
  e.run(0, 0);
}

std::vector<OrderIdeal> enumerate_order_ideals(int c, const Limits& limits) {
  std::vector<OrderIdeal> out;
  for_each_order_ideal_word(
      c, [&](std::uint64_t w) { out.push_back(OrderIdeal::from_family(Family::from_word(c, w))); },
      limits);
  return out;
}

std::vector<Antichain> enumerate_antichains(int c, const Limits& limits) {
  std::vector<Antichain> out;
  for_each_order_ideal_word(
      c, [&](std::uint64_t w) { out.push_back(minimal_elements(Family::from_word(c, w))); },
      limits);
  return out;
}

const std::vector<std::uint64_t>& proper_order_ideal_words(int c, const Limits& limits) {
  check_enumeration(c, limits);
  static std::array<std::once_flag, kMaxWordAmbient + 1> flags;
  static std::array<std::vector<std::uint64_t>, kMaxWordAmbient + 1> cache;
  std::call_once(flags[c], [c] {
    std::uint64_t top = words::full(c);
    for_each_order_ideal_word(c, [&](std::uint64_t w) {
      if (w != 0 && w != top) cache[c].push_back(w);
    }, Limits{4, kMaxWordAmbient});
  });
  return cache[c];
}

}  // namespace symdual
