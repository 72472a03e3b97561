#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "symdual/error.hpp"

namespace symdual {

inline constexpr int kMaxAmbient = 16;
// Order-ideal enumeration stores a family of subsets of [c] in one 64-bit word.
inline constexpr int kMaxWordAmbient = 6;

// A subset of [c]; row i is bit i-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> rows);
  static SubsetMask full(int c) { return SubsetMask((1u << c) - 1u); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(int row) const { return (bits_ >> (row - 1)) & 1u; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(SubsetMask o) const { return (bits_ & o.bits_) == 0; }
  std::vector<int> rows() const;

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask without(int row) const { return SubsetMask(bits_ & ~(1u << (row - 1))); }

  constexpr bool operator==(const SubsetMask&) const = default;
  // Raw bit order, for containers. The poset order is subset_lex_compare.
  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

SubsetMask complement(SubsetMask t, int c);

// Total order on 2^[c]: larger sets first, then lexicographic with 1 > 2 > ... > c.
// Returns greater when s precedes t in the standard matrix order.
std::strong_ordering subset_lex_compare(SubsetMask s, SubsetMask t);

// Sort key: true when s comes strictly before t in the standard order.
inline bool standard_before(SubsetMask s, SubsetMask t) { return subset_lex_compare(s, t) > 0; }

// All 2^c subsets in standard order, [c] first and ∅ last.
std::vector<SubsetMask> standard_order(int c);

// A set of subsets of [c], stored as a bitset over the 2^c masks.
class Family {
 public:
  Family() = default;
  explicit Family(int c);
  static Family of(int c, std::initializer_list<SubsetMask> members);
  static Family from_word(int c, std::uint64_t word);
  static Family everything(int c);

  int ambient() const { return c_; }
  bool contains(SubsetMask t) const { return (words_[t.bits() >> 6] >> (t.bits() & 63)) & 1u; }
  void insert(SubsetMask t) { words_[t.bits() >> 6] |= std::uint64_t{1} << (t.bits() & 63); }
  void erase(SubsetMask t) { words_[t.bits() >> 6] &= ~(std::uint64_t{1} << (t.bits() & 63)); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // Members in increasing raw bit order.
  std::vector<SubsetMask> members() const;
  std::uint64_t word() const;  // requires c <= kMaxWordAmbient

  Family operator|(const Family& o) const;
  Family operator&(const Family& o) const;
  Family operator-(const Family& o) const;
  bool subset_of(const Family& o) const;

  bool operator==(const Family&) const = default;
  auto operator<=>(const Family&) const = default;

 private:
  int c_ = 0;
  std::vector<std::uint64_t> words_;
};

// Upper-closed family (closed under supersets).
class OrderIdeal {
 public:
  OrderIdeal() = default;
  static OrderIdeal from_family(Family f);  // validates upper closure
  const Family& family() const { return members_; }
  int ambient() const { return members_.ambient(); }
  bool contains(SubsetMask t) const { return members_.contains(t); }
  bool operator==(const OrderIdeal&) const = default;

 private:
  explicit OrderIdeal(Family f) : members_(std::move(f)) {}
  friend OrderIdeal upper_closure(const Family& gens);
  Family members_;
};

class Antichain {
 public:
  Antichain() = default;
  static Antichain from_family(Family f);  // validates pairwise incomparability
  const Family& family() const { return members_; }
  int ambient() const { return members_.ambient(); }
  std::vector<SubsetMask> members() const { return members_.members(); }
  bool operator==(const Antichain&) const = default;
  auto operator<=>(const Antichain& o) const { return members_ <=> o.members_; }

 private:
  explicit Antichain(Family f) : members_(std::move(f)) {}
  friend Antichain minimal_elements(const Family& f);
  Family members_;
};

// {T^C : T in F}
Family complement_family(const Family& f);
OrderIdeal upper_closure(const Family& gens);
Antichain minimal_elements(const Family& f);
Family lower_closure(const Family& gens);

// Every order ideal of 2^[c], including ∅ and 2^[c]. Count is the Dedekind number M(c).
std::vector<OrderIdeal> enumerate_order_ideals(int c, const Limits& limits = {});
std::vector<Antichain> enumerate_antichains(int c, const Limits& limits = {});

// Word-level variants for c <= kMaxWordAmbient. Bit t of the word is subset t.
void for_each_order_ideal_word(int c, const std::function<void(std::uint64_t)>& visit,
                               const Limits& limits = {});
// Order ideals other than ∅ and 2^[c], cached per c, in enumeration order.
const std::vector<std::uint64_t>& proper_order_ideal_words(int c, const Limits& limits = {});

namespace words {
std::uint64_t full(int c);
std::uint64_t complement_family(std::uint64_t f, int c);
std::uint64_t upper_closure(std::uint64_t f, int c);
std::uint64_t lower_closure(std::uint64_t f, int c);
std::uint64_t minimal_elements(std::uint64_t f, int c);
}  // namespace words

}  // namespace symdual
