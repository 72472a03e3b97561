#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symdual/boolean_poset.hpp"

namespace symdual {

using BigInt = boost::multiprecision::cpp_int;

// Sym(n)-orbit of a squarefree monomial: the number ℓ_T of columns with support T,
// for nonempty T. ℓ_∅ is left implicit so the same value works at every width.
class TypeVector {
 public:
  struct Entry {
    SubsetMask support;
    std::int64_t count;
    bool operator==(const Entry&) const = default;
  };

  TypeVector() = default;
  explicit TypeVector(int c);
  TypeVector(int c, std::initializer_list<std::pair<SubsetMask, std::int64_t>> counts);

  int ambient() const { return c_; }
  std::int64_t count(SubsetMask t) const;
  // Adds delta to ℓ_t. Adding to ∅ is ignored since ℓ_∅ is implicit.
  void add(SubsetMask t, std::int64_t delta);
  void set(SubsetMask t, std::int64_t value);

  // Nonzero entries in standard order ([c] block first).
  std::span<const Entry> entries() const { return entries_; }
  std::int64_t weight() const;
  std::int64_t degree() const;
  std::vector<SubsetMask> supports() const;
  bool empty() const { return entries_.empty(); }

  bool operator==(const TypeVector&) const = default;
  // Deterministic total order: ambient, then counts read in standard order.
  std::strong_ordering operator<=>(const TypeVector& o) const;

  std::size_t hash() const;
  std::string to_string() const;  // e.g. "{12:1,3:2}"

 private:
  int c_ = 0;
  std::vector<Entry> entries_;
};

struct TypeVectorHash {
  std::size_t operator()(const TypeVector& tv) const { return tv.hash(); }
};

// Output order: by degree, then by counts in standard subset order.
bool output_before(const TypeVector& a, const TypeVector& b);

class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(int c, int n);
  // Validates that every entry is 0 or 1 and rows have equal length.
  static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static ExponentMatrix from_columns(int c, std::vector<SubsetMask> columns);

  int rows() const { return c_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  bool at(int row, int col) const { return columns_[col - 1].contains(row); }
  SubsetMask column(int col) const { return columns_[col - 1]; }
  const std::vector<SubsetMask>& columns() const { return columns_; }
  std::vector<std::vector<int>> to_rows() const;
  ExponentMatrix permuted(std::span<const int> sigma) const;  // 0-based: column j moves to sigma[j]

  bool operator==(const ExponentMatrix&) const = default;

 private:
  int c_ = 0;
  std::vector<SubsetMask> columns_;
};

class GeneratorSystem {
 public:
  GeneratorSystem() = default;
  GeneratorSystem(int c, std::vector<TypeVector> generators);

  int ambient() const { return c_; }
  const std::vector<TypeVector>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::int64_t max_weight() const { return m_; }

 private:
  int c_ = 0;
  std::vector<TypeVector> generators_;
  std::int64_t m_ = 0;
};

TypeVector type_vector_of_matrix(const ExponentMatrix& m);
ExponentMatrix standard_matrix(const TypeVector& tv, std::int64_t n);
inline std::int64_t degree(const TypeVector& tv) { return tv.degree(); }
inline std::int64_t weight(const TypeVector& tv) { return tv.weight(); }
BigInt orbit_size(const TypeVector& tv, std::int64_t n);

void require_width(const TypeVector& tv, std::int64_t n);

}  // namespace symdual
