#include "symdual/orbit_monomials.hpp"

#include <algorithm>
#include <sstream>

namespace symdual {

namespace {

void check_member(int c, SubsetMask t) {
  if (!t.subset_of(SubsetMask::full(c)))
    throw Error(ErrorKind::AmbientSizeExceeded, "support outside [c]");
}

}  // namespace

TypeVector::TypeVector(int c) : c_(c) {
  if (c < 0 || c > kMaxAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "c outside [0,16]");
}

TypeVector::TypeVector(int c, std::initializer_list<std::pair<SubsetMask, std::int64_t>> counts)
    : TypeVector(c) {
  for (auto [t, v] : counts) add(t, v);
}

std::int64_t TypeVector::count(SubsetMask t) const {
  for (const Entry& e : entries_)
    if (e.support == t) return e.count;
  return 0;
}

void TypeVector::add(SubsetMask t, std::int64_t delta) {
  if (t.empty() || delta == 0) return;
  set(t, count(t) + delta);
}

void TypeVector::set(SubsetMask t, std::int64_t value) {
  if (t.empty()) return;
  check_member(c_, t);
  if (value < 0) throw Error(ErrorKind::SchemaViolation, "negative column count");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                             [](const Entry& e, SubsetMask s) { return standard_before(e.support, s); });
  if (it != entries_.end() && it->support == t) {
    if (value == 0)
      entries_.erase(it);
    else
      it->count = value;
  } else if (value != 0) {
    entries_.insert(it, Entry{t, value});
  }
}

std::int64_t TypeVector::weight() const {
  std::int64_t w = 0;
  for (const Entry& e : entries_) w += e.count;
  return w;
}

std::int64_t TypeVector::degree() const {
  std::int64_t d = 0;
  for (const Entry& e : entries_) d += e.count * e.support.size();
  return d;
}

std::vector<SubsetMask> TypeVector::supports() const {
  std::vector<SubsetMask> out;
  for (const Entry& e : entries_) out.push_back(e.support);
  return out;
}

std::strong_ordering TypeVector::operator<=>(const TypeVector& o) const {
  if (auto cmp = c_ <=> o.c_; cmp != 0) return cmp;
  std::size_t i = 0, j = 0;
  while (i < entries_.size() && j < o.entries_.size()) {
    const Entry& a = entries_[i];
    const Entry& b = o.entries_[j];
    if (a.support == b.support) {
      if (a.count != b.count) return a.count <=> b.count;
      ++i, ++j;
    } else if (standard_before(a.support, b.support)) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < entries_.size()) return std::strong_ordering::greater;
  if (j < o.entries_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t TypeVector::hash() const {
  std::size_t h = static_cast<std::size_t>(c_) * 0x9e3779b97f4a7c15ull;
  for (const Entry& e : entries_) {
    h ^= e.support.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(e.count) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string TypeVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Entry& e : entries_) {
    if (!first) os << ',';
    first = false;
    for (int r : e.support.rows()) os << r;
    os << ':' << e.count;
  }
  os << '}';
  return os.str();
}

bool output_before(const TypeVector& a, const TypeVector& b) {
  std::int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a < b;
}

ExponentMatrix::ExponentMatrix(int c, int n) : c_(c), columns_(static_cast<std::size_t>(n)) {
  if (c < 0 || c > kMaxAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "c outside [0,16]");
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int c = static_cast<int>(rows.size());
  if (c > kMaxAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "more than 16 rows");
  int n = c == 0 ? 0 : static_cast<int>(rows[0].size());
  ExponentMatrix m(c, n);
  for (int i = 0; i < c; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorKind::MalformedMatrix, "ragged rows");
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v != 0 && v != 1) throw Error(ErrorKind::MalformedMatrix, "entry is not a bit");
      if (v) m.columns_[j] = m.columns_[j] | SubsetMask(1u << i);
    }
  }
  return m;
}

ExponentMatrix ExponentMatrix::from_columns(int c, std::vector<SubsetMask> columns) {
  ExponentMatrix m(c, 0);
  for (SubsetMask t : columns) check_member(c, t);
  m.columns_ = std::move(columns);
  return m;
}

std::vector<std::vector<int>> ExponentMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(c_, std::vector<int>(columns_.size(), 0));
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (int i = 0; i < c_; ++i) rows[i][j] = columns_[j].contains(i + 1) ? 1 : 0;
  return rows;
}

ExponentMatrix ExponentMatrix::permuted(std::span<const int> sigma) const {
  ExponentMatrix m(c_, cols());
  for (std::size_t j = 0; j < columns_.size(); ++j) m.columns_[sigma[j]] = columns_[j];
  return m;
}

GeneratorSystem::GeneratorSystem(int c, std::vector<TypeVector> generators)
    : c_(c), generators_(std::move(generators)) {
  if (c < 1 || c > kMaxAmbient) throw Error(ErrorKind::AmbientSizeExceeded, "c outside [1,16]");
  if (generators_.empty()) throw Error(ErrorKind::SchemaViolation, "generator system is empty");
  for (const TypeVector& a : generators_) {
    if (a.ambient() != c) throw Error(ErrorKind::SchemaViolation, "generator ambient mismatch");
    if (a.weight() < 1) throw Error(ErrorKind::SchemaViolation, "generator has weight 0");
    m_ = std::max(m_, a.weight());
  }
}

TypeVector type_vector_of_matrix(const ExponentMatrix& m) {
  TypeVector tv(m.rows());
  for (SubsetMask t : m.columns()) tv.add(t, 1);
  return tv;
}

void require_width(const TypeVector& tv, std::int64_t n) {
  if (n < tv.weight())
    throw Error(ErrorKind::WidthTooSmall,
                "width " + std::to_string(n) + " below weight " + std::to_string(tv.weight()));
}

ExponentMatrix standard_matrix(const TypeVector& tv, std::int64_t n) {
  require_width(tv, n);
  std::vector<SubsetMask> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (const auto& e : tv.entries()) cols.insert(cols.end(), static_cast<std::size_t>(e.count), e.support);
  cols.resize(static_cast<std::size_t>(n), SubsetMask());
  return ExponentMatrix::from_columns(tv.ambient(), std::move(cols));
}

BigInt orbit_size(const TypeVector& tv, std::int64_t n) {
  require_width(tv, n);
  // n!/(ℓ_∅! Π ℓ_T!) as a product of binomials C(remaining, ℓ_T).
  BigInt result = 1;
  std::int64_t remaining = n;
  for (const auto& e : tv.entries()) {
    BigInt b = 1;
    for (std::int64_t i = 0; i < e.count; ++i) {
      b *= remaining - i;
      b /= i + 1;
    }
    result *= b;
    remaining -= e.count;
  }
  return result;
}

}  // namespace symdual
