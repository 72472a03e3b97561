#include "symdual/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "symdual/dual_core.hpp"

namespace symdual {

namespace {

void check_bits(int c, std::int64_t n, int cap) {
  if (c * n > cap)
    throw Error(ErrorKind::InstanceTooLarge,
                "c*n=" + std::to_string(c * n) + " exceeds " + std::to_string(cap));
}

std::uint32_t column_bits(SubsetMask t, int c, int n, int col) {
  std::uint32_t bits = 0;
  for (int i = 0; i < c; ++i)
    if ((t.bits() >> i) & 1u) bits |= 1u << (i * n + col);
  return bits;
}

}  // namespace

DenseMonomial DenseMonomial::of_matrix(const ExponentMatrix& m) {
  check_bits(m.rows(), m.cols(), kMaxDenseBits);
  DenseMonomial d{m.rows(), m.cols(), 0};
  for (int j = 0; j < m.cols(); ++j) d.bits |= column_bits(m.columns()[j], d.c, d.n, j);
  return d;
}

ExponentMatrix DenseMonomial::matrix() const {
  std::vector<SubsetMask> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::uint32_t s = 0;
    for (int i = 0; i < c; ++i)
      if ((bits >> (i * n + j)) & 1u) s |= 1u << i;
    cols[j] = SubsetMask(s);
  }
  return ExponentMatrix::from_columns(c, std::move(cols));
}

TypeVector DenseMonomial::orbit() const { return type_vector_of_matrix(matrix()); }

std::vector<DenseMonomial> expand_orbit(const TypeVector& tv, std::int64_t n) {
  require_width(tv, n);
  const int c = tv.ambient();
  check_bits(c, n, kMaxDenseBits);
  auto cols = standard_matrix(tv, n).columns();
  std::vector<std::uint32_t> keys;
  for (SubsetMask t : cols) keys.push_back(t.bits());
  std::sort(keys.begin(), keys.end());
  std::vector<DenseMonomial> out;
  do {
    DenseMonomial d{c, static_cast<int>(n), 0};
    for (int j = 0; j < n; ++j) d.bits |= column_bits(SubsetMask(keys[j]), c, d.n, j);
    out.push_back(d);
  } while (std::next_permutation(keys.begin(), keys.end()));
  return out;
}

std::vector<DenseMonomial> expand_system(const GeneratorSystem& g, std::int64_t n) {
  std::vector<DenseMonomial> out;
  for (const TypeVector& a : g.generators()) {
    auto orbit = expand_orbit(a, n);
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  return out;
}

bool brute_in_dual(const std::vector<DenseMonomial>& gens, const DenseMonomial& b) {
  for (const DenseMonomial& m : gens) {
    if (m.c != b.c || m.n != b.n) throw Error(ErrorKind::WidthMismatch, "monomials from different rings");
    if ((m.bits & b.bits) == 0) return false;
  }
  return true;
}

std::vector<std::uint8_t> brute_dual_table(const std::vector<DenseMonomial>& gens, int c, int n) {
  check_bits(c, n, kMaxScanBits);
  const int total = c * n;
  const std::uint32_t size = 1u << total, full = size - 1u;
  // outside[B] = 1 when B misses some generator entirely.
  std::vector<std::uint8_t> outside(size, 0);
  for (const DenseMonomial& m : gens) {
    if (m.c != c || m.n != n) throw Error(ErrorKind::WidthMismatch, "monomials from different rings");
    outside[full & ~m.bits] = 1;
  }
  for (int v = 0; v < total; ++v) {
    const std::uint32_t bit = 1u << v;
    for (std::uint32_t b = 0; b < size; ++b)
      if (!(b & bit)) outside[b] |= outside[b | bit];
  }
  for (auto& x : outside) x ^= 1u;
  return outside;
}

std::vector<std::uint8_t> brute_ideal_table(const std::vector<DenseMonomial>& gens, int c, int n) {
  check_bits(c, n, kMaxScanBits);
  const int total = c * n;
  const std::uint32_t size = 1u << total;
  std::vector<std::uint8_t> in(size, 0);
  for (const DenseMonomial& m : gens) {
    if (m.c != c || m.n != n) throw Error(ErrorKind::WidthMismatch, "monomials from different rings");
    in[m.bits] = 1;
  }
  for (int v = 0; v < total; ++v) {
    const std::uint32_t bit = 1u << v;
    for (std::uint32_t b = 0; b < size; ++b)
      if (b & bit) in[b] |= in[b ^ bit];
  }
  return in;
}

std::vector<std::uint32_t> minimal_members(const std::vector<std::uint8_t>& table, int bits) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (!table[b]) continue;
    bool minimal = true;
    for (int v = 0; v < bits && minimal; ++v)
      if (((b >> v) & 1u) && table[b ^ (1u << v)]) minimal = false;
    if (minimal) out.push_back(b);
  }
  return out;
}

std::vector<TypeVector> brute_min_gens_dual(const GeneratorSystem& g, std::int64_t n) {
  if (n < g.max_weight()) throw Error(ErrorKind::WidthTooSmall, "n below m");
  const int c = g.ambient();
  check_bits(c, n, kMaxScanBits);
  auto table = brute_dual_table(expand_system(g, n), c, static_cast<int>(n));
  std::set<TypeVector> orbits;
  for (std::uint32_t b : minimal_members(table, c * static_cast<int>(n)))
    orbits.insert(DenseMonomial{c, static_cast<int>(n), b}.orbit());
  std::vector<TypeVector> out(orbits.begin(), orbits.end());
  std::sort(out.begin(), out.end(), output_before);
  return out;
}

bool brute_divides(const TypeVector& bp, const TypeVector& b, std::int64_t n) {
  require_width(bp, n);
  require_width(b, n);
  if (n > kMaxBruteDivideWidth) throw Error(ErrorKind::InstanceTooLarge, "brute divisibility needs n <= 7");
  auto small = standard_matrix(bp, n).columns();
  auto big = standard_matrix(b, n).columns();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::int64_t j = 0; j < n && ok; ++j) ok = small[j].subset_of(big[sigma[j]]);
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

std::map<std::int64_t, BigInt> brute_f_vector(const GeneratorSystem& g, std::int64_t n) {
  const int c = g.ambient();
  check_bits(c, n, kMaxScanBits);
  std::vector<DenseMonomial> gens;
  if (n >= g.max_weight()) gens = expand_system(g, n);
  auto in = brute_ideal_table(gens, c, static_cast<int>(n));
  std::map<std::int64_t, std::set<TypeVector>> faces;
  for (std::uint32_t b = 0; b < in.size(); ++b)
    if (!in[b]) faces[std::popcount(b) - 1].insert(DenseMonomial{c, static_cast<int>(n), b}.orbit());
  std::map<std::int64_t, BigInt> out;
  for (const auto& [j, orbits] : faces) out[j] = orbits.size();
  return out;
}

bool brute_dual_involution_check(const GeneratorSystem& g, std::int64_t n) {
  if (n < g.max_weight()) throw Error(ErrorKind::WidthTooSmall, "n below m");
  const int c = g.ambient();
  const int ni = static_cast<int>(n);
  check_bits(c, n, kMaxInvolutionBits);
  const int bits = c * ni;

  auto ideal = brute_ideal_table(expand_system(g, n), c, ni);
  auto ideal_gens = minimal_members(ideal, bits);
  auto dual = brute_dual_table(expand_system(g, n), c, ni);
  auto dual_gens = minimal_members(dual, bits);

  // Closed under adjacent column swaps, hence under Sym(n).
  std::set<std::uint32_t> dual_set(dual_gens.begin(), dual_gens.end());
  for (std::uint32_t b : dual_gens) {
    for (int j = 0; j + 1 < ni; ++j) {
      std::uint32_t swapped = b;
      for (int i = 0; i < c; ++i) {
        std::uint32_t x = 1u << (i * ni + j), y = 1u << (i * ni + j + 1);
        bool bx = b & x, by = b & y;
        swapped &= ~(x | y);
        if (bx) swapped |= y;
        if (by) swapped |= x;
      }
      if (!dual_set.count(swapped)) return false;
    }
  }

  std::vector<DenseMonomial> dual_monos;
  for (std::uint32_t b : dual_gens) dual_monos.push_back({c, ni, b});
  auto back = minimal_members(brute_dual_table(dual_monos, c, ni), bits);
  return back == ideal_gens;
}

std::vector<TypeVector> scan_min_gens_dual(const GeneratorSystem& g, std::int64_t n, const Limits& limits) {
  if (n < g.max_weight()) throw Error(ErrorKind::WidthTooSmall, "n below m");
  const int c = g.ambient();
  DualMembership membership(g, limits);
  std::vector<SubsetMask> order = standard_order(c);
  order.pop_back();
  std::vector<TypeVector> out;
  TypeVector cur(c);
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) {
    if (i == order.size()) {
      if (membership.is_minimal(cur, n)) out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur.set(order[i], v);
      go(i + 1, left - v);
    }
    cur.set(order[i], 0);
  };
  go(0, n);
  std::sort(out.begin(), out.end(), output_before);
  return out;
}

}  // namespace symdual
