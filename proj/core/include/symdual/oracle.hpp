#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symdual/orbit_monomials.hpp"

namespace symdual {

inline constexpr int kMaxDenseBits = 22;
inline constexpr int kMaxScanBits = 20;
inline constexpr int kMaxInvolutionBits = 18;
inline constexpr std::int64_t kMaxBruteDivideWidth = 7;

// Squarefree monomial of R_n: variable x_{i,j} is bit (i−1)·n + (j−1).
struct DenseMonomial {
  int c = 0;
  int n = 0;
  std::uint32_t bits = 0;

  static DenseMonomial of_matrix(const ExponentMatrix& m);
  ExponentMatrix matrix() const;
  TypeVector orbit() const;  // canonical form: column-support multiset
  bool operator==(const DenseMonomial&) const = default;
  auto operator<=>(const DenseMonomial&) const = default;
};

std::vector<DenseMonomial> expand_orbit(const TypeVector& tv, std::int64_t n);
std::vector<DenseMonomial> expand_system(const GeneratorSystem& g, std::int64_t n);

bool brute_in_dual(const std::vector<DenseMonomial>& gens, const DenseMonomial& b);

// Per-monomial flags over all 2^{cn} squarefree monomials of R_n.
std::vector<std::uint8_t> brute_dual_table(const std::vector<DenseMonomial>& gens, int c, int n);
std::vector<std::uint8_t> brute_ideal_table(const std::vector<DenseMonomial>& gens, int c, int n);
std::vector<std::uint32_t> minimal_members(const std::vector<std::uint8_t>& table, int bits);

std::vector<TypeVector> brute_min_gens_dual(const GeneratorSystem& g, std::int64_t n);
bool brute_divides(const TypeVector& bp, const TypeVector& b, std::int64_t n);
// j → number of orbits of j-dimensional faces of Δ(I_n), including j = −1.
std::map<std::int64_t, BigInt> brute_f_vector(const GeneratorSystem& g, std::int64_t n);
bool brute_dual_involution_check(const GeneratorSystem& g, std::int64_t n);

// Scans every type vector of weight ≤ n with the symmetric membership test.
std::vector<TypeVector> scan_min_gens_dual(const GeneratorSystem& g, std::int64_t n,
                                           const Limits& limits = {});

}  // namespace symdual
