#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdual/dual_core.hpp"
#include "symdual/orbit_monomials.hpp"

namespace symdual {

using Rational = boost::multiprecision::cpp_rational;

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);  // ascending degree

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& n) const;
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;  // e.g. "1/2*n^2 + 11/2*n - 15"
  bool operator==(const RationalPolynomial&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

// Exact counts at consecutive widths first, first+1, ...
struct CountSeries {
  std::int64_t first = 0;
  std::vector<BigInt> values;
  std::optional<std::int64_t> stable_from;

  std::int64_t last() const { return first + static_cast<std::int64_t>(values.size()) - 1; }
  const BigInt& at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - first)); }
};

struct PolynomialFit {
  RationalPolynomial polynomial;
  std::int64_t stable_from = 0;
};

PolynomialFit fit_polynomial(const CountSeries& series, int max_degree);

// C(c, ⌊c/2⌋) − 1
int dual_count_degree_bound(int c);

BigInt dual_orbit_count(const GeneratorSystem& g, std::int64_t n, const Limits& limits = {});
CountSeries dual_count_series(const GeneratorSystem& g, std::int64_t n_lo, std::int64_t n_hi,
                              const Limits& limits = {});

struct MinDegreeSeries {
  std::int64_t first = 0;
  std::vector<std::int64_t> degrees;  // d(n) for n = first, first+1, ...
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  std::int64_t window_start = 0;  // d(n) = slope·n + intercept on [window_start, window_end]
  std::int64_t window_end = 0;
};

MinDegreeSeries min_degree_series(const GeneratorSystem& g, std::int64_t n_lo, std::int64_t n_hi,
                                  const Limits& limits = {});

// dimension c·n − 1 − degree(B) over the minimal generators B of the dual
std::map<std::int64_t, BigInt> facet_orbits_by_dimension(const GeneratorSystem& g, std::int64_t n,
                                                         const Limits& limits = {});

// All type vectors of the given degree with weight ≤ max_weight, in output order.
std::vector<TypeVector> type_vectors_of_degree(int c, std::int64_t degree, std::int64_t max_weight);

BigInt face_orbit_count(const GeneratorSystem& g, std::int64_t j, std::int64_t n);
std::vector<TypeVector> face_orbits(const GeneratorSystem& g, std::int64_t j, std::int64_t n);

GeneratorSystem skeleton_system(const GeneratorSystem& g, std::int64_t j);

}  // namespace symdual
