#include "symdual/counting.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symdual {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::vector<std::string> RationalPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  for (const Rational& q : coeffs_) out.push_back(q.str());
  return out;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& q = coeffs_[d];
    if (q == 0) continue;
    Rational mag = q < 0 ? Rational(-q) : q;
    if (first)
      os << (q < 0 ? "-" : "");
    else
      os << (q < 0 ? " - " : " + ");
    first = false;
    if (d == 0 || mag != 1) os << mag.str() << (d > 0 ? "*" : "");
    if (d >= 1) os << "n";
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

PolynomialFit fit_polynomial(const CountSeries& series, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InsufficientSamples, "negative degree");
  const std::size_t d = static_cast<std::size_t>(max_degree);
  if (series.values.size() < d + 2)
    throw Error(ErrorKind::InsufficientSamples,
                "need " + std::to_string(d + 2) + " samples, have " + std::to_string(series.values.size()));

  // Newton forward differences at base b over the last d+1 samples.
  const std::size_t base = series.values.size() - d - 1;
  std::vector<Rational> diff;
  for (std::size_t i = 0; i <= d; ++i) diff.emplace_back(series.values[base + i]);
  std::vector<Rational> leading;
  for (std::size_t order = 0; order <= d; ++order) {
    leading.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // Σ Δ^i · C(n − b, i) expanded into monomials.
  const Rational b = series.first + static_cast<std::int64_t>(base);
  std::vector<Rational> coeffs(d + 1, Rational(0));
  std::vector<Rational> falling{Rational(1)};  // Π_{t<i} (n − b − t) / i!
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t p = 0; p < falling.size(); ++p) coeffs[p] += leading[i] * falling[p];
    std::vector<Rational> next(falling.size() + 1, Rational(0));
    Rational shift = -(b + static_cast<std::int64_t>(i));
    for (std::size_t p = 0; p < falling.size(); ++p) {
      next[p + 1] += falling[p];
      next[p] += falling[p] * shift;
    }
    for (auto& q : next) q /= static_cast<std::int64_t>(i + 1);
    falling = std::move(next);
  }
  RationalPolynomial poly(std::move(coeffs));

  std::int64_t stable = series.first + static_cast<std::int64_t>(base);
  while (stable > series.first && poly(Rational(stable - 1)) == Rational(series.at(stable - 1))) --stable;
  if (stable == series.first + static_cast<std::int64_t>(base))
    throw Error(ErrorKind::NoStableWindow, "no sample before the interpolation window is predicted");
  return {std::move(poly), stable};
}

int dual_count_degree_bound(int c) {
  std::int64_t b = 1;
  for (int i = 1; i <= c / 2; ++i) b = b * (c - i + 1) / i;
  return static_cast<int>(b - 1);
}

BigInt dual_orbit_count(const GeneratorSystem& g, std::int64_t n, const Limits& limits) {
  return BigInt(min_gens(g, n, limits).size());
}

CountSeries dual_count_series(const GeneratorSystem& g, std::int64_t n_lo, std::int64_t n_hi,
                              const Limits& limits) {
  if (n_lo < g.max_weight()) throw Error(ErrorKind::WidthTooSmall, "series starts below m");
  DualMembership membership(g, limits);
  auto families = generator_families(g, limits);
  CountSeries s;
  s.first = n_lo;
  for (std::int64_t n = n_lo; n <= n_hi; ++n)
    s.values.emplace_back(min_gens_from_families(membership, families, n).size());
  return s;
}

MinDegreeSeries min_degree_series(const GeneratorSystem& g, std::int64_t n_lo, std::int64_t n_hi,
                                  const Limits& limits) {
  if (n_lo < g.max_weight()) throw Error(ErrorKind::WidthTooSmall, "series starts below m");
  DualMembership membership(g, limits);
  auto families = generator_families(g, limits);
  MinDegreeSeries r;
  r.first = n_lo;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    auto gens = min_gens_from_families(membership, families, n);
    if (gens.empty()) throw Error(ErrorKind::InternalInvariant, "dual has no generators");
    r.degrees.push_back(gens.front().degree());
  }
  const std::size_t len = r.degrees.size();
  if (len < 3) throw Error(ErrorKind::NoStableWindow, "need at least 3 widths");
  std::int64_t slope = r.degrees[len - 1] - r.degrees[len - 2];
  std::size_t start = len - 2;
  while (start > 0 && r.degrees[start] - r.degrees[start - 1] == slope) --start;
  if (len - start < 3) throw Error(ErrorKind::NoStableWindow, "first differences are not constant");
  if (slope < 0 || slope > g.ambient())
    throw Error(ErrorKind::InternalInvariant, "least-degree slope outside [0, c]");
  r.slope = slope;
  r.window_start = n_lo + static_cast<std::int64_t>(start);
  r.window_end = n_hi;
  r.intercept = r.degrees[start] - slope * r.window_start;
  return r;
}

std::map<std::int64_t, BigInt> facet_orbits_by_dimension(const GeneratorSystem& g, std::int64_t n,
                                                         const Limits& limits) {
  std::map<std::int64_t, BigInt> hist;
  for (const TypeVector& b : min_gens(g, n, limits)) hist[g.ambient() * n - 1 - b.degree()] += 1;
  return hist;
}

std::vector<TypeVector> type_vectors_of_degree(int c, std::int64_t degree, std::int64_t max_weight) {
  std::vector<TypeVector> out;
  std::vector<SubsetMask> order = standard_order(c);
  order.pop_back();  // ∅
  TypeVector cur(c);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left,
                                                                      std::int64_t weight_left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (i == order.size()) return;
    const std::int64_t size = order[i].size();
    for (std::int64_t v = std::min(left / size, weight_left); v >= 0; --v) {
      cur.set(order[i], v);
      go(i + 1, left - v * size, weight_left - v);
    }
    cur.set(order[i], 0);
  };
  go(0, degree, max_weight);
  std::sort(out.begin(), out.end(), output_before);
  return out;
}

std::vector<TypeVector> face_orbits(const GeneratorSystem& g, std::int64_t j, std::int64_t n) {
  if (n < g.max_weight())
    throw Error(ErrorKind::WidthTooSmall, "n below m");
  std::vector<TypeVector> faces;
  if (j < 0) throw Error(ErrorKind::SchemaViolation, "face dimension must be >= 0");
  for (TypeVector& b : type_vectors_of_degree(g.ambient(), j + 1, n)) {
    bool in_ideal = false;
    for (const TypeVector& a : g.generators())
      if ((in_ideal = divides_up_to_sym(a, b, n))) break;
    if (!in_ideal) faces.push_back(std::move(b));
  }
  return faces;
}

BigInt face_orbit_count(const GeneratorSystem& g, std::int64_t j, std::int64_t n) {
  return BigInt(face_orbits(g, j, n).size());
}

GeneratorSystem skeleton_system(const GeneratorSystem& g, std::int64_t j) {
  if (j < 0) throw Error(ErrorKind::SchemaViolation, "skeleton dimension must be >= 0");
  std::vector<TypeVector> gens = g.generators();
  for (TypeVector& tv : type_vectors_of_degree(g.ambient(), j + 2, j + 2)) gens.push_back(std::move(tv));
  return GeneratorSystem(g.ambient(), std::move(gens));
}

}  // namespace symdual
