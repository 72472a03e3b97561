#include "symdual/json_io.hpp"

#include <algorithm>
#include <string>

namespace symdual::json {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaViolation, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json subset_to_json(SubsetMask t) {
  Json a = Json::array();
  for (int r : t.rows()) a.push_back(r);
  return a;
}

SubsetMask subset_from_json(const Json& j, int c) {
  if (!j.is_array()) schema("subset must be an array of row indices");
  std::uint32_t bits = 0;
  for (const Json& x : j) {
    std::int64_t r = as_int(x, "row index");
    if (r < 1 || r > c) schema("row index " + std::to_string(r) + " outside [1," + std::to_string(c) + "]");
    if ((bits >> (r - 1)) & 1u) schema("row index " + std::to_string(r) + " repeated");
    bits |= 1u << (r - 1);
  }
  return SubsetMask(bits);
}

Json family_to_json(const Family& f) {
  auto members = f.members();
  std::sort(members.begin(), members.end(), standard_before);
  Json a = Json::array();
  for (SubsetMask t : members) a.push_back(subset_to_json(t));
  return a;
}

Json type_vector_to_json(const TypeVector& tv) {
  Json counts = Json::array();
  for (const auto& e : tv.entries()) counts.push_back({{"support", subset_to_json(e.support)}, {"count", e.count}});
  return {{"c", tv.ambient()}, {"counts", counts}};
}

TypeVector type_vector_from_json(const Json& j, int default_c) {
  if (!j.is_object()) schema("type vector must be an object");
  int c = j.contains("c") ? static_cast<int>(as_int(j.at("c"), "c")) : default_c;
  if (c < 1 || c > kMaxAmbient) schema("type vector needs c in [1,16]");
  if (default_c >= 0 && c != default_c) schema("generator c differs from system c");
  TypeVector tv(c);
  const Json& counts = field(j, "counts");
  auto put = [&](SubsetMask t, std::int64_t v) {
    if (t.empty()) schema("type vector supports must be nonempty");
    if (v < 0) schema("column counts must be nonnegative");
    tv.add(t, v);
  };
  if (counts.is_array()) {
    for (const Json& e : counts) put(subset_from_json(field(e, "support"), c), as_int(field(e, "count"), "count"));
  } else if (counts.is_object()) {
    for (const auto& [key, v] : counts.items()) {
      Json parsed;
      try {
        parsed = Json::parse(key);
      } catch (const nlohmann::json::exception&) {
        schema("bad subset key " + key);
      }
      put(subset_from_json(parsed, c), as_int(v, "count"));
    }
  } else {
    schema("counts must be an array or an object");
  }
  return tv;
}

Json matrix_to_json(const ExponentMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return rows;
}

ExponentMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : j) {
    if (!r.is_array()) schema("matrix row must be an array");
    std::vector<int> row;
    for (const Json& x : r) {
      if (!x.is_number_integer()) throw Error(ErrorKind::MalformedMatrix, "matrix entries must be 0 or 1");
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return ExponentMatrix::from_rows(rows);
}

GeneratorSystem generator_system_from_json(const Json& j) {
  int c = static_cast<int>(as_int(field(j, "c"), "c"));
  if (c < 1 || c > kMaxAmbient) schema("c must be in [1,16]");
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty()) schema("generators must be a nonempty array");
  std::vector<TypeVector> out;
  for (const Json& g : gens) {
    if (g.is_array()) {
      ExponentMatrix m = matrix_from_json(g);
      if (m.rows() != c) schema("generator matrix must have c rows");
      out.push_back(type_vector_of_matrix(m));
    } else {
      out.push_back(type_vector_from_json(g, c));
    }
  }
  return GeneratorSystem(c, std::move(out));
}

Json generator_system_to_json(const GeneratorSystem& g) {
  Json gens = Json::array();
  for (const TypeVector& a : g.generators()) gens.push_back(type_vector_to_json(a));
  return {{"c", g.ambient()}, {"generators", gens}};
}

SumPolyhedron polyhedron_from_json(const Json& j) {
  SumPolyhedron p;
  std::int64_t k = as_int(field(j, "k"), "k");
  if (k < 0 || k > kMaxPolyhedronDim) throw Error(ErrorKind::DimensionExceeded, "k must be in [0,8]");
  p.k = static_cast<int>(k);
  auto read = [&](const char* key, std::map<SubsetMask, std::int64_t>& into) {
    if (!j.contains(key)) return;
    const Json& list = j.at(key);
    if (!list.is_array()) schema(std::string(key) + " must be an array");
    for (const Json& e : list) {
      SubsetMask t = subset_from_json(field(e, "support"), p.k);
      std::int64_t b = as_int(field(e, "bound"), "bound");
      if (!into.emplace(t, b).second) schema("repeated support in " + std::string(key));
    }
  };
  read("lower", p.lower);
  read("upper", p.upper);
  return p;
}

Json polyhedron_to_json(const SumPolyhedron& p) {
  auto dump = [](const std::map<SubsetMask, std::int64_t>& m) {
    Json a = Json::array();
    for (const auto& [t, b] : m) a.push_back({{"support", subset_to_json(t)}, {"bound", b}});
    return a;
  };
  return {{"k", p.k}, {"lower", dump(p.lower)}, {"upper", dump(p.upper)}};
}

Json orthant_to_json(const Orthant& o) {
  Json fixed = Json::array(), bounded = Json::array();
  for (int i = 0; i < o.k; ++i) {
    Json e = {{"coordinate", i + 1}, {"value", o.apex[i]}};
    (o.fixed.contains(i + 1) ? fixed : bounded).push_back(e);
  }
  return {{"fixed", fixed}, {"bounded", bounded}};
}

Json polynomial_to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& s : p.coeff_strings()) coeffs.push_back(s);
  return {{"coeffs", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

Json big_to_json(const BigInt& v) { return v.str(); }

}  // namespace symdual::json
