#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "symdual/avoidance.hpp"
#include "symdual/counting.hpp"
#include "symdual/dual_core.hpp"
#include "symdual/json_io.hpp"
#include "symdual/lattice_geometry.hpp"
#include "symdual/oracle.hpp"

namespace symdual::cli {

using json::Json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaViolation, what); }

Json load_input(const JobSpec& job) {
  if (job.input_path && job.inline_json) schema("give either --input or --json, not both");
  std::string text;
  if (job.inline_json) {
    text = *job.inline_json;
  } else if (job.input_path) {
    std::ifstream in(*job.input_path);
    if (!in) schema("cannot read " + *job.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    schema("missing --input or --json");
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("input is not JSON: ") + e.what());
  }
}

std::pair<std::int64_t, std::int64_t> need_range(const JobSpec& job) {
  if (!job.n_range) schema("this command needs --n");
  return *job.n_range;
}

Json gens_json(const std::vector<TypeVector>& gens, std::int64_t n) {
  Json a = Json::array();
  for (const TypeVector& b : gens) {
    Json e = json::type_vector_to_json(b);
    e["degree"] = b.degree();
    e["orbit_size"] = json::big_to_json(orbit_size(b, n));
    a.push_back(std::move(e));
  }
  return a;
}

Json series_json(const CountSeries& s) {
  Json samples = Json::array();
  for (std::int64_t n = s.first; n <= s.last(); ++n)
    samples.push_back({{"n", n}, {"count", json::big_to_json(s.at(n))}});
  return samples;
}

CountSeries series_from_json(const Json& doc) {
  const Json& samples = doc.at("samples");
  if (!samples.is_array() || samples.empty()) schema("samples must be a nonempty array");
  CountSeries s;
  std::int64_t expect = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Json& e = samples[i];
    if (!e.contains("n") || !e.contains("count") || !e.at("n").is_number_integer())
      schema("sample needs integer n and count");
    std::int64_t n = e.at("n").get<std::int64_t>();
    if (i == 0)
      s.first = expect = n;
    else if (n != expect)
      schema("samples must be at consecutive n");
    ++expect;
    const Json& c = e.at("count");
    try {
      s.values.emplace_back(c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>()));
    } catch (const std::exception&) {
      schema("count must be an integer or a decimal string");
    }
  }
  return s;
}

Json do_dual_gens(const JobSpec& job, const Json& input, const Limits& limits) {
  auto g = json::generator_system_from_json(input);
  auto [lo, hi] = need_range(job);
  DualMembership membership(g, limits);
  auto families = generator_families(g, limits);
  Json results = Json::array();
  for (std::int64_t n = lo; n <= hi; ++n) {
    auto gens = min_gens_from_families(membership, families, n);
    results.push_back({{"n", n}, {"count", std::to_string(gens.size())}, {"generators", gens_json(gens, n)}});
  }
  return {{"c", g.ambient()}, {"results", results}};
}

Json do_count(const JobSpec& job, const Json& input, const Limits& limits) {
  auto g = json::generator_system_from_json(input);
  auto [lo, hi] = need_range(job);
  return {{"c", g.ambient()}, {"samples", series_json(dual_count_series(g, lo, hi, limits))}};
}

Json do_fit(const JobSpec& job, const Json& input, const Limits& limits) {
  CountSeries s;
  int max_degree;
  if (input.contains("samples")) {
    s = series_from_json(input);
    max_degree = input.contains("c") && input.at("c").is_number_integer()
                     ? dual_count_degree_bound(input.at("c").get<int>())
                     : static_cast<int>(s.values.size()) - 2;
  } else {
    auto g = json::generator_system_from_json(input);
    auto [lo, hi] = need_range(job);
    s = dual_count_series(g, lo, hi, limits);
    max_degree = dual_count_degree_bound(g.ambient());
  }
  auto fit = fit_polynomial(s, max_degree);
  Json poly = json::polynomial_to_json(fit.polynomial);
  poly["stable_from"] = fit.stable_from;
  return {{"max_degree", max_degree}, {"polynomial", poly}, {"samples", series_json(s)}};
}

Json do_min_degree(const JobSpec& job, const Json& input, const Limits& limits) {
  auto g = json::generator_system_from_json(input);
  auto [lo, hi] = need_range(job);
  if (lo == hi) {
    auto r = min_degree_gens(g, lo, limits);
    return {{"n", lo}, {"degree", r.degree}, {"count", std::to_string(r.generators.size())},
            {"generators", gens_json(r.generators, lo)}};
  }
  auto r = min_degree_series(g, lo, hi, limits);
  Json degrees = Json::array();
  for (std::size_t i = 0; i < r.degrees.size(); ++i)
    degrees.push_back({{"n", r.first + static_cast<std::int64_t>(i)}, {"degree", r.degrees[i]}});
  return {{"degrees", degrees},
          {"slope", r.slope},
          {"intercept", r.intercept},
          {"window", {r.window_start, r.window_end}}};
}

Json do_faces(const JobSpec& job, const Json& input, const Limits&) {
  auto g = json::generator_system_from_json(input);
  auto [lo, hi] = need_range(job);
  if (!job.j) schema("faces needs --j");
  Json results = Json::array();
  for (std::int64_t n = lo; n <= hi; ++n) {
    auto faces = face_orbits(g, *job.j, n);
    Json list = Json::array();
    for (const auto& f : faces) list.push_back(json::type_vector_to_json(f));
    results.push_back({{"n", n}, {"count", std::to_string(faces.size())}, {"faces", list}});
  }
  return {{"j", *job.j}, {"results", results}};
}

Json do_facets(const JobSpec& job, const Json& input, const Limits& limits) {
  auto g = json::generator_system_from_json(input);
  auto [lo, hi] = need_range(job);
  Json results = Json::array();
  for (std::int64_t n = lo; n <= hi; ++n) {
    Json hist = Json::array();
    for (const auto& [dim, count] : facet_orbits_by_dimension(g, n, limits))
      hist.push_back({{"dimension", dim}, {"count", json::big_to_json(count)}});
    results.push_back({{"n", n}, {"by_dimension", hist}});
  }
  return {{"results", results}};
}

Json do_cone(const JobSpec& job, const Json& input, const Limits&) {
  auto p = json::polyhedron_from_json(input);
  auto orthants = cone_decompose(p);
  Json list = Json::array();
  for (const auto& o : orthants) list.push_back(json::orthant_to_json(o));
  Json doc = {{"polyhedron", json::polyhedron_to_json(p)}, {"orthants", list},
              {"polynomial_from", polynomial_threshold(orthants)}};
  if (job.n_range) {
    Json counts = Json::array();
    for (std::int64_t n = job.n_range->first; n <= job.n_range->second; ++n)
      counts.push_back({{"n", n}, {"count", json::big_to_json(count_on_slice(orthants, n))}});
    doc["slices"] = counts;
  }
  return doc;
}

Json do_match(const JobSpec&, const Json& input, const Limits& limits) {
  if (!input.contains("c") || !input.at("c").is_number_integer()) schema("match needs integer c");
  int c = input.at("c").get<int>();
  if (c < 1 || c > kMaxAmbient) schema("c must be in [1,16]");
  auto read = [&](const char* key) {
    if (!input.contains(key) || !input.at(key).is_array()) schema(std::string("match needs array ") + key);
    std::vector<SubsetMask> v;
    for (const Json& s : input.at(key)) v.push_back(json::subset_from_json(s, c));
    return v;
  };
  auto f = read("f");
  auto g = read("g");
  auto r = find_avoiding_permutation(c, f, g, limits);
  Json doc = {{"feasible", r.sigma.has_value()}};
  if (r.sigma) {
    Json sigma = Json::array();
    for (std::size_t x : *r.sigma) sigma.push_back(x + 1);
    doc["sigma"] = sigma;
  } else {
    doc["violated_ideal"] = json::family_to_json(r.certificate->family());
  }
  return doc;
}

TypeVector random_type_vector(std::mt19937_64& rng, int c, std::int64_t max_weight) {
  TypeVector tv(c);
  std::uniform_int_distribution<std::int64_t> w(0, max_weight);
  std::uniform_int_distribution<std::uint32_t> s(1, (1u << c) - 1u);
  for (std::int64_t i = w(rng); i > 0; --i) tv.add(SubsetMask(s(rng)), 1);
  return tv;
}

Json do_verify(const JobSpec& job, const Json& input, const Limits& limits) {
  auto g = json::generator_system_from_json(input);
  const int c = g.ambient();
  std::int64_t lo = g.max_weight(), hi = g.max_weight() + 1;
  if (job.n_range) std::tie(lo, hi) = *job.n_range;
  if (c * hi > kMaxScanBits) schema("verify needs c*n <= 20");
  std::mt19937_64 rng(job.seed);
  Json failures = Json::array();
  std::int64_t min_gen_checks = 0, involution_checks = 0, face_checks = 0, divide_checks = 0,
               match_checks = 0;

  for (std::int64_t n = lo; n <= hi; ++n) {
    if (min_gens(g, n, limits) != brute_min_gens_dual(g, n))
      failures.push_back("min_gens differs from brute force at n=" + std::to_string(n));
    ++min_gen_checks;
    if (c * n <= kMaxInvolutionBits) {
      if (!brute_dual_involution_check(g, n)) failures.push_back("involution fails at n=" + std::to_string(n));
      ++involution_checks;
    }
    auto fv = brute_f_vector(g, n);
    for (const auto& [j, count] : fv) {
      if (j < 0) continue;
      if (face_orbit_count(g, j, n) != count)
        failures.push_back("face count differs at n=" + std::to_string(n) + " j=" + std::to_string(j));
      ++face_checks;
    }
  }
  for (int t = 0; t < 200; ++t) {
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, std::min<std::int64_t>(6, kMaxBruteDivideWidth))(rng);
    auto a = random_type_vector(rng, c, n), b = random_type_vector(rng, c, n);
    if (divides_up_to_sym(a, b, n) != brute_divides(a, b, n))
      failures.push_back("divisibility differs on " + a.to_string() + " | " + b.to_string());
    ++divide_checks;
  }
  if (c <= limits.enumeration_max_c) {
    for (int t = 0; t < 200; ++t) {
      std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      std::uniform_int_distribution<std::uint32_t> s(0, (1u << c) - 1u);
      std::vector<SubsetMask> f(n), gg(n);
      for (auto& x : f) x = SubsetMask(s(rng));
      for (auto& x : gg) x = SubsetMask(s(rng));
      bool constructive = find_avoiding_permutation(c, f, gg, limits).sigma.has_value();
      if (constructive != brute_force_avoidance(f, gg).has_value())
        failures.push_back("avoidance differs from exhaustive search");
      ++match_checks;
    }
  }
  Json checks = {{"min_gens", min_gen_checks}, {"involution", involution_checks}, {"faces", face_checks},
                 {"divisibility", divide_checks}, {"avoidance", match_checks}};
  return {{"status", failures.empty() ? "OK" : "FAIL"}, {"n", {lo, hi}}, {"checks", checks},
          {"failures", failures}};
}

void render_table(const std::string& command, const Json& doc, std::ostream& out) {
  auto tv_text = [](const Json& tv) {
    std::string s = "{";
    bool first = true;
    for (const Json& e : tv.at("counts")) {
      if (!first) s += ",";
      first = false;
      for (const Json& r : e.at("support")) s += std::to_string(r.get<int>());
      s += ":" + std::to_string(e.at("count").get<std::int64_t>());
    }
    return s + "}";
  };
  if (doc.contains("error")) {
    out << "error " << doc["error"]["code"].get<std::string>() << ": " << doc["error"]["message"].get<std::string>()
        << "\n";
    return;
  }
  if (command == "dual-gens" || command == "faces") {
    const char* list = command == "dual-gens" ? "generators" : "faces";
    for (const Json& r : doc.at("results")) {
      out << "n=" << r.at("n") << "  count=" << r.at("count").get<std::string>() << "\n";
      for (const Json& b : r.at(list)) {
        out << "  " << std::left << std::setw(28) << tv_text(b);
        if (b.contains("degree")) out << " degree " << b.at("degree");
        out << "\n";
      }
    }
  } else if (command == "count") {
    out << std::setw(6) << "n" << "  count\n";
    for (const Json& s : doc.at("samples"))
      out << std::setw(6) << s.at("n").get<std::int64_t>() << "  " << s.at("count").get<std::string>() << "\n";
  } else if (command == "fit") {
    const Json& p = doc.at("polynomial");
    out << p.at("text").get<std::string>() << "  (stable from n=" << p.at("stable_from") << ")\n";
  } else if (command == "min-degree") {
    if (doc.contains("degrees")) {
      for (const Json& d : doc.at("degrees")) out << "n=" << d.at("n") << "  d=" << d.at("degree") << "\n";
      out << "d(n) = " << doc.at("slope") << "*n + " << doc.at("intercept") << " on [" << doc["window"][0]
          << "," << doc["window"][1] << "]\n";
    } else {
      out << "n=" << doc.at("n") << "  least degree " << doc.at("degree") << "  orbits "
          << doc.at("count").get<std::string>() << "\n";
    }
  } else if (command == "facets") {
    for (const Json& r : doc.at("results")) {
      out << "n=" << r.at("n") << "\n";
      for (const Json& h : r.at("by_dimension"))
        out << "  dim " << h.at("dimension") << ": " << h.at("count").get<std::string>() << "\n";
    }
  } else if (command == "cone") {
    out << doc.at("orthants").size() << " orthants\n";
    for (const Json& o : doc.at("orthants")) {
      out << " ";
      for (const Json& f : o.at("fixed")) out << " x" << f.at("coordinate") << "=" << f.at("value");
      for (const Json& b : o.at("bounded")) out << " x" << b.at("coordinate") << ">=" << b.at("value");
      out << "\n";
    }
    if (doc.contains("slices"))
      for (const Json& s : doc.at("slices"))
        out << "n=" << s.at("n") << "  points " << s.at("count").get<std::string>() << "\n";
  } else if (command == "match") {
    if (doc.at("feasible").get<bool>()) {
      out << "sigma:";
      for (const Json& x : doc.at("sigma")) out << " " << x;
      out << "\n";
    } else {
      out << "no avoiding permutation; violated ideal " << doc.at("violated_ideal").dump() << "\n";
    }
  } else {
    out << doc.at("status").get<std::string>() << "\n";
    for (const auto& [k, v] : doc.at("checks").items()) out << "  " << k << ": " << v << "\n";
    for (const Json& f : doc.at("failures")) out << "  failure: " << f.get<std::string>() << "\n";
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list = {"dual-gens", "count", "fit",   "min-degree", "faces",
                                                "facets",    "cone",  "match", "verify"};
  return list;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      schema("bad range \"" + text + "\"");
    }
    if (used != s.size()) schema("bad range \"" + text + "\"");
    return v;
  };
  auto dots = text.find("..");
  std::pair<std::int64_t, std::int64_t> r;
  if (dots == std::string::npos) {
    r.first = r.second = parse_int(text);
  } else {
    r.first = parse_int(text.substr(0, dots));
    r.second = parse_int(text.substr(dots + 2));
  }
  if (r.first > r.second) schema("empty range \"" + text + "\"");
  if (r.first < 0) schema("negative width in range");
  return r;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientSizeExceeded:
    case ErrorKind::CapExceeded:
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::BoxTooLarge:
    case ErrorKind::DimensionExceeded:
      return kExitCap;
    case ErrorKind::InternalInvariant:
      return kExitInternal;
    default:
      return kExitSchema;
  }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  Json doc = {{"schema", json::kSchema}, {"command", job.command}};
  int status = kExitOk;
  try {
    Limits limits;
    if (job.max_c) {
      if (*job.max_c < 1 || *job.max_c > kMaxWordAmbient) schema("max-c must be in [1,6]");
      limits.tuple_max_c = limits.enumeration_max_c = *job.max_c;
    }
    if (job.format != "json" && job.format != "table") schema("format must be json or table");
    Json input = load_input(job);
    Json body;
    const std::string& cmd = job.command;
    if (cmd == "dual-gens") body = do_dual_gens(job, input, limits);
    else if (cmd == "count") body = do_count(job, input, limits);
    else if (cmd == "fit") body = do_fit(job, input, limits);
    else if (cmd == "min-degree") body = do_min_degree(job, input, limits);
    else if (cmd == "faces") body = do_faces(job, input, limits);
    else if (cmd == "facets") body = do_facets(job, input, limits);
    else if (cmd == "cone") body = do_cone(job, input, limits);
    else if (cmd == "match") body = do_match(job, input, limits);
    else if (cmd == "verify") body = do_verify(job, input, limits);
    else schema("unknown command \"" + cmd + "\"");
    for (auto& [k, v] : body.items()) doc[k] = v;
    if (cmd == "verify" && doc["status"] != "OK") status = kExitInternal;
  } catch (const Error& e) {
    doc["error"] = {{"code", std::string(error_code(e.kind()))}, {"message", e.what()}};
    err << "symdual: " << e.what() << "\n";
    status = exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    doc["error"] = {{"code", "schema-violation"}, {"message", e.what()}};
    err << "symdual: " << e.what() << "\n";
    status = kExitSchema;
  } catch (const std::exception& e) {
    doc["error"] = {{"code", "internal-invariant"}, {"message", e.what()}};
    err << "symdual: " << e.what() << "\n";
    status = kExitInternal;
  }
  if (job.format == "table")
    render_table(job.command, doc, out);
  else
    out << doc.dump(2) << "\n";
  return status;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal generators of Alexander duals of symmetric squarefree monomial ideals"};
  JobSpec job;
  std::string input_path, inline_json, range;
  std::int64_t j = 0;
  int max_c = 0;
  app.add_option("command", job.command, "dual-gens | count | fit | min-degree | faces | facets | cone | match | verify")
      ->required()
      ->check(CLI::IsMember(commands()));
  auto* in = app.add_option("--input", input_path, "JSON input file");
  auto* js = app.add_option("--json", inline_json, "inline JSON input");
  in->excludes(js);
  auto* n = app.add_option("--n", range, "width or inclusive range a..b");
  auto* jo = app.add_option("--j", j, "face dimension");
  auto* mc = app.add_option("--max-c", max_c, "order-ideal enumeration cap (overrides SYMDUAL_MAX_C)");
  app.add_option("--format", job.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", job.seed, "seed for randomized checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "symdual: " << e.what() << "\n";
    return kExitSchema;
  }
  if (*in) job.input_path = input_path;
  if (*js) job.inline_json = inline_json;
  if (*jo) job.j = j;
  try {
    if (*n) job.n_range = parse_range(range);
  } catch (const Error& e) {
    err << "symdual: " << e.what() << "\n";
    return kExitSchema;
  }
  if (*mc) {
    job.max_c = max_c;
  } else if (const char* env = std::getenv("SYMDUAL_MAX_C"); env && *env) {
    try {
      job.max_c = std::stoi(env);
    } catch (const std::exception&) {
      err << "symdual: SYMDUAL_MAX_C is not an integer\n";
      return kExitSchema;
    }
  }
  return run(job, out, err);
}

}  // namespace symdual::cli
