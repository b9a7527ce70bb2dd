#include "affstrat/io.hpp"

#include <fstream>

#include "affstrat/errors.hpp"

namespace affstrat {

namespace {

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const Json& v = j.at(key);
  if (!v.is_array()) throw LoadError(std::string("'") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw LoadError(std::string("'") + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json string_array(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json point_json(const CPoint& x) {
  Json a = Json::array();
  for (const auto& c : x) a.push_back(complex_json(c));
  return a;
}

Json level_json(const Level& L, std::size_t index) {
  Json j;
  j["index"] = index;
  j["dimension"] = L.dim();
  j["ideal"] = ideal_json(L.ideal);
  j["top"] = ideal_json(L.top.ideal);
  Json lower = Json::array();
  for (const auto& l : L.lower) lower.push_back(ideal_json(l));
  j["lower"] = lower;
  j["G"] = string_array(L.smooth.comb.G);
  j["slice"] = string_array(L.smooth.slice.forms);
  j["jacobian"] = L.smooth.jacobian().to_string();
  Json failures = Json::array();
  for (const auto& W : L.failures) failures.push_back(ideal_json(W));
  j["failures"] = failures;
  j["avoid"] = L.avoid ? ideal_json(*L.avoid) : Json();
  j["H"] = L.localizer.H.to_string();
  j["P"] = L.P.to_string();
  j["degree_bound"] = L.degree_bound;
  j["rank"] = L.rank ? Json(*L.rank) : Json();
  return j;
}

std::string kind_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::K0:
      return "K0";
    case Provenance::Kind::Kinf:
      return "Kinf";
    case Provenance::Kind::Tail:
      return "tail";
  }
  return {};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw LoadError(path + ": " + e.what());
  }
}

FiltrationMode parse_mode(const std::string& s) {
  if (s == "full") return FiltrationMode::Full;
  if (s == "partial") return FiltrationMode::Partial;
  throw LoadError("unknown mode '" + s + "'");
}

std::string mode_name(FiltrationMode m) { return m == FiltrationMode::Full ? "full" : "partial"; }

SliceStrategy parse_slices(const std::string& s) {
  if (s == "coordinate-first") return SliceStrategy::CoordinateFirst;
  if (s == "random") return SliceStrategy::Random;
  throw LoadError("unknown slice strategy '" + s + "'");
}

std::string slices_name(SliceStrategy s) {
  return s == SliceStrategy::CoordinateFirst ? "coordinate-first" : "random";
}

Problem parse_problem(const Json& j) {
  if (!j.is_object()) throw LoadError("problem must be a JSON object");
  try {
    Problem p;
    const auto vars = string_list(j, "variables");
    if (vars.empty()) throw LoadError("'variables' is missing or empty");
    p.ring = make_ring(vars);
    std::vector<Polynomial> gens;
    for (const auto& s : string_list(j, "ideal")) gens.push_back(parse_polynomial(s, p.ring));
    p.ideal = Ideal(p.ring, std::move(gens));
    for (const auto& s : string_list(j, "map")) p.map.push_back(parse_polynomial(s, p.ring));
    if (!j.contains("declared_codim")) throw LoadError("'declared_codim' is missing");
    const long codim = j.at("declared_codim").get<long>();
    if (codim < 0) throw LoadError("'declared_codim' is negative");
    p.codim = static_cast<std::size_t>(codim);
    if (j.contains("options")) {
      const Json& o = j.at("options");
      if (!o.is_object()) throw LoadError("'options' must be an object");
      p.options.seed = optional_field<std::uint64_t>(o, "seed");
      p.options.coeff_bound = optional_field<long>(o, "coeff_bound");
      p.options.max_attempts = optional_field<int>(o, "max_attempts");
      if (auto s = optional_field<std::string>(o, "slices")) p.options.slices = parse_slices(*s);
      p.options.spair_budget = optional_field<std::size_t>(o, "spair_budget");
      p.options.branch_cap = optional_field<std::size_t>(o, "branch_cap");
      if (auto s = optional_field<std::string>(o, "mode")) p.options.mode = parse_mode(*s);
    }
    return p;
  } catch (const ParseError& e) {
    throw LoadError(std::string("bad polynomial: ") + e.what());
  } catch (const Json::exception& e) {
    throw LoadError(e.what());
  } catch (const RingMismatch& e) {
    throw LoadError(e.what());
  }
}

Problem load_problem(const std::string& path) { return parse_problem(read_json_file(path)); }

VarietySpec problem_variety(const Problem& p) {
  try {
    return VarietySpec::validated(p.ideal, p.codim);
  } catch (const DimensionMismatch& e) {
    throw LoadError(e.what());
  }
}

Json ideal_json(const Ideal& I) { return string_array(I.grevlex_basis()); }

Ideal ideal_from_json(const Json& j, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& s : j) gens.push_back(parse_polynomial(s.get<std::string>(), ring));
  return Ideal(ring, std::move(gens));
}

Json to_json(const Stratification& s) {
  Json j;
  j["variables"] = s.ring->names();
  j["mode"] = mode_name(s.mode);
  Json levels = Json::array();
  for (std::size_t i = 0; i < s.levels.size(); ++i) levels.push_back(level_json(s.levels[i], i));
  j["levels"] = levels;
  j["tail"] = ideal_json(s.tail);
  j["tail_rank"] = s.tail_rank ? Json(*s.tail_rank) : Json();
  return j;
}

Json to_json(const KfResult& r) {
  const auto& K = r.values;
  Json j;
  j["target"] = K.ring->names();
  Json k0 = Json::array();
  for (const auto& I : K.k0) k0.push_back(ideal_json(I));
  j["K0"] = k0;
  Json kinf = Json::array();
  for (std::size_t i = 0; i < K.kinf.size(); ++i)
    for (const auto& b : K.kinf[i])
      kinf.push_back({{"stratum", i}, {"selector", b.selector.to_string()}, {"ideal", ideal_json(b.ideal)}});
  j["Kinf"] = kinf;
  j["tail_image"] = ideal_json(K.tail_image);
  Json comps = Json::array();
  for (const auto& c : K.components) {
    Json sources = Json::array();
    for (const auto& p : c.sources) {
      Json s;
      s["kind"] = kind_name(p.kind);
      s["stratum"] = p.stratum;
      s["selector"] = p.selector ? Json(p.selector->to_string()) : Json();
      sources.push_back(s);
    }
    comps.push_back({{"ideal", ideal_json(c.ideal)}, {"sources", sources}});
  }
  j["K"] = comps;
  j["K_ideal"] = ideal_json(K.combined());
  j["strata"] = to_json(r.strata);
  return j;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json to_json(const WitnessReport& w) {
  Json j;
  j["target"] = w.target;
  j["success"] = w.success;
  j["best_score"] = w.best_score;
  Json trace = Json::array();
  for (const auto& e : w.trace) {
    Json t;
    t["norm"] = e.norm;
    t["measure"] = e.measure;
    t["value"] = point_json(e.value);
    t["point"] = point_json(e.point);
    trace.push_back(t);
  }
  j["trace"] = trace;
  return j;
}

}  // namespace affstrat
