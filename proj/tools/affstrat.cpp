// Command-line front end: stratify, kf and check.
//
// Exit codes: 0 success, 2 genericity failure, 3 Groebner budget exceeded,
// 4 load error (file, JSON, polynomial syntax, declared codimension),
// 5 any other error.

#include <fstream>
#include <iostream>
#include <random>

#include <unsupported/Eigen/Polynomials>

#include "CLI11.hpp"
#include "affstrat/errors.hpp"
#include "affstrat/groebner.hpp"
#include "affstrat/io.hpp"

using namespace affstrat;

namespace {

struct Flags {
  std::string problem;
  std::string results;
  std::string output;
  std::uint64_t seed = 0;
  int max_attempts = 64;
  long coeff_bound = 997;
  std::size_t spair_budget = 200000;
  std::size_t branch_cap = 4096;
  std::string mode = "full";
};

struct RunConfig {
  GenericityConfig gen;
  std::size_t spair_budget = 200000;
  std::size_t branch_cap = 4096;
  FiltrationMode mode = FiltrationMode::Full;
};

// Defaults, then problem options, then explicit flags.
RunConfig resolve(const Flags& f, const CLI::App& cmd, const ProblemOptions& o) {
  RunConfig c;
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  c.gen.seed = given("--seed") ? f.seed : o.seed.value_or(f.seed);
  c.gen.max_attempts = given("--max-attempts") ? f.max_attempts : o.max_attempts.value_or(f.max_attempts);
  c.gen.coeff_bound = given("--coeff-bound") ? f.coeff_bound : o.coeff_bound.value_or(f.coeff_bound);
  c.gen.slices = o.slices.value_or(SliceStrategy::CoordinateFirst);
  c.spair_budget = given("--spair-budget") ? f.spair_budget : o.spair_budget.value_or(f.spair_budget);
  c.branch_cap = given("--branch-cap") ? f.branch_cap : o.branch_cap.value_or(f.branch_cap);
  c.mode = given("--mode") ? parse_mode(f.mode) : o.mode.value_or(parse_mode(f.mode));
  if (c.gen.coeff_bound < 1) throw LoadError("--coeff-bound must be positive");
  if (c.gen.max_attempts < 1) throw LoadError("--max-attempts must be positive");
  return c;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["seed"] = c.gen.seed;
  j["max_attempts"] = c.gen.max_attempts;
  j["coeff_bound"] = c.gen.coeff_bound;
  j["slices"] = slices_name(c.gen.slices);
  j["spair_budget"] = c.spair_budget;
  j["branch_cap"] = c.branch_cap;
  j["mode"] = mode_name(c.mode);
  return j;
}

void emit(const Flags& f, const std::string& command, const RunConfig& c, Json result) {
  Json out;
  out["version"] = kVersion;
  out["command"] = command;
  out["config"] = config_json(c);
  out["result"] = std::move(result);
  const std::string text = out.dump(2) + "\n";
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(f.output, std::ios::binary);
    if (!file) throw Error("cannot write " + f.output);
    file << text;
  }
}

int cmd_stratify(const Flags& f, const CLI::App& cmd) {
  const Problem p = load_problem(f.problem);
  const RunConfig c = resolve(f, cmd, p.options);
  default_groebner_options().spair_budget = c.spair_budget;
  const VarietySpec X = problem_variety(p);
  if (c.mode == FiltrationMode::Partial && p.map.empty()) throw LoadError("partial mode needs a map");
  Rng rng(c.gen.seed);
  const Stratification S = build_filtration(X, c.mode, p.map, c.gen, rng);
  std::cerr << "stratify: " << S.levels.size() << " level(s)";
  for (std::size_t i = 0; i < S.levels.size(); ++i) std::cerr << (i ? ", " : " of dimension ") << S.levels[i].dim();
  std::cerr << "\n";
  emit(f, "stratify", c, to_json(S));
  return 0;
}

int cmd_kf(const Flags& f, const CLI::App& cmd) {
  const Problem p = load_problem(f.problem);
  RunConfig c = resolve(f, cmd, p.options);
  c.mode = FiltrationMode::Partial;
  default_groebner_options().spair_budget = c.spair_budget;
  const VarietySpec X = problem_variety(p);
  if (p.map.empty()) throw LoadError("kf needs a map");
  Rng rng(c.gen.seed);
  const KfResult r = stratified_K(X, p.map, c.gen, rng, CriticalOptions{c.branch_cap});
  std::cerr << "kf: " << r.values.components.size() << " component(s) of K(f)";
  if (!r.values.empty()) {
    std::cerr << ":";
    for (const auto& comp : r.values.components)
      for (const auto& s : comp.ideal.to_strings()) std::cerr << " " << s;
  }
  std::cerr << "\n";
  emit(f, "kf", c, to_json(r));
  return 0;
}

// Points of a component of K: all roots when m = 1, samples otherwise.
std::vector<CPoint> component_points(const Ideal& I, std::uint64_t seed) {
  if (I.ring()->size() == 1) {
    const auto& basis = I.grevlex_basis();
    if (basis.size() != 1) return {};
    const Polynomial& h = basis[0];
    const long d = h.total_degree();
    if (d < 1) return {};
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(d + 1);
    for (const auto& t : h.terms()) coeffs(t.monomial[0]) = t.coeff.get_d();
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    std::vector<CPoint> out;
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.push_back({solver.roots()(i)});
    return out;
  }
  return sample_points(I, 3, 1.0, seed).points;
}

std::vector<Polynomial> level_rows(const Json& strata, std::size_t s, const RingPtr& ring) {
  std::vector<Polynomial> rows;
  for (const auto& g : strata.at("levels").at(s).at("G")) rows.push_back(parse_polynomial(g.get<std::string>(), ring));
  return rows;
}

double distance(const CPoint& a, const CPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

Json check_values(const Problem& p, const Json& result, std::uint64_t seed, const OracleConfig& ocfg, bool& pass) {
  const std::size_t m = p.map.size();
  const auto yring = target_ring(p.ring, m);
  const Json& strata = result.at("strata");
  Json members = Json::array();
  std::vector<CPoint> known;
  for (const auto& comp : result.at("K")) {
    const Ideal I = ideal_from_json(comp.at("ideal"), yring);
    std::optional<std::size_t> asymptotic;
    for (const auto& s : comp.at("sources"))
      if (s.at("kind") == "Kinf" && !asymptotic) asymptotic = s.at("stratum").get<std::size_t>();
    for (const auto& y : component_points(I, seed)) {
      known.push_back(y);
      Json mj;
      Json value = Json::array();
      for (const auto& c : y) value.push_back(complex_json(c));
      mj["value"] = value;
      mj["sources"] = comp.at("sources");
      if (asymptotic) {
        const auto w = kinf_witness_search(level_rows(strata, *asymptotic, p.ring), p.map, y, seed, ocfg);
        mj["status"] = w.success ? "witnessed" : "not witnessed";
        mj["witness"] = to_json(w);
        pass = pass && w.success;
      } else {
        mj["status"] = "exact";
      }
      members.push_back(mj);
    }
  }
  // Probes away from K must not produce witnesses on any stratum.
  Json probes = Json::array();
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  const std::size_t nlevels = strata.at("levels").size();
  int made = 0;
  while (made < 10) {
    CPoint y(m);
    for (auto& c : y) c = {box(eng), box(eng)};
    bool near = false;
    for (const auto& k : known) near = near || distance(k, y) < 0.25;
    if (near) continue;
    ++made;
    Json pj;
    Json value = Json::array();
    for (const auto& c : y) value.push_back(complex_json(c));
    pj["value"] = value;
    double best = INFINITY;
    bool found = false;
    for (std::size_t s = 0; s < nlevels; ++s) {
      const auto w = kinf_witness_search(level_rows(strata, s, p.ring), p.map, y, seed + made, ocfg);
      if (w.success) found = true;
      if (std::isfinite(w.best_score)) best = std::min(best, w.best_score);
    }
    pj["best_score"] = std::isfinite(best) ? Json(best) : Json();
    pj["status"] = found ? "spurious witness" : "rejected";
    pass = pass && !found;
    probes.push_back(pj);
  }
  Json out;
  out["members"] = members;
  out["probes"] = probes;
  return out;
}

Json check_whitney(const Problem& p, const Json& strat, std::uint64_t seed, const OracleConfig& ocfg, bool& pass) {
  const std::vector<double> scales{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  const Json& levels = strat.at("levels");
  Json out = Json::array();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const Ideal Y = ideal_from_json(levels[k].at("top"), p.ring);
    const Json& failures = levels[k].at("failures");
    for (std::size_t j = 0; j < failures.size(); ++j) {
      const Ideal W = ideal_from_json(failures[j], p.ring);
      if (W.is_unit()) continue;
      const Ideal X = ideal_from_json(levels[j].at("top"), p.ring);
      for (const auto& pt : sample_points(W, 2, 1.0, seed).points) {
        const auto w = whitney_b_violation_score(X, Y, pt, scales, seed, ocfg);
        out.push_back({{"pair", {j, k}}, {"expect", "violation"}, {"report", to_json(w)}});
        pass = pass && w.success;
      }
      for (const auto& pt : sample_points(Y, 4, 1.0, seed + 1).points) {
        if (residual(W, pt) < 1e-3) continue;
        const auto w = whitney_b_violation_score(X, Y, pt, scales, seed, ocfg);
        out.push_back({{"pair", {j, k}}, {"expect", "regular"}, {"report", to_json(w)}});
        pass = pass && !w.success;
        break;
      }
    }
  }
  return out;
}

int cmd_check(const Flags& f, const CLI::App& cmd) {
  const Problem p = load_problem(f.problem);
  const RunConfig c = resolve(f, cmd, p.options);
  default_groebner_options().spair_budget = c.spair_budget;
  const Json results = read_json_file(f.results);
  if (!results.contains("result") || !results.contains("command")) throw LoadError("not a results file");
  const Json& result = results.at("result");
  const std::string kind = results.at("command").get<std::string>();
  OracleConfig ocfg;
  bool pass = true;
  Json report;
  report["checked"] = kind;
  try {
    if (kind == "kf") {
      report["values"] = check_values(p, result, c.gen.seed, ocfg, pass);
      report["whitney"] = check_whitney(p, result.at("strata"), c.gen.seed, ocfg, pass);
    } else if (kind == "stratify") {
      report["whitney"] = check_whitney(p, result, c.gen.seed, ocfg, pass);
    } else {
      throw LoadError("cannot check results of '" + kind + "'");
    }
  } catch (const Json::exception& e) {
    throw LoadError(std::string("malformed results: ") + e.what());
  } catch (const ParseError& e) {
    throw LoadError(std::string("malformed results: ") + e.what());
  }
  report["pass"] = pass;
  std::cerr << "check: " << (pass ? "pass" : "FAIL") << "\n";
  emit(f, "check", c, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Whitney stratifications and generalized critical values"};
  app.set_version_flag("--version", std::string("affstrat ") + kVersion);
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("problem", f.problem, "Problem file (JSON)")->required();
    cmd->add_option("--seed", f.seed, "Seed of the genericity choices");
    cmd->add_option("--max-attempts", f.max_attempts, "Attempts per generic choice");
    cmd->add_option("--coeff-bound", f.coeff_bound, "Random coefficients lie in [-B, B]");
    cmd->add_option("--spair-budget", f.spair_budget, "S-pairs per Groebner basis");
    cmd->add_option("--branch-cap", f.branch_cap, "Maximum number of K-infinity branches");
    cmd->add_option("--mode", f.mode, "Filtration mode")->check(CLI::IsMember({"full", "partial"}));
    cmd->add_option("--output", f.output, "Write JSON here instead of standard output");
  };
  auto* stratify = app.add_subcommand("stratify", "Whitney stratification of V(I)");
  common(stratify);
  auto* kf = app.add_subcommand("kf", "Stratified generalized critical values of the map");
  common(kf);
  auto* check = app.add_subcommand("check", "Numeric oracle checks of a results file");
  common(check);
  check->add_option("--results", f.results, "Output of stratify or kf")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (*stratify) return cmd_stratify(f, *stratify);
    if (*kf) return cmd_kf(f, *kf);
    return cmd_check(f, *check);
  } catch (const GenericityFailure& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}
