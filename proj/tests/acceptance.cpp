// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "affstrat/errors.hpp"
#include "affstrat/groebner.hpp"
#include "affstrat/io.hpp"

using namespace affstrat;

namespace {

const std::string kBin = AFFSTRAT_BIN;
const std::string kProblems = AFFSTRAT_PROBLEMS;

// Pinned tolerances and limits.
constexpr double kKuoTol = 1e-9;
constexpr double kBracketLow = 1e-3;
constexpr double kBracketHigh = 1e3;
constexpr double kViolation = 0.5;
constexpr double kRegular = 1e-3;
constexpr double kWitness = 1e-3;
constexpr double kFarNorm = 1e3;
constexpr double kProjectionTol = 1e-8;
const std::vector<double> kScales{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

// Every CLI invocation is recorded so the determinism criterion can replay it.
std::vector<std::pair<std::string, std::string>> g_cli_runs;

std::string cli(const std::string& args, int* code = nullptr) {
  const std::string cmd = kBin + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error("cannot run " + cmd);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  const int rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code) *code = rc;
  if (rc != 0) throw Error("'" + args + "' exited with " + std::to_string(rc));
  g_cli_runs.emplace_back(args, out);
  return out;
}

std::string problem(const std::string& name) { return kProblems + "/" + name + ".json"; }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g, r));
  return Ideal(r, ps);
}

// ---- 1 ---------------------------------------------------------------------

// Degree <= 2; with `quadratic` every term has degree exactly 2, which keeps
// the ideal proper.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, bool quadratic) {
  std::uniform_int_distribution<int> coeff(-9, 9), nterms(1, 4), ex(0, 2);
  std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
  std::vector<Term> ts;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Monomial::Exponent> e(ring->size());
    if (quadratic) {
      ++e[var(rng)];
      ++e[var(rng)];
    } else {
      unsigned left = 2;
      for (auto& v : e) {
        v = std::min<unsigned>(left, static_cast<unsigned>(ex(rng)));
        left -= v;
      }
    }
    int c = coeff(rng);
    ts.push_back({Monomial(e), Rational(c == 0 ? 1 : c)});
  }
  return Polynomial::from_terms(ring, ts);
}

// S-polynomial built from the exponent vectors directly.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term& a = f.leading_term(order);
  const Term& b = g.leading_term(order);
  const auto& ea = a.monomial.exponents();
  const auto& eb = b.monomial.exponents();
  std::vector<Monomial::Exponent> ua(ea.size()), ub(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const auto l = std::max(ea[i], eb[i]);
    ua[i] = l - ea[i];
    ub[i] = l - eb[i];
  }
  return f.scaled(Rational(1) / a.coeff, Monomial(ua)) - g.scaled(Rational(1) / b.coeff, Monomial(ub));
}

void criterion1(Outcome& o) {
  std::mt19937_64 rng(1);
  const MonomialOrder order = MonomialOrder::grevlex();
  const std::vector<std::string> names{"x", "y", "z"};
  int spairs = 0, ideals = 0, proper = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nv = 1 + trial % 3;
    auto ring = make_ring({names.begin(), names.begin() + static_cast<long>(nv)});
    const int ng = 1 + static_cast<int>(rng() % 3);
    std::vector<Polynomial> gens;
    for (int g = 0; g < ng; ++g) gens.push_back(random_poly(rng, ring, trial % 3 == 2));
    const auto basis = groebner_basis(gens, order);
    proper += !(basis.size() == 1 && basis[0].is_constant());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        ++spairs;
        if (!normal_form(spoly(basis[i], basis[j], order), basis, order).is_zero()) {
          o.require(false, "S-polynomial remainder in trial " + std::to_string(trial));
        }
      }
    for (const auto& g : gens) o.require(normal_form(g, basis, order).is_zero(), "generator not reduced to 0");
    for (int s = 0; s < 3; ++s) {
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      o.require(groebner_basis(shuffled, order) == basis, "shuffle changed the basis");
    }
    ++ideals;
  }
  o.note << ideals << " ideals (" << proper << " proper), " << spairs << " S-pairs, 3 shuffles each";
}

// ---- 2 ---------------------------------------------------------------------

CMatrix gaussian(std::mt19937_64& eng, Eigen::Index m, Eigen::Index n) {
  std::normal_distribution<double> d;
  CMatrix A(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = {d(eng), d(eng)};
  return A;
}

void criterion2(Outcome& o) {
  std::mt19937_64 eng(2);
  double lo = INFINITY, hi = 0;
  int restricted = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + trial % 3;
    const int n = m + static_cast<int>(eng() % static_cast<unsigned>(7 - m));
    const int r = trial % 2 == 0 ? 0 : static_cast<int>(eng() % static_cast<unsigned>(n - m + 1));
    const CMatrix A = gaussian(eng, m, n);
    const CMatrix B = gaussian(eng, r, n);
    restricted += r > 0;
    const double v = r ? nu_restricted(A, B) : nu(A);
    const double k = r ? kappa_restricted(A, B) : kappa(A);
    o.require(v <= k + kKuoTol, "nu > kappa");
    o.require(k <= std::sqrt(static_cast<double>(m)) * v + kKuoTol, "kappa > sqrt(m) nu");
    const double ratio = g_prime(A, B) / v;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  o.require(lo >= kBracketLow && hi <= kBracketHigh, "g'/nu outside the bracket");
  o.note << "1000 matrices (" << restricted << " restricted), g'/nu in [" << lo << ", " << hi << "]";
}

// ---- 3 ---------------------------------------------------------------------

Polynomial dense_poly(std::mt19937_64& rng, const RingPtr& r, int degree) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Term> ts;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int d = 0; a + b + d <= degree; ++d) {
        const int v = (a + b + d == degree && a == degree) ? 1 + (c(rng) + 3) % 3 : c(rng);
        ts.push_back({Monomial({static_cast<Monomial::Exponent>(a), static_cast<Monomial::Exponent>(b),
                                static_cast<Monomial::Exponent>(d)}),
                      Rational(v)});
      }
  return Polynomial::from_terms(r, ts);
}

// X: dense hypersurfaces and complete intersections; W: a point, a line or a
// surface given by dense equations.
void criterion3(Outcome& o) {
  std::mt19937_64 rng(3);
  auto r = make_ring({"x", "y", "z"});
  int done = 0;
  long slack = 0;
  for (int k = 0; done < 10; ++k) {
    std::vector<Polynomial> xg{dense_poly(rng, r, 2 + k % 2)};
    if (k % 3 == 1) xg.push_back(dense_poly(rng, r, 2));
    std::vector<Polynomial> wg;
    const int wshape = k % 3;
    if (wshape == 0) wg = {dense_poly(rng, r, 1), dense_poly(rng, r, 1), dense_poly(rng, r, 1)};
    if (wshape == 1) wg = {dense_poly(rng, r, 1), dense_poly(rng, r, 2)};
    if (wshape == 2) wg = {dense_poly(rng, r, 2)};
    const Ideal X = radical(Ideal(r, xg));
    const Ideal W(r, wg);
    if (dimension(X) != 3 - static_cast<long>(xg.size()) || variety_contains(W, X)) continue;
    GenericityConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(k);
    Rng grng(cfg.seed);
    const auto spec = VarietySpec::validated(X, xg.size());
    const auto pxw = compute_p_XW(spec, W, cfg, grng);
    long D = 0, Dw = 0;
    for (const auto& g : X.grevlex_basis()) D = std::max(D, g.total_degree());
    for (const auto& g : W.grevlex_basis()) Dw = std::max(Dw, g.total_degree());
    const long bound = static_cast<long>(xg.size()) * (D - 1) + Dw;
    const long deg = pxw.p.total_degree();
    o.require(deg >= 0 && deg <= bound, "deg p exceeds r(D-1)+D' in instance " + std::to_string(k));
    slack = std::max(slack, bound - deg);
    ++done;
  }
  // The levels of the umbrella filtration as well.
  Rng urng(0);
  const auto S = build_filtration(VarietySpec::validated(I(r, {"x^2 - z*y^2"}), 1), FiltrationMode::Full, {},
                                  GenericityConfig{}, urng);
  for (const auto& L : S.levels) {
    long D = 0;
    for (const auto& g : L.top.ideal.grevlex_basis()) D = std::max(D, g.total_degree());
    long Dw = 0;
    if (L.avoid)
      for (const auto& g : L.avoid->grevlex_basis()) Dw = std::max(Dw, g.total_degree());
    o.require(L.P.total_degree() <= static_cast<long>(L.top.codim) * (D - 1) + Dw, "umbrella level bound");
  }
  o.note << done << " generated (X, W) pairs and " << S.levels.size() << " umbrella levels, max slack " << slack;
}

// ---- 4 ---------------------------------------------------------------------

void criterion4(Outcome& o) {
  const Json out = Json::parse(cli("stratify " + problem("umbrella")));
  const Json& levels = out["result"]["levels"];
  o.require(levels.size() == 3, "level count");
  if (levels.size() != 3) return;
  auto r = make_ring({"x", "y", "z"});
  const Ideal X2 = ideal_from_json(levels[2]["top"], r);
  o.require(same_ideal(X2, I(r, {"x", "y", "z"})), "X2 != V(x,y,z)");
  const Ideal umbrella = ideal_from_json(levels[0]["top"], r);
  const Ideal axis = ideal_from_json(levels[1]["top"], r);
  const auto at0 = whitney_b_violation_score(umbrella, axis, {0.0, 0.0, 0.0}, kScales, 0);
  const auto at1 = whitney_b_violation_score(umbrella, axis, {0.0, 0.0, 1.0}, kScales, 0);
  o.require(at0.best_score > kViolation, "origin score");
  o.require(at1.best_score < kRegular, "(0,0,1) score");
  o.note << "3 levels, X2 = V(x,y,z), score " << at0.best_score << " at origin, " << at1.best_score << " at (0,0,1)";
}

// ---- 5 ---------------------------------------------------------------------

void criterion5(Outcome& o) {
  const Json out = Json::parse(cli("kf " + problem("broughton")));
  const Json& res = out["result"];
  auto r = make_ring({"x", "y"});
  auto yr = target_ring(r, 1);
  o.require(same_ideal(ideal_from_json(res["K_ideal"], yr), I(yr, {"y1"})), "K(f) != V(y1)");
  for (const auto& k0 : res["K0"]) o.require(ideal_from_json(k0, yr).is_unit(), "K0 not empty");
  int branches = 0;
  for (const auto& b : res["Kinf"]) {
    o.require(same_variety(ideal_from_json(b["ideal"], yr), I(yr, {"y1"})), "K-infinity branch != {0}");
    ++branches;
  }
  o.require(branches > 0, "no K-infinity branch");
  const std::vector<Polynomial> f{P("x + x^2*y", r)};
  const auto yes = kinf_witness_search({}, f, {0.0}, 0);
  const auto no = kinf_witness_search({}, f, {1.0}, 0);
  const bool far = !yes.trace.empty() && yes.trace.back().norm > kFarNorm;
  o.require(yes.success && yes.best_score < kWitness && far, "y*=0 not witnessed");
  o.require(!no.success, "y*=1 witnessed");
  o.note << "K = V(y1), K0 empty, " << branches << " K-infinity branches at {0}, witness score "
         << yes.best_score << " at y*=0, " << no.best_score << " at y*=1";
}

// ---- 6 ---------------------------------------------------------------------

void criterion6(Outcome& o) {
  const Json lin = Json::parse(cli("kf " + problem("linear")))["result"];
  o.require(lin["K"].empty(), "K(x) on C^2 not empty");
  const Json cross = Json::parse(cli("kf " + problem("cross")))["result"];
  auto r = make_ring({"x", "y"});
  auto yr = target_ring(r, 1);
  o.require(same_ideal(ideal_from_json(cross["K_ideal"], yr), I(yr, {"y1"})), "K(x) on V(xy) != V(y1)");
  bool tail = false;
  for (const auto& c : cross["K"])
    for (const auto& s : c["sources"]) tail = tail || s["kind"] == "tail";
  o.require(tail, "no tail provenance");
  o.require(cross["strata"]["tail_rank"] == 0, "tail rank != 0");
  o.note << "K(x) on C^2 empty; K(x) on V(xy) = V(y1) with rank-0 tail provenance";
}

// ---- 7 ---------------------------------------------------------------------

void criterion7(Outcome& o) {
  auto r = make_ring({"x", "y", "z"});
  const Ideal cubic = I(r, {"y - x^2", "z - x^3"});
  const Ideal proj = elimination_ideal(cubic, {1, 2});
  const Ideal want = I(proj.ring(), {"y^3 - z^2"});
  const auto order = MonomialOrder::grevlex();
  for (const auto& g : want.grevlex_basis())
    o.require(normal_form(g, proj.grevlex_basis(), order).is_zero(), "expected generator not in elimination");
  for (const auto& g : proj.grevlex_basis())
    o.require(normal_form(g, want.grevlex_basis(), order).is_zero(), "elimination generator not in expected");

  const Json kf = Json::parse(cli("kf " + problem("twisted_cubic")))["result"];
  auto yr = target_ring(r, 2);
  o.require(same_ideal(ideal_from_json(kf["K_ideal"], yr), I(yr, {"y1^3 - y2^2"})), "kf image != y1^3 - y2^2");

  const auto pts = sample_points(cubic, 20, 1.0, 7).points;
  o.require(pts.size() == 20, "fewer than 20 oracle points");
  double worst = 0;
  const Polynomial h = proj.grevlex_basis().front();
  for (const auto& p : pts) {
    const std::vector<std::complex<double>> yz{p[1], p[2]};
    worst = std::max(worst, std::abs(h.evaluate(std::span<const std::complex<double>>(yz))));
  }
  o.require(worst <= kProjectionTol, "projected point off the zero set");
  o.note << "elimination = <y^3 - z^2>, " << pts.size() << " points, max |y^3 - z^2| = " << worst;
}

// ---- 8 ---------------------------------------------------------------------

void criterion8(Outcome& o) {
  struct Case {
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
    std::size_t codim;
    std::vector<std::string> map;
  };
  const std::vector<Case> suite{
      {{"x", "y"}, {}, 0, {"x"}},
      {{"x", "y"}, {}, 0, {"x + x^2*y"}},
      {{"x", "y"}, {}, 0, {"x*y"}},
      {{"x", "y"}, {}, 0, {"x^2 + y^2"}},
      {{"x", "y"}, {}, 0, {"x^3 + y"}},
      {{"x", "y"}, {"x*y"}, 1, {"x"}},
      {{"x", "y", "z"}, {"y - x^2", "z - x^3"}, 2, {"y", "z"}},
      {{"x", "y", "z"}, {"x^2 - z*y^2"}, 1, {"z"}},
      {{"x", "y", "z"}, {"x^2 - z*y^2"}, 1, {"x", "z"}},
      {{"x", "y", "z"}, {}, 0, {"x + x^2*y", "z"}},
  };
  int components = 0;
  for (const auto& c : suite) {
    auto r = make_ring(c.vars);
    std::vector<Polynomial> gens, f;
    for (const auto& s : c.ideal) gens.push_back(P(s, r));
    for (const auto& s : c.map) f.push_back(P(s, r));
    GenericityConfig cfg;
    Rng rng(cfg.seed);
    const auto res = stratified_K(VarietySpec::validated(Ideal(r, gens), c.codim), f, cfg, rng, CriticalOptions{});
    for (const auto& comp : res.values.components) {
      o.require(!comp.ideal.is_zero(), "zero component");
      ++components;
    }
  }
  o.note << suite.size() << " maps, " << components << " components, none is <0>";
}

// ---- 9 ---------------------------------------------------------------------

void criterion9(Outcome& o) {
  auto runs = g_cli_runs;
  const std::string kf = "/tmp/affstrat_acceptance_kf.json";
  const std::string st = "/tmp/affstrat_acceptance_st.json";
  cli("kf " + problem("broughton") + " --output " + kf);
  cli("stratify " + problem("umbrella") + " --output " + st);
  runs.emplace_back("check " + problem("broughton") + " --results " + kf, "");
  runs.emplace_back("check " + problem("umbrella") + " --results " + st, "");
  int compared = 0;
  for (auto& [args, first] : runs) {
    if (first.empty()) first = cli(args);
    o.require(cli(args) == first, "output differs for '" + args + "'");
    ++compared;
  }
  o.note << compared << " CLI runs repeated byte-identically";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  // Wall-clock limits in seconds.
  const std::map<int, double> limit{{1, 120}, {2, 60}, {3, 300}, {4, 600}, {5, 600}, {6, 300}};
  bool all = true;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (auto it = limit.find(id); it != limit.end() && secs > it->second) o.require(false, "time limit");
    std::printf("criterion %d: %s (%.2fs) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.note.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
