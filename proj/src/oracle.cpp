#include "affstrat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace affstrat {

namespace {

using cd = std::complex<double>;

// Polynomial with double coefficients, for fast repeated evaluation.
struct NumPoly {
  std::vector<std::pair<cd, std::vector<int>>> terms;

  static NumPoly from(const Polynomial& p) {
    NumPoly q;
    for (const auto& t : p.terms()) {
      std::vector<int> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
      q.terms.emplace_back(t.coeff.get_d(), std::move(e));
    }
    return q;
  }

  static NumPoly affine(const CPoint& a, cd c) {
    NumPoly q;
    const std::size_t n = a.size();
    q.terms.emplace_back(c, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      q.terms.emplace_back(a[i], std::move(e));
    }
    return q;
  }

  void add(const NumPoly& o, cd scale) {
    for (const auto& [c, e] : o.terms) terms.emplace_back(scale * c, e);
  }

  NumPoly derivative(std::size_t var) const {
    NumPoly d;
    for (const auto& [c, e] : terms) {
      if (e[var] == 0) continue;
      auto f = e;
      --f[var];
      d.terms.emplace_back(c * static_cast<double>(e[var]), std::move(f));
    }
    return d;
  }

  // Sum of the absolute values of the terms at x.
  double magnitude(const CPoint& x) const {
    double sum = 0;
    for (const auto& [c, e] : terms) {
      double prod = std::abs(c);
      for (std::size_t i = 0; i < e.size(); ++i) prod *= std::pow(std::abs(x[i]), e[i]);
      sum += prod;
    }
    return sum;
  }

  cd operator()(const CPoint& x) const {
    cd sum = 0;
    for (const auto& [c, e] : terms) {
      cd prod = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) prod *= x[i];
      sum += prod;
    }
    return sum;
  }
};

// Polynomials with their Jacobian.
struct System {
  std::vector<NumPoly> F;
  std::vector<std::vector<NumPoly>> J;
  std::size_t n = 0;

  System(std::vector<NumPoly> polys, std::size_t nvars) : F(std::move(polys)), n(nvars) {
    for (const auto& p : F) {
      std::vector<NumPoly> row;
      for (std::size_t i = 0; i < n; ++i) row.push_back(p.derivative(i));
      J.push_back(std::move(row));
    }
  }

  CVector values(const CPoint& x) const {
    CVector v(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) v(i) = F[i](x);
    return v;
  }

  CMatrix jacobian(const CPoint& x) const {
    CMatrix M(F.size(), n);
    for (std::size_t i = 0; i < F.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = J[i][j](x);
    return M;
  }

  double max_abs(const CPoint& x) const {
    double r = 0;
    for (const auto& p : F) r = std::max(r, std::abs(p(x)));
    return r;
  }

  // Every value small against the size of its own terms (or below a floor
  // that single-term generators need).
  bool cancels(const CPoint& x, double rel) const {
    for (const auto& p : F) {
      const double v = std::abs(p(x));
      if (v > 1e-30 && v > rel * p.magnitude(x)) return false;
    }
    return true;
  }
};

std::vector<NumPoly> numeric(const std::vector<Polynomial>& ps) {
  std::vector<NumPoly> out;
  for (const auto& p : ps) out.push_back(NumPoly::from(p));
  return out;
}

cd gaussian(std::mt19937_64& eng) {
  std::normal_distribution<double> d(0.0, std::sqrt(0.5));
  const double re = d(eng);
  return {re, d(eng)};
}

cd unit_phase(std::mt19937_64& eng) {
  std::uniform_real_distribution<double> d(0.0, 2 * M_PI);
  return std::polar(1.0, d(eng));
}

double norm(const CPoint& x) {
  double s = 0;
  for (const auto& c : x) s += std::norm(c);
  return std::sqrt(s);
}

double distance(const CPoint& a, const CPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// Stops once every coordinate is stable to relative precision; coordinates
// of very different sizes are common near singular points.
std::optional<CPoint> newton(const System& sys, CPoint x, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    const CVector F = sys.values(x);
    const CVector step = sys.jacobian(x).colPivHouseholderQr().solve(-F);
    if (!step.allFinite()) return std::nullopt;
    bool stable = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const cd d = step(static_cast<Eigen::Index>(i));
      x[i] += d;
      stable = stable && std::abs(d) <= 1e-13 * std::abs(x[i]) + 1e-30;
    }
    if (stable) return x;
  }
  return std::nullopt;
}

// r random complex combinations of the generators.
std::vector<NumPoly> combinations_of(const std::vector<NumPoly>& gens, std::size_t r, std::mt19937_64& eng) {
  std::vector<NumPoly> out;
  for (std::size_t k = 0; k < r; ++k) {
    NumPoly p;
    for (const auto& g : gens) p.add(g, gaussian(eng));
    out.push_back(std::move(p));
  }
  return out;
}

// Largest sine between x - y and the tangent space of X at x, over the ys.
// Secants shorter than `min_len` are dominated by rounding and skipped.
double secant_gap(const System& X, std::size_t codim, const CPoint& x, const std::vector<CPoint>& ys,
                  double min_len) {
  if (codim == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(X.jacobian(x), Eigen::ComputeFullV);
  const CMatrix normal = svd.matrixV().leftCols(static_cast<Eigen::Index>(codim));
  double best = 0;
  for (const auto& y : ys) {
    CVector u(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) u(static_cast<Eigen::Index>(i)) = x[i] - y[i];
    const double len = u.norm();
    if (len < min_len) continue;
    best = std::max(best, (normal.adjoint() * u).norm() / len);
  }
  return best;
}

bool full_rank(const System& X, std::size_t codim, const CPoint& x) {
  if (codim == 0) return true;
  Eigen::JacobiSVD<CMatrix> svd(X.jacobian(x));
  const auto& s = svd.singularValues();
  if (static_cast<std::size_t>(s.size()) < codim) return false;
  const double top = s(0);
  const double low = s(static_cast<Eigen::Index>(codim) - 1);
  return low > 0 && low > 1e-10 * top;
}

// Points near x0 at scale t, on slices x_i = x0_i + c t^e of `dim` random
// coordinates.
std::vector<CPoint> anisotropic_samples(const System& gens, std::size_t dim, const CPoint& x0, double t,
                                        const OracleConfig& cfg, std::mt19937_64& eng, bool need_smooth) {
  const std::size_t n = x0.size();
  const std::size_t codim = n - dim;
  std::vector<CPoint> out;
  std::uniform_int_distribution<int> expo(1, 4);
  for (int k = 0; k < cfg.samples_per_scale; ++k) {
    std::vector<std::size_t> coords(n);
    std::iota(coords.begin(), coords.end(), 0);
    std::shuffle(coords.begin(), coords.end(), eng);
    coords.resize(dim);
    std::vector<NumPoly> eqs = combinations_of(gens.F, codim, eng);
    CPoint start = x0;
    for (std::size_t i = 0; i < n; ++i) start[i] += t * gaussian(eng);
    for (auto i : coords) {
      const cd value = x0[i] + unit_phase(eng) * std::pow(t, expo(eng));
      CPoint a(n, 0.0);
      a[i] = 1.0;
      eqs.push_back(NumPoly::affine(a, -value));
      start[i] = value;
    }
    const auto x = newton(System(std::move(eqs), n), start, cfg.newton_iterations);
    if (!x || gens.max_abs(*x) >= cfg.residual_tol || !gens.cancels(*x, 1e-10)) continue;
    if (distance(*x, x0) > 10 * t) continue;
    if (need_smooth && !full_rank(gens, codim, *x)) continue;
    out.push_back(*x);
  }
  return out;
}

// f - y*, |x| times the part of df orthogonal to the rows of db, and b.
struct WitnessFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const System* f;
  const System* b;
  CPoint target;
  double radius;
  std::size_t n;

  int inputs() const { return static_cast<int>(2 * n); }
  int values() const {
    const std::size_t m = f->F.size();
    return static_cast<int>(2 * m + (m == 1 ? 2 * n : 1) + 2 * b->F.size() + 1);
  }

  CPoint point(const InputType& z) const {
    CPoint x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = {z(2 * i), z(2 * i + 1)};
    return x;
  }

  int operator()(const InputType& z, ValueType& out) const {
    const CPoint x = point(z);
    const double len = norm(x);
    std::size_t k = 0;
    const CVector fv = f->values(x);
    for (Eigen::Index i = 0; i < fv.size(); ++i) {
      out(k++) = (fv(i) - target[i]).real();
      out(k++) = (fv(i) - target[i]).imag();
    }
    const CMatrix A = f->jacobian(x);
    if (A.rows() == 1) {
      CVector a = A.row(0).transpose();
      if (!b->F.empty()) {
        const CMatrix Bt = b->jacobian(x).transpose();
        a -= Bt * Bt.colPivHouseholderQr().solve(a);
      }
      for (std::size_t i = 0; i < n; ++i) {
        out(k++) = len * a(i).real();
        out(k++) = len * a(i).imag();
      }
    } else {
      const CMatrix B = b->F.empty() ? CMatrix(0, n) : b->jacobian(x);
      const CMatrix Q = kernel_basis(B);
      out(k++) = len * svd_nu(A * Q);
    }
    const CVector bv = b->values(x);
    for (Eigen::Index i = 0; i < bv.size(); ++i) {
      out(k++) = bv(i).real();
      out(k++) = bv(i).imag();
    }
    out(k++) = len - radius;
    return 0;
  }
};

struct Scored {
  CPoint x;
  double score = INFINITY;
  double measure = 0;
  CPoint value;
};

Scored score_point(const System& f, const System& b, const CPoint& target, const CPoint& x) {
  Scored s;
  s.x = x;
  const double len = norm(x);
  const CMatrix A = f.jacobian(x);
  double nu_x = 0;
  if (b.F.empty()) {
    nu_x = svd_nu(A);
  } else {
    try {
      nu_x = svd_nu(A * kernel_basis(b.jacobian(x)));
    } catch (const std::exception&) {
      return s;
    }
  }
  s.measure = len * nu_x;
  double gap = 0;
  for (std::size_t i = 0; i < f.F.size(); ++i) {
    s.value.push_back(f.F[i](x));
    gap += std::norm(s.value.back() - target[i]);
  }
  // Points off V(b) do not count.
  if (b.max_abs(x) > 1e-6 * std::max(1.0, len)) return s;
  s.score = s.measure + std::sqrt(gap);
  return s;
}

Scored minimize_at(const System& f, const System& b, const CPoint& target, double radius, const CPoint& start) {
  const std::size_t n = start.size();
  WitnessFunctor fn{&f, &b, target, radius, n};
  Eigen::NumericalDiff<WitnessFunctor> nd(fn);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<WitnessFunctor>> lm(nd);
  lm.parameters.maxfev = 4000;
  lm.parameters.ftol = 1e-14;
  lm.parameters.xtol = 1e-14;
  Eigen::VectorXd z(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    z(2 * i) = start[i].real();
    z(2 * i + 1) = start[i].imag();
  }
  lm.minimize(z);
  if (!z.allFinite()) return {};
  return score_point(f, b, target, fn.point(z));
}

CPoint rescaled(const CPoint& x, double factor) {
  CPoint y = x;
  for (auto& c : y) c *= factor;
  return y;
}

// Stretches only the largest coordinate so that the norm grows by `factor`.
CPoint stretched(const CPoint& x, double factor) {
  CPoint y = x;
  std::size_t big = 0;
  for (std::size_t i = 1; i < y.size(); ++i)
    if (std::abs(y[i]) > std::abs(y[big])) big = i;
  const double len = norm(x);
  const double rest = std::max(0.0, len * len - std::norm(y[big]));
  const double want = std::sqrt(std::max(0.0, len * len * factor * factor - rest));
  if (std::abs(y[big]) > 0) y[big] *= want / std::abs(y[big]);
  return y;
}

}  // namespace

double svd_nu(const CMatrix& A) {
  if (A.rows() == 0) return INFINITY;
  if (A.rows() > A.cols()) return 0;
  Eigen::JacobiSVD<CMatrix> svd(A);
  return svd.singularValues()(A.rows() - 1);
}

double residual(const Ideal& I, const CPoint& x) {
  double r = 0;
  for (const auto& g : I.grevlex_basis()) r = std::max(r, std::abs(g.evaluate(std::span<const cd>(x))));
  return r;
}

SampleReport sample_points(const Ideal& I, std::size_t count, double radius, std::uint64_t seed,
                           const OracleConfig& cfg) {
  SampleReport rep;
  rep.requested = count;
  const long d = dimension(I);
  if (d < 0) return rep;
  const std::size_t n = I.ring()->size();
  const System gens(numeric(I.grevlex_basis()), n);
  std::mt19937_64 eng(seed);
  const long budget = static_cast<long>(count) * cfg.sample_tries;
  while (rep.points.size() < count && rep.tries < budget) {
    ++rep.tries;
    std::vector<NumPoly> eqs = combinations_of(gens.F, n - static_cast<std::size_t>(d), eng);
    CPoint p(n);
    for (auto& c : p) c = radius * gaussian(eng) / std::sqrt(static_cast<double>(n));
    for (long k = 0; k < d; ++k) {
      CPoint a(n);
      cd c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = gaussian(eng);
        c -= a[i] * p[i];
      }
      eqs.push_back(NumPoly::affine(a, c));
    }
    const auto x = newton(System(std::move(eqs), n), p, cfg.newton_iterations);
    if (x && gens.max_abs(*x) < cfg.residual_tol) rep.points.push_back(*x);
  }
  return rep;
}

WitnessReport whitney_b_violation_score(const Ideal& X, const Ideal& Y, const CPoint& x0,
                                        const std::vector<double>& scales, std::uint64_t seed,
                                        const OracleConfig& cfg) {
  WitnessReport rep;
  rep.target = "condition (b) at a point";
  const std::size_t n = X.ring()->size();
  const long dx = dimension(X);
  const long dy = dimension(Y);
  if (dx < 0 || dy < 0 || scales.empty()) return rep;
  const System gx(numeric(X.grevlex_basis()), n);
  const System gy(numeric(Y.grevlex_basis()), n);
  const std::size_t codim = n - static_cast<std::size_t>(dx);
  std::mt19937_64 eng(seed);
  for (double t : scales) {
    auto xs = anisotropic_samples(gx, static_cast<std::size_t>(dx), x0, t, cfg, eng, true);
    auto ys = anisotropic_samples(gy, static_cast<std::size_t>(dy), x0, t, cfg, eng, false);
    ys.push_back(x0);
    TraceEntry e;
    e.norm = t;
    for (const auto& x : xs) {
      const double gap = secant_gap(gx, codim, x, ys, 1e-8 * std::max(1.0, norm(x0)));
      if (gap >= e.measure) {
        e.measure = gap;
        e.point = x;
      }
    }
    rep.trace.push_back(std::move(e));
  }
  rep.best_score = rep.trace.back().measure;
  rep.success = rep.best_score > cfg.witness_threshold;
  return rep;
}

WitnessReport kinf_witness_search(const std::vector<Polynomial>& b_rows, const std::vector<Polynomial>& f,
                                  const CPoint& target, std::uint64_t seed, const OracleConfig& cfg) {
  WitnessReport rep;
  rep.target = "asymptotic critical value";
  const std::size_t n = f.at(0).ring()->size();
  const System fs(numeric(f), n);
  const System bs(numeric(b_rows), n);
  std::mt19937_64 eng(seed);

  double radius = 10;
  const double step = std::pow(10.0, 1.0 / cfg.steps_per_decade);
  Scored best;
  for (int k = 0; k < cfg.lm_starts; ++k) {
    CPoint start(n);
    for (auto& c : start) c = gaussian(eng);
    const Scored s = minimize_at(fs, bs, target, radius, rescaled(start, radius / norm(start)));
    if (s.score < best.score) best = s;
  }
  rep.best_score = INFINITY;
  double best_far = INFINITY;
  while (true) {
    if (!std::isfinite(best.score)) break;
    rep.trace.push_back({norm(best.x), best.measure, best.value, best.x});
    rep.best_score = std::min(rep.best_score, best.score);
    if (norm(best.x) > cfg.far_norm) best_far = std::min(best_far, best.score);
    if (radius >= cfg.final_norm * (1 - 1e-9)) break;
    radius *= step;
    const double factor = radius / norm(best.x);
    Scored next;
    for (const auto& start : {rescaled(best.x, factor), stretched(best.x, factor)}) {
      const Scored s = minimize_at(fs, bs, target, radius, start);
      if (s.score < next.score) next = s;
    }
    best = next;
  }
  if (std::isfinite(best_far)) rep.best_score = best_far;
  rep.success = best_far < cfg.witness_threshold;
  return rep;
}

}  // namespace affstrat
