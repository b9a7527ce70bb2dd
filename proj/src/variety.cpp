#include "affstrat/variety.hpp"

#include "affstrat/errors.hpp"
#include "affstrat/matrix.hpp"

namespace affstrat {

long Rng::draw(long bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  return static_cast<long>(engine_() % span) - bound;
}

long Rng::draw_nonzero(long bound) {
  long v = 0;
  while (v == 0) v = draw(bound);
  return v;
}

VarietySpec VarietySpec::validated(const Ideal& ideal, std::size_t codim, bool take_radical) {
  VarietySpec X;
  X.ring = ideal.ring();
  if (codim > X.ring->size())
    throw DimensionMismatch("codimension " + std::to_string(codim) + " exceeds ambient dimension " +
                            std::to_string(X.ring->size()));
  X.ideal = take_radical ? radical(ideal) : ideal;
  X.codim = codim;
  const long d = dimension(X.ideal);
  if (d < 0) throw DimensionMismatch("the ideal defines the empty set");
  if (d != static_cast<long>(X.ring->size() - codim))
    throw DimensionMismatch("dim V(I) = " + std::to_string(d) + " but declared codimension " +
                            std::to_string(codim) + " gives " +
                            std::to_string(X.ring->size() - codim));
  for (const auto& g : X.generators()) X.degree_bound = std::max(X.degree_bound, g.total_degree());
  return X;
}

Ideal points_at_infinity(const Ideal& I) {
  auto hring = Polynomial(I.ring()).homogenizing_ring();
  std::vector<Polynomial> gens{Polynomial::variable(hring, 0)};
  for (const auto& g : I.grevlex_basis()) gens.push_back(g.homogenize());
  return Ideal(hring, std::move(gens));
}

namespace {

long dim_at_infinity(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return dimension(points_at_infinity(Ideal(ring, gens)));
}

std::vector<std::size_t> all_vars(const RingPtr& ring) {
  std::vector<std::size_t> v(ring->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

Combinations generic_combinations(const Ideal& I, std::size_t r, const GenericityConfig& cfg, Rng& rng) {
  ComputationLabel label("generic combinations");
  Combinations out;
  if (r == 0) return out;
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  const auto& g = I.grevlex_basis();
  if (g.size() < r)
    throw DegenerateInput("ideal has " + std::to_string(g.size()) + " generators, fewer than codim " +
                          std::to_string(r));
  long last = -2;
  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    std::vector<Polynomial> G;
    std::vector<std::vector<long>> alphas;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<long> a(g.size());
      Polynomial Gi(ring);
      for (std::size_t j = 0; j < g.size(); ++j) {
        a[j] = rng.draw(cfg.coeff_bound);
        if (a[j] != 0) Gi += Rational(a[j]) * g[j];
      }
      G.push_back(std::move(Gi));
      alphas.push_back(std::move(a));
    }
    last = dim_at_infinity(ring, G);
    if (last == static_cast<long>(n - r)) {
      out.G = std::move(G);
      out.alphas = std::move(alphas);
      out.attempts = attempt;
      return out;
    }
  }
  throw GenericityFailure("no generic combination after " + std::to_string(cfg.max_attempts) +
                          " attempts (last dim V(I_inf) = " + std::to_string(last) + ", wanted " +
                          std::to_string(n - r) + ")");
}

SliceCheck check_slice(const std::vector<Polynomial>& G, const std::vector<Polynomial>& forms,
                       const Ideal* X) {
  SliceCheck c;
  if (G.empty() && forms.empty()) {
    // Zero-dimensional ambient space: a single point, nothing to cut.
    c.finite_at_infinity = c.jacobian_nonvanishing = true;
    return c;
  }
  const RingPtr& ring = G.empty() ? forms[0].ring() : G[0].ring();
  std::vector<Polynomial> eqs = G;
  eqs.insert(eqs.end(), forms.begin(), forms.end());
  c.finite_at_infinity = dim_at_infinity(ring, eqs) == 0;
  if (!c.finite_at_infinity) return c;
  const Polynomial jac = determinant(jacobian(eqs, all_vars(ring)), ring);
  c.jacobian_nonvanishing = Ideal(ring, eqs).with({jac}).is_unit();
  if (!c.jacobian_nonvanishing) return c;
  if (X && !jac.is_constant()) c.dense_on_variety = dimension(X->with({jac})) < dimension(*X);
  return c;
}

Slice generic_linear_slice(const std::vector<Polynomial>& G, std::size_t count,
                           const GenericityConfig& cfg, Rng& rng, const Ideal* X) {
  ComputationLabel label("generic slice");
  const RingPtr& ring = X ? X->ring() : G.at(0).ring();
  const std::size_t n = ring->size();
  std::vector<std::vector<std::size_t>> coordinate;
  if (cfg.slices == SliceStrategy::CoordinateFirst && count > 0) coordinate = combinations(n, count);
  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    std::vector<Polynomial> forms;
    const std::size_t k = static_cast<std::size_t>(attempt - 1);
    if (k < coordinate.size()) {
      for (auto v : coordinate[k])
        forms.push_back(Polynomial::variable(ring, v) +
                        Polynomial::constant(ring, rng.draw(cfg.coeff_bound)));
    } else {
      for (std::size_t f = 0; f < count; ++f) {
        Polynomial l = Polynomial::constant(ring, rng.draw(cfg.coeff_bound));
        for (std::size_t v = 0; v < n; ++v) l += Rational(rng.draw(cfg.coeff_bound)) * Polynomial::variable(ring, v);
        forms.push_back(std::move(l));
      }
    }
    if (check_slice(G, forms, X).ok()) {
      Slice s;
      std::vector<Polynomial> eqs = G;
      eqs.insert(eqs.end(), forms.begin(), forms.end());
      s.jacobian = determinant(jacobian(eqs, all_vars(ring)), ring);
      s.forms = std::move(forms);
      s.attempts = attempt;
      return s;
    }
  }
  throw GenericityFailure("no generic linear slice after " + std::to_string(cfg.max_attempts) + " attempts");
}

SmoothLocus smooth_locus(const VarietySpec& X, const GenericityConfig& cfg, Rng& rng) {
  SmoothLocus s;
  s.comb = generic_combinations(X.ideal, X.codim, cfg, rng);
  s.slice = generic_linear_slice(s.comb.G, X.dim(), cfg, rng, &X.ideal);
  return s;
}

Localizer localizer_for(const VarietySpec& X, const SmoothLocus& smooth, const std::optional<Ideal>& W,
                        const GenericityConfig& cfg, Rng& rng) {
  ComputationLabel label("localizer");
  Localizer loc;
  const auto& ring = X.ring;
  loc.H = Polynomial::constant(ring, 1);
  if (!W || W->is_unit()) return loc;
  std::vector<Polynomial> u;
  for (const auto& g : W->grevlex_basis())
    if (!is_member(g, X.ideal)) u.push_back(g);
  if (u.empty()) throw DegenerateInput("the set to avoid contains the whole variety");
  for (const auto& g : u) loc.degree_bound = std::max(loc.degree_bound, g.total_degree());
  const long target = static_cast<long>(X.dim());
  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    std::vector<long> gammas(u.size());
    Polynomial H(ring);
    for (std::size_t i = 0; i < u.size(); ++i) {
      gammas[i] = rng.draw(cfg.coeff_bound);
      if (gammas[i] != 0) H += Rational(gammas[i]) * u[i];
    }
    if (H.is_zero() || H.is_constant()) continue;
    std::vector<Polynomial> eqs = smooth.comb.G;
    eqs.push_back(H);
    if (dim_at_infinity(ring, eqs) >= target) continue;
    if (dimension(X.ideal.with({H})) >= target) continue;
    loc.H = std::move(H);
    loc.gammas = std::move(gammas);
    loc.attempts = attempt;
    return loc;
  }
  throw GenericityFailure("no generic localizer after " + std::to_string(cfg.max_attempts) + " attempts");
}

PXW compute_p_XW(const VarietySpec& X, const std::optional<Ideal>& W, const GenericityConfig& cfg,
                 Rng& rng) {
  PXW out;
  out.smooth = smooth_locus(X, cfg, rng);
  out.localizer = localizer_for(X, out.smooth, W, cfg, rng);
  out.p = out.smooth.jacobian() * out.localizer.H;
  out.degree_bound = static_cast<long>(X.codim) * (X.degree_bound - 1) + out.localizer.degree_bound;
  return out;
}

Ideal LocalizedVariety::embedded() const {
  auto ring = extend_ring(base.ring, {"_s"});
  auto s = Polynomial::variable(ring, ring->size() - 1);
  return base.ideal.embed(ring).with({localizer.embed(ring) * s - Polynomial::constant(ring, 1)});
}

}  // namespace affstrat
