#include "affstrat/critical.hpp"

#include "affstrat/errors.hpp"
#include "affstrat/matrix.hpp"

namespace affstrat {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

// Rows [df; db] differentiated in the n original variables.
PolyMatrix stratum_matrix(const StratumProblem& sp) {
  std::vector<Polynomial> rows = sp.f;
  rows.insert(rows.end(), sp.b_rows.begin(), sp.b_rows.end());
  return jacobian(rows, range(0, sp.ring->size()));
}

bool vanishes_on_stratum(const StratumProblem& sp, const Polynomial& p) {
  return saturated_member(p, sp.base, sp.localizer);
}

std::vector<std::size_t> without(const std::vector<std::size_t>& v, std::size_t drop) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != drop) out.push_back(v[i]);
  return out;
}

Polynomial sub_minor(const PolyMatrix& C, std::size_t rows, const std::vector<std::size_t>& cols, std::size_t k,
                     std::size_t j, const RingPtr& ring) {
  return minor(C, without(range(0, rows), k), without(cols, j), ring);
}

// Images of an eliminated basis under Y_i -> y_i (i < m), Y_i -> 0 otherwise.
Ideal restrict_to_target(const Ideal& E, const RingPtr& yring, std::size_t m) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < E.ring()->size(); ++i)
    images.push_back(i < m ? Polynomial::variable(yring, i) : Polynomial(yring));
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(g.compose(images));
  return Ideal(yring, std::move(gens));
}

Ideal graph_image(const Ideal& I, const std::vector<Polynomial>& f) {
  const auto& source = I.ring();
  const std::size_t m = f.size();
  auto yring = target_ring(source, m);
  auto ring = extend_ring(source, yring->names());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(ring));
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Polynomial::variable(ring, source->size() + i) - f[i].embed(ring));
  Ideal E = elimination_ideal(Ideal(ring, std::move(gens)), range(source->size(), ring->size()));
  return restrict_to_target(E, yring, m);
}

}  // namespace

StratumProblem StratumProblem::from_parts(const LocalizedVariety& Z, std::vector<Polynomial> b_rows,
                                          std::vector<Polynomial> f) {
  StratumProblem sp;
  sp.ring = Z.base.ring;
  sp.embedded = Z.embedded();
  sp.b_rows = std::move(b_rows);
  sp.f = std::move(f);
  sp.base = Z.base.ideal;
  sp.localizer = Z.localizer;
  return sp;
}

StratumProblem StratumProblem::from_level(const Level& level, const std::vector<Polynomial>& f) {
  return from_parts(level.stratum(), level.smooth.comb.G, f);
}

std::string MinorSelector::to_string() const {
  std::string s = "[";
  for (std::size_t l = 0; l < minors.size(); ++l) {
    if (l) s += ", ";
    s += "{";
    for (std::size_t c = 0; c < minors[l].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(minors[l][c] + 1);
    }
    s += "}:(" + std::to_string(pairs[l].first + 1) + "," + std::to_string(minors[l][pairs[l].second] + 1) + ")";
  }
  return s + "] q=" + std::to_string(q + 1);
}

CriticalOptions& default_critical_options() {
  static CriticalOptions opts;
  return opts;
}

RingPtr target_ring(const RingPtr& source, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    std::string name = "y" + std::to_string(i + 1);
    while (source->index_of(name) < source->size()) name = "_" + name;
    names.push_back(name);
  }
  return make_ring(std::move(names));
}

Ideal image_closure(const Ideal& I, const std::vector<Polynomial>& f) {
  ComputationLabel label("image closure");
  if (I.is_unit()) return Ideal::unit(target_ring(I.ring(), f.size()));
  return graph_image(I, f);
}

Ideal k0_of_stratum(const StratumProblem& sp) {
  ComputationLabel label("K0");
  const std::size_t n = sp.ring->size();
  const std::size_t size = sp.f.size() + sp.b_rows.size();
  const auto& ering = sp.embedded.ring();
  std::vector<Polynomial> gens = sp.embedded.generators();
  if (size <= n) {
    const PolyMatrix C = stratum_matrix(sp);
    for (const auto& cols : combinations(n, size)) {
      Polynomial M = minor(C, range(0, size), cols, sp.ring);
      if (!M.is_zero()) gens.push_back(M.embed(ering));
    }
  }
  std::vector<Polynomial> f;
  for (const auto& fi : sp.f) f.push_back(fi.embed(ering));
  return graph_image(Ideal(ering, std::move(gens)), f);
}

std::vector<MinorSelector> enumerate_selectors(const StratumProblem& sp, const CriticalOptions& opts) {
  const std::size_t n = sp.ring->size();
  const std::size_t m = sp.f.size();
  const std::size_t size = m + sp.b_rows.size();
  std::vector<std::vector<std::size_t>> minors;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> choices;
  if (size <= n) {
    const PolyMatrix C = stratum_matrix(sp);
    for (const auto& cols : combinations(n, size)) {
      if (vanishes_on_stratum(sp, minor(C, range(0, size), cols, sp.ring))) continue;
      std::vector<std::pair<std::size_t, std::size_t>> ok;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < size; ++j)
          if (!vanishes_on_stratum(sp, sub_minor(C, size, cols, k, j, sp.ring))) ok.emplace_back(k, j);
      minors.push_back(cols);
      choices.push_back(std::move(ok));
    }
  }
  // Each factor is at most m (m + r), so the running product cannot overflow
  // before it passes the cap.
  std::size_t count = n;
  for (const auto& c : choices) {
    count *= c.size();
    if (count == 0 || count > opts.branch_cap) break;
  }
  if (count > opts.branch_cap)
    throw SelectorExplosion("selector enumeration exceeds the branch cap of " + std::to_string(opts.branch_cap));
  std::vector<MinorSelector> out;
  if (count == 0) return out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    MinorSelector base;
    base.minors = minors;
    for (std::size_t l = 0; l < choices.size(); ++l) base.pairs.push_back(choices[l][idx[l]]);
    for (std::size_t q = 0; q < n; ++q) {
      MinorSelector s = base;
      s.q = q;
      out.push_back(std::move(s));
    }
    std::size_t l = choices.size();
    while (l > 0 && ++idx[l - 1] == choices[l - 1].size()) idx[--l] = 0;
    if (l == 0) break;
  }
  return out;
}

Ideal build_minor_ratio_graph(const StratumProblem& sp, const MinorSelector& sel) {
  const std::size_t n = sp.ring->size();
  const std::size_t m = sp.f.size();
  const std::size_t size = m + sp.b_rows.size();
  const std::size_t s = sel.minors.size();
  const std::size_t N = s * (n + 1) + 1;
  const auto& ering = sp.embedded.ring();
  std::vector<std::string> extra{"_t"};
  for (std::size_t l = 0; l < s; ++l) extra.push_back("_z" + std::to_string(l + 1));
  for (std::size_t i = 0; i < m + N; ++i) extra.push_back("_Y" + std::to_string(i + 1));
  auto ring = extend_ring(ering, extra);
  const std::size_t t_at = n + 1;
  const std::size_t z_at = t_at + 1;
  const std::size_t y_at = z_at + s;
  const auto one = Polynomial::constant(ring, 1);
  auto var = [&](std::size_t i) { return Polynomial::variable(ring, i); };

  std::vector<Polynomial> gens;
  for (const auto& g : sp.embedded.generators()) gens.push_back(g.embed(ring));
  gens.push_back(var(t_at) * var(sel.q) - one);
  for (std::size_t i = 0; i < m; ++i) gens.push_back(var(y_at + i) - sp.f[i].embed(ring));
  const PolyMatrix C = stratum_matrix(sp);
  std::size_t y = y_at + m;
  for (std::size_t l = 0; l < s; ++l) {
    const auto& cols = sel.minors[l];
    const auto [k, j] = sel.pairs[l];
    const Polynomial sub = sub_minor(C, size, cols, k, j, sp.ring);
    if (vanishes_on_stratum(sp, sub))
      throw DegenerateSelector("sub-minor " + sel.to_string() + " vanishes on the stratum");
    gens.push_back(var(z_at + l) * sub.embed(ring) - one);
    const Polynomial W = var(z_at + l) * minor(C, range(0, size), cols, sp.ring).embed(ring);
    gens.push_back(var(y++) - W);
    for (std::size_t x = 0; x < n; ++x) gens.push_back(var(y++) - var(x) * W);
  }
  gens.push_back(var(y) - var(t_at));
  return Ideal(ring, std::move(gens));
}

Ideal kinf_branch(const StratumProblem& sp, const MinorSelector& sel) {
  ComputationLabel label("K-infinity branch " + sel.to_string());
  const Ideal graph = build_minor_ratio_graph(sp, sel);
  const std::size_t first_y = sp.ring->size() + 2 + sel.minors.size();
  const Ideal E = elimination_ideal(graph, range(first_y, graph.ring()->size()));
  return restrict_to_target(E, target_ring(sp.ring, sp.f.size()), sp.f.size());
}

std::vector<KinfComponent> kinf_of_stratum(const StratumProblem& sp, const CriticalOptions& opts) {
  ComputationLabel label("K-infinity");
  std::vector<KinfComponent> out;
  for (auto& sel : enumerate_selectors(sp, opts)) {
    Ideal I = kinf_branch(sp, sel);
    if (I.is_unit()) continue;
    if (I.is_zero())
      throw NonProperOutput("K-infinity branch " + sel.to_string() + " is all of the target space");
    out.push_back({std::move(sel), std::move(I)});
  }
  return out;
}

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::K0:
      return "K0 of stratum " + std::to_string(stratum);
    case Kind::Kinf:
      return "K-infinity of stratum " + std::to_string(stratum) + " branch " + selector->to_string();
    case Kind::Tail:
      return "tail image";
  }
  return {};
}

Ideal CriticalValueSet::combined() const {
  if (components.empty()) return Ideal::unit(ring);
  std::vector<Ideal> parts;
  for (const auto& c : components) parts.push_back(c.ideal);
  return parts.size() == 1 ? parts[0] : intersect(parts, ring);
}

namespace {

void add_component(CriticalValueSet& K, const Ideal& I, Provenance p) {
  if (I.is_unit()) return;
  if (I.is_zero()) throw NonProperOutput(p.to_string() + " is all of the target space");
  Ideal R = radical(I);
  for (auto& c : K.components) {
    if (variety_contains(c.ideal, R)) {
      c.sources.push_back(std::move(p));
      return;
    }
  }
  CriticalComponent fresh{R, {std::move(p)}};
  std::vector<CriticalComponent> kept;
  for (auto& c : K.components) {
    if (variety_contains(R, c.ideal))
      fresh.sources.insert(fresh.sources.end(), c.sources.begin(), c.sources.end());
    else
      kept.push_back(std::move(c));
  }
  kept.push_back(std::move(fresh));
  K.components = std::move(kept);
}

}  // namespace

KfResult stratified_K(const VarietySpec& X, const std::vector<Polynomial>& f, const GenericityConfig& cfg,
                      Rng& rng, const CriticalOptions& opts) {
  ComputationLabel label("stratified K(f)");
  if (f.empty()) throw DimensionMismatch("the map has no components");
  for (const auto& fi : f)
    if (!same_ring(fi.ring(), X.ring)) throw RingMismatch("map component outside the ring of the variety");
  KfResult out;
  out.strata = build_filtration(X, FiltrationMode::Partial, f, cfg, rng);
  auto& K = out.values;
  K.ring = target_ring(X.ring, f.size());
  for (std::size_t i = 0; i < out.strata.levels.size(); ++i) {
    ComputationLabel stratum_label("stratum " + std::to_string(i));
    const auto sp = StratumProblem::from_level(out.strata.levels[i], f);
    K.k0.push_back(k0_of_stratum(sp));
    K.kinf.push_back(kinf_of_stratum(sp, opts));
  }
  K.tail_image = image_closure(out.strata.tail, f);
  for (std::size_t i = 0; i < K.k0.size(); ++i) {
    add_component(K, K.k0[i], {Provenance::Kind::K0, i, std::nullopt});
    for (const auto& b : K.kinf[i]) add_component(K, b.ideal, {Provenance::Kind::Kinf, i, b.selector});
  }
  add_component(K, K.tail_image, {Provenance::Kind::Tail, out.strata.levels.size(), std::nullopt});
  return out;
}

}  // namespace affstrat
