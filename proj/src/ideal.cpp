#include "affstrat/ideal.hpp"

#include <algorithm>
#include <functional>

#include "affstrat/errors.hpp"

namespace affstrat {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator outside the ideal's ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, b] : cache_->entries)
      if (o == order) return *b;
  }
  auto computed = std::make_shared<const std::vector<Polynomial>>(groebner_basis(gens_, order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [o, b] : cache_->entries)
    if (o == order) return *b;
  cache_->entries.emplace_back(order, computed);
  return *computed;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_constant()) return true;
  const auto& b = grevlex_basis();
  return b.size() == 1 && b[0].is_constant();
}

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("sum of ideals in different rings");
  return with(other.gens_);
}

Ideal Ideal::embed(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.embed(target));
  return Ideal(target, std::move(gens));
}

std::vector<std::string> Ideal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : grevlex_basis()) out.push_back(g.to_string());
  return out;
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> names = base->names();
  for (auto name : extra) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
    names.push_back(name);
  }
  return make_ring(std::move(names));
}

RingPtr sub_ring(const RingPtr& base, const std::vector<std::size_t>& keep) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto k : keep) names.push_back(base->name(k));
  return make_ring(std::move(names));
}

bool is_member(const Polynomial& p, const Ideal& I) {
  if (p.is_zero()) return true;
  const auto order = MonomialOrder::grevlex();
  return normal_form(p, I.basis(order), order).is_zero();
}

bool saturated_member(const Polynomial& p, const Ideal& I, const Polynomial& s) {
  if (p.is_zero()) return true;
  auto ring = extend_ring(I.ring(), {"_z"});
  auto z = Polynomial::variable(ring, ring->size() - 1);
  Ideal J = I.embed(ring).with({Polynomial::constant(ring, 1) - s.embed(ring) * z});
  return is_member(p.embed(ring), J);
}

bool radical_member(const Polynomial& p, const Ideal& I) {
  if (p.is_zero()) return true;
  if (is_member(p, I)) return true;
  auto ring = extend_ring(I.ring(), {"_z"});
  auto z = Polynomial::variable(ring, ring->size() - 1);
  return I.embed(ring).with({Polynomial::constant(ring, 1) - p.embed(ring) * z}).is_unit();
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& eliminate_vars) {
  const auto& ring = I.ring();
  if (eliminate_vars.empty()) return I;
  const auto order = MonomialOrder::elimination(eliminate_vars, ring->size());
  std::vector<bool> gone(ring->size(), false);
  for (auto v : eliminate_vars) gone[v] = true;
  std::vector<Polynomial> kept;
  for (const auto& g : I.basis(order)) {
    bool ok = true;
    for (auto v : g.support())
      if (gone[v]) ok = false;
    if (ok) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep) {
  const auto& ring = I.ring();
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> drop;
  std::vector<std::size_t> map(ring->size(), 0);
  for (std::size_t v = 0, k = 0; v < ring->size(); ++v) {
    if (k < sorted.size() && sorted[k] == v) {
      map[v] = k++;
    } else {
      drop.push_back(v);
    }
  }
  Ideal E = eliminate(I, drop);
  auto target = sub_ring(ring, sorted);
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(g.remap(target, map));
  return Ideal(target, std::move(gens));
}

DimensionInfo dimension_info(const Ideal& I) {
  DimensionInfo info;
  const std::size_t n = I.ring()->size();
  const auto& basis = I.grevlex_basis();
  if (basis.size() == 1 && basis[0].is_constant()) {
    info.empty = true;
    return info;
  }
  std::vector<std::vector<std::size_t>> supports;
  const auto order = MonomialOrder::grevlex();
  for (const auto& g : basis) {
    const auto& m = g.leading_term(order).monomial;
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] != 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::vector<bool> in(n, false);
  std::vector<std::size_t> current, best;
  auto independent = [&]() {
    for (const auto& s : supports) {
      bool inside = true;
      for (auto v : s)
        if (!in[v]) {
          inside = false;
          break;
        }
      if (inside) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (current.size() > best.size()) best = current;
    if (current.size() + (n - start) <= best.size()) return;
    for (std::size_t v = start; v < n; ++v) {
      in[v] = true;
      current.push_back(v);
      if (independent()) dfs(v + 1);
      current.pop_back();
      in[v] = false;
      if (best.size() == n) return;
    }
  };
  dfs(0);
  info.dimension = best.size();
  info.independent = best;
  return info;
}

long dimension(const Ideal& I) {
  const auto info = dimension_info(I);
  return info.empty ? -1 : static_cast<long>(info.dimension);
}

Ideal saturate(const Ideal& I, const Polynomial& s) {
  if (s.is_constant()) {
    if (s.is_zero()) return Ideal::unit(I.ring());
    return I;
  }
  auto ring = extend_ring(I.ring(), {"_z"});
  auto z = Polynomial::variable(ring, ring->size() - 1);
  Ideal J = I.embed(ring).with({Polynomial::constant(ring, 1) - s.embed(ring) * z});
  std::vector<std::size_t> keep(I.ring()->size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  Ideal E = elimination_ideal(J, keep);
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(g.embed(I.ring()));
  return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("intersection of ideals in different rings");
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  auto ring = extend_ring(I.ring(), {"_t"});
  auto t = Polynomial::variable(ring, ring->size() - 1);
  auto one_minus_t = Polynomial::constant(ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.embed(ring));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.embed(ring));
  std::vector<std::size_t> keep(I.ring()->size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  Ideal E = elimination_ideal(Ideal(ring, std::move(gens)), keep);
  std::vector<Polynomial> out;
  for (const auto& g : E.generators()) out.push_back(g.embed(I.ring()));
  return Ideal(I.ring(), std::move(out));
}

Ideal intersect(const std::vector<Ideal>& ideals, const RingPtr& ring) {
  Ideal acc = Ideal::unit(ring);
  for (const auto& I : ideals) acc = intersect(acc, I);
  return acc;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const auto order = MonomialOrder::grevlex();
  if (a.is_zero()) return b.monic(order);
  if (b.is_zero()) return a.monic(order);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  if (b == a) return a.monic(order);
  Ideal l = intersect(Ideal(a.ring(), {a}), Ideal(b.ring(), {b}));
  const auto& basis = l.grevlex_basis();
  if (basis.size() != 1) throw std::logic_error("lcm ideal is not principal");
  return divide_exact(a * b, basis[0]).monic(order);
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_constant()) return f;
  Polynomial g = f;
  for (auto v : f.support()) {
    g = gcd(g, f.derivative(v));
    if (g.is_constant()) break;
  }
  return divide_exact(f, g).primitive(MonomialOrder::grevlex());
}

namespace {

// Product of the distinct leading coefficients (in the U variables) of a
// basis for the block order rest >> U.
Polynomial leading_coefficient_product(const std::vector<Polynomial>& basis,
                                       const std::vector<bool>& in_u, const MonomialOrder& order,
                                       const RingPtr& ring) {
  Polynomial h = Polynomial::constant(ring, 1);
  std::vector<Polynomial> seen;
  for (const auto& g : basis) {
    const auto& lm = g.leading_term(order).monomial;
    std::vector<Term> lc;
    for (const auto& t : g.terms()) {
      bool same = true;
      for (std::size_t v = 0; v < ring->size() && same; ++v)
        if (!in_u[v] && t.monomial[v] != lm[v]) same = false;
      if (!same) continue;
      auto exps = t.monomial.exponents();
      for (std::size_t v = 0; v < ring->size(); ++v)
        if (!in_u[v]) exps[v] = 0;
      lc.push_back({Monomial(std::move(exps)), t.coeff});
    }
    Polynomial c = Polynomial::from_terms(ring, std::move(lc));
    if (c.is_constant()) continue;
    c = c.primitive(MonomialOrder::grevlex());
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    h = h * c;
  }
  return h;
}

// V(I : J^inf) is the closure of V(I) minus V(J).
Ideal saturate_by_ideal(const Ideal& I, const Ideal& J) {
  std::vector<Ideal> parts;
  for (const auto& g : J.grevlex_basis()) parts.push_back(saturate(I, g));
  if (parts.empty()) return Ideal::unit(I.ring());
  return intersect(parts, I.ring());
}

struct TopPart {
  Ideal radical;
  Polynomial h;
};

TopPart top_dimensional_radical(const Ideal& I, const DimensionInfo& info) {
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  std::vector<bool> in_u(n, false);
  for (auto v : info.independent) in_u[v] = true;
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < n; ++v)
    if (!in_u[v]) rest.push_back(v);
  const auto order = MonomialOrder::elimination(rest, n);
  const Polynomial h = leading_coefficient_product(I.basis(order), in_u, order, ring);

  std::vector<Polynomial> extra;
  for (auto xj : rest) {
    std::vector<std::size_t> keep = info.independent;
    keep.push_back(xj);
    std::sort(keep.begin(), keep.end());
    Ideal E = elimination_ideal(I, keep);
    const std::size_t pos = static_cast<std::size_t>(std::find(keep.begin(), keep.end(), xj) - keep.begin());
    const auto sub_order = MonomialOrder::elimination({pos}, keep.size());
    const Polynomial* best = nullptr;
    for (const auto& g : E.basis(sub_order)) {
      const long d = g.degree_in(pos);
      if (d <= 0) continue;
      if (!best || d < best->degree_in(pos) ||
          (d == best->degree_in(pos) && g.size() < best->size()))
        best = &g;
    }
    if (!best) throw std::logic_error("no univariate element over the independent set");
    const Polynomial s = squarefree_part(*best);
    if (!(s == best->primitive(MonomialOrder::grevlex()))) extra.push_back(s.embed(ring));
  }
  Ideal J = extra.empty() ? I : I.with(extra);
  const Polynomial hj = leading_coefficient_product(J.basis(order), in_u, order, ring);
  Ideal R = saturate(J, hj);
  return {R, h};
}

std::vector<Ideal> equidimensional_impl(const Ideal& I) {
  const auto info = dimension_info(I);
  if (info.empty) return {};
  const auto& ring = I.ring();
  if (info.dimension == ring->size()) return {Ideal::zero(ring)};
  const auto& basis = I.grevlex_basis();
  if (basis.size() == 1) {
    return {Ideal(ring, {squarefree_part(basis[0])})};
  }
  TopPart top = top_dimensional_radical(I, info);
  std::vector<Ideal> out{top.radical};
  if (top.h.is_constant()) return out;
  for (auto& piece : equidimensional_impl(I.with({top.h}))) {
    const long d = dimension(piece);
    if (d == static_cast<long>(info.dimension)) {
      out[0] = intersect(out[0], piece);
      continue;
    }
    Ideal outside = saturate_by_ideal(piece, top.radical);
    if (outside.is_unit()) continue;
    bool merged = false;
    for (std::size_t k = 1; k < out.size(); ++k) {
      if (dimension(out[k]) == dimension(outside)) {
        out[k] = intersect(out[k], outside);
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(outside);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Ideal& a, const Ideal& b) { return dimension(a) > dimension(b); });
  return out;
}

}  // namespace

std::vector<Ideal> equidimensional_radicals(const Ideal& I) {
  ComputationLabel label("radical");
  return equidimensional_impl(I);
}

Ideal radical(const Ideal& I) {
  auto pieces = equidimensional_radicals(I);
  if (pieces.empty()) return Ideal::unit(I.ring());
  if (pieces.size() == 1) return pieces[0];
  return intersect(pieces, I.ring());
}

bool variety_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.generators())
    if (!radical_member(g, J)) return false;
  return true;
}

bool same_variety(const Ideal& I, const Ideal& J) {
  return variety_contains(I, J) && variety_contains(J, I);
}

bool same_ideal(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.generators())
    if (!is_member(g, J)) return false;
  for (const auto& g : J.generators())
    if (!is_member(g, I)) return false;
  return true;
}

}  // namespace affstrat
