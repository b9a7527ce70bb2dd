#include "affstrat/groebner.hpp"

#include <algorithm>
#include <set>

#include "affstrat/errors.hpp"

namespace affstrat {

GroebnerOptions& default_groebner_options() {
  static GroebnerOptions opts;
  return opts;
}

namespace {

thread_local std::vector<std::string> label_stack;

}  // namespace

ComputationLabel::ComputationLabel(std::string label) { label_stack.push_back(std::move(label)); }
ComputationLabel::~ComputationLabel() { label_stack.pop_back(); }

std::string current_computation() {
  std::string s;
  for (const auto& l : label_stack) {
    if (!s.empty()) s += " / ";
    s += l;
  }
  return s;
}

namespace {

// Integer-coefficient polynomial with terms in increasing order; the
// leading term is at the back.
struct IPoly {
  std::vector<Monomial> mons;
  std::vector<Integer> coeffs;
  std::uint64_t sugar = 0;

  bool empty() const { return mons.empty(); }
  const Monomial& lm() const { return mons.back(); }
  const Integer& lc() const { return coeffs.back(); }
};

IPoly to_ipoly(const Polynomial& p, const MonomialOrder& order, Rational* multiplier = nullptr) {
  auto sorted = p.sorted_terms(order);
  Integer den = 1;
  for (const auto& t : sorted) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  IPoly out;
  out.mons.reserve(sorted.size());
  out.coeffs.reserve(sorted.size());
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    out.mons.push_back(it->monomial);
    out.coeffs.push_back(Integer(it->coeff.get_num() * (den / it->coeff.get_den())));
    out.sugar = std::max(out.sugar, it->monomial.degree());
  }
  if (multiplier) *multiplier = Rational(den);
  return out;
}

Integer content(const IPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(IPoly& p, const Integer& g) {
  if (g == 1 || g == 0) return;
  for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.lc() < 0) g = -g;
  divide_content(p, g);
}

// a*P - b*shift(Q, m), increasing order; zero coefficients dropped.
IPoly combine(const Integer& a, const IPoly& P, const Integer& b, const IPoly& Q,
              const Monomial* m, const MonomialOrder& order) {
  IPoly out;
  out.mons.reserve(P.mons.size() + Q.mons.size());
  out.coeffs.reserve(P.mons.size() + Q.mons.size());
  std::size_t i = 0, j = 0;
  Monomial qm;
  bool have_q = false;
  while (i < P.mons.size() || j < Q.mons.size()) {
    if (j < Q.mons.size() && !have_q) {
      qm = m ? Q.mons[j] * *m : Q.mons[j];
      have_q = true;
    }
    int c;
    if (i == P.mons.size()) c = 1;
    else if (j == Q.mons.size()) c = -1;
    else c = order.compare(P.mons[i], qm);
    if (c < 0) {
      out.mons.push_back(P.mons[i]);
      out.coeffs.push_back(a * P.coeffs[i]);
      ++i;
    } else if (c > 0) {
      out.mons.push_back(qm);
      out.coeffs.push_back(-b * Q.coeffs[j]);
      ++j;
      have_q = false;
    } else {
      Integer v = a * P.coeffs[i] - b * Q.coeffs[j];
      if (v != 0) {
        out.mons.push_back(P.mons[i]);
        out.coeffs.push_back(std::move(v));
      }
      ++i;
      ++j;
      have_q = false;
    }
  }
  return out;
}

const IPoly* find_divisor(const Monomial& m, const std::vector<const IPoly*>& reducers) {
  for (const IPoly* g : reducers)
    if (g->lm().divides(m)) return g;
  return nullptr;
}

// Full reduction. `scale` accumulates the factor s with result = s * NF(p).
IPoly reduce(IPoly p, const std::vector<const IPoly*>& reducers, const MonomialOrder& order,
             Rational* scale = nullptr) {
  std::vector<Monomial> rem_mons;
  std::vector<Integer> rem_coeffs;
  std::size_t steps = 0;
  while (!p.empty()) {
    const IPoly* g = find_divisor(p.lm(), reducers);
    if (!g) {
      rem_mons.push_back(std::move(p.mons.back()));
      rem_coeffs.push_back(std::move(p.coeffs.back()));
      p.mons.pop_back();
      p.coeffs.pop_back();
      continue;
    }
    const Monomial shift = p.lm() / g->lm();
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), p.lc().get_mpz_t(), g->lc().get_mpz_t());
    Integer fa = g->lc() / gg;
    Integer fb = p.lc() / gg;
    if (fa < 0) {
      fa = -fa;
      fb = -fb;
    }
    const std::uint64_t sugar = std::max(p.sugar, g->sugar + shift.degree());
    p = combine(fa, p, fb, *g, &shift, order);
    p.sugar = sugar;
    if (fa != 1) {
      for (auto& c : rem_coeffs) c *= fa;
      if (scale) *scale *= Rational(fa);
    }
    if (++steps % 16 == 0) {
      Integer cg = content(p);
      for (const auto& c : rem_coeffs) {
        if (cg == 1) break;
        mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), c.get_mpz_t());
      }
      if (cg > 1) {
        divide_content(p, cg);
        for (auto& c : rem_coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cg.get_mpz_t());
        if (scale) *scale /= Rational(cg);
      }
    }
  }
  IPoly out;
  out.sugar = p.sugar;
  out.mons.assign(std::make_move_iterator(rem_mons.rbegin()), std::make_move_iterator(rem_mons.rend()));
  out.coeffs.assign(std::make_move_iterator(rem_coeffs.rbegin()),
                    std::make_move_iterator(rem_coeffs.rend()));
  return out;
}

Polynomial to_polynomial(const IPoly& p, const RingPtr& ring, bool monic) {
  std::vector<Term> terms;
  terms.reserve(p.mons.size());
  for (std::size_t i = 0; i < p.mons.size(); ++i) {
    Rational c(p.coeffs[i]);
    if (monic) {
      c /= Rational(p.lc());
    }
    terms.push_back({p.mons[i], c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

IPoly s_poly(const IPoly& f, const IPoly& g, const MonomialOrder& order) {
  const Monomial l = f.lm().lcm(g.lm());
  const Monomial mf = l / f.lm();
  const Monomial mg = l / g.lm();
  Integer gg;
  mpz_gcd(gg.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
  IPoly sf;
  sf.mons.reserve(f.mons.size());
  for (const auto& m : f.mons) sf.mons.push_back(m * mf);
  sf.coeffs = f.coeffs;
  IPoly s = combine(Integer(g.lc() / gg), sf, Integer(f.lc() / gg), g, &mg, order);
  s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
  return s;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const GroebnerOptions& opts, GroebnerStats* stats)
      : order_(order),
        opts_(opts),
        stats_(stats),
        pairs_(PairLess{&order_}) {}

  // Returns false when the ideal is the unit ideal.
  bool run(std::vector<IPoly> input) {
    std::sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) {
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& p : input) {
      if (p.lm().is_one()) return false;
      insert(std::move(p));
    }
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++reduced_ > opts_.spair_budget) {
        std::string where = current_computation();
        throw BudgetExceeded("S-pair budget of " + std::to_string(opts_.spair_budget) +
                             " exceeded" + (where.empty() ? "" : " in " + where));
      }
      IPoly s = s_poly(polys_[pr.i], polys_[pr.j], order_);
      IPoly h = reduce(std::move(s), active_list(), order_);
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      make_primitive(h);
      if (h.lm().is_one()) return false;
      insert(std::move(h));
    }
    return true;
  }

  std::size_t pairs_reduced() const { return reduced_; }

  std::vector<IPoly> reduced_basis() const {
    std::vector<const IPoly*> min;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t o = 0; o < polys_.size() && !redundant; ++o) {
        if (o == k || !active_[o]) continue;
        if (polys_[o].lm().divides(polys_[k].lm()) &&
            (!(polys_[o].lm() == polys_[k].lm()) || o < k))
          redundant = true;
      }
      if (!redundant) min.push_back(&polys_[k]);
    }
    std::vector<IPoly> out;
    for (std::size_t k = 0; k < min.size(); ++k) {
      std::vector<const IPoly*> others;
      for (std::size_t o = 0; o < min.size(); ++o)
        if (o != k) others.push_back(min[o]);
      IPoly r = reduce(*min[k], others, order_);
      make_primitive(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) {
      return order_.compare(a.lm(), b.lm()) > 0;
    });
    return out;
  }

 private:
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  std::vector<const IPoly*> active_list() const {
    std::vector<const IPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(IPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const IPoly& hp = polys_[hi];
    const Monomial& lh = hp.lm();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial l = lh.lcm(polys_[g].lm());
      const std::uint64_t sugar = std::max(hp.sugar + (l.degree() - lh.degree()),
                                           polys_[g].sugar + (l.degree() - polys_[g].lm().degree()));
      candidates.push_back({g, hi, l, sugar});
    }
    std::vector<bool> keep(candidates.size(), false);
    std::vector<bool> removed(candidates.size(), false);
    // Chain criterion among new pairs: drop (h,g1) if some other (h,g2)
    // has lcm properly dividing, or an equal lcm appearing later.
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const bool coprime = lh.coprime(polys_[candidates[a].i].lm());
      if (coprime) {
        keep[a] = true;
        continue;
      }
      bool drop = false;
      for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
        if (b == a || removed[b]) continue;
        if (candidates[b].lcm.divides(candidates[a].lcm)) {
          if (!(candidates[b].lcm == candidates[a].lcm)) drop = true;
          else if (b > a || keep[b]) drop = true;
        }
      }
      if (drop) removed[a] = true;
      else keep[a] = true;
    }
    // Product criterion: among kept pairs with equal lcm, if any is coprime
    // drop them all; coprime pairs are themselves never reduced.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      const bool coprime = lh.coprime(polys_[candidates[a].i].lm());
      if (coprime) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      bool shadowed = false;
      for (std::size_t b = 0; b < candidates.size() && !shadowed; ++b)
        if (b != a && keep[b] && candidates[b].lcm == candidates[a].lcm &&
            lh.coprime(polys_[candidates[b].i].lm()))
          shadowed = true;
      if (shadowed) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      fresh.push_back(candidates[a]);
    }
    // Old pairs (g1,g2) whose lcm is divisible by lm(h) with distinct lcms.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (lh.divides(it->lcm)) {
        const Monomial l1 = polys_[it->i].lm().lcm(lh);
        const Monomial l2 = polys_[it->j].lm().lcm(lh);
        if (!(l1 == it->lcm) && !(l2 == it->lcm)) {
          it = pairs_.erase(it);
          if (stats_) ++stats_->pairs_skipped;
          continue;
        }
      }
      ++it;
    }
    for (auto& p : fresh) pairs_.insert(std::move(p));
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
  }

  const MonomialOrder& order_;
  const GroebnerOptions& opts_;
  GroebnerStats* stats_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
  std::size_t reduced_ = 0;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order,
                                       const GroebnerOptions& opts, GroebnerStats* stats) {
  RingPtr ring;
  std::vector<IPoly> input;
  for (const auto& g : generators) {
    if (!ring) ring = g.ring();
    else if (g.ring() && !same_ring(ring, g.ring())) throw RingMismatch("generators in different rings");
    if (g.is_zero()) continue;
    IPoly p = to_ipoly(g, order);
    make_primitive(p);
    input.push_back(std::move(p));
  }
  if (input.empty()) return {};
  Engine engine(order, opts, stats);
  const bool proper = engine.run(std::move(input));
  if (stats) stats->pairs_reduced += engine.pairs_reduced();
  if (!proper) return {Polynomial::constant(ring, 1)};
  std::vector<Polynomial> out;
  for (const auto& p : engine.reduced_basis()) out.push_back(to_polynomial(p, ring, true));
  return out;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order) {
  return groebner_basis(generators, order, default_groebner_options());
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (p.is_zero()) return p;
  std::vector<IPoly> store;
  store.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    if (!same_ring(b.ring(), p.ring())) throw RingMismatch("normal form across rings");
    store.push_back(to_ipoly(b, order));
  }
  std::vector<const IPoly*> reducers;
  for (const auto& s : store) reducers.push_back(&s);
  Rational denom;
  IPoly ip = to_ipoly(p, order, &denom);
  Rational scale = 1;
  IPoly r = reduce(std::move(ip), reducers, order, &scale);
  Polynomial out = to_polynomial(r, p.ring(), false);
  return out * Rational(1 / (scale * denom));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto& tf = f.leading_term(order);
  const auto& tg = g.leading_term(order);
  const Monomial l = tf.monomial.lcm(tg.monomial);
  return f.scaled(1 / tf.coeff, l / tf.monomial) - g.scaled(1 / tg.coeff, l / tg.monomial);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero())
        return false;
  return true;
}

}  // namespace affstrat
