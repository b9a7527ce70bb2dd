#include "affstrat/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "affstrat/errors.hpp"

namespace affstrat {

std::string to_string(const Rational& q) { return q.get_str(); }

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw RingMismatch("duplicate variable name '" + names_[i] + "'");
}

std::size_t Ring::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

// Storage order: strictly decreasing lex.
bool storage_before(const Monomial& a, const Monomial& b) { return a > b; }

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->size(), index), 1});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto i = ring->index_of(name);
  if (i == ring->size())
    throw RingMismatch("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return storage_before(a.monomial, b.monomial);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials live in different rings");
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

long Polynomial::total_degree() const noexcept {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.monomial.degree()));
  return d;
}

long Polynomial::degree_in(std::size_t var) const noexcept {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.monomial[var]);
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t v = 0; v < ring_->size(); ++v)
    for (const auto& t : terms_)
      if (t.monomial[v] != 0) {
        out.push_back(v);
        break;
      }
  return out;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && storage_before(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || storage_before(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial z(a.ring_ ? a.ring_ : b.ring_);
    if (a.ring_ && b.ring_) a.check_ring(b);
    return z;
  }
  a.check_ring(b);
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].coeff, b.terms_[0].monomial);
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].coeff, a.terms_[0].monomial);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    auto exps = t.monomial.exponents();
    exps[var] -= 1;
    r.terms_.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  r.normalize();
  return r;
}

RingPtr Polynomial::homogenizing_ring() const {
  std::string name = "x0";
  while (ring_->index_of(name) != ring_->size()) name = "_" + name;
  std::vector<std::string> names{name};
  names.insert(names.end(), ring_->names().begin(), ring_->names().end());
  return make_ring(std::move(names));
}

Polynomial Polynomial::homogenize() const {
  auto target = homogenizing_ring();
  Polynomial r(target);
  const long d = total_degree();
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> exps;
    exps.reserve(target->size());
    exps.push_back(static_cast<Monomial::Exponent>(d - static_cast<long>(t.monomial.degree())));
    exps.insert(exps.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    r.terms_.push_back({Monomial(std::move(exps)), t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::dehomogenize() const {
  std::vector<std::string> names(ring_->names().begin() + 1, ring_->names().end());
  auto target = make_ring(std::move(names));
  Polynomial r(target);
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> exps(t.monomial.exponents().begin() + 1,
                                         t.monomial.exponents().end());
    r.terms_.push_back({Monomial(std::move(exps)), t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::remap(RingPtr target, const std::vector<std::size_t>& var_map) const {
  assert(var_map.size() == ring_->size());
  Polynomial r(target);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> exps(target->size(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= target->size()) throw RingMismatch("remap target index out of range");
      exps[var_map[i]] += t.monomial[i];
    }
    r.terms_.push_back({Monomial(std::move(exps)), t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::embed(RingPtr target) const {
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    map[i] = target->index_of(ring_->name(i));
    if (map[i] == target->size() && degree_in(i) > 0)
      throw RingMismatch("variable '" + ring_->name(i) + "' missing in target ring");
  }
  return remap(std::move(target), map);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->size()) throw RingMismatch("compose: wrong number of images");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  std::vector<Term> acc;
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.monomial[v] != 0) prod = prod * power(v, t.monomial[v]);
    result += prod;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    auto exps = t.monomial.exponents();
    exps[var] = 0;
    Rational c = t.coeff;
    if (e != 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      pw.canonicalize();
      c *= pw;
    }
    r.terms_.push_back({Monomial(std::move(exps)), c});
  }
  r.normalize();
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw DimensionMismatch("evaluate: point length != ring size");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v)
      for (Monomial::Exponent e = 0; e < t.monomial[v]; ++e) prod *= point[v];
    sum += prod;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != ring_->size()) throw DimensionMismatch("evaluate: point length != ring size");
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> prod = t.coeff.get_d();
    for (std::size_t v = 0; v < point.size(); ++v) {
      const auto e = t.monomial[v];
      if (e == 1) prod *= point[v];
      else if (e > 1) prod *= std::pow(point[v], static_cast<int>(e));
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_term(order).coeff;
  return *this * inv;
}

Polynomial Polynomial::primitive(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_term(order).coeff < 0) factor = -factor;
  return *this * factor;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto sorted = sorted_terms(MonomialOrder::grlex());
  std::string out;
  bool first = true;
  for (const auto& t : sorted) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

DivisionResult divide(const Polynomial& p, const Polynomial& divisor,
                      const MonomialOrder& order) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& lead = divisor.leading_term(order);
  const Rational inv = 1 / lead.coeff;
  DivisionResult res{Polynomial(p.ring()), Polynomial(p.ring())};
  // Terms of the running dividend, decreasing under `order`.
  std::map<Monomial, Rational, std::function<bool(const Monomial&, const Monomial&)>> work(
      [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> quotient, remainder;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    if (lead.monomial.divides(m)) {
      const Monomial shift = m / lead.monomial;
      const Rational q = c * inv;
      quotient.push_back({shift, q});
      for (const auto& t : divisor.terms()) {
        if (t.monomial == lead.monomial) continue;
        Monomial mm = t.monomial * shift;
        auto [pos, inserted] = work.emplace(mm, -q * t.coeff);
        if (!inserted) {
          pos->second -= q * t.coeff;
          if (pos->second == 0) work.erase(pos);
        }
      }
    } else {
      remainder.push_back({m, c});
    }
  }
  res.quotient = Polynomial::from_terms(p.ring(), std::move(quotient));
  res.remainder = Polynomial::from_terms(p.ring(), std::move(remainder));
  return res;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor) {
  auto res = divide(p, divisor, MonomialOrder::grevlex());
  if (!res.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return res.quotient;
}

}  // namespace affstrat
