#include "affstrat/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace affstrat {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.refresh();
  return m;
}

void Monomial::refresh() noexcept {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  if ((mask_ & ~other.mask_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(size() == other.size());
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = exps_[i] + other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] * k;
  r.refresh();
  return r;
}

std::uint64_t Monomial::degree_in(
    const std::vector<std::size_t>& vars) const noexcept {
  std::uint64_t d = 0;
  for (auto v : vars) d += exps_[v];
  return d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

int cmp(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : (a > b); }

int compare_full(MonomialOrder::Kind kind, const Monomial& a,
                 const Monomial& b) {
  const std::size_t n = a.size();
  switch (kind) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::GrLex:
      if (a.degree() != b.degree()) return cmp(a.degree(), b.degree());
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::GrevLex:
      if (a.degree() != b.degree()) return cmp(a.degree(), b.degree());
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::Block:
      break;
  }
  return 0;
}

int compare_block(MonomialOrder::Kind kind, const std::vector<std::size_t>& vars,
                  const Monomial& a, const Monomial& b) {
  switch (kind) {
    case MonomialOrder::Kind::Lex:
      for (auto v : vars)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::GrLex: {
      const auto da = a.degree_in(vars), db = b.degree_in(vars);
      if (da != db) return cmp(da, db);
      for (auto v : vars)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::Kind::GrevLex: {
      const auto da = a.degree_in(vars), db = b.degree_in(vars);
      if (da != db) return cmp(da, db);
      for (std::size_t k = vars.size(); k-- > 0;) {
        const auto v = vars[k];
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::Kind::Block:
      break;
  }
  return 0;
}

const char* kind_name(MonomialOrder::Kind k) {
  switch (k) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::GrLex: return "grlex";
    case MonomialOrder::Kind::Block: return "block";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::block(std::size_t split, std::size_t nvars,
                                   Kind first, Kind second) {
  MonomialOrder o(Kind::Block);
  Block a{{}, first}, b{{}, second};
  for (std::size_t i = 0; i < nvars; ++i)
    (i < split ? a.vars : b.vars).push_back(i);
  o.blocks_ = {std::move(a), std::move(b)};
  return o;
}

MonomialOrder MonomialOrder::elimination(
    const std::vector<std::size_t>& eliminate, std::size_t nvars) {
  MonomialOrder o(Kind::Block);
  std::vector<bool> elim(nvars, false);
  for (auto v : eliminate) elim[v] = true;
  Block a{{}, Kind::GrevLex}, b{{}, Kind::GrevLex};
  for (std::size_t i = 0; i < nvars; ++i)
    (elim[i] ? a.vars : b.vars).push_back(i);
  o.blocks_ = {std::move(a), std::move(b)};
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ != Kind::Block) return compare_full(kind_, a, b);
  for (const auto& blk : blocks_) {
    const int c = compare_block(blk.inner, blk.vars, a, b);
    if (c != 0) return c;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  if (kind_ != Kind::Block) return kind_name(kind_);
  std::string s = "block(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += " > ";
    s += kind_name(blocks_[i].inner);
    s += "{";
    for (std::size_t k = 0; k < blocks_[i].vars.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(blocks_[i].vars[k]);
    }
    s += "}";
  }
  return s + ")";
}

}  // namespace affstrat
