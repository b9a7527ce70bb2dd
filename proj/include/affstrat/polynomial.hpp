#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "affstrat/monomial.hpp"

namespace affstrat {

/// Exact rational coefficient; GMP keeps it canonical (reduced, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Ordered list of variable names. Rings compare by their names.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const noexcept;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept in strictly decreasing lexicographic order of exponent
/// vectors with no zero coefficients, so equal polynomials have identical
/// storage. Order-specific views (leading term, printing) sort on demand.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  /// Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (0 if absent).
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const noexcept;
  long degree_in(std::size_t var) const noexcept;
  /// Indices of variables that occur.
  std::vector<std::size_t> support() const;
  bool is_homogeneous() const noexcept;

  const Term& leading_term(const MonomialOrder& order) const;
  /// Terms sorted decreasingly by `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial scaled(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  Polynomial derivative(std::size_t var) const;

  /// Homogenizes with a new variable prepended at index 0.
  ///
  /// The result lives in `homogenizing_ring()` and has degree total_degree().
  Polynomial homogenize() const;
  /// Sets variable 0 to 1 and drops it; inverse of homogenize().
  Polynomial dehomogenize() const;
  RingPtr homogenizing_ring() const;

  /// Re-expresses the polynomial in `target`, variable i going to
  /// `var_map[i]` (the variables must be distinct).
  Polynomial remap(RingPtr target, const std::vector<std::size_t>& var_map) const;
  /// Embeds into a ring containing all of this ring's names.
  Polynomial embed(RingPtr target) const;
  /// Substitutes variable i by `images[i]`; all images share one ring.
  Polynomial compose(const std::vector<Polynomial>& images) const;
  /// Substitutes a single variable by a rational value (stays in the ring).
  Polynomial substitute(std::size_t var, const Rational& value) const;

  Rational evaluate(std::span<const Rational> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  /// Divides by the leading coefficient under `order` (zero stays zero).
  Polynomial monic(const MonomialOrder& order) const;
  /// Integer-coefficient primitive associate with positive leading
  /// coefficient under `order`.
  Polynomial primitive(const MonomialOrder& order) const;

  /// Human-readable form, terms in decreasing grlex order.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Result of multivariate division by a single polynomial.
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& p, const Polynomial& divisor,
                      const MonomialOrder& order);
/// Exact quotient; throws std::domain_error when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor);

/// Parses `text` in the given ring. Grammar: variables [A-Za-z][A-Za-z0-9_]*,
/// integer or rational literals (3, 3/4), + - * ^ and parentheses; `^` binds
/// tightest and takes a non-negative integer literal. No implicit products.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace affstrat
