#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace affstrat {

/// Exponent vector of fixed length (the ring size).
///
/// Carries its total degree and a 64-bit support mask (bit i%64 set when
/// variable i occurs) so divisibility tests can reject early.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps)
      : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial pow(Exponent k) const;

  /// Degree restricted to a subset of variables.
  std::uint64_t degree_in(const std::vector<std::size_t>& vars) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  /// Pure lexicographic comparison on exponent vectors (storage order).
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  void refresh() noexcept;

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Total order on monomials of a fixed ring size.
///
/// Simple orders (lex, grevlex, grlex) compare all variables. Block orders
/// compare a sequence of variable blocks, each with its own inner order; the
/// first differing block decides. `block(k, a, b)` puts variables [0,k) in the
/// first block, so it eliminates them.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, GrLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::GrLex); }
  /// Variables [0, split) form the first block, [split, nvars) the second.
  static MonomialOrder block(std::size_t split, std::size_t nvars,
                             Kind first = Kind::GrevLex,
                             Kind second = Kind::GrevLex);
  /// Elimination order: `eliminate` variables (grevlex) above the rest
  /// (grevlex). Variables are given by index in any order.
  static MonomialOrder elimination(const std::vector<std::size_t>& eliminate,
                                   std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  /// Degree-compatible orders (grevlex, grlex); required for homogenization.
  bool is_graded() const noexcept {
    return kind_ == Kind::GrevLex || kind_ == Kind::GrLex;
  }

  /// Negative, zero or positive as `a` is smaller, equal or larger.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) > 0;
  }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

 private:
  struct Block {
    std::vector<std::size_t> vars;
    Kind inner;
    friend bool operator==(const Block&, const Block&) = default;
  };

  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<Block> blocks_;
};

}  // namespace affstrat
