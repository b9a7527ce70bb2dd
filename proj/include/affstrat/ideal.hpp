#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "affstrat/groebner.hpp"
#include "affstrat/polynomial.hpp"

namespace affstrat {

/// Ideal given by generators, with a per-order cache of reduced bases.
///
/// Copies share the cache; the cache is filled under a mutex so concurrent
/// readers see either nothing or a complete basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis for `order` (computed once, then cached).
  const std::vector<Polynomial>& basis(const MonomialOrder& order) const;
  const std::vector<Polynomial>& grevlex_basis() const { return basis(MonomialOrder::grevlex()); }

  /// True when the generators are all zero.
  bool is_zero() const;
  /// True when 1 lies in the ideal.
  bool is_unit() const;

  /// Ideal with additional generators.
  Ideal with(const std::vector<Polynomial>& extra) const;
  Ideal operator+(const Ideal& other) const;
  /// Same ideal in a larger ring containing all of this ring's names.
  Ideal embed(const RingPtr& target) const;

  /// Generators of the reduced grevlex basis, printed.
  std::vector<std::string> to_strings() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Ring `base` followed by `extra` names; clashing extras get a '_' prefix
/// until unique.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);
/// Sub-ring on the given variable indices (kept in the given order).
RingPtr sub_ring(const RingPtr& base, const std::vector<std::size_t>& keep);

bool is_member(const Polynomial& p, const Ideal& I);
/// p in I : s^inf, tested as p in I + <1 - s z> with a fresh z.
bool saturated_member(const Polynomial& p, const Ideal& I, const Polynomial& s);
/// p in sqrt(I), tested as 1 in I + <1 - p z>.
bool radical_member(const Polynomial& p, const Ideal& I);

/// I intersected with the subring in `keep`, expressed in the sub-ring
/// (variables in increasing index order).
Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep);
/// Same intersection, generators left in the ring of I.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& eliminate_vars);

struct DimensionInfo {
  bool empty = false;
  std::size_t dimension = 0;
  /// A maximal independent set of variables modulo the leading-term ideal.
  std::vector<std::size_t> independent;
};
DimensionInfo dimension_info(const Ideal& I);
/// Krull dimension of V(I); -1 when V(I) is empty.
long dimension(const Ideal& I);

/// I : s^inf.
Ideal saturate(const Ideal& I, const Polynomial& s);
/// I intersected with J.
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(const std::vector<Ideal>& ideals, const RingPtr& ring);

/// Greatest common divisor, normalized monic for grevlex.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Square-free part f / gcd(f, df/dx_1, ..., df/dx_n).
Polynomial squarefree_part(const Polynomial& f);

/// Radical ideals whose varieties are equidimensional and cover V(I);
/// decreasing dimension, at most one per dimension.
std::vector<Ideal> equidimensional_radicals(const Ideal& I);
/// Radical of I.
Ideal radical(const Ideal& I);

/// V(J) contained in V(I).
bool variety_contains(const Ideal& I, const Ideal& J);
bool same_variety(const Ideal& I, const Ideal& J);
/// Equality of ideals (mutual membership of generators).
bool same_ideal(const Ideal& I, const Ideal& J);

}  // namespace affstrat
