#pragma once

#include <optional>
#include <vector>

#include "affstrat/variety.hpp"

namespace affstrat {

/// A pair X > Y for the Whitney (b) test.
struct PairContext {
  /// The big variety; its ideal supplies the x-block of the incidence variety.
  VarietySpec X;
  /// Generic combinations G_1..G_r of I(X) spanning the conormal space.
  std::vector<Polynomial> G;
  /// Ideal of Y, in the ring of X.
  Ideal Y;
  /// p_{Y,empty}: Y minus V(pY) is smooth.
  Polynomial pY;
};

/// Incidence ideal in (x, y, w, v, gamma, lambda_1..lambda_r):
/// I(X)(x), I(Y)(y), w - gamma (x - y), v - sum lambda_i d_x G_i.
Ideal build_gamma1(const PairContext& ctx);

/// Closure of the projection of the incidence variety to (x, y, w, v).
Ideal conormal_secant_variety(const PairContext& ctx);

/// Closure of the points of Y minus V(pY) where condition (b) fails for
/// (X, Y). Radical, in the ring of X; the unit ideal when (b) holds
/// everywhere. Throws WhitneyDimensionViolation if not smaller than Y.
Ideal whitney_b_failure_locus(const PairContext& ctx);

/// The failure locus restricted to points where some maximal minor of
/// [d f; d G^Y] is nonzero, G^Y being generic combinations cutting Y out
/// (codim Y of them). Union over the minors that do not vanish on Y.
Ideal partial_failure_locus(const PairContext& ctx, const std::vector<Polynomial>& f,
                            const std::vector<Polynomial>& GY);

/// Largest k such that some (k + r) minor of [d f; d G] is not in
/// I(Z) : P^inf, r = |G|.
long generic_rank(const LocalizedVariety& Z, const std::vector<Polynomial>& G,
                  const std::vector<Polynomial>& f);

enum class FiltrationMode { Full, Partial };

/// One X_i of the filtration. The stratum is B_i = top minus V(P).
struct Level {
  /// I(X_i), radical.
  Ideal ideal;
  /// Top-dimensional equidimensional part of X_i.
  VarietySpec top;
  /// Lower-dimensional pieces of X_i; they are carried into X_{i+1}.
  std::vector<Ideal> lower;
  SmoothLocus smooth;
  /// Failure loci W(X_j, X_i) (or the rank-restricted variant), per j < i.
  std::vector<Ideal> failures;
  /// Union of the failures and of lower pieces meeting the top part.
  std::optional<Ideal> avoid;
  Localizer localizer;
  /// p_{X_i, avoid} = |Jac| * H.
  Polynomial P;
  long degree_bound = 0;
  /// Generic rank of f on the level (partial mode only).
  std::optional<long> rank;

  std::size_t dim() const { return top.dim(); }
  LocalizedVariety stratum() const { return {top, P}; }
};

struct Stratification {
  RingPtr ring;
  FiltrationMode mode = FiltrationMode::Full;
  std::vector<Level> levels;
  /// X_{q+1}: the unit ideal in full mode; in partial mode the first set on
  /// which f has generic rank below m.
  Ideal tail;
  /// Generic rank of f on the tail pieces (partial mode).
  std::optional<long> tail_rank;
};

/// Descending filtration X = X_0 > X_1 > ... . In partial mode `f` is the
/// map and the loop stops at the first level of rank < m.
Stratification build_filtration(const VarietySpec& X, FiltrationMode mode,
                                 const std::vector<Polynomial>& f, const GenericityConfig& cfg,
                                 Rng& rng);

}  // namespace affstrat
