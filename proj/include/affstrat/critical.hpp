#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affstrat/whitney.hpp"

namespace affstrat {

/// f restricted to one stratum B = V(I) minus V(P), embedded in C^{n+1} by
/// the extra coordinate 1/P.
struct StratumProblem {
  /// Ring of the original n variables.
  RingPtr ring;
  /// I(B) + <P x_{n+1} - 1>, in n+1 variables (x_{n+1} last).
  Ideal embedded;
  /// b_1..b_r: rows of full rank r on the stratum.
  std::vector<Polynomial> b_rows;
  std::vector<Polynomial> f;
  /// Stratum localizer, used to decide which minors vanish identically.
  Ideal base;
  Polynomial localizer;

  static StratumProblem from_level(const Level& level, const std::vector<Polynomial>& f);
  static StratumProblem from_parts(const LocalizedVariety& Z, std::vector<Polynomial> b_rows,
                                   std::vector<Polynomial> f);
};

/// One K-infinity branch. `pairs[l]` is the (k, j) chosen for the l-th
/// main minor that does not vanish on the stratum; k indexes f-rows and j
/// a column of that minor (0-based). q is a coordinate index in [0, n).
struct MinorSelector {
  std::vector<std::vector<std::size_t>> minors;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t q = 0;

  std::string to_string() const;
};

struct CriticalOptions {
  std::size_t branch_cap = 4096;
};
CriticalOptions& default_critical_options();

/// Closure of f over the critical points of the stratum, in y_1..y_m.
Ideal k0_of_stratum(const StratumProblem& sp);

/// All selectors, in lexicographic order of (pairs, q). Throws
/// SelectorExplosion above `opts.branch_cap`.
std::vector<MinorSelector> enumerate_selectors(const StratumProblem& sp, const CriticalOptions& opts);

/// Ideal of the graph of Psi for one selector, in
/// (x_1..x_{n+1}, t, z_1..z_s, Y_1..Y_{m+N}) with N = s (n+1) + 1.
Ideal build_minor_ratio_graph(const StratumProblem& sp, const MinorSelector& sel);

/// Closure of the image of the graph intersected with C^m x 0, in y.
Ideal kinf_branch(const StratumProblem& sp, const MinorSelector& sel);

struct KinfComponent {
  MinorSelector selector;
  Ideal ideal;
};

/// Nonempty branch ideals; their union is K-infinity of the stratum.
std::vector<KinfComponent> kinf_of_stratum(const StratumProblem& sp, const CriticalOptions& opts);

/// Closure of f(V(I)), in y.
Ideal image_closure(const Ideal& I, const std::vector<Polynomial>& f);

/// Ring y_1..y_m of the target (names avoid the source ring's names).
RingPtr target_ring(const RingPtr& source, std::size_t m);

struct Provenance {
  enum class Kind { K0, Kinf, Tail };
  Kind kind = Kind::K0;
  std::size_t stratum = 0;
  std::optional<MinorSelector> selector;

  std::string to_string() const;
};

struct CriticalComponent {
  Ideal ideal;
  std::vector<Provenance> sources;
};

/// K(f) as a union of closed sets in C^m.
struct CriticalValueSet {
  RingPtr ring;
  std::vector<Ideal> k0;
  std::vector<std::vector<KinfComponent>> kinf;
  Ideal tail_image;
  /// Radical, pairwise non-nested components of K.
  std::vector<CriticalComponent> components;

  /// Ideal of the union (unit ideal when K is empty).
  Ideal combined() const;
  bool empty() const { return components.empty(); }
};

struct KfResult {
  Stratification strata;
  CriticalValueSet values;
};

/// Rank-filtered stratification, per-stratum K0 and K-infinity, and the
/// tail image. Throws NonProperOutput when a component is all of C^m.
KfResult stratified_K(const VarietySpec& X, const std::vector<Polynomial>& f, const GenericityConfig& cfg,
                      Rng& rng, const CriticalOptions& opts);

}  // namespace affstrat
