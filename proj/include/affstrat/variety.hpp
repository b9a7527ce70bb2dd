#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "affstrat/ideal.hpp"

namespace affstrat {

enum class SliceStrategy {
  /// Coordinate slices x_s + c (subsets in lexicographic order) before
  /// dense random forms.
  CoordinateFirst,
  /// Dense random affine forms only.
  Random,
};

struct GenericityConfig {
  std::uint64_t seed = 0;
  long coeff_bound = 997;
  int max_attempts = 64;
  SliceStrategy slices = SliceStrategy::CoordinateFirst;
};

/// Deterministic stream of integer draws in [-B, B].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long draw(long bound);
  long draw_nonzero(long bound);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// An affine variety X given by its ideal, of declared codimension r.
struct VarietySpec {
  RingPtr ring;
  Ideal ideal;
  std::size_t codim = 0;
  /// Maximum total degree of the generators in use.
  long degree_bound = 0;

  /// Checks dim V(I) = n - codim (throws DimensionMismatch otherwise). When
  /// `take_radical` is set the stored ideal is the radical of `ideal`.
  static VarietySpec validated(const Ideal& ideal, std::size_t codim, bool take_radical = true);
  std::size_t ambient() const { return ring->size(); }
  std::size_t dim() const { return ring->size() - codim; }
  /// Reduced grevlex generators g_1..g_w.
  const std::vector<Polynomial>& generators() const { return ideal.grevlex_basis(); }
};

/// x0 together with the homogenized grevlex basis of I, in the ring with x0
/// prepended (the cone over the points at infinity).
Ideal points_at_infinity(const Ideal& I);

struct Combinations {
  std::vector<Polynomial> G;
  /// alphas[i][j] is the coefficient of g_j in G_i.
  std::vector<std::vector<long>> alphas;
  int attempts = 0;
};

/// r random integer combinations G_i of the generators of I with
/// dim V(<G>_inf) = n - r. Throws GenericityFailure after max_attempts.
Combinations generic_combinations(const Ideal& I, std::size_t r, const GenericityConfig& cfg, Rng& rng);

struct Slice {
  std::vector<Polynomial> forms;
  /// det Jac(G_1..G_r, l_1..l_{n-r}).
  Polynomial jacobian;
  int attempts = 0;
};

struct SliceCheck {
  bool finite_at_infinity = false;
  bool jacobian_nonvanishing = false;
  bool dense_on_variety = true;
  bool ok() const { return finite_at_infinity && jacobian_nonvanishing && dense_on_variety; }
};

/// Verifies the slice conditions for given forms: V(G, l) has no points at
/// infinity, |Jac| has no zero on V(G, l), and (when `X` is given) V(|Jac|)
/// contains no component of X (dim X cap V(Jac) < dim X).
SliceCheck check_slice(const std::vector<Polynomial>& G, const std::vector<Polynomial>& forms,
                       const Ideal* X);

/// n - r affine forms passing check_slice; candidates follow cfg.slices.
Slice generic_linear_slice(const std::vector<Polynomial>& G, std::size_t count,
                           const GenericityConfig& cfg, Rng& rng, const Ideal* X = nullptr);

/// Generic data attached to one variety: combinations, slice, Jacobian.
struct SmoothLocus {
  Combinations comb;
  Slice slice;
  /// The Jacobian determinant; X minus V(jacobian) is smooth and dense.
  const Polynomial& jacobian() const { return slice.jacobian; }
};

SmoothLocus smooth_locus(const VarietySpec& X, const GenericityConfig& cfg, Rng& rng);

struct Localizer {
  /// Combination of the generators of I(W) not in I(X); 1 when W is empty.
  Polynomial H;
  std::vector<long> gammas;
  /// Maximum degree of the u_i used.
  long degree_bound = 0;
  int attempts = 0;
};

/// Step-3 polynomial H vanishing on W with dim V(<G, H>_inf) < n - r.
/// Throws DegenerateInput when V(W) contains X.
Localizer localizer_for(const VarietySpec& X, const SmoothLocus& smooth, const std::optional<Ideal>& W,
                        const GenericityConfig& cfg, Rng& rng);

struct PXW {
  SmoothLocus smooth;
  Localizer localizer;
  Polynomial p;
  /// r(D - 1) + D'.
  long degree_bound = 0;
};

/// p_{X,W} = |Jac(G, l)| * H.
PXW compute_p_XW(const VarietySpec& X, const std::optional<Ideal>& W, const GenericityConfig& cfg,
                 Rng& rng);

/// A variety with the hypersurface V(localizer) removed.
struct LocalizedVariety {
  VarietySpec base;
  Polynomial localizer;

  /// Ideal in n+1 variables (extra variable last) with localizer * x_{n+1} = 1.
  Ideal embedded() const;
};

}  // namespace affstrat
