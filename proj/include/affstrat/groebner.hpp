#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "affstrat/polynomial.hpp"

namespace affstrat {

struct GroebnerOptions {
  /// Maximum number of S-pairs reduced per basis computation.
  std::size_t spair_budget = 200000;
};

/// Process-wide defaults used when no options are passed explicitly.
GroebnerOptions& default_groebner_options();

/// Names the enclosing computation for budget error messages. Labels nest
/// per thread; the error reports the whole stack.
class ComputationLabel {
 public:
  explicit ComputationLabel(std::string label);
  ~ComputationLabel();
  ComputationLabel(const ComputationLabel&) = delete;
  ComputationLabel& operator=(const ComputationLabel&) = delete;
};

/// Current label stack joined with " / " (empty when none is active).
std::string current_computation();

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis (monic, sorted by decreasing leading monomial).
///
/// Buchberger's algorithm over integer-coefficient primitive polynomials with
/// the Gebauer-Moeller pair update; pairs are selected by sugar degree, ties
/// broken by the smallest lcm. Throws BudgetExceeded when more than
/// `opts.spair_budget` pairs would be reduced.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order,
                                       const GroebnerOptions& opts,
                                       GroebnerStats* stats = nullptr);
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order);

/// Fully reduced remainder of `p` modulo `basis`. Zero iff p lies in the
/// ideal when `basis` is a Groebner basis for `order`.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order);

}  // namespace affstrat
