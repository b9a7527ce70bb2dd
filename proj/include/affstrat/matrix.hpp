#pragma once

#include <cstddef>
#include <vector>

#include "affstrat/polynomial.hpp"

namespace affstrat {

/// Row-major matrix of polynomials sharing one ring.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square matrix. `ring` is used for the empty (0x0) case,
/// whose determinant is 1.
///
/// Up to size 8 this is a Laplace expansion along rows with the minors of
/// the leading rows memoized by column subset; larger matrices use Bareiss
/// fraction-free elimination.
Polynomial determinant(const PolyMatrix& m, const RingPtr& ring);

/// Minor on the given rows and columns (sizes must agree).
Polynomial minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, const RingPtr& ring);

/// Rows are the gradients of `polys` with respect to `vars`.
PolyMatrix jacobian(const std::vector<Polynomial>& polys,
                    const std::vector<std::size_t>& vars);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace affstrat
