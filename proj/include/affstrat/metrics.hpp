#pragma once

#include <Eigen/Dense>

namespace affstrat {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// inf over unit phi of |A^* phi|: the smallest singular value of the m x n
/// matrix A (m <= n), from the eigenvalues of A A^*.
double nu(const CMatrix& A);

/// Kuo number: min over i of the distance from row A_i to the span of the
/// other rows.
double kappa(const CMatrix& A);

/// nu of A restricted to H = ker B. B has r independent rows, m + r <= n.
double nu_restricted(const CMatrix& A, const CMatrix& B);

/// min over i of the distance from A_i to the span of the other rows of A
/// and all rows of B.
double kappa_restricted(const CMatrix& A, const CMatrix& B);

/// g'(A, ker B): max over column sets I of size m + r of
/// min |M_I| / |M_I(k, j)| over nonzero sub-minors (k an A-row, j in I).
/// Zero when every sub-minor vanishes. B may have no rows.
double g_prime(const CMatrix& A, const CMatrix& B);
double g_prime(const CMatrix& A);

/// Orthonormal basis (columns) of ker B.
CMatrix kernel_basis(const CMatrix& B);

}  // namespace affstrat
