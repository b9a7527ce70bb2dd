#include "affstrat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "affstrat/errors.hpp"
#include "affstrat/matrix.hpp"

namespace affstrat {

namespace {

void check_shape(const CMatrix& A, const CMatrix& B) {
  if (B.rows() > 0 && B.cols() != A.cols())
    throw DimensionMismatch("row blocks have " + std::to_string(A.cols()) + " and " + std::to_string(B.cols()) +
                            " columns");
  if (A.rows() + B.rows() > A.cols())
    throw DimensionMismatch("m + r = " + std::to_string(A.rows() + B.rows()) + " exceeds n = " +
                            std::to_string(A.cols()));
}

// Distance from v to the column span of M.
double distance_to_span(const CVector& v, const CMatrix& M) {
  if (M.cols() == 0) return v.norm();
  const CVector c = M.colPivHouseholderQr().solve(v);
  return (v - M * c).norm();
}

double min_row_distance(const CMatrix& A, const CMatrix& B) {
  const Eigen::Index m = A.rows();
  double best = INFINITY;
  for (Eigen::Index i = 0; i < m; ++i) {
    CMatrix others(A.cols(), m - 1 + B.rows());
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < m; ++j)
      if (j != i) others.col(c++) = A.row(j).transpose();
    for (Eigen::Index l = 0; l < B.rows(); ++l) others.col(c++) = B.row(l).transpose();
    best = std::min(best, distance_to_span(A.row(i).transpose(), others));
  }
  return best;
}

CMatrix select(const CMatrix& C, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  CMatrix S(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) S(i, j) = C(rows[i], cols[j]);
  return S;
}

std::complex<double> det(const CMatrix& S) { return S.rows() == 0 ? 1.0 : S.determinant(); }

}  // namespace

double nu(const CMatrix& A) {
  if (A.rows() > A.cols()) throw DimensionMismatch("nu needs m <= n");
  if (A.rows() == 0) return INFINITY;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(A * A.adjoint(), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues()(0)));
}

double kappa(const CMatrix& A) {
  if (A.rows() > A.cols()) throw DimensionMismatch("kappa needs m <= n");
  return min_row_distance(A, CMatrix(0, A.cols()));
}

CMatrix kernel_basis(const CMatrix& B) {
  const Eigen::Index n = B.cols();
  if (B.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(B, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 1e-12 * std::max(1.0, s(0)))
    throw DimensionMismatch("restriction rows are not independent");
  return svd.matrixV().rightCols(n - B.rows());
}

double nu_restricted(const CMatrix& A, const CMatrix& B) {
  check_shape(A, B);
  return nu(A * kernel_basis(B));
}

double kappa_restricted(const CMatrix& A, const CMatrix& B) {
  check_shape(A, B);
  return min_row_distance(A, B);
}

double g_prime(const CMatrix& A, const CMatrix& B) {
  check_shape(A, B);
  const std::size_t m = A.rows();
  const std::size_t size = m + B.rows();
  const std::size_t n = A.cols();
  CMatrix C(size, n);
  C << A, B;
  const double scale = std::max(1.0, C.cwiseAbs().maxCoeff());
  const double zero = 1e-12 * std::pow(scale, static_cast<double>(size) - 1);
  std::vector<std::size_t> all_rows(size);
  for (std::size_t i = 0; i < size; ++i) all_rows[i] = i;
  double best = 0;
  for (const auto& cols : combinations(n, size)) {
    const double full = std::abs(det(select(C, all_rows, cols)));
    double lowest = INFINITY;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < size; ++i)
        if (i != k) rows.push_back(i);
      for (std::size_t j = 0; j < size; ++j) {
        std::vector<std::size_t> sub;
        for (std::size_t c = 0; c < size; ++c)
          if (c != j) sub.push_back(cols[c]);
        const double d = std::abs(det(select(C, rows, sub)));
        if (d > zero) lowest = std::min(lowest, full / d);
      }
    }
    if (std::isfinite(lowest)) best = std::max(best, lowest);
  }
  return best;
}

double g_prime(const CMatrix& A) { return g_prime(A, CMatrix(0, A.cols())); }

}  // namespace affstrat
