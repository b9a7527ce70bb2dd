#include "affstrat/matrix.hpp"

#include <unordered_map>

#include "affstrat/errors.hpp"

namespace affstrat {

namespace {

Polynomial laplace(const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  // level[S] = det of rows [0, |S|) on the column set S.
  std::unordered_map<unsigned, Polynomial> prev, next;
  prev.emplace(0u, Polynomial::constant(ring, 1));
  for (std::size_t k = 0; k < n; ++k) {
    next.clear();
    for (const auto& [set, det] : prev) {
      if (det.is_zero()) continue;
      // Expand row k into column c not in S; the sign counts columns of S above c.
      for (std::size_t c = 0; c < n; ++c) {
        if (set & (1u << c)) continue;
        if (m[k][c].is_zero()) continue;
        unsigned above = 0;
        for (std::size_t d = c + 1; d < n; ++d)
          if (set & (1u << d)) ++above;
        Polynomial term = det * m[k][c];
        if (above % 2) term = -term;
        auto it = next.find(set | (1u << c));
        if (it == next.end()) next.emplace(set | (1u << c), std::move(term));
        else it->second += term;
      }
    }
    prev.swap(next);
  }
  auto it = prev.find((n == 0) ? 0u : ((1u << n) - 1));
  return it == prev.end() ? Polynomial(ring) : it->second;
}

Polynomial bareiss(PolyMatrix a, const RingPtr& ring) {
  const std::size_t n = a.size();
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(ring);
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Polynomial(ring);
    }
    prev = a[k][k];
  }
  Polynomial d = a[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, const RingPtr& ring) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.size() <= 8) return laplace(m, ring);
  return bareiss(m, ring);
}

Polynomial minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, const RingPtr& ring) {
  if (rows.size() != cols.size()) throw DimensionMismatch("minor needs equal row and column counts");
  PolyMatrix sub(rows.size(), std::vector<Polynomial>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m.at(rows[i]).at(cols[j]);
  return determinant(sub, ring);
}

PolyMatrix jacobian(const std::vector<Polynomial>& polys,
                    const std::vector<std::size_t>& vars) {
  PolyMatrix out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    std::vector<Polynomial> row;
    row.reserve(vars.size());
    for (auto v : vars) row.push_back(p.derivative(v));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace affstrat
