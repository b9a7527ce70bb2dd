#include <cmath>
#include <random>

#include "affstrat/oracle.hpp"
#include "doctest.h"

using namespace affstrat;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g, r));
  return Ideal(r, ps);
}

const std::vector<double> kScales{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};

}  // namespace

TEST_CASE("sampling") {
  auto r2 = make_ring({"x", "y"});
  auto circle = I(r2, {"x^2 + y^2 - 1"});
  auto rep = sample_points(circle, 20, 2.0, 1);
  CHECK(rep.points.size() == 20);
  for (const auto& p : rep.points) CHECK(std::abs(p[0] * p[0] + p[1] * p[1] - 1.0) < 1e-10);

  CHECK(sample_points(Ideal::unit(r2), 5, 1.0, 1).points.empty());

  auto r3 = make_ring({"x", "y", "z"});
  auto umbrella = I(r3, {"x^2 - z*y^2"});
  auto u = sample_points(umbrella, 15, 1.0, 2);
  CHECK(u.points.size() == 15);
  for (const auto& p : u.points) CHECK(residual(umbrella, p) < 1e-10);

  auto cubic = I(r3, {"y - x^2", "z - x^3"});
  for (const auto& p : sample_points(cubic, 10, 1.0, 3).points) CHECK(residual(cubic, p) < 1e-10);
}

TEST_CASE("sampling is deterministic per seed") {
  auto r2 = make_ring({"x", "y"});
  auto circle = I(r2, {"x^2 + y^2 - 1"});
  auto a = sample_points(circle, 5, 1.0, 9);
  auto b = sample_points(circle, 5, 1.0, 9);
  CHECK(a.points == b.points);
}

TEST_CASE("condition (b) scores") {
  auto r3 = make_ring({"x", "y", "z"});
  auto umbrella = I(r3, {"x^2 - z*y^2"});
  auto axis = I(r3, {"x", "y"});
  auto origin = whitney_b_violation_score(umbrella, axis, {0.0, 0.0, 0.0}, kScales, 0);
  MESSAGE("umbrella origin score " << origin.best_score);
  CHECK(origin.best_score > 0.5);
  CHECK(origin.success);
  auto off = whitney_b_violation_score(umbrella, axis, {0.0, 0.0, 1.0}, kScales, 0);
  MESSAGE("umbrella (0,0,1) score " << off.best_score);
  CHECK(off.best_score < 1e-3);
  CHECK_FALSE(off.success);

  auto r2 = make_ring({"x", "y"});
  auto plane = whitney_b_violation_score(Ideal::zero(r2), I(r2, {"y"}), {0.5, 0.0}, kScales, 0);
  CHECK(plane.best_score < 1e-6);
}

TEST_CASE("K-infinity witnesses") {
  auto r2 = make_ring({"x", "y"});
  std::vector<Polynomial> broughton{P("x + x^2*y", r2)};
  auto yes = kinf_witness_search({}, broughton, {0.0}, 0);
  MESSAGE("Broughton y*=0 score " << yes.best_score);
  CHECK(yes.success);
  CHECK(yes.best_score < 1e-3);
  REQUIRE_FALSE(yes.trace.empty());
  const auto& last = yes.trace.back();
  CHECK(last.norm > 1e3);
  // Along the witness family the second coordinate dominates.
  CHECK(std::abs(last.point[1]) > 100 * std::abs(last.point[0]));

  auto no = kinf_witness_search({}, broughton, {1.0}, 0);
  MESSAGE("Broughton y*=1 score " << no.best_score);
  CHECK_FALSE(no.success);

  auto lin = kinf_witness_search({}, {P("x", r2)}, {0.0}, 0);
  CHECK_FALSE(lin.success);
}

TEST_CASE("svd nu matches eigenvalue nu") {
  std::mt19937_64 eng(3);
  std::normal_distribution<double> d;
  CHECK(svd_nu(CMatrix::Identity(2, 2)) == doctest::Approx(1.0));
  CMatrix A(2, 2);
  A << 1, 0, 1, 1;
  CHECK(svd_nu(A) == doctest::Approx(std::sqrt((3 - std::sqrt(5.0)) / 2)).epsilon(1e-12));
  for (int k = 0; k < 200; ++k) {
    const int m = 1 + k % 3;
    const int n = m + k % 4;
    CMatrix M(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = {d(eng), d(eng)};
    CHECK(std::abs(svd_nu(M) - nu(M)) < 1e-9);
  }
}
