#include <algorithm>
#include <random>

#include "affstrat/errors.hpp"
#include "affstrat/ideal.hpp"
#include "doctest.h"

using namespace affstrat;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g, r));
  return Ideal(r, ps);
}

bool contains(const std::vector<Polynomial>& basis, const Polynomial& p) {
  return std::find(basis.begin(), basis.end(), p) != basis.end();
}

}  // namespace

TEST_CASE("basis of coordinate ideal") {
  auto r = make_ring({"x", "y"});
  auto b = groebner_basis({P("x", r), P("y", r)}, MonomialOrder::lex());
  CHECK(b.size() == 2);
  CHECK(contains(b, P("x", r)));
  CHECK(contains(b, P("y", r)));
}

TEST_CASE("twisted cubic under lex") {
  auto r = make_ring({"x", "y", "z"});
  auto b = groebner_basis({P("y - x^2", r), P("z - x^3", r)}, MonomialOrder::lex());
  CHECK(contains(b, P("y^3 - z^2", r)));
  CHECK(is_groebner_basis(b, MonomialOrder::lex()));
}

TEST_CASE("circle meets diagonal") {
  auto r = make_ring({"x", "y"});
  auto b = groebner_basis({P("x^2 + y^2 - 1", r), P("y - x", r)}, MonomialOrder::lex());
  CHECK(b.size() == 2);
  CHECK(contains(b, P("x - y", r)));
  CHECK(contains(b, P("y^2 - 1/2", r)));
}

TEST_CASE("unit and zero ideals") {
  auto r = make_ring({"x", "y"});
  auto b = groebner_basis({P("x", r), P("x - 1", r)}, MonomialOrder::grevlex());
  REQUIRE(b.size() == 1);
  CHECK(b[0] == P("1", r));
  CHECK(groebner_basis({P("0", r)}, MonomialOrder::grevlex()).empty());
}

TEST_CASE("normal forms") {
  auto r = make_ring({"x", "y"});
  CHECK(normal_form(P("x^2", r), {P("x", r)}, MonomialOrder::grevlex()).is_zero());
  CHECK(normal_form(P("y", r), {P("x", r)}, MonomialOrder::grevlex()) == P("y", r));
  auto ryx = make_ring({"y", "x"});
  CHECK(normal_form(P("x^2*y + y", ryx), {P("y - x^2", ryx)}, MonomialOrder::lex()) ==
        P("x^4 + x^2", ryx));
  // Scaling during reduction is undone.
  CHECK(normal_form(P("x^2 + y", r), {P("3*x - 1", r)}, MonomialOrder::grevlex()) ==
        P("y + 1/9", r));
}

TEST_CASE("budget exhaustion is reported with the label") {
  auto r = make_ring({"x", "y", "z"});
  GroebnerOptions opts;
  opts.spair_budget = 1;
  ComputationLabel label("tiny budget");
  try {
    groebner_basis({P("x^2 - y*z", r), P("y^2 - x*z", r), P("z^2 - x*y + 1", r)},
                   MonomialOrder::grevlex(), opts);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("tiny budget") != std::string::npos);
  }
}

TEST_CASE("elimination ideals") {
  auto r = make_ring({"x", "y", "z"});
  auto E = elimination_ideal(I(r, {"y - x^2", "z - x^3"}), {1, 2});
  CHECK(E.ring()->names() == std::vector<std::string>{"y", "z"});
  CHECK(same_ideal(E, I(E.ring(), {"y^3 - z^2"})));
  auto rxt = make_ring({"x", "t"});
  CHECK(elimination_ideal(I(rxt, {"x*t - 1"}), {0}).is_zero());
  auto rx = make_ring({"x"});
  CHECK(same_ideal(elimination_ideal(I(rx, {"x"}), {0}), I(rx, {"x"})));
}

TEST_CASE("dimension") {
  auto r2 = make_ring({"x", "y"});
  CHECK(dimension(I(r2, {"x^2 + y^2 - 1"})) == 1);
  CHECK(dimension(I(r2, {"x", "y"})) == 0);
  CHECK(dimension(I(r2, {"1"})) == -1);
  CHECK(dimension(Ideal::zero(r2)) == 2);
  auto r3 = make_ring({"x0", "x", "y"});
  CHECK(dimension(I(r3, {"x0", "x^2 + y^2 - x0^2"})) == 1);
  auto info = dimension_info(I(make_ring({"x", "y", "z"}), {"x", "y"}));
  CHECK(info.independent == std::vector<std::size_t>{2});
}

TEST_CASE("membership and saturation") {
  auto r = make_ring({"x", "y"});
  CHECK(is_member(P("x^2", r), I(r, {"x"})));
  CHECK_FALSE(is_member(P("x", r), I(r, {"x^2"})));
  CHECK(saturated_member(P("x", r), I(r, {"x^2"}), P("x", r)));
  CHECK(saturated_member(P("y", r), I(r, {"x*y"}), P("x", r)));
  CHECK_FALSE(saturated_member(P("y", r), I(r, {"x*y"}), P("y", r)));
  CHECK(radical_member(P("x", r), I(r, {"x^2"})));
  CHECK_FALSE(radical_member(P("y", r), I(r, {"x^2"})));
  CHECK(same_ideal(saturate(I(r, {"x*y", "x^2"}), P("x", r)), I(r, {"1"})));
  CHECK(same_ideal(saturate(I(r, {"x*y^2"}), P("x", r)), I(r, {"y^2"})));
}

TEST_CASE("intersection and gcd") {
  auto r = make_ring({"x", "y"});
  CHECK(same_ideal(intersect(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  CHECK(gcd(P("x^2 - y^2", r), P("x^2 + 2*x*y + y^2", r)) == P("x + y", r));
  CHECK(gcd(P("x", r), P("y", r)) == P("1", r));
  CHECK(squarefree_part(P("x^3*y^2 - x^2*y^3", r)) == P("x^2*y - x*y^2", r));
}

TEST_CASE("radicals") {
  auto r = make_ring({"x", "y", "z"});
  auto rad = radical(I(r, {"x^2", "y^2"}));
  CHECK(same_ideal(rad, I(r, {"x", "y"})));
  auto mixed = equidimensional_radicals(I(r, {"x*z", "y*z"}));
  REQUIRE(mixed.size() == 2);
  CHECK(dimension(mixed[0]) == 2);
  CHECK(same_ideal(mixed[0], I(r, {"z"})));
  CHECK(same_ideal(mixed[1], I(r, {"x", "y"})));
  // Embedded line inside a plane is absorbed.
  auto emb = equidimensional_radicals(I(r, {"x^2", "x*y"}));
  REQUIRE(emb.size() == 1);
  CHECK(same_ideal(emb[0], I(r, {"x"})));
  CHECK(same_variety(I(r, {"x^3", "y"}), I(r, {"x", "y^5"})));
  CHECK_FALSE(same_variety(I(r, {"x"}), I(r, {"x", "y"})));
}

namespace {

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> coeff(-5, 5), nterms(1, 4), ex(0, 2);
  std::vector<Term> ts;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Monomial::Exponent> e(ring->size());
    unsigned left = 2;
    for (auto& v : e) {
      v = std::min<unsigned>(left, static_cast<unsigned>(ex(rng)));
      left -= v;
    }
    ts.push_back({Monomial(e), Rational(coeff(rng))});
  }
  return Polynomial::from_terms(ring, ts);
}

}  // namespace

TEST_CASE("buchberger certificate and order independence on random ideals") {
  std::mt19937_64 rng(2024);
  auto r = make_ring({"x", "y", "z"});
  const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                                  MonomialOrder::elimination({0}, 3)};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_poly(rng, r));
    for (const auto& order : orders) {
      auto b = groebner_basis(gens, order);
      CHECK(is_groebner_basis(b, order));
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(groebner_basis(shuffled, order) == b);
      for (const auto& g : gens) CHECK(normal_form(g, b, order).is_zero());
    }
  }
}

TEST_CASE("dimension drops by one under a generic hyperplane") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-50, 50);
  auto r = make_ring({"x", "y", "z"});
  const std::vector<Ideal> ideals{I(r, {"x^2 - z*y^2"}), I(r, {"x*y", "x*z"}),
                                  I(r, {"y - x^2", "z - x^3"})};
  for (const auto& J : ideals) {
    const long d = dimension(J);
    REQUIRE(d >= 1);
    for (int k = 0; k < 3; ++k) {
      Polynomial l = Polynomial::constant(r, c(rng));
      for (std::size_t v = 0; v < 3; ++v) l += c(rng) * Polynomial::variable(r, v);
      CHECK(dimension(J.with({l})) == d - 1);
    }
  }
}
