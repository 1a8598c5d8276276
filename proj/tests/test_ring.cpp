#include <doctest.h>

#include <random>
#include <set>

#include "steinberg/ring.hpp"

using namespace steinberg;

namespace {

Value lit(const RingHandle& R, const char* s) { return element(R, s).value(); }
std::string fmt(const RingHandle& R, const Value& v) { return R->format(v); }

}  // namespace

TEST_CASE("modular ring enumerates each element once") {
  const auto R = make_ring("z/6");
  CHECK(R->is_finite());
  CHECK(R->size() == 6);
  const auto e = R->elements();
  std::set<Value> distinct(e.begin(), e.end());
  CHECK(distinct.size() == 6);
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(R->index_of(e[i]) == i);
}

TEST_CASE("ring axioms hold on the small constructions") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"z/6", "f2", "f3", "z/9", "prod(f2,f3)", "quo(poly(f2,X),X^2)", "z", "poly(z/4,X)",
                           "loc(z,2)", "semi(z,2)", "loc(z/6,2)"}) {
    CAPTURE(spec);
    const auto R = make_ring(spec);
    CHECK_FALSE(check_ring_axioms(*R, rng, 300).has_value());
  }
}

TEST_CASE("product z/2 x z/3 is isomorphic to z/6") {
  const auto P = make_ring("prod(z/2,z/3)");
  const auto Z = make_ring("z/6");
  REQUIRE(P->size() == 6);
  // The CRT map is the unique unital morphism z/6 -> P: k -> k*1.
  std::set<Value> image;
  for (int k = 0; k < 6; ++k) image.insert(P->from_int(k));
  CHECK(image.size() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(P->mul(P->from_int(a), P->from_int(b)) == P->from_int(a * b));
      CHECK(P->add(P->from_int(a), P->from_int(b)) == P->from_int(a + b));
    }
  CHECK(Z->size() == 6);
}

TEST_CASE("polynomial rings are infinite") { CHECK_FALSE(make_ring("poly(z/2,X)")->is_finite()); }

TEST_CASE("malformed ring specs are rejected") {
  for (const char* spec : {"", "z/", "z/0", "f4x", "prod(f2)", "poly(f2)", "frob(z)"}) {
    CAPTURE(spec);
    CHECK_THROWS_AS(make_ring(spec), SpecError);
  }
}

TEST_CASE("localization of z/6 at 2 is the idempotent part 4 z/6") {
  const auto R = make_ring("z/6");
  const auto L = localization(R, lit(R, "2"));
  REQUIRE(L.ring->is_finite());
  CHECK(L.ring->size() == 3);
  CHECK(fmt(L.ring, L.ring->one()) == "4");
  CHECK(fmt(L.ring, L.lambda(lit(R, "1"))) == "4");
  // A ring of order 3 with unit: z/3.
  const auto one = L.ring->one();
  CHECK_FALSE(L.ring->is_zero(L.ring->add(one, one)));
  CHECK(L.ring->is_zero(L.ring->add(one, L.ring->add(one, one))));
}

TEST_CASE("localization at a nilpotent element is the zero ring") {
  const auto R = make_ring("z/4");
  const auto L = localization(R, lit(R, "2"));
  CHECK(L.ring->size() == 1);
  CHECK(L.ring->is_zero(L.ring->one()));
}

TEST_CASE("localization of z at 2 keeps integers") {
  const auto R = make_ring("z");
  const auto L = localization(R, R->from_int(2));
  CHECK(fmt(L.ring, L.lambda(R->from_int(3))) == fmt(L.ring, L.ring->from_int(3)));
  const auto half = L.ring->inverse(L.ring->from_int(2));
  REQUIRE(half.has_value());
  CHECK(L.ring->is_one(L.ring->mul(*half, L.ring->from_int(2))));
  CHECK_FALSE(L.ring->inverse(L.ring->from_int(3)).has_value());
}

TEST_CASE("semidirect ring multiplication") {
  const auto B = make_ring("semi(z,2)");
  const auto& S = dynamic_cast<const SemidirectRing&>(*B);
  const auto& P = S.poly();
  const auto X = P.monomial(S.localized()->one(), 1);
  const auto x = S.make(S.base()->zero(), X);
  CHECK(B->mul(B->one(), x) == x);
  CHECK(B->mul(x, x) == S.make(S.base()->zero(), P.monomial(S.localized()->one(), 2)));
}

TEST_CASE("semidirect ring over z/6 at 2 expands products coefficientwise") {
  const auto B = make_ring("semi(z/6,2)");
  const auto& S = dynamic_cast<const SemidirectRing&>(*B);
  const auto& P = S.poly();
  const auto& L = S.localized();
  const auto R = S.base();
  auto c = [&](int k) { return L->mul(L->from_int(k), L->one()); };
  const auto lhs = B->mul(S.make(R->from_int(3), P.monomial(c(4), 1)), S.make(R->from_int(2), P.monomial(c(2), 1)));
  // (3,4X)(2,2X) = (6, (3*2 + 2*4)X + 8X^2) with coefficients in R_2 = 4 z/6.
  const auto rhs = S.make(R->from_int(0), P.normalize({L->zero(), c(3 * 2 + 2 * 4), c(8)}));
  CHECK(lhs == rhs);
}

TEST_CASE("linear solving finds least certificates or proves absence") {
  const auto R = make_ring("z/6");
  auto sol = lin_solve(R, {lit(R, "2"), lit(R, "3")}, R->one());
  REQUIRE(sol);
  CHECK(fmt(R, sol.coefficients[0]) == "2");
  CHECK(fmt(R, sol.coefficients[1]) == "1");
  CHECK(lin_solve(R, {lit(R, "2"), lit(R, "4")}, R->one()).status == SolveResult::Status::no_solution);
  auto unit = lin_solve(R, {R->one()}, R->one());
  REQUIRE(unit);
  CHECK(R->is_one(unit.coefficients[0]));
  const auto Z = make_ring("z");
  auto euclid = lin_solve(Z, {Z->from_int(6), Z->from_int(10), Z->from_int(15)}, Z->from_int(1));
  REQUIRE(euclid);
  Int total = 0;
  const std::vector<int> u{6, 10, 15};
  for (std::size_t k = 0; k < 3; ++k) total += u[k] * euclid.coefficients[k].num;
  CHECK(total == 1);
}

TEST_CASE("unique division") {
  const auto B = make_ring("prod(f2,f3)");
  const auto I = Ideal::generated(B, {lit(B, "(0,1)")});
  CHECK(fmt(B, unique_divide(I, lit(B, "(0,1)"), lit(B, "(0,2)"))) == "(0,2)");
  CHECK(B->is_zero(unique_divide(I, lit(B, "(0,1)"), B->zero())));
  const auto Z6 = make_ring("z/6");
  const auto I3 = Ideal::generated(Z6, {lit(Z6, "3")});
  CHECK_THROWS_AS(unique_divide(I3, lit(Z6, "2"), lit(Z6, "3")), DivisibilityError);
}

TEST_CASE("splitting sections") {
  const auto P = make_ring("prod(f2,f2)");
  const auto split = splitting_section(Ideal::generated(P, {lit(P, "(0,1)")}));
  REQUIRE(split.has_value());
  for (const auto& x : split->quotient->elements()) {
    const auto s = split->section(x);
    CHECK(split->projection(s) == x);
    const auto shown = fmt(P, s);
    CHECK((shown == "(0,0)" || shown == "(1,1)"));
  }
  const auto Q = make_ring("prod(f2,f3)");
  CHECK_FALSE(splitting_section(Ideal::generated(Q, {lit(Q, "(0,1)")})).has_value());
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto eps = splitting_section(Ideal::generated(D, {lit(D, "[0,1]")}));
  REQUIRE(eps.has_value());
  CHECK(eps->quotient->size() == 2);
  const auto poly = make_ring("poly(f2,X)");
  const auto constants = splitting_section(Ideal::variable_ideal(poly));
  REQUIRE(constants.has_value());
  CHECK(constants->section(constants->quotient->one()) == poly->one());
}

TEST_CASE("substitution X -> a^n Y") {
  const auto Z = make_ring("z");
  const auto P = make_ring("poly(z,X)");
  const auto& PP = dynamic_cast<const PolynomialRing&>(*P);
  const RingElement X(P, PP.monomial(Z->one(), 1));
  const RingElement X2(P, PP.monomial(Z->one(), 2));
  const auto a = element(Z, 2);
  const auto y = substitute(X, a, 1);
  const auto& Y = dynamic_cast<const PolynomialRing&>(*y.ring());
  CHECK(y.value() == Y.monomial(Z->from_int(2), 1));
  const auto y2 = substitute(X2, a, 3);
  CHECK(y2.value() == dynamic_cast<const PolynomialRing&>(*y2.ring()).monomial(Z->from_int(64), 2));
  const auto P4 = make_ring("poly(z/4,X)");
  const auto z4 = make_ring("z/4");
  CHECK(substitute(RingElement(P4, P4->zero()), element(z4, 2), 2).is_zero());
}
