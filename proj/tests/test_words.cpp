#include <doctest.h>

#include <random>

#include "steinberg/k2.hpp"
#include "steinberg/star.hpp"
#include "steinberg/vdk.hpp"
#include "steinberg/word.hpp"

using namespace steinberg;

namespace {

RVector vec(const RingHandle& R, std::vector<int> xs) {
  std::vector<Value> e;
  for (int x : xs) e.push_back(R->from_int(x));
  return RVector(R, e);
}

StWord random_word(const RingHandle& R, std::size_t n, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  const auto elems = R->elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  StWord w = empty_word(type_a(n), R);
  while (w.length() < len) {
    const auto i = pos(rng), j = pos(rng);
    if (i != j) w *= xij(R, n, i, j, elems[pick(rng)]);
  }
  return w;
}

const ExactEquality& st4_f2() {
  static const ExactEquality eq(
      std::make_shared<SteinbergTable>(steinberg_table(type_a(4), make_ring("f2"))));
  return eq;
}

}  // namespace

TEST_CASE("word inverse, commutator and simplification") {
  const auto R = make_ring("z/6");
  const auto r = R->from_int(2), s = R->from_int(5);
  const StWord x = xij(R, 4, 0, 1, r);
  CHECK(x.inverse() == xij(R, 4, 0, 1, R->neg(r)));
  CHECK(StWord::commutator(x, empty_word(type_a(4), R)).simplified().empty());
  CHECK((x * x.inverse()).simplified().empty());
  CHECK((x * xij(R, 4, 0, 1, s)).simplified() == xij(R, 4, 0, 1, R->add(r, s)));
  CHECK(phi(StWord::commutator(x, xij(R, 4, 1, 2, s))) == phi(xij(R, 4, 0, 2, R->mul(r, s))));
  CHECK(phi(empty_word(type_a(4), R)).is_identity());
  CHECK(transpose_anti(x) == xij(R, 4, 1, 0, r));
}

TEST_CASE("matrix images of random words") {
  const auto R4 = make_ring("z/4");
  const auto R6 = make_ring("z/6");
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const StWord w = random_word(R4, 4, 8, rng);
    CHECK((phi(w * w.inverse())).is_identity());
    CHECK(phi(w.simplified()) == phi(w));
  }
  for (int k = 0; k < 500; ++k) {
    const StWord g = random_word(R6, 4, 5, rng), h = random_word(R6, 4, 5, rng);
    CHECK(phi(transpose_anti(g * h)) == phi(h).transpose() * phi(g).transpose());
    CHECK(phi(contragredient(g)).transpose() * phi(g) == RMatrix::identity(R6, 4));
  }
}

TEST_CASE("z generators") {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto A2 = type_a(3);
  const auto eps = element(D, "[0,1]").value();
  const auto I = Ideal::generated(D, {eps});
  const auto [Q, pi] = quotient_ring(I);
  for (std::size_t a = 0; a < A2->size(); ++a)
    for (const auto& r : D->elements()) {
      CHECK(z_generator(A2, D, a, D->one(), D->zero()) == StWord::generator(A2, D, a, D->one()));
      const StWord z = z_generator(A2, D, a, eps, r);
      const auto na = A2->negative(a);
      CHECK(phi(z) == unipotent(*A2, na, r, D) * unipotent(*A2, a, eps, D) * unipotent(*A2, na, D->neg(r), D));
      CHECK(map_matrix(phi(z), pi).is_identity());
    }
}

TEST_CASE("x(u,v) examples") {
  const auto R = make_ring("z/6");
  const auto s = R->from_int(5);
  const auto e1 = RVector::basis(R, 4, 0), e2 = RVector::basis(R, 4, 1);
  CHECK(x_small(e1, e2.scaled(s)) == xij(R, 4, 0, 1, s));
  const auto u = vec(R, {1, 1, 0, 0}), v = vec(R, {1, -1, 0, 0});
  CHECK(phi(x_small(u, v)) == transvection(u, v));
  CHECK_THROWS_AS(x_small(vec(R, {1, 1, 1, 1}), vec(R, {1, 1, 1, 3})), DomainError);
  CHECK_THROWS_AS(x_small(e1, vec(R, {1, 1, 0, 0})), DomainError);
}

TEST_CASE("x(u,v) is independent of the index choice at the exact tier over f2") {
  const auto R = make_ring("f2");
  const auto& eq = st4_f2();
  std::size_t checked = 0;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const auto u = vec(R, {a & 1, a >> 1 & 1, a >> 2 & 1, a >> 3 & 1});
      const auto v = vec(R, {b & 1, b >> 1 & 1, b >> 2 & 1, b >> 3 & 1});
      if (!R->is_zero(dot(u, v))) continue;
      const auto choices = x_small_choices(u, v);
      if (choices.empty()) continue;
      const StWord w = x_small(u, v);
      for (const auto& [i, dual] : choices) {
        CHECK(eq.equal(w, x_small_at(u, v, i, dual)));
        ++checked;
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("canonical decomposition") {
  const auto R = make_ring("z/6");
  const auto e2 = RVector::basis(R, 4, 1);
  const auto u = vec(R, {3, 0, 5, 2});
  const auto terms = canonical_decomposition(u, e2, e2);
  RVector sum = RVector::zero(R, 4);
  std::size_t nonzero = 0;
  for (const auto& t : terms) {
    sum = sum + t;
    if (!t.is_zero()) {
      ++nonzero;
      CHECK(t.zero_count() == 3);
    }
  }
  CHECK(sum == u);
  CHECK(nonzero == 3);
  for (const auto& t : canonical_decomposition(RVector::zero(R, 4), e2, e2)) CHECK(t.is_zero());
  CHECK_THROWS_AS(canonical_decomposition(u, e2, vec(R, {0, 2, 0, 0})), DomainError);
}

TEST_CASE("X and Y generators") {
  const auto R = make_ring("z/6");
  const auto e1 = RVector::basis(R, 4, 0), e2 = RVector::basis(R, 4, 1);
  const auto r = R->from_int(4);
  CHECK(phi(X_gen(e1, e2.scaled(r))) == phi(xij(R, 4, 0, 1, r)));
  CHECK(Y_gen(RVector::zero(R, 4), e2).simplified().empty());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 5);
  std::size_t cases = 0;
  while (cases < 300) {
    const auto u = vec(R, {d(rng), d(rng), d(rng), d(rng)});
    const auto v = vec(R, {d(rng), d(rng), d(rng), d(rng)});
    const auto v2 = vec(R, {d(rng), d(rng), d(rng), d(rng)});
    if (!is_unimodular(u) || !R->is_zero(dot(u, v)) || !R->is_zero(dot(u, v2))) continue;
    ++cases;
    CHECK(phi(X_gen(u, v) * X_gen(u, v2)) == transvection(u, v + v2));
    if (is_unimodular(v)) CHECK(phi(Y_gen(u, v)) == transvection(u, v));
  }
  CHECK_THROWS_AS(X_gen(vec(R, {2, 4, 0, 0}), vec(R, {0, 0, 1, 0})), DomainError);
}

TEST_CASE("X and Y are independent of the certificate at the exact tier over f2") {
  const auto R = make_ring("f2");
  const auto& eq = st4_f2();
  const auto u = vec(R, {1, 1, 0, 1}), v = vec(R, {1, 1, 1, 0});
  REQUIRE(R->is_zero(dot(u, v)));
  std::vector<RVector> certs;
  for (int c = 0; c < 16; ++c) {
    const auto w = vec(R, {c & 1, c >> 1 & 1, c >> 2 & 1, c >> 3 & 1});
    if (R->is_one(dot(w, u))) certs.push_back(w);
  }
  REQUIRE(certs.size() == 8);
  for (const auto& w : certs) {
    CHECK(eq.equal(X_gen(u, v, certs[0]), X_gen(u, v, w)));
    CHECK(eq.equal(Y_gen(v, u, certs[0]), Y_gen(v, u, w)));
  }
  // X(u, va) = Y(ua, v) with a = 1.
  CHECK(eq.equal(X_gen(u, v), Y_gen(u, v)));
}

TEST_CASE("decomposition in D(u)") {
  const auto R = make_ring("z/6");
  const auto u = vec(R, {2, 3, 0, 1});
  const auto v = vec(R, {1, 0, 4, 4});
  REQUIRE(R->is_zero(dot(u, v)));
  const auto d = decompose_in_D(u, v, 0, R->one());
  RVector sum = RVector::zero(R, 4);
  for (const auto& t : d.terms) {
    sum = sum + t;
    CHECK(R->is_zero(dot(u, t)));
    CHECK(t.zero_count() >= 2);
  }
  CHECK(sum == v);
  CHECK_NOTHROW(d.validate());
  CHECK(decompose_in_D(u, RVector::zero(R, 4), 0, R->one()).terms.empty());
  CHECK_THROWS(decompose_in_D(vec(R, {2, 4, 0, 0}), vec(R, {0, 0, 1, 0}), 0, R->one()));
}

TEST_CASE("Tulenbaev elements") {
  const auto R = make_ring("z/6");
  const auto u = vec(R, {1, 2, 0, 3}), v = vec(R, {0, 0, 5, 0});
  REQUIRE(R->is_zero(dot(u, v)));
  const auto w = *is_unimodular(u);
  const auto one = x_datum(u, v, w, R->one());
  CHECK(phi(X_tul(one)) == phi(X_gen(u, v)));
  const auto zero = x_datum(u, v, RVector::zero(R, 4), R->zero());
  CHECK(phi(X_tul(zero)).is_identity());
  const auto y = y_datum(u, v, *is_unimodular(u), R->one());
  CHECK(phi(Y_tul(y)) == transvection(v, u));
}

TEST_CASE("X = Y identity degenerates at r = 0") {
  const auto R = make_ring("f2");
  const auto x = vec(R, {1, 0, 0, 0}), y = vec(R, {1, 0, 0, 0});
  const auto u = vec(R, {0, 1, 0, 0}), v = vec(R, {0, 0, 1, 0});
  CHECK_NOTHROW(check_xeqy_hypotheses(x, y, u, v, R->one()));
  for (const auto& p : xeqy_paths(x, y, u, v, R->one(), R->zero(), vec(R, {0, 1, 0, 0}), vec(R, {0, 0, 1, 0}))) {
    CAPTURE(p.name);
    CHECK(st4_f2().equal(p.lhs, p.rhs));
  }
  CHECK_THROWS_AS(check_xeqy_hypotheses(x, y, u, u, R->one()), DomainError);
}

TEST_CASE("iota on F(e1, e2 a)") {
  const auto R = make_ring("z/6");
  const auto a = R->from_int(3);
  const StarSymbol f{StarSymbol::Kind::F, RVector::basis(R, 4, 0), RVector::basis(R, 4, 1).scaled(a), std::nullopt,
                     std::nullopt};
  CHECK(phi(iota(f)) == phi(xij(R, 4, 0, 1, a)));
}

TEST_CASE("iota images over the dual numbers lie in the relative group") {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto I = Ideal::generated(D, {element(D, "[0,1]").value()});
  const auto [Q, pi] = quotient_ring(I);
  const auto dom = star_domain(I, 4);
  CHECK(dom.orbit.size() > 0);
  for (std::size_t k = 0; k < dom.orbit.size(); k += 7)
    for (auto i : dom.orthogonal[k]) {
      const auto& o = dom.orbit[k];
      const StarSymbol f{StarSymbol::Kind::F, o.u, dom.ideal_vecs[i], o.certificate, o.factors};
      const RMatrix m = phi(iota(f));
      CHECK(m == transvection(o.u, dom.ideal_vecs[i]));
      CHECK(map_matrix(m, pi).is_identity());
    }
}

TEST_CASE("T3' relators die under iota at the exact tier over f2") {
  const auto R = make_ring("f2");
  const auto dom = star_domain(Ideal::whole(R), 4);
  std::mt19937_64 rng(2);
  bool exhaustive = false;
  const auto rels = star_relators(dom, "T3'", 300, rng, exhaustive);
  CHECK(rels.size() == 300);
  for (const auto& r : rels) CHECK(check_star_relator(r, st4_f2(), 4, R));
}

TEST_CASE("psi images") {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  auto split = splitting_section(Ideal::generated(D, {element(D, "[0,1]").value()}));
  REQUIRE(split.has_value());
  const auto ctx = make_split_context(4, *split);
  for (const auto& q : split->quotient->elements()) {
    const auto img = psi_map(ctx, 0, 1, split->section(q));
    CHECK(phi(img.kernel()).is_identity());
  }
  const MatrixEquality meq;
  for (const auto& x : D->elements())
    for (const auto& y : D->elements()) {
      const auto g = psi_map(ctx, 0, 1, x), h = psi_map(ctx, 1, 2, y);
      const auto by_formula = semidirect_commutator(g, h);
      const auto by_product = SemidirectElement::commutator(g, h);
      CHECK(meq.equal(by_formula.flatten(), by_product.flatten()));
      CHECK(phi(by_product.flatten()) == phi(xij(D, 4, 0, 2, D->mul(x, y))));
    }
}

TEST_CASE("lifting map with a unit needs no powers of a") {
  const auto B = make_ring("f3");
  const auto ctx = make_tmap_context(B, B->from_int(2), Ideal::whole(B));
  const auto& L = ctx.loc.ring;
  const auto u = RVector::basis(L, 4, 0), v = vec(L, {0, 1, 2, 0});
  const StarSymbol f{StarSymbol::Kind::F, u, v, u, std::nullopt};
  const auto r = t_map(ctx, f);
  CHECK(r.m == 0);
  CHECK(map_matrix(phi(r.word), ctx.loc.lambda) == transvection(u, v));
}
