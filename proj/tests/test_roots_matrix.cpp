#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "steinberg/matrix.hpp"
#include "steinberg/roots.hpp"
#include "steinberg/word.hpp"

using namespace steinberg;

TEST_CASE("root counts") {
  CHECK(RootDatum::parse("A2")->size() == 6);
  CHECK(RootDatum::parse("A3")->size() == 12);
  CHECK(RootDatum::parse("A4")->size() == 20);
  CHECK(RootDatum::parse("D4")->size() == 24);
  CHECK(RootDatum::parse("D5")->size() == 40);
  CHECK(RootDatum::parse("E6")->size() == 72);
  CHECK(RootDatum::parse("E7")->size() == 126);
  CHECK(RootDatum::parse("E8")->size() == 240);
  CHECK_THROWS_AS(RootDatum::parse("B2"), SpecError);
  CHECK_THROWS_AS(RootDatum::parse("A0"), SpecError);
}

TEST_CASE("structure constants are antisymmetric and match matrix commutators") {
  for (const char* name : {"A3", "A4", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const auto sys = RootDatum::parse(name);
    for (std::size_t a = 0; a < sys->size(); ++a)
      for (std::size_t b = 0; b < sys->size(); ++b) {
        if (!sys->sum(a, b)) continue;
        CHECK(sys->structure_constant(a, b) == -sys->structure_constant(b, a));
        CHECK(std::abs(sys->structure_constant(a, b)) == 1);
      }
  }
  const auto A3 = RootDatum::parse("A3");
  CHECK(A3->structure_constant(Root{1, -1, 0, 0}, Root{0, 1, -1, 0}) == 1);
  CHECK_THROWS_AS(A3->structure_constant(Root{1, -1, 0, 0}, Root{0, 0, 1, -1}), DomainError);
}

TEST_CASE("matrix commutator [t12(1), t23(1)] = t13(1)") {
  const auto R = make_ring("z/6");
  const auto A3 = RootDatum::parse("A3");
  const auto a = A3->a_root(0, 1), b = A3->a_root(1, 2), c = A3->a_root(0, 2);
  const auto one = R->one(), m1 = R->neg(one);
  const RMatrix g = unipotent(*A3, a, one, R) * unipotent(*A3, b, one, R) * unipotent(*A3, a, m1, R) *
                    unipotent(*A3, b, m1, R);
  CHECK(g == unipotent(*A3, c, one, R));
}

TEST_CASE("A3 subsystems") {
  const auto A3 = RootDatum::parse("A3");
  const auto subs = a3_subsystems(*A3);
  REQUIRE(subs.size() == 1);
  for (std::size_t k = 0; k < A3->size(); ++k) CHECK(subs[0].embedding[k] == k);
  CHECK(a3_subsystems(*RootDatum::parse("A2")).empty());
}

TEST_CASE("D4 A3 subsystems agree with brute-force spans and cover every root") {
  const auto D4 = RootDatum::parse("D4");
  const auto subs = a3_subsystems(*D4);
  // Oracle: closed subsystems of 12 roots spanned by triples, deduplicated.
  std::set<std::vector<std::size_t>> oracle;
  const std::size_t n = D4->size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // Simple system of type A3: a chain, two products -1 and one 0 in
        // some order.
        const int ij = D4->inner(i, j), jk = D4->inner(j, k), ik = D4->inner(i, k);
        if (ij + jk + ik != -2 || std::min({ij, jk, ik}) != -1 || std::max({ij, jk, ik}) != 0) continue;
        std::set<std::size_t> closure{i, j, k};
        for (bool grew = true; grew;) {
          grew = false;
          const std::vector<std::size_t> cur(closure.begin(), closure.end());
          for (auto x : cur) {
            if (closure.insert(D4->negative(x)).second) grew = true;
            for (auto y : cur)
              if (auto s = D4->sum(x, y); s && closure.insert(*s).second) grew = true;
          }
        }
        if (closure.size() == 12) oracle.insert(std::vector<std::size_t>(closure.begin(), closure.end()));
      }
  std::set<std::vector<std::size_t>> got;
  for (const auto& s : subs) got.insert(s.roots);
  CHECK(got.size() == 12);
  CHECK(got == oracle);
  std::set<std::size_t> covered;
  for (const auto& s : subs) covered.insert(s.roots.begin(), s.roots.end());
  CHECK(covered.size() == n);
}

TEST_CASE("D unipotents preserve the hyperbolic form over z/4") {
  const auto R = make_ring("z/4");
  const auto D4 = RootDatum::parse("D4");
  const RMatrix J = hyperbolic_gram(R, D4->matrix_size());
  for (std::size_t a = 0; a < D4->size(); ++a)
    for (const auto& x : R->elements()) {
      const RMatrix G = unipotent(*D4, a, x, R);
      CHECK(G.transpose() * J * G == J);
    }
  CHECK_THROWS_AS(unipotent(*RootDatum::parse("E6"), 0, R->one(), R), UnsupportedError);
}

TEST_CASE("transvections") {
  const auto R = make_ring("z/6");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 5);
  auto rv = [&] {
    std::vector<Value> e(4);
    for (auto& x : e) x = R->from_int(d(rng));
    return RVector(R, e);
  };
  std::size_t cases = 0;
  while (cases < 200) {
    const RVector u = rv(), v = rv(), w = rv();
    if (!R->is_zero(dot(u, v)) || !R->is_zero(dot(u, w))) continue;
    ++cases;
    CHECK(transvection(u, v) * transvection(u, w) == transvection(u, v + w));
    CHECK((transvection(u, v) * transvection(u, -v)).is_identity());
    // t(u,v)^* = t(v,-u): the transpose inverse.
    CHECK(transvection(u, v).transpose() * transvection(v, -u) == RMatrix::identity(R, 4));
  }
  const auto e1 = RVector::basis(R, 4, 0), e2 = RVector::basis(R, 4, 1);
  const auto r = R->from_int(5);
  CHECK(transvection(e1, e2.scaled(r)) == phi(xij(R, 4, 0, 1, r)));
}

TEST_CASE("unimodular certificates and orbit witnesses") {
  const auto R = make_ring("z/6");
  auto vec = [&](std::vector<int> xs) {
    std::vector<Value> e;
    for (int x : xs) e.push_back(R->from_int(x));
    return RVector(R, e);
  };
  const auto w = is_unimodular(vec({2, 3, 0, 0}));
  REQUIRE(w.has_value());
  CHECK(*w == vec({2, 1, 0, 0}));
  CHECK(*is_unimodular(vec({1, 0, 0, 0})) == vec({1, 0, 0, 0}));
  CHECK_FALSE(is_unimodular(vec({2, 4, 0, 0})).has_value());

  const auto none = orbit_factors(vec({1, 0, 0, 0}));
  REQUIRE(none.has_value());
  CHECK(none->empty());
  const auto e2 = vec({0, 1, 0, 0});
  const auto f = orbit_factors(e2);
  REQUIRE(f.has_value());
  CHECK(phi(factors_word(R, 4, *f)) * vec({1, 0, 0, 0}) == e2);
  const auto u = vec({2, 3, 5, 1});
  const auto g = orbit_factors(u);
  REQUIRE(g.has_value());
  CHECK(phi(factors_word(R, 4, *g)) * vec({1, 0, 0, 0}) == u);
  CHECK_FALSE(orbit_factors(vec({2, 4, 0, 0})).has_value());
}

TEST_CASE("elementary group orders by matrix search") {
  const auto f2 = make_ring("f2");
  CHECK(matrix_group_order(*RootDatum::parse("A2"), f2) == 168);
  CHECK(matrix_group_order(*RootDatum::parse("A2"), make_ring("f3")) == 5616);
  CHECK(matrix_group_order(*RootDatum::parse("A3"), f2) == 20160);
  CHECK(enumerate_elementary_group(f2, 3).size() == 168);
}
