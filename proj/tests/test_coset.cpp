#include <doctest.h>

#include <array>
#include <set>

#include "steinberg/coset.hpp"
#include "steinberg/k2.hpp"

using namespace steinberg;

namespace {

// |SL(3,2)| by closing {I} under the six elementary matrices, each matrix a
// 9-bit mask.  Kept independent of the library's matrix search.
std::size_t sl3_f2_order() {
  auto mul = [](unsigned a, unsigned b) {
    unsigned c = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        unsigned bit = 0;
        for (int k = 0; k < 3; ++k) bit ^= (a >> (3 * i + k) & 1) & (b >> (3 * k + j) & 1);
        c |= bit << (3 * i + j);
      }
    return c;
  };
  const unsigned id = 1u | 1u << 4 | 1u << 8;
  std::vector<unsigned> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) gens.push_back(id | 1u << (3 * i + j));
  std::set<unsigned> seen{id};
  std::vector<unsigned> frontier{id};
  while (!frontier.empty()) {
    std::vector<unsigned> next;
    for (auto m : frontier)
      for (auto g : gens)
        if (seen.insert(mul(m, g)).second) next.push_back(mul(m, g));
    frontier.swap(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("cyclic group of order 3") {
  Presentation p;
  const auto a = p.add_generator("a");
  p.add_relator({a, a, a});
  const auto t = todd_coxeter(p, {});
  CHECK(t.size() == 3);
  CHECK_FALSE(t.verify(p).has_value());
}

TEST_CASE("symmetric group on three letters") {
  Presentation p;
  const auto a = p.add_generator("a", true), b = p.add_generator("b", true);
  p.add_relator({a, b, a, b, a, b});
  const auto t = todd_coxeter(p, {});
  CHECK(t.size() == 6);
  CHECK_FALSE(t.verify(p).has_value());
  CHECK(todd_coxeter(p, {{a}}).size() == 3);
  CHECK(t.apply(0, {}) == 0);
  const auto perm = t.permutation({});
  for (std::size_t k = 0; k < perm.size(); ++k) CHECK(perm[k] == k);
  CHECK(t.coset_words().size() == 6);
}

TEST_CASE("enumeration caps are reported, never mistaken for an answer") {
  Presentation p;
  const auto a = p.add_generator("a");
  p.add_relator({a, a, a, a, a, a, a, a, a, a, a, a});
  EnumerationCaps caps;
  caps.max_cosets = 5;
  CHECK_THROWS_AS(todd_coxeter(p, {}, caps), InconclusiveError);
}

TEST_CASE("bad presentations are rejected") {
  Presentation p;
  p.add_generator("a");
  p.add_relator({7});
  CHECK_THROWS_AS(p.validate(), SpecError);
}

TEST_CASE("Steinberg presentation sizes") {
  const auto f2 = make_ring("f2");
  const auto f3 = make_ring("f3");
  const auto A2 = RootDatum::parse("A2");
  const auto p = steinberg_presentation(A2, f2);
  // One column per (root, nonzero r); over f2 each is an involution.
  std::size_t generators = 0;
  for (const auto& col : p->column_of)
    for (auto c : col) generators += c >= 0;
  CHECK(generators == 6);
  const auto q = steinberg_presentation(RootDatum::parse("A3"), f3);
  generators = 0;
  for (const auto& col : q->column_of)
    for (auto c : col) generators += c >= 0;
  CHECK(generators == 24);
  // Closed form with q = |R|, Phi roots: S1 instances |Phi|(q-1)^2 and
  // commutator instances |Phi|(|Phi|-2)(q-1)^2.
  for (const auto& [sys, R] : {std::pair{A2, f2}, std::pair{RootDatum::parse("A3"), f3}}) {
    const auto pr = steinberg_presentation(sys, R);
    const std::size_t roots = sys->size(), units = R->size() - 1;
    CHECK(pr->s1_relators == roots * units * units);
    CHECK(pr->s23_relators == roots * (roots - 2) * units * units);
  }
  CHECK_THROWS_AS(steinberg_presentation(A2, make_ring("z")), DomainError);
}

TEST_CASE("St(A2, f2) is SL(3,2) and its K2 is trivial") {
  const auto t = steinberg_table(RootDatum::parse("A2"), make_ring("f2"));
  CHECK_FALSE(t.table.verify(t.presentation->presentation).has_value());
  const auto k = k2_compute(t);
  CHECK(k.st_order == 168);
  CHECK(k.image_order == sl3_f2_order());
  CHECK(k.st_order == k.kernel_order * k.image_order);
  // Frozen regression value.
  CHECK(k.kernel_order == 1);
  CHECK(k.central);
  CHECK(k.witnesses.empty());
  CHECK(k.fibers_uniform);
}

TEST_CASE("word evaluation in the St(A2, f2) table") {
  const auto f2 = make_ring("f2");
  const auto sys = RootDatum::parse("A2");
  const ExactEquality eq(std::make_shared<SteinbergTable>(steinberg_table(sys, f2)));
  const auto one = f2->one();
  const StWord x = xij(f2, 3, 0, 1, one);
  CHECK_FALSE(eq.is_identity(x));
  CHECK(eq.is_identity(x * x));
  CHECK(eq.equal(StWord::commutator(x, xij(f2, 3, 1, 2, one)), xij(f2, 3, 0, 2, one)));
  CHECK(eq.element(empty_word(sys, f2)) == 0);
  // Every relator evaluates to the identity.
  const auto& pr = *eq.table().presentation;
  for (const auto& rel : pr.presentation.relators) CHECK(eq.is_identity(pr.st_word(rel)));
}

TEST_CASE("the zero ring gives the trivial group") {
  const auto t = steinberg_table(RootDatum::parse("A2"), make_ring("z/1"));
  const auto k = k2_compute(t);
  CHECK(k.st_order == 1);
  CHECK(k.kernel_order == 1);
}

TEST_CASE("relative subgroup index") {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto A2 = RootDatum::parse("A2");
  const auto r = relative_subgroup_index(A2, Ideal::generated(D, {element(D, "[0,1]").value()}));
  CHECK(r.index == 168);
  CHECK(r.quotient_order == 168);
  CHECK(r.subgroup_generators == 24);
  const auto f2 = make_ring("f2");
  const auto zero = relative_subgroup_index(A2, Ideal::zero(f2));
  CHECK(zero.subgroup_generators == 0);
  CHECK(zero.index == 168);
}

TEST_CASE("amalgam over A3 is a single factor with no gluing") {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto p = amalgam_presentation(RootDatum::parse("A3"), Ideal::generated(D, {element(D, "[0,1]").value()}));
  CHECK(p.factors.size() == 1);
  CHECK(p.gluing_relators.empty());
  const auto cov = amalgam_coverage(p);
  CHECK(cov.covered == cov.total);
}

TEST_CASE("amalgam over D4 maps gluing relators to the identity") {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto p = amalgam_presentation(RootDatum::parse("D4"), Ideal::generated(D, {element(D, "[0,1]").value()}));
  CHECK(p.factors.size() == 12);
  CHECK_FALSE(p.gluing_relators.empty());
  for (const auto& rel : p.gluing_relators) CHECK(phi(canonical_image(p, rel)).is_identity());
  for (const auto& rel : p.factor_relators) CHECK(phi(canonical_image(p, rel)).is_identity());
  const auto cov = amalgam_coverage(p);
  CHECK(cov.total == 96);
  CHECK(cov.covered == 96);
  CHECK(cov.uncovered_roots.empty());
}
