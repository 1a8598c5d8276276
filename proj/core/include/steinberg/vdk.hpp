#pragma once

// Words for transvections in St(n,R): the elements x(u,v), X(u,v), Y(u,v),
// Tulenbaev elements X_{u,v}(a), Y_{u,v}(a), the map psi into the
// semidirect product and the lifting map T through a principal localization.

#include <optional>
#include <string>
#include <vector>

#include "steinberg/matrix.hpp"
#include "steinberg/ring.hpp"
#include "steinberg/word.hpp"

namespace steinberg {

/// x(u,v) for u^t v = 0 with some v_i = 0 (primary) or u_i = 0 (dual);
/// the least primary index wins, then the least dual index.
StWord x_small(const RVector& u, const RVector& v);

/// x(u,v) built at index i: requires v_i = 0, or u_i = 0 when `dual`.
StWord x_small_at(const RVector& u, const RVector& v, std::size_t i, bool dual);

/// Every (index, dual) choice accepted by x_small_at.
std::vector<std::pair<std::size_t, bool>> x_small_choices(const RVector& u, const RVector& v);

/// u_pq = (e_p v_q - e_q v_p)(u_p w_q - u_q w_p) for p < q, in (p,q)
/// row-major order.  Sums to (w^t v)u - (u^t v)w.
std::vector<RVector> canonical_terms(const RVector& u, const RVector& v, const RVector& w);

/// canonical_terms under the contract w^t v = 1, u^t v = 0.
std::vector<RVector> canonical_decomposition(const RVector& u, const RVector& v, const RVector& w);

/// X(u,v) with certificate w^t u = 1; the overload without w finds one.
StWord X_gen(const RVector& u, const RVector& v, const RVector& w);
StWord X_gen(const RVector& u, const RVector& v);
/// Y(u,v) with certificate w^t v = 1.
StWord Y_gen(const RVector& u, const RVector& v, const RVector& w);
StWord Y_gen(const RVector& u, const RVector& v);

/// Decomposition data for X_{u,v}(a) (side x: u fixed, v split) or
/// Y_{u,v}(a) (side y: v fixed, u split).  `membership` satisfies
/// membership^t fixed = a.
struct TulenbaevDatum {
  enum class Side { x, y };
  Side side = Side::x;
  RVector fixed;
  RVector total;
  Value a;
  std::vector<RVector> terms;
  std::optional<RVector> membership;

  /// Throws DomainError naming the first broken invariant.
  void validate() const;
};

/// Datum over explicit terms; total is their sum.
TulenbaevDatum x_datum_from_terms(const RVector& u, std::vector<RVector> terms, const Value& a,
                                  std::optional<RVector> membership);
TulenbaevDatum y_datum_from_terms(const RVector& v, std::vector<RVector> terms, const Value& a,
                                  std::optional<RVector> membership);

/// Canonical datum for X_{u, a v'}(a) given z^t u = a and u^t v' = 0:
/// terms (e_p u_q - e_q u_p)(v'_p z_q - v'_q z_p).
TulenbaevDatum x_datum(const RVector& u, const RVector& v_prime, const RVector& z, const Value& a);
/// Mirror: Y_{a u', v}(a) given z^t v = a and u'^t v = 0.
TulenbaevDatum y_datum(const RVector& v, const RVector& u_prime, const RVector& z, const Value& a);

/// v in D(u) for a^k in I(u): v' = v / a^k entrywise (unique division on
/// `ideal` when given, exact division otherwise), then the canonical terms
/// with multiplier a^k, zero terms dropped.  The certificate z^t u = a^k is found by lin_solve when
/// not supplied.
TulenbaevDatum decompose_in_D(const RVector& u, const RVector& v, unsigned k, const Value& a,
                              const Ideal* ideal = nullptr, const RVector* certificate = nullptr);

/// prod x(u, v_k a).
StWord X_tul(const TulenbaevDatum& d);
/// prod x(u_k a, v).
StWord Y_tul(const TulenbaevDatum& d);

// ---------------------------------------------------------------------------
// Equality checks built from the identities of Tulenbaev elements.

struct PathCheck {
  std::string name;
  StWord lhs;
  StWord rhs;
};

/// Both sides of X_{u,v b^4 r}(b) = Y_{u b^4 r, v}(b) and both evaluations of
/// g = [Y_{-xbr,v}(b), X_{u,yb}(b)].  z_u^t u = b and z_v^t v = b.
std::vector<PathCheck> xeqy_paths(const RVector& x, const RVector& y, const RVector& u, const RVector& v,
                                  const Value& b, const Value& r, const RVector& z_u, const RVector& z_v);

/// Throws DomainError unless u^t v = 0, x^t y = b, x^t v = 0, u^t y = 0,
/// x^t u = 0, y^t v = 0.
void check_xeqy_hypotheses(const RVector& x, const RVector& y, const RVector& u, const RVector& v, const Value& b);

/// X(e_1, e_2 a) = Y(e_1 a, e_2) through [Y(-e_3,e_2), X(e_1,e_3 a)].
std::vector<PathCheck> xy_commutator_paths(const RingHandle& ring, std::size_t n, const Value& a);

// ---------------------------------------------------------------------------
// Generators of St*(n,R,I) and their images.

struct StarSymbol {
  enum class Kind { F, S };
  Kind kind = Kind::F;
  RVector u, v;
  /// w^t u = 1 for F, w^t v = 1 for S.
  std::optional<RVector> certificate;
  /// Factors of M with M e_1 equal to the nice vector, when known.
  std::optional<std::vector<ElementaryFactor>> orbit;

  std::string to_string() const;
};

/// X(u,v) for F(u,v), Y(u,v) for S(u,v).
StWord iota(const StarSymbol& s);

/// psi(x_ij(xi)) = (X(e_i, e_j xi'), x_ij(pi xi)) with xi' = xi - sigma pi xi.
SemidirectElement psi_map(const std::shared_ptr<const SplitContext>& ctx, std::size_t i, std::size_t j,
                          const Value& xi);

std::shared_ptr<const SplitContext> make_split_context(std::size_t n, SplitData split);

// ---------------------------------------------------------------------------
// Lifting through B -> B_a.

struct TMapContext {
  RingHandle base;            // B
  Value a;                    // a in B
  Ideal ideal;                // uniquely a-divisible ideal of B
  LocalizationResult loc;     // B_a and lambda
  unsigned cap = 8;           // largest m tried
  std::size_t lift_cap = 1u << 16;  // lift combinations tried per m
};

TMapContext make_tmap_context(const RingHandle& base, const Value& a, const Ideal& ideal, unsigned cap = 8);

struct TMapResult {
  unsigned m = 0;
  RVector nice_lift;      // u~ (F) or v~ (S)
  RVector certificate_lift;  // w~ with w~^t nice_lift = a^{2m}
  RVector other_lift;     // the I-vector lifted into I^n
  TulenbaevDatum datum;
  StWord word;            // over B
};

/// T(gen) for a generator over B_a whose vectors are given over B_a.
/// Throws InconclusiveError when no m <= cap admits lifts.
TMapResult t_map(const TMapContext& ctx, const StarSymbol& gen);

}  // namespace steinberg
