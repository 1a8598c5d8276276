#include "steinberg/vdk.hpp"

#include <algorithm>

namespace steinberg {

namespace {

const RingHandle& ring_of(const RVector& v) { return v.ring; }

void require_orthogonal(const RVector& u, const RVector& v, const char* what) {
  if (u.size() != v.size()) throw DomainError(std::string(what) + ": length mismatch");
  if (!ring_of(u)->is_zero(dot(u, v)))
    throw DomainError(std::string(what) + ": u^t v != 0 for u=" + u.to_string() + ", v=" + v.to_string());
}

RVector certificate_for(const RVector& u) {
  auto w = is_unimodular(u);
  if (!w) throw DomainError("no unimodularity certificate for " + u.to_string());
  return *w;
}

RVector sum_terms(const RingHandle& ring, std::size_t n, const std::vector<RVector>& terms) {
  RVector s = RVector::zero(ring, n);
  for (const auto& t : terms) s = s + t;
  return s;
}

/// (e_p f_q - e_q f_p)(g_p z_q - g_q z_p) for p < q; sums to (z^t f) g - (f^t g) z.
std::vector<RVector> pair_terms(const RVector& f, const RVector& g, const RVector& z) {
  const auto& R = f.ring;
  const std::size_t n = f.size();
  std::vector<RVector> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const Value c = R->sub(R->mul(g[p], z[q]), R->mul(g[q], z[p]));
      RVector t = RVector::zero(R, n);
      t[p] = R->mul(f[q], c);
      t[q] = R->neg(R->mul(f[p], c));
      out.push_back(std::move(t));
    }
  return out;
}

/// y / c exactly, choosing the least quotient for finite rings.
Value exact_divide(const RingHandle& R, const Value& y, const Value& c) {
  if (R->is_zero(y)) return R->zero();
  if (R->kind() == RingKind::integers) {
    if (c.num == 0 || y.num % c.num != 0) throw DomainError("vector not divisible by " + R->format(c));
    return Value(Int(y.num / c.num));
  }
  if (auto inv = R->inverse(c)) return R->mul(y, *inv);
  auto sol = lin_solve(R, {c}, y);
  if (sol.status == SolveResult::Status::solved) return sol.coefficients[0];
  if (sol.status == SolveResult::Status::no_solution)
    throw DomainError("vector not divisible by " + R->format(c));
  throw InconclusiveError("cannot decide divisibility by " + R->format(c) + " in " + R->spec());
}

RMatrix contragredient_of(const RingHandle& ring, std::size_t n, const std::vector<ElementaryFactor>& factors) {
  return phi(contragredient(factors_word(ring, n, factors)));
}

}  // namespace

// ---------------------------------------------------------------------------

StWord x_small_at(const RVector& u, const RVector& v, std::size_t i, bool dual) {
  require_orthogonal(u, v, "x_small");
  const auto& R = u.ring;
  const std::size_t n = u.size();
  if (i >= n) throw DomainError("x_small: index out of range");
  if (dual) {
    if (!R->is_zero(u[i])) throw DomainError("x_small: u_i != 0 for the dual construction");
    return transpose_anti(x_small_at(v, u, i, false));
  }
  if (!R->is_zero(v[i])) throw DomainError("x_small: v_i != 0");
  const auto sys = type_a(n);
  StWord head = empty_word(sys, R), left = empty_word(sys, R), right = empty_word(sys, R);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    head *= xij(R, n, i, j, R->mul(u[i], v[j]));
    left *= xij(R, n, j, i, u[j]);
    right *= xij(R, n, i, j, v[j]);
  }
  if (left.empty() || right.empty()) return head;
  return head * StWord::commutator(left, right);
}

std::vector<std::pair<std::size_t, bool>> x_small_choices(const RVector& u, const RVector& v) {
  std::vector<std::pair<std::size_t, bool>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.ring->is_zero(v[i])) out.emplace_back(i, false);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u.ring->is_zero(u[i])) out.emplace_back(i, true);
  return out;
}

StWord x_small(const RVector& u, const RVector& v) {
  require_orthogonal(u, v, "x_small");
  if (u.is_zero() || v.is_zero()) return empty_word(type_a(u.size()), u.ring);
  const auto choices = x_small_choices(u, v);
  if (choices.empty()) throw DomainError("x_small: no zero coordinate in " + u.to_string() + ", " + v.to_string());
  return x_small_at(u, v, choices.front().first, choices.front().second);
}

std::vector<RVector> canonical_terms(const RVector& u, const RVector& v, const RVector& w) {
  if (u.size() != v.size() || u.size() != w.size()) throw DomainError("canonical terms: length mismatch");
  return pair_terms(v, u, w);
}

std::vector<RVector> canonical_decomposition(const RVector& u, const RVector& v, const RVector& w) {
  if (u.size() < 4) throw DomainError("canonical decomposition needs n >= 4");
  if (!u.ring->is_one(dot(w, v))) throw DomainError("canonical decomposition: w^t v != 1");
  require_orthogonal(u, v, "canonical decomposition");
  return canonical_terms(u, v, w);
}

StWord X_gen(const RVector& u, const RVector& v, const RVector& w) {
  if (!u.ring->is_one(dot(w, u))) throw DomainError("X_gen: certificate w^t u != 1");
  require_orthogonal(u, v, "X_gen");
  const auto& R = u.ring;
  StWord out = empty_word(type_a(u.size()), R);
  for (const auto& t : pair_terms(u, v, w))
    if (!t.is_zero()) out *= x_small(u, t);
  return out;
}

StWord X_gen(const RVector& u, const RVector& v) { return X_gen(u, v, certificate_for(u)); }

StWord Y_gen(const RVector& u, const RVector& v, const RVector& w) {
  if (!v.ring->is_one(dot(w, v))) throw DomainError("Y_gen: certificate w^t v != 1");
  require_orthogonal(u, v, "Y_gen");
  StWord out = empty_word(type_a(u.size()), u.ring);
  for (const auto& t : pair_terms(v, u, w))
    if (!t.is_zero()) out *= x_small(t, v);
  return out;
}

StWord Y_gen(const RVector& u, const RVector& v) { return Y_gen(u, v, certificate_for(v)); }

// ---------------------------------------------------------------------------

void TulenbaevDatum::validate() const {
  const auto& R = fixed.ring;
  if (membership && !(dot(*membership, fixed) == a))
    throw DomainError("datum: membership certificate does not give a");
  for (const auto& t : terms) {
    if (t.size() != fixed.size()) throw DomainError("datum: term length mismatch");
    if (!R->is_zero(dot(t, fixed))) throw DomainError("datum: term " + t.to_string() + " not orthogonal");
    if (t.zero_count() < 2) throw DomainError("datum: term " + t.to_string() + " has fewer than two zeros");
  }
  if (!(sum_terms(R, fixed.size(), terms) == total)) throw DomainError("datum: terms do not sum to the total");
}

TulenbaevDatum x_datum_from_terms(const RVector& u, std::vector<RVector> terms, const Value& a,
                                  std::optional<RVector> membership) {
  TulenbaevDatum d;
  d.side = TulenbaevDatum::Side::x;
  d.fixed = u;
  d.total = sum_terms(u.ring, u.size(), terms);
  d.a = a;
  d.terms = std::move(terms);
  d.membership = std::move(membership);
  d.validate();
  return d;
}

TulenbaevDatum y_datum_from_terms(const RVector& v, std::vector<RVector> terms, const Value& a,
                                  std::optional<RVector> membership) {
  TulenbaevDatum d = x_datum_from_terms(v, std::move(terms), a, std::move(membership));
  d.side = TulenbaevDatum::Side::y;
  return d;
}

TulenbaevDatum x_datum(const RVector& u, const RVector& v_prime, const RVector& z, const Value& a) {
  if (!(dot(z, u) == a)) throw DomainError("x_datum: z^t u != a");
  require_orthogonal(u, v_prime, "x_datum");
  TulenbaevDatum d = x_datum_from_terms(u, pair_terms(u, v_prime, z), a, z);
  return d;
}

TulenbaevDatum y_datum(const RVector& v, const RVector& u_prime, const RVector& z, const Value& a) {
  if (!(dot(z, v) == a)) throw DomainError("y_datum: z^t v != a");
  require_orthogonal(u_prime, v, "y_datum");
  return y_datum_from_terms(v, pair_terms(v, u_prime, z), a, z);
}

TulenbaevDatum decompose_in_D(const RVector& u, const RVector& v, unsigned k, const Value& a, const Ideal* ideal,
                              const RVector* certificate) {
  const auto& R = u.ring;
  require_orthogonal(u, v, "decompose_in_D");
  const Value ak = R->pow(a, k);
  RVector z;
  if (certificate) {
    z = *certificate;
    if (!(dot(z, u) == ak)) throw DomainError("decompose_in_D: certificate does not give a^k");
  } else {
    auto sol = lin_solve(R, u.entries, ak);
    if (sol.status == SolveResult::Status::no_solution)
      throw DomainError("decompose_in_D: a^k is not in I(u) for u=" + u.to_string());
    if (sol.status == SolveResult::Status::inconclusive)
      throw InconclusiveError("decompose_in_D: cannot decide a^k in I(u) over " + R->spec());
    z = RVector(R, sol.coefficients);
  }
  RVector v_prime = RVector::zero(R, v.size());
  std::optional<UniqueDivision> division;
  if (ideal) division.emplace(*ideal, ak);
  for (std::size_t i = 0; i < v.size(); ++i)
    v_prime[i] = division ? division->divide(v[i]) : exact_divide(R, v[i], ak);
  require_orthogonal(u, v_prime, "decompose_in_D");
  std::vector<RVector> terms;
  for (auto& t : pair_terms(u, v_prime, z))
    if (!t.is_zero()) terms.push_back(std::move(t));
  TulenbaevDatum d = x_datum_from_terms(u, std::move(terms), ak, z);
  if (!(d.total == v)) throw DomainError("decompose_in_D: division did not recover v");
  return d;
}

StWord X_tul(const TulenbaevDatum& d) {
  if (d.side != TulenbaevDatum::Side::x) throw DomainError("X_tul needs an x-side datum");
  d.validate();
  StWord out = empty_word(type_a(d.fixed.size()), d.fixed.ring);
  for (const auto& t : d.terms) {
    RVector ta = t.scaled(d.a);
    if (!ta.is_zero()) out *= x_small(d.fixed, ta);
  }
  return out;
}

StWord Y_tul(const TulenbaevDatum& d) {
  if (d.side != TulenbaevDatum::Side::y) throw DomainError("Y_tul needs a y-side datum");
  d.validate();
  StWord out = empty_word(type_a(d.fixed.size()), d.fixed.ring);
  for (const auto& t : d.terms) {
    RVector ta = t.scaled(d.a);
    if (!ta.is_zero()) out *= x_small(ta, d.fixed);
  }
  return out;
}

// ---------------------------------------------------------------------------

void check_xeqy_hypotheses(const RVector& x, const RVector& y, const RVector& u, const RVector& v, const Value& b) {
  const auto& R = u.ring;
  auto zero = [&](const RVector& p, const RVector& q, const char* what) {
    if (!R->is_zero(dot(p, q))) throw DomainError(std::string("xeqy hypothesis fails: ") + what);
  };
  zero(u, v, "u^t v = 0");
  if (!(dot(x, y) == b)) throw DomainError("xeqy hypothesis fails: x^t y = b");
  zero(x, v, "x^t v = 0");
  zero(u, y, "u^t y = 0");
  zero(x, u, "x^t u = 0");
  zero(y, v, "y^t v = 0");
}

std::vector<PathCheck> xeqy_paths(const RVector& x, const RVector& y, const RVector& u, const RVector& v,
                                  const Value& b, const Value& r, const RVector& z_u, const RVector& z_v) {
  check_xeqy_hypotheses(x, y, u, v, b);
  const auto& R = u.ring;
  const std::size_t n = u.size();
  const Value b3r = R->mul(R->pow(b, 3), r);

  const StWord lhs = X_tul(x_datum(u, v.scaled(b3r), z_u, b));
  const StWord rhs = Y_tul(y_datum(v, u.scaled(b3r), z_v, b));

  const StWord A = Y_tul(y_datum(v, (-x).scaled(r), z_v, b));  // Y_{-xbr,v}(b)
  const StWord B = X_tul(x_datum(u, y, z_u, b));                // X_{u,yb}(b)
  const StWord g = StWord::commutator(A, B);

  // g = (A B A^{-1}) B^{-1} with A B A^{-1} = X_{Mu, M^* yb}(b), M = phi(A).
  const RMatrix M = phi(A);
  const RMatrix Mstar = phi(contragredient(A));
  const StWord path1 = X_tul(x_datum(M * u, Mstar * y, Mstar * z_u, b)) * X_tul(x_datum(u, -y, z_u, b));

  // g = A (B A^{-1} B^{-1}) with B A^{-1} B^{-1} = Y_{M' xbr, M'^* v}(b), M' = phi(B).
  const RMatrix N = phi(B);
  const RMatrix Nstar = phi(contragredient(B));
  const StWord path2 = A * Y_tul(y_datum(Nstar * v, (N * x).scaled(r), N * z_v, b));

  (void)n;
  return {{"commutator = conjugation path", g, path1},
          {"conjugation path = X side", path1, lhs},
          {"commutator = Y conjugation path", g, path2},
          {"Y conjugation path = Y side", path2, rhs},
          {"X side = Y side", lhs, rhs}};
}

std::vector<PathCheck> xy_commutator_paths(const RingHandle& R, std::size_t n, const Value& a) {
  if (n < 3) throw DomainError("xy commutator paths need n >= 3");
  const RVector e1 = RVector::basis(R, n, 0), e2 = RVector::basis(R, n, 1), e3 = RVector::basis(R, n, 2);
  const StWord A = Y_gen(-e3, e2, e2);
  const StWord B = X_gen(e1, e3.scaled(a), e1);
  const StWord g = StWord::commutator(A, B);
  const StWord x_side = X_gen(e1, e2.scaled(a), e1);
  const StWord y_side = Y_gen(e1.scaled(a), e2, e2);
  const StWord conj = A * B * A.inverse();
  return {{"A X(e1,e3a) A^-1 = X(e1,e3a+e2a)", conj, X_gen(e1, (e3 + e2).scaled(a), e1)},
          {"commutator = X(e1,e2a)", g, x_side},
          {"commutator = A X(e1,e3a) Y(e3,e2) X(e1,e3a)^-1 path", g, A * (B * Y_gen(e3, e2, e2) * B.inverse())},
          {"commutator = Y(e1a,e2)", g, y_side},
          {"X(e1,e2a) = Y(e1a,e2)", x_side, y_side}};
}

// ---------------------------------------------------------------------------

std::string StarSymbol::to_string() const {
  return std::string(kind == Kind::F ? "F" : "S") + "(" + u.to_string() + "," + v.to_string() + ")";
}

StWord iota(const StarSymbol& s) {
  if (s.kind == StarSymbol::Kind::F) return s.certificate ? X_gen(s.u, s.v, *s.certificate) : X_gen(s.u, s.v);
  return s.certificate ? Y_gen(s.u, s.v, *s.certificate) : Y_gen(s.u, s.v);
}

std::shared_ptr<const SplitContext> make_split_context(std::size_t n, SplitData split) {
  return std::make_shared<const SplitContext>(SplitContext{type_a(n), std::move(split)});
}

SemidirectElement psi_map(const std::shared_ptr<const SplitContext>& ctx, std::size_t i, std::size_t j,
                          const Value& xi) {
  const auto& sp = ctx->split;
  const std::size_t n = ctx->system->matrix_size();
  if (i == j || i >= n || j >= n) throw DomainError("psi_map: bad index pair");
  const Value pxi = sp.projection(xi);
  const Value xi_prime = sp.ring->sub(xi, sp.section(pxi));
  const RVector ei = RVector::basis(sp.ring, n, i);
  StWord kernel = X_gen(ei, RVector::basis(sp.ring, n, j).scaled(xi_prime), ei);
  return SemidirectElement(ctx, std::move(kernel), xij(sp.quotient, n, i, j, pxi));
}

// ---------------------------------------------------------------------------

TMapContext make_tmap_context(const RingHandle& base, const Value& a, const Ideal& ideal, unsigned cap) {
  if (!same_ring(ideal.ring(), base)) throw DomainError("t_map: ideal is not an ideal of the base ring");
  UniqueDivision check(ideal, a);  // throws unless I is uniquely a-divisible
  (void)check;
  return TMapContext{base, a, ideal, localization(base, a), cap};
}

namespace {

/// Lifts of y over lambda: per-coordinate fibers, optionally restricted to I.
std::vector<std::vector<Value>> coordinate_fibers(const TMapContext& ctx, const RVector& y, bool in_ideal) {
  std::vector<std::vector<Value>> fibers;
  fibers.reserve(y.size());
  for (const auto& c : y.entries) {
    auto f = ctx.loc.lambda.preimages(c);
    if (in_ideal) std::erase_if(f, [&](const Value& x) { return !ctx.ideal.contains(x); });
    fibers.push_back(std::move(f));
  }
  return fibers;
}

/// Calls visit(vector) over the product of fibers in lexicographic order until
/// it returns true; returns the number of combinations visited.
template <class Visit>
std::size_t for_each_lift(const RingHandle& B, const std::vector<std::vector<Value>>& fibers, std::size_t cap,
                          Visit&& visit, bool& found) {
  found = false;
  for (const auto& f : fibers)
    if (f.empty()) return 0;
  std::vector<std::size_t> idx(fibers.size(), 0);
  std::size_t visited = 0;
  while (visited < cap) {
    RVector v = RVector::zero(B, fibers.size());
    for (std::size_t k = 0; k < fibers.size(); ++k) v[k] = fibers[k][idx[k]];
    ++visited;
    if (visit(v)) {
      found = true;
      return visited;
    }
    std::size_t k = fibers.size();
    while (k > 0) {
      --k;
      if (++idx[k] < fibers[k].size()) break;
      idx[k] = 0;
      if (k == 0) return visited;
    }
    if (fibers.empty()) return visited;
  }
  return visited;
}

}  // namespace

TMapResult t_map(const TMapContext& ctx, const StarSymbol& gen) {
  const RingHandle& B = ctx.base;
  const RingHandle& Ba = ctx.loc.ring;
  const std::size_t n = gen.u.size();
  if (n < 4) throw DomainError("t_map needs n >= 4");
  if (!same_ring(gen.u.ring, Ba) || !same_ring(gen.v.ring, Ba))
    throw DomainError("t_map: generator vectors must lie over the localized ring");
  const bool is_f = gen.kind == StarSymbol::Kind::F;
  const RVector& nice = is_f ? gen.u : gen.v;
  const RVector& other = is_f ? gen.v : gen.u;
  require_orthogonal(gen.u, gen.v, "t_map");

  RVector w;
  if (gen.orbit) {
    if (!(phi(factors_word(Ba, n, *gen.orbit)) * RVector::basis(Ba, n, 0) == nice))
      throw DomainError("t_map: orbit witness does not produce the nice vector");
    w = contragredient_of(Ba, n, *gen.orbit) * RVector::basis(Ba, n, 0);
  } else if (gen.certificate) {
    w = *gen.certificate;
  } else {
    throw DomainError("t_map: generator carries no orbit witness or certificate");
  }
  if (!Ba->is_one(dot(w, nice))) throw DomainError("t_map: certificate w^t u != 1");

  // The I-vector lifts uniquely since lambda restricted to I is injective.
  const auto other_fibers = coordinate_fibers(ctx, other, true);
  RVector other_lift = RVector::zero(B, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (other_fibers[k].size() != 1)
      throw DomainError("t_map: coordinate " + std::to_string(k) + " of " + other.to_string() +
                        " has no unique lift into the ideal");
    other_lift[k] = other_fibers[k][0];
  }

  const Value lam_a = ctx.loc.lambda(ctx.a);
  for (unsigned m = 0; m <= ctx.cap; ++m) {
    const Value am_local = Ba->pow(lam_a, m);
    const Value a2m = B->pow(ctx.a, 2 * m);
    const auto nice_fibers = coordinate_fibers(ctx, nice.scaled(am_local), false);
    const auto w_fibers = coordinate_fibers(ctx, w.scaled(am_local), false);
    RVector nice_lift, w_lift;
    bool found = false;
    for_each_lift(
        B, nice_fibers, ctx.lift_cap,
        [&](const RVector& cand) {
          if (!B->is_zero(dot(cand, other_lift))) return false;
          bool inner = false;
          for_each_lift(
              B, w_fibers, ctx.lift_cap,
              [&](const RVector& wc) {
                if (!(dot(wc, cand) == a2m)) return false;
                w_lift = wc;
                return true;
              },
              inner);
          if (inner) nice_lift = cand;
          return inner;
        },
        found);
    if (!found) continue;

    // other / a^{3m} lies in D(nice_lift) through the certificate w~.
    UniqueDivision div3(ctx.ideal, B->pow(ctx.a, 3 * m));
    RVector reduced = RVector::zero(B, n);
    for (std::size_t k = 0; k < n; ++k) reduced[k] = div3.divide(other_lift[k]);
    TMapResult res;
    res.m = m;
    res.nice_lift = nice_lift;
    res.certificate_lift = w_lift;
    res.other_lift = other_lift;
    if (is_f) {
      res.datum = decompose_in_D(nice_lift, reduced, 2 * m, ctx.a, &ctx.ideal, &w_lift);
      res.word = X_tul(res.datum);
    } else {
      TulenbaevDatum d = decompose_in_D(nice_lift, reduced, 2 * m, ctx.a, &ctx.ideal, &w_lift);
      d.side = TulenbaevDatum::Side::y;
      res.datum = std::move(d);
      res.word = Y_tul(res.datum);
    }
    return res;
  }
  throw InconclusiveError("t_map: no lift found for m <= " + std::to_string(ctx.cap) + " for " + gen.to_string());
}

}  // namespace steinberg
