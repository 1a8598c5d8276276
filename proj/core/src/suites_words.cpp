// Suites on relations among words: Chevalley commutator relations, van der
// Kallen elements, Tulenbaev elements and the X = Y identity.

#include <algorithm>
#include <sstream>

#include "steinberg/roots.hpp"
#include "steinberg/star.hpp"
#include "steinberg/vdk.hpp"
#include "suite_util.hpp"

namespace steinberg::detail {

namespace {

std::vector<std::string> or_default(const std::vector<std::string>& v, std::vector<std::string> fallback) {
  return v.empty() ? fallback : v;
}

std::string root_string(const RootDatum& sys, std::size_t a) {
  std::ostringstream os;
  os << "(";
  const auto& r = sys.root(a);
  for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
  os << ")";
  return os.str();
}

std::string vec(const char* name, const RVector& v) { return std::string(" ") + name + "=" + v.to_string(); }
std::string val(const char* name, const RingHandle& R, const Value& x) {
  return std::string(" ") + name + "=" + R->format(x);
}

/// Visits tuples of ring elements of length k: all of R^k in lexicographic
/// order when exhaustive, otherwise `samples` random tuples.
template <class F>
void for_tuples(const RingHandle& R, std::size_t k, bool exhaustive, std::size_t samples, std::mt19937_64& rng,
                F&& visit) {
  std::vector<Value> t(k);
  if (!exhaustive) {
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& x : t) x = random_element(R, rng);
      visit(t);
    }
    return;
  }
  const auto elems = R->elements();
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) t[i] = elems[idx[i]];
    visit(t);
    std::size_t i = k;
    for (;;) {
      if (i == 0) return;
      --i;
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
  }
}

RVector slice(const RingHandle& R, const std::vector<Value>& t, std::size_t from, std::size_t n) {
  return RVector(R, std::vector<Value>(t.begin() + static_cast<long>(from), t.begin() + static_cast<long>(from + n)));
}

std::vector<Value> slice_values(const std::vector<Value>& t, std::size_t from, std::size_t n) {
  return {t.begin() + static_cast<long>(from), t.begin() + static_cast<long>(from + n)};
}

std::optional<RVector> solve_membership(const RVector& u, const Value& a) {
  auto s = lin_solve(u.ring, u.entries, a);
  if (s.status == SolveResult::Status::inconclusive) throw InconclusiveError("ideal membership undecided");
  if (!s) return std::nullopt;
  return RVector(u.ring, s.coefficients);
}

/// Builds the equality for a ring; on cap exhaustion records an
/// inconclusive check and returns null.
std::shared_ptr<const WordEquality> equality_or_report(SuiteContext& s, const RingHandle& R,
                                                       const std::string& prefix) {
  try {
    return equality_for(s.config.tier, s.config.n, R, s.config.caps);
  } catch (const InconclusiveError& e) {
    CheckBuilder b(prefix + "exact-table", "exact", true);
    b.inconclusive(e.what());
    s.add(b.finish());
    return nullptr;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

void suite_chevalley(SuiteContext& s) {
  const auto systems = or_default(s.config.systems, {"A3"});
  const auto rings = or_default(s.config.rings, {"z/6"});
  if (s.config.tier == "exact") s.warn("chevalley-relations compares matrices; the exact tier does not apply");
  for (const auto& sname : systems) {
    const auto sys = RootDatum::parse(sname);
    if (!sys->has_matrices()) {
      s.warn(sys->name() + " has no matrix realization; skipped");
      continue;
    }
    for (const auto& rspec : rings) {
      const auto R = make_ring(rspec);
      const bool exhaustive = R->is_finite();
      std::vector<Value> elems;
      if (exhaustive) {
        elems = R->elements();
      } else {
        elems.push_back(R->zero());
        for (std::size_t k = 0; k < s.samples(12); ++k) elems.push_back(R->sample(s.rng, 3));
      }
      const std::size_t nr = sys->size(), ne = elems.size(), m = sys->matrix_size();
      std::vector<std::vector<RMatrix>> U(nr, std::vector<RMatrix>(ne));
      for (std::size_t a = 0; a < nr; ++a)
        for (std::size_t k = 0; k < ne; ++k) U[a][k] = unipotent(*sys, a, elems[k], R);
      const std::string prefix = sys->name() + "/" + R->spec() + ":";
      auto where = [&](std::size_t a, std::size_t b, const Value& r, const Value& x) {
        return "ring=" + R->spec() + " system=" + sys->name() + " a=" + root_string(*sys, a) +
               " b=" + root_string(*sys, b) + val("r", R, r) + val("s", R, x);
      };

      CheckBuilder s1(prefix + "S1 additivity", "matrix", exhaustive);
      for (std::size_t a = 0; a < nr; ++a)
        for (std::size_t i = 0; i < ne; ++i)
          for (std::size_t j = 0; j < ne; ++j) {
            const RMatrix lhs = U[a][i] * U[a][j];
            s1.record(lhs == unipotent(*sys, a, R->add(elems[i], elems[j]), R),
                      [&] { return where(a, a, elems[i], elems[j]); });
          }
      s.add(s1.finish());

      CheckBuilder s2(prefix + "S2 commutator for a+b a root", "matrix", exhaustive);
      CheckBuilder s3(prefix + "S3 commutator for a+b not a root", "matrix", exhaustive);
      const RMatrix id = RMatrix::identity(R, m);
      for (std::size_t a = 0; a < nr; ++a)
        for (std::size_t b = 0; b < nr; ++b) {
          if (b == a || b == sys->negative(a)) continue;
          const auto sum = sys->sum(a, b);
          const int N = sum ? sys->structure_constant(a, b) : 0;
          for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < ne; ++j) {
              RMatrix c = id;
              c.right_unipotent(*sys, a, elems[i]);
              c.right_unipotent(*sys, b, elems[j]);
              c.right_unipotent(*sys, a, R->neg(elems[i]));
              c.right_unipotent(*sys, b, R->neg(elems[j]));
              auto witness = [&] { return where(a, b, elems[i], elems[j]); };
              if (sum) {
                const Value x = R->mul(R->from_int(N), R->mul(elems[i], elems[j]));
                const RMatrix expected =
                    exhaustive ? U[*sum][R->index_of(x)] : unipotent(*sys, *sum, x, R);
                s2.record(c == expected, witness);
              } else {
                s3.record(c.is_identity(), witness);
              }
            }
        }
      s.add(s2.finish());
      s.add(s3.finish());

      if (sys->family() == Family::D) {
        CheckBuilder form(prefix + "root unipotents preserve the hyperbolic form", "matrix", exhaustive);
        const RMatrix J = hyperbolic_gram(R, m);
        for (std::size_t a = 0; a < nr; ++a)
          for (std::size_t k = 0; k < ne; ++k)
            form.record(U[a][k].transpose() * J * U[a][k] == J, [&] {
              return "ring=" + R->spec() + " system=" + sys->name() + " a=" + root_string(*sys, a) +
                     val("r", R, elems[k]);
            });
        s.add(form.finish());
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_vdk(SuiteContext& s) {
  const auto rings = or_default(s.config.rings, {"f2", "f3", "z/6"});
  const std::size_t n = s.config.n;
  const std::size_t P = n * (n - 1) / 2;
  for (const auto& rspec : rings) {
    const auto R = make_ring(rspec);
    const std::string prefix = R->spec() + ":";
    const auto eq = equality_or_report(s, R, prefix);
    if (!eq) continue;
    const std::string tier = tier_name(eq->tier());
    const std::size_t samples = s.samples(1000);

    // x(u,v): matrix contract and independence of the index choice.
    {
      const bool exhaustive = power_size(R, 2.0 * n) <= 131072.0;
      CheckBuilder contract(prefix + "x(u,v) maps to 1 + u v^t", "matrix", exhaustive);
      CheckBuilder choice(prefix + "x(u,v) independent of the index choice", tier, exhaustive);
      auto visit = [&](const RVector& u, const RVector& v) {
        const auto choices = x_small_choices(u, v);
        if (choices.empty() || !R->is_zero(dot(u, v))) return false;
        const StWord w = x_small(u, v);
        contract.record(phi(w) == transvection(u, v),
                        [&] { return "ring=" + R->spec() + vec("u", u) + vec("v", v) + " word=" + w.to_string(); });
        for (const auto& [i, dual] : choices) {
          const StWord alt = x_small_at(u, v, i, dual);
          choice.record(eq->equal(w, alt), [&] {
            return words_witness(R, "u=" + u.to_string() + " v=" + v.to_string() + " index=" + std::to_string(i) +
                                        (dual ? " dual" : ""),
                                 w, alt);
          });
        }
        return true;
      };
      if (exhaustive) {
        const auto vs = all_vectors(R, n);
        for (const auto& u : vs)
          for (const auto& v : vs) visit(u, v);
      } else {
        std::uniform_int_distribution<std::size_t> pos(0, n - 1);
        for (std::size_t k = 0, tries = 0; k < samples && tries < 200 * samples + 1000; ++tries) {
          RVector u = random_vector(R, n, s.rng), v = random_vector(R, n, s.rng);
          if (tries % 2)
            v[pos(s.rng)] = R->zero();
          else
            u[pos(s.rng)] = R->zero();
          if (visit(u, v)) ++k;
        }
      }
      s.add(contract.finish());
      s.add(choice.finish());
    }

    // Canonical decomposition: sum u_pq = (w^t v) u, terms orthogonal to v
    // with at least two zero coordinates.
    {
      const bool exhaustive = power_size(R, 3.0 * n) <= 1048576.0;
      CheckBuilder canon(prefix + "canonical decomposition", "syntactic", exhaustive);
      auto visit = [&](const RVector& u, const RVector& v, const RVector& w) {
        const auto terms = canonical_terms(u, v, w);
        RVector sum = RVector::zero(R, n);
        bool ok = true;
        for (const auto& t : terms) {
          sum = sum + t;
          ok = ok && R->is_zero(dot(t, v)) && t.zero_count() >= 2;
        }
        ok = ok && sum == u.scaled(dot(w, v));
        canon.record(ok, [&] { return "ring=" + R->spec() + vec("u", u) + vec("v", v) + vec("w", w); });
      };
      if (exhaustive) {
        const auto vs = all_vectors(R, n);
        for (const auto& v : vs)
          for (const auto& u : vs) {
            if (!R->is_zero(dot(u, v))) continue;
            for (const auto& w : vs) visit(u, v, w);
          }
      } else {
        for (std::size_t k = 0; k < samples; ++k) {
          const RVector v = random_vector(R, n, s.rng), w = random_vector(R, n, s.rng);
          std::vector<Value> c(P);
          for (auto& x : c) x = random_element(R, s.rng);
          RVector u = RVector::zero(R, n);
          for (const auto& t : pair_terms_of(v, c)) u = u + t;
          visit(u, v, w);
        }
      }
      canon.note("u orthogonal to v, w arbitrary");
      s.add(canon.finish());
    }

    // X(u,v) and Y(u,v): independence of the certificate, matrix contract.
    for (const bool x_side : {true, false}) {
      const std::string gen = x_side ? "X(u,v)" : "Y(u,v)";
      const bool exhaustive = power_size(R, 3.0 * n) <= 8192.0;
      CheckBuilder contract(prefix + gen + " maps to 1 + u v^t", "matrix", exhaustive);
      CheckBuilder indep(prefix + gen + " independent of the certificate", tier, exhaustive);
      // nice: the unimodular vector; other: orthogonal to it.
      auto visit = [&](const RVector& nice, const RVector& other, const std::vector<RVector>& certs) {
        const RVector& u = x_side ? nice : other;
        const RVector& v = x_side ? other : nice;
        auto make = [&](const RVector& w) { return x_side ? X_gen(u, v, w) : Y_gen(u, v, w); };
        const StWord first = make(certs.front());
        contract.record(phi(first) == transvection(u, v),
                        [&] { return "ring=" + R->spec() + vec("u", u) + vec("v", v) + vec("w", certs.front()); });
        for (std::size_t k = 1; k < certs.size(); ++k) {
          const StWord alt = make(certs[k]);
          indep.record(eq->equal(first, alt), [&] {
            return words_witness(R, "u=" + u.to_string() + " v=" + v.to_string() + " w=" +
                                        certs.front().to_string() + " w'=" + certs[k].to_string(),
                                 first, alt);
          });
        }
      };
      if (exhaustive) {
        const auto vs = all_vectors(R, n);
        for (const auto& nice : vs) {
          std::vector<RVector> certs;
          for (const auto& w : vs)
            if (R->is_one(dot(w, nice))) certs.push_back(w);
          if (certs.empty()) continue;
          for (const auto& other : vs)
            if (R->is_zero(dot(nice, other))) visit(nice, other, certs);
        }
      } else {
        for (std::size_t k = 0, tries = 0; k < samples && tries < 50 * samples + 100; ++tries) {
          const RVector nice = random_vector(R, n, s.rng);
          const auto w0 = is_unimodular(nice);
          if (!w0) continue;
          ++k;
          auto perp = [&] {
            std::vector<Value> c(P);
            for (auto& x : c) x = random_element(R, s.rng);
            RVector t = RVector::zero(R, n);
            for (const auto& term : pair_terms_of(nice, c)) t = t + term;
            return t;
          };
          std::vector<RVector> certs{*w0, *w0 + perp(), *w0 + perp()};
          visit(nice, perp(), certs);
        }
      }
      s.add(contract.finish());
      s.add(indep.finish());
    }

    // Both evaluations of [Y(-e3,e2), X(e1,e3a)].
    {
      const bool exhaustive = R->is_finite();
      std::vector<Value> as = exhaustive ? R->elements() : std::vector<Value>{};
      if (!exhaustive)
        for (std::size_t k = 0; k < std::min<std::size_t>(samples, 50); ++k) as.push_back(R->sample(s.rng, 3));
      std::map<std::string, CheckBuilder> by_path;
      std::vector<std::string> order;
      for (const auto& a : as)
        for (const auto& pc : xy_commutator_paths(R, n, a)) {
          auto it = by_path.find(pc.name);
          if (it == by_path.end()) {
            it = by_path.emplace(pc.name, CheckBuilder(prefix + "XY commutator: " + pc.name, tier, exhaustive)).first;
            order.push_back(pc.name);
          }
          it->second.record(eq->equal(pc.lhs, pc.rhs),
                            [&] { return words_witness(R, "a=" + R->format(a), pc.lhs, pc.rhs); });
        }
      for (const auto& name : order) s.add(by_path.at(name).finish());
    }

    // X(Me1, M^*e2 a) = Y(Me1 a, M^*e2) for M in E(n,R).
    {
      bool all = false;
      const auto Ms = elementary_sample(R, n, std::min<std::size_t>(samples, 300), 6, s.rng, all);
      const bool all_a = all && R->is_finite();
      CheckBuilder xy(prefix + "X(Me1, M*e2 a) = Y(Me1 a, M*e2)", tier, all_a);
      for (const auto& f : Ms) {
        const StWord Mw = factors_word(R, n, f);
        const RMatrix M = phi(Mw), Ms_ = phi(contragredient(Mw));
        RVector me1 = RVector::zero(R, n), me2 = me1, ms1 = me1, ms2 = me1;
        for (std::size_t i = 0; i < n; ++i) {
          me1[i] = M(i, 0);
          me2[i] = M(i, 1);
          ms1[i] = Ms_(i, 0);
          ms2[i] = Ms_(i, 1);
        }
        std::vector<Value> as;
        if (all_a)
          as = R->elements();
        else
          as.push_back(random_element(R, s.rng));
        for (const auto& a : as) {
          const StWord lhs = X_gen(me1, ms2.scaled(a), ms1);
          const StWord rhs = Y_gen(me1.scaled(a), ms2, me2);
          xy.record(eq->equal(lhs, rhs), [&] {
            return words_witness(R, "M=" + M.to_string() + " a=" + R->format(a), lhs, rhs);
          });
        }
      }
      s.add(xy.finish());
    }
  }
}

// ---------------------------------------------------------------------------

void suite_tulenbaev(SuiteContext& s) {
  const auto rings = or_default(s.config.rings, {"f2", "z/4", "z/6"});
  const std::size_t n = s.config.n;
  const std::size_t P = n * (n - 1) / 2;
  for (const auto& rspec : rings) {
    const auto R = make_ring(rspec);
    const std::string prefix = R->spec() + ":";
    const auto eq = equality_or_report(s, R, prefix);
    if (!eq) continue;
    const std::string tier = tier_name(eq->tier());
    const std::size_t samples = s.samples(300);

    for (const bool x_side : {true, false}) {
      const std::string L = x_side ? "X" : "Y";
      auto datum = [&](const RVector& fixed, std::vector<RVector> terms, const Value& a, const RVector& z) {
        return x_side ? x_datum_from_terms(fixed, std::move(terms), a, z)
                      : y_datum_from_terms(fixed, std::move(terms), a, z);
      };
      auto word = [&](const TulenbaevDatum& d) {
        d.validate();
        return x_side ? X_tul(d) : Y_tul(d);
      };
      auto scale_all = [&](std::vector<RVector> terms, const Value& c) {
        for (auto& t : terms) t = t.scaled(c);
        return terms;
      };

      // Tuple layout: fixed vector (n), a, coefficients (P), c.
      const std::size_t k_ab = n + 1 + P + 1;
      const bool ex_ab = power_size(R, double(k_ab)) <= 8192.0;

      // (a) scalar moves between the vector and the multiplier.
      CheckBuilder ca(prefix + L + " lemma (a): scalar c moves into the multiplier", tier, ex_ab);
      // (b) scaling the fixed vector.
      CheckBuilder cb(prefix + L + " lemma (b): scaling the fixed vector", tier, ex_ab);
      for_tuples(R, k_ab, ex_ab, samples, s.rng, [&](const std::vector<Value>& t) {
        const RVector f = slice(R, t, 0, n);
        const Value& a = t[n];
        const auto coeffs = slice_values(t, n + 1, P);
        const Value& c = t[n + 1 + P];
        const auto z = solve_membership(f, a);
        if (!z) return;
        const auto terms = pair_terms_of(f, coeffs);
        const Value ca_ = R->mul(c, a);
        {
          const StWord lhs = word(datum(f, scale_all(terms, c), a, *z));
          const StWord rhs = word(datum(f, terms, ca_, z->scaled(c)));
          ca.record(eq->equal(lhs, rhs), [&] {
            return words_witness(R, "fixed=" + f.to_string() + " a=" + R->format(a) + " c=" + R->format(c), lhs, rhs);
          });
        }
        {
          const StWord lhs = word(datum(f.scaled(c), terms, ca_, *z));
          const StWord rhs = word(datum(f, scale_all(terms, R->mul(c, c)), a, *z));
          cb.record(eq->equal(lhs, rhs), [&] {
            return words_witness(R, "fixed=" + f.to_string() + " a=" + R->format(a) + " c=" + R->format(c), lhs, rhs);
          });
        }
      });
      s.add(ca.finish());
      s.add(cb.finish());

      // (c) additivity, with the sum decomposed by merged coefficients.
      const std::size_t k_c = n + 1 + 2 * P;
      const bool ex_c = power_size(R, double(k_c)) <= 131072.0;
      CheckBuilder cc(prefix + L + " lemma (c): additivity in the split vector", tier, ex_c);
      for_tuples(R, k_c, ex_c, samples, s.rng, [&](const std::vector<Value>& t) {
        const RVector f = slice(R, t, 0, n);
        const Value& a = t[n];
        const auto c1 = slice_values(t, n + 1, P), c2 = slice_values(t, n + 1 + P, P);
        const auto z = solve_membership(f, a);
        if (!z) return;
        std::vector<Value> merged(P);
        for (std::size_t k = 0; k < P; ++k) merged[k] = R->add(c1[k], c2[k]);
        const StWord lhs = word(datum(f, pair_terms_of(f, c1), a, *z)) * word(datum(f, pair_terms_of(f, c2), a, *z));
        const StWord rhs = word(datum(f, pair_terms_of(f, merged), a, *z));
        cc.record(eq->equal(lhs, rhs), [&] {
          return words_witness(R, "fixed=" + f.to_string() + " a=" + R->format(a), lhs, rhs);
        });
      });
      s.add(cc.finish());

      // (d) conjugation by g.  Tuple layout: fixed (n), a, coefficients of
      // w (P), b; g runs over the generators x_ij(r), r != 0, or is random.
      const std::size_t k_d = n + 1 + P + 1;
      const double gens = R->is_finite() ? double(n * (n - 1) * (R->size() - 1)) : 0.0;
      const bool ex_d = power_size(R, double(k_d)) * gens <= 65536.0;
      CheckBuilder cd(prefix + L + " lemma (d): conjugation", tier, ex_d);
      auto conj_instance = [&](const std::vector<Value>& t, const StWord& g) {
        const RVector f = slice(R, t, 0, n);
        const Value& a = t[n];
        const auto coeffs = slice_values(t, n + 1, P);
        const Value& b = t[n + 1 + P];
        const auto z = solve_membership(f, a);
        const auto zb = solve_membership(f, b);
        if (!z || !zb) return;
        RVector w = RVector::zero(R, n);
        for (const auto& term : pair_terms_of(f, coeffs)) w = w + term;
        const RMatrix N = phi(g), Ns = phi(contragredient(g));
        StWord lhs, rhs;
        if (x_side) {
          lhs = g.conjugate(word(datum(f, canonical_terms(w, f, *zb), a, *z)));
          const RVector f2 = N * f;
          rhs = word(datum(f2, canonical_terms(Ns * w, f2, Ns * *zb), a, Ns * *z));
        } else {
          lhs = g.conjugate(word(datum(f, canonical_terms(w, f, *zb), a, *z)));
          const RVector f2 = Ns * f;
          rhs = word(datum(f2, canonical_terms(N * w, f2, N * *zb), a, N * *z));
        }
        cd.record(eq->equal(lhs, rhs), [&] {
          return words_witness(R,
                               "fixed=" + f.to_string() + " w=" + w.to_string() + " a=" + R->format(a) +
                                   " b=" + R->format(b) + " g=" + g.to_string(),
                               lhs, rhs);
        });
      };
      if (ex_d) {
        std::vector<StWord> gs;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (i != j)
              for (const auto& r : R->elements())
                if (!R->is_zero(r)) gs.push_back(xij(R, n, i, j, r));
        for (const auto& g : gs) for_tuples(R, k_d, true, 0, s.rng, [&](const auto& t) { conj_instance(t, g); });
        cd.note("g over all elementary generators");
      } else {
        for_tuples(R, k_d, false, samples, s.rng,
                   [&](const auto& t) { conj_instance(t, random_elementary(R, n, 3, s.rng)); });
        cd.note("g random products of three elementary generators");
      }
      s.add(cd.finish());
    }
  }
}

// ---------------------------------------------------------------------------

void suite_xeqy(SuiteContext& s) {
  const auto rings = or_default(s.config.rings, {"f2", "z/6"});
  const std::size_t n = s.config.n;
  for (const auto& rspec : rings) {
    const auto R = make_ring(rspec);
    const std::string prefix = R->spec() + ":";
    const auto eq = equality_or_report(s, R, prefix);
    if (!eq) continue;
    const std::string tier = tier_name(eq->tier());
    const std::size_t samples = s.samples(500);
    if (!R->is_finite()) {
      s.warn("xeqy enumerates candidate vectors and needs a finite ring; skipped " + R->spec());
      continue;
    }
    const auto vs = all_vectors(R, n);
    const bool exhaustive = power_size(R, 4.0 * n) <= 65536.0;

    std::map<std::string, CheckBuilder> by_path;
    std::vector<std::string> order;
    CheckBuilder hyp(prefix + "xeqy hypotheses hold for every instance", "syntactic", exhaustive);
    auto run = [&](const RVector& x, const RVector& y, const RVector& u, const RVector& v, const Value& r) {
      const Value b = dot(x, y);
      const auto zu = solve_membership(u, b);
      const auto zv = solve_membership(v, b);
      if (!zu || !zv) return false;
      std::vector<PathCheck> paths;
      bool ok = true;
      try {
        paths = xeqy_paths(x, y, u, v, b, r, *zu, *zv);
      } catch (const DomainError&) {
        ok = false;
      }
      hyp.record(ok, [&] { return "ring=" + R->spec() + vec("x", x) + vec("y", y) + vec("u", u) + vec("v", v); });
      for (const auto& pc : paths) {
        auto it = by_path.find(pc.name);
        if (it == by_path.end()) {
          it = by_path.emplace(pc.name, CheckBuilder(prefix + "xeqy: " + pc.name, tier, exhaustive)).first;
          order.push_back(pc.name);
        }
        it->second.record(eq->equal(pc.lhs, pc.rhs), [&] {
          return words_witness(R,
                               "x=" + x.to_string() + " y=" + y.to_string() + " u=" + u.to_string() +
                                   " v=" + v.to_string() + " b=" + R->format(b) + " r=" + R->format(r),
                               pc.lhs, pc.rhs);
        });
      }
      return true;
    };

    if (exhaustive) {
      const auto elems = R->elements();
      for (const auto& u : vs)
        for (const auto& v : vs) {
          if (!R->is_zero(dot(u, v))) continue;
          std::vector<const RVector*> perp;
          for (const auto& p : vs)
            if (R->is_zero(dot(p, u)) && R->is_zero(dot(p, v))) perp.push_back(&p);
          for (const auto* x : perp)
            for (const auto* y : perp)
              for (const auto& r : elems) run(*x, *y, u, v, r);
        }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
      for (std::size_t k = 0, tries = 0; k < samples && tries < 200 * samples + 1000; ++tries) {
        const RVector& u = vs[pick(s.rng)];
        std::vector<const RVector*> vperp;
        for (const auto& p : vs)
          if (R->is_zero(dot(p, u))) vperp.push_back(&p);
        const RVector& v = *vperp[std::uniform_int_distribution<std::size_t>(0, vperp.size() - 1)(s.rng)];
        std::vector<const RVector*> perp;
        for (const auto* p : vperp)
          if (R->is_zero(dot(*p, v))) perp.push_back(p);
        std::uniform_int_distribution<std::size_t> pp(0, perp.size() - 1);
        const RVector& x = *perp[pp(s.rng)];
        const RVector& y = *perp[pp(s.rng)];
        if (R->is_zero(dot(x, y))) continue;  // b = 0 makes every path trivial
        if (run(x, y, u, v, random_element(R, s.rng))) ++k;
      }
    }
    s.add(hyp.finish());
    for (const auto& name : order) s.add(by_path.at(name).finish());
  }
}

}  // namespace steinberg::detail
