// Suites on presented groups: St*(n,R,I) through iota, the map psi into the
// semidirect product, K2 tables, relative generation, the amalgam and the
// lifting map T.

#include <algorithm>
#include <set>

#include "steinberg/roots.hpp"
#include "steinberg/star.hpp"
#include "steinberg/vdk.hpp"
#include "suite_util.hpp"

namespace steinberg::detail {

namespace {

const char* const kDualNumbers = "quo(poly(f2,X),X^2)";

std::vector<std::string> or_default(const std::vector<std::string>& v, std::vector<std::string> fallback) {
  return v.empty() ? fallback : v;
}

/// The configured ideal, or the ideal (X) of the dual numbers, or R.
Ideal configured_ideal(const SuiteContext& s, const RingHandle& R) {
  if (s.config.ideal) return Ideal::generated(R, {R->parse(*s.config.ideal)});
  if (R->spec() == make_ring(kDualNumbers)->spec()) return Ideal::generated(R, {R->parse("[0,1]")});
  return Ideal::whole(R);
}

RVector column(const RMatrix& m, std::size_t j) {
  RVector v = RVector::zero(m.ring(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = m(i, j);
  return v;
}

std::string letters_string(const std::vector<StarLetter>& ls) {
  std::string out;
  for (const auto& l : ls) {
    if (!out.empty()) out += " ";
    out += l.symbol.to_string();
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

void suite_star(SuiteContext& s) {
  const auto rings = or_default(s.config.rings, {kDualNumbers});
  const std::size_t n = s.config.n;
  for (const auto& rspec : rings) {
    const auto R = make_ring(rspec);
    if (!R->is_finite()) {
      s.warn("star-presentation enumerates generator domains and needs a finite ring; skipped " + R->spec());
      continue;
    }
    const Ideal I = configured_ideal(s, R);
    const std::string prefix = R->spec() + " I=" + I.description() + ":";
    std::shared_ptr<const WordEquality> eq;
    try {
      eq = equality_for(s.config.tier, n, R, s.config.caps);
    } catch (const InconclusiveError& e) {
      CheckBuilder b(prefix + "exact-table", "exact", true);
      b.inconclusive(e.what());
      s.add(b.finish());
      continue;
    }
    const std::string tier = tier_name(eq->tier());
    const std::size_t limit = s.samples(2000);
    StarDomain d;
    try {
      d = star_domain(I, n, s.config.caps.max_cosets);
    } catch (const InconclusiveError& e) {
      CheckBuilder b(prefix + "generator domain", "syntactic", false);
      b.inconclusive(e.what());
      s.add(b.finish());
      continue;
    }

    // iota(F(u,v)) and iota(S(u,v)) map to t(u,v).
    {
      std::size_t total = 0;
      for (const auto& o : d.orthogonal) total += o.size();
      const bool exhaustive = total <= limit;
      CheckBuilder cf(prefix + "iota(F(u,v)) maps to t(u,v)", "matrix", exhaustive);
      CheckBuilder cs(prefix + "iota(S(u,v)) maps to t(u,v)", "matrix", exhaustive);
      auto visit = [&](std::size_t k, std::size_t i) {
        const auto& ov = d.orbit[k];
        const RVector& p = d.ideal_vecs[d.orthogonal[k][i]];
        const StarSymbol F{StarSymbol::Kind::F, ov.u, p, ov.certificate, ov.factors};
        const StarSymbol S{StarSymbol::Kind::S, p, ov.u, ov.certificate, ov.factors};
        cf.record(phi(iota(F)) == transvection(ov.u, p), [&] { return "ring=" + R->spec() + " " + F.to_string(); });
        cs.record(phi(iota(S)) == transvection(p, ov.u), [&] { return "ring=" + R->spec() + " " + S.to_string(); });
      };
      if (exhaustive) {
        for (std::size_t k = 0; k < d.orbit.size(); ++k)
          for (std::size_t i = 0; i < d.orthogonal[k].size(); ++i) visit(k, i);
      } else {
        std::uniform_int_distribution<std::size_t> pk(0, d.orbit.size() - 1);
        for (std::size_t t = 0; t < limit; ++t) {
          const auto k = pk(s.rng);
          visit(k, std::uniform_int_distribution<std::size_t>(0, d.orthogonal[k].size() - 1)(s.rng));
        }
      }
      s.add(cf.finish());
      s.add(cs.finish());
    }

    const std::vector<std::pair<std::string, std::string>> families = {
        {"R1", "R1 F(u,v)F(u,w) = F(u,v+w)"},
        {"R2", "R2 S(u,v)S(w,v) = S(u+w,v)"},
        {"R3", "R3 F conjugation"},
        {"R4", "R4 F(u,va) = S(ua,v)"},
        {"T3'", "T3' X(Me1 r + Me2, M*e3 a) = X(Me1, M*e3 ar) X(Me2, M*e3 a)"},
    };
    for (const auto& [fam, title] : families) {
      bool exhaustive = false;
      const auto rels = star_relators(d, fam, limit, s.rng, exhaustive);
      CheckBuilder b(prefix + title + " under iota", tier, exhaustive);
      for (const auto& r : rels) {
        const StWord lhs = iota_word(r.lhs, n, R), rhs = iota_word(r.rhs, n, R);
        b.record(eq->equal(lhs, rhs), [&] {
          return words_witness(R, letters_string(r.lhs) + " = " + letters_string(r.rhs), lhs, rhs);
        });
      }
      s.add(b.finish());
    }
  }
}

// ---------------------------------------------------------------------------

void suite_psi(SuiteContext& s) {
  const auto rings = or_default(s.config.rings, {kDualNumbers});
  const std::size_t n = s.config.n;
  if (s.config.tier == "exact") s.warn("psi-s-relations compares matrices of both components; exact tier not applied");
  const MatrixEquality meq;
  for (const auto& rspec : rings) {
    const auto R = make_ring(rspec);
    if (!R->is_finite()) {
      s.warn("psi-s-relations enumerates generators and needs a finite ring; skipped " + R->spec());
      continue;
    }
    const Ideal I = configured_ideal(s, R);
    auto split = splitting_section(I);
    if (!split) {
      s.warn("ideal " + I.description() + " of " + R->spec() + " has no splitting section; skipped");
      continue;
    }
    const auto ctx = make_split_context(n, *split);
    const auto& Q = split->quotient;
    const auto& pi = split->projection;
    const auto& sigma = split->section;
    const std::string prefix = R->spec() + " I=" + I.description() + ":";
    const auto elems = R->elements();
    const std::size_t ne = elems.size();

    struct Gen {
      std::size_t i, j, k;  // k: index into elems
    };
    std::vector<Gen> gens;
    std::vector<SemidirectElement> images;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          for (std::size_t k = 0; k < ne; ++k) {
            gens.push_back({i, j, k});
            images.push_back(psi_map(ctx, i, j, elems[k]));
          }
    auto image = [&](std::size_t i, std::size_t j, const Value& x) {
      const std::size_t pair = i * (n - 1) + (j < i ? j : j - 1);
      return images[pair * ne + R->index_of(x)];
    };
    auto same = [&](const SemidirectElement& a, const SemidirectElement& b) {
      return meq.equal(a.kernel(), b.kernel()) && meq.equal(a.quotient(), b.quotient());
    };
    auto show = [&](const SemidirectElement& a) {
      return "(" + a.kernel().to_string() + " ; " + a.quotient().to_string() + ")";
    };
    auto gen_name = [&](std::size_t i, std::size_t j, const Value& x) {
      return "x_" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + R->format(x) + ")";
    };
    const SemidirectElement unit(ctx, empty_word(ctx->system, R), empty_word(ctx->system, Q));

    CheckBuilder s1(prefix + "psi preserves S1", "matrix", true);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const auto& x : elems)
          for (const auto& y : elems) {
            const auto lhs = image(i, j, x) * image(i, j, y);
            const auto rhs = image(i, j, R->add(x, y));
            s1.record(same(lhs, rhs), [&] {
              return "ring=" + R->spec() + " " + gen_name(i, j, x) + " " + gen_name(i, j, y) + " lhs=" + show(lhs) +
                     " rhs=" + show(rhs);
            });
          }
      }
    s.add(s1.finish());

    CheckBuilder s2(prefix + "psi preserves S2", "matrix", true);
    CheckBuilder chain(prefix + "commutator of psi images equals the expanded product", "matrix", true);
    CheckBuilder simple(prefix + "expanded product simplifies to psi(x_ik(xi eta))", "matrix", true);
    CheckBuilder coeff(prefix + "xi'eta' + pi(xi)eta' + pi(eta)xi' = xi eta - pi(xi eta)", "syntactic", true);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          const RVector ei = RVector::basis(R, n, i), ej = RVector::basis(R, n, j), ek = RVector::basis(R, n, k);
          for (const auto& x : elems)
            for (const auto& y : elems) {
              const auto c = SemidirectElement::commutator(image(i, j, x), image(j, k, y));
              const auto target = image(i, k, R->mul(x, y));
              auto where = [&] { return "ring=" + R->spec() + " " + gen_name(i, j, x) + " " + gen_name(j, k, y); };
              s2.record(same(c, target), [&] { return where() + " lhs=" + show(c) + " rhs=" + show(target); });

              const Value px = sigma(pi(x)), py = sigma(pi(y));
              const Value xp = R->sub(x, px), yp = R->sub(y, py);
              const StWord expanded = X_gen(ei, ej.scaled(xp)) * X_gen(ej + ei.scaled(px), ek.scaled(yp)) *
                                      X_gen(ei, ek.scaled(R->mul(py, xp)) - ej.scaled(xp)) *
                                      X_gen(ej, (-ek).scaled(yp));
              const StWord q = xij(Q, n, i, k, pi(R->mul(x, y)));
              chain.record(meq.equal(c.kernel(), expanded) && meq.equal(c.quotient(), q), [&] {
                return where() + " kernel=" + c.kernel().to_string() + " expanded=" + expanded.to_string();
              });

              const Value inner = R->add(R->add(R->mul(xp, yp), R->mul(px, yp)), R->mul(py, xp));
              const Value xy = R->mul(x, y);
              coeff.record(inner == R->sub(xy, sigma(pi(xy))), [&] { return where(); });
              const StWord simplified =
                  X_gen(ej, ek.scaled(yp)) * X_gen(ei, ek.scaled(inner)) * X_gen(ej, (-ek).scaled(yp));
              simple.record(meq.equal(expanded, simplified) && meq.equal(simplified, target.kernel()), [&] {
                return where() + " expanded=" + expanded.to_string() + " simplified=" + simplified.to_string();
              });
            }
        }
    s.add(s2.finish());
    s.add(chain.finish());
    s.add(coeff.finish());
    s.add(simple.finish());

    CheckBuilder s3(prefix + "psi preserves S3", "matrix", true);
    CheckBuilder formula(prefix + "semidirect commutator formula equals multiplication", "matrix", true);
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b) {
        const auto& g = gens[a];
        const auto& h = gens[b];
        auto where = [&] {
          return "ring=" + R->spec() + " " + gen_name(g.i, g.j, elems[g.k]) + " " + gen_name(h.i, h.j, elems[h.k]);
        };
        const auto c = SemidirectElement::commutator(images[a], images[b]);
        const auto f = semidirect_commutator(images[a], images[b]);
        formula.record(same(c, f), [&] { return where() + " product=" + show(c) + " formula=" + show(f); });
        if (g.j != h.i && g.i != h.j)
          s3.record(same(c, unit), [&] { return where() + " commutator=" + show(c); });
      }
    s.add(s3.finish());
    s.add(formula.finish());
  }
}

// ---------------------------------------------------------------------------

void suite_k2(SuiteContext& s) {
  const auto systems = or_default(s.config.systems, {"A2"});
  const auto rings = or_default(s.config.rings, {"f2"});
  if (s.config.tier == "matrix") s.warn("k2-exact always uses coset tables");
  for (const auto& sname : systems)
    for (const auto& rspec : rings) {
      const auto sys = RootDatum::parse(sname);
      const auto R = make_ring(rspec);
      const std::string prefix = sys->name() + "/" + R->spec() + ":";
      std::shared_ptr<const SteinbergTable> t;
      try {
        t = cached_table(sys, R, s.config.caps);
      } catch (const InconclusiveError& e) {
        CheckBuilder b(prefix + "enumeration of St", "exact", true);
        b.inconclusive(e.what());
        s.add(b.finish());
        continue;
      }
      const auto& sp = *t->presentation;
      const std::size_t q1 = R->size() - 1, roots = sys->size();

      CheckBuilder counts(prefix + "generator and relator counts match the closed form", "syntactic", true);
      counts.record(sp.presentation.columns() == roots * q1, [&] {
        return "generators=" + std::to_string(sp.presentation.columns()) + " expected " + std::to_string(roots * q1);
      });
      const std::size_t rel = roots * q1 * q1 + roots * (roots - 2) * q1 * q1;
      counts.record(sp.presentation.relators.size() == rel, [&] {
        return "relators=" + std::to_string(sp.presentation.relators.size()) + " expected " + std::to_string(rel);
      });
      s.add(counts.finish());

      CheckBuilder sound(prefix + "coset table soundness", "exact", true);
      const auto bad = t->table.verify(sp.presentation);
      sound.record(!bad, [&] { return *bad; });
      sound.data()["st_order"] = t->table.size();
      sound.data()["cosets_defined"] = t->stats.defined;
      sound.data()["max_live"] = t->stats.max_live;
      s.add(sound.finish());

      if (!sys->has_matrices()) {
        s.warn(sys->name() + " has no matrix realization; K2 extraction skipped");
        continue;
      }
      const KernelReport k = k2_compute(*t);
      CheckBuilder fac(prefix + "st_order = kernel_order x image_order", "exact", true);
      fac.record(k.st_order == k.kernel_order * k.image_order, [&] {
        return "st=" + std::to_string(k.st_order) + " kernel=" + std::to_string(k.kernel_order) +
               " image=" + std::to_string(k.image_order);
      });
      fac.data()["st_order"] = k.st_order;
      fac.data()["kernel_order"] = k.kernel_order;
      fac.data()["image_order"] = k.image_order;
      s.add(fac.finish());

      CheckBuilder bfs(prefix + "image order equals |E(Phi,R)| by matrix search", "matrix", true);
      const std::size_t order = matrix_group_order(*sys, R);
      bfs.record(order == k.image_order, [&] {
        return "image=" + std::to_string(k.image_order) + " bfs=" + std::to_string(order);
      });
      bfs.data()["matrix_group_order"] = order;
      s.add(bfs.finish());

      CheckBuilder central(prefix + "kernel is central", "exact", true);
      std::set<std::pair<std::size_t, std::size_t>> bad_pairs(k.witnesses.begin(), k.witnesses.end());
      for (auto g : k.kernel_cosets)
        for (std::size_t c = 0; c < t->table.columns(); ++c)
          central.record(!bad_pairs.count({g, c}), [&] {
            return "kernel coset " + std::to_string(g) + " fails to commute with " + sp.presentation.names[c];
          });
      s.add(central.finish());

      CheckBuilder fibers(prefix + "every fiber of phi has kernel_order cosets", "exact", true);
      fibers.record(k.fibers_uniform, [] { return std::string("non-uniform fibers"); });
      s.add(fibers.finish());
    }
}

void suite_relative(SuiteContext& s) {
  const auto systems = or_default(s.config.systems, {"A2"});
  const auto rings = or_default(s.config.rings, {kDualNumbers});
  for (const auto& sname : systems)
    for (const auto& rspec : rings) {
      const auto sys = RootDatum::parse(sname);
      const auto R = make_ring(rspec);
      const Ideal I = configured_ideal(s, R);
      const std::string prefix = sys->name() + "/" + R->spec() + " I=" + I.description() + ":";
      CheckBuilder b(prefix + "index of <z_a(s,r)> equals |St(Phi,R/I)|", "exact", true);
      try {
        const auto rep = relative_subgroup_index(sys, I, s.config.caps);
        b.record(rep.index == rep.quotient_order, [&] {
          return "index=" + std::to_string(rep.index) + " quotient order=" + std::to_string(rep.quotient_order);
        });
        b.data()["index"] = rep.index;
        b.data()["quotient_order"] = rep.quotient_order;
        b.data()["quotient"] = rep.quotient_spec;
        b.data()["subgroup_generators"] = rep.subgroup_generators;
      } catch (const InconclusiveError& e) {
        b.inconclusive(e.what());
      }
      s.add(b.finish());
    }
}

void suite_amalgam(SuiteContext& s) {
  const auto systems = or_default(s.config.systems, {"D4"});
  const auto rings = or_default(s.config.rings, {kDualNumbers});
  const MatrixEquality meq;
  for (const auto& sname : systems)
    for (const auto& rspec : rings) {
      const auto sys = RootDatum::parse(sname);
      const auto R = make_ring(rspec);
      const Ideal I = configured_ideal(s, R);
      const std::string prefix = sys->name() + "/" + R->spec() + " I=" + I.description() + ":";
      const auto p = amalgam_presentation(sys, I);

      std::shared_ptr<const WordEquality> exact;
      if (s.config.tier != "matrix") {
        const bool affordable = power_size(R, double(sys->size() / 2 + sys->rank())) <= 65536.0;
        if (s.config.tier == "exact" || affordable) {
          try {
            exact = std::make_shared<ExactEquality>(cached_table(sys, R, s.config.caps));
          } catch (const InconclusiveError& e) {
            s.warn("no exact table for " + sys->name() + " over " + R->spec() + ": " + e.what());
          }
        }
      }

      auto check = [&](const std::string& title, const std::vector<AmalgamRelator>& rels) {
        CheckBuilder b(prefix + title, "matrix", true);
        for (const auto& rel : rels) {
          const StWord w = canonical_image(p, rel);
          b.record(meq.is_identity(w), [&] { return "ring=" + R->spec() + " " + rel.family + " " + w.to_string(); });
        }
        s.add(b.finish());
        if (exact) {
          CheckBuilder e(prefix + title + " (exact)", "exact", true);
          for (const auto& rel : rels) {
            const StWord w = canonical_image(p, rel);
            e.record(exact->is_identity(w), [&] { return "ring=" + R->spec() + " " + rel.family + " " + w.to_string(); });
          }
          s.add(e.finish());
        }
      };
      check("factor relators map to 1", p.factor_relators);
      check("gluing relators map to 1", p.gluing_relators);

      const auto cov = amalgam_coverage(p);
      CheckBuilder c(prefix + "every z_a(s,r) is a factor generator", "syntactic", true);
      for (std::size_t a = 0; a < sys->size(); ++a) {
        const bool hit = std::find(cov.uncovered_roots.begin(), cov.uncovered_roots.end(), a) ==
                         cov.uncovered_roots.end();
        c.record(hit, [&] { return "root " + std::to_string(a) + " lies in no A3 subsystem"; });
      }
      c.data()["factors"] = p.factors.size();
      c.data()["generators"] = p.generators;
      c.data()["covered"] = cov.covered;
      c.data()["total"] = cov.total;
      c.data()["factor_relators"] = p.factor_relators.size();
      c.data()["gluing_relators"] = p.gluing_relators.size();
      if (p.factors.size() == 1) c.note("single factor: the amalgam is the factor itself");
      s.add(c.finish());
    }
}

// ---------------------------------------------------------------------------

namespace {

struct TMapCase {
  RingHandle B;
  Value a;
  Ideal I;
};

TMapCase tmap_case(const SuiteContext& s, const std::string& rspec) {
  const auto B = make_ring(rspec);
  const bool semi = B->kind() == RingKind::semidirect;
  std::string lit = s.config.element ? *s.config.element : (semi ? "2" : "(0,1)");
  const Value a = B->parse(lit);
  return {B, a, semi ? Ideal::semidirect_kernel(B) : Ideal::generated(B, {a})};
}

/// Random c/2^k X^d over Z[1/2][X] style localized polynomial rings.
Value random_monomial(const RingHandle& Ba, std::mt19937_64& rng, int dmin, int dmax, bool allow_zero) {
  auto P = std::dynamic_pointer_cast<const PolynomialRing>(Ba);
  auto L = std::dynamic_pointer_cast<const DomainLocalization>(P->base());
  std::uniform_int_distribution<int> c(-2, 2), k(0, 2), d(dmin, dmax);
  int cv = c(rng);
  if (cv == 0 && !allow_zero) cv = 1;
  return P->monomial(L->make(Int(cv), static_cast<std::uint64_t>(k(rng))), static_cast<std::size_t>(d(rng)));
}

}  // namespace

void suite_tmap(SuiteContext& s) {
  const auto rings = or_default(s.config.rings, {"semi(z,2)", "prod(f2,f3)"});
  const std::size_t n = s.config.n;
  for (const auto& rspec : rings) {
    const TMapCase tc = tmap_case(s, rspec);
    const auto& B = tc.B;
    const TMapContext ctx = make_tmap_context(B, tc.a, tc.I);
    const auto& Ba = ctx.loc.ring;
    const std::string prefix = B->spec() + " a=" + B->format(tc.a) + ":";

    std::vector<StarSymbol> gens;
    bool exhaustive = false;
    if (Ba->is_finite()) {
      // lambda(I) inside B_a.
      std::vector<Value> image;
      for (const auto& x : tc.I.members()) {
        Value y = ctx.loc.lambda(x);
        if (std::find(image.begin(), image.end(), y) == image.end()) image.push_back(y);
      }
      std::sort(image.begin(), image.end());
      const Ideal J = Ideal::generated(Ba, image);
      const StarDomain d = star_domain(J, n);
      std::size_t total = 0;
      for (const auto& o : d.orthogonal) total += 2 * o.size();
      exhaustive = total <= 20000;
      for (std::size_t k = 0; k < d.orbit.size(); ++k)
        for (auto i : d.orthogonal[k]) {
          const auto& ov = d.orbit[k];
          const RVector& p = d.ideal_vecs[i];
          if (std::any_of(p.entries.begin(), p.entries.end(),
                          [&](const Value& x) { return std::find(image.begin(), image.end(), x) == image.end(); }))
            continue;
          gens.push_back({StarSymbol::Kind::F, ov.u, p, std::nullopt, ov.factors});
          gens.push_back({StarSymbol::Kind::S, p, ov.u, ov.certificate, std::nullopt});
        }
      if (!exhaustive) {
        std::shuffle(gens.begin(), gens.end(), s.rng);
        gens.resize(std::min(gens.size(), 2 * s.samples(50)));
      }
    } else {
      const std::size_t samples = s.samples(50);
      std::uniform_int_distribution<std::size_t> idx(0, n - 1);
      for (std::size_t t = 0; t < 2 * samples; ++t) {
        std::vector<ElementaryFactor> f;
        while (f.size() < 3) {
          const auto i = idx(s.rng), j = idx(s.rng);
          if (i != j) f.push_back({i, j, random_monomial(Ba, s.rng, 0, 1, false)});
        }
        const StWord M = factors_word(Ba, n, f);
        const RMatrix Mm = phi(M), Ms = phi(contragredient(M));
        RVector tail = RVector::zero(Ba, n);
        for (std::size_t k = 1; k < n; ++k) tail[k] = random_monomial(Ba, s.rng, 1, 2, true);
        const RVector nice = column(Mm, 0), cert = column(Ms, 0), other = Ms * tail;
        if (t % 2 == 0)
          gens.push_back({StarSymbol::Kind::F, nice, other, cert, std::nullopt});
        else
          gens.push_back({StarSymbol::Kind::S, other, nice, cert, std::nullopt});
      }
    }

    CheckBuilder cf(prefix + "lambda(phi(T(F(u,v)))) = t(u,v)", "matrix", exhaustive);
    CheckBuilder cs(prefix + "lambda(phi(T(S(u,v)))) = t(u,v)", "matrix", exhaustive);
    unsigned max_m = 0;
    for (const auto& g : gens) {
      auto& b = g.kind == StarSymbol::Kind::F ? cf : cs;
      try {
        const TMapResult r = t_map(ctx, g);
        max_m = std::max(max_m, r.m);
        bool ok = true;
        try {
          r.datum.validate();
        } catch (const DomainError&) {
          ok = false;
        }
        const RMatrix img = map_matrix(phi(r.word), ctx.loc.lambda);
        ok = ok && img == transvection(g.u, g.v);
        b.record(ok, [&] {
          return "ring=" + B->spec() + " " + g.to_string() + " m=" + std::to_string(r.m) + " word=" + r.word.to_string();
        });
      } catch (const InconclusiveError& e) {
        b.record(false, [&] { return "ring=" + B->spec() + " " + g.to_string() + " inconclusive: " + e.what(); });
        b.inconclusive(e.what());
      }
    }
    cf.data()["max_m"] = max_m;
    cf.data()["localized"] = Ba->spec();
    s.add(cf.finish());
    s.add(cs.finish());
  }
}

}  // namespace steinberg::detail
