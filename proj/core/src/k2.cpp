#include "steinberg/k2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "steinberg/matrix.hpp"

namespace steinberg {

namespace {

std::vector<std::uint16_t> matrix_key(const RMatrix& m) {
  const auto& R = *m.ring();
  std::vector<std::uint16_t> key;
  key.reserve(m.data().size());
  for (const auto& v : m.data()) key.push_back(static_cast<std::uint16_t>(R.index_of(v)));
  return key;
}

std::vector<Value> nonzero_elements(const Ring& R) {
  std::vector<Value> out;
  for (auto& v : R.elements())
    if (!R.is_zero(v)) out.push_back(std::move(v));
  return out;
}

}  // namespace

Presentation::Word StPresentation::word(const StWord& w) const {
  if (!same_ring(w.ring(), ring)) throw DomainError("word over " + w.ring()->spec() + " in a table over " + ring->spec());
  Presentation::Word out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    const auto c = column_of.at(l.root).at(ring->index_of(l.coeff));
    if (c >= 0) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

StWord StPresentation::st_word(const Presentation::Word& w) const {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto c : w) letters.push_back(symbol.at(c));
  return StWord(system, ring, std::move(letters));
}

std::shared_ptr<const StPresentation> steinberg_presentation(const RootSystem& system, const RingHandle& ring) {
  if (!ring->is_finite()) throw DomainError("Steinberg presentations need a finite ring, got " + ring->spec());
  if (system->rank() < 2) throw DomainError("Steinberg presentations need rank >= 2");
  auto sp = std::make_shared<StPresentation>();
  sp->system = system;
  sp->ring = ring;
  const auto& R = *ring;
  const auto elems = R.elements();
  const auto nz = nonzero_elements(R);
  const std::size_t nroots = system->size();
  sp->column_of.assign(nroots, std::vector<std::int32_t>(elems.size(), -1));

  auto& P = sp->presentation;
  for (std::size_t a = 0; a < nroots; ++a)
    for (const auto& r : nz) {
      sp->column_of[a][R.index_of(r)] = static_cast<std::int32_t>(P.names.size());
      P.names.push_back("x" + std::to_string(a) + "(" + R.format(r) + ")");
      P.inverse.push_back(0);
      sp->symbol.push_back({a, r});
    }
  for (std::size_t c = 0; c < sp->symbol.size(); ++c) {
    const auto& [a, r] = sp->symbol[c];
    P.inverse[c] = static_cast<std::uint32_t>(sp->column_of[a][R.index_of(R.neg(r))]);
  }

  auto col = [&](std::size_t a, const Value& r) { return sp->column_of[a][R.index_of(r)]; };
  auto push = [&](Presentation::Word& w, std::size_t a, const Value& r) {
    const auto c = col(a, r);
    if (c >= 0) w.push_back(static_cast<std::uint32_t>(c));
  };
  for (std::size_t a = 0; a < nroots; ++a)
    for (const auto& r : nz)
      for (const auto& s : nz) {
        Presentation::Word w;
        push(w, a, r);
        push(w, a, s);
        push(w, a, R.neg(R.add(r, s)));
        P.relators.push_back(std::move(w));
        ++sp->s1_relators;
      }
  for (std::size_t a = 0; a < nroots; ++a)
    for (std::size_t b = 0; b < nroots; ++b) {
      if (b == a || b == system->negative(a)) continue;
      const auto sum = system->sum(a, b);
      for (const auto& r : nz)
        for (const auto& s : nz) {
          Presentation::Word w;
          push(w, a, r);
          push(w, b, s);
          push(w, a, R.neg(r));
          push(w, b, R.neg(s));
          if (sum) {
            const int N = system->structure_constant(a, b);
            push(w, *sum, R.neg(R.mul(R.from_int(N), R.mul(r, s))));
          }
          P.relators.push_back(std::move(w));
          ++sp->s23_relators;
        }
    }
  return sp;
}

SteinbergTable steinberg_table(const RootSystem& system, const RingHandle& ring, const EnumerationCaps& caps) {
  SteinbergTable t;
  t.presentation = steinberg_presentation(system, ring);
  t.table = todd_coxeter(t.presentation->presentation, {}, caps, &t.stats);
  return t;
}

std::size_t ExactEquality::element(const StWord& w) const {
  return table_->table.apply(0, table_->presentation->word(w));
}

bool ExactEquality::equal(const StWord& a, const StWord& b) const { return element(a) == element(b); }

// ---------------------------------------------------------------------------

KernelReport k2_compute(const SteinbergTable& t) {
  const auto& sp = *t.presentation;
  const auto& sys = *sp.system;
  if (!sys.has_matrices()) throw UnsupportedError("K2 extraction needs a matrix realization (types A and D)");
  const auto& table = t.table;
  const std::size_t n = table.size();

  KernelReport rep;
  rep.st_order = n;
  std::vector<std::int32_t> parent(n, -1), via(n, -1);
  std::vector<RMatrix> mats(n);
  mats[0] = RMatrix::identity(sp.ring, sys.matrix_size());
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < table.columns(); ++x) {
      const auto d = static_cast<std::size_t>(table(c, x));
      if (seen[d]) continue;
      seen[d] = 1;
      parent[d] = static_cast<std::int32_t>(c);
      via[d] = static_cast<std::int32_t>(x);
      mats[d] = mats[c];
      mats[d].right_unipotent(sys, sp.symbol[x].root, sp.symbol[x].coeff);
      queue.push_back(d);
    }
  }
  std::map<std::vector<std::uint16_t>, std::size_t> fibers;
  for (std::size_t c = 0; c < n; ++c) {
    ++fibers[matrix_key(mats[c])];
    if (mats[c].is_identity()) rep.kernel_cosets.push_back(c);
  }
  rep.image_order = fibers.size();
  rep.kernel_order = rep.kernel_cosets.size();
  for (const auto& [key, count] : fibers)
    if (count != rep.kernel_order) rep.fibers_uniform = false;

  auto word_of = [&](std::size_t c) {
    Presentation::Word w;
    while (c != 0) {
      w.push_back(static_cast<std::uint32_t>(via[c]));
      c = static_cast<std::size_t>(parent[c]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  for (auto g : rep.kernel_cosets) {
    const auto wg = word_of(g);
    for (std::size_t s = 0; s < table.columns(); ++s) {
      const auto gs = static_cast<std::size_t>(table(g, s));
      const auto sg = table.apply(static_cast<std::size_t>(table(0, s)), wg);
      if (gs != sg) {
        rep.central = false;
        rep.witnesses.emplace_back(g, s);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<StWord> relative_generators(const RootSystem& system, const Ideal& ideal) {
  const auto& ring = ideal.ring();
  std::vector<StWord> out;
  const auto elems = ring->elements();
  for (std::size_t a = 0; a < system->size(); ++a)
    for (const auto& s : ideal.members()) {
      if (ring->is_zero(s)) continue;
      for (const auto& r : elems) out.push_back(z_generator(system, ring, a, s, r));
    }
  return out;
}

RelativeIndexReport relative_subgroup_index(const RootSystem& system, const Ideal& ideal, const EnumerationCaps& caps) {
  const auto sp = steinberg_presentation(system, ideal.ring());
  std::vector<Presentation::Word> H;
  for (const auto& w : relative_generators(system, ideal)) H.push_back(sp->word(w));
  RelativeIndexReport rep;
  rep.subgroup_generators = H.size();
  rep.index = todd_coxeter(sp->presentation, H, caps).size();
  auto [quotient, pi] = quotient_ring(ideal);
  rep.quotient_spec = quotient->spec();
  rep.quotient_order = steinberg_table(system, quotient, caps).table.size();
  return rep;
}

// ---------------------------------------------------------------------------

AmalgamPresentation amalgam_presentation(const RootSystem& system, const Ideal& ideal) {
  if (system->rank() < 3) throw DomainError("amalgam needs rank >= 3");
  AmalgamPresentation p;
  p.system = system;
  p.ring = ideal.ring();
  const auto& R = *p.ring;
  for (const auto& s : ideal.members())
    if (!R.is_zero(s)) p.ideal_nonzero.push_back(s);
  p.factors = a3_subsystems(*system);
  if (p.factors.empty()) throw DomainError("no A3 subsystems in " + system->name());
  const auto elems = R.elements();

  for (std::size_t f = 0; f < p.factors.size(); ++f) {
    const auto& roots = p.factors[f].roots;
    p.generators += roots.size() * p.ideal_nonzero.size() * elems.size();
    for (auto a : roots)
      for (const auto& r : elems)
        for (const auto& s : p.ideal_nonzero)
          for (const auto& t : p.ideal_nonzero) {
            AmalgamRelator rel{"additivity", {{f, a, s, r, 1}, {f, a, t, r, 1}}};
            const Value st = R.add(s, t);
            if (!R.is_zero(st)) rel.letters.push_back({f, a, st, r, -1});
            p.factor_relators.push_back(std::move(rel));
          }
    for (auto a : roots)
      for (auto b : roots) {
        if (b == a || b == system->negative(a)) continue;
        const auto sum = system->sum(a, b);
        for (const auto& s : p.ideal_nonzero)
          for (const auto& t : p.ideal_nonzero) {
            const Value zero = R.zero();
            AmalgamRelator rel{"commutator",
                               {{f, a, s, zero, 1}, {f, b, t, zero, 1}, {f, a, s, zero, -1}, {f, b, t, zero, -1}}};
            if (sum) {
              const Value c = R.mul(R.from_int(system->structure_constant(a, b)), R.mul(s, t));
              if (!R.is_zero(c)) rel.letters.push_back({f, *sum, c, zero, -1});
            }
            p.factor_relators.push_back(std::move(rel));
          }
      }
  }
  for (std::size_t f = 0; f < p.factors.size(); ++f)
    for (std::size_t g = f + 1; g < p.factors.size(); ++g) {
      std::vector<std::size_t> shared;
      std::set_intersection(p.factors[f].roots.begin(), p.factors[f].roots.end(), p.factors[g].roots.begin(),
                            p.factors[g].roots.end(), std::back_inserter(shared));
      for (auto a : shared)
        for (const auto& s : p.ideal_nonzero)
          for (const auto& r : elems)
            p.gluing_relators.push_back({"gluing", {{f, a, s, r, 1}, {g, a, s, r, -1}}});
    }
  return p;
}

StWord canonical_image(const AmalgamPresentation& p, const AmalgamRelator& rel) {
  StWord w = empty_word(p.system, p.ring);
  for (const auto& l : rel.letters) {
    StWord z = z_generator(p.system, p.ring, l.root, l.s, l.r);
    w *= l.exponent > 0 ? z : z.inverse();
  }
  return w;
}

CoverageReport amalgam_coverage(const AmalgamPresentation& p) {
  CoverageReport rep;
  const std::size_t per_root = p.ideal_nonzero.size() * p.ring->size();
  std::vector<char> hit(p.system->size(), 0);
  for (const auto& f : p.factors)
    for (auto a : f.roots) hit[a] = 1;
  for (std::size_t a = 0; a < p.system->size(); ++a) {
    rep.total += per_root;
    if (hit[a]) {
      rep.covered += per_root;
    } else {
      rep.uncovered_roots.push_back(a);
    }
  }
  return rep;
}

}  // namespace steinberg
