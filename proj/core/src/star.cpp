#include "steinberg/star.hpp"

#include <cmath>
#include <deque>
#include <set>
#include <unordered_map>

namespace steinberg {

namespace {

std::string vector_key(const RVector& v) {
  std::string k;
  k.reserve(v.size() * 2);
  for (const auto& x : v.entries) {
    const auto i = v.ring->index_of(x);
    k.push_back(static_cast<char>(i & 0xff));
    k.push_back(static_cast<char>(i >> 8));
  }
  return k;
}

RVector column(const RMatrix& m, std::size_t j) {
  RVector v = RVector::zero(m.ring(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = m(i, j);
  return v;
}

struct MatrixPair {
  RMatrix m, mstar;
};

MatrixPair matrices_of(const RingHandle& ring, std::size_t n, const std::vector<ElementaryFactor>& f) {
  const StWord w = factors_word(ring, n, f);
  return {phi(w), phi(contragredient(w))};
}

StarSymbol F(RVector u, RVector v, RVector cert) {
  return {StarSymbol::Kind::F, std::move(u), std::move(v), std::move(cert), std::nullopt};
}
StarSymbol S(RVector u, RVector v, RVector cert) {
  return {StarSymbol::Kind::S, std::move(u), std::move(v), std::move(cert), std::nullopt};
}

std::vector<Value> ideal_nonzero(const Ideal& I) {
  std::vector<Value> out;
  for (const auto& x : I.members())
    if (!I.ring()->is_zero(x)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<OrbitVector> orbit_with_witnesses(const RingHandle& ring, std::size_t n, std::size_t cap) {
  if (!ring->is_finite()) throw DomainError("orbit enumeration needs a finite ring");
  const auto& R = *ring;
  std::vector<Value> nz;
  for (const auto& x : R.elements())
    if (!R.is_zero(x)) nz.push_back(x);
  std::vector<OrbitVector> out;
  std::unordered_map<std::string, std::size_t> seen;
  out.push_back({RVector::basis(ring, n, 0), {}, RVector::basis(ring, n, 0)});
  seen.emplace(vector_key(out[0].u), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const auto& r : nz) {
          RVector v = out[k].u;
          v[i] = R.add(v[i], R.mul(r, v[j]));
          auto key = vector_key(v);
          if (seen.count(key)) continue;
          if (out.size() >= cap) throw InconclusiveError("orbit enumeration exceeded its cap");
          std::vector<ElementaryFactor> f;
          f.reserve(out[k].factors.size() + 1);
          f.push_back({i, j, r});
          f.insert(f.end(), out[k].factors.begin(), out[k].factors.end());
          // (x_ij(r) M)^* = t_ji(-r) M^*.
          RVector cert = out[k].certificate;
          cert[j] = R.sub(cert[j], R.mul(r, cert[i]));
          seen.emplace(std::move(key), out.size());
          out.push_back({std::move(v), std::move(f), std::move(cert)});
        }
      }
  }
  return out;
}

std::vector<RVector> ideal_vectors(const Ideal& ideal, std::size_t n) {
  const auto& members = ideal.members();
  std::vector<RVector> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    RVector v = RVector::zero(ideal.ring(), n);
    for (std::size_t k = 0; k < n; ++k) v[k] = members[idx[k]];
    out.push_back(std::move(v));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < members.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<std::vector<ElementaryFactor>> elementary_sample(const RingHandle& ring, std::size_t n,
                                                             std::size_t samples, std::size_t length,
                                                             std::mt19937_64& rng, bool& exhaustive) {
  std::vector<std::vector<ElementaryFactor>> out;
  if (ring->is_finite() && std::pow(static_cast<double>(ring->size()), static_cast<double>(n * n)) <= 1048576.0) {
    exhaustive = true;
    for (auto& rec : enumerate_elementary_group(ring, n)) out.push_back(std::move(rec.factors));
    return out;
  }
  exhaustive = false;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<ElementaryFactor> f;
    while (f.size() < length) {
      const auto i = idx(rng), j = idx(rng);
      if (i == j) continue;
      f.push_back({i, j, ring->sample(rng, 3)});
    }
    out.push_back(std::move(f));
  }
  return out;
}

StarDomain star_domain(const Ideal& ideal, std::size_t n, std::size_t cap) {
  StarDomain d;
  d.ring = ideal.ring();
  d.ideal = ideal;
  d.n = n;
  d.orbit = orbit_with_witnesses(d.ring, n, cap);
  d.ideal_vecs = ideal_vectors(ideal, n);
  d.orthogonal.resize(d.orbit.size());
  for (std::size_t k = 0; k < d.orbit.size(); ++k)
    for (std::size_t i = 0; i < d.ideal_vecs.size(); ++i)
      if (d.ring->is_zero(dot(d.orbit[k].u, d.ideal_vecs[i]))) d.orthogonal[k].push_back(i);
  return d;
}

// ---------------------------------------------------------------------------

std::vector<StarRelator> star_relators(const StarDomain& d, const std::string& family, std::size_t limit,
                                       std::mt19937_64& rng, bool& exhaustive) {
  const auto& R = *d.ring;
  const std::size_t n = d.n;
  std::vector<StarRelator> out;
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  const std::size_t orbit_size = d.orbit.size();

  if (family == "R1" || family == "R2") {
    const bool is_f = family == "R1";
    std::size_t total = 0;
    for (const auto& o : d.orthogonal) total += o.size() * o.size();
    auto make = [&](std::size_t k, std::size_t i, std::size_t j) {
      const auto& ov = d.orbit[k];
      const RVector& p = d.ideal_vecs[d.orthogonal[k][i]];
      const RVector& q = d.ideal_vecs[d.orthogonal[k][j]];
      if (is_f)
        return StarRelator{family, {{F(ov.u, p, ov.certificate)}, {F(ov.u, q, ov.certificate)}},
                           {{F(ov.u, p + q, ov.certificate)}}};
      return StarRelator{family, {{S(p, ov.u, ov.certificate)}, {S(q, ov.u, ov.certificate)}},
                         {{S(p + q, ov.u, ov.certificate)}}};
    };
    exhaustive = total <= limit;
    if (exhaustive) {
      for (std::size_t k = 0; k < orbit_size; ++k)
        for (std::size_t i = 0; i < d.orthogonal[k].size(); ++i)
          for (std::size_t j = 0; j < d.orthogonal[k].size(); ++j) out.push_back(make(k, i, j));
    } else {
      for (std::size_t s = 0; s < limit; ++s) {
        const auto k = pick(orbit_size);
        const auto m = d.orthogonal[k].size();
        out.push_back(make(k, pick(m), pick(m)));
      }
    }
    return out;
  }

  if (family == "R3") {
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t k = 0; k < orbit_size; ++k)
      for (std::size_t i = 0; i < d.orthogonal[k].size(); ++i) gens.emplace_back(k, i);
    auto make = [&](std::size_t g1, std::size_t g2) {
      const auto& a = d.orbit[gens[g1].first];
      const RVector& v = d.ideal_vecs[d.orthogonal[gens[g1].first][gens[g1].second]];
      const auto& b = d.orbit[gens[g2].first];
      const RVector& v2 = d.ideal_vecs[d.orthogonal[gens[g2].first][gens[g2].second]];
      const RMatrix t = transvection(a.u, v);
      const RMatrix tstar = transvection(v, -a.u);  // (1 + u v^t)^* = 1 - v u^t
      return StarRelator{"R3",
                         {{F(a.u, v, a.certificate)}, {F(b.u, v2, b.certificate)}, {F(a.u, v, a.certificate), -1}},
                         {{F(t * b.u, tstar * v2, tstar * b.certificate)}}};
    };
    const std::size_t total = gens.size() * gens.size();
    exhaustive = total <= limit;
    if (exhaustive) {
      for (std::size_t g1 = 0; g1 < gens.size(); ++g1)
        for (std::size_t g2 = 0; g2 < gens.size(); ++g2) out.push_back(make(g1, g2));
    } else {
      for (std::size_t s = 0; s < limit; ++s) out.push_back(make(pick(gens.size()), pick(gens.size())));
    }
    return out;
  }

  if (family == "R4" || family == "T3'") {
    bool all = false;
    const auto ms = elementary_sample(d.ring, n, limit, 8, rng, all);
    const auto nz = ideal_nonzero(d.ideal);
    std::vector<Value> elems = R.elements();
    std::set<std::string> seen;
    for (const auto& f : ms) {
      const auto [M, Ms] = matrices_of(d.ring, n, f);
      const RVector me1 = column(M, 0), me2 = column(M, 1);
      const RVector ms1 = column(Ms, 0), ms2 = column(Ms, 1), ms3 = column(Ms, 2);
      for (const auto& a : nz) {
        if (family == "R4") {
          const std::string key = vector_key(me1) + vector_key(ms2) + vector_key(ms1) + vector_key(me2) +
                                  std::to_string(R.index_of(a));
          if (!seen.insert(key).second) continue;
          out.push_back({"R4", {{F(me1, ms2.scaled(a), ms1)}}, {{S(me1.scaled(a), ms2, me2)}}});
        } else {
          for (const auto& r : elems) {
            const std::string key = vector_key(me1) + vector_key(me2) + vector_key(ms1) + vector_key(ms2) +
                                    vector_key(ms3) + std::to_string(R.index_of(a)) + ":" +
                                    std::to_string(R.index_of(r));
            if (!seen.insert(key).second) continue;
            out.push_back({"T3'",
                           {{F(me1.scaled(r) + me2, ms3.scaled(a), ms2)}},
                           {{F(me1, ms3.scaled(R.mul(a, r)), ms1)}, {F(me2, ms3.scaled(a), ms2)}}});
          }
        }
      }
    }
    exhaustive = all && out.size() <= limit;
    if (out.size() > limit) {
      std::shuffle(out.begin(), out.end(), rng);
      out.resize(limit);
    }
    return out;
  }
  throw SpecError("unknown relator family '" + family + "'");
}

StWord iota_word(const std::vector<StarLetter>& letters, std::size_t n, const RingHandle& ring) {
  StWord w = empty_word(type_a(n), ring);
  for (const auto& l : letters) {
    StWord g = iota(l.symbol);
    w *= l.exponent > 0 ? g : g.inverse();
  }
  return w;
}

bool check_star_relator(const StarRelator& r, const WordEquality& eq, std::size_t n, const RingHandle& ring) {
  return eq.equal(iota_word(r.lhs, n, ring), iota_word(r.rhs, n, ring));
}

}  // namespace steinberg
