#include "steinberg/matrix.hpp"

#include <deque>
#include <unordered_map>

namespace steinberg {

namespace {

void require_same(const RingHandle& a, const RingHandle& b) {
  if (!same_ring(a, b)) throw DomainError("ring mismatch: " + a->spec() + " vs " + b->spec());
}

// Compact key of a finite-ring value sequence.
std::string finite_key(const Ring& ring, const std::vector<Value>& values) {
  std::string key;
  key.reserve(values.size() * 2);
  for (const auto& v : values) {
    const auto i = static_cast<std::uint16_t>(ring.index_of(v));
    key.push_back(static_cast<char>(i & 0xff));
    key.push_back(static_cast<char>(i >> 8));
  }
  return key;
}

}  // namespace

// ---------------------------------------------------------------------------
// RVector

RVector RVector::zero(RingHandle ring, std::size_t n) {
  auto z = ring->zero();
  return RVector(std::move(ring), std::vector<Value>(n, z));
}

RVector RVector::basis(RingHandle ring, std::size_t n, std::size_t i) {
  RVector v = zero(ring, n);
  v.entries.at(i) = ring->one();
  return v;
}

bool RVector::is_zero() const {
  for (const auto& x : entries)
    if (!ring->is_zero(x)) return false;
  return true;
}

std::size_t RVector::zero_count() const {
  std::size_t c = 0;
  for (const auto& x : entries)
    if (ring->is_zero(x)) ++c;
  return c;
}

RVector RVector::operator+(const RVector& o) const {
  require_same(ring, o.ring);
  if (size() != o.size()) throw DomainError("vector length mismatch");
  RVector r(ring, {});
  r.entries.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) r.entries.push_back(ring->add(entries[i], o.entries[i]));
  return r;
}

RVector RVector::operator-(const RVector& o) const { return *this + (-o); }

RVector RVector::operator-() const {
  RVector r(ring, {});
  r.entries.reserve(size());
  for (const auto& x : entries) r.entries.push_back(ring->neg(x));
  return r;
}

RVector RVector::scaled(const Value& c) const {
  RVector r(ring, {});
  r.entries.reserve(size());
  for (const auto& x : entries) r.entries.push_back(ring->mul(x, c));
  return r;
}

std::string RVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += ring->format(entries[i]);
  }
  return s + ")";
}

Value dot(const RVector& u, const RVector& v) {
  require_same(u.ring, v.ring);
  if (u.size() != v.size()) throw DomainError("vector length mismatch");
  const Ring& R = *u.ring;
  Value s = R.zero();
  for (std::size_t i = 0; i < u.size(); ++i) s = R.add(s, R.mul(u[i], v[i]));
  return s;
}

// ---------------------------------------------------------------------------
// RMatrix

RMatrix::RMatrix(RingHandle ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
  a_.assign(n * n, ring_->zero());
}

RMatrix RMatrix::identity(RingHandle ring, std::size_t n) {
  RMatrix m(std::move(ring), n);
  const Value one = m.ring_->one();
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

bool RMatrix::is_identity() const {
  const Value zero = ring_->zero(), one = ring_->one();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? one : zero)) return false;
  return true;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  require_same(ring_, o.ring_);
  if (n_ != o.n_) throw DomainError("matrix size mismatch");
  const Ring& R = *ring_;
  RMatrix c(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Value& x = (*this)(i, k);
      if (R.is_zero(x)) continue;
      for (std::size_t j = 0; j < n_; ++j) c(i, j) = R.add(c(i, j), R.mul(x, o(k, j)));
    }
  return c;
}

RVector RMatrix::operator*(const RVector& v) const {
  require_same(ring_, v.ring);
  if (n_ != v.size()) throw DomainError("matrix/vector size mismatch");
  const Ring& R = *ring_;
  RVector out = RVector::zero(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) out[i] = R.add(out[i], R.mul((*this)(i, k), v[k]));
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void RMatrix::right_unipotent(const RootDatum& phi, std::size_t root, const Value& x) {
  const Ring& R = *ring_;
  if (R.is_zero(x)) return;
  auto [p, q] = phi.matrix_pair(root);
  if (phi.family() == Family::A) {
    for (std::size_t i = 0; i < n_; ++i) a_[i * n_ + q] = R.add(a_[i * n_ + q], R.mul(a_[i * n_ + p], x));
    return;
  }
  if (phi.family() != Family::D) throw UnsupportedError("no matrix realization for " + phi.name());
  // M (1 + x e_pq - x e_q'p'): column q += x col p, column p' -= x col q'.
  const std::size_t pp = phi.mirror(p), qq = phi.mirror(q);
  const Value nx = R.neg(x);
  for (std::size_t i = 0; i < n_; ++i) {
    a_[i * n_ + q] = R.add(a_[i * n_ + q], R.mul(a_[i * n_ + p], x));
    a_[i * n_ + pp] = R.add(a_[i * n_ + pp], R.mul(a_[i * n_ + qq], nx));
  }
}

void RMatrix::left_unipotent(const RootDatum& phi, std::size_t root, const Value& x) {
  const Ring& R = *ring_;
  if (R.is_zero(x)) return;
  auto [p, q] = phi.matrix_pair(root);
  if (phi.family() == Family::A) {
    for (std::size_t j = 0; j < n_; ++j) a_[p * n_ + j] = R.add(a_[p * n_ + j], R.mul(x, a_[q * n_ + j]));
    return;
  }
  if (phi.family() != Family::D) throw UnsupportedError("no matrix realization for " + phi.name());
  // (1 + x e_pq - x e_q'p') M: row p += x row q, row q' -= x row p'.
  const std::size_t pp = phi.mirror(p), qq = phi.mirror(q);
  const Value nx = R.neg(x);
  for (std::size_t j = 0; j < n_; ++j) {
    a_[p * n_ + j] = R.add(a_[p * n_ + j], R.mul(x, a_[q * n_ + j]));
    a_[qq * n_ + j] = R.add(a_[qq * n_ + j], R.mul(nx, a_[pp * n_ + j]));
  }
}

std::string RMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += ring_->format((*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

RMatrix unipotent(const RootDatum& phi, std::size_t root, const Value& x, const RingHandle& ring) {
  RMatrix m = RMatrix::identity(ring, phi.matrix_size());
  m.right_unipotent(phi, root, x);
  return m;
}

RMatrix transvection(const RVector& u, const RVector& v) {
  require_same(u.ring, v.ring);
  if (u.size() != v.size()) throw DomainError("transvection needs vectors of equal length");
  const Ring& R = *u.ring;
  RMatrix m = RMatrix::identity(u.ring, u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = R.add(m(i, j), R.mul(u[i], v[j]));
  return m;
}

RMatrix hyperbolic_gram(const RingHandle& ring, std::size_t n) {
  RMatrix j(ring, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = ring->one();
  return j;
}

RVector map_vector(const RVector& v, const RingMorphism& f) {
  RVector out(f.target, {});
  out.entries.reserve(v.size());
  for (const auto& x : v.entries) out.entries.push_back(f(x));
  return out;
}

RMatrix map_matrix(const RMatrix& m, const RingMorphism& f) {
  RMatrix out(f.target, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = f(m(i, j));
  return out;
}

std::optional<RVector> is_unimodular(const RVector& u) {
  auto solved = lin_solve(u.ring, u.entries, u.ring->one());
  if (solved.status == SolveResult::Status::inconclusive)
    throw InconclusiveError("unimodularity undecidable over " + u.ring->spec());
  if (!solved) return std::nullopt;
  return RVector(u.ring, std::move(solved.coefficients));
}

// ---------------------------------------------------------------------------
// Orbit witnesses

namespace {

std::optional<std::vector<ElementaryFactor>> integer_orbit_factors(const RVector& u) {
  // Reduce u to e_1 by elementary row operations g, recording them; the
  // witness is the reversed list of inverses.
  const std::size_t n = u.size();
  std::vector<Int> x;
  for (const auto& e : u.entries) x.push_back(e.num);
  std::vector<ElementaryFactor> ops;  // applied in order: x <- t_ij(r) x
  auto apply = [&](std::size_t i, std::size_t j, const Int& r) {
    if (r == 0) return;
    x[i] += r * x[j];
    ops.push_back({i, j, Value(r)});
  };
  // Euclid on nonzero entries until only x[p] remains.
  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0 && (p == n || abs(x[i]) < abs(x[p]))) p = i;
    if (p == n) return std::nullopt;
    bool others = false;
    for (std::size_t i = 0; i < n; ++i)
      if (i != p && x[i] != 0) {
        others = true;
        apply(i, p, -(x[i] / x[p]));
      }
    if (!others) {
      if (abs(x[p]) != 1) return std::nullopt;
      break;
    }
  }
  std::size_t p = 0;
  while (x[p] == 0) ++p;
  // Move +-e_p to +e_0.
  if (p != 0) {
    apply(0, p, x[p]);   // x0 = x_p^2 = 1
    apply(p, 0, -x[p]);  // x_p = 0
  } else if (x[0] == -1) {
    apply(1, 0, Int(-1));
    apply(0, 1, Int(2));
    apply(1, 0, Int(-1));
  }
  // g_k...g_1 u = e_1, so u = g_1^{-1} ... g_k^{-1} e_1.
  std::vector<ElementaryFactor> ordered;
  for (const auto& g : ops) ordered.push_back({g.i, g.j, Value(-g.r.num)});
  return ordered;
}

}  // namespace

std::optional<std::vector<ElementaryFactor>> orbit_factors(const RVector& u, std::size_t cap) {
  const Ring& R = *u.ring;
  const std::size_t n = u.size();
  if (n < 2) throw DomainError("orbit witnesses need n >= 2");
  if (R.kind() == RingKind::integers) return integer_orbit_factors(u);
  if (!R.is_finite()) throw InconclusiveError("no orbit search for " + R.spec());

  const RVector e1 = RVector::basis(u.ring, n, 0);
  if (u == e1) return std::vector<ElementaryFactor>{};
  const auto elements = R.elements();
  struct Node {
    std::size_t parent;
    ElementaryFactor step;
  };
  std::vector<RVector> states{e1};
  std::vector<Node> nodes{{0, {0, 0, Value()}}};
  std::unordered_map<std::string, std::size_t> seen{{finite_key(R, e1.entries), 0}};
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const auto& r : elements) {
          if (R.is_zero(r)) continue;
          RVector next = states[head];
          next[i] = R.add(next[i], R.mul(r, next[j]));
          auto key = finite_key(R, next.entries);
          if (seen.count(key)) continue;
          if (states.size() >= cap) throw InconclusiveError("orbit search exceeded its cap");
          seen.emplace(std::move(key), states.size());
          nodes.push_back({head, {i, j, r}});
          states.push_back(next);
          if (next == u) {
            // Path e1 -> ... -> u by left multiplications; product order is reversed.
            std::vector<ElementaryFactor> factors;
            for (std::size_t k = states.size() - 1; k != 0; k = nodes[k].parent) factors.push_back(nodes[k].step);
            return factors;
          }
        }
      }
  }
  return std::nullopt;
}

std::size_t matrix_group_order(const RootDatum& phi, const RingHandle& ring, std::size_t cap) {
  if (!ring->is_finite()) throw DomainError("matrix group order needs a finite ring");
  const auto elements = ring->elements();
  const std::size_t n = phi.matrix_size();
  std::vector<RMatrix> generators;
  for (std::size_t a = 0; a < phi.size(); ++a)
    for (const auto& r : elements)
      if (!ring->is_zero(r)) generators.push_back(unipotent(phi, a, r, ring));
  std::unordered_map<std::string, char> seen;
  std::deque<RMatrix> queue;
  const RMatrix one = RMatrix::identity(ring, n);
  seen.emplace(finite_key(*ring, one.data()), 0);
  queue.push_back(one);
  while (!queue.empty()) {
    RMatrix m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < phi.size(); ++a)
      for (const auto& r : elements) {
        if (ring->is_zero(r)) continue;
        RMatrix next = m;
        next.right_unipotent(phi, a, r);
        auto key = finite_key(*ring, next.data());
        if (seen.emplace(std::move(key), 0).second) {
          if (seen.size() > cap) throw InconclusiveError("matrix group search exceeded its cap");
          queue.push_back(std::move(next));
        }
      }
  }
  return seen.size();
}

std::vector<GroupElementRecord> enumerate_elementary_group(const RingHandle& ring, std::size_t n,
                                                           std::size_t cap) {
  if (!ring->is_finite()) throw DomainError("group enumeration needs a finite ring");
  const auto phi = RootDatum::build(Family::A, static_cast<int>(n) - 1);
  const auto elements = ring->elements();
  std::vector<GroupElementRecord> out;
  std::unordered_map<std::string, std::size_t> seen;
  out.push_back({RMatrix::identity(ring, n), {}});
  seen.emplace(finite_key(*ring, out[0].matrix.data()), 0);
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t a = 0; a < phi->size(); ++a)
      for (const auto& r : elements) {
        if (ring->is_zero(r)) continue;
        RMatrix next = out[head].matrix;
        next.right_unipotent(*phi, a, r);
        auto key = finite_key(*ring, next.data());
        if (seen.count(key)) continue;
        if (out.size() >= cap) throw InconclusiveError("group enumeration exceeded its cap");
        seen.emplace(std::move(key), out.size());
        auto factors = out[head].factors;
        auto [i, j] = phi->matrix_pair(a);
        factors.push_back({i, j, r});
        out.push_back({std::move(next), std::move(factors)});
      }
  return out;
}

}  // namespace steinberg
