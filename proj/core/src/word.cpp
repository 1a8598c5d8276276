#include "steinberg/word.hpp"

#include <map>
#include <mutex>

namespace steinberg {

namespace {

void require_compatible(const StWord& a, const StWord& b) {
  if (a.system() != b.system() && a.system()->name() != b.system()->name())
    throw DomainError("words over different root systems");
  if (!same_ring(a.ring(), b.ring()))
    throw DomainError("words over different rings: " + a.ring()->spec() + " vs " + b.ring()->spec());
}

}  // namespace

StWord::StWord(RootSystem system, RingHandle ring, std::vector<Letter> letters)
    : system_(std::move(system)), ring_(std::move(ring)), letters_(std::move(letters)) {}

StWord StWord::generator(RootSystem system, RingHandle ring, std::size_t root, Value coeff) {
  std::vector<Letter> letters;
  if (!ring->is_zero(coeff)) letters.push_back({root, std::move(coeff)});
  return StWord(std::move(system), std::move(ring), std::move(letters));
}

StWord StWord::operator*(const StWord& o) const {
  StWord r = *this;
  r *= o;
  return r;
}

StWord& StWord::operator*=(const StWord& o) {
  require_compatible(*this, o);
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

StWord StWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->root, ring_->neg(it->coeff)});
  return StWord(system_, ring_, std::move(out));
}

StWord StWord::conjugate(const StWord& h) const { return *this * h * inverse(); }

StWord StWord::commutator(const StWord& g, const StWord& h) { return g * h * g.inverse() * h.inverse(); }

StWord StWord::simplified() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (ring_->is_zero(l.coeff)) continue;
    if (!out.empty() && out.back().root == l.root) {
      out.back().coeff = ring_->add(out.back().coeff, l.coeff);
      if (ring_->is_zero(out.back().coeff)) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return StWord(system_, ring_, std::move(out));
}

std::string StWord::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ",";
    s += "[" + std::to_string(letters_[k].root) + ",\"" + ring_->format(letters_[k].coeff) + "\"]";
  }
  return s + "]";
}

StWord empty_word(const RootSystem& system, const RingHandle& ring) { return StWord(system, ring); }

RootSystem type_a(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, RootSystem> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = RootDatum::build(Family::A, static_cast<int>(n) - 1);
  return slot;
}

StWord xij(const RingHandle& ring, std::size_t n, std::size_t i, std::size_t j, const Value& r) {
  const auto sys = type_a(n);
  return StWord::generator(sys, ring, sys->a_root(i, j), r);
}

RMatrix phi(const StWord& w) {
  const auto& sys = *w.system();
  RMatrix m = RMatrix::identity(w.ring(), sys.matrix_size());
  for (const auto& l : w.letters()) m.right_unipotent(sys, l.root, l.coeff);
  return m;
}

StWord transpose_anti(const StWord& w) {
  const auto& sys = *w.system();
  if (sys.family() != Family::A) throw DomainError("transpose map needs type A");
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    auto [i, j] = sys.matrix_pair(it->root);
    out.push_back({sys.a_root(j, i), it->coeff});
  }
  return StWord(w.system(), w.ring(), std::move(out));
}

StWord contragredient(const StWord& w) {
  const auto& sys = *w.system();
  if (sys.family() != Family::A) throw DomainError("contragredient words need type A");
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    auto [i, j] = sys.matrix_pair(l.root);
    out.push_back({sys.a_root(j, i), w.ring()->neg(l.coeff)});
  }
  return StWord(w.system(), w.ring(), std::move(out));
}

StWord z_generator(const RootSystem& system, const RingHandle& ring, std::size_t root, const Value& s,
                   const Value& r) {
  const std::size_t neg = system->negative(root);
  return StWord::generator(system, ring, neg, r) * StWord::generator(system, ring, root, s) *
         StWord::generator(system, ring, neg, ring->neg(r));
}

StWord map_word(const StWord& w, const RingMorphism& f) {
  if (!same_ring(w.ring(), f.source)) throw DomainError("morphism " + f.name + " does not apply to " + w.ring()->spec());
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    Value c = f(l.coeff);
    if (!f.target->is_zero(c)) out.push_back({l.root, std::move(c)});
  }
  return StWord(w.system(), f.target, std::move(out));
}

StWord factors_word(const RingHandle& ring, std::size_t n, const std::vector<ElementaryFactor>& factors) {
  StWord w = empty_word(type_a(n), ring);
  for (const auto& f : factors) w *= xij(ring, n, f.i, f.j, f.r);
  return w;
}

std::string tier_name(Tier t) {
  switch (t) {
    case Tier::syntactic:
      return "syntactic";
    case Tier::matrix:
      return "matrix";
    case Tier::exact:
      return "exact";
  }
  return "?";
}

// ---------------------------------------------------------------------------

SemidirectElement::SemidirectElement(std::shared_ptr<const SplitContext> ctx, StWord kernel, StWord quotient)
    : ctx_(std::move(ctx)), kernel_(std::move(kernel)), quotient_(std::move(quotient)) {
  if (!same_ring(kernel_.ring(), ctx_->split.ring)) throw DomainError("kernel word must be over R");
  if (!same_ring(quotient_.ring(), ctx_->split.quotient)) throw DomainError("quotient word must be over R/I");
}

StWord SemidirectElement::act(const StWord& h, const StWord& g) const {
  return map_word(h, ctx_->split.section).conjugate(g);
}

SemidirectElement SemidirectElement::operator*(const SemidirectElement& o) const {
  return SemidirectElement(ctx_, kernel_ * act(quotient_, o.kernel_), quotient_ * o.quotient_);
}

SemidirectElement SemidirectElement::inverse() const {
  const StWord hinv = quotient_.inverse();
  return SemidirectElement(ctx_, act(hinv, kernel_.inverse()), hinv);
}

SemidirectElement SemidirectElement::commutator(const SemidirectElement& x, const SemidirectElement& y) {
  return x * y * x.inverse() * y.inverse();
}

StWord SemidirectElement::flatten() const { return kernel_ * map_word(quotient_, ctx_->split.section); }

SemidirectElement semidirect_commutator(const SemidirectElement& x, const SemidirectElement& y) {
  const StWord& a = x.kernel();
  const StWord& b = x.quotient();
  const StWord& c = y.kernel();
  const StWord& d = y.quotient();
  const StWord bd = StWord::commutator(b, d);
  StWord k = a * x.act(b, c) * x.act(b * d * b.inverse(), a.inverse()) * x.act(bd, c.inverse());
  return SemidirectElement(x.context(), std::move(k), bd);
}

}  // namespace steinberg
