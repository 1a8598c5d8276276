#pragma once

// Words in the Steinberg generators x_a(r), the projection phi to matrices,
// and the semidirect decomposition St(R) = St(R,I) x| St(R/I).

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steinberg/matrix.hpp"
#include "steinberg/ring.hpp"
#include "steinberg/roots.hpp"

namespace steinberg {

struct Letter {
  std::size_t root;
  Value coeff;
  bool operator==(const Letter&) const = default;
};

class StWord {
 public:
  StWord() = default;
  StWord(RootSystem system, RingHandle ring, std::vector<Letter> letters = {});

  static StWord generator(RootSystem system, RingHandle ring, std::size_t root, Value coeff);

  const RootSystem& system() const { return system_; }
  const RingHandle& ring() const { return ring_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  StWord operator*(const StWord& o) const;
  StWord& operator*=(const StWord& o);
  /// Reversed letters with negated coefficients.
  StWord inverse() const;
  /// g h g^{-1}.
  StWord conjugate(const StWord& h) const;
  /// Left-normed [g,h] = g h g^{-1} h^{-1}.
  static StWord commutator(const StWord& g, const StWord& h);

  /// Merges adjacent letters on the same root and drops zero letters, to a
  /// fixed point.  Never applies commutator relations.
  StWord simplified() const;

  /// Syntactic equality of letter sequences (same system and ring assumed).
  bool operator==(const StWord& o) const { return letters_ == o.letters_; }

  std::string to_string() const;

 private:
  RootSystem system_;
  RingHandle ring_;
  std::vector<Letter> letters_;
};

/// Shared (Phi, R) context for building words over one ring.
StWord empty_word(const RootSystem& system, const RingHandle& ring);

/// The cached root system A_{n-1} used for words in St(n, R).
RootSystem type_a(std::size_t n);

/// x_{ij}(r) in St(n,R), 0-based i != j.
StWord xij(const RingHandle& ring, std::size_t n, std::size_t i, std::size_t j, const Value& r);

/// phi(w) as a matrix; UnsupportedError for E.
RMatrix phi(const StWord& w);

/// Letter-wise x_{ij}(r) -> x_{ji}(r) with order reversed; phi(w^t) = phi(w)^t.
StWord transpose_anti(const StWord& w);

/// Word whose image is phi(w)^* = (phi(w)^t)^{-1}: x_{ij}(r) -> x_{ji}(-r), order kept.
StWord contragredient(const StWord& w);

/// z_a(s,r) = x_{-a}(r) x_a(s) x_{-a}(-r).
StWord z_generator(const RootSystem& system, const RingHandle& ring, std::size_t root, const Value& s,
                   const Value& r);

/// Image of w under the induced map St(Phi,R) -> St(Phi,S).
StWord map_word(const StWord& w, const RingMorphism& f);

/// Product of elementary factors as a word in St(n,R).
StWord factors_word(const RingHandle& ring, std::size_t n, const std::vector<ElementaryFactor>& factors);

/// How equality of two group elements was decided.
enum class Tier { syntactic, matrix, exact };
std::string tier_name(Tier t);

/// Decides equality of words at one tier.
class WordEquality {
 public:
  virtual ~WordEquality() = default;
  virtual Tier tier() const = 0;
  virtual bool equal(const StWord& a, const StWord& b) const = 0;
  bool is_identity(const StWord& w) const { return equal(w, empty_word(w.system(), w.ring())); }
};

/// phi-matrix equality: a necessary condition for equality in St.
class MatrixEquality final : public WordEquality {
 public:
  Tier tier() const override { return Tier::matrix; }
  bool equal(const StWord& a, const StWord& b) const override { return phi(a) == phi(b); }
};

// ---------------------------------------------------------------------------
// Semidirect decomposition for a split ideal.

struct SplitContext {
  RootSystem system;
  SplitData split;  // ring R, ideal I, quotient R/I, pi, sigma
};

/// (g, h) with g a word over R meant to lie in St(Phi,R,I) and h a word over
/// R/I, multiplied by (g,h)(g',h') = (g sigma*(h) g' sigma*(h)^{-1}, hh').
class SemidirectElement {
 public:
  SemidirectElement(std::shared_ptr<const SplitContext> ctx, StWord kernel, StWord quotient);

  const StWord& kernel() const { return kernel_; }
  const StWord& quotient() const { return quotient_; }
  const std::shared_ptr<const SplitContext>& context() const { return ctx_; }

  SemidirectElement operator*(const SemidirectElement& o) const;
  SemidirectElement inverse() const;
  /// Commutator computed by multiplication.
  static SemidirectElement commutator(const SemidirectElement& x, const SemidirectElement& y);
  /// sigma*(h) g sigma*(h)^{-1}: the action of a quotient word on a kernel word.
  StWord act(const StWord& h, const StWord& g) const;
  /// The element of St(Phi,R): g * sigma*(h).
  StWord flatten() const;

 private:
  std::shared_ptr<const SplitContext> ctx_;
  StWord kernel_;
  StWord quotient_;
};

/// [(a,b),(c,d)] = (a . ^b c . ^{bdb^-1} a^-1 . ^{[b,d]} c^-1, [b,d]).
SemidirectElement semidirect_commutator(const SemidirectElement& x, const SemidirectElement& y);

}  // namespace steinberg
