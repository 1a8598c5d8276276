#pragma once

// Exact commutative rings with identity.
//
// A ring is an immutable object shared through RingHandle.  Elements are plain
// `Value`s interpreted by their ring; every ring keeps its values in a
// canonical form so that structural equality is ring equality.  Finite rings
// are tabulated: their values are indices 0..N-1 into the enumerator order and
// all operations are table lookups.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "steinberg/error.hpp"

namespace steinberg {

using Int = boost::multiprecision::cpp_int;

/// Canonical payload of a ring element.  Scalars live in `num`; composite
/// elements (tuples, coefficient lists, fractions) use `parts`.
struct Value {
  Int num;
  std::vector<Value> parts;

  Value() = default;
  Value(int n) : num(n) {}  // NOLINT(google-explicit-constructor)
  explicit Value(Int n) : num(std::move(n)) {}
  Value(Int n, std::vector<Value> p) : num(std::move(n)), parts(std::move(p)) {}

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
};

std::size_t hash_value(const Value& v);

struct ValueHash {
  std::size_t operator()(const Value& v) const { return hash_value(v); }
};

enum class RingKind {
  integers,
  modular,
  product,
  polynomial,
  quotient_poly,
  domain_localization,
  idempotent_localization,
  ideal_quotient,
  semidirect,
  finite,  // tabulated wrapper; see FiniteRing::structural()
};

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  /// Canonical construction expression, e.g. "prod(z/2,z/3)".
  virtual std::string spec() const = 0;
  virtual RingKind kind() const = 0;

  virtual bool is_finite() const { return false; }
  /// Number of elements; only meaningful when is_finite().
  virtual std::size_t size() const { return 0; }
  /// Elements in enumerator order, each exactly once.
  virtual std::vector<Value> elements() const;
  virtual std::size_t index_of(const Value& v) const;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value from_int(const Int& n) const;

  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value pow(const Value& a, std::uint64_t e) const;
  bool is_zero(const Value& a) const { return a == zero(); }
  bool is_one(const Value& a) const { return a == one(); }

  /// Multiplicative inverse if one exists and can be decided.
  virtual std::optional<Value> inverse(const Value& a) const;

  virtual std::string format(const Value& v) const = 0;
  /// Parses an element literal (decimal, tuple "(a,b)", coefficient list
  /// "[c0,c1,...]", fraction "n/d").
  virtual Value parse(std::string_view literal) const;

  /// Random element for sampled checks; `size` bounds coefficient magnitude
  /// and degree for infinite rings.
  virtual Value sample(std::mt19937_64& rng, int size) const;

  /// For tabulated rings, the structural ring and the structural form of an
  /// index; identity otherwise.
  virtual RingHandle structural() const { return handle(); }
  virtual Value decode(const Value& v) const { return v; }
  virtual Value encode(const Value& v) const { return v; }

  RingHandle handle() const { return shared_from_this(); }

  /// Parsed element literal tree.
  struct Literal {
    enum class Shape { integer, fraction, tuple, list } shape = Shape::integer;
    Int num;
    Int den = 1;
    std::vector<Literal> items;
  };
  static Literal parse_literal(std::string_view text);
  Value value_from_literal(const Literal& lit) const { return from_literal(lit); }

 protected:
  virtual Value from_literal(const Literal& lit) const;
};

bool same_ring(const RingHandle& a, const RingHandle& b);
bool same_ring(const Ring& a, const Ring& b);

/// Element bound to its ring.  Convenience type for API boundaries; bulk
/// containers (vectors, matrices, words) hold one RingHandle and raw Values.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingHandle ring, Value v) : ring_(std::move(ring)), value_(std::move(v)) {}

  const RingHandle& ring() const { return ring_; }
  const Value& value() const { return value_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  bool operator==(const RingElement& o) const;

  bool is_zero() const { return ring_->is_zero(value_); }
  std::string to_string() const { return ring_->format(value_); }

 private:
  RingHandle ring_;
  Value value_;
};

RingElement element(const RingHandle& ring, std::string_view literal);
RingElement element(const RingHandle& ring, long long n);

struct RingMorphism {
  RingHandle source;
  RingHandle target;
  std::function<Value(const Value&)> action;
  std::string name;
  /// Optional fiber enumeration for lifting: all x with action(x) == y, in
  /// enumerator order.  Finite sources get an exhaustive default.
  std::function<std::vector<Value>(const Value&)> fiber;

  Value operator()(const Value& v) const { return action(v); }
  RingElement operator()(const RingElement& x) const;
  std::vector<Value> preimages(const Value& y) const;
};

// ---------------------------------------------------------------------------
// Concrete structural rings.  Most callers go through make_ring().

class IntegerRing final : public Ring {
 public:
  std::string spec() const override { return "z"; }
  RingKind kind() const override { return RingKind::integers; }
  Value zero() const override { return Value(0); }
  Value one() const override { return Value(1); }
  Value add(const Value& a, const Value& b) const override { return Value(a.num + b.num); }
  Value neg(const Value& a) const override { return Value(-a.num); }
  Value mul(const Value& a, const Value& b) const override { return Value(a.num * b.num); }
  Value from_int(const Int& n) const override { return Value(n); }
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& v) const override { return v.num.str(); }
  Value sample(std::mt19937_64& rng, int size) const override;

 protected:
  Value from_literal(const Literal& lit) const override;
};

class ModularRing final : public Ring {
 public:
  ModularRing(Int modulus, std::string alias = {});
  std::string spec() const override;
  RingKind kind() const override { return RingKind::modular; }
  bool is_finite() const override { return true; }
  std::size_t size() const override;
  std::vector<Value> elements() const override;
  std::size_t index_of(const Value& v) const override;
  Value zero() const override { return Value(0); }
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_int(const Int& n) const override;
  std::string format(const Value& v) const override { return v.num.str(); }
  const Int& modulus() const { return modulus_; }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  Int modulus_;
  std::string alias_;
};

class ProductRing final : public Ring {
 public:
  ProductRing(RingHandle first, RingHandle second);
  std::string spec() const override;
  RingKind kind() const override { return RingKind::product; }
  bool is_finite() const override;
  std::size_t size() const override;
  std::vector<Value> elements() const override;
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_int(const Int& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& v) const override;
  Value sample(std::mt19937_64& rng, int size) const override;
  const RingHandle& first() const { return first_; }
  const RingHandle& second() const { return second_; }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  RingHandle first_, second_;
};

/// Univariate polynomials, dense coefficient lists without trailing zeros.
class PolynomialRing final : public Ring {
 public:
  PolynomialRing(RingHandle base, std::string var);
  std::string spec() const override;
  RingKind kind() const override { return RingKind::polynomial; }
  Value zero() const override { return Value(); }
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_int(const Int& n) const override;
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& v) const override;
  Value sample(std::mt19937_64& rng, int size) const override;

  const RingHandle& base() const { return base_; }
  const std::string& variable() const { return var_; }
  Value constant(const Value& c) const;
  Value monomial(const Value& c, std::size_t degree) const;
  /// Coefficient list with trailing zeros removed.
  Value normalize(std::vector<Value> coeffs) const;
  Value coefficient(const Value& f, std::size_t k) const;
  std::size_t length(const Value& f) const { return f.parts.size(); }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  RingHandle base_;
  std::string var_;
};

/// S[X]/(p) for a monic p of degree >= 1; elements are remainders.
class QuotientPolyRing final : public Ring {
 public:
  QuotientPolyRing(std::shared_ptr<const PolynomialRing> poly, Value relator);
  std::string spec() const override;
  RingKind kind() const override { return RingKind::quotient_poly; }
  bool is_finite() const override;
  std::size_t size() const override;
  std::vector<Value> elements() const override;
  Value zero() const override { return Value(); }
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_int(const Int& n) const override;
  std::string format(const Value& v) const override;
  Value sample(std::mt19937_64& rng, int size) const override;
  const PolynomialRing& poly() const { return *poly_; }
  Value reduce(const Value& f) const;

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  std::shared_ptr<const PolynomialRing> poly_;
  Value relator_;
  std::size_t degree_;
};

/// Z[1/a]: reduced fractions x/a^m with a not dividing x when m > 0.
class DomainLocalization final : public Ring {
 public:
  DomainLocalization(RingHandle base, Int denominator);
  std::string spec() const override;
  RingKind kind() const override { return RingKind::domain_localization; }
  Value zero() const override { return make(0, 0); }
  Value one() const override { return make(1, 0); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_int(const Int& n) const override { return make(n, 0); }
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& v) const override;
  Value sample(std::mt19937_64& rng, int size) const override;

  Value make(Int numerator, std::uint64_t exponent) const;
  const Int& numerator(const Value& v) const { return v.parts[0].num; }
  std::uint64_t exponent(const Value& v) const { return static_cast<std::uint64_t>(v.num); }
  const Int& denominator_base() const { return a_; }
  const RingHandle& base() const { return base_; }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  RingHandle base_;
  Int a_;
};

/// e*R for the idempotent power e = a^k of a in a finite ring R.
class IdempotentLocalization final : public Ring {
 public:
  IdempotentLocalization(RingHandle base, Value a);
  std::string spec() const override;
  RingKind kind() const override { return RingKind::idempotent_localization; }
  bool is_finite() const override { return true; }
  std::size_t size() const override { return members_.size(); }
  std::vector<Value> elements() const override { return members_; }
  Value zero() const override { return base_->zero(); }
  Value one() const override { return e_; }
  Value add(const Value& a, const Value& b) const override { return base_->add(a, b); }
  Value neg(const Value& a) const override { return base_->neg(a); }
  Value mul(const Value& a, const Value& b) const override { return base_->mul(a, b); }
  Value from_int(const Int& n) const override { return base_->mul(base_->from_int(n), e_); }
  std::string format(const Value& v) const override { return base_->format(v); }
  const RingHandle& base() const { return base_; }
  const Value& idempotent() const { return e_; }
  const Value& element() const { return a_; }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  RingHandle base_;
  Value a_;
  Value e_;
  std::vector<Value> members_;
};

class Ideal;

/// R/I for a finite R; elements are the least-index representatives.
class IdealQuotient final : public Ring {
 public:
  IdealQuotient(RingHandle base, const Ideal& ideal);
  std::string spec() const override { return spec_; }
  RingKind kind() const override { return RingKind::ideal_quotient; }
  bool is_finite() const override { return true; }
  std::size_t size() const override { return reps_.size(); }
  std::vector<Value> elements() const override { return reps_; }
  Value zero() const override { return base_->zero(); }
  Value one() const override { return canonical(base_->one()); }
  Value add(const Value& a, const Value& b) const override { return canonical(base_->add(a, b)); }
  Value neg(const Value& a) const override { return canonical(base_->neg(a)); }
  Value mul(const Value& a, const Value& b) const override { return canonical(base_->mul(a, b)); }
  Value from_int(const Int& n) const override { return canonical(base_->from_int(n)); }
  std::string format(const Value& v) const override { return base_->format(v); }
  Value canonical(const Value& x) const;
  const RingHandle& base() const { return base_; }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  RingHandle base_;
  std::string spec_;
  std::vector<Value> ideal_members_;
  std::vector<Value> reps_;
  std::vector<std::size_t> rep_of_;  // base index -> index into reps_
};

/// R x X*R_a[X] with (r,f)(r',f') = (rr', rf' + r'f + ff').
class SemidirectRing final : public Ring {
 public:
  SemidirectRing(RingHandle base, Value a, RingMorphism lambda);
  std::string spec() const override;
  RingKind kind() const override { return RingKind::semidirect; }
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value from_int(const Int& n) const override;
  std::string format(const Value& v) const override;
  Value sample(std::mt19937_64& rng, int size) const override;

  const RingHandle& base() const { return base_; }
  const Value& element() const { return a_; }
  const RingHandle& localized() const { return lambda_.target; }
  const RingMorphism& base_lambda() const { return lambda_; }
  const PolynomialRing& poly() const { return *poly_; }
  RingHandle poly_handle() const { return poly_; }
  Value make(const Value& r, const Value& f) const;
  Value lambda(const Value& r) const { return lambda_.action(r); }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  RingHandle base_;
  Value a_;
  std::shared_ptr<const PolynomialRing> poly_;
  RingMorphism lambda_;
};

/// Tabulated finite ring.  Values are indices; `structural()` is the ring the
/// table was built from.
class FiniteRing final : public Ring {
 public:
  static constexpr std::size_t max_size = 1024;

  explicit FiniteRing(RingHandle structural_ring);
  std::string spec() const override { return inner_->spec(); }
  RingKind kind() const override { return RingKind::finite; }
  bool is_finite() const override { return true; }
  std::size_t size() const override { return n_; }
  std::vector<Value> elements() const override;
  std::size_t index_of(const Value& v) const override { return static_cast<std::size_t>(v.num); }
  Value zero() const override { return Value(static_cast<int>(zero_)); }
  Value one() const override { return Value(static_cast<int>(one_)); }
  Value add(const Value& a, const Value& b) const override {
    return Value(static_cast<int>(add_[idx(a) * n_ + idx(b)]));
  }
  Value neg(const Value& a) const override { return Value(static_cast<int>(neg_[idx(a)])); }
  Value mul(const Value& a, const Value& b) const override {
    return Value(static_cast<int>(mul_[idx(a) * n_ + idx(b)]));
  }
  Value from_int(const Int& n) const override { return encode(inner_->from_int(n)); }
  std::optional<Value> inverse(const Value& a) const override;
  std::string format(const Value& v) const override { return inner_->format(decode(v)); }
  Value sample(std::mt19937_64& rng, int size) const override;

  RingHandle structural() const override { return inner_; }
  Value decode(const Value& v) const override { return structure_[idx(v)]; }
  Value encode(const Value& v) const override;

  // Raw index arithmetic for hot loops.
  std::uint16_t add_index(std::size_t a, std::size_t b) const { return add_[a * n_ + b]; }
  std::uint16_t mul_index(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::uint16_t neg_index(std::size_t a) const { return neg_[a]; }
  std::size_t zero_index() const { return zero_; }
  std::size_t one_index() const { return one_; }

 protected:
  Value from_literal(const Literal& lit) const override;

 private:
  static std::size_t idx(const Value& v) { return static_cast<std::size_t>(v.num); }

  RingHandle inner_;
  std::size_t n_ = 0;
  std::size_t zero_ = 0, one_ = 0;
  std::vector<Value> structure_;
  std::vector<std::uint16_t> add_, mul_, neg_;
  std::vector<std::pair<Value, std::size_t>> lookup_;  // sorted structural -> index
};

// ---------------------------------------------------------------------------

/// Builds a ring from its construction expression:
///   z | z/N | fP | prod(S,S) | poly(S,VAR) | loc(S,elem) | semi(S,elem)
///   | quo(poly(S,VAR),relator)
/// Finite results are tabulated.
RingHandle make_ring(std::string_view spec);

/// Wraps a finite structural ring into a FiniteRing (identity on infinite or
/// already tabulated rings).
RingHandle tabulate(RingHandle ring);

/// Finitely generated ideal, or a registered ideal given by a membership
/// predicate (e.g. the kernel X*R_a[X] of a semidirect ring).
class Ideal {
 public:
  static Ideal generated(RingHandle ring, std::vector<Value> generators);
  static Ideal zero(RingHandle ring) { return generated(std::move(ring), {}); }
  static Ideal whole(RingHandle ring);
  /// The ideal 0 x X*R_a[X] of a semidirect ring.
  static Ideal semidirect_kernel(RingHandle semidirect);
  /// The ideal (X) of a polynomial ring.
  static Ideal variable_ideal(RingHandle poly);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Value>& generators() const { return generators_; }
  bool is_registered() const { return static_cast<bool>(predicate_); }
  const std::string& description() const { return description_; }

  bool contains(const Value& x) const;
  /// All members in enumerator order; finite rings only.
  const std::vector<Value>& members() const;
  bool is_finite() const { return ring_->is_finite(); }

 private:
  RingHandle ring_;
  std::vector<Value> generators_;
  std::function<bool(const Value&)> predicate_;
  std::shared_ptr<const std::vector<Value>> members_;
  std::vector<char> member_flags_;
  std::string description_;
};

using FGIdeal = Ideal;

struct LocalizationResult {
  RingHandle ring;
  RingMorphism lambda;
};

LocalizationResult localization(const RingHandle& ring, const Value& a);

RingHandle semidirect_ring(const RingHandle& ring, const Value& a);
/// Projection (r,f) -> r and inclusion f -> (0,f) of a semidirect ring.
RingMorphism semidirect_projection(const RingHandle& semidirect);
RingMorphism semidirect_inclusion(const RingHandle& semidirect);

struct SolveResult {
  enum class Status { solved, no_solution, inconclusive } status = Status::inconclusive;
  std::vector<Value> coefficients;
  explicit operator bool() const { return status == Status::solved; }
};

/// Finds w with sum u_k w_k = b; lexicographically least in enumerator order
/// for finite rings, extended Euclid for z.
SolveResult lin_solve(const RingHandle& ring, const std::vector<Value>& u, const Value& b);

/// Division by a on an ideal where multiplication by a is bijective.  The
/// constructor verifies bijectivity (exhaustively for finite rings) and keeps
/// the inverse table.
class UniqueDivision {
 public:
  UniqueDivision(Ideal ideal, Value a);
  Value divide(const Value& m) const;
  const Ideal& ideal() const { return ideal_; }
  const Value& divisor() const { return a_; }

 private:
  Ideal ideal_;
  Value a_;
  std::vector<std::pair<Value, Value>> table_;  // finite: (a*x, x) sorted
  std::optional<Value> inverse_;                // semidirect: inverse of lambda(a)
};

Value unique_divide(const Ideal& ideal, const Value& a, const Value& m);

struct SplitData {
  RingHandle ring;
  Ideal ideal;
  RingHandle quotient;
  RingMorphism projection;  // pi: R -> R/I
  RingMorphism section;     // sigma: R/I -> R
};

/// Quotient R -> R/I (finite R, or (X) in a polynomial ring).
std::pair<RingHandle, RingMorphism> quotient_ring(const Ideal& ideal);

/// Unital ring section of R -> R/I, first under enumeration; nullopt when
/// none exists.
std::optional<SplitData> splitting_section(const Ideal& ideal);

/// Image of f in S[Y] under X -> a^n Y.
RingElement substitute(const RingElement& f, const RingElement& a, unsigned n);

/// Checks ring axioms exhaustively (|R| <= 64) or on `samples` random triples.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_ring_axioms(const Ring& ring, std::mt19937_64& rng,
                                             std::size_t samples = 1000);

}  // namespace steinberg
