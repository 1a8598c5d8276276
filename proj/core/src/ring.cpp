#include "steinberg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace steinberg {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor-mod into [0, m).
Int mod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

std::size_t to_size(const Int& n) { return static_cast<std::size_t>(n); }

// Splits "a,b,c" at depth-0 commas.
std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string join_formatted(const Ring& ring, const std::vector<Value>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += ring.format(values[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Value

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.num < b.num) return std::strong_ordering::less;
  if (b.num < a.num) return std::strong_ordering::greater;
  const std::size_t n = std::min(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.parts[i] <=> b.parts[i];
    if (c != 0) return c;
  }
  return a.parts.size() <=> b.parts.size();
}

std::size_t hash_value(const Value& v) {
  std::size_t h;
  if (v.num >= std::numeric_limits<long long>::min() && v.num <= std::numeric_limits<long long>::max())
    h = std::hash<long long>{}(static_cast<long long>(v.num));
  else
    h = std::hash<std::string>{}(v.num.str());
  for (const auto& p : v.parts) h = h * 1000003u ^ hash_value(p);
  return h ^ (v.parts.size() * 0x9e3779b97f4a7c15ull);
}

// ---------------------------------------------------------------------------
// Ring defaults

std::vector<Value> Ring::elements() const {
  throw UnsupportedError("ring " + spec() + " is not enumerable");
}

std::size_t Ring::index_of(const Value& v) const {
  const auto all = elements();
  auto it = std::find(all.begin(), all.end(), v);
  if (it == all.end()) throw DomainError("value is not an element of " + spec());
  return static_cast<std::size_t>(it - all.begin());
}

Value Ring::from_int(const Int& n) const {
  Value result = zero();
  Value base = n < 0 ? neg(one()) : one();
  Int e = n < 0 ? Int(-n) : n;
  while (e > 0) {
    if (e & 1) result = add(result, base);
    base = add(base, base);
    e >>= 1;
  }
  return result;
}

Value Ring::pow(const Value& a, std::uint64_t e) const {
  Value result = one();
  Value base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

std::optional<Value> Ring::inverse(const Value& a) const {
  if (!is_finite()) return std::nullopt;
  for (const auto& x : elements())
    if (is_one(mul(a, x))) return x;
  return std::nullopt;
}

Value Ring::parse(std::string_view literal) const { return from_literal(parse_literal(literal)); }

Value Ring::from_literal(const Literal&) const {
  throw SpecError("ring " + spec() + " does not accept element literals");
}

Value Ring::sample(std::mt19937_64& rng, int) const {
  if (!is_finite()) throw UnsupportedError("no sampler for " + spec());
  const auto all = elements();
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

namespace {

struct LiteralParser {
  std::string text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError("malformed element literal '" + text + "': " + what);
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  Int integer() {
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    std::string digits = text.substr(start, pos - start);
    if (digits[0] == '+') digits.erase(0, 1);
    return Int(digits);
  }
  Ring::Literal literal() {
    Ring::Literal lit;
    if (peek() == '(' || peek() == '[') {
      const char close = peek() == '(' ? ')' : ']';
      lit.shape = peek() == '(' ? Ring::Literal::Shape::tuple : Ring::Literal::Shape::list;
      ++pos;
      if (peek() != close) {
        lit.items.push_back(literal());
        while (peek() == ',') {
          ++pos;
          lit.items.push_back(literal());
        }
      }
      expect(close);
      return lit;
    }
    lit.num = integer();
    if (peek() == '/') {
      ++pos;
      lit.shape = Ring::Literal::Shape::fraction;
      lit.den = integer();
      if (lit.den == 0) fail("zero denominator");
    }
    return lit;
  }
};

Int literal_integer(const Ring::Literal& lit, const std::string& ring) {
  if (lit.shape != Ring::Literal::Shape::integer)
    throw SpecError("expected an integer literal for " + ring);
  return lit.num;
}

}  // namespace

Ring::Literal Ring::parse_literal(std::string_view text) {
  LiteralParser p{strip_spaces(text)};
  auto lit = p.literal();
  if (p.pos != p.text.size()) p.fail("trailing characters");
  return lit;
}

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a.spec() == b.spec(); }
bool same_ring(const RingHandle& a, const RingHandle& b) {
  return a == b || (a && b && a->spec() == b->spec());
}

// ---------------------------------------------------------------------------
// RingElement

namespace {
void require_same(const RingElement& a, const RingElement& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw DomainError("elements of different rings: " + a.ring()->spec() + " vs " + b.ring()->spec());
}
}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
  require_same(*this, o);
  return {ring_, ring_->add(value_, o.value_)};
}
RingElement RingElement::operator-(const RingElement& o) const {
  require_same(*this, o);
  return {ring_, ring_->sub(value_, o.value_)};
}
RingElement RingElement::operator-() const { return {ring_, ring_->neg(value_)}; }
RingElement RingElement::operator*(const RingElement& o) const {
  require_same(*this, o);
  return {ring_, ring_->mul(value_, o.value_)};
}
bool RingElement::operator==(const RingElement& o) const {
  return same_ring(ring_, o.ring_) && value_ == o.value_;
}

RingElement element(const RingHandle& ring, std::string_view literal) {
  return {ring, ring->parse(literal)};
}
RingElement element(const RingHandle& ring, long long n) { return {ring, ring->from_int(n)}; }

RingElement RingMorphism::operator()(const RingElement& x) const {
  if (!same_ring(x.ring(), source))
    throw DomainError("morphism " + name + " applied outside its source " + source->spec());
  return {target, action(x.value())};
}

std::vector<Value> RingMorphism::preimages(const Value& y) const {
  if (fiber) return fiber(y);
  if (!source->is_finite()) throw UnsupportedError("no fiber enumeration for " + name);
  std::vector<Value> out;
  for (const auto& x : source->elements())
    if (action(x) == y) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Integers

std::optional<Value> IntegerRing::inverse(const Value& a) const {
  if (a.num == 1 || a.num == -1) return a;
  return std::nullopt;
}

Value IntegerRing::sample(std::mt19937_64& rng, int size) const {
  std::uniform_int_distribution<long long> d(-size, size);
  return Value(Int(d(rng)));
}

Value IntegerRing::from_literal(const Literal& lit) const { return Value(literal_integer(lit, "z")); }

// ---------------------------------------------------------------------------
// z/N

ModularRing::ModularRing(Int modulus, std::string alias)
    : modulus_(std::move(modulus)), alias_(std::move(alias)) {
  if (modulus_ < 1) throw SpecError("modulus must be positive");
}

std::string ModularRing::spec() const { return alias_.empty() ? "z/" + modulus_.str() : alias_; }
std::size_t ModularRing::size() const { return to_size(modulus_); }
std::vector<Value> ModularRing::elements() const {
  std::vector<Value> out;
  for (Int i = 0; i < modulus_; ++i) out.emplace_back(i);
  return out;
}
std::size_t ModularRing::index_of(const Value& v) const { return to_size(v.num); }
Value ModularRing::one() const { return Value(mod(1, modulus_)); }
Value ModularRing::add(const Value& a, const Value& b) const { return Value(mod(a.num + b.num, modulus_)); }
Value ModularRing::neg(const Value& a) const { return Value(mod(-a.num, modulus_)); }
Value ModularRing::mul(const Value& a, const Value& b) const { return Value(mod(a.num * b.num, modulus_)); }
Value ModularRing::from_int(const Int& n) const { return Value(mod(n, modulus_)); }
Value ModularRing::from_literal(const Literal& lit) const {
  return Value(mod(literal_integer(lit, spec()), modulus_));
}

// ---------------------------------------------------------------------------
// Products

ProductRing::ProductRing(RingHandle first, RingHandle second)
    : first_(std::move(first)), second_(std::move(second)) {}

std::string ProductRing::spec() const { return "prod(" + first_->spec() + "," + second_->spec() + ")"; }
bool ProductRing::is_finite() const { return first_->is_finite() && second_->is_finite(); }
std::size_t ProductRing::size() const { return first_->size() * second_->size(); }
std::vector<Value> ProductRing::elements() const {
  std::vector<Value> out;
  const auto as = first_->elements();
  const auto bs = second_->elements();
  for (const auto& a : as)
    for (const auto& b : bs) out.push_back(Value(0, {a, b}));
  return out;
}
Value ProductRing::zero() const { return Value(0, {first_->zero(), second_->zero()}); }
Value ProductRing::one() const { return Value(0, {first_->one(), second_->one()}); }
Value ProductRing::add(const Value& a, const Value& b) const {
  return Value(0, {first_->add(a.parts[0], b.parts[0]), second_->add(a.parts[1], b.parts[1])});
}
Value ProductRing::neg(const Value& a) const {
  return Value(0, {first_->neg(a.parts[0]), second_->neg(a.parts[1])});
}
Value ProductRing::mul(const Value& a, const Value& b) const {
  return Value(0, {first_->mul(a.parts[0], b.parts[0]), second_->mul(a.parts[1], b.parts[1])});
}
Value ProductRing::from_int(const Int& n) const {
  return Value(0, {first_->from_int(n), second_->from_int(n)});
}
std::optional<Value> ProductRing::inverse(const Value& a) const {
  auto x = first_->inverse(a.parts[0]);
  auto y = second_->inverse(a.parts[1]);
  if (!x || !y) return std::nullopt;
  return Value(0, {*x, *y});
}
std::string ProductRing::format(const Value& v) const {
  return "(" + first_->format(v.parts[0]) + "," + second_->format(v.parts[1]) + ")";
}
Value ProductRing::sample(std::mt19937_64& rng, int size) const {
  return Value(0, {first_->sample(rng, size), second_->sample(rng, size)});
}
Value ProductRing::from_literal(const Literal& lit) const {
  if (lit.shape == Literal::Shape::integer) return from_int(lit.num);
  if (lit.shape != Literal::Shape::tuple || lit.items.size() != 2)
    throw SpecError("expected a pair literal for " + spec());
  return Value(0, {first_->value_from_literal(lit.items[0]), second_->value_from_literal(lit.items[1])});
}

// ---------------------------------------------------------------------------
// Polynomials

PolynomialRing::PolynomialRing(RingHandle base, std::string var)
    : base_(std::move(base)), var_(std::move(var)) {}

std::string PolynomialRing::spec() const { return "poly(" + base_->spec() + "," + var_ + ")"; }

Value PolynomialRing::normalize(std::vector<Value> coeffs) const {
  while (!coeffs.empty() && base_->is_zero(coeffs.back())) coeffs.pop_back();
  return Value(0, std::move(coeffs));
}

Value PolynomialRing::coefficient(const Value& f, std::size_t k) const {
  return k < f.parts.size() ? f.parts[k] : base_->zero();
}

Value PolynomialRing::constant(const Value& c) const { return normalize({c}); }

Value PolynomialRing::monomial(const Value& c, std::size_t degree) const {
  std::vector<Value> coeffs(degree + 1, base_->zero());
  coeffs[degree] = c;
  return normalize(std::move(coeffs));
}

Value PolynomialRing::one() const { return constant(base_->one()); }

Value PolynomialRing::add(const Value& a, const Value& b) const {
  const std::size_t n = std::max(a.parts.size(), b.parts.size());
  std::vector<Value> c;
  c.reserve(n);
  for (std::size_t k = 0; k < n; ++k) c.push_back(base_->add(coefficient(a, k), coefficient(b, k)));
  return normalize(std::move(c));
}

Value PolynomialRing::neg(const Value& a) const {
  std::vector<Value> c;
  c.reserve(a.parts.size());
  for (const auto& x : a.parts) c.push_back(base_->neg(x));
  return normalize(std::move(c));
}

Value PolynomialRing::mul(const Value& a, const Value& b) const {
  if (a.parts.empty() || b.parts.empty()) return zero();
  std::vector<Value> c(a.parts.size() + b.parts.size() - 1, base_->zero());
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (base_->is_zero(a.parts[i])) continue;
    for (std::size_t j = 0; j < b.parts.size(); ++j)
      c[i + j] = base_->add(c[i + j], base_->mul(a.parts[i], b.parts[j]));
  }
  return normalize(std::move(c));
}

Value PolynomialRing::from_int(const Int& n) const { return constant(base_->from_int(n)); }

std::optional<Value> PolynomialRing::inverse(const Value& a) const {
  // Only constant units; nilpotent coefficients are not searched for.
  if (a.parts.size() != 1) return std::nullopt;
  auto c = base_->inverse(a.parts[0]);
  if (!c) return std::nullopt;
  return constant(*c);
}

std::string PolynomialRing::format(const Value& v) const { return "[" + join_formatted(*base_, v.parts) + "]"; }

Value PolynomialRing::sample(std::mt19937_64& rng, int size) const {
  std::uniform_int_distribution<int> deg(0, std::max(0, size));
  std::vector<Value> c;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) c.push_back(base_->sample(rng, size));
  return normalize(std::move(c));
}

Value PolynomialRing::from_literal(const Literal& lit) const {
  if (lit.shape == Literal::Shape::list) {
    std::vector<Value> c;
    for (const auto& item : lit.items) c.push_back(base_->value_from_literal(item));
    return normalize(std::move(c));
  }
  return constant(base_->value_from_literal(lit));
}

// ---------------------------------------------------------------------------
// S[X]/(p)

QuotientPolyRing::QuotientPolyRing(std::shared_ptr<const PolynomialRing> poly, Value relator)
    : poly_(std::move(poly)), relator_(std::move(relator)) {
  if (relator_.parts.size() < 2) throw SpecError("quotient relator must have degree >= 1");
  if (!poly_->base()->is_one(relator_.parts.back())) throw SpecError("quotient relator must be monic");
  degree_ = relator_.parts.size() - 1;
}

std::string QuotientPolyRing::spec() const {
  return "quo(" + poly_->spec() + "," + poly_->format(relator_) + ")";
}

bool QuotientPolyRing::is_finite() const { return poly_->base()->is_finite(); }

std::size_t QuotientPolyRing::size() const {
  std::size_t n = 1;
  for (std::size_t k = 0; k < degree_; ++k) n *= poly_->base()->size();
  return n;
}

std::vector<Value> QuotientPolyRing::elements() const {
  const auto base = poly_->base()->elements();
  std::vector<Value> out;
  std::vector<std::size_t> digits(degree_, 0);
  const std::size_t total = size();
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Value> c;
    for (std::size_t k = 0; k < degree_; ++k) c.push_back(base[digits[k]]);
    out.push_back(poly_->normalize(std::move(c)));
    for (std::size_t k = 0; k < degree_; ++k) {
      if (++digits[k] < base.size()) break;
      digits[k] = 0;
    }
  }
  return out;
}

Value QuotientPolyRing::reduce(const Value& f) const {
  const auto& base = *poly_->base();
  std::vector<Value> c = f.parts;
  while (c.size() > degree_) {
    const Value lead = c.back();
    const std::size_t shift = c.size() - 1 - degree_;
    for (std::size_t k = 0; k <= degree_; ++k)
      c[shift + k] = base.sub(c[shift + k], base.mul(lead, relator_.parts[k]));
    c.pop_back();
  }
  return poly_->normalize(std::move(c));
}

Value QuotientPolyRing::one() const { return poly_->one(); }
Value QuotientPolyRing::add(const Value& a, const Value& b) const { return poly_->add(a, b); }
Value QuotientPolyRing::neg(const Value& a) const { return poly_->neg(a); }
Value QuotientPolyRing::mul(const Value& a, const Value& b) const { return reduce(poly_->mul(a, b)); }
Value QuotientPolyRing::from_int(const Int& n) const { return poly_->from_int(n); }
std::string QuotientPolyRing::format(const Value& v) const { return poly_->format(v); }
Value QuotientPolyRing::sample(std::mt19937_64& rng, int size) const {
  return reduce(poly_->sample(rng, size));
}
Value QuotientPolyRing::from_literal(const Literal& lit) const { return reduce(poly_->value_from_literal(lit)); }

// ---------------------------------------------------------------------------
// Z[1/a]

DomainLocalization::DomainLocalization(RingHandle base, Int denominator)
    : base_(std::move(base)), a_(std::move(denominator)) {
  if (base_->kind() != RingKind::integers) throw UnsupportedError("fraction localization needs base z");
  if (a_ == 0) throw DomainError("cannot invert 0");
}

std::string DomainLocalization::spec() const { return "loc(" + base_->spec() + "," + a_.str() + ")"; }

Value DomainLocalization::make(Int x, std::uint64_t m) const {
  if (a_ == 1 || a_ == -1) {
    if (a_ == -1 && (m & 1)) x = -x;
    return Value(0, {Value(std::move(x))});
  }
  if (x == 0) return Value(0, {Value(0)});
  while (m > 0 && x % a_ == 0) {
    x /= a_;
    --m;
  }
  return Value(Int(m), {Value(std::move(x))});
}

namespace {
Int int_pow(const Int& a, std::uint64_t e) {
  Int r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= a;
  return r;
}
}  // namespace

Value DomainLocalization::add(const Value& a, const Value& b) const {
  const auto ma = exponent(a), mb = exponent(b);
  const auto m = std::max(ma, mb);
  return make(numerator(a) * int_pow(a_, m - ma) + numerator(b) * int_pow(a_, m - mb), m);
}
Value DomainLocalization::neg(const Value& a) const { return make(-numerator(a), exponent(a)); }
Value DomainLocalization::mul(const Value& a, const Value& b) const {
  return make(numerator(a) * numerator(b), exponent(a) + exponent(b));
}

std::optional<Value> DomainLocalization::inverse(const Value& v) const {
  Int x = numerator(v);
  if (x == 0) return std::nullopt;
  Int y = x < 0 ? Int(-x) : x;
  for (Int g = gcd(y, a_); g > 1; g = gcd(y, a_)) y /= g;
  if (y != 1) return std::nullopt;
  // x divides a^j for some j.
  std::uint64_t j = 0;
  Int p = 1;
  while (p % x != 0) {
    p *= a_;
    ++j;
  }
  return make((p / x) * int_pow(a_, exponent(v)), j);
}

std::string DomainLocalization::format(const Value& v) const {
  if (exponent(v) == 0) return numerator(v).str();
  return numerator(v).str() + "/" + int_pow(a_, exponent(v)).str();
}

Value DomainLocalization::sample(std::mt19937_64& rng, int size) const {
  std::uniform_int_distribution<long long> num(-size, size);
  std::uniform_int_distribution<int> e(0, 2);
  return make(Int(num(rng)), static_cast<std::uint64_t>(e(rng)));
}

Value DomainLocalization::from_literal(const Literal& lit) const {
  if (lit.shape == Literal::Shape::integer) return make(lit.num, 0);
  if (lit.shape != Literal::Shape::fraction) throw SpecError("expected a fraction literal for " + spec());
  Int d = lit.den;
  Int n = lit.num;
  if (d < 0) {
    d = -d;
    n = -n;
  }
  std::uint64_t m = 0;
  Int p = 1;
  while (p < d) {
    p *= (a_ < 0 ? Int(-a_) : a_);
    ++m;
  }
  if (p != d) throw SpecError("denominator " + d.str() + " is not a power of " + a_.str());
  if (a_ < 0 && (m & 1)) n = -n;
  return make(n, m);
}

// ---------------------------------------------------------------------------
// e*R

IdempotentLocalization::IdempotentLocalization(RingHandle base, Value a)
    : base_(std::move(base)), a_(std::move(a)) {
  if (!base_->is_finite()) throw UnsupportedError("idempotent localization needs a finite ring");
  Value p = a_;
  bool found = false;
  for (std::size_t k = 0; k <= base_->size() + 1; ++k) {
    if (base_->mul(p, p) == p) {
      found = true;
      break;
    }
    p = base_->mul(p, a_);
  }
  if (!found) throw Error("no idempotent power found in " + base_->spec());
  e_ = p;
  for (const auto& x : base_->elements())
    if (base_->mul(x, e_) == x) members_.push_back(x);
}

std::string IdempotentLocalization::spec() const {
  return "loc(" + base_->spec() + "," + base_->format(a_) + ")";
}

Value IdempotentLocalization::from_literal(const Literal& lit) const {
  Value x = base_->value_from_literal(lit);
  if (base_->mul(x, e_) != x) throw SpecError("literal is not in the localized ring " + spec());
  return x;
}

// ---------------------------------------------------------------------------
// R/I

IdealQuotient::IdealQuotient(RingHandle base, const Ideal& ideal) : base_(std::move(base)) {
  if (!base_->is_finite()) throw UnsupportedError("ideal quotient needs a finite ring");
  spec_ = "quo(" + base_->spec() + ",(" + join_formatted(*base_, ideal.generators()) + "))";
  ideal_members_ = ideal.members();
  const auto all = base_->elements();
  rep_of_.assign(all.size(), 0);
  std::vector<char> seen(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    const std::size_t rep = reps_.size();
    reps_.push_back(all[i]);
    for (const auto& m : ideal_members_) {
      const std::size_t j = base_->index_of(base_->add(all[i], m));
      seen[j] = 1;
      rep_of_[j] = rep;
    }
  }
}

Value IdealQuotient::canonical(const Value& x) const { return reps_[rep_of_[base_->index_of(x)]]; }

Value IdealQuotient::from_literal(const Literal& lit) const { return canonical(base_->value_from_literal(lit)); }

// ---------------------------------------------------------------------------
// R x X R_a[X]

SemidirectRing::SemidirectRing(RingHandle base, Value a, RingMorphism lambda)
    : base_(std::move(base)),
      a_(std::move(a)),
      poly_(std::make_shared<PolynomialRing>(lambda.target, "X")),
      lambda_(std::move(lambda)) {}

std::string SemidirectRing::spec() const { return "semi(" + base_->spec() + "," + base_->format(a_) + ")"; }

Value SemidirectRing::make(const Value& r, const Value& f) const {
  if (!f.parts.empty() && !poly_->base()->is_zero(f.parts[0]))
    throw DomainError("semidirect ideal component must have zero constant term");
  return Value(0, {r, f});
}

Value SemidirectRing::zero() const { return Value(0, {base_->zero(), poly_->zero()}); }
Value SemidirectRing::one() const { return Value(0, {base_->one(), poly_->zero()}); }
Value SemidirectRing::add(const Value& a, const Value& b) const {
  return Value(0, {base_->add(a.parts[0], b.parts[0]), poly_->add(a.parts[1], b.parts[1])});
}
Value SemidirectRing::neg(const Value& a) const {
  return Value(0, {base_->neg(a.parts[0]), poly_->neg(a.parts[1])});
}
Value SemidirectRing::mul(const Value& a, const Value& b) const {
  const Value& r = a.parts[0];
  const Value& f = a.parts[1];
  const Value& r2 = b.parts[0];
  const Value& f2 = b.parts[1];
  Value g = poly_->mul(poly_->constant(lambda(r)), f2);
  g = poly_->add(g, poly_->mul(poly_->constant(lambda(r2)), f));
  g = poly_->add(g, poly_->mul(f, f2));
  return Value(0, {base_->mul(r, r2), std::move(g)});
}
Value SemidirectRing::from_int(const Int& n) const { return Value(0, {base_->from_int(n), poly_->zero()}); }
std::string SemidirectRing::format(const Value& v) const {
  return "(" + base_->format(v.parts[0]) + "," + poly_->format(v.parts[1]) + ")";
}
Value SemidirectRing::sample(std::mt19937_64& rng, int size) const {
  Value f = poly_->mul(poly_->monomial(poly_->base()->one(), 1), poly_->sample(rng, std::max(0, size - 1)));
  return Value(0, {base_->sample(rng, size), std::move(f)});
}
Value SemidirectRing::from_literal(const Literal& lit) const {
  if (lit.shape == Literal::Shape::integer) return from_int(lit.num);
  if (lit.shape != Literal::Shape::tuple || lit.items.size() != 2)
    throw SpecError("expected (r,[0,f1,...]) literal for " + spec());
  return make(base_->value_from_literal(lit.items[0]), poly_->value_from_literal(lit.items[1]));
}

// ---------------------------------------------------------------------------
// Tabulation

FiniteRing::FiniteRing(RingHandle structural_ring) : inner_(std::move(structural_ring)) {
  if (!inner_->is_finite()) throw UnsupportedError("cannot tabulate infinite ring " + inner_->spec());
  n_ = inner_->size();
  if (n_ > max_size) throw UnsupportedError("finite ring " + inner_->spec() + " exceeds table size");
  structure_ = inner_->elements();
  if (structure_.size() != n_) throw Error("enumerator size mismatch for " + inner_->spec());
  lookup_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) lookup_.emplace_back(structure_[i], i);
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < n_; ++i)
    if (lookup_[i].first == lookup_[i - 1].first) throw Error("enumerator repeats an element");
  auto index = [&](const Value& v) { return static_cast<std::uint16_t>(to_size(encode(v).num)); };
  zero_ = index(inner_->zero());
  one_ = index(inner_->one());
  add_.resize(n_ * n_);
  mul_.resize(n_ * n_);
  neg_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    neg_[i] = index(inner_->neg(structure_[i]));
    for (std::size_t j = 0; j < n_; ++j) {
      add_[i * n_ + j] = index(inner_->add(structure_[i], structure_[j]));
      mul_[i * n_ + j] = index(inner_->mul(structure_[i], structure_[j]));
    }
  }
}

std::vector<Value> FiniteRing::elements() const {
  std::vector<Value> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.emplace_back(static_cast<int>(i));
  return out;
}

Value FiniteRing::encode(const Value& v) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), v,
                             [](const auto& entry, const Value& key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != v) throw DomainError("value is not an element of " + spec());
  return Value(static_cast<int>(it->second));
}

std::optional<Value> FiniteRing::inverse(const Value& a) const {
  const std::size_t i = idx(a);
  for (std::size_t j = 0; j < n_; ++j)
    if (mul_[i * n_ + j] == one_) return Value(static_cast<int>(j));
  return std::nullopt;
}

Value FiniteRing::sample(std::mt19937_64& rng, int) const {
  std::uniform_int_distribution<std::size_t> d(0, n_ - 1);
  return Value(static_cast<int>(d(rng)));
}

Value FiniteRing::from_literal(const Literal& lit) const { return encode(inner_->value_from_literal(lit)); }

RingHandle tabulate(RingHandle ring) {
  if (!ring->is_finite() || ring->kind() == RingKind::finite || ring->size() > FiniteRing::max_size)
    return ring;
  return std::make_shared<FiniteRing>(std::move(ring));
}

// ---------------------------------------------------------------------------
// Spec parser

namespace {

// Parses a polynomial expression like "X^2+2*X-1" or a list literal.
Value parse_poly_expression(const PolynomialRing& poly, const std::string& text) {
  if (!text.empty() && text[0] == '[') return poly.parse(text);
  const auto& base = *poly.base();
  const std::string& var = poly.variable();
  Value result = poly.zero();
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    Int coeff = pos > start ? Int(text.substr(start, pos - start)) : Int(1);
    if (pos < text.size() && text[pos] == '*') ++pos;
    std::size_t degree = 0;
    if (text.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s == pos) throw SpecError("bad exponent in relator '" + text + "'");
        degree = std::stoul(text.substr(s, pos - s));
      }
    } else if (pos == start) {
      throw SpecError("bad term in relator '" + text + "'");
    }
    result = poly.add(result, poly.monomial(base.from_int(coeff * sign), degree));
  }
  return result;
}

struct SpecParser {
  RingHandle parse(const std::string& s) {
    if (s == "z") return std::make_shared<IntegerRing>();
    if (s.rfind("z/", 0) == 0) {
      const std::string digits = s.substr(2);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw SpecError("malformed modulus in '" + s + "'");
      return tabulate(std::make_shared<ModularRing>(Int(digits)));
    }
    if (s.size() >= 2 && s[0] == 'f' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
      Int p(s.substr(1));
      if (!is_prime(p)) throw SpecError("'" + s + "' is not a prime field");
      return tabulate(std::make_shared<ModularRing>(p, s));
    }
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw SpecError("malformed ring spec '" + s + "'");
    const std::string head = s.substr(0, open);
    const auto args = split_args(std::string_view(s).substr(open + 1, s.size() - open - 2));
    auto need = [&](std::size_t n) {
      if (args.size() != n) throw SpecError(head + " expects " + std::to_string(n) + " arguments in '" + s + "'");
    };
    if (head == "prod") {
      need(2);
      return tabulate(std::make_shared<ProductRing>(parse(args[0]), parse(args[1])));
    }
    if (head == "poly") {
      need(2);
      if (args[1].empty() || !std::isalpha(static_cast<unsigned char>(args[1][0])))
        throw SpecError("bad variable name in '" + s + "'");
      return std::make_shared<PolynomialRing>(parse(args[0]), args[1]);
    }
    if (head == "loc") {
      need(2);
      auto base = parse(args[0]);
      return localization(base, base->parse(args[1])).ring;
    }
    if (head == "semi") {
      need(2);
      auto base = parse(args[0]);
      return semidirect_ring(base, base->parse(args[1]));
    }
    if (head == "quo") {
      need(2);
      auto inner = parse(args[0]);
      auto poly = std::dynamic_pointer_cast<const PolynomialRing>(inner);
      if (!poly) throw SpecError("quo expects a polynomial ring as first argument in '" + s + "'");
      Value relator = parse_poly_expression(*poly, args[1]);
      return tabulate(std::make_shared<QuotientPolyRing>(poly, relator));
    }
    throw SpecError("unknown ring construction '" + head + "'");
  }
};

}  // namespace

RingHandle make_ring(std::string_view spec) {
  const std::string s = strip_spaces(spec);
  if (s.empty()) throw SpecError("empty ring spec");
  return SpecParser{}.parse(s);
}

// ---------------------------------------------------------------------------
// Localization

LocalizationResult localization(const RingHandle& ring, const Value& a) {
  if (ring->is_finite()) {
    auto inner = std::make_shared<IdempotentLocalization>(ring, a);
    RingHandle target = tabulate(inner);
    const Value e = inner->idempotent();
    RingMorphism lambda{ring, target,
                        [ring, target, e](const Value& x) { return target->encode(ring->mul(x, e)); },
                        "lambda_" + ring->format(a), {}};
    return {target, std::move(lambda)};
  }
  const auto kind = ring->kind();
  if (kind == RingKind::integers) {
    if (a.num == 0) {
      RingHandle target = tabulate(std::make_shared<ModularRing>(1));
      RingMorphism lambda{ring, target, [target](const Value&) { return target->zero(); }, "lambda_0", {}};
      return {target, std::move(lambda)};
    }
    auto loc = std::make_shared<DomainLocalization>(ring, a.num);
    RingMorphism lambda{ring, loc, [loc](const Value& x) { return loc->make(x.num, 0); },
                        "lambda_" + a.num.str(),
                        [loc](const Value& y) {
                          std::vector<Value> out;
                          if (loc->exponent(y) == 0) out.emplace_back(loc->numerator(y));
                          return out;
                        }};
    return {loc, std::move(lambda)};
  }
  if (kind == RingKind::semidirect) {
    // (R x X R_a[X])_a = R_a[X].
    auto semi = std::dynamic_pointer_cast<const SemidirectRing>(ring);
    if (!(a.parts.size() == 2 && a.parts[0] == semi->element() && a.parts[1].parts.empty()))
      throw UnsupportedError("semidirect rings localize only at their own element");
    RingHandle target = semi->poly_handle();
    RingMorphism lambda{
        ring, target,
        [semi](const Value& x) {
          const auto& p = semi->poly();
          return p.add(p.constant(semi->lambda(x.parts[0])), x.parts[1]);
        },
        "lambda_" + ring->format(a),
        [semi](const Value& y) {
          const auto& p = semi->poly();
          const Value c0 = p.coefficient(y, 0);
          const Value tail = p.sub(y, p.constant(c0));
          std::vector<Value> out;
          for (const auto& r : semi->base_lambda().preimages(c0)) out.push_back(Value(0, {r, tail}));
          return out;
        }};
    return {target, std::move(lambda)};
  }
  throw UnsupportedError("localization of " + ring->spec() + " is not supported");
}

RingHandle semidirect_ring(const RingHandle& ring, const Value& a) {
  auto loc = localization(ring, a);
  if (loc.ring->is_finite() && loc.ring->size() == 1)
    throw DomainError("semidirect product needs a non-nilpotent element");
  return std::make_shared<SemidirectRing>(ring, a, std::move(loc.lambda));
}

RingMorphism semidirect_projection(const RingHandle& semidirect) {
  auto semi = std::dynamic_pointer_cast<const SemidirectRing>(semidirect);
  if (!semi) throw DomainError("not a semidirect ring: " + semidirect->spec());
  return {semidirect, semi->base(), [](const Value& x) { return x.parts[0]; }, "proj", {}};
}

RingMorphism semidirect_inclusion(const RingHandle& semidirect) {
  auto semi = std::dynamic_pointer_cast<const SemidirectRing>(semidirect);
  if (!semi) throw DomainError("not a semidirect ring: " + semidirect->spec());
  return {semi->poly_handle(), semidirect,
          [semi](const Value& f) { return semi->make(semi->base()->zero(), f); }, "incl", {}};
}

// ---------------------------------------------------------------------------
// Linear solving

namespace {

std::vector<char> ideal_flags(const Ring& ring, const std::vector<Value>& all, const std::vector<Value>& gens) {
  std::vector<char> flags(all.size(), 0);
  flags[ring.index_of(ring.zero())] = 1;
  for (const auto& g : gens) {
    std::vector<char> multiples(all.size(), 0);
    for (const auto& r : all) multiples[ring.index_of(ring.mul(g, r))] = 1;
    std::vector<char> next(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!flags[i]) continue;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (multiples[j]) next[ring.index_of(ring.add(all[i], all[j]))] = 1;
    }
    flags.swap(next);
  }
  return flags;
}

// Extended gcd: returns g and coefficients with sum c_k u_k = g.
Int extended_gcd(const std::vector<Int>& u, std::vector<Int>& coeffs) {
  coeffs.assign(u.size(), 0);
  Int g = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    // Combine g = sum coeffs * u so far with u[k].
    Int old_r = g, r = u[k], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
    for (std::size_t j = 0; j < k; ++j) coeffs[j] *= old_s;
    coeffs[k] = old_t;
    g = old_r;
  }
  if (g < 0) {
    g = -g;
    for (auto& c : coeffs) c = -c;
  }
  return g;
}

}  // namespace

SolveResult lin_solve(const RingHandle& ring, const std::vector<Value>& u, const Value& b) {
  SolveResult result;
  if (ring->is_finite() && ring->size() <= (1u << 16)) {
    const auto all = ring->elements();
    // suffix[j] = ideal generated by u[j..].
    std::vector<std::vector<char>> suffix(u.size() + 1);
    suffix[u.size()] = ideal_flags(*ring, all, {});
    for (std::size_t j = u.size(); j-- > 0;)
      suffix[j] = ideal_flags(*ring, all, std::vector<Value>(u.begin() + static_cast<long>(j), u.end()));
    if (!suffix[0][ring->index_of(b)]) {
      result.status = SolveResult::Status::no_solution;
      return result;
    }
    Value rem = b;
    for (std::size_t j = 0; j < u.size(); ++j) {
      for (const auto& w : all) {
        Value next = ring->sub(rem, ring->mul(u[j], w));
        if (suffix[j + 1][ring->index_of(next)]) {
          result.coefficients.push_back(w);
          rem = std::move(next);
          break;
        }
      }
    }
    result.status = SolveResult::Status::solved;
    return result;
  }
  if (ring->kind() == RingKind::integers) {
    std::vector<Int> ui;
    for (const auto& x : u) ui.push_back(x.num);
    std::vector<Int> c;
    const Int g = extended_gcd(ui, c);
    if (g == 0) {
      if (b.num != 0) {
        result.status = SolveResult::Status::no_solution;
        return result;
      }
      result.coefficients.assign(u.size(), Value(0));
      result.status = SolveResult::Status::solved;
      return result;
    }
    if (b.num % g != 0) {
      result.status = SolveResult::Status::no_solution;
      return result;
    }
    const Int f = b.num / g;
    for (auto& x : c) result.coefficients.emplace_back(x * f);
    result.status = SolveResult::Status::solved;
    return result;
  }
  result.status = SolveResult::Status::inconclusive;
  return result;
}

// ---------------------------------------------------------------------------
// Ideals

Ideal Ideal::generated(RingHandle ring, std::vector<Value> generators) {
  Ideal I;
  I.ring_ = std::move(ring);
  I.generators_ = std::move(generators);
  I.description_ = "(" + join_formatted(*I.ring_, I.generators_) + ")";
  if (I.ring_->is_finite()) {
    const auto all = I.ring_->elements();
    I.member_flags_ = ideal_flags(*I.ring_, all, I.generators_);
    auto members = std::make_shared<std::vector<Value>>();
    for (std::size_t i = 0; i < all.size(); ++i)
      if (I.member_flags_[i]) members->push_back(all[i]);
    I.members_ = std::move(members);
  }
  return I;
}

Ideal Ideal::whole(RingHandle ring) {
  auto one = ring->one();
  return generated(std::move(ring), {one});
}

Ideal Ideal::semidirect_kernel(RingHandle semidirect) {
  auto semi = std::dynamic_pointer_cast<const SemidirectRing>(semidirect);
  if (!semi) throw DomainError("not a semidirect ring: " + semidirect->spec());
  Ideal I;
  I.ring_ = semidirect;
  I.predicate_ = [semi](const Value& x) { return semi->base()->is_zero(x.parts[0]); };
  I.description_ = "X*" + semi->localized()->spec() + "[X]";
  return I;
}

Ideal Ideal::variable_ideal(RingHandle poly_ring) {
  auto poly = std::dynamic_pointer_cast<const PolynomialRing>(poly_ring);
  if (!poly) throw DomainError("not a polynomial ring: " + poly_ring->spec());
  Ideal I;
  I.ring_ = poly_ring;
  I.generators_ = {poly->monomial(poly->base()->one(), 1)};
  I.predicate_ = [poly](const Value& f) { return poly->base()->is_zero(poly->coefficient(f, 0)); };
  I.description_ = "(" + poly->variable() + ")";
  return I;
}

bool Ideal::contains(const Value& x) const {
  if (predicate_) return predicate_(x);
  if (ring_->is_finite()) return member_flags_[ring_->index_of(x)] != 0;
  auto solved = lin_solve(ring_, generators_, x);
  if (solved.status == SolveResult::Status::inconclusive)
    throw UnsupportedError("ideal membership undecidable in " + ring_->spec());
  return solved.status == SolveResult::Status::solved;
}

const std::vector<Value>& Ideal::members() const {
  if (!members_) throw UnsupportedError("ideal of infinite ring " + ring_->spec() + " is not enumerable");
  return *members_;
}

// ---------------------------------------------------------------------------
// Unique division

UniqueDivision::UniqueDivision(Ideal ideal, Value a) : ideal_(std::move(ideal)), a_(std::move(a)) {
  const auto& R = *ideal_.ring();
  if (R.is_finite()) {
    for (const auto& x : ideal_.members()) table_.emplace_back(R.mul(a_, x), x);
    std::sort(table_.begin(), table_.end());
    for (std::size_t i = 1; i < table_.size(); ++i)
      if (table_[i].first == table_[i - 1].first)
        throw DivisibilityError("ideal " + ideal_.description() + " is not uniquely " + R.format(a_) +
                                "-divisible");
    return;
  }
  if (R.kind() == RingKind::semidirect && ideal_.is_registered()) {
    auto semi = std::dynamic_pointer_cast<const SemidirectRing>(ideal_.ring());
    if (!a_.parts[1].parts.empty())
      throw UnsupportedError("division on X*R_a[X] only by elements of the base ring");
    inverse_ = semi->localized()->inverse(semi->lambda(a_.parts[0]));
    if (!inverse_)
      throw DivisibilityError("ideal " + ideal_.description() + " is not uniquely " + R.format(a_) +
                              "-divisible");
    return;
  }
  if (R.kind() == RingKind::integers) {
    if (a_.num == 0) throw DivisibilityError("division by 0");
    return;
  }
  throw UnsupportedError("unique division is not supported in " + R.spec());
}

Value UniqueDivision::divide(const Value& m) const {
  const auto& R = *ideal_.ring();
  if (!ideal_.contains(m)) throw DomainError(R.format(m) + " is not in " + ideal_.description());
  if (R.is_finite()) {
    auto it = std::lower_bound(table_.begin(), table_.end(), m,
                               [](const auto& e, const Value& key) { return e.first < key; });
    if (it == table_.end() || it->first != m)
      throw DivisibilityError(R.format(m) + " has no quotient by " + R.format(a_) + " in " +
                              ideal_.description());
    return it->second;
  }
  if (inverse_) {
    auto semi = std::dynamic_pointer_cast<const SemidirectRing>(ideal_.ring());
    const auto& p = semi->poly();
    return semi->make(semi->base()->zero(), p.mul(p.constant(*inverse_), m.parts[1]));
  }
  // z
  if (m.num % a_.num != 0)
    throw DivisibilityError(R.format(m) + " is not divisible by " + R.format(a_));
  Value q(m.num / a_.num);
  if (!ideal_.contains(q)) throw DivisibilityError("quotient leaves the ideal " + ideal_.description());
  return q;
}

Value unique_divide(const Ideal& ideal, const Value& a, const Value& m) {
  return UniqueDivision(ideal, a).divide(m);
}

// ---------------------------------------------------------------------------
// Quotients and sections

std::pair<RingHandle, RingMorphism> quotient_ring(const Ideal& ideal) {
  const RingHandle& R = ideal.ring();
  if (R->is_finite()) {
    auto inner = std::make_shared<IdealQuotient>(R, ideal);
    RingHandle Q = tabulate(inner);
    RingMorphism pi{R, Q, [Q, inner](const Value& x) { return Q->encode(inner->canonical(x)); }, "pi", {}};
    return {Q, std::move(pi)};
  }
  if (auto poly = std::dynamic_pointer_cast<const PolynomialRing>(R); poly && ideal.is_registered() &&
                                                                      ideal.description() == "(" + poly->variable() + ")") {
    RingHandle Q = poly->base();
    RingMorphism pi{R, Q, [poly](const Value& f) { return poly->coefficient(f, 0); }, "pi", {}};
    return {Q, std::move(pi)};
  }
  throw UnsupportedError("quotient of " + R->spec() + " by " + ideal.description() + " is not supported");
}

std::optional<SplitData> splitting_section(const Ideal& ideal) {
  const RingHandle& R = ideal.ring();
  auto [Q, pi] = quotient_ring(ideal);
  if (!R->is_finite()) {
    auto poly = std::dynamic_pointer_cast<const PolynomialRing>(R);
    if (!poly) throw UnsupportedError("no registered section for " + R->spec());
    RingMorphism sigma{Q, R, [poly](const Value& c) { return poly->constant(c); }, "sigma", {}};
    return SplitData{R, ideal, Q, pi, std::move(sigma)};
  }
  const auto qs = Q->elements();
  const auto rs = R->elements();
  const std::size_t m = qs.size();
  std::vector<std::vector<Value>> fibers(m);
  for (const auto& r : rs) fibers[Q->index_of(pi(r))].push_back(r);

  std::vector<std::optional<Value>> sigma(m);
  const std::size_t zq = Q->index_of(Q->zero()), oq = Q->index_of(Q->one());

  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!sigma[j]) continue;
      const std::size_t s = Q->index_of(Q->add(qs[i], qs[j]));
      const std::size_t p = Q->index_of(Q->mul(qs[i], qs[j]));
      if (sigma[s] && *sigma[s] != R->add(*sigma[i], *sigma[j])) return false;
      if (sigma[p] && *sigma[p] != R->mul(*sigma[i], *sigma[j])) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == m) return true;
    if (sigma[i]) return consistent(i) && search(i + 1);
    for (const auto& candidate : fibers[i]) {
      sigma[i] = candidate;
      if (consistent(i) && search(i + 1)) return true;
    }
    sigma[i].reset();
    return false;
  };

  sigma[zq] = R->zero();
  if (oq != zq) sigma[oq] = R->one();
  else if (!R->is_zero(R->one())) return std::nullopt;
  if (!search(0)) return std::nullopt;

  std::vector<Value> table;
  for (auto& s : sigma) table.push_back(*s);
  RingMorphism section{Q, R, [Q, table](const Value& q) { return table[Q->index_of(q)]; }, "sigma", {}};
  return SplitData{R, ideal, Q, pi, std::move(section)};
}

// ---------------------------------------------------------------------------

RingElement substitute(const RingElement& f, const RingElement& a, unsigned n) {
  auto poly = std::dynamic_pointer_cast<const PolynomialRing>(f.ring());
  if (!poly) throw DomainError("substitute expects a polynomial, got an element of " + f.ring()->spec());
  if (!same_ring(poly->base(), a.ring()))
    throw DomainError("substitution element must lie in " + poly->base()->spec());
  auto target = std::make_shared<PolynomialRing>(poly->base(), "Y");
  const auto& S = *poly->base();
  const Value scale = S.pow(a.value(), n);
  std::vector<Value> coeffs;
  Value factor = S.one();
  for (const auto& c : f.value().parts) {
    coeffs.push_back(S.mul(c, factor));
    factor = S.mul(factor, scale);
  }
  return {target, target->normalize(std::move(coeffs))};
}

std::optional<std::string> check_ring_axioms(const Ring& R, std::mt19937_64& rng, std::size_t samples) {
  auto check = [&](const Value& a, const Value& b, const Value& c) -> std::optional<std::string> {
    auto fail = [&](const char* law) {
      return std::string(law) + " fails at (" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")";
    };
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) return fail("additive associativity");
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) return fail("multiplicative associativity");
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) return fail("distributivity");
    if (R.mul(a, b) != R.mul(b, a)) return fail("commutativity");
    if (R.add(a, b) != R.add(b, a)) return fail("additive commutativity");
    if (R.add(a, R.zero()) != a) return fail("zero law");
    if (R.mul(a, R.one()) != a) return fail("unit law");
    if (!R.is_zero(R.add(a, R.neg(a)))) return fail("negation");
    return std::nullopt;
  };
  if (R.is_finite() && R.size() <= 64) {
    const auto all = R.elements();
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          if (auto err = check(a, b, c)) return err;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    Value a = R.sample(rng, 3), b = R.sample(rng, 3), c = R.sample(rng, 3);
    if (auto err = check(a, b, c)) return err;
  }
  return std::nullopt;
}

}  // namespace steinberg
