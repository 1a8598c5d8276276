#pragma once

// Vectors and square matrices over a ring, root unipotents of the A and D
// realizations, transvections and elementary orbit witnesses.

#include <optional>
#include <string>
#include <vector>

#include "steinberg/ring.hpp"
#include "steinberg/roots.hpp"

namespace steinberg {

struct RVector {
  RingHandle ring;
  std::vector<Value> entries;

  RVector() = default;
  RVector(RingHandle r, std::vector<Value> e) : ring(std::move(r)), entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  const Value& operator[](std::size_t i) const { return entries[i]; }
  Value& operator[](std::size_t i) { return entries[i]; }
  bool operator==(const RVector& o) const { return entries == o.entries; }

  static RVector zero(RingHandle ring, std::size_t n);
  /// Standard basis vector e_i (0-based).
  static RVector basis(RingHandle ring, std::size_t n, std::size_t i);

  bool is_zero() const;
  std::size_t zero_count() const;
  RVector operator+(const RVector& o) const;
  RVector operator-(const RVector& o) const;
  RVector operator-() const;
  /// Right scalar multiplication v*c.
  RVector scaled(const Value& c) const;
  std::string to_string() const;
};

/// u^t v.
Value dot(const RVector& u, const RVector& v);

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(RingHandle ring, std::size_t n);  // zero matrix

  static RMatrix identity(RingHandle ring, std::size_t n);

  const RingHandle& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Value& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<Value>& data() const { return a_; }

  bool operator==(const RMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_identity() const;

  RMatrix operator*(const RMatrix& o) const;
  RVector operator*(const RVector& v) const;
  RMatrix transpose() const;

  /// In-place M <- M * t_a(x) and M <- t_a(x) * M, touching O(n) entries.
  void right_unipotent(const RootDatum& phi, std::size_t root, const Value& x);
  void left_unipotent(const RootDatum& phi, std::size_t root, const Value& x);

  std::string to_string() const;

 private:
  RingHandle ring_;
  std::size_t n_ = 0;
  std::vector<Value> a_;
};

/// t_a(x) in the A or D realization; UnsupportedError for E.
RMatrix unipotent(const RootDatum& phi, std::size_t root, const Value& x, const RingHandle& ring);

/// 1 + u v^t.
RMatrix transvection(const RVector& u, const RVector& v);

/// Gram matrix of the hyperbolic form of D_l: ones on the anti-diagonal.
RMatrix hyperbolic_gram(const RingHandle& ring, std::size_t n);

RVector map_vector(const RVector& v, const RingMorphism& f);
RMatrix map_matrix(const RMatrix& m, const RingMorphism& f);

/// w with w^t u = 1, or nullopt when u is not unimodular.  Throws
/// InconclusiveError for ring classes lin_solve cannot decide.
std::optional<RVector> is_unimodular(const RVector& u);

/// One factor x_{ij}(r) of an orbit witness (0-based indices).
struct ElementaryFactor {
  std::size_t i, j;
  Value r;
};

/// Factors g_1..g_k with g_1 * ... * g_k * e_1 = u, or nullopt when u is not
/// in E(n,R)e_1.  Finite rings: breadth-first search capped at `cap` vectors
/// (InconclusiveError beyond).  z: Euclidean reduction.
std::optional<std::vector<ElementaryFactor>> orbit_factors(const RVector& u, std::size_t cap = 1000000);

/// Order of E(Phi,R) by breadth-first search over matrices (finite R).
std::size_t matrix_group_order(const RootDatum& phi, const RingHandle& ring, std::size_t cap = 5000000);

/// All matrices of E(n,R) = E(A_{n-1},R) with a word for each, in BFS order
/// (finite R).  Each entry: the matrix and factors whose product is it.
struct GroupElementRecord {
  RMatrix matrix;
  std::vector<ElementaryFactor> factors;
};
std::vector<GroupElementRecord> enumerate_elementary_group(const RingHandle& ring, std::size_t n,
                                                           std::size_t cap = 5000000);

}  // namespace steinberg
