#pragma once

// Simply-laced root systems A_l, D_l, E_l with a fixed sign convention for
// the structure constants N_{a,b}.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steinberg {

using Root = std::vector<int>;

enum class Family { A, D, E };

class RootDatum {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_[i]; }
  std::optional<std::size_t> find(const Root& r) const;
  std::size_t index(const Root& r) const;
  std::size_t negative(std::size_t i) const { return neg_[i]; }
  /// Index of roots[i] + roots[j] when that sum is a root.
  std::optional<std::size_t> sum(std::size_t i, std::size_t j) const;
  int inner(std::size_t i, std::size_t j) const { return gram_[i * roots_.size() + j]; }

  /// N_{a,b}; throws DomainError when a+b is not a root.
  int structure_constant(std::size_t i, std::size_t j) const;
  int structure_constant(const Root& a, const Root& b) const;
  const std::map<std::pair<std::size_t, std::size_t>, int>& sign_table() const { return signs_; }

  /// Matrix realization for A and D.  A_l: size l+1; D_l: size 2l with
  /// coordinates ordered (1..l, -l..-1).
  bool has_matrices() const { return family_ != Family::E; }
  std::size_t matrix_size() const;
  /// For A: the pair (i,j) with root e_i - e_j (0-based).  For D: the index
  /// pair (p,q) such that t_a(x) = 1 + x e_{pq} - x e_{q'p'}, where p' is the
  /// index of the opposite coordinate.
  std::pair<std::size_t, std::size_t> matrix_pair(std::size_t i) const { return pairs_[i]; }
  /// Opposite coordinate index in the D realization (p <-> 2l-1-p).
  std::size_t mirror(std::size_t p) const { return matrix_size() - 1 - p; }

  /// A only: index of the root e_i - e_j (0-based i != j).
  std::size_t a_root(std::size_t i, std::size_t j) const;

  static std::shared_ptr<const RootDatum> build(Family family, int rank);
  /// "A3", "D4", "E6", ...
  static std::shared_ptr<const RootDatum> parse(std::string_view name);

 private:
  void finish();

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<Root> roots_;
  std::vector<int> form_;  // Gram matrix of the coordinate space (row-major)
  std::size_t dim_ = 0;
  std::map<Root, std::size_t> lookup_;
  std::vector<std::size_t> neg_;
  std::vector<int> gram_;
  std::vector<long> sums_;  // -1 when not a root
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::map<std::pair<std::size_t, std::size_t>, int> signs_;
};

using RootSystem = std::shared_ptr<const RootDatum>;

/// An A_3 subsystem with its embedding into the ambient system:
/// embedding[k] is the ambient index of the k-th root of the standard A_3.
struct SubsystemEmbedding {
  std::vector<std::size_t> roots;      // ambient indices, sorted
  std::vector<std::size_t> embedding;  // standard A3 index -> ambient index
};

/// All closed A_3 subsystems (Phi intersected with a rational span).
std::vector<SubsystemEmbedding> a3_subsystems(const RootDatum& phi);

}  // namespace steinberg
