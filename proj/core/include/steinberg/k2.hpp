#pragma once

// Finite presentations of St(Phi,R), exact word equality through coset
// tables, K2 extraction, the relative subgroup index and the amalgam of A3
// subsystem presentations.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steinberg/coset.hpp"
#include "steinberg/ring.hpp"
#include "steinberg/roots.hpp"
#include "steinberg/word.hpp"

namespace steinberg {

/// One column per (root, r != 0); the inverse of (a, r) is (a, -r).
struct StPresentation {
  RootSystem system;
  RingHandle ring;
  Presentation presentation;
  /// column_of[root][index_of(r)], -1 for r = 0.
  std::vector<std::vector<std::int32_t>> column_of;
  /// (root, r) for each column.
  std::vector<Letter> symbol;
  std::size_t s1_relators = 0;
  std::size_t s23_relators = 0;

  Presentation::Word word(const StWord& w) const;
  StWord st_word(const Presentation::Word& w) const;
};

/// Relators: S1 for all ordered pairs (r,s) of nonzero elements, S2/S3 for
/// all ordered root pairs a != +-b and nonzero (r,s).  Zero letters are
/// dropped.  Throws DomainError for infinite rings.
std::shared_ptr<const StPresentation> steinberg_presentation(const RootSystem& system, const RingHandle& ring);

/// Coset table of St(Phi,R) over the trivial subgroup.
struct SteinbergTable {
  std::shared_ptr<const StPresentation> presentation;
  CosetTable table;
  EnumerationStats stats;
};

SteinbergTable steinberg_table(const RootSystem& system, const RingHandle& ring, const EnumerationCaps& caps = {});

/// Word equality by evaluating both words from coset 0 of a St(Phi,R) table.
class ExactEquality final : public WordEquality {
 public:
  explicit ExactEquality(std::shared_ptr<const SteinbergTable> table) : table_(std::move(table)) {}
  Tier tier() const override { return Tier::exact; }
  bool equal(const StWord& a, const StWord& b) const override;
  std::size_t element(const StWord& w) const;
  const SteinbergTable& table() const { return *table_; }

 private:
  std::shared_ptr<const SteinbergTable> table_;
};

struct KernelReport {
  std::size_t st_order = 0;
  std::size_t image_order = 0;
  std::size_t kernel_order = 0;
  std::vector<std::size_t> kernel_cosets;
  bool central = true;
  /// (kernel coset, column) pairs that fail to commute.
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
  /// Every fiber of phi over the image has kernel_order cosets.
  bool fibers_uniform = true;
};

/// Maps every coset to its phi-matrix along a spanning tree.
KernelReport k2_compute(const SteinbergTable& t);

struct RelativeIndexReport {
  std::size_t index = 0;           // [St(Phi,R) : <z_a(s,r)>]
  std::size_t quotient_order = 0;  // |St(Phi,R/I)| by a separate enumeration
  std::size_t subgroup_generators = 0;
  std::string quotient_spec;
};

/// Words z_a(s,r) for all roots a, s in I \ 0, r in R.
std::vector<StWord> relative_generators(const RootSystem& system, const Ideal& ideal);

RelativeIndexReport relative_subgroup_index(const RootSystem& system, const Ideal& ideal,
                                            const EnumerationCaps& caps = {});

// ---------------------------------------------------------------------------
// Amalgam of A3 subsystem presentations.

struct AmalgamSymbol {
  std::size_t factor;  // index into AmalgamPresentation::factors
  std::size_t root;    // ambient root index
  Value s, r;
  int exponent = 1;
};

struct AmalgamRelator {
  std::string family;  // "additivity", "commutator", "gluing"
  std::vector<AmalgamSymbol> letters;
};

struct AmalgamPresentation {
  RootSystem system;
  RingHandle ring;
  std::vector<Value> ideal_nonzero;
  std::vector<SubsystemEmbedding> factors;
  std::size_t generators = 0;
  std::vector<AmalgamRelator> factor_relators;
  std::vector<AmalgamRelator> gluing_relators;
};

/// Factors: for each A3 subsystem Psi, generators z^Psi_a(s,r) (a in Psi,
/// s in I \ 0, r in R) with s-additivity and, at r = 0, the S2/S3 relations
/// among z_a(s,0) = x_a(s) with the restricted structure constants.
/// Gluing: z^Psi1_a(s,r) = z^Psi2_a(s,r) for subsystems sharing a.
AmalgamPresentation amalgam_presentation(const RootSystem& system, const Ideal& ideal);

/// Image of a relator under z^Psi_a(s,r) -> z_a(s,r).
StWord canonical_image(const AmalgamPresentation& p, const AmalgamRelator& rel);

struct CoverageReport {
  std::size_t total = 0;
  std::size_t covered = 0;
  std::vector<std::size_t> uncovered_roots;
};

/// Every (a, s, r) with s in I \ 0 must be a generator of some factor.
CoverageReport amalgam_coverage(const AmalgamPresentation& p);

}  // namespace steinberg
