#pragma once

// Finite presentations and Todd-Coxeter coset enumeration (HLT strategy with
// lookahead).  Tables are flat int32 arrays with deterministic numbering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steinberg {

/// Generator symbols are columns; every column has an inverse column (itself
/// for involutions).  Words are sequences of column indices.
struct Presentation {
  using Word = std::vector<std::uint32_t>;

  std::vector<std::string> names;
  std::vector<std::uint32_t> inverse;
  std::vector<Word> relators;

  std::size_t columns() const { return names.size(); }
  /// Adds a generator; returns its column.  With `involution` the column is
  /// its own inverse, otherwise a second column name^-1 is added.
  std::uint32_t add_generator(const std::string& name, bool involution = false);
  /// Adds a generator whose inverse is the existing column `inv`.
  std::uint32_t add_generator_with_inverse(const std::string& name, std::uint32_t inv);
  void add_relator(Word w);
  Word inverse_word(const Word& w) const;
  /// Throws SpecError on an unindexed letter or a bad inverse map.
  void validate() const;
  /// Stable FNV-1a digest of names, inverses and relators.
  std::uint64_t digest() const;
};

struct EnumerationCaps {
  std::size_t max_cosets = 1000000;
  /// Rows allocated before compaction/lookahead are attempted.
  std::size_t max_rows = 3000000;
};

class CosetTable {
 public:
  static constexpr std::int32_t undefined = -1;

  CosetTable() = default;
  CosetTable(std::size_t columns, std::size_t cosets, std::vector<std::int32_t> data);

  std::size_t size() const { return cosets_; }
  std::size_t columns() const { return columns_; }
  std::int32_t operator()(std::size_t coset, std::size_t column) const { return data_[coset * columns_ + column]; }
  const std::vector<std::int32_t>& data() const { return data_; }

  /// Coset reached from `coset` by the word, read left to right.
  std::size_t apply(std::size_t coset, const Presentation::Word& w) const;
  /// The permutation of all cosets induced by w.
  std::vector<std::uint32_t> permutation(const Presentation::Word& w) const;

  /// Every column a bijection and every relator fixing every coset; returns
  /// the first violation.
  std::optional<std::string> verify(const Presentation& p) const;

  /// Breadth-first spanning tree: a word from coset 0 to every coset, in
  /// column order (shortest, lexicographically least per layer).
  std::vector<Presentation::Word> coset_words() const;

 private:
  std::size_t columns_ = 0;
  std::size_t cosets_ = 0;
  std::vector<std::int32_t> data_;
};

struct EnumerationStats {
  std::size_t defined = 0;
  std::size_t max_live = 0;
  std::size_t lookaheads = 0;
  bool from_cache = false;
};

/// Coset table of the subgroup generated by `subgroup` in the group presented
/// by `p`.  Throws InconclusiveError when the caps are exhausted.  Results are
/// renumbered breadth-first from coset 0, so equal inputs give equal tables.
/// When the environment variable STEINBERG_CACHE names a directory, completed
/// tables are stored there keyed by a digest of (p, subgroup, caps).
CosetTable todd_coxeter(const Presentation& p, const std::vector<Presentation::Word>& subgroup,
                        const EnumerationCaps& caps = {}, EnumerationStats* stats = nullptr);

}  // namespace steinberg
