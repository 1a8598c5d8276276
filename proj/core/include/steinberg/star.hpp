#pragma once

// Generator domains and relator instances of the presentations of
// St*(n,R,I) (families R1-R4) and of the relative group through X(u,v)
// (the split additivity T3'), checked through iota at a chosen tier.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "steinberg/matrix.hpp"
#include "steinberg/ring.hpp"
#include "steinberg/vdk.hpp"
#include "steinberg/word.hpp"

namespace steinberg {

struct OrbitVector {
  RVector u;
  std::vector<ElementaryFactor> factors;  // product applied to e_1 gives u
  RVector certificate;                    // M^* e_1, so certificate^t u = 1
};

/// E(n,R)e_1 with witnesses by breadth-first search from e_1 (finite R).
std::vector<OrbitVector> orbit_with_witnesses(const RingHandle& ring, std::size_t n, std::size_t cap = 1000000);

/// All vectors of I^n in enumerator order (finite R).
std::vector<RVector> ideal_vectors(const Ideal& ideal, std::size_t n);

/// Elementary matrices as factor lists: the whole group when it is small
/// enough (|R|^(n^2) <= 2^20), otherwise `samples` random products of
/// `length` random elementary factors.  `exhaustive` reports which.
std::vector<std::vector<ElementaryFactor>> elementary_sample(const RingHandle& ring, std::size_t n,
                                                             std::size_t samples, std::size_t length,
                                                             std::mt19937_64& rng, bool& exhaustive);

struct StarDomain {
  RingHandle ring;
  Ideal ideal;
  std::size_t n = 4;
  std::vector<OrbitVector> orbit;
  std::vector<RVector> ideal_vecs;
  /// orthogonal[k]: indices into ideal_vecs orthogonal to orbit[k].u.
  std::vector<std::vector<std::size_t>> orthogonal;
};

StarDomain star_domain(const Ideal& ideal, std::size_t n, std::size_t cap = 1000000);

struct StarLetter {
  StarSymbol symbol;
  int exponent = 1;
};

/// lhs = rhs in St*(n,R,I); checked through iota.
struct StarRelator {
  std::string family;
  std::vector<StarLetter> lhs;
  std::vector<StarLetter> rhs;
};

/// Families: "R1", "R2", "R3", "R4", "T3'".  At most `limit` instances;
/// exhaustive when the family is no larger, otherwise sampled with `rng`.
std::vector<StarRelator> star_relators(const StarDomain& d, const std::string& family, std::size_t limit,
                                       std::mt19937_64& rng, bool& exhaustive);

StWord iota_word(const std::vector<StarLetter>& letters, std::size_t n, const RingHandle& ring);

/// iota(lhs) == iota(rhs) at the tier of `eq`.
bool check_star_relator(const StarRelator& r, const WordEquality& eq, std::size_t n, const RingHandle& ring);

}  // namespace steinberg
