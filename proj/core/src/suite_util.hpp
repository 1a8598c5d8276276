#pragma once

// Shared plumbing of the verification suites.

#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "steinberg/k2.hpp"
#include "steinberg/matrix.hpp"
#include "steinberg/ring.hpp"
#include "steinberg/verify.hpp"
#include "steinberg/word.hpp"

namespace steinberg::detail {

class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string tier, bool exhaustive);

  /// Counts one instance; on failure stores the witness (built lazily).
  void record(bool ok, const std::function<std::string()>& witness);
  void inconclusive(const std::string& why);
  void note(const std::string& text) { rec_.note = text; }
  void set_exhaustive(bool e) { rec_.exhaustive = e; }
  nlohmann::json& data() { return rec_.data; }
  CheckRecord finish();

 private:
  CheckRecord rec_;
  std::chrono::steady_clock::time_point start_;
};

struct SuiteContext {
  const SuiteConfig& config;
  VerificationReport& report;
  std::mt19937_64 rng;

  std::size_t samples(std::size_t fallback) const { return config.samples.value_or(fallback); }
  void add(CheckRecord r) { report.checks.push_back(std::move(r)); }
  void warn(const std::string& w) { report.warnings.push_back(w); }
};

/// |R|^k as a double (infinite rings give +inf).
double power_size(const RingHandle& ring, double k);

/// All of R^n in lexicographic element order (finite R).
std::vector<RVector> all_vectors(const RingHandle& ring, std::size_t n);
RVector random_vector(const RingHandle& ring, std::size_t n, std::mt19937_64& rng, int size = 3);
StWord random_elementary(const RingHandle& ring, std::size_t n, std::size_t length, std::mt19937_64& rng);
Value random_element(const RingHandle& ring, std::mt19937_64& rng, int size = 3);

/// e_p u_q - e_q u_p.
RVector pair_vector(const RVector& u, std::size_t p, std::size_t q);
/// sum over p < q of pair_vector(u,p,q) c_pq as separate terms (zero
/// coefficients skipped).
std::vector<RVector> pair_terms_of(const RVector& u, const std::vector<Value>& coeffs);

/// Equality for words in St(n, R) under a tier policy.  Exact tables are
/// memoized per (ring spec, n, caps) for the life of the process.  Throws
/// InconclusiveError when an exact table exceeds the caps.
std::shared_ptr<const WordEquality> equality_for(const std::string& policy, std::size_t n, const RingHandle& ring,
                                                 const EnumerationCaps& caps);
std::shared_ptr<const SteinbergTable> cached_table(const RootSystem& system, const RingHandle& ring,
                                                   const EnumerationCaps& caps);

std::string words_witness(const RingHandle& ring, const std::string& what, const StWord& lhs, const StWord& rhs);

void suite_chevalley(SuiteContext& s);
void suite_vdk(SuiteContext& s);
void suite_tulenbaev(SuiteContext& s);
void suite_xeqy(SuiteContext& s);
void suite_star(SuiteContext& s);
void suite_psi(SuiteContext& s);
void suite_k2(SuiteContext& s);
void suite_relative(SuiteContext& s);
void suite_amalgam(SuiteContext& s);
void suite_tmap(SuiteContext& s);

}  // namespace steinberg::detail
