#pragma once

// Batch verification: suite configuration, per-check records and reports
// with canonical JSON (sorted keys, no timings) and a text rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steinberg/coset.hpp"
#include "steinberg/error.hpp"

namespace steinberg {

struct SuiteConfig {
  std::string suite;
  std::vector<std::string> rings;    // empty: suite default
  std::vector<std::string> systems;  // empty: suite default
  std::size_t n = 4;
  std::optional<std::string> ideal;    // element literal generating I
  std::optional<std::string> element;  // the element a of the lifting suite
  std::optional<std::size_t> samples;  // empty: suite default
  std::uint64_t seed = 1;
  std::string tier = "auto";  // exact | matrix | auto
  EnumerationCaps caps;
  /// Adds a check that compares x_12(1) with the identity, which must fail.
  bool inject_fault = false;

  /// Throws SpecError on unknown keys, wrong types or bad values.
  static SuiteConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  void validate() const;
};

struct CheckRecord {
  std::string name;
  std::string tier;  // "exact", "matrix" or "syntactic"
  bool exhaustive = false;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool inconclusive = false;
  /// Inconclusive required checks fail the report.
  bool required = true;
  std::string note;
  std::vector<std::string> witnesses;  // at most max_witnesses
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0;  // text report only

  static constexpr std::size_t max_witnesses = 10;
  bool pass() const { return failures == 0 && !(inconclusive && required); }
};

struct VerificationReport {
  static constexpr const char* schema = "steinberg-verify/1";
  std::string suite;
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  std::vector<std::string> warnings;

  bool pass() const;
  /// Canonical document: sorted keys, no wall times.
  nlohmann::json to_json() const;
  /// to_json().dump(2) with a trailing newline.
  std::string json_text() const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite.  Deterministic for a fixed config.  Throws SpecError for
/// an invalid config; cap exhaustion is reported as inconclusive checks.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace steinberg
