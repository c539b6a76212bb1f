#ifndef CYCLAB_RUNNER_HPP
#define CYCLAB_RUNNER_HPP

#include <string>
#include <vector>

#include "cyclab/corona.hpp"
#include "cyclab/serialize.hpp"

namespace cyclab {

inline constexpr const char* kVersion = "0.1.0";

/// A validated experiment manifest with all defaults materialized.
struct ExperimentManifest {
  std::string kind;
  json doc;
};

/// Parse and validate; fills defaults so the stored manifest has no hidden
/// parameters. Throws validation_error naming the offending field.
ExperimentManifest parse_manifest(const json& doc);

struct RunRecord {
  std::string manifest_hash;
  std::string version = kVersion;
  double elapsed_ms = 0.0;
  json manifest;
  json results;  // deterministic payload (no timing inside)
  std::vector<std::string> warnings;
  /// (filename, content) side outputs; every file embeds the manifest hash.
  std::vector<std::pair<std::string, std::string>> csv_files;

  json to_json() const;  // embeds hash, conventions, warnings and timing
};

/// Execute one experiment. tolerance_scale multiplies every tolerance in the
/// manifest (recorded in the results).
RunRecord run(const ExperimentManifest& manifest, double tolerance_scale = 1.0);

struct SuiteRow {
  std::string id;           // e.g. "criterion-01"
  std::string description;
  bool passed = false;
  double elapsed_s = 0.0;
  double budget_s = 0.0;
  json details;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteRow> rows;
  bool all_passed = true;

  /// Deterministic payload (row ids + details, no timing): the object the
  /// determinism criterion compares byte-for-byte.
  std::string payload() const;
  json summary() const;
};

/// Run a named suite. "paper-s5" reproduces the desk-scale checks rows 1-9
/// plus an internal double-run determinism row; "smoke" is a fast sanity set.
/// Rows may execute concurrently (threads > 1); results are gathered in row
/// order. Throws unknown_suite_error for unknown names.
SuiteResult suite(const std::string& name, int threads = 1, double tolerance_scale = 1.0);

std::vector<std::string> list_suites();

/// FNV-1a 64-bit hash of the canonical (sorted-key) JSON dump.
std::string canonical_hash(const json& doc);

json conventions_json();

void write_run_outputs(const RunRecord& record, const std::string& out_dir);
void write_suite_outputs(const SuiteResult& result, const std::string& out_dir);

/// The rational symbols used across the desk-scale checks: polynomial and
/// genuinely rational b's, including one whose mate has a multiplicity-2
/// boundary zero.
std::vector<Rat> paper_b_family();

/// f1 = z, f2 = t with t log-spaced so delta spans over 1.5 decades; the
/// closed-form solutions have norm 1/delta (fit unbiasedness anchor).
std::vector<CoronaInstance> constant_corona_family();

/// Quadratic pairs f1 = ((z-1-d)/(2+d))^2 / 2, f2 = ((1-z)/2)^2 / 2 whose
/// zeros approach the boundary as d shrinks.
std::vector<CoronaInstance> boundary_corona_family();

}  // namespace cyclab

#endif
