#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nccov/rng.hpp"

namespace nccov {

enum class Suite { matrix, vspace, transform, linear, polylinear, skew, geo, all };

enum class ReportFormat { json, text };

/// Throws ConfigError on unknown names.
Suite suite_from_string(const std::string& s);
std::string suite_to_string(Suite s);
ReportFormat format_from_string(const std::string& s);
std::string format_to_string(ReportFormat f);

struct SuiteConfig {
  Suite suite = Suite::all;
  std::size_t dim = 3;        // 1..8
  std::size_t trials = 200;   // >= 1
  std::size_t arity = 2;      // 1..3
  std::size_t max_terms = 3;  // >= 1
  std::uint64_t seed = 0;
  ReportFormat format = ReportFormat::json;
};

/// Throws ConfigError when a field is out of bounds.
void validate(const SuiteConfig& cfg);

struct PropertyResult {
  std::string name;
  std::string law;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  /// First failing instance, serialized; empty when all trials passed.
  std::string counterexample;
  long long elapsed_ms = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<PropertyResult> properties;
  long long elapsed_ms = 0;

  bool all_passed() const;
  std::size_t total_failures() const;
};

/// Fault-injection switches for exercising the harness itself: with
/// flip_product_order the hook-aware properties contract scalar factors in
/// the wrong order, which a non-commutative algebra must detect.
struct SuiteHooks {
  bool flip_product_order = false;
};

/// Runs every property of the chosen suite (all of them for Suite::all)
/// for cfg.trials trials each; a few grid-sweep properties run a fixed
/// fraction of that (at least one trial), and the report carries the count
/// actually run. Trial t of a property seeds its own generator from
/// (seed, sub-suite, property, t), so results do not depend on evaluation
/// order and sub-suite runs match the corresponding slice of an all-run.
SuiteReport run_suite(const SuiteConfig& cfg, const SuiteHooks& hooks = {});

std::string render_text(const SuiteReport& report, bool include_timing = false);
/// Deterministic two-space-indented JSON; timing is opt-in so that equal
/// configurations render byte-identical reports.
std::string render_json(const SuiteReport& report, bool include_timing = false);

}  // namespace nccov
