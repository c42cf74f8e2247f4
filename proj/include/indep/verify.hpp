#pragma once

// Named theorem suites: each binds a statement about closure operators and
// independence relations to exhaustive checks over catalog instances.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indep/axioms.hpp"
#include "indep/instances.hpp"

namespace indep {

struct CheckRecord {
  std::string subject;  // "u34/aM", "g5-0012/st", "rnd7@u34/a"
  std::string check;    // axiom name or a named comparison such as "EQ(aM,cl)"
  Status status = Status::Pass;
  bool ok = true;       // status is what the statement predicts
  std::vector<Subset> witness;
  std::string detail;
  std::uint64_t scanned = 0;
};

struct InstanceResult {
  std::string instance;
  bool passed = true;
  std::vector<CheckRecord> checks;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<InstanceResult> instances;
  std::uint64_t scanned = 0;  // quantifier instances examined, summed over checks
  std::chrono::nanoseconds elapsed{0};
};

struct SuiteInfo {
  std::string_view id;
  std::string_view statement;
  std::string_view scope;
};
std::span<const SuiteInfo> list_suites();

struct SuiteOptions {
  // Replaces the suite's default instance selection when set.
  std::optional<std::vector<Instance>> instances;
  IntervalMode intervals = IntervalMode::Inclusive;
  unsigned random_relations = 100;
};

// Throws UnknownSuite for an unknown id.
SuiteResult run_suite(std::string_view id, const SuiteOptions& options = {});

// Summary table, one line per instance plus one per unexpected check. No
// timings, so the text is identical across runs and worker counts.
std::string format_summary(const SuiteResult& result);
// One RESULT line per check, in run order.
std::string format_result_lines(const SuiteResult& result);

}  // namespace indep
