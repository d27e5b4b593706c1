#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdg/invariants.hpp"

namespace zdg {

enum class CheckStatus { Pass, Fail, ExpectedDeviation };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

struct SuiteCase {
  std::string id;  // "<suite>/<instance>"
  std::vector<Check> checks;
  /// Table row for CSV output, columns in order.
  std::vector<std::pair<std::string, std::string>> row;

  std::string value(std::string_view column) const;
};

struct SuiteSummary {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t deviations = 0;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteCase> cases;
  SuiteSummary summary;
  /// Not serialized; reports stay byte-stable.
  double wall_seconds = 0;
};

struct SuiteParams {
  std::uint32_t zn_max_n = 200;
  /// Automorphism-order checks run for n up to this bound.
  std::uint32_t zn_aut_max_n = 100;
  std::uint32_t semisimple_max_order = 200;
  /// Exhaustive confirmation for rings with at most this many zero-divisors.
  std::uint32_t semisimple_exhaustive_max = 16;
  std::uint32_t boolean_max_n = 7;
  std::uint32_t gap_max_k = 6;
  /// Bound-only gap instances run from gap_max_k + 1 up to this.
  std::uint32_t gap_bound_max_k = 15;
  std::uint32_t join_instances = 20;
  std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit;
  std::size_t workers = 1;
};

inline constexpr std::uint32_t kSuiteMaxN = 4096;
inline constexpr std::uint32_t kSuiteMaxBooleanN = 10;
inline constexpr std::uint32_t kSuiteMaxGapK = 40;

/// Suites: zn, semisimple, boolean, join, gap, all. Throws
/// std::invalid_argument for an unknown name, std::out_of_range when a
/// parameter is outside the supported bounds.
SuiteReport run_suite(std::string_view name, const SuiteParams& params = {});

std::vector<std::string> suite_names();

/// 0 when no check failed, 1 otherwise.
int exit_status(const SuiteReport& report);

}  // namespace zdg
