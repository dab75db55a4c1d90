#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spg/graph_oracle.hpp"

namespace spg {

struct CheckFailure {
  std::uint64_t m = 0;
  std::string check;
  std::string expected;
  std::string actual;
};

struct VerifyOutcome {
  std::uint64_t m = 0;
  std::size_t components_checked = 0;
  std::optional<CheckFailure> failure;
};

struct VerifyOptions {
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Runs every analytic-vs-oracle check for one modulus and stops at the
/// first mismatch.
VerifyOutcome verify_modulus(std::uint64_t m, const VerifyOptions& options = {});

/// Outcomes for every m in [from, to], ordered by m.
std::vector<VerifyOutcome> verify_range(std::uint64_t from, std::uint64_t to,
                                        const VerifyOptions& options = {});

}  // namespace spg
