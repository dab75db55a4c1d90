#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spg/arith.hpp"

namespace spg {

inline constexpr double kFinchA = 0.4408;
double three_over_pi_squared();
double six_over_pi_squared();

/// a(m): residues lying on cycles, the sum of phi(m / g_I) over all I.
std::uint64_t cyclic_count(const Factorization& f);

/// |{x^k mod m : 0 <= x < m}| by enumeration; throws BudgetExceeded when
/// m > budget.
std::uint64_t power_image_count(std::uint64_t m, std::uint64_t k,
                                std::uint64_t budget = 10'000'000);

struct ScanRow {
  std::uint64_t N = 0;
  std::uint64_t sum_a = 0;
  std::uint64_t sum_phi = 0;
  std::uint64_t sum_idempotents = 0;
  std::optional<std::uint64_t> sum_sq_images;
  std::optional<std::uint64_t> sum_cube_images;

  double ratio_a() const;
  double ratio_phi() const;
  double mean_idempotents() const;
  std::optional<double> sq_image_mean() const;
  std::optional<double> cube_image_mean() const;
};

struct ScanReport {
  ScanRow totals;
  /// Rows at N = 2, 4, 8, ... below the bound, then the bound itself.
  std::vector<ScanRow> checkpoints;
};

struct ScanOptions {
  /// Image counts are enumerated only while the sum of moduli stays within
  /// this many residues; otherwise they are omitted.
  std::uint64_t image_budget = 50'000'000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Aggregates over 2 <= m <= N. Throws DomainError for N < 2.
ScanReport scan(std::uint64_t N, const ScanOptions& options = {});

}  // namespace spg
