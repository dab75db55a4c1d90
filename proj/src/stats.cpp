#include "spg/stats.hpp"

#include <bit>
#include <numbers>
#include <vector>

#include "spg/errors.hpp"
#include "spg/idempotents.hpp"
#include "spg/parallel.hpp"

namespace spg {

double three_over_pi_squared() { return 3.0 / (std::numbers::pi * std::numbers::pi); }
double six_over_pi_squared() { return 6.0 / (std::numbers::pi * std::numbers::pi); }

std::uint64_t cyclic_count(const Factorization& f) {
  const std::uint64_t m = f.modulus();
  std::uint64_t a = 0;
  for (const auto& I : all_index_sets(static_cast<unsigned>(f.arity()))) {
    const std::uint64_t cofactor = m / prime_power_part(f, I);
    a += cofactor == 1 ? 1 : euler_phi(cofactor);
  }
  return a;
}

std::uint64_t power_image_count(std::uint64_t m, std::uint64_t k, std::uint64_t budget) {
  if (m < 1 || k < 1) throw DomainError("power_image_count needs m >= 1 and k >= 1");
  if (m > budget)
    throw BudgetExceeded("image count for m = " + std::to_string(m) + " exceeds budget " +
                         std::to_string(budget));
  std::vector<bool> hit(m, false);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < m; ++x) {
    const auto y = mod_pow(x, k, m);
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count;
}

double ScanRow::ratio_a() const { return static_cast<double>(sum_a) / (double(N) * double(N)); }
double ScanRow::ratio_phi() const {
  return static_cast<double>(sum_phi) / (double(N) * double(N));
}
double ScanRow::mean_idempotents() const { return double(sum_idempotents) / double(N); }
std::optional<double> ScanRow::sq_image_mean() const {
  if (!sum_sq_images) return std::nullopt;
  return double(*sum_sq_images) / double(N);
}
std::optional<double> ScanRow::cube_image_mean() const {
  if (!sum_cube_images) return std::nullopt;
  return double(*sum_cube_images) / double(N);
}

ScanReport scan(std::uint64_t N, const ScanOptions& options) {
  if (N < 2) throw DomainError("scan bound must be at least 2");

  struct PerModulus {
    std::uint64_t a = 0, phi = 0, idempotents = 0, sq = 0, cube = 0;
  };
  // Sum of moduli 2..N is the number of residues enumerated per image scan.
  const auto residues = static_cast<unsigned __int128>(N) * (N + 1) / 2;
  const bool with_images = residues <= options.image_budget;

  std::vector<PerModulus> values(N + 1);
  parallel_for(N - 1, options.threads, [&](std::size_t i) {
    const std::uint64_t m = i + 2;
    const auto f = factorize(m);
    auto& v = values[m];
    v.a = cyclic_count(f);
    v.phi = euler_phi(f);
    v.idempotents = std::uint64_t{1} << f.arity();
    if (with_images) {
      v.sq = power_image_count(m, 2);
      v.cube = power_image_count(m, 3);
    }
  });

  ScanReport report;
  ScanRow running;
  std::uint64_t next_checkpoint = 2;
  for (std::uint64_t m = 2; m <= N; ++m) {
    running.N = m;
    running.sum_a += values[m].a;
    running.sum_phi += values[m].phi;
    running.sum_idempotents += values[m].idempotents;
    if (with_images) {
      running.sum_sq_images = running.sum_sq_images.value_or(0) + values[m].sq;
      running.sum_cube_images = running.sum_cube_images.value_or(0) + values[m].cube;
    }
    if (m == next_checkpoint || m == N) {
      report.checkpoints.push_back(running);
      if (m == next_checkpoint) next_checkpoint *= 2;
    }
  }
  report.totals = running;
  return report;
}

}  // namespace spg
