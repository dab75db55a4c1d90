#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spg {

using Residue = std::uint64_t;
/// Exact signed accumulator for element sums (values reach m^2 / 2).
using Wide = __int128;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A modulus m >= 2 together with its prime-power decomposition, primes
/// strictly increasing.
class Factorization {
 public:
  /// Validates that `factors` is sorted, prime, and multiplies to `m`.
  Factorization(std::uint64_t m, std::vector<PrimePower> factors);

  std::uint64_t modulus() const { return m_; }
  std::span<const PrimePower> factors() const { return factors_; }
  const PrimePower& operator[](std::size_t i) const { return factors_[i]; }
  /// Number of distinct primes, r.
  std::size_t arity() const { return factors_.size(); }
  bool squarefree() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::uint64_t m_;
  std::vector<PrimePower> factors_;
};

/// Trial division; throws DomainError for m <= 1.
Factorization factorize(std::uint64_t m);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Throws NotInvertible when gcd(a, m) != 1. For m == 1 returns 0.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Alternating divisor sum: sum over d | n of d * (-1)^Omega(n/d).
std::int64_t beta(std::uint64_t n);

bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Number of prime factors counted with multiplicity.
unsigned big_omega(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::string to_string(Wide v);

}  // namespace spg
