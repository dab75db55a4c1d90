#include "spg/arith.hpp"

#include <algorithm>
#include <string>

#include "spg/errors.hpp"

namespace spg {

std::uint64_t PrimePower::value() const { return ipow(prime, exponent); }

Factorization::Factorization(std::uint64_t m, std::vector<PrimePower> factors)
    : m_(m), factors_(std::move(factors)) {
  if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
  unsigned __int128 product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& pp = factors_[i];
    if (pp.exponent == 0 || !is_prime(pp.prime))
      throw DomainError("invalid prime power in factorization");
    if (i > 0 && factors_[i - 1].prime >= pp.prime)
      throw DomainError("factorization primes must be strictly increasing");
    for (unsigned e = 0; e < pp.exponent; ++e) product *= pp.prime;
    if (product > m) break;
  }
  if (product != m) throw DomainError("factorization does not multiply to m");
}

bool Factorization::squarefree() const {
  return std::ranges::all_of(factors_, [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization factorize(std::uint64_t m) {
  if (m <= 1) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
  std::vector<PrimePower> factors;
  std::uint64_t n = m;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) strip(p);
  if (n > 1) factors.push_back({n, 1});
  return Factorization(m, std::move(factors));
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& pp : f.factors()) phi *= ipow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi(0) is undefined");
  if (n == 1) return 1;
  return euler_phi(factorize(n));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors(0) is undefined");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned big_omega(std::uint64_t n) {
  if (n <= 1) return 0;
  unsigned count = 0;
  const auto f = factorize(n);
  for (const auto& pp : f.factors()) count += pp.exponent;
  return count;
}

std::int64_t beta(std::uint64_t n) {
  std::int64_t total = 0;
  for (std::uint64_t d : divisors(n)) {
    const auto term = static_cast<std::int64_t>(d);
    total += (big_omega(n / d) % 2 == 0) ? term : -term;
  }
  return total;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p <= n / p; p += 2)
    if (n % p == 0) return false;
  return true;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  if (n == 1) return true;
  return factorize(n).squarefree();
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::ranges::reverse(digits);
  return digits;
}

}  // namespace spg
