#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spg/arith.hpp"

namespace spg {

/// A subset I of the prime indices {0, ..., r-1} of a Factorization.
/// Bit i refers to the i-th smallest prime of m.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::uint32_t bits, unsigned arity);

  static IndexSet empty(unsigned arity) { return {0, arity}; }
  static IndexSet full(unsigned arity);
  static IndexSet singleton(unsigned i, unsigned arity);

  std::uint32_t bits() const { return bits_; }
  unsigned arity() const { return arity_; }
  unsigned size() const;
  bool contains(unsigned i) const { return (bits_ >> i) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full(arity_).bits_; }
  bool is_subset_of(const IndexSet& other) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  IndexSet complement() const;

  /// Member indices in increasing order.
  std::vector<unsigned> members() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::uint32_t bits_ = 0;
  unsigned arity_ = 0;
};

/// All 2^r index sets, ordered by bitmask.
std::vector<IndexSet> all_index_sets(unsigned arity);

/// pi_I: product of the primes indexed by I (the component's multiplier).
std::uint64_t multiplier_of(const Factorization& f, const IndexSet& I);
/// g_I: product of the full prime powers indexed by I.
std::uint64_t prime_power_part(const Factorization& f, const IndexSet& I);

/// Renders I as its primes, e.g. "{2,3}".
std::string format_primes(const Factorization& f, const IndexSet& I);

struct IdempotentRecord {
  IndexSet index_set;
  std::uint64_t g = 1;   // g_I
  Residue a = 1;         // least representative of g_I^{-1} mod m/g_I
  Residue d = 1;         // idempotent a_I * g_I mod m
  std::uint64_t pi = 1;  // multiplier pi_I
};

/// The idempotent with d = 0 mod g_I and d = 1 mod m/g_I.
IdempotentRecord idempotent_for(const Factorization& f, const IndexSet& I);

/// One record per subset of R, ordered by bitmask.
std::vector<IdempotentRecord> all_idempotents(const Factorization& f);

bool is_idempotent(Residue v, std::uint64_t m);

/// d1 * d2 mod m; throws DomainError if either factor is not idempotent.
Residue idempotent_product(const Factorization& f, Residue d1, Residue d2);

/// {i : p_i | v}; v = 0 maps to the full set. This is component membership.
IndexSet index_set_of(const Factorization& f, Residue v);

}  // namespace spg
