#include "spg/idempotents.hpp"

#include <bit>
#include <string>

#include "spg/errors.hpp"

namespace spg {

IndexSet::IndexSet(std::uint32_t bits, unsigned arity) : bits_(bits), arity_(arity) {
  if (arity > 31) throw DomainError("index set arity above 31");
  if ((bits & ~full(arity).bits_) != 0) throw DomainError("index set has bits beyond its arity");
}

IndexSet IndexSet::full(unsigned arity) {
  IndexSet s;
  s.arity_ = arity;
  s.bits_ = arity == 0 ? 0 : (std::uint32_t{1} << arity) - 1;
  return s;
}

IndexSet IndexSet::singleton(unsigned i, unsigned arity) {
  if (i >= arity) throw DomainError("prime index out of range");
  return {std::uint32_t{1} << i, arity};
}

unsigned IndexSet::size() const { return static_cast<unsigned>(std::popcount(bits_)); }

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return arity_ == other.arity_ && (bits_ & ~other.bits_) == 0;
}

IndexSet IndexSet::unite(const IndexSet& other) const { return {bits_ | other.bits_, arity_}; }
IndexSet IndexSet::intersect(const IndexSet& other) const { return {bits_ & other.bits_, arity_}; }
IndexSet IndexSet::minus(const IndexSet& other) const { return {bits_ & ~other.bits_, arity_}; }
IndexSet IndexSet::complement() const { return {full(arity_).bits_ & ~bits_, arity_}; }

std::vector<unsigned> IndexSet::members() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < arity_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<IndexSet> all_index_sets(unsigned arity) {
  std::vector<IndexSet> sets;
  const std::uint32_t count = std::uint32_t{1} << arity;
  sets.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) sets.emplace_back(bits, arity);
  return sets;
}

std::uint64_t multiplier_of(const Factorization& f, const IndexSet& I) {
  std::uint64_t pi = 1;
  for (unsigned i : I.members()) pi *= f[i].prime;
  return pi;
}

std::uint64_t prime_power_part(const Factorization& f, const IndexSet& I) {
  std::uint64_t g = 1;
  for (unsigned i : I.members()) g *= f[i].value();
  return g;
}

std::string format_primes(const Factorization& f, const IndexSet& I) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : I.members()) {
    if (!first) out += ",";
    out += std::to_string(f[i].prime);
    first = false;
  }
  return out + "}";
}

IdempotentRecord idempotent_for(const Factorization& f, const IndexSet& I) {
  if (I.arity() != f.arity()) throw DomainError("index set arity does not match factorization");
  const std::uint64_t m = f.modulus();
  IdempotentRecord rec;
  rec.index_set = I;
  rec.g = prime_power_part(f, I);
  rec.pi = multiplier_of(f, I);
  const std::uint64_t cofactor = m / rec.g;
  rec.a = cofactor == 1 ? 0 : mod_inv(rec.g % cofactor, cofactor);
  rec.d = mul_mod(rec.a, rec.g, m);
  return rec;
}

std::vector<IdempotentRecord> all_idempotents(const Factorization& f) {
  std::vector<IdempotentRecord> out;
  for (const auto& I : all_index_sets(static_cast<unsigned>(f.arity())))
    out.push_back(idempotent_for(f, I));
  return out;
}

bool is_idempotent(Residue v, std::uint64_t m) { return v < m && mul_mod(v, v, m) == v; }

Residue idempotent_product(const Factorization& f, Residue d1, Residue d2) {
  const std::uint64_t m = f.modulus();
  if (!is_idempotent(d1, m) || !is_idempotent(d2, m))
    throw DomainError("idempotent_product requires idempotent factors");
  return mul_mod(d1, d2, m);
}

IndexSet index_set_of(const Factorization& f, Residue v) {
  const auto r = static_cast<unsigned>(f.arity());
  std::uint32_t bits = 0;
  for (unsigned i = 0; i < r; ++i)
    if (v % f[i].prime == 0) bits |= std::uint32_t{1} << i;
  return {bits, r};
}

}  // namespace spg
