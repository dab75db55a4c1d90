#include "spg/orbits.hpp"

#include <unordered_map>

#include "spg/errors.hpp"
#include "spg/idempotents.hpp"

namespace spg {

Orbit orbit(std::uint64_t m, Residue a) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  if (a >= m) throw DomainError("residue out of range");

  // First-occurrence index of each power; the first repeat fixes the split.
  std::unordered_map<Residue, std::size_t> first_seen;
  std::vector<Residue> powers;
  Residue x = a;
  while (!first_seen.contains(x)) {
    first_seen.emplace(x, powers.size());
    powers.push_back(x);
    x = mul_mod(x, a, m);
  }
  const std::size_t split = first_seen.at(x);

  Orbit o;
  o.base = a;
  o.tail.assign(powers.begin(), powers.begin() + static_cast<std::ptrdiff_t>(split));
  o.cycle.assign(powers.begin() + static_cast<std::ptrdiff_t>(split), powers.end());
  bool found = false;
  for (Residue c : o.cycle) {
    if (is_idempotent(c, m)) {
      o.idempotent = c;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("orbit cycle without an idempotent");
  return o;
}

Residue orbit_idempotent(std::uint64_t m, Residue a) { return orbit(m, a).idempotent; }

std::size_t tail_length_of(std::uint64_t m, Residue a) { return orbit(m, a).tail.size(); }

}  // namespace spg
