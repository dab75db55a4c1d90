#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spg/arith.hpp"

namespace spg {

/// The powers a^1, a^2, ... of one residue split at the first repeat.
/// tail holds a^1 .. a^{j-1}, cycle holds a^j .. a^{k-1}.
struct Orbit {
  Residue base = 0;
  std::vector<Residue> tail;
  std::vector<Residue> cycle;
  Residue idempotent = 0;

  std::size_t length() const { return tail.size() + cycle.size(); }
};

Orbit orbit(std::uint64_t m, Residue a);
Residue orbit_idempotent(std::uint64_t m, Residue a);
std::size_t tail_length_of(std::uint64_t m, Residue a);

}  // namespace spg
