#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "spg/arith.hpp"
#include "spg/idempotents.hpp"

namespace spg {

/// Boolean lattice of index sets; I <= K iff pi_I | pi_K.
class ComponentLattice {
 public:
  explicit ComponentLattice(unsigned arity);

  unsigned arity() const { return arity_; }
  const std::vector<IndexSet>& nodes() const { return nodes_; }

  bool leq(const IndexSet& a, const IndexSet& b) const;
  IndexSet join(const IndexSet& a, const IndexSet& b) const;
  IndexSet meet(const IndexSet& a, const IndexSet& b) const;
  IndexSet bottom() const { return IndexSet::empty(arity_); }
  IndexSet top() const { return IndexSet::full(arity_); }
  std::vector<IndexSet> atoms() const;
  std::vector<IndexSet> coatoms() const;

  /// Covering pairs (lower, upper), ordered by (lower, upper) bitmask.
  std::vector<std::pair<IndexSet, IndexSet>> hasse_edges() const;

 private:
  unsigned arity_;
  std::vector<IndexSet> nodes_;
};

ComponentLattice lattice_of(const Factorization& f);

struct HomDescriptor {
  IndexSet source;
  IndexSet target;
  Residue multiplier_idempotent = 1;  // d_{K \ I}
  std::uint64_t fiber_size = 1;       // phi(g_K) / phi(g_I)
  std::vector<Residue> kernel;
};

/// H : d_I U -> d_K U, x -> d_K x. Throws OrderError unless I is a subset
/// of K, DomainError if x is not in d_I U.
Residue hom_apply(const Factorization& f, const IndexSet& I, const IndexSet& K,
                  Residue x);

/// {d_I u : u a unit, u = 1 mod m/g_K}, sorted.
std::vector<Residue> hom_kernel(const Factorization& f, const IndexSet& I,
                                const IndexSet& K);

/// Preimages of each element of d_K U, keyed by image.
std::map<Residue, std::vector<Residue>> hom_fibers(
    const Factorization& f, const IndexSet& I, const IndexSet& K,
    std::uint64_t budget = 100'000);

HomDescriptor describe_hom(const Factorization& f, const IndexSet& I,
                           const IndexSet& K);

/// Membership test for d_I U: g_I | x and x / g_I is a unit mod m / g_I.
bool in_du(const Factorization& f, const IndexSet& I, Residue x);

}  // namespace spg
