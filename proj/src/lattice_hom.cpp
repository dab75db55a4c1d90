#include "spg/lattice_hom.hpp"

#include <algorithm>
#include <string>

#include "spg/components.hpp"
#include "spg/errors.hpp"

namespace spg {
namespace {

void require_comparable(const Factorization& f, const IndexSet& I, const IndexSet& K) {
  if (I.arity() != f.arity() || K.arity() != f.arity())
    throw DomainError("index set arity does not match factorization");
  if (!I.is_subset_of(K))
    throw OrderError("homomorphism requires " + format_primes(f, I) + " to be contained in " +
                     format_primes(f, K));
}

}  // namespace

ComponentLattice::ComponentLattice(unsigned arity)
    : arity_(arity), nodes_(all_index_sets(arity)) {}

bool ComponentLattice::leq(const IndexSet& a, const IndexSet& b) const { return a.is_subset_of(b); }
IndexSet ComponentLattice::join(const IndexSet& a, const IndexSet& b) const { return a.unite(b); }
IndexSet ComponentLattice::meet(const IndexSet& a, const IndexSet& b) const {
  return a.intersect(b);
}

std::vector<IndexSet> ComponentLattice::atoms() const {
  std::vector<IndexSet> out;
  for (unsigned i = 0; i < arity_; ++i) out.push_back(IndexSet::singleton(i, arity_));
  return out;
}

std::vector<IndexSet> ComponentLattice::coatoms() const {
  std::vector<IndexSet> out;
  for (const auto& atom : atoms()) out.push_back(atom.complement());
  return out;
}

std::vector<std::pair<IndexSet, IndexSet>> ComponentLattice::hasse_edges() const {
  std::vector<std::pair<IndexSet, IndexSet>> edges;
  for (const auto& lower : nodes_)
    for (unsigned i = 0; i < arity_; ++i)
      if (!lower.contains(i)) edges.emplace_back(lower, lower.unite(IndexSet::singleton(i, arity_)));
  std::ranges::sort(edges, {}, [](const auto& e) {
    return std::pair{e.first.bits(), e.second.bits()};
  });
  return edges;
}

ComponentLattice lattice_of(const Factorization& f) {
  return ComponentLattice(static_cast<unsigned>(f.arity()));
}

bool in_du(const Factorization& f, const IndexSet& I, Residue x) {
  const std::uint64_t g = prime_power_part(f, I);
  if (x >= f.modulus() || x % g != 0) return false;
  return gcd(x / g, f.modulus() / g) == 1;
}

Residue hom_apply(const Factorization& f, const IndexSet& I, const IndexSet& K, Residue x) {
  require_comparable(f, I, K);
  if (!in_du(f, I, x))
    throw DomainError(std::to_string(x) + " is not in d_I U for I = " + format_primes(f, I));
  return mul_mod(idempotent_for(f, K).d, x, f.modulus());
}

std::vector<Residue> hom_kernel(const Factorization& f, const IndexSet& I, const IndexSet& K) {
  require_comparable(f, I, K);
  const std::uint64_t m = f.modulus();
  const std::uint64_t step = m / prime_power_part(f, K);
  const Residue d_I = idempotent_for(f, I).d;
  std::vector<Residue> kernel;
  for (std::uint64_t u = 1 % m; u < m; u += step)
    if (gcd(u, m) == 1) kernel.push_back(mul_mod(d_I, u, m));
  std::ranges::sort(kernel);
  const auto dup = std::ranges::unique(kernel);
  kernel.erase(dup.begin(), dup.end());
  return kernel;
}

std::map<Residue, std::vector<Residue>> hom_fibers(const Factorization& f, const IndexSet& I,
                                                   const IndexSet& K, std::uint64_t budget) {
  require_comparable(f, I, K);
  std::map<Residue, std::vector<Residue>> fibers;
  for (Residue x : du_elements(f, I, budget)) fibers[hom_apply(f, I, K, x)].push_back(x);
  return fibers;
}

HomDescriptor describe_hom(const Factorization& f, const IndexSet& I, const IndexSet& K) {
  require_comparable(f, I, K);
  HomDescriptor h;
  h.source = I;
  h.target = K;
  h.multiplier_idempotent = idempotent_for(f, K.minus(I)).d;
  h.fiber_size = euler_phi(prime_power_part(f, K)) / euler_phi(prime_power_part(f, I));
  h.kernel = hom_kernel(f, I, K);
  return h;
}

}  // namespace spg
