#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spg/arith.hpp"
#include "spg/idempotents.hpp"

namespace spg {

inline constexpr std::uint64_t kDefaultElementBudget = 100'000;

/// Everything known in closed form about one component C_I.
struct ComponentDescriptor {
  IdempotentRecord idem;
  std::uint64_t size = 0;        // phi(m) / phi(pi_I)
  std::uint64_t cycle_size = 0;  // |d_I U| = phi(m / g_I)
  std::uint64_t tail_count = 0;
  Wide element_sum = 0;
  Wide tail_sum = 0;
  unsigned max_tail_length = 0;  // max exponent over I, minus one
};

ComponentDescriptor describe_component(const Factorization& f,
                                       const IndexSet& I);

/// All 2^r descriptors ordered by multiplier ascending.
std::vector<ComponentDescriptor> describe_components(const Factorization& f);

// Element sets. Each result is sorted ascending; sizes are checked
// against `budget` before enumerating.

std::vector<Residue> component_elements(
    const Factorization& f, const IndexSet& I,
    std::uint64_t budget = kDefaultElementBudget);

/// The cyclic part d_I U = {g_I x : gcd(x, m/g_I) = 1}.
std::vector<Residue> du_elements(const Factorization& f, const IndexSet& I,
                                 std::uint64_t budget = kDefaultElementBudget);

/// True iff g_I does not divide v, I being the index set of v.
bool is_tail(const Factorization& f, Residue v);

/// Tails of C_I keyed by the proper divisor y of g_I / pi_I; the set for y
/// is y pi_I times the units mod m / (y pi_I).
std::map<std::uint64_t, std::vector<Residue>> tail_partition(
    const Factorization& f, const IndexSet& I,
    std::uint64_t budget = kDefaultElementBudget);

std::uint64_t tail_count(const Factorization& f, const IndexSet& I);

struct PhiIdentity {
  std::uint64_t lhs;  // phi(m) / phi(pi_I)
  std::uint64_t rhs;  // sum over y | g_I/pi_I of phi(m / (y pi_I))
};
PhiIdentity verify_phi_identity(const Factorization& f, const IndexSet& I);

/// T_i = tails t of C_I with pi^i | t and pi^{i+1} not dividing t.
struct TailLayer {
  unsigned index;
  std::vector<Residue> tails;
  /// ceil(e / i) - 1 with e the largest exponent over I. Exact when the
  /// exponents over I are all equal; an upper bound otherwise.
  unsigned predicted_length;
};

std::vector<TailLayer> tail_layers(const Factorization& f, const IndexSet& I,
                                   std::uint64_t budget = kDefaultElementBudget);

/// Checks that the k-th power of every element of T_1 lies in T_k. Holds
/// when the exponents over I are equal; with mixed exponents the residue
/// t^k mod m can drop to a lower layer or leave the tails.
bool layer_powers_contained(const Factorization& f, const IndexSet& I,
                            unsigned k,
                            std::uint64_t budget = kDefaultElementBudget);

/// Exact tail length of a tail t: max over j in I of ceil(e_j / v_j(t)) - 1.
unsigned exact_tail_length(const Factorization& f, Residue t);

// Sums of elements taken as integers in [0, m).

Wide component_sum(const Factorization& f, const IndexSet& I);
Wide du_sum(const Factorization& f, const IndexSet& I);
Wide tail_sum(const Factorization& f, const IndexSet& I);

struct InclusionExclusionTerm {
  IndexSet J;
  unsigned f_J;       // |J| - |I|
  std::uint64_t pi_J;
  std::uint64_t M_J;  // m / pi_J
};

/// Terms J with I subset J subset R, ordered by bitmask.
std::vector<InclusionExclusionTerm> inclusion_exclusion_terms(
    const Factorization& f, const IndexSet& I);

/// Raw evaluation of sum (-1)^{f_J} pi_J binom(M_J, 2).
Wide sum_by_inclusion_exclusion(const Factorization& f, const IndexSet& I);

/// Invariant factors (ascending, each dividing the next, no 1s) of the unit
/// group mod m / g_I, which is isomorphic to d_I U.
std::vector<std::uint64_t> predicted_group_structure(const Factorization& f,
                                                     const IndexSet& I);

/// Sorted multiset of element orders.
using OrderProfile = std::vector<std::uint64_t>;

/// Orders of each element relative to `identity` under multiplication mod
/// m. Throws DomainError if some element's powers leave the set or never
/// return to the identity.
OrderProfile order_profile(const std::vector<Residue>& elements,
                           Residue identity, std::uint64_t m);

/// Profile of a direct product: the multiset {lcm(x, y)}.
OrderProfile product_profile(const OrderProfile& a, const OrderProfile& b);

/// Profile of Z/n1 x Z/n2 x ... for the given cyclic orders.
OrderProfile cyclic_product_profile(const std::vector<std::uint64_t>& orders);

}  // namespace spg
