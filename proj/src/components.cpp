#include "spg/components.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "spg/errors.hpp"

namespace spg {
namespace {

void require_arity(const Factorization& f, const IndexSet& I) {
  if (I.arity() != f.arity()) throw DomainError("index set arity does not match factorization");
}

void check_budget(std::uint64_t count, std::uint64_t budget, const char* what) {
  if (count > budget)
    throw BudgetExceeded(std::string(what) + " has " + std::to_string(count) +
                         " elements, above the element budget of " + std::to_string(budget));
}

/// phi(n) for a divisor n of m, using the primes of m.
std::uint64_t phi_of_divisor(const Factorization& f, std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : f.factors())
    if (n % pp.prime == 0) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned max_exponent(const Factorization& f, const IndexSet& I) {
  unsigned e = 0;
  for (unsigned i : I.members()) e = std::max(e, f[i].exponent);
  return e;
}

/// Largest i with pi^i | t, for t != 0.
unsigned multiplier_valuation(std::uint64_t t, std::uint64_t pi) {
  if (pi == 1) return 0;
  return valuation(t, pi);
}

Wide exact_half(Wide numerator) {
  if (numerator % 2 != 0) throw std::logic_error("closed-form sum is not an integer");
  return numerator / 2;
}

}  // namespace

ComponentDescriptor describe_component(const Factorization& f, const IndexSet& I) {
  require_arity(f, I);
  ComponentDescriptor c;
  c.idem = idempotent_for(f, I);
  const std::uint64_t m = f.modulus();
  c.size = euler_phi(f) / phi_of_divisor(f, c.idem.pi);
  c.cycle_size = phi_of_divisor(f, m / c.idem.g);
  c.tail_count = tail_count(f, I);
  c.element_sum = component_sum(f, I);
  c.tail_sum = tail_sum(f, I);
  const unsigned e = max_exponent(f, I);
  c.max_tail_length = e == 0 ? 0 : e - 1;
  return c;
}

std::vector<ComponentDescriptor> describe_components(const Factorization& f) {
  std::vector<ComponentDescriptor> out;
  for (const auto& I : all_index_sets(static_cast<unsigned>(f.arity())))
    out.push_back(describe_component(f, I));
  std::ranges::sort(out, {}, [](const ComponentDescriptor& c) { return c.idem.pi; });
  return out;
}

std::vector<Residue> component_elements(const Factorization& f, const IndexSet& I,
                                        std::uint64_t budget) {
  require_arity(f, I);
  const std::uint64_t m = f.modulus();
  const std::uint64_t pi = multiplier_of(f, I);
  const std::uint64_t cofactor = m / prime_power_part(f, I);
  check_budget(euler_phi(f) / phi_of_divisor(f, pi), budget, "component");
  std::vector<Residue> out;
  for (std::uint64_t x = 0; x < m / pi; ++x)
    if (gcd(x, cofactor) == 1) out.push_back(pi * x);
  return out;
}

std::vector<Residue> du_elements(const Factorization& f, const IndexSet& I, std::uint64_t budget) {
  require_arity(f, I);
  const std::uint64_t g = prime_power_part(f, I);
  const std::uint64_t cofactor = f.modulus() / g;
  check_budget(phi_of_divisor(f, cofactor), budget, "cyclic part d_I U");
  std::vector<Residue> out;
  for (std::uint64_t x = 0; x < cofactor; ++x)
    if (gcd(x, cofactor) == 1) out.push_back(g * x);
  return out;
}

bool is_tail(const Factorization& f, Residue v) {
  if (v >= f.modulus()) throw DomainError("residue out of range");
  return v % prime_power_part(f, index_set_of(f, v)) != 0;
}

std::map<std::uint64_t, std::vector<Residue>> tail_partition(const Factorization& f,
                                                             const IndexSet& I,
                                                             std::uint64_t budget) {
  require_arity(f, I);
  check_budget(tail_count(f, I), budget, "tail set");
  const std::uint64_t m = f.modulus();
  const std::uint64_t pi = multiplier_of(f, I);
  const std::uint64_t quotient = prime_power_part(f, I) / pi;
  std::map<std::uint64_t, std::vector<Residue>> parts;
  for (std::uint64_t y : divisors(quotient)) {
    if (y == quotient) continue;
    const std::uint64_t step = y * pi;
    const std::uint64_t n = m / step;
    auto& part = parts[y];
    for (std::uint64_t x = 0; x < n; ++x)
      if (gcd(x, n) == 1) part.push_back(step * x);
  }
  return parts;
}

std::uint64_t tail_count(const Factorization& f, const IndexSet& I) {
  require_arity(f, I);
  const std::uint64_t m = f.modulus();
  const std::uint64_t pi = multiplier_of(f, I);
  const std::uint64_t quotient = prime_power_part(f, I) / pi;
  std::uint64_t count = 0;
  for (std::uint64_t y : divisors(quotient))
    if (y != quotient) count += phi_of_divisor(f, m / (y * pi));
  return count;
}

PhiIdentity verify_phi_identity(const Factorization& f, const IndexSet& I) {
  require_arity(f, I);
  const std::uint64_t m = f.modulus();
  const std::uint64_t pi = multiplier_of(f, I);
  PhiIdentity id{euler_phi(f) / phi_of_divisor(f, pi), 0};
  for (std::uint64_t y : divisors(prime_power_part(f, I) / pi))
    id.rhs += phi_of_divisor(f, m / (y * pi));
  return id;
}

std::vector<TailLayer> tail_layers(const Factorization& f, const IndexSet& I,
                                   std::uint64_t budget) {
  require_arity(f, I);
  const unsigned e = max_exponent(f, I);
  if (e <= 1) return {};
  const std::uint64_t pi = multiplier_of(f, I);
  std::vector<TailLayer> layers;
  for (unsigned i = 1; i < e; ++i)
    layers.push_back({i, {}, (e + i - 1) / i - 1});
  for (const auto& [y, tails] : tail_partition(f, I, budget)) {
    for (Residue t : tails) {
      const unsigned i = multiplier_valuation(t, pi);
      if (i < 1 || i >= e) throw std::logic_error("tail outside layers 1..e-1");
      layers[i - 1].tails.push_back(t);
    }
  }
  for (auto& layer : layers) std::ranges::sort(layer.tails);
  return layers;
}

bool layer_powers_contained(const Factorization& f, const IndexSet& I, unsigned k,
                            std::uint64_t budget) {
  const auto layers = tail_layers(f, I, budget);
  if (k < 1 || k > layers.size()) throw DomainError("layer index out of range");
  const std::uint64_t m = f.modulus();
  const auto& target = layers[k - 1].tails;
  for (Residue t : layers.front().tails) {
    if (!std::ranges::binary_search(target, mod_pow(t, k, m))) return false;
  }
  return true;
}

unsigned exact_tail_length(const Factorization& f, Residue t) {
  if (!is_tail(f, t)) return 0;
  unsigned steps = 1;
  for (unsigned j : index_set_of(f, t).members()) {
    const unsigned v = valuation(t, f[j].prime);
    steps = std::max(steps, (f[j].exponent + v - 1) / v);
  }
  return steps - 1;
}

Wide component_sum(const Factorization& f, const IndexSet& I) {
  require_arity(f, I);
  const Wide m = f.modulus();
  const IndexSet all = IndexSet::full(static_cast<unsigned>(f.arity()));
  const Wide pi_all = multiplier_of(f, all);
  if (I.is_full()) {
    // The alternating binomial sum is 1 here rather than 0.
    return exact_half(m * (m / pi_all) - m);
  }
  const Wide phi_rest = phi_of_divisor(f, multiplier_of(f, I.complement()));
  return exact_half(m * (m / pi_all) * phi_rest);
}

Wide du_sum(const Factorization& f, const IndexSet& I) {
  require_arity(f, I);
  if (I.is_full()) return 0;
  const Wide m = f.modulus();
  const Wide numerator = m * euler_phi(f);
  const Wide denominator = 2 * static_cast<Wide>(phi_of_divisor(f, prime_power_part(f, I)));
  if (numerator % denominator != 0) throw std::logic_error("dU sum is not an integer");
  return numerator / denominator;
}

Wide tail_sum(const Factorization& f, const IndexSet& I) {
  return component_sum(f, I) - du_sum(f, I);
}

std::vector<InclusionExclusionTerm> inclusion_exclusion_terms(const Factorization& f,
                                                              const IndexSet& I) {
  require_arity(f, I);
  std::vector<InclusionExclusionTerm> terms;
  for (const auto& J : all_index_sets(static_cast<unsigned>(f.arity()))) {
    if (!I.is_subset_of(J)) continue;
    const std::uint64_t pi_J = multiplier_of(f, J);
    terms.push_back({J, J.size() - I.size(), pi_J, f.modulus() / pi_J});
  }
  return terms;
}

Wide sum_by_inclusion_exclusion(const Factorization& f, const IndexSet& I) {
  Wide total = 0;
  for (const auto& t : inclusion_exclusion_terms(f, I)) {
    const Wide M = t.M_J;
    const Wide term = static_cast<Wide>(t.pi_J) * (M * (M - 1) / 2);
    total += (t.f_J % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<std::uint64_t> predicted_group_structure(const Factorization& f, const IndexSet& I) {
  require_arity(f, I);
  // Cyclic decomposition of each (Z/p^e)^x outside I.
  std::vector<std::uint64_t> cyclic;
  for (unsigned j : I.complement().members()) {
    const auto& pp = f[j];
    if (pp.prime == 2) {
      if (pp.exponent == 2) cyclic.push_back(2);
      if (pp.exponent >= 3) {
        cyclic.push_back(2);
        cyclic.push_back(ipow(2, pp.exponent - 2));
      }
    } else {
      cyclic.push_back(ipow(pp.prime, pp.exponent - 1) * (pp.prime - 1));
    }
  }
  // Regroup prime-power parts into invariant factors.
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts_by_prime;
  for (std::uint64_t n : cyclic) {
    if (n == 1) continue;
    const auto fn = factorize(n);
    for (const auto& pp : fn.factors()) parts_by_prime[pp.prime].push_back(pp.value());
  }
  std::size_t count = 0;
  for (auto& [p, parts] : parts_by_prime) {
    std::ranges::sort(parts, std::greater{});
    count = std::max(count, parts.size());
  }
  std::vector<std::uint64_t> factors(count, 1);
  for (const auto& [p, parts] : parts_by_prime)
    for (std::size_t k = 0; k < parts.size(); ++k) factors[k] *= parts[k];
  std::ranges::reverse(factors);
  return factors;
}

OrderProfile order_profile(const std::vector<Residue>& elements, Residue identity,
                           std::uint64_t m) {
  const std::unordered_set<Residue> members(elements.begin(), elements.end());
  if (!members.contains(identity)) throw DomainError("identity is not in the element set");
  OrderProfile profile;
  profile.reserve(elements.size());
  for (Residue x : elements) {
    if (mul_mod(x, identity, m) != x)
      throw DomainError(std::to_string(identity) + " does not act as identity on " +
                        std::to_string(x));
    Residue power = x;
    std::uint64_t order = 1;
    while (power != identity) {
      power = mul_mod(power, x, m);
      ++order;
      if (!members.contains(power) || order > members.size())
        throw DomainError("element set is not closed under multiplication mod " +
                          std::to_string(m));
    }
    profile.push_back(order);
  }
  std::ranges::sort(profile);
  return profile;
}

OrderProfile product_profile(const OrderProfile& a, const OrderProfile& b) {
  OrderProfile out;
  out.reserve(a.size() * b.size());
  for (auto x : a)
    for (auto y : b) out.push_back(lcm(x, y));
  std::ranges::sort(out);
  return out;
}

OrderProfile cyclic_product_profile(const std::vector<std::uint64_t>& orders) {
  OrderProfile profile{1};
  for (std::uint64_t n : orders) {
    OrderProfile cyclic;
    for (std::uint64_t d : divisors(n)) cyclic.insert(cyclic.end(), euler_phi(d), d);
    profile = product_profile(profile, cyclic);
  }
  return profile;
}

}  // namespace spg
