#include "spg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "spg/components.hpp"
#include "spg/errors.hpp"
#include "spg/idempotents.hpp"
#include "spg/lattice_hom.hpp"
#include "spg/orbits.hpp"
#include "spg/parallel.hpp"

namespace spg {
namespace {

template <typename T>
std::string render(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string render(Wide value) { return to_string(value); }

std::string render(const std::vector<Residue>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "]";
}

/// Accumulates the first mismatch; later checks become no-ops.
class Checker {
 public:
  explicit Checker(std::uint64_t m) : m_(m) {}

  template <typename T>
  bool expect_eq(const std::string& check, const T& expected, const T& actual) {
    if (failure_) return false;
    if (expected == actual) return true;
    failure_ = CheckFailure{m_, check, render(expected), render(actual)};
    return false;
  }

  bool failed() const { return failure_.has_value(); }
  std::optional<CheckFailure> take() { return std::move(failure_); }

 private:
  std::uint64_t m_;
  std::optional<CheckFailure> failure_;
};

Wide direct_sum(const std::vector<Residue>& values) {
  return std::accumulate(values.begin(), values.end(), Wide{0},
                         [](Wide acc, Residue v) { return acc + v; });
}

}  // namespace

VerifyOutcome verify_modulus(std::uint64_t m, const VerifyOptions& options) {
  const auto f = factorize(m);
  const auto r = static_cast<unsigned>(f.arity());
  const auto sets = all_index_sets(r);
  Checker check(m);
  VerifyOutcome outcome{m, 0, std::nullopt};

  // Partition against the brute-force graph.
  const PowerGraph graph = build_graph(m, options.oracle_budget);
  std::vector<std::vector<Residue>> analytic;
  for (const auto& I : sets) analytic.push_back(component_elements(f, I, m));
  std::ranges::sort(analytic, {}, [](const auto& c) { return c.front(); });
  check.expect_eq("component count", graph.components.size(), analytic.size());
  for (std::size_t k = 0; k < analytic.size() && !check.failed(); ++k)
    check.expect_eq("component vertex set", graph.components[k], analytic[k]);

  // Per-element orbit facts.
  std::vector<std::uint64_t> oracle_tails(sets.size(), 0);
  for (Residue v = 0; v < m && !check.failed(); ++v) {
    const Orbit o = orbit(m, v);
    const IndexSet I = index_set_of(f, v);
    check.expect_eq("tail predicate at " + std::to_string(v), !o.tail.empty(), is_tail(f, v));
    check.expect_eq("orbit idempotent at " + std::to_string(v), idempotent_for(f, I).d,
                    o.idempotent);
    if (!o.tail.empty()) ++oracle_tails[I.bits()];
  }

  const auto unit_elements = du_elements(f, IndexSet::empty(r), m);
  const auto unit_profile = order_profile(unit_elements, 1, m);

  for (const auto& I : sets) {
    if (check.failed()) break;
    const auto label = format_primes(f, I);
    const auto idem = idempotent_for(f, I);
    const auto desc = describe_component(f, I);
    const auto elements = component_elements(f, I, m);
    const auto cyclic = du_elements(f, I, m);

    check.expect_eq("tail count " + label, oracle_tails[I.bits()], desc.tail_count);
    check.expect_eq("component size " + label, std::uint64_t{elements.size()}, desc.size);
    check.expect_eq("cycle size " + label, std::uint64_t{cyclic.size()}, desc.cycle_size);

    std::uint64_t idempotents = 0;
    for (Residue v : elements) idempotents += is_idempotent(v, m) ? 1 : 0;
    check.expect_eq("idempotents in " + label, std::uint64_t{1}, idempotents);
    check.expect_eq("idempotent membership " + label, true,
                    std::ranges::binary_search(elements, idem.d));
    std::vector<Residue> multipliers;
    for (std::uint64_t s : divisors(m))
      if (is_squarefree(s) && std::ranges::binary_search(elements, s % m)) multipliers.push_back(s % m);
    check.expect_eq("multipliers in " + label, std::vector<Residue>{idem.pi % m}, multipliers);

    const Wide direct = direct_sum(elements);
    check.expect_eq("closed-form sum " + label, direct, component_sum(f, I));
    check.expect_eq("inclusion-exclusion sum " + label, direct, sum_by_inclusion_exclusion(f, I));
    check.expect_eq("dU sum " + label, direct_sum(cyclic), du_sum(f, I));
    check.expect_eq("tail sum " + label, direct - direct_sum(cyclic), tail_sum(f, I));

    const auto phi_id = verify_phi_identity(f, I);
    check.expect_eq("phi identity " + label, phi_id.lhs, phi_id.rhs);

    check.expect_eq("dU structure " + label,
                    cyclic_product_profile(predicted_group_structure(f, I)),
                    order_profile(cyclic, idem.d, m));
    const IndexSet rest = I.complement();
    check.expect_eq("cross product " + label,
                    unit_profile,
                    product_profile(order_profile(cyclic, idem.d, m),
                                    order_profile(du_elements(f, rest, m),
                                                  idempotent_for(f, rest).d, m)));

    for (const auto& K : sets) {
      if (check.failed() || !I.is_subset_of(K)) continue;
      const auto hom = describe_hom(f, I, K);
      const auto fibers = hom_fibers(f, I, K, m);
      std::vector<Residue> image;
      for (const auto& [target, preimage] : fibers) {
        image.push_back(target);
        check.expect_eq("fiber size " + label + "->" + format_primes(f, K), hom.fiber_size,
                        std::uint64_t{preimage.size()});
      }
      check.expect_eq("hom image " + label + "->" + format_primes(f, K), du_elements(f, K, m),
                      image);
      check.expect_eq("kernel size " + label + "->" + format_primes(f, K), hom.fiber_size,
                      std::uint64_t{hom.kernel.size()});
    }
    ++outcome.components_checked;
  }
  outcome.failure = check.take();
  if (outcome.failure) outcome.components_checked = 0;
  return outcome;
}

std::vector<VerifyOutcome> verify_range(std::uint64_t from, std::uint64_t to,
                                        const VerifyOptions& options) {
  if (from < 2 || from > to) throw DomainError("verify range must satisfy 2 <= from <= to");
  std::vector<VerifyOutcome> outcomes(to - from + 1);
  parallel_for(outcomes.size(), options.threads,
               [&](std::size_t i) { outcomes[i] = verify_modulus(from + i, options); });
  return outcomes;
}

}  // namespace spg
