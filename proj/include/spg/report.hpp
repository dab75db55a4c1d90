#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "spg/arith.hpp"
#include "spg/components.hpp"
#include "spg/graph_oracle.hpp"
#include "spg/idempotents.hpp"
#include "spg/orbits.hpp"
#include "spg/stats.hpp"

// Text, JSON, DOT and CSV renderings used by the command-line tool. All
// output is deterministic: components by multiplier, elements ascending.

namespace spg::report {

struct AnalysisOptions {
  bool elements = false;  // include element, cycle and tail listings
  std::uint64_t element_budget = kDefaultElementBudget;
};

std::string analysis_json(const Factorization& f, const AnalysisOptions& options = {});
std::string analysis_text(const Factorization& f, const AnalysisOptions& options = {});

std::string graph_dot(const PowerGraph& g);
std::string graph_json(const PowerGraph& g);

std::string orbit_text(std::uint64_t m, const Orbit& o);
std::string orbit_json(std::uint64_t m, const Orbit& o);

std::string component_text(const Factorization& f, const IndexSet& I,
                           std::uint64_t element_budget = kDefaultElementBudget);
std::string component_json(const Factorization& f, const IndexSet& I,
                           std::uint64_t element_budget = kDefaultElementBudget);

std::string lattice_text(const Factorization& f);
std::string lattice_dot(const Factorization& f);

/// The map table is listed only if |d_I U| is within `element_budget`.
std::string hom_text(const Factorization& f, const IndexSet& I, const IndexSet& K,
                     std::uint64_t element_budget = kDefaultElementBudget);

std::string stats_text(const ScanReport& r);
std::string stats_csv(const ScanReport& r);
std::string stats_json(const ScanReport& r);

/// Parses a comma or space separated list of primes of m ("" is the empty
/// set). Throws DomainError for anything that is not a prime of m.
IndexSet parse_prime_list(const Factorization& f, std::string_view text);

}  // namespace spg::report
