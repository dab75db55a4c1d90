#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spg/arith.hpp"

namespace spg {

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

using Edge = std::pair<Residue, Residue>;

/// Brute-force sequential power graph on Z/mZ.
struct PowerGraph {
  std::uint64_t m = 0;
  /// Sorted, deduplicated directed edges (c^i, c^{i+1}).
  std::vector<Edge> edges;
  /// Undirected connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<Residue>> components;
};

/// Walks every orbit and joins consecutive powers. `budget` bounds the
/// total number of orbit vertices visited; exceeding it throws
/// BudgetExceeded.
PowerGraph build_graph(std::uint64_t m,
                       std::uint64_t budget = kDefaultOracleBudget);

const std::vector<std::vector<Residue>>& oracle_components(
    const PowerGraph& g);

/// Number of residues whose orbit has a nonempty tail, i.e. m - a(m).
std::uint64_t oracle_noncycle_count(std::uint64_t m,
                                    std::uint64_t budget = kDefaultOracleBudget);

}  // namespace spg
