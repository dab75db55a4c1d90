#include "spg/graph_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "spg/errors.hpp"
#include "spg/orbits.hpp"

namespace spg {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

void charge(std::uint64_t& spent, std::size_t steps, std::uint64_t budget, std::uint64_t m) {
  spent += steps;
  if (spent > budget)
    throw BudgetExceeded("power graph of m = " + std::to_string(m) +
                         " exceeds the oracle budget of " + std::to_string(budget) +
                         " walked vertices");
}

}  // namespace

PowerGraph build_graph(std::uint64_t m, std::uint64_t budget) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  if (m > budget)
    throw BudgetExceeded("m = " + std::to_string(m) + " exceeds the oracle budget of " +
                         std::to_string(budget) + " walked vertices");

  PowerGraph g;
  g.m = m;
  std::uint64_t spent = 0;
  for (Residue c = 0; c < m; ++c) {
    const Orbit o = orbit(m, c);
    charge(spent, o.length(), budget, m);
    // Consecutive powers, then the closing edge back into the cycle.
    Residue prev = c;
    auto link = [&](Residue next) {
      g.edges.emplace_back(prev, next);
      prev = next;
    };
    for (std::size_t i = 1; i < o.tail.size(); ++i) link(o.tail[i]);
    for (std::size_t i = o.tail.empty() ? 1 : 0; i < o.cycle.size(); ++i) link(o.cycle[i]);
    link(o.cycle.front());
  }
  std::ranges::sort(g.edges);
  const auto dup = std::ranges::unique(g.edges);
  g.edges.erase(dup.begin(), dup.end());

  DisjointSets sets(m);
  for (const auto& [u, v] : g.edges) sets.unite(u, v);
  std::map<std::size_t, std::size_t> slot_of_root;
  for (Residue v = 0; v < m; ++v) {
    const auto root = sets.find(v);
    auto [it, inserted] = slot_of_root.emplace(root, g.components.size());
    if (inserted) g.components.emplace_back();
    g.components[it->second].push_back(v);
  }
  return g;
}

const std::vector<std::vector<Residue>>& oracle_components(const PowerGraph& g) {
  return g.components;
}

std::uint64_t oracle_noncycle_count(std::uint64_t m, std::uint64_t budget) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  std::uint64_t spent = 0;
  std::uint64_t tails = 0;
  for (Residue c = 0; c < m; ++c) {
    const Orbit o = orbit(m, c);
    charge(spent, o.length(), budget, m);
    if (!o.tail.empty()) ++tails;
  }
  return tails;
}

}  // namespace spg
