#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "spg/components.hpp"
#include "spg/errors.hpp"
#include "spg/lattice_hom.hpp"

using namespace spg;

namespace {

const IndexSet kNone = IndexSet::empty(2);
const IndexSet kTwo{0b01, 2};
const IndexSet kThree{0b10, 2};
const IndexSet kBoth = IndexSet::full(2);

using Residues = std::vector<Residue>;

}  // namespace

TEST_CASE("lattice of m = 36") {
  const auto f = factorize(36);
  const auto lattice = lattice_of(f);
  CHECK(lattice.nodes().size() == 4);
  CHECK(lattice.join(kTwo, kThree) == kBoth);
  CHECK(lattice.meet(kTwo, kThree) == kNone);
  CHECK(lattice.bottom() == kNone);
  CHECK(lattice.top() == kBoth);
  CHECK(idempotent_for(f, lattice.bottom()).d == 1);
  CHECK(idempotent_for(f, lattice.top()).d == 0);
  CHECK(lattice.atoms() == std::vector<IndexSet>{kTwo, kThree});
  CHECK(lattice.coatoms() == std::vector<IndexSet>{kThree, kTwo});
  CHECK(lattice.hasse_edges() == std::vector<std::pair<IndexSet, IndexSet>>{
                                     {kNone, kTwo}, {kNone, kThree}, {kTwo, kBoth}, {kThree, kBoth}});
  CHECK(multiplier_of(f, kTwo) == 2);
  CHECK(multiplier_of(f, kThree) == 3);
  CHECK(multiplier_of(f, kBoth) == 6);
}

TEST_CASE("prime power lattice is a two-element chain") {
  const auto lattice = lattice_of(factorize(243));
  CHECK(lattice.nodes().size() == 2);
  CHECK(lattice.hasse_edges().size() == 1);
  CHECK(lattice.leq(lattice.bottom(), lattice.top()));
  CHECK_FALSE(lattice.leq(lattice.top(), lattice.bottom()));
}

TEST_CASE("lattice order agrees with multiplier divisibility") {
  for (std::uint64_t m = 2; m <= 500; ++m) {
    const auto f = factorize(m);
    const auto lattice = lattice_of(f);
    for (const auto& I : lattice.nodes()) {
      for (const auto& K : lattice.nodes()) {
        const auto pi_I = multiplier_of(f, I), pi_K = multiplier_of(f, K);
        REQUIRE(lattice.leq(I, K) == (pi_K % pi_I == 0));
        REQUIRE(multiplier_of(f, lattice.join(I, K)) == std::lcm(pi_I, pi_K));
        REQUIRE(multiplier_of(f, lattice.meet(I, K)) == std::gcd(pi_I, pi_K));
        REQUIRE(idempotent_for(f, lattice.join(I, K)).d ==
                idempotent_product(f, idempotent_for(f, I).d, idempotent_for(f, K).d));
      }
    }
  }
}

TEST_CASE("hom_apply") {
  const auto f = factorize(36);
  CHECK(hom_apply(f, kNone, kTwo, 5) == 32);
  CHECK(hom_apply(f, kNone, kTwo, 1) == 28);
  for (Residue x : du_elements(f, kTwo)) CHECK(hom_apply(f, kTwo, kTwo, x) == x);
  CHECK_THROWS_AS(hom_apply(f, kTwo, kThree, 4), OrderError);
  CHECK_THROWS_AS(hom_apply(f, kNone, kTwo, 2), DomainError);
}

TEST_CASE("hom_kernel") {
  const auto f = factorize(36);
  CHECK(hom_kernel(f, kNone, kTwo) == Residues{1, 19});
  CHECK(hom_kernel(f, kTwo, kTwo) == Residues{28});
  CHECK(hom_kernel(f, kNone, kBoth) == oracle::units(36));
  CHECK_THROWS_AS(hom_kernel(f, kThree, kTwo), OrderError);
}

TEST_CASE("hom_fibers") {
  const auto f = factorize(36);
  const auto fibers = hom_fibers(f, kNone, kTwo);
  CHECK(fibers.at(28) == Residues{1, 19});
  CHECK(fibers.at(32) == Residues{5, 23});
  for (const auto& [image, preimage] : hom_fibers(f, kTwo, kTwo)) CHECK(preimage == Residues{image});
  const auto to_three = hom_fibers(f, kNone, kThree);
  CHECK(to_three.size() == 2);
  for (const auto& [image, preimage] : to_three) CHECK(preimage.size() == 6);
}

TEST_CASE("describe_hom") {
  const auto f = factorize(36);
  const auto h = describe_hom(f, kNone, kTwo);
  CHECK(h.multiplier_idempotent == 28);
  CHECK(h.fiber_size == 2);
  CHECK(h.kernel == Residues{1, 19});
  CHECK(describe_hom(f, kTwo, kBoth).multiplier_idempotent == 9);
}

TEST_CASE("homomorphism suite for m <= 200") {
  for (std::uint64_t m = 2; m <= 200; ++m) {
    const auto f = factorize(m);
    const auto sets = all_index_sets(static_cast<unsigned>(f.arity()));
    for (const auto& I : sets) {
      const auto source = du_elements(f, I);
      const auto d_I = idempotent_for(f, I).d;
      for (const auto& K : sets) {
        if (!I.is_subset_of(K)) {
          REQUIRE_THROWS_AS(describe_hom(f, I, K), OrderError);
          continue;
        }
        const auto g_K = prime_power_part(f, K);
        const auto h = describe_hom(f, I, K);
        REQUIRE(h.fiber_size * du_elements(f, K).size() == source.size());
        REQUIRE(h.fiber_size == oracle::phi(g_K) / oracle::phi(prime_power_part(f, I)));

        // Multiplicative on the full table, and d_K equals d_{K\I} d_I.
        for (Residue x : source) {
          REQUIRE(hom_apply(f, I, K, x) == h.multiplier_idempotent * x % m);
          for (Residue y : source)
            REQUIRE(hom_apply(f, I, K, x * y % m) == hom_apply(f, I, K, x) * hom_apply(f, I, K, y) % m);
        }

        // Image and fibers.
        Residues image;
        for (const auto& [target, preimage] : hom_fibers(f, I, K)) {
          image.push_back(target);
          REQUIRE(preimage.size() == h.fiber_size);
          for (Residue v : preimage) REQUIRE(v % (m / g_K) == preimage.front() % (m / g_K));
        }
        REQUIRE(image == du_elements(f, K));

        // Kernel from the definition: d_I u for units u = 1 mod m/g_K.
        Residues kernel;
        for (auto u : oracle::units(m))
          if (u % (m / g_K) == 1 % (m / g_K)) kernel.push_back(d_I * u % m);
        std::ranges::sort(kernel);
        kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
        REQUIRE(h.kernel == kernel);
        REQUIRE(h.kernel.size() == h.fiber_size);
        for (Residue k : h.kernel) REQUIRE(hom_apply(f, I, K, k) == idempotent_for(f, K).d);

        // Kernel is isomorphic to the product of unit groups mod p_j^e_j, j in K\I.
        OrderProfile predicted{1};
        for (unsigned j : K.minus(I).members()) {
          const auto q = f[j].value();
          OrderProfile local;
          for (auto u : oracle::units(q)) local.push_back(oracle::order_of(u, 1, q));
          predicted = product_profile(predicted, local);
        }
        std::ranges::sort(predicted);
        REQUIRE(order_profile(h.kernel, d_I, m) == predicted);

        // Composition through every J between I and K.
        for (const auto& J : sets) {
          if (!I.is_subset_of(J) || !J.is_subset_of(K)) continue;
          for (Residue x : source)
            REQUIRE(hom_apply(f, J, K, hom_apply(f, I, J, x)) == hom_apply(f, I, K, x));
        }
      }
    }
  }
}
