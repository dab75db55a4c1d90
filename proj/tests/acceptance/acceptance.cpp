// Acceptance suite: one PASS/FAIL line per criterion.
//
//   spg_acceptance [--criterion N] [--cli PATH] [--workdir DIR]
//
// Without --criterion every criterion runs. Exit status is 0 iff every
// selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spg/arith.hpp"
#include "spg/components.hpp"
#include "spg/graph_oracle.hpp"
#include "spg/idempotents.hpp"
#include "spg/lattice_hom.hpp"
#include "spg/orbits.hpp"
#include "spg/stats.hpp"

namespace {

using namespace spg;
using Residues = std::vector<Residue>;
using Clock = std::chrono::steady_clock;

struct Context {
  std::string cli;
  std::filesystem::path workdir;
};

/// Collects the first problem found and any informational notes.
struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void note(const std::string& text) {
    if (pass) detail = text;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<IndexSet> index_sets(const Factorization& f) {
  return all_index_sets(static_cast<unsigned>(f.arity()));
}

/// Buckets [0, m) by the set of primes of m dividing each residue.
std::vector<Residues> bucket_by_prime_support(const Factorization& f) {
  const std::uint64_t m = f.modulus();
  std::vector<Residues> buckets(std::size_t{1} << f.arity());
  for (Residue v = 0; v < m; ++v) {
    std::uint32_t bits = 0;
    for (unsigned i = 0; i < f.arity(); ++i)
      if (std::gcd(v, m) % f[i].prime == 0) bits |= 1U << i;
    buckets[bits].push_back(v);
  }
  return buckets;
}

Wide sum_of(const Residues& v) {
  return std::accumulate(v.begin(), v.end(), Wide{0}, [](Wide a, Residue x) { return a + x; });
}

std::uint64_t brute_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

Residues brute_units(std::uint64_t m) {
  Residues out;
  for (Residue u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  return out;
}

std::string at(std::uint64_t m, const Factorization& f, const IndexSet& I) {
  return "m=" + std::to_string(m) + " I=" + format_primes(f, I);
}

// 1. Analytic component vertex sets equal the oracle components.
Result structure(const Context&) {
  Result r;
  const auto start = Clock::now();
  for (std::uint64_t m = 2; m <= 300 && r.pass; ++m) {
    const auto f = factorize(m);
    const auto graph = build_graph(m);
    std::vector<Residues> analytic;
    for (const auto& I : index_sets(f)) analytic.push_back(component_elements(f, I));
    std::ranges::sort(analytic, {}, [](const Residues& c) { return c.front(); });
    if (analytic != graph.components) r.fail("partition mismatch at m=" + std::to_string(m));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) r.fail("took " + std::to_string(elapsed) + " s (limit 60 s)");
  r.note("m in [2,300], " + std::to_string(elapsed) + " s");
  return r;
}

// 2. Tail predicate and tail counts against orbits.
Result tail_classification(const Context&) {
  Result r;
  for (std::uint64_t m = 2; m <= 300 && r.pass; ++m) {
    const auto f = factorize(m);
    std::vector<std::uint64_t> oracle_tails(std::size_t{1} << f.arity(), 0);
    for (Residue v = 0; v < m; ++v) {
      const bool oracle_tail = !orbit(m, v).tail.empty();
      const IndexSet I = index_set_of(f, v);
      const bool analytic = v % prime_power_part(f, I) != 0;
      if (analytic != oracle_tail || is_tail(f, v) != oracle_tail)
        r.fail("tail predicate at m=" + std::to_string(m) + " v=" + std::to_string(v));
      if (oracle_tail) ++oracle_tails[I.bits()];
    }
    for (const auto& I : index_sets(f))
      if (tail_count(f, I) != oracle_tails[I.bits()]) r.fail("tail count " + at(m, f, I));
  }
  r.note("m in [2,300], every v < m");
  return r;
}

// 3. The m = 36 fixture.
Result fixture_36(const Context&) {
  Result r;
  const auto f = factorize(36);
  const IndexSet two{0b01, 2};
  const IndexSet all = IndexSet::full(2);
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) r.fail(what);
  };
  expect(build_graph(36).components.size() == 4, "4 components");
  Residues idems;
  for (const auto& rec : all_idempotents(f)) idems.push_back(rec.d);
  std::ranges::sort(idems);
  expect(idems == Residues{0, 1, 9, 28}, "idempotents {0,1,9,28}");
  expect(multiplier_of(f, two) == 2, "pi = 2 for {2}");
  expect(component_elements(f, two).size() == 12, "12 elements");
  expect(du_elements(f, two) == Residues{4, 8, 16, 20, 28, 32}, "cycle elements");
  Residues tails;
  for (const auto& [y, part] : tail_partition(f, two)) tails.insert(tails.end(), part.begin(), part.end());
  std::ranges::sort(tails);
  expect(tails == Residues{2, 10, 14, 22, 26, 34}, "tails of pi=2 component");
  expect(component_sum(f, two) == 216, "sum 216");
  expect(tail_sum(f, two) == 108, "tail sum 108");
  expect(tail_count(f, all) == 5, "nilpotent component has 5 tails");
  expect(component_sum(f, all) == 90, "nilpotent component sum 90");
  r.note("all fixture values exact");
  return r;
}

// 4. Closed form, inclusion-exclusion and direct sums agree.
Result sums(const Context&) {
  Result r;
  for (std::uint64_t m = 2; m <= 1000 && r.pass; ++m) {
    const auto f = factorize(m);
    const auto buckets = bucket_by_prime_support(f);
    const Wide phi_m = euler_phi(f);
    for (const auto& I : index_sets(f)) {
      const Wide direct = sum_of(buckets[I.bits()]);
      if (component_sum(f, I) != direct) r.fail("closed-form sum " + at(m, f, I));
      if (sum_by_inclusion_exclusion(f, I) != direct) r.fail("inclusion-exclusion " + at(m, f, I));
      const auto rec = idempotent_for(f, I);
      Residues cyclic;
      for (Residue v : buckets[I.bits()])
        if (v % rec.g == 0) cyclic.push_back(v);
      if (du_sum(f, I) != sum_of(cyclic)) r.fail("dU sum " + at(m, f, I));
      if (rec.d != 0 && du_sum(f, I) * 2 * static_cast<Wide>(brute_phi(rec.g)) != Wide(m) * phi_m)
        r.fail("dU closed form " + at(m, f, I));
    }
    if (sum_of(buckets[0]) * 2 != Wide(m) * phi_m) r.fail("unit sum at m=" + std::to_string(m));
  }
  r.note("m in [2,1000], all I");
  return r;
}

// 5. phi(m)/phi(pi_I) = sum over y | g_I/pi_I of phi(m/(y pi_I)).
Result totient_identity(const Context&) {
  Result r;
  for (std::uint64_t m = 2; m <= 1000 && r.pass; ++m) {
    const auto f = factorize(m);
    for (const auto& I : index_sets(f)) {
      const auto rec = idempotent_for(f, I);
      std::uint64_t rhs = 0;
      for (std::uint64_t y = 1; y <= rec.g / rec.pi; ++y)
        if ((rec.g / rec.pi) % y == 0) rhs += brute_phi(m / (y * rec.pi));
      const auto id = verify_phi_identity(f, I);
      if (brute_phi(m) / brute_phi(rec.pi) != rhs || id.lhs != id.rhs || id.rhs != rhs)
        r.fail("identity " + at(m, f, I));
    }
  }
  r.note("m in [2,1000], all I");
  return r;
}

// 6. Homomorphisms between comparable components.
Result homomorphisms(const Context&) {
  Result r;
  for (std::uint64_t m = 2; m <= 200 && r.pass; ++m) {
    const auto f = factorize(m);
    const auto sets = index_sets(f);
    for (const auto& I : sets) {
      const auto source = du_elements(f, I);
      const Residue d_I = idempotent_for(f, I).d;
      for (const auto& K : sets) {
        if (!I.is_subset_of(K)) continue;
        const std::uint64_t g_K = prime_power_part(f, K);
        const std::uint64_t fiber = brute_phi(g_K) / brute_phi(prime_power_part(f, I));
        for (Residue x : source)
          for (Residue y : source)
            if (hom_apply(f, I, K, x * y % m) != hom_apply(f, I, K, x) * hom_apply(f, I, K, y) % m)
              r.fail("not multiplicative " + at(m, f, I));
        Residues image;
        for (const auto& [target, preimage] : hom_fibers(f, I, K)) {
          image.push_back(target);
          if (preimage.size() != fiber) r.fail("fiber size " + at(m, f, I));
        }
        if (image != du_elements(f, K)) r.fail("image " + at(m, f, I));
        Residues kernel;
        for (Residue u : brute_units(m))
          if (u % (m / g_K) == 1 % (m / g_K)) kernel.push_back(d_I * u % m);
        std::ranges::sort(kernel);
        kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
        if (hom_kernel(f, I, K) != kernel) r.fail("kernel " + at(m, f, I));
        for (const auto& J : sets) {
          if (!I.is_subset_of(J) || !J.is_subset_of(K)) continue;
          for (Residue x : source)
            if (hom_apply(f, J, K, hom_apply(f, I, J, x)) != hom_apply(f, I, K, x))
              r.fail("composition " + at(m, f, I));
        }
      }
    }
  }
  r.note("m in [2,200], every comparable pair");
  return r;
}

// 7. Order profiles of d_I U x d_{R\I} U and of kernels.
Result isomorphisms(const Context&) {
  Result r;
  for (std::uint64_t m = 2; m <= 200 && r.pass; ++m) {
    const auto f = factorize(m);
    const auto unit_profile = order_profile(brute_units(m), 1, m);
    for (const auto& I : index_sets(f)) {
      const auto rest = I.complement();
      const auto left = order_profile(du_elements(f, I), idempotent_for(f, I).d, m);
      const auto right = order_profile(du_elements(f, rest), idempotent_for(f, rest).d, m);
      if (product_profile(left, right) != unit_profile) r.fail("dU cross product " + at(m, f, I));
      for (const auto& K : index_sets(f)) {
        if (!I.is_subset_of(K)) continue;
        OrderProfile predicted{1};
        for (unsigned j : K.minus(I).members()) {
          const auto q = f[j].value();
          predicted = product_profile(predicted, order_profile(brute_units(q), 1, q));
        }
        if (order_profile(hom_kernel(f, I, K), idempotent_for(f, I).d, m) != predicted)
          r.fail("kernel structure " + at(m, f, I));
      }
    }
  }
  r.note("m in [2,200]");
  return r;
}

// 8. beta(n) = phi(n) for squarefree n.
Result beta_phi(const Context&) {
  Result r;
  std::size_t checked = 0;
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    bool squarefree = true;
    for (std::uint64_t p = 2; p * p <= n; ++p) squarefree &= n % (p * p) != 0;
    if (!squarefree) continue;
    ++checked;
    if (beta(n) != static_cast<std::int64_t>(brute_phi(n))) r.fail("n=" + std::to_string(n));
  }
  r.note(std::to_string(checked) + " squarefree n <= 10000");
  return r;
}

// 9. Asymptotic scans at N = 2000.
Result asymptotics(const Context&) {
  Result r;
  const auto start = Clock::now();
  const std::uint64_t N = 2000;
  const auto report = scan(N);
  const double elapsed = seconds_since(start);
  const double lnN = std::log(static_cast<double>(N));

  struct Check {
    const char* name;
    double value;
    double reference;
    double tolerance;
  };
  const Check checks[] = {
      {"sum a / N^2 vs A", report.totals.ratio_a(), kFinchA, 0.02},
      {"sum phi / N^2 vs 3/pi^2", report.totals.ratio_phi(), three_over_pi_squared(), 0.02},
      {"mean idempotents vs (6/pi^2) ln N", report.totals.mean_idempotents(),
       six_over_pi_squared() * lnN, 0.10},
  };
  std::ostringstream detail;
  for (const auto& c : checks) {
    const double rel = std::abs(c.value / c.reference - 1.0);
    detail << c.name << ": " << c.value << " vs " << c.reference << " (" << 100.0 * rel
           << "%, limit " << 100.0 * c.tolerance << "%); ";
    if (rel > c.tolerance) r.pass = false;
  }
  if (elapsed >= 120.0) r.pass = false;
  detail << elapsed << " s";
  r.detail = detail.str();
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// 10. CLI outputs are byte-identical across runs.
Result determinism(const Context& ctx) {
  Result r;
  if (ctx.cli.empty()) {
    r.fail("no --cli binary given");
    return r;
  }
  std::filesystem::create_directories(ctx.workdir);
  struct Case {
    std::string name;
    std::string args;
    bool csv;
  };
  const std::vector<Case> cases = {
      {"graph_dot", "graph 36 --format dot", false},
      {"graph_json", "graph 36 --format json", false},
      {"analyze_json", "analyze 36 --json --elements", false},
      {"stats_csv", "stats --max 2000", true},
  };
  for (const auto& c : cases) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const auto stdout_path = ctx.workdir / (c.name + "_" + std::to_string(run) + ".out");
      const auto csv_path = ctx.workdir / (c.name + "_" + std::to_string(run) + ".csv");
      std::string command = "\"" + ctx.cli + "\" " + c.args;
      if (c.csv) command += " --csv \"" + csv_path.string() + "\"";
      command += " > \"" + stdout_path.string() + "\"";
      if (std::system(command.c_str()) != 0) {
        r.fail(c.name + ": command failed");
        continue;
      }
      outputs[run] = read_file(c.csv ? csv_path : stdout_path);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) r.fail(c.name + " differs between runs");
  }
  r.note("graph dot/json, analyze --json, stats --csv");
  return r;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Result(const Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  int only = 0;
  Context ctx;
  std::string workdir = ".";
  app.add_option("--criterion", only, "Run a single criterion (1-10)");
  app.add_option("--cli", ctx.cli, "Path to the spg binary");
  app.add_option("--workdir", workdir, "Scratch directory for CLI outputs");
  CLI11_PARSE(app, argc, argv);
  ctx.workdir = std::filesystem::path(workdir) / "acceptance_out";

  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence (structure)", structure},
      {2, "tail classification", tail_classification},
      {3, "m = 36 fixture", fixture_36},
      {4, "sum formulas", sums},
      {5, "totient identity", totient_identity},
      {6, "homomorphism suite", homomorphisms},
      {7, "isomorphism evidence", isomorphisms},
      {8, "beta-phi identity", beta_phi},
      {9, "asymptotic scans", asymptotics},
      {10, "determinism", determinism},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    Result result;
    try {
      result = c.run(ctx);
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    all_pass &= result.pass;
    std::cout << "criterion " << c.number << " [" << c.title << "]: "
              << (result.pass ? "PASS" : "FAIL") << " : " << result.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
