// Command-line front end for the sequential power graph library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spg/arith.hpp"
#include "spg/errors.hpp"
#include "spg/graph_oracle.hpp"
#include "spg/orbits.hpp"
#include "spg/report.hpp"
#include "spg/stats.hpp"
#include "spg/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3, kBudget = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw IoError("write to " + path + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure of the sequential power graph of Z/mZ"};
  app.require_subcommand(1);

  std::uint64_t m = 0;
  std::uint64_t max_elements = spg::kDefaultElementBudget;
  std::uint64_t max_oracle = spg::kDefaultOracleBudget;
  unsigned threads = 0;
  bool json = false;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Closed-form description of every component");
  bool elements = false;
  analyze->add_option("m", m, "Modulus (>= 2)")->required();
  analyze->add_flag("--json", json, "Emit JSON");
  analyze->add_flag("--elements", elements, "Include element and tail listings");
  analyze->add_option("--max-elements", max_elements, "Element listing budget");

  auto* graph = app.add_subcommand("graph", "Export the brute-force power graph");
  std::string format = "dot";
  graph->add_option("m", m, "Modulus (>= 2)")->required();
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out_path, "Output file (default stdout)");
  graph->add_option("--max-oracle-m", max_oracle, "Oracle budget in walked orbit vertices");

  auto* orbit_cmd = app.add_subcommand("orbit", "Tail, cycle and idempotent of one element");
  std::uint64_t base = 0;
  orbit_cmd->add_option("m", m, "Modulus (>= 2)")->required();
  orbit_cmd->add_option("a", base, "Residue")->required();
  orbit_cmd->add_flag("--json", json, "Emit JSON");

  auto* component = app.add_subcommand("component", "Full listing of one component");
  std::string primes;
  component->add_option("m", m, "Modulus (>= 2)")->required();
  component->add_option("--primes", primes, "Primes of the index set, e.g. \"2,3\"");
  component->add_flag("--json", json, "Emit JSON");
  component->add_option("--max-elements", max_elements, "Element listing budget");

  auto* lattice = app.add_subcommand("lattice", "Component lattice");
  bool dot = false;
  lattice->add_option("m", m, "Modulus (>= 2)")->required();
  lattice->add_flag("--dot", dot, "Hasse diagram as DOT");

  auto* hom = app.add_subcommand("hom", "Homomorphism d_I U -> d_K U");
  std::string from_primes, to_primes;
  hom->add_option("m", m, "Modulus (>= 2)")->required();
  hom->add_option("--from-primes", from_primes, "Primes of I (default: none)");
  hom->add_option("--to-primes", to_primes, "Primes of K (default: none)");
  hom->add_option("--max-elements", max_elements, "Map table budget");

  auto* verify = app.add_subcommand("verify", "Check analytic results against the oracle");
  std::uint64_t from = 2, to = 2;
  verify->add_option("--from", from, "First modulus")->required();
  verify->add_option("--to", to, "Last modulus")->required();
  verify->add_option("--max-oracle-m", max_oracle, "Oracle budget in walked orbit vertices");
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* stats = app.add_subcommand("stats", "Range scan of arithmetic aggregates");
  std::uint64_t max_n = 2;
  std::string csv_path;
  stats->add_option("--max", max_n, "Scan bound N (>= 2)")->required();
  stats->add_option("--csv", csv_path, "Write checkpoint CSV to this file");
  stats->add_flag("--json", json, "Emit JSON");
  stats->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) {
      const auto f = spg::factorize(m);
      const spg::report::AnalysisOptions options{elements, max_elements};
      std::cout << (json ? spg::report::analysis_json(f, options)
                         : spg::report::analysis_text(f, options));
    } else if (*graph) {
      if (m < 2) throw spg::DomainError("modulus must be at least 2");
      const auto g = spg::build_graph(m, max_oracle);
      emit(format == "json" ? spg::report::graph_json(g) : spg::report::graph_dot(g), out_path);
    } else if (*orbit_cmd) {
      const auto o = spg::orbit(m, base);
      std::cout << (json ? spg::report::orbit_json(m, o) : spg::report::orbit_text(m, o));
    } else if (*component) {
      const auto f = spg::factorize(m);
      const auto I = spg::report::parse_prime_list(f, primes);
      std::cout << (json ? spg::report::component_json(f, I, max_elements)
                         : spg::report::component_text(f, I, max_elements));
    } else if (*lattice) {
      const auto f = spg::factorize(m);
      std::cout << (dot ? spg::report::lattice_dot(f) : spg::report::lattice_text(f));
    } else if (*hom) {
      const auto f = spg::factorize(m);
      const auto I = spg::report::parse_prime_list(f, from_primes);
      const auto K = spg::report::parse_prime_list(f, to_primes);
      std::cout << spg::report::hom_text(f, I, K, max_elements);
    } else if (*verify) {
      if (from < 2 || from > to) {
        std::cerr << "usage error: verify needs 2 <= --from <= --to\n";
        return kUsage;
      }
      const auto outcomes = spg::verify_range(from, to, {max_oracle, threads});
      std::size_t components = 0;
      for (const auto& o : outcomes) {
        if (o.failure) {
          const auto& fail = *o.failure;
          std::cout << "FAIL m=" << fail.m << " check=\"" << fail.check << "\" expected="
                    << fail.expected << " actual=" << fail.actual << "\n";
          return kMismatch;
        }
        components += o.components_checked;
      }
      std::cout << "verified m = " << from << ".." << to << ": " << outcomes.size()
                << " moduli, " << components << " components checked\n";
    } else if (*stats) {
      const auto r = spg::scan(max_n, {.threads = threads});
      std::cout << (json ? spg::report::stats_json(r) : spg::report::stats_text(r));
      if (!csv_path.empty()) emit(spg::report::stats_csv(r), csv_path);
    }
  } catch (const spg::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::logic_error& e) {
    // DomainError, OrderError and invalid arguments.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
