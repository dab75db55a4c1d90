#include "spg/report.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "spg/errors.hpp"
#include "spg/lattice_hom.hpp"

namespace spg::report {
namespace {

using Json = nlohmann::ordered_json;

Json json_int(Wide v) {
  if (v < 0 || v > static_cast<Wide>(std::numeric_limits<std::uint64_t>::max()))
    throw DomainError("value " + to_string(v) + " does not fit a JSON integer");
  return static_cast<std::uint64_t>(v);
}

std::string fixed(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string join(const std::vector<Residue>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string factorization_string(const Factorization& f) {
  std::string out;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (i) out += " * ";
    out += std::to_string(f[i].prime);
    if (f[i].exponent > 1) out += "^" + std::to_string(f[i].exponent);
  }
  return out;
}

Json primes_json(const Factorization& f, const IndexSet& I) {
  Json primes = Json::array();
  for (unsigned i : I.members()) primes.push_back(f[i].prime);
  return primes;
}

Json component_json_value(const Factorization& f, const ComponentDescriptor& c, bool elements,
                          std::uint64_t budget) {
  const IndexSet& I = c.idem.index_set;
  Json j;
  j["primes"] = primes_json(f, I);
  j["pi"] = c.idem.pi;
  j["g"] = c.idem.g;
  j["a"] = c.idem.a;
  j["d"] = c.idem.d;
  j["size"] = c.size;
  j["cycle_size"] = c.cycle_size;
  j["tail_count"] = c.tail_count;
  j["element_sum"] = json_int(c.element_sum);
  j["tail_sum"] = json_int(c.tail_sum);
  j["max_tail_length"] = c.max_tail_length;
  if (elements) {
    j["elements"] = component_elements(f, I, budget);
    j["cycle_elements"] = du_elements(f, I, budget);
    Json partition = Json::object();
    for (const auto& [y, tails] : tail_partition(f, I, budget)) partition[std::to_string(y)] = tails;
    j["tail_partition"] = partition;
  }
  return j;
}

void check_listing_budget(const Factorization& f, std::uint64_t budget) {
  // Listings of all components together cover every residue once.
  if (f.modulus() > budget)
    throw BudgetExceeded("element listings for m = " + std::to_string(f.modulus()) +
                         " exceed the element budget of " + std::to_string(budget));
}

}  // namespace

std::string analysis_json(const Factorization& f, const AnalysisOptions& options) {
  if (options.elements) check_listing_budget(f, options.element_budget);
  Json j;
  j["m"] = f.modulus();
  Json factors = Json::array();
  for (const auto& pp : f.factors()) factors.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
  j["factorization"] = factors;
  Json components = Json::array();
  for (const auto& c : describe_components(f))
    components.push_back(component_json_value(f, c, options.elements, options.element_budget));
  j["components"] = components;
  return j.dump(2) + "\n";
}

std::string analysis_text(const Factorization& f, const AnalysisOptions& options) {
  if (options.elements) check_listing_budget(f, options.element_budget);
  std::ostringstream out;
  const auto components = describe_components(f);
  out << "m = " << f.modulus() << " = " << factorization_string(f) << "\n";
  out << "components: " << components.size() << "\n\n";
  out << "primes\tpi\tg\td\tsize\tcycle\ttails\tsum\ttail_sum\tmax_tail\n";
  for (const auto& c : components) {
    out << format_primes(f, c.idem.index_set) << '\t' << c.idem.pi << '\t' << c.idem.g << '\t'
        << c.idem.d << '\t' << c.size << '\t' << c.cycle_size << '\t' << c.tail_count << '\t'
        << to_string(c.element_sum) << '\t' << to_string(c.tail_sum) << '\t'
        << c.max_tail_length << "\n";
  }
  if (options.elements) {
    for (const auto& c : components) {
      const auto& I = c.idem.index_set;
      out << "\ncomponent " << format_primes(f, I) << " (pi = " << c.idem.pi << ")\n";
      out << "  elements: " << join(component_elements(f, I, options.element_budget)) << "\n";
      out << "  cycle:    " << join(du_elements(f, I, options.element_budget)) << "\n";
      for (const auto& [y, tails] : tail_partition(f, I, options.element_budget))
        out << "  tails y=" << y << ": " << join(tails) << "\n";
    }
  }
  return out.str();
}

std::string graph_dot(const PowerGraph& g) {
  std::ostringstream out;
  out << "digraph power_graph_" << g.m << " {\n";
  for (Residue v = 0; v < g.m; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_json(const PowerGraph& g) {
  Json j;
  j["m"] = g.m;
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = edges;
  j["components"] = g.components;
  return j.dump() + "\n";
}

std::string orbit_text(std::uint64_t m, const Orbit& o) {
  std::ostringstream out;
  out << "orbit of " << o.base << " mod " << m << "\n";
  out << "  tail:        " << join(o.tail) << "\n";
  out << "  cycle:       " << join(o.cycle) << "\n";
  out << "  idempotent:  " << o.idempotent << "\n";
  out << "  tail length: " << o.tail.size() << "\n";
  return out.str();
}

std::string orbit_json(std::uint64_t m, const Orbit& o) {
  Json j;
  j["m"] = m;
  j["base"] = o.base;
  j["tail"] = o.tail;
  j["cycle"] = o.cycle;
  j["idempotent"] = o.idempotent;
  return j.dump(2) + "\n";
}

std::string component_text(const Factorization& f, const IndexSet& I, std::uint64_t budget) {
  const auto c = describe_component(f, I);
  std::ostringstream out;
  out << "component " << format_primes(f, I) << " of Z/" << f.modulus() << "Z\n";
  out << "  pi = " << c.idem.pi << ", g = " << c.idem.g << ", a = " << c.idem.a
      << ", d = " << c.idem.d << "\n";
  out << "  size " << c.size << ", cycle " << c.cycle_size << ", tails " << c.tail_count << "\n";
  out << "  sum " << to_string(c.element_sum) << ", cycle sum " << to_string(du_sum(f, I))
      << ", tail sum " << to_string(c.tail_sum) << "\n";
  out << "  max tail length " << c.max_tail_length << "\n";
  out << "  dU structure: [" << join(predicted_group_structure(f, I), ", ") << "]\n";
  out << "  elements: " << join(component_elements(f, I, budget)) << "\n";
  out << "  cycle:    " << join(du_elements(f, I, budget)) << "\n";
  for (const auto& [y, tails] : tail_partition(f, I, budget))
    out << "  tails y=" << y << ": " << join(tails) << "\n";
  for (const auto& layer : tail_layers(f, I, budget))
    out << "  layer T_" << layer.index << " (length " << layer.predicted_length
        << "): " << join(layer.tails) << "\n";
  return out.str();
}

std::string component_json(const Factorization& f, const IndexSet& I, std::uint64_t budget) {
  Json j = component_json_value(f, describe_component(f, I), true, budget);
  j["du_sum"] = json_int(du_sum(f, I));
  j["group_structure"] = predicted_group_structure(f, I);
  Json layers = Json::array();
  for (const auto& layer : tail_layers(f, I, budget))
    layers.push_back({{"index", layer.index},
                      {"predicted_length", layer.predicted_length},
                      {"tails", layer.tails}});
  j["tail_layers"] = layers;
  return j.dump(2) + "\n";
}

std::string lattice_text(const Factorization& f) {
  const auto lattice = lattice_of(f);
  auto nodes = lattice.nodes();
  std::ranges::sort(nodes, {}, [&](const IndexSet& I) { return multiplier_of(f, I); });
  std::ostringstream out;
  out << "component lattice of Z/" << f.modulus() << "Z: " << nodes.size() << " nodes\n";
  for (const auto& I : nodes) {
    out << "  " << format_primes(f, I) << "  pi = " << multiplier_of(f, I)
        << "  d = " << idempotent_for(f, I).d << "  covers:";
    for (const auto& [lower, upper] : lattice.hasse_edges())
      if (upper == I) out << " " << format_primes(f, lower);
    out << "\n";
  }
  return out.str();
}

std::string lattice_dot(const Factorization& f) {
  const auto lattice = lattice_of(f);
  auto nodes = lattice.nodes();
  std::ranges::sort(nodes, {}, [&](const IndexSet& I) { return multiplier_of(f, I); });
  std::ostringstream out;
  out << "graph lattice_" << f.modulus() << " {\n";
  for (const auto& I : nodes)
    out << "  \"" << multiplier_of(f, I) << "\" [label=\"" << format_primes(f, I)
        << " d=" << idempotent_for(f, I).d << "\"];\n";
  for (const auto& [lower, upper] : lattice.hasse_edges())
    out << "  \"" << multiplier_of(f, lower) << "\" -- \"" << multiplier_of(f, upper) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string hom_text(const Factorization& f, const IndexSet& I, const IndexSet& K,
                     std::uint64_t budget) {
  const auto h = describe_hom(f, I, K);
  std::ostringstream out;
  out << "H: d_I U -> d_K U on Z/" << f.modulus() << "Z, I = " << format_primes(f, I)
      << ", K = " << format_primes(f, K) << "\n";
  out << "  d_I = " << idempotent_for(f, I).d << ", d_K = " << idempotent_for(f, K).d
      << ", d_{K\\I} = " << h.multiplier_idempotent << "\n";
  out << "  fiber size " << h.fiber_size << "\n";
  out << "  kernel: " << join(h.kernel) << "\n";
  const IdempotentRecord src = idempotent_for(f, I);
  const std::uint64_t source_size = euler_phi(f.modulus() / src.g);
  if (source_size <= budget) {
    out << "  map:\n";
    for (const auto& [image, preimage] : hom_fibers(f, I, K, budget))
      out << "    " << image << " <- " << join(preimage) << "\n";
  } else {
    out << "  map table omitted: " << source_size << " elements exceed the element budget of "
        << budget << "\n";
  }
  return out.str();
}

std::string stats_text(const ScanReport& r) {
  const auto& t = r.totals;
  const double N = static_cast<double>(t.N);
  const double lnN = std::log(N);
  std::ostringstream out;
  out << "scan over 2 <= m <= " << t.N << "\n";
  out << "  sum a(m)        = " << t.sum_a << "\n";
  out << "  sum a(m) / N^2  = " << fixed(t.ratio_a()) << "   (A = " << fixed(kFinchA, 4) << ")\n";
  out << "  sum phi(m)      = " << t.sum_phi << "\n";
  out << "  sum phi / N^2   = " << fixed(t.ratio_phi()) << "   (3/pi^2 = "
      << fixed(three_over_pi_squared()) << ")\n";
  out << "  mean idempotents = " << fixed(t.mean_idempotents()) << "   ((6/pi^2) ln N = "
      << fixed(six_over_pi_squared() * lnN) << ")\n";
  if (auto sq = t.sq_image_mean())
    out << "  mean |x^2 image| = " << fixed(*sq) << "   (.376 N / sqrt(ln N) = "
        << fixed(0.376 * N / std::sqrt(lnN)) << ")\n";
  if (auto cube = t.cube_image_mean())
    out << "  mean |x^3 image| = " << fixed(*cube) << "   (.484 N / cbrt(ln N) = "
        << fixed(0.484 * N / std::cbrt(lnN)) << ")\n";
  return out.str();
}

std::string stats_csv(const ScanReport& r) {
  std::ostringstream out;
  out << "N,sum_a,sum_phi,mean_idem,ratio_a,ratio_phi,sq_image_mean,cube_image_mean\n";
  for (const auto& row : r.checkpoints) {
    out << row.N << ',' << row.sum_a << ',' << row.sum_phi << ',' << fixed(row.mean_idempotents())
        << ',' << fixed(row.ratio_a()) << ',' << fixed(row.ratio_phi()) << ','
        << (row.sq_image_mean() ? fixed(*row.sq_image_mean()) : "") << ','
        << (row.cube_image_mean() ? fixed(*row.cube_image_mean()) : "") << "\n";
  }
  return out.str();
}

std::string stats_json(const ScanReport& r) {
  auto row_json = [](const ScanRow& row) {
    Json j;
    j["n"] = row.N;
    j["sum_a"] = row.sum_a;
    j["sum_phi"] = row.sum_phi;
    j["sum_idempotents"] = row.sum_idempotents;
    j["mean_idempotents"] = row.mean_idempotents();
    j["ratio_a"] = row.ratio_a();
    j["ratio_phi"] = row.ratio_phi();
    j["sq_image_mean"] = row.sq_image_mean() ? Json(*row.sq_image_mean()) : Json();
    j["cube_image_mean"] = row.cube_image_mean() ? Json(*row.cube_image_mean()) : Json();
    return j;
  };
  const double N = static_cast<double>(r.totals.N);
  const double lnN = std::log(N);
  Json j = row_json(r.totals);
  j["reference"] = {{"a_constant", kFinchA},
                    {"three_over_pi_squared", three_over_pi_squared()},
                    {"mean_idempotents", six_over_pi_squared() * lnN},
                    {"sq_image_mean", 0.376 * N / std::sqrt(lnN)},
                    {"cube_image_mean", 0.484 * N / std::cbrt(lnN)}};
  Json checkpoints = Json::array();
  for (const auto& row : r.checkpoints) checkpoints.push_back(row_json(row));
  j["checkpoints"] = checkpoints;
  return j.dump(2) + "\n";
}

IndexSet parse_prime_list(const Factorization& f, std::string_view text) {
  const auto r = static_cast<unsigned>(f.arity());
  IndexSet I = IndexSet::empty(r);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
      ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    if (end == pos) break;
    const auto token = text.substr(pos, end - pos);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), p);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw DomainError("not a number: '" + std::string(token) + "'");
    bool found = false;
    for (unsigned i = 0; i < r; ++i) {
      if (f[i].prime == p) {
        I = I.unite(IndexSet::singleton(i, r));
        found = true;
      }
    }
    if (!found)
      throw DomainError(std::to_string(p) + " is not a prime divisor of " + std::to_string(f.modulus()));
    pos = end;
  }
  return I;
}

}  // namespace spg::report
