// toric: command-line front end for the toric arrangement toolkit.
//
// Every report is a sequence of "key: value" lines in a fixed order.
// Exit status: 0 success, 1 user or input error, 2 refusal.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "toric/arrangement.hpp"
#include "toric/cohomology.hpp"
#include "toric/forms.hpp"
#include "toric/poset.hpp"

using namespace toric;

namespace {

constexpr int kExitUser = 1;
constexpr int kExitRefusal = 2;

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string name;
  std::string digest;
  ToricArrangement arr;
};

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return {std::filesystem::path(path).filename().string(), fnv1a_hex(text),
          parse_arrangement(text)};
}

void header(std::ostream& os, const std::string& command, const Input& in) {
  os << "command: " << command << '\n'
     << "file: " << in.name << '\n'
     << "digest: " << in.digest << '\n'
     << "dimension: " << in.arr.dimension() << '\n'
     << "hypersurfaces: " << in.arr.size() << '\n';
}

std::vector<std::size_t> parse_ordering(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1 || static_cast<std::size_t>(v) > n)
      throw UserError("bad ordering entry '" + item + "' (expected 1.." + std::to_string(n) + ")");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  std::vector<bool> seen(n, false);
  for (auto i : out) {
    if (seen[i]) throw UserError("ordering repeats hypersurface " + std::to_string(i + 1));
    seen[i] = true;
  }
  if (out.size() != n) throw UserError("ordering must list all " + std::to_string(n) + " hypersurfaces");
  return out;
}

std::string join_ordering(const std::vector<std::size_t>& ord) {
  if (ord.empty()) return "-";
  std::string s;
  for (std::size_t k = 0; k < ord.size(); ++k) s += (k ? "," : "") + std::to_string(ord[k] + 1);
  return s;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os.str();
}

std::string witness_str(const Component& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.witness.size(); ++k)
    s += (k ? "," : "") + c.witness[k].get_str();
  return s + ")";
}

// DR search is exhaustive only up to 12 hypersurfaces.
constexpr std::size_t kSearchLimit = 12;

int cmd_analyze(const std::string& path, Execution exec) {
  Input in = load(path);
  const auto& arr = in.arr;
  std::ostringstream os;
  header(os, "analyze", in);
  IntersectionPoset poset = build_poset(arr, exec);
  os << "unimodular: " << (is_unimodular(arr, exec) ? "true" : "false") << '\n';
  Polynomial dcp = dcp_poincare(arr, poset);
  if (arr.size() > kSearchLimit) {
    os << "dr_type: unknown\nordering: none\npoincare_dr: unavailable\n";
  } else {
    DrReport rep = find_dr_ordering(arr);
    os << "dr_type: " << (rep.found ? "true" : "false") << '\n'
       << "ordering: " << (rep.found ? join_ordering(rep.ordering) : "none") << '\n';
    os << "poincare_dr: ";
    if (!rep.found) {
      os << "refused\n";
    } else {
      try {
        os << dr_poincare(arr, rep.ordering).str() << '\n';
      } catch (const DrRefusal&) {
        os << "refused\n";
      }
    }
  }
  os << "poincare_dcp: " << dcp.str() << '\n'
     << "betti: " << join(dcp.coefficients()) << '\n'
     << "components: " << poset.size() << '\n'
     << "layer_sizes: " << join(poset.layer_sizes()) << '\n';
  std::cout << os.str();
  return 0;
}

int cmd_poset(const std::string& path, Execution exec) {
  Input in = load(path);
  std::ostringstream os;
  header(os, "poset", in);
  IntersectionPoset poset = build_poset(in.arr, exec);
  os << "components: " << poset.size() << '\n'
     << "layer_sizes: " << join(poset.layer_sizes()) << '\n';
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const Component& c = poset[i];
    os << "component " << i << ": dim " << c.dimension() << " codim " << c.codimension() << ' '
       << c.label() << " witness " << witness_str(c) << '\n';
  }
  auto covers = poset.covers();
  os << "covers: " << covers.size() << '\n';
  for (auto [lo, hi] : covers) os << "cover: " << lo << " < " << hi << '\n';
  std::cout << os.str();
  return 0;
}

int cmd_poincare(const std::string& path, const std::string& method, const std::string& ordering,
                 Execution exec) {
  Input in = load(path);
  std::ostringstream os;
  header(os, "poincare", in);
  os << "method: " << method << '\n';
  if (method == "dcp") {
    if (!ordering.empty()) throw UserError("--ordering applies to --method=dr only");
    os << "poincare: " << dcp_poincare(in.arr, exec).str() << '\n';
    std::cout << os.str();
    return 0;
  }
  std::vector<std::size_t> ord;
  if (!ordering.empty()) {
    ord = parse_ordering(ordering, in.arr.size());
  } else {
    if (in.arr.size() > kSearchLimit)
      throw UserError("ordering search limited to 12 hypersurfaces; pass --ordering");
    DrReport rep = find_dr_ordering(in.arr);
    if (!rep.found) throw DrRefusal("no ordering satisfies the deletion-restriction condition");
    ord = rep.ordering;
  }
  Polynomial p = dr_poincare(in.arr, ord);
  os << "ordering: " << join_ordering(ord) << '\n' << "poincare: " << p.str() << '\n';
  std::cout << os.str();
  return 0;
}

int cmd_unimodular(const std::string& path, Execution exec) {
  Input in = load(path);
  std::ostringstream os;
  header(os, "unimodular", in);
  os << "unimodular: " << (is_unimodular(in.arr, exec) ? "true" : "false") << '\n';
  std::cout << os.str();
  return 0;
}

int cmd_drtype(const std::string& path, const std::string& ordering) {
  Input in = load(path);
  std::ostringstream os;
  header(os, "drtype", in);
  DrReport rep;
  if (!ordering.empty()) {
    rep = dr_condition_check(in.arr, parse_ordering(ordering, in.arr.size()));
    os << "mode: check\n" << "dr_type: " << (rep.verdict ? "true" : "false") << '\n';
  } else {
    if (in.arr.size() > kSearchLimit)
      throw UserError("ordering search limited to 12 hypersurfaces; pass --ordering");
    rep = find_dr_ordering(in.arr);
    os << "mode: search\n" << "dr_type: " << (rep.found ? "true" : "false") << '\n';
  }
  os << "ordering: " << (rep.found ? join_ordering(rep.ordering) : "none") << '\n'
     << "step_counts: " << (rep.step_counts.empty() ? "-" : join(rep.step_counts)) << '\n';
  std::cout << os.str();
  return 0;
}

int cmd_weyl(const std::string& family, std::size_t rank, bool simple_only) {
  WeylFamily f;
  try {
    f = parse_weyl_family(family);
  } catch (const std::invalid_argument& e) {
    throw UserError(e.what());
  }
  std::cout << serialize_arrangement(weyl(f, rank, simple_only));
  return 0;
}

int cmd_relations(const std::string& path, std::size_t samples, double tol, std::uint64_t seed,
                  Execution exec) {
  Input in = load(path);
  const auto& arr = in.arr;
  if (samples == 0) samples = default_sample_count(arr);
  std::ostringstream os;
  header(os, "relations", in);
  RelationBasis rb = degree2_relations(arr, samples, tol, seed, exec);
  auto gens = generators(arr);
  std::vector<std::string> order;
  for (auto [a, b] : wedge_monomials(gens.size())) order.push_back(gens[a].name() + "^" + gens[b].name());
  std::int64_t h2 = dcp_poincare(arr, exec).coefficient(2);
  const bool gap_ok = rb.gap > 1e3;
  os << "samples: " << samples << '\n'
     << "tolerance: " << tol << '\n'
     << "seed: " << seed << '\n'
     << "monomials: " << rb.monomial_count << '\n'
     << "monomial_order: " << (order.empty() ? "-" : join(order)) << '\n'
     << "nullity: " << rb.nullity() << '\n'
     << "rank: " << rb.rank() << '\n'
     << "gap_ok: " << (gap_ok ? "true" : "false") << '\n'
     << "expected_h2: " << h2 << '\n'
     << "consistent: "
     << (static_cast<std::int64_t>(rb.rank()) == h2 && gap_ok ? "true" : "false") << '\n';
  std::cout << os.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for toric arrangements"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  std::string file, method = "dcp", ordering, family;
  std::size_t rank = 0, samples = 0;
  double tol = kDefaultRelationTolerance;
  std::uint64_t seed = 0;
  bool simple_only = false;

  auto* analyze = app.add_subcommand("analyze", "Summary of an arrangement");
  analyze->add_option("file", file)->required();
  auto* poset = app.add_subcommand("poset", "Intersection poset of connected components");
  poset->add_option("file", file)->required();
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the complement");
  poincare->add_option("file", file)->required();
  poincare->add_option("--method", method)->check(CLI::IsMember({"dcp", "dr"}));
  poincare->add_option("--ordering", ordering, "1-based, comma separated");
  auto* unimodular = app.add_subcommand("unimodular", "Unimodularity test");
  unimodular->add_option("file", file)->required();
  auto* drtype = app.add_subcommand("drtype", "Deletion-restriction ordering search");
  drtype->add_option("file", file)->required();
  drtype->add_option("--ordering", ordering, "check this ordering instead of searching");
  auto* weylcmd = app.add_subcommand("weyl", "Toric Weyl arrangement in the file format");
  weylcmd->add_option("--family", family)->required();
  weylcmd->add_option("--rank", rank)->required();
  weylcmd->add_flag("--simple-only", simple_only);
  auto* relations = app.add_subcommand("relations", "Numerical degree-2 relations");
  relations->add_option("file", file)->required();
  relations->add_option("--samples", samples, "0 picks 4 * C(l+n, 2)");
  relations->add_option("--tol", tol)->check(CLI::PositiveNumber);
  relations->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUser;
  }

  const Execution exec = serial ? Execution::serial : Execution::parallel;
  try {
    if (*analyze) return cmd_analyze(file, exec);
    if (*poset) return cmd_poset(file, exec);
    if (*poincare) return cmd_poincare(file, method, ordering, exec);
    if (*unimodular) return cmd_unimodular(file, exec);
    if (*drtype) return cmd_drtype(file, ordering);
    if (*weylcmd) return cmd_weyl(family, rank, simple_only);
    if (*relations) return cmd_relations(file, samples, tol, seed, exec);
  } catch (const DrRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const ArrangementError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUser;
  }
  return kExitUser;
}
