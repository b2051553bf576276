// Command-line front end: group-spec ingestion, batch verification with
// JSON/Markdown report emission, and direct access to the individual
// computations (closures, fixed loci, holomorphic fixed-point sums,
// eigensections, intersection numbers, Hodge and surface invariants).
//
// Exit codes: 0 = success / all checks passed, 1 = at least one check
// failed, 2 = usage, parse, or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fourlines/chow.hpp"
#include "fourlines/geometry.hpp"
#include "fourlines/group_id.hpp"
#include "fourlines/group_spec.hpp"
#include "fourlines/multihomog.hpp"
#include "fourlines/report.hpp"

using namespace fourlines;

namespace {

std::vector<ProductAuto> load_generators(const std::string& spec_path,
                                         const std::string& builtin) {
  if (!spec_path.empty() && !builtin.empty())
    throw CLI::ValidationError("pass exactly one of --spec and --builtin");
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw std::runtime_error("cannot open spec file: " + spec_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_group_spec(ss.str()).generators;
  }
  if (builtin.empty())
    throw CLI::ValidationError("pass exactly one of --spec and --builtin");
  return builtin_group(builtin);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

MultiDegree to_degree(const std::vector<int>& d) {
  if (d.size() != 4) throw CLI::ValidationError("--degree needs four integers");
  return MultiDegree{d[0], d[1], d[2], d[3]};
}

int run_verify(const std::vector<std::string>& only, const std::string& json_path,
               const std::string& md_path) {
  VerificationReport r = run_verification_suite(only);
  for (const auto& c : r.checks) {
    std::cout << c.id << ": " << c.status;
    if (c.status != "pass" && c.details.contains("counterexample"))
      std::cout << "  [" << c.details["counterexample"].get<std::string>() << "]";
    if (c.status == "error" && c.details.contains("error"))
      std::cout << "  [" << c.details["error"].get<std::string>() << "]";
    std::cout << "\n";
  }
  std::cout << r.total() << " checks: " << r.passed << " passed, " << r.failed
            << " failed, " << r.errors << " errors\n";
  if (!json_path.empty()) write_file(json_path, report_json(r));
  if (!md_path.empty()) write_file(md_path, report_markdown(r));
  return r.all_passed() ? 0 : 1;
}

void print_group_closure(const std::vector<ProductAuto>& gens) {
  FiniteSubgroup G = closure(gens);
  std::cout << "order: " << G.order() << "\n";
  std::cout << "element orders:";
  for (const auto& [ord, count] : G.order_histogram())
    std::cout << " " << ord << "^" << count;
  std::cout << "\n";
  for (int k = 0; k < G.order(); ++k)
    std::cout << "  [" << k << "] " << G.elements[k].str() << "\n";
}

void print_group_identify(const std::vector<ProductAuto>& gens) {
  FiniteSubgroup G = closure(gens);
  std::cout << "order: " << G.order() << "\n";
  std::cout << "type: " << identify_isomorphism_type(G.multiplication_table()) << "\n";
}

void print_group_fixed_points(const std::vector<ProductAuto>& gens) {
  FiniteSubgroup G = closure(gens);
  auto locus = group_fixed_locus(G);
  int isolated = 0;
  for (const auto& e : locus)
    if (!e.component.positive_dim) ++isolated;
  std::cout << "fixed locus entries: " << locus.size() << " (" << isolated
            << " isolated)\n";
  for (const auto& e : locus) {
    if (e.component.positive_dim) {
      std::cout << "  dim " << e.component.dimension << ": " << e.component.description
                << "\n";
    } else {
      std::cout << "  " << point_str(e.component.point) << "  stabilized by "
                << e.stabilizer_indices.size() << " nontrivial element(s)\n";
    }
  }
}

void print_lefschetz(const std::string& builtin, int element) {
  FiniteSubgroup G = closure(builtin_group(builtin));
  auto one_line = [&](int k) {
    const ProductAuto& g = G.elements[k];
    auto terms = lefschetz_terms(g);
    CycloNum sum = CycloNum::zero();
    for (const auto& t : terms) sum += t;
    std::cout << "element [" << k << "] " << g.str() << "\n";
    std::cout << "  " << terms.size() << " fixed points, terms:";
    for (const auto& t : terms) std::cout << " " << t.str();
    std::cout << "\n  sum: " << sum.str() << "\n";
  };
  if (element >= 0) {
    if (element <= 0 || element >= G.order())
      throw CLI::ValidationError("--element must index a nontrivial group element");
    one_line(element);
    return;
  }
  for (int k = 1; k < G.order(); ++k) one_line(k);
}

void print_eigenspace(const std::string& builtin, const std::vector<std::string>& eigen,
                      const MultiDegree& deg) {
  auto gens = builtin_group(builtin);
  std::vector<LiftedAuto> lifts;
  for (const auto& g : gens) lifts.push_back(LiftedAuto::canonical_lift(g));
  std::vector<CycloNum> values;
  if (eigen.empty()) {
    values.assign(lifts.size(), CycloNum::one());
  } else {
    if (eigen.size() != lifts.size())
      throw CLI::ValidationError("--eigenvalues needs one value per generator (got " +
                                 std::to_string(eigen.size()) + ", need " +
                                 std::to_string(lifts.size()) + ")");
    for (const auto& s : eigen) values.push_back(CycloNum::parse(s));
  }
  ExactMatrix basis = eigensection_space(lifts, values, deg);
  std::cout << "dimension: " << basis.cols() << "\n";
  for (int c = 0; c < basis.cols(); ++c)
    std::cout << "  " << MultiPoly::from_coefficient_column(deg, basis, c).str() << "\n";
}

void print_trace_table(const std::string& builtin, const MultiDegree& deg) {
  FiniteSubgroup G = closure(builtin_group(builtin));
  for (int k = 0; k < G.order(); ++k) {
    CycloNum tr = action_trace(LiftedAuto::canonical_lift(G.elements[k]), deg);
    std::cout << "[" << k << "] " << tr.str() << "\n";
  }
}

void print_obstruction(const std::string& builtin, int generator) {
  auto gens = builtin_group(builtin);
  if (generator < 0 || generator >= int(gens.size()))
    throw CLI::ValidationError("--generator out of range");
  ObstructionResult r =
      full_support_eigenvector_exists(LiftedAuto::canonical_lift(gens[generator]));
  std::cout << "full-support eigenvector exists: " << (r.exists ? "yes" : "no") << "\n";
  if (r.witness) {
    auto fmt = [](const ExponentTuple& b) {
      std::string s;
      for (int k = 0; k < 4; ++k)
        s += (k ? "," : "(") + std::to_string(b[k]);
      return s + ")";
    };
    std::cout << "witness exponent pair: " << fmt(r.witness->first) << " and "
              << fmt(r.witness->second) << " (same eigenvalue, so no eigenvector has "
              << "full support)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for product automorphism groups, their "
               "invariant sections, and quotient invariants"};
  app.require_subcommand(1);
  int exit_code = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::vector<std::string> only;
  std::string json_path, md_path;
  verify->add_option("--only", only, "Comma-separated check ids (default: all)")
      ->delimiter(',');
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--markdown", md_path, "Write the Markdown report here");
  verify->callback([&] { exit_code = run_verify(only, json_path, md_path); });

  // group
  auto* group = app.add_subcommand("group", "Group closure, identification, fixed loci");
  group->require_subcommand(1);
  std::string spec_path, builtin;
  for (const char* action : {"closure", "identify", "fixed-points"}) {
    auto* sub = group->add_subcommand(action);
    sub->add_option("--spec", spec_path, "Generator set as a JSON spec file");
    sub->add_option("--builtin", builtin, "Built-in generator set name");
    std::string name = action;
    sub->callback([&, name] {
      auto gens = load_generators(spec_path, builtin);
      if (name == "closure") print_group_closure(gens);
      else if (name == "identify") print_group_identify(gens);
      else print_group_fixed_points(gens);
    });
  }

  // sections
  auto* sections = app.add_subcommand("sections", "Eigensections of lifted actions");
  sections->require_subcommand(1);
  std::string sec_builtin = "z4sz4";
  std::vector<std::string> eigen;
  std::vector<int> degree{1, 1, 1, 1};
  int generator = 0;
  auto* eig = sections->add_subcommand("eigenspace", "Simultaneous eigensection basis");
  eig->add_option("--builtin", sec_builtin, "Built-in generator set (default z4sz4)");
  eig->add_option("--eigenvalues", eigen, "One eigenvalue per generator (default all 1)")
      ->delimiter(',');
  eig->add_option("--degree", degree, "Multidegree, four integers (default 1,1,1,1)")
      ->delimiter(',');
  eig->callback([&] { print_eigenspace(sec_builtin, eigen, to_degree(degree)); });
  auto* tt = sections->add_subcommand("trace-table", "Trace of every lifted element");
  tt->add_option("--builtin", sec_builtin, "Built-in generator set (default z4sz4)");
  tt->add_option("--degree", degree, "Multidegree, four integers (default 1,1,1,1)")
      ->delimiter(',');
  tt->callback([&] { print_trace_table(sec_builtin, to_degree(degree)); });
  auto* obs = sections->add_subcommand(
      "obstruction", "Full-support eigenvector decision for a canonical lift");
  obs->add_option("--builtin", sec_builtin, "Built-in generator set (default z4sz4)");
  obs->add_option("--generator", generator, "Generator index (default 0)");
  obs->callback([&] { print_obstruction(sec_builtin, generator); });

  // lefschetz
  auto* lef = app.add_subcommand("lefschetz", "Holomorphic fixed-point sums");
  std::string lef_builtin;
  int element = -1;
  lef->add_option("--builtin", lef_builtin, "Built-in generator set")->required();
  lef->add_option("--element", element, "Single element index (default: all nontrivial)");
  lef->callback([&] { print_lefschetz(lef_builtin, element); });

  // chow
  auto* chow = app.add_subcommand("chow", "Intersection numbers and Euler number");
  chow->require_subcommand(1);
  auto* euler = chow->add_subcommand("euler", "Euler number of a smooth member of |2H|");
  euler->callback([&] {
    std::cout << "c3 = " << c3_anticanonical_hypersurface().str() << "\n";
    std::cout << "euler number: " << euler_anticanonical() << "\n";
  });
  int scale = 1;
  auto* degree_cmd = chow->add_subcommand("degree", "deg((m H) . H^3) on the product");
  degree_cmd->add_option("--scale", scale, "Multiplier m (default 1)");
  degree_cmd->callback([&] {
    ChowClass h = ChowClass::big_h();
    std::cout << "deg: " << chow_degree(h.scaled(scale) * h * h * h).get_str() << "\n";
  });

  // hodge
  auto* hodge = app.add_subcommand("hodge", "Hodge numbers of the free quotient");
  std::string hodge_builtin;
  hodge->add_option("--builtin", hodge_builtin, "Built-in generator set")->required();
  hodge->callback([&] {
    HodgeNumbers h = quotient_hodge(closure(builtin_group(hodge_builtin)));
    std::cout << "h11: " << h.h11 << "\nh12: " << h.h12 << "\nheight: " << h.height()
              << "\neuler: " << h.euler() << "\n";
  });

  // surface
  auto* surface = app.add_subcommand("surface", "Quotient surface invariants");
  int order = 16;
  surface->add_option("--order", order, "Group order n (default 16)")->required();
  surface->callback([&] {
    SurfaceInvariants s = surface_invariants(order);
    std::cout << "K^2: " << s.k2 << "\nchi(O): " << s.chi
              << "\np_g of cover: " << s.pg_cover << "\nmoduli dim: " << s.moduli_dim
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
