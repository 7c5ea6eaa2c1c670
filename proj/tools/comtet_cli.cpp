// Command-line front end: enumeration, distribution matrices, generating
// function expansion, bijection application and the named verification
// suites. Exit codes: 0 ok, 1 verification failure, 2 usage error,
// 3 precondition violation.

#include <algorithm>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "comtet/bijections.hpp"
#include "comtet/engine.hpp"
#include "comtet/genfun.hpp"
#include "comtet/gentree.hpp"
#include "comtet/json_io.hpp"
#include "comtet/verify.hpp"
#include "comtet/words.hpp"

namespace {

using namespace comtet;

int cmd_count(const std::string& patterns, int n, int threads) {
  std::cout << count_avoiders(n, PatternSet::parse(patterns), threads)
            << "\n";
  return 0;
}

int cmd_enumerate(const std::string& patterns, int n,
                  const std::string& format) {
  const PatternSet ps = PatternSet::parse(patterns);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for_each_avoider(n, ps,
                     [&](const Permutation& pi) { j.push_back(pi.str()); });
    std::cout << j.dump() << "\n";
  } else {
    for_each_avoider(n, ps,
                     [](const Permutation& pi) { std::cout << pi.str() << "\n"; });
  }
  return 0;
}

int cmd_matrix(const std::string& patterns, int n, const std::string& format,
               int threads) {
  const PatternSet ps = PatternSet::parse(patterns);
  const DistMatrix m = distribution_matrix(n, ps, threads);
  if (format == "json") {
    std::cout << matrix_to_json(m, ps).dump() << "\n";
  } else {
    for (const auto& row : m.rows) {
      for (size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? " " : "") << row[j];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_gf(const std::string& patterns, int order, const std::string& format) {
  const Series s = closed_form(PatternSet::parse(patterns), order);
  if (format == "json")
    std::cout << series_to_json(s).dump() << "\n";
  else
    std::cout << s.str() << "\n";
  return 0;
}

int cmd_bijection(const std::string& name, const std::string& input) {
  if (name == "psi" || name == "psi_inv") {
    const AdmissibleWord w = AdmissibleWord::parse(input);
    std::cout << (name == "psi" ? psi(w) : psi_inv(w)).str() << "\n";
    return 0;
  }
  if (name == "alpha" || name == "beta") {
    const Permutation pi = Permutation::parse(input);
    std::cout << (name == "alpha" ? alpha(pi) : beta(pi)).str() << "\n";
    return 0;
  }
  if (name == "alpha_inv" || name == "beta_inv") {
    const AdmissibleWord w = AdmissibleWord::parse(input);
    std::cout << (name == "alpha_inv" ? alpha_inv(w) : beta_inv(w)).str()
              << "\n";
    return 0;
  }
  const Permutation pi = Permutation::parse(input);
  Permutation out;
  if (name == "xi")
    out = xi(pi);
  else if (name == "xi_inv")
    out = xi_inv(pi);
  else if (name == "phi")
    out = phi(pi);
  else if (name == "phi_inv")
    out = phi_inv(pi);
  else if (name == "theta")
    out = theta(pi);
  else if (name == "theta_inv")
    out = theta_inv(pi);
  else if (name == "witness321")
    out = symmetry_witness_321(pi);
  else if (name == "witness312")
    out = symmetry_witness_312(pi);
  else
    throw CLI::ValidationError("--name", "unknown bijection: " + name);
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_tree(const std::string& patterns, int depth) {
  TreeNode root;
  if (patterns == "omega")
    root = build_abstract_tree(depth);
  else
    root = build_ava_tree(PatternSet::parse(patterns), depth);
  for (const auto& line : dump_tree_levels(root, depth)) std::cout << line << "\n";
  return 0;
}

int cmd_verify(const std::string& check, int nmax, int order, int threads,
               bool quiet) {
  CheckOptions opts;
  opts.nmax = nmax;
  opts.order = order;
  opts.threads = threads;
  std::vector<std::string> names;
  if (check == "all") {
    names = check_names();
  } else {
    const auto& known = check_names();
    if (std::find(known.begin(), known.end(), check) == known.end()) {
      std::string list;
      for (const auto& name : known) list += " " + name;
      throw invalid_input("unknown check: " + check + "; available:" + list);
    }
    names.push_back(check);
  }
  bool all_ok = true;
  for (const auto& name : names) {
    const VerificationReport rep = run_check(name, opts);
    std::cout << format_report(rep, !quiet) << "\n";
    all_ok = all_ok && rep.passed();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics engine for pattern-avoiding permutation classes"};
  app.require_subcommand(1);

  std::string patterns, format = "text", check, name, input;
  // nmax/order 0 lets each verification pick its documented default.
  int n = 0, nmax = 0, order = 0, depth = 3, threads = 1;

  auto* count = app.add_subcommand("count", "size of S_n(P)");
  count->add_option("--patterns", patterns)->required();
  count->add_option("--n", n)->required();
  count->add_option("--threads", threads);

  auto* enumerate = app.add_subcommand("enumerate", "list S_n(P)");
  enumerate->add_option("--patterns", patterns)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* matrix =
      app.add_subcommand("matrix", "(iar, comp) distribution matrix");
  matrix->add_option("--patterns", patterns)->required();
  matrix->add_option("--n", n)->required();
  matrix->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  matrix->add_option("--threads", threads);

  auto* gf = app.add_subcommand(
      "gf", "closed-form (des, iar, comp) generating function");
  gf->add_option("--patterns", patterns)->required();
  gf->add_option("--order", order)->required();
  gf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* bijection = app.add_subcommand("bijection", "apply a bijection");
  bijection->add_option("--name", name)->required();
  bijection->add_option("--input", input)->required();

  auto* tree = app.add_subcommand("tree", "generating tree dump");
  tree->add_option("--patterns", patterns)->required();
  tree->add_option("--depth", depth)->required();

  auto* verify = app.add_subcommand("verify", "run a named verification");
  verify->add_option("--check", check)->required();
  verify->add_option("--nmax", nmax);
  verify->add_option("--order", order);
  verify->add_option("--threads", threads);
  bool quiet = false;
  verify->add_flag("--quiet", quiet);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(patterns, n, threads);
    if (enumerate->parsed()) return cmd_enumerate(patterns, n, format);
    if (matrix->parsed()) return cmd_matrix(patterns, n, format, threads);
    if (gf->parsed()) return cmd_gf(patterns, order, format);
    if (bijection->parsed()) return cmd_bijection(name, input);
    if (tree->parsed()) return cmd_tree(patterns, depth);
    if (verify->parsed()) return cmd_verify(check, nmax, order, threads, quiet);
  } catch (const precondition_violation& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const comtet::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
