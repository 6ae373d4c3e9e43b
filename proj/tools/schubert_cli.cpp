// Command-line front end.
//
// Exit codes: 0 success, 1 verify found a counterexample, 2 malformed input,
// 3 precondition violation, 4 term cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schubert/all.hpp"

namespace {

using namespace schubert;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kCounterexample = 1, kParse = 2, kPrecondition = 3, kTermCap = 4 };

struct Options {
  std::string format = "plain";
  bool json() const { return format == "json"; }
};

void print_polynomial(const Polynomial& p, const Options& opt) {
  if (opt.json()) {
    std::cout << io::polynomial_to_json(p).dump() << "\n";
  } else {
    std::cout << io::format_polynomial(p) << "\n";
  }
}

template <class Key>
void print_basis_counts(const std::map<Key, Coeff>& m, const char* symbol, const Options& opt) {
  if (opt.json()) {
    json terms = json::array();
    for (const auto& [a, c] : m) terms.push_back({{"composition", a.parts()}, {"coeff", c}});
    std::cout << json{{"terms", terms}}.dump() << "\n";
    return;
  }
  if (m.empty()) std::cout << "0\n";
  for (const auto& [a, c] : m) std::cout << symbol << "(" << io::format_int_list(a.parts()) << "): " << c << "\n";
}

void print_expansion(const SchubertExpansion& e, const Options& opt) {
  if (opt.json()) {
    std::cout << io::expansion_to_json(e).dump() << "\n";
  } else {
    std::cout << io::format_expansion(e);
  }
}

int cmd_schubert(const std::string& perm, const std::string& method, bool slide_terms, const Options& opt) {
  const auto w = io::parse_permutation(perm);
  if (slide_terms) {
    std::map<WeakComposition, Coeff> m;
    const auto words = reduced_words(w);
    for (const auto& rho : *words) {
      if (auto des = weak_descent_composition(rho)) ++m[*des];
    }
    print_basis_counts(m, "F", opt);
    return kOk;
  }
  print_polynomial(method == "compatible" ? schubert_via_compatible(w) : schubert_via_slides(w), opt);
  return kOk;
}

int cmd_words(const std::string& perm, const Options& opt) {
  const auto w = io::parse_permutation(perm);
  const auto words = reduced_words(w);
  json out = json::array();
  for (const auto& rho : *words) {
    const auto des = weak_descent_composition(rho);
    const std::string weak = des ? "(" + io::format_int_list(des->parts()) + ")" : "virtual";
    const std::string strong = "(" + io::format_int_list(strong_descent_composition(rho).parts()) + ")";
    if (opt.json()) {
      out.push_back({{"word", rho.letters},
                     {"des", des ? json(des->parts()) : json(nullptr)},
                     {"Des", strong_descent_composition(rho).parts()}});
    } else {
      std::cout << io::format_word(rho) << "  des=" << weak << "  Des=" << strong << "\n";
    }
  }
  if (opt.json()) std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_multiply(const std::string& u_text, const std::string& lambda_text, int k, bool chains, const Options& opt) {
  const auto u = io::parse_permutation(u_text);
  const auto lambda = io::parse_partition(lambda_text);
  const auto e = schubert_times_schur(u, lambda, k);
  if (!chains) {
    print_expansion(e, opt);
    return kOk;
  }
  const auto paths = schubert_times_schur_paths(u, lambda, k);
  if (opt.json()) {
    json terms = json::array();
    for (const auto& [w, c] : e.terms()) {
      json list = json::array();
      for (const auto& p : paths) {
        if (p.result != w) continue;
        list.push_back({{"from_cross", io::format_chain(p.from_cross.transpositions())},
                        {"from_u", p.from_u ? json(io::format_chain(*p.from_u)) : json(nullptr)}});
      }
      terms.push_back({{"perm", io::format_permutation(w)}, {"coeff", c}, {"chains", list}});
    }
    std::cout << json{{"terms", terms}}.dump() << "\n";
    return kOk;
  }
  if (e.empty()) std::cout << "0\n";
  for (const auto& [w, c] : e.terms()) {
    std::cout << io::format_permutation(w) << ": " << c << "\n";
    for (const auto& p : paths) {
      if (p.result != w) continue;
      std::cout << "  ";
      if (p.from_u) std::cout << "u*" << io::format_chain(*p.from_u) << " = ";
      std::cout << "w*" << io::format_chain(p.from_cross.transpositions()) << "\n";
    }
  }
  return kOk;
}

int cmd_truncate(const std::string& perm, bool chains, const Options& opt) {
  const auto w = io::parse_permutation(perm);
  const auto e = truncate_last_descent(w);
  if (!chains) {
    print_expansion(e, opt);
    return kOk;
  }
  const auto paths = truncation_paths(w);
  if (opt.json()) {
    json terms = json::array();
    for (const auto& p : paths) {
      terms.push_back({{"perm", io::format_permutation(p.result)},
                       {"coeff", 1},
                       {"a", p.a},
                       {"chain", io::format_chain(p.chain.transpositions())}});
    }
    std::cout << json{{"terms", terms}}.dump() << "\n";
    return kOk;
  }
  if (paths.empty()) std::cout << "0\n";
  for (const auto& p : paths) {
    std::cout << io::format_permutation(p.result) << ": 1  a=(" << io::format_int_list(p.a)
              << ")  w*" << io::format_chain(p.chain.transpositions()) << "\n";
  }
  return kOk;
}

int cmd_normalize(const std::string& chain_text, const std::string& base_text, const Options& opt) {
  const auto steps = io::parse_chain(chain_text);
  TranspositionChain c;
  if (!base_text.empty()) c.base = io::parse_permutation(base_text);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    c.steps.push_back({steps[i], i % 2 == 0 ? Direction::down : Direction::up});
  }
  const auto nc = normalize_chain(c);
  const std::string text = io::format_chain(nc.transpositions());
  if (opt.json()) {
    json doc{{"chain", text}};
    if (!base_text.empty()) doc["result"] = io::format_permutation(nc.result());
    std::cout << doc.dump() << "\n";
    return kOk;
  }
  std::cout << text << "\n";
  if (!base_text.empty()) std::cout << "result: " << io::format_permutation(nc.result()) << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, int nmax, const Options& opt) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(suite);
  }
  std::vector<verify::SuiteReport> reports;
  for (const auto& name : names) reports.push_back(verify::run(name, nmax));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  if (opt.json()) {
    json list = json::array();
    for (const auto& r : reports) {
      list.push_back({{"name", r.name}, {"ok", r.ok()}, {"checked", r.checked}, {"unit", r.unit}, {"failures", r.failures}});
    }
    std::cout << json{{"ok", ok}, {"nmax", nmax}, {"suites", list}}.dump() << "\n";
    return ok ? kOk : kCounterexample;
  }
  auto line = [](const verify::SuiteReport& r) {
    return std::string(r.ok() ? "OK" : "FAIL") + " (" + std::to_string(r.checked) + " " + r.unit + ")";
  };
  if (reports.size() == 1) {
    std::cout << line(reports.front()) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.name << ": " << line(r) << "\n";
    std::cout << (ok ? "OK" : "FAIL") << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& f : r.failures) std::cout << "counterexample [" << r.name << "] " << f << "\n";
  }
  return ok ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("SCHUBERT_CACHE_SIZE")) {
    try {
      limits().cache_entries = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: SCHUBERT_CACHE_SIZE must be a nonnegative integer\n";
      return kParse;
    }
  }

  CLI::App app{"Schubert polynomials, slide expansions and Schubert-times-Schur products"};
  app.require_subcommand(1);
  Options opt;
  std::size_t max_terms = limits().max_terms;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--timeout-terms", max_terms, "Cap on the size of any single enumeration");

  std::string perm, perm2, lambda, comp, method = "slides", chain, base, suite = "all";
  int k = 1;
  int nmax = 4;
  bool chains = false;
  bool slide_terms = false;
  bool fundamental = false;

  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  schubert_cmd->add_option("w", perm, "Permutation")->required();
  schubert_cmd->add_option("--method", method, "Construction")->check(CLI::IsMember({"slides", "compatible"}));
  schubert_cmd->add_flag("--slide-expansion", slide_terms, "List the slide polynomials instead of monomials");

  auto* words_cmd = app.add_subcommand("words", "Reduced words with their descent compositions");
  words_cmd->add_option("w", perm, "Permutation")->required();

  auto* stanley_cmd = app.add_subcommand("stanley", "Stanley symmetric polynomial in k variables");
  stanley_cmd->add_option("w", perm, "Permutation")->required();
  stanley_cmd->add_option("k", k, "Number of variables")->required();
  stanley_cmd->add_flag("--fundamental", fundamental, "List the fundamental quasisymmetric expansion");

  auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial in k variables");
  schur_cmd->add_option("lambda", lambda, "Partition, comma separated")->required();
  schur_cmd->add_option("k", k, "Number of variables")->required();

  auto* slide_cmd = app.add_subcommand("slide", "Fundamental slide polynomial");
  slide_cmd->add_option("a", comp, "Weak composition, comma separated")->required();

  auto* fqs_cmd = app.add_subcommand("fqs", "Fundamental quasisymmetric polynomial in k variables");
  fqs_cmd->add_option("alpha", comp, "Strong composition, comma separated")->required();
  fqs_cmd->add_option("k", k, "Number of variables")->required();

  auto* multiply_cmd = app.add_subcommand("multiply", "Schubert expansion of S_u * s_lambda(x_1..x_k)");
  multiply_cmd->add_option("u", perm, "Permutation")->required();
  multiply_cmd->add_option("lambda", lambda, "Partition, comma separated")->required();
  multiply_cmd->add_option("k", k, "Number of variables")->required();
  multiply_cmd->add_flag("--chains", chains, "List the transposition chains behind each term");

  auto* truncate_cmd = app.add_subcommand("truncate", "S_w with its last-descent variable set to zero");
  truncate_cmd->add_option("w", perm, "Permutation")->required();
  truncate_cmd->add_flag("--chains", chains, "List the a-sequences and chains");

  auto* monk_cmd = app.add_subcommand("monk", "Schubert expansion of S_w * (x_1 + ... + x_k)");
  monk_cmd->add_option("w", perm, "Permutation")->required();
  monk_cmd->add_option("k", k, "Number of variables")->required();

  auto* coeff_cmd = app.add_subcommand("coeff", "Coefficient of S_w in S_u * s_lambda(x_1..x_k)");
  coeff_cmd->add_option("u", perm, "Permutation")->required();
  coeff_cmd->add_option("lambda", lambda, "Partition, comma separated")->required();
  coeff_cmd->add_option("k", k, "Number of variables")->required();
  coeff_cmd->add_option("w", perm2, "Permutation")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a down-up chain (k,b1)(a1,k)... into block form");
  normalize_cmd->add_option("chain", chain, "Chain such as (5,8)(4,5)(5,6)(2,5)")->required();
  normalize_cmd->add_option("--base", base, "Base permutation; also report the resulting permutation");

  auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive identity checks");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--nmax", nmax, "Symmetric group bound")->check(CLI::Range(1, 7));

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  limits().max_terms = max_terms;

  try {
    if (*schubert_cmd) return cmd_schubert(perm, method, slide_terms, opt);
    if (*words_cmd) return cmd_words(perm, opt);
    if (*stanley_cmd) {
      const auto w = io::parse_permutation(perm);
      if (fundamental) {
        print_basis_counts(stanley_fundamental_expansion(w), "F", opt);
      } else {
        print_polynomial(stanley(w, k), opt);
      }
      return kOk;
    }
    if (*schur_cmd) {
      print_polynomial(schur(io::parse_partition(lambda), k), opt);
      return kOk;
    }
    if (*slide_cmd) {
      print_polynomial(slide_polynomial(io::parse_weak_composition(comp)), opt);
      return kOk;
    }
    if (*fqs_cmd) {
      print_polynomial(fundamental_quasisym(io::parse_strong_composition(comp), k), opt);
      return kOk;
    }
    if (*multiply_cmd) return cmd_multiply(perm, lambda, k, chains, opt);
    if (*truncate_cmd) return cmd_truncate(perm, chains, opt);
    if (*monk_cmd) {
      print_expansion(monk_multiply(io::parse_permutation(perm), k), opt);
      return kOk;
    }
    if (*coeff_cmd) {
      const Coeff c = lr_coefficient(io::parse_permutation(perm), io::parse_partition(lambda), k,
                                     io::parse_permutation(perm2));
      if (opt.json()) {
        std::cout << json{{"coeff", c}}.dump() << "\n";
      } else {
        std::cout << c << "\n";
      }
      return kOk;
    }
    if (*normalize_cmd) return cmd_normalize(chain, base, opt);
    if (*verify_cmd) return cmd_verify(suite, nmax, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const TermLimitExceeded& e) {
    std::cout.flush();
    std::cerr << "partial result: " << e.what() << "; output above, if any, is incomplete\n";
    return kTermCap;
  }
  return kOk;
}
