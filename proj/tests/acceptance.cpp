// Acceptance run: worked examples (each under one second) and the exhaustive
// identity suites. Prints one PASS/FAIL line per check and exits nonzero on
// any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"

using namespace schubert;

namespace {

int failures = 0;

void check(const std::string& name, double budget_s, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (detail.empty() && budget_s > 0 && secs >= budget_s) detail = "over time budget";
  const bool ok = detail.empty();
  if (!ok) ++failures;
  std::printf("%s  %-58s %8.3f s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, ok ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

std::string suite(const verify::SuiteReport& r) {
  if (r.ok()) return {};
  return std::to_string(r.failures.size()) + " counterexamples, first " + r.failures.front();
}

Permutation P(std::string_view s) { return io::parse_permutation(s); }

}  // namespace

int main() {
  check("reduced words of 42153 match the table", 1.0, [] {
    const std::set<std::vector<int>> expected{{4, 2, 1, 2, 3}, {4, 1, 2, 1, 3}, {4, 1, 2, 3, 1}, {2, 4, 1, 2, 3},
                                              {2, 1, 4, 2, 3}, {2, 1, 2, 4, 3}, {1, 4, 2, 3, 1}, {1, 2, 4, 3, 1},
                                              {1, 4, 2, 1, 3}, {1, 2, 4, 1, 3}, {1, 2, 1, 4, 3}};
    std::set<std::vector<int>> got;
    const auto words = reduced_words(P("42153"));
    for (const auto& rho : *words) got.insert(rho.letters);
    return words->size() == 11 && got == expected ? "" : std::string("word set differs");
  });

  check("S_42153 by compatible sequences and by slides", 1.0, [] {
    const auto expected = oracle::parse("x1^3 x2 x4 + x1^3 x2 x3 + x1^3 x2^2");
    if (schubert_via_compatible(P("42153")) != expected) return std::string("compatible construction differs");
    if (schubert_via_slides(P("42153")) != expected) return std::string("slide construction differs");
    return std::string();
  });

  check("S_153264 monomials and slide expansion", 1.0, [] {
    const auto expected = oracle::parse(
        "x1^3 x2^2 + 2 x1^3 x2 x3 + x1^3 x2 x4 + x1^3 x2 x5 + x1^3 x3^2 + x1^3 x3 x4 + x1^3 x3 x5 + x1^2 x2^3"
        "+ 2 x1^2 x2^2 x3 + x1^2 x2^2 x4 + x1^2 x2^2 x5 + x1^2 x2 x3^2 + x1^2 x2 x3 x4 + x1^2 x2 x3 x5"
        "+ 2 x1 x2^3 x3 + x1 x2^3 x4 + x1 x2^3 x5 + x1 x2^2 x3^2 + x1 x2^2 x3 x4 + x1 x2^2 x3 x5"
        "+ x2^3 x3^2 + x2^3 x3 x4 + x2^3 x3 x5");
    const auto p = schubert_polynomial(P("153264"));
    if (p.size() != 23 || p.coefficient_sum() != 26 || p != expected) return std::string("monomial expansion differs");
    const std::map<WeakComposition, Coeff> slides{
        {WeakComposition({0, 3, 1, 0, 1}), 1}, {WeakComposition({2, 2, 0, 0, 1}), 1},
        {WeakComposition({1, 3, 0, 0, 1}), 1}, {WeakComposition({0, 3, 2}), 1},
        {WeakComposition({2, 2, 1}), 1},       {WeakComposition({1, 3, 1}), 1},
        {WeakComposition({2, 3}), 1}};
    return slide_expand(p) == slides ? "" : std::string("slide expansion differs");
  });

  check("slide polynomial F_(0,3,1,0,1)", 1.0, [] {
    const auto expected = oracle::parse(
        "x2^3 x3 x5 + x2^3 x3 x4 + x1 x2^2 x3 x5 + x1 x2^2 x3 x4 + x1^2 x2 x3 x5"
        "+ x1^2 x2 x3 x4 + x1^3 x3 x5 + x1^3 x3 x4 + x1^3 x2 x5 + x1^3 x2 x4 + x1^3 x2 x3");
    return slide_polynomial(WeakComposition({0, 3, 1, 0, 1})) == expected ? "" : std::string("monomials differ");
  });

  check("Stanley fundamental multiset of 42153", 1.0, [] {
    const std::map<StrongComposition, Coeff> expected{
        {StrongComposition({3, 1, 1}), 1}, {StrongComposition({2, 2, 1}), 2}, {StrongComposition({1, 3, 1}), 2},
        {StrongComposition({3, 2}), 1},    {StrongComposition({1, 2, 2}), 2}, {StrongComposition({1, 1, 3}), 1},
        {StrongComposition({2, 1, 2}), 1}, {StrongComposition({2, 3}), 1}};
    return stanley_fundamental_expansion(P("42153")) == expected ? "" : std::string("multiset differs");
  });

  check("v((5,4,4,1), 6)", 1.0, [] {
    const auto v = grassmannian(Partition({5, 4, 4, 1}), 6);
    return io::format_permutation(v) == "1,2,4,8,9,11,3,5,6,7,10" ? "" : "got " + io::format_permutation(v);
  });

  check("truncation of 51738246 with its a-sequences", 1.0, [] {
    if (truncate_last_descent(P("51738246")) != SchubertExpansion{{P("5276134"), 1}, {P("6274135"), 1}}) {
      return std::string("terms differ");
    }
    std::set<std::vector<int>> as;
    for (const auto& p : truncation_paths(P("51738246"))) as.insert(p.a);
    return as == std::set<std::vector<int>>{{2, 4, 4}, {2, 4, 1}} ? "" : std::string("a-sequences differ");
  });

  check("S_42153 * s_(2,1)(x1..x5)", 1.0, [] {
    const SchubertExpansion expected{
        {P("4235716"), 1}, {P("4315726"), 1}, {P("4216735"), 1}, {P("4217536"), 1}, {P("5217346"), 1}};
    return schubert_times_schur(P("42153"), Partition({2, 1}), 5) == expected ? "" : std::string("terms differ");
  });

  check("constructions agree on S_5 and 100 sampled from S_6", 0, [] {
    auto r = verify::slides(5);
    std::mt19937 rng(20240611);
    auto s6 = permutations_of(6);
    std::shuffle(s6.begin(), s6.end(), rng);
    for (std::size_t i = 0; i < 100; ++i) {
      if (schubert_via_compatible(s6[i]) != schubert_via_slides(s6[i])) r.fail("w=" + io::format_permutation(s6[i]));
      ++r.checked;
    }
    return r.checked == 220 ? suite(r) : std::string("wrong case count");
  });

  check("slide truncation, weight <= 5, length <= 5", 0, [] { return suite(verify::slide_truncation(5, 5)); });
  check("Monk's rule against the oracle on S_4", 0, [] { return suite(verify::monk(4)); });
  check("truncation against substitution on S_5", 0, [] { return suite(verify::truncate(5)); });
  check("cross identity on S_3 x S_3, k, n <= 4", 0, [] { return suite(verify::cross(3)); });
  check("Schubert times Schur against the oracle on S_4", 0, [] { return suite(verify::product(4)); });
  check("stability on S_4", 0, [] { return suite(verify::stability(4)); });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "FAILURES");
  return failures == 0 ? 0 : 1;
}
