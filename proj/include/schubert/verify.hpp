#pragma once

// Exhaustive identity checks over small symmetric groups. Each suite compares
// two independent computations and records every counterexample it finds.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#include "schubert/compositions.hpp"
#include "schubert/io.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/schubert.hpp"
#include "schubert/transition.hpp"
#include "schubert/words.hpp"

namespace schubert::verify {

struct SuiteReport {
  std::string name;
  std::string unit;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }

  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
    else if (failures.size() == 20) failures.push_back("...");
  }
};

namespace detail {

template <class F>
void guarded(SuiteReport& r, const std::string& label, F&& f) {
  try {
    if (!f()) r.fail(label);
  } catch (const std::exception& e) {
    r.fail(label + ": " + e.what());
  }
  ++r.checked;
}

inline std::string perm(const Permutation& w) { return io::format_permutation(w); }

}  // namespace detail

/// Compatible-sequence and slide constructions of S_w agree on S_n.
inline SuiteReport slides(int n) {
  SuiteReport r{"slides", "permutations", 0, {}};
  for (const auto& w : permutations_of(n)) {
    detail::guarded(r, "w=" + detail::perm(w), [&] { return schubert_via_compatible(w) == schubert_via_slides(w); });
  }
  return r;
}

/// F_a(x_1..x_k) = F_flat(a)(x_1..x_k) whenever a is a zero block, then a
/// nonzero block through position s, and k <= s.
inline SuiteReport slide_truncation(int max_weight, int max_length) {
  SuiteReport r{"slide-truncation", "cases", 0, {}};
  for (int len = 1; len <= max_length; ++len) {
    for (int wt = 0; wt <= max_weight; ++wt) {
      for (const auto& a : weak_compositions(wt, len)) {
        std::size_t first = 1;
        while (first <= a.size() && a.part(first) == 0) ++first;
        if (first > a.size()) continue;
        std::size_t s = first;
        while (s + 1 <= a.size() && a.part(s + 1) != 0) ++s;
        const Polynomial f = slide_polynomial(a);
        for (int k = 1; k <= static_cast<int>(s); ++k) {
          detail::guarded(r, "a=" + io::format_int_list(a.parts()) + " k=" + std::to_string(k),
                          [&] { return f.substitute_zero(k) == fundamental_quasisym(flatten(a), k); });
        }
      }
    }
  }
  return r;
}

/// Monk's rule against the oracle expansion of S_w * (x_1 + ... + x_k).
inline SuiteReport monk(int n) {
  SuiteReport r{"monk", "cases", 0, {}};
  for (const auto& w : permutations_of(n)) {
    Polynomial e;
    for (int k = 1; k < n; ++k) {
      e += Polynomial::variable(k);
      detail::guarded(r, "w=" + detail::perm(w) + " k=" + std::to_string(k),
                      [&] { return schubert_expand(schubert_polynomial(w) * e) == monk_multiply(w, k); });
    }
  }
  return r;
}

/// Truncation at the last descent against x_k -> 0, with multiplicity one,
/// and the alternating chain form normalizing onto the block form.
inline SuiteReport truncate(int n) {
  SuiteReport r{"truncate", "permutations", 0, {}};
  for (const auto& w : permutations_of(n)) {
    if (w.is_identity()) continue;
    const int k = *last_descent(w);
    detail::guarded(r, "w=" + detail::perm(w), [&] {
      const auto e = truncate_last_descent(w);
      if (to_polynomial(e) != schubert_polynomial(w).substitute_zero(k - 1)) return false;
      for (const auto& kv : e.terms()) {
        if (kv.second != 1) return false;
      }
      std::vector<TranspositionChain> block;
      for (const auto& p : truncation_paths(w)) block.push_back(p.chain);
      std::vector<TranspositionChain> normalized;
      for (const auto& c : down_up_chains(w)) {
        const auto nc = normalize_chain(c);
        if (nc.result() != c.result()) return false;
        normalized.push_back(nc);
      }
      auto by_steps = [](const TranspositionChain& x, const TranspositionChain& y) { return x.steps < y.steps; };
      std::sort(block.begin(), block.end(), by_steps);
      std::sort(normalized.begin(), normalized.end(), by_steps);
      return block == normalized;
    });
  }
  return r;
}

/// S_{u x_m v}(x_1..x_k) = S_u S_v(x_1..x_k) for u, v in S_n and m <= k <= m' <= n + 1.
inline SuiteReport cross(int n) {
  SuiteReport r{"cross", "cases", 0, {}};
  const auto group = permutations_of(n);
  for (const auto& u : group) {
    for (const auto& v : group) {
      const int m = static_cast<int>(u.size());
      for (int k = std::max(1, m); k <= n + 1; ++k) {
        for (int nn = k; nn <= n + 1; ++nn) {
          detail::guarded(r, "u=" + detail::perm(u) + " v=" + detail::perm(v) + " k=" + std::to_string(k) +
                                 " n=" + std::to_string(nn),
                          [&] { return cross_identity_check(u, v, k, nn); });
        }
      }
    }
  }
  return r;
}

/// Iterated truncation against the oracle for S_u * s_lambda(x_1..x_k), u in
/// S_n, k < n, |lambda| < n; also positivity and degree additivity.
inline SuiteReport product(int n) {
  SuiteReport r{"product", "cases", 0, {}};
  for (const auto& u : permutations_of(n)) {
    for (int k = 1; k < n; ++k) {
      if (auto d = last_descent(u); d && *d > k) continue;
      for (int size = 0; size < n; ++size) {
        for (const auto& lambda : partitions(size)) {
          if (lambda.size() > static_cast<std::size_t>(k)) continue;
          detail::guarded(r,
                          "u=" + detail::perm(u) + " lambda=" + io::format_int_list(lambda.parts()) +
                              " k=" + std::to_string(k),
                          [&] {
                            const auto got = schubert_times_schur(u, lambda, k);
                            if (!got.all_positive()) return false;
                            for (const auto& kv : got.terms()) {
                              if (length(kv.first) != length(u) + lambda.weight()) return false;
                            }
                            return got == schubert_expand(schubert_polynomial(u) * schur(lambda, k));
                          });
        }
      }
    }
  }
  return r;
}

/// S_{1^m x w}(x_1..x_k) = S_w(x_1..x_k) for m >= k, and S_w(x_1..x_k) = S_{1 x w}(x_1..x_k).
inline SuiteReport stability(int n) {
  SuiteReport r{"stability", "cases", 0, {}};
  for (const auto& w : permutations_of(n)) {
    for (int k = 1; k < n; ++k) {
      const Polynomial s = stanley(w, k);
      detail::guarded(r, "w=" + detail::perm(w) + " k=" + std::to_string(k) + " shift=1",
                      [&] { return s == stanley(shift(w, 1), k); });
      for (int m = k; m <= n; ++m) {
        detail::guarded(r, "w=" + detail::perm(w) + " k=" + std::to_string(k) + " m=" + std::to_string(m),
                        [&] { return schubert_polynomial(shift(w, m)).substitute_zero(k) == s; });
      }
    }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"slides", "slide-truncation", "monk", "truncate",
                                              "cross",  "product",          "stability"};
  return names;
}

/// Runs a named suite at bound n. slide-truncation uses weight and length <= n.
inline SuiteReport run(const std::string& name, int n) {
  if (name == "slides") return slides(n);
  if (name == "slide-truncation") return slide_truncation(n, n);
  if (name == "monk") return monk(n);
  if (name == "truncate") return truncate(n);
  if (name == "cross") return cross(n);
  if (name == "product") return product(n);
  if (name == "stability") return stability(n);
  throw PreconditionError("unknown verify suite '" + name + "'");
}

}  // namespace schubert::verify
