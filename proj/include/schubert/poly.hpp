#pragma once

// Sparse exact-integer polynomials in x_1, x_2, ..., fundamental slide
// polynomials, fundamental quasisymmetric polynomials and slide-basis
// expansion.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"

namespace schubert {

/// Terms are keyed by exponent vectors with trailing zeros stripped, so the
/// ambient number of variables never matters. No zero coefficient is stored.
/// std::map order on stripped vectors is the lexicographic order of the
/// zero-padded vectors.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Coeff>;

  Polynomial() = default;

  static Polynomial constant(Coeff c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
  }

  static Polynomial monomial(Exponents e, Coeff c = 1) {
    Polynomial p;
    p.add_term(std::move(e), c);
    return p;
  }

  /// x_i, 1-based.
  static Polynomial variable(int i) {
    Exponents e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return monomial(std::move(e));
  }

  void add_term(Exponents e, Coeff c) {
    if (c == 0) return;
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto [it, fresh] = terms_.try_emplace(std::move(e), c);
    if (!fresh) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coefficient(Exponents e) const {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  Coeff coefficient_sum() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  /// Largest variable index occurring, or 0 for constants.
  int max_variable() const noexcept {
    std::size_t n = 0;
    for (const auto& kv : terms_) n = std::max(n, kv.first.size());
    return static_cast<int>(n);
  }

  /// Total degree if every term has the same degree; nullopt for zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& kv : terms_) {
      int s = 0;
      for (int x : kv.first) s += x;
      if (d && *d != s) return std::nullopt;
      d = s;
    }
    return d;
  }

  /// Sets x_i = 0 for every i > k.
  Polynomial substitute_zero(int k) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e.size() <= static_cast<std::size_t>(std::max(k, 0))) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Exchanges x_i and x_j.
  Polynomial swap_variables(int i, int j) const {
    Polynomial out;
    const auto n = static_cast<std::size_t>(std::max(i, j));
    for (const auto& [key, c] : terms_) {
      Exponents e = key;
      if (e.size() < n) e.resize(n, 0);
      std::swap(e[static_cast<std::size_t>(i) - 1], e[static_cast<std::size_t>(j) - 1]);
      out.add_term(std::move(e), c);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, checked_sub(0, c));
    return *this;
  }

  Polynomial& operator*=(Coeff s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second = checked_mul(kv.second, s);
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, Coeff s) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [e1, c1] : p.terms_) {
      for (const auto& [e2, c2] : q.terms_) {
        Exponents e(std::max(e1.size(), e2.size()), 0);
        for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
        for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
        out.add_term(std::move(e), checked_mul(c1, c2));
      }
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

namespace detail {

// Walks weak compositions b with `n` parts whose nonzero parts, read left to
// right, split the parts of `target` into consecutive blocks (flat(b) refines
// target). When `lower` is given, every prefix sum of b must also be at least
// the corresponding prefix sum of `lower` (b >= lower).
inline Polynomial refining_monomials(const StrongComposition& target, std::size_t n,
                                     const WeakComposition* lower) {
  Polynomial out;
  std::vector<int> need(n + 1, 0);
  if (lower != nullptr) {
    for (std::size_t i = 1; i <= n; ++i) need[i] = need[i - 1] + lower->part(i);
  }
  std::vector<int> b(n, 0);
  std::size_t count = 0;
  // pos: next slot; block: index into target; left: unfilled amount of that block.
  auto rec = [&](auto&& self, std::size_t pos, int prefix, std::size_t block, int left) -> void {
    if (block == target.size()) {
      check_term_count(++count, "slide polynomial enumeration");
      out.add_term(std::vector<int>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(pos)), 1);
      return;
    }
    if (pos == n) return;
    const std::size_t slots_after = n - pos - 1;
    // Zero here; every unfinished block still needs a slot of its own.
    if (prefix >= need[pos + 1] && target.size() - block <= slots_after) {
      b[pos] = 0;
      self(self, pos + 1, prefix, block, left);
    }
    for (int p = 1; p <= left; ++p) {
      if (prefix + p < need[pos + 1]) continue;
      b[pos] = p;
      if (p == left) {
        const std::size_t nb = block + 1;
        self(self, pos + 1, prefix + p, nb, nb < target.size() ? target.parts()[nb] : 0);
      } else {
        self(self, pos + 1, prefix + p, block, left - p);
      }
      b[pos] = 0;
    }
  };
  const int first = target.empty() ? 0 : target.parts()[0];
  rec(rec, 0, 0, 0, first);
  return out;
}

}  // namespace detail

/// Fundamental slide polynomial of `a` in size(a) variables.
inline Polynomial slide_polynomial(const WeakComposition& a) {
  return detail::refining_monomials(flatten(a), a.size(), &a);
}

/// Virtual (nullopt) input is the zero polynomial.
inline Polynomial slide_polynomial(const std::optional<WeakComposition>& a) {
  return a ? slide_polynomial(*a) : Polynomial{};
}

/// Fundamental quasisymmetric polynomial F_alpha(x_1..x_k).
inline Polynomial fundamental_quasisym(const StrongComposition& alpha, int k) {
  if (k < 0) throw PreconditionError("fundamental_quasisym: k must be nonnegative");
  return detail::refining_monomials(alpha, static_cast<std::size_t>(k), nullptr);
}

/// Coefficients c_a with p = sum c_a F_a. Keys are trailing-zero-stripped.
///
/// F_a has x^a as its lexicographically smallest monomial, every other
/// monomial being lexicographically larger (b >= a forces b_i > a_i at the
/// first difference). Peeling off the smallest remaining monomial therefore
/// recovers the unique expansion.
inline std::map<WeakComposition, Coeff> slide_expand(const Polynomial& p) {
  std::map<WeakComposition, Coeff> out;
  Polynomial rest = p;
  const std::size_t cap = limits().max_terms.load(std::memory_order_relaxed);
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step >= cap) throw NonExpandable("slide expansion did not terminate");
    const auto& [e, c] = *rest.terms().begin();
    const WeakComposition a(e);
    const Coeff coeff = c;
    out.emplace(a, coeff);
    rest -= slide_polynomial(a) * coeff;
    if (rest.coefficient(a.parts()) != 0) throw NonExpandable("slide elimination failed to clear a leading term");
  }
  return out;
}

}  // namespace schubert
