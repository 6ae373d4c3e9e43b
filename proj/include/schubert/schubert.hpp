#pragma once

// Schubert, Stanley and Schur polynomials, and an independent Schubert-basis
// expansion oracle based on exact linear algebra.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/words.hpp"

namespace schubert {

/// Finite formal sum of Schubert polynomials, keyed by canonical permutation.
class SchubertExpansion {
 public:
  using Terms = std::map<Permutation, Coeff>;

  SchubertExpansion() = default;
  SchubertExpansion(std::initializer_list<std::pair<Permutation, Coeff>> terms) {
    for (const auto& [w, c] : terms) add(w, c);
  }

  void add(const Permutation& w, Coeff c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const SchubertExpansion& other, Coeff scale = 1) {
    for (const auto& [w, c] : other.terms_) add(w, checked_mul(c, scale));
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  Coeff total() const {
    Coeff s = 0;
    for (const auto& kv : terms_) s = checked_add(s, kv.second);
    return s;
  }

  bool all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;

 private:
  Terms terms_;
};

/// Sum over reduced words and their compatible sequences of x_{alpha_1} ... x_{alpha_l}.
inline Polynomial schubert_via_compatible(const Permutation& w) {
  Polynomial p;
  const auto words = reduced_words(w);
  for (const auto& rho : *words) {
    for (const auto& alpha : compatible_sequences(rho)) p.add_term(sequence_weight(alpha).parts(), 1);
  }
  return p;
}

/// Sum over reduced words of the slide polynomial of the weak descent composition.
inline Polynomial schubert_via_slides(const Permutation& w) {
  std::map<WeakComposition, Coeff> multiplicity;
  const auto words = reduced_words(w);
  for (const auto& rho : *words) {
    if (auto des = weak_descent_composition(rho)) ++multiplicity[*des];
  }
  Polynomial p;
  for (const auto& [a, c] : multiplicity) p += slide_polynomial(a) * c;
  return p;
}

inline Polynomial schubert_polynomial(const Permutation& w) { return schubert_via_slides(w); }

/// Multiset of strong descent compositions over R(w).
inline std::map<StrongComposition, Coeff> stanley_fundamental_expansion(const Permutation& w) {
  std::map<StrongComposition, Coeff> out;
  const auto words = reduced_words(w);
  for (const auto& rho : *words) ++out[strong_descent_composition(rho)];
  return out;
}

/// Stanley symmetric polynomial S_w(x_1..x_k).
inline Polynomial stanley(const Permutation& w, int k) {
  if (k < 1) throw PreconditionError("stanley: k must be positive");
  Polynomial p;
  for (const auto& [alpha, c] : stanley_fundamental_expansion(w)) p += fundamental_quasisym(alpha, k) * c;
  return p;
}

/// s_lambda(x_1..x_k), realized as the Schubert polynomial of v(lambda, k).
inline Polynomial schur(const Partition& lambda, int k) {
  return schubert_via_slides(grassmannian(lambda, k));
}

inline Polynomial to_polynomial(const SchubertExpansion& e) {
  Polynomial p;
  for (const auto& [w, c] : e.terms()) p += schubert_polynomial(w) * c;
  return p;
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

// Permutations of S_n with length d whose code lives in the first r
// positions, enumerated through their codes (c_i <= n - i).
inline std::vector<Permutation> oracle_candidates(int d, int r, int n) {
  std::vector<Permutation> out;
  for (const auto& c : weak_compositions(d, r)) {
    bool fits = true;
    for (int i = 1; i <= r; ++i) {
      if (c.part(static_cast<std::size_t>(i)) > n - i) fits = false;
    }
    if (fits) out.push_back(from_code(c));
  }
  return out;
}

inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j <= cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i][cols] != 0) return std::nullopt;
  }
  if (rank != cols) throw InternalError("Schubert basis candidates are linearly dependent");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rows[i][cols] / rows[i][pivot_col[i]];
  return x;
}

}  // namespace detail

/// Solves p = sum c_w S_w exactly over w in S_ambient with length(w) = degree.
///
/// Only permutations whose code is supported on the variables of p are used:
/// those Schubert polynomials already form a basis of the polynomials in
/// x_1..x_r, so by uniqueness no other w can occur. Throws NoSolution when
/// the ambient group is too small to hold the expansion.
inline SchubertExpansion schubert_expand_oracle(const Polynomial& p, int degree, int ambient) {
  SchubertExpansion out;
  if (p.is_zero()) return out;
  if (p.homogeneous_degree() != degree) throw PreconditionError("oracle: polynomial is not homogeneous of the given degree");
  const int r = p.max_variable();
  if (ambient < r + 1) throw NoSolution("oracle: ambient group smaller than the variable support");
  if (r == 0) {
    out.add(Permutation::identity(), p.coefficient({}));
    return out;
  }
  const auto basis = detail::oracle_candidates(degree, r, ambient);
  std::map<Polynomial::Exponents, std::size_t> row_of;
  std::vector<Polynomial> polys;
  polys.reserve(basis.size());
  for (const auto& w : basis) {
    polys.push_back(schubert_via_slides(w));
    for (const auto& kv : polys.back().terms()) row_of.try_emplace(kv.first, row_of.size());
  }
  for (const auto& kv : p.terms()) row_of.try_emplace(kv.first, row_of.size());

  const std::size_t cols = basis.size();
  std::vector<std::vector<detail::Rational>> rows(row_of.size(), std::vector<detail::Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [e, c] : polys[j].terms()) rows[row_of.at(e)][j] = c;
  }
  for (const auto& [e, c] : p.terms()) rows[row_of.at(e)][cols] = c;

  const auto x = detail::solve_exact(std::move(rows), cols);
  if (!x) throw NoSolution("oracle: polynomial is outside the span of S_" + std::to_string(ambient));
  for (std::size_t j = 0; j < cols; ++j) {
    if (denominator((*x)[j]) != 1) throw InternalError("oracle: non-integral Schubert coefficient");
    out.add(basis[j], numerator((*x)[j]).convert_to<Coeff>());
  }
  return out;
}

/// Oracle with the ambient group grown from (max variable + 1) until it succeeds.
inline SchubertExpansion schubert_expand(const Polynomial& p) {
  if (p.is_zero()) return {};
  const auto d = p.homogeneous_degree();
  if (!d) throw PreconditionError("oracle: polynomial is not homogeneous");
  const int r = p.max_variable();
  // Once ambient >= r + d every code of weight d on r variables fits.
  for (int n = r + 1;; ++n) {
    try {
      return schubert_expand_oracle(p, *d, n);
    } catch (const NoSolution&) {
      if (n >= r + *d) throw;
    }
  }
}

}  // namespace schubert
