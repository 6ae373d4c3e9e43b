#pragma once

// Slow, direct reference computations used to check the library. None of
// these call the routine they are compared against.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "schubert/all.hpp"

namespace oracle {

using schubert::Coeff;
using schubert::Permutation;
using schubert::Polynomial;

inline std::vector<int> padded(const Permutation& w, std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = 0; i < w.word().size(); ++i) v[i] = w.word()[i];
  return v;
}

inline int inversions(const std::vector<int>& v) {
  int n = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) n += v[i] > v[j];
  return n;
}

inline std::vector<int> lehmer(const std::vector<int>& v) {
  std::vector<int> c(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c[i] += v[j] < v[i];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Decodes a Lehmer code by picking the c_i-th smallest unused value.
inline Permutation from_lehmer(const std::vector<int>& c) {
  const std::size_t n = c.size() + static_cast<std::size_t>(*std::max_element(c.begin(), c.end())) + 1;
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> w;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pick = i < c.size() ? static_cast<std::size_t>(c[i]) : 0;
    w.push_back(unused[pick]);
    unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(w);
}

// The letters compose as functions s_{i_k} o ... o s_{i_1}; that function is
// the inverse of the permutation the word spells in one-line notation.
inline Permutation spelled(const std::vector<int>& letters, std::size_t n) {
  std::vector<int> f(n);
  for (std::size_t j = 1; j <= n; ++j) {
    int x = static_cast<int>(j);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (x == *it) x = *it + 1;
      else if (x == *it + 1) x = *it;
    }
    f[j - 1] = x;
  }
  std::vector<int> inv(n);
  for (std::size_t j = 0; j < n; ++j) inv[static_cast<std::size_t>(f[j]) - 1] = static_cast<int>(j) + 1;
  return Permutation(inv);
}

// Every word of length length(w) over 1..n-1 that spells w.
inline std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  const std::size_t n = std::max<std::size_t>(w.size(), 1);
  const auto v = padded(w, n);
  const int len = inversions(v);
  std::vector<std::vector<int>> out;
  if (n == 1) return {{}};
  std::vector<int> word(static_cast<std::size_t>(len), 1);
  while (true) {
    if (spelled(word, n) == w) out.push_back(word);
    std::size_t i = word.size();
    while (i > 0 && word[i - 1] == static_cast<int>(n) - 1) word[--i] = 1;
    if (i == 0) break;
    ++word[i - 1];
  }
  return out;
}

// Direct reading of the inequalities: alpha weakly increasing, alpha_j <= r_j
// and alpha_j < alpha_{j+1} when r_j < r_{j+1}, with r the word read from the right.
inline std::vector<std::vector<int>> compatible(const std::vector<int>& rho) {
  const std::vector<int> r(rho.rbegin(), rho.rend());
  std::vector<std::vector<int>> out;
  if (r.empty()) return {{}};
  const int top = *std::max_element(r.begin(), r.end());
  std::vector<int> a(r.size(), 1);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < r.size() && ok; ++j) {
      if (a[j] > r[j]) ok = false;
      if (j + 1 < r.size()) {
        if (a[j] > a[j + 1]) ok = false;
        if (r[j] < r[j + 1] && a[j] >= a[j + 1]) ok = false;
      }
    }
    if (ok) out.push_back(a);
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == top) a[--i] = 1;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

// All exponent vectors of length n and total d.
inline std::vector<std::vector<int>> vectors(int d, std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::vector<int> nonzero(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v)
    if (x != 0) out.push_back(x);
  return out;
}

inline std::vector<int> partial_sums(const std::vector<int>& v) {
  std::vector<int> s;
  int t = 0;
  for (int x : v) s.push_back(t += x);
  return s;
}

// Refinement as containment of partial-sum sets.
inline bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  const auto f = partial_sums(fine);
  const auto c = partial_sums(coarse);
  if (f.empty() != c.empty() || (!f.empty() && f.back() != c.back())) return false;
  return std::all_of(c.begin(), c.end(), [&](int s) { return std::find(f.begin(), f.end(), s) != f.end(); });
}

inline Polynomial slide(const std::vector<int>& a) {
  Polynomial p;
  const int d = std::accumulate(a.begin(), a.end(), 0);
  const auto pa = partial_sums(a);
  for (const auto& b : vectors(d, a.size())) {
    const auto pb = partial_sums(b);
    bool dom = true;
    for (std::size_t i = 0; i < a.size(); ++i) dom = dom && pb[i] >= pa[i];
    if (dom && refines(nonzero(b), nonzero(a))) p.add_term(b, 1);
  }
  return p;
}

inline Polynomial fundamental(const std::vector<int>& alpha, int k) {
  Polynomial p;
  const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
  for (const auto& b : vectors(d, static_cast<std::size_t>(k))) {
    if (refines(nonzero(b), alpha)) p.add_term(b, 1);
  }
  return p;
}

// Semistandard tableaux of shape lambda with entries in 1..k.
inline Polynomial schur(const std::vector<int>& lambda, int k) {
  Polynomial p;
  std::vector<std::vector<int>> t;
  for (int len : lambda) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      std::vector<int> e(static_cast<std::size_t>(k), 0);
      for (const auto& row : t)
        for (int x : row) ++e[static_cast<std::size_t>(x) - 1];
      p.add_term(e, 1);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x <= k; ++x) {
      t[r][c] = x;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return p;
}

// d_i f = (f - s_i f) / (x_i - x_{i+1}), monomial by monomial.
inline Polynomial divided_difference(const Polynomial& f, int i) {
  Polynomial out;
  const auto ii = static_cast<std::size_t>(i);
  for (const auto& [key, c] : f.terms()) {
    auto e = key;
    if (e.size() < ii + 1) e.resize(ii + 1, 0);
    const int a = e[ii - 1];
    const int b = e[ii];
    if (a == b) continue;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const Coeff sign = a > b ? c : -c;
    for (int j = 0; j < hi - lo; ++j) {
      auto m = e;
      m[ii - 1] = hi - 1 - j;
      m[ii] = lo + j;
      out.add_term(m, sign);
    }
  }
  return out;
}

// Schubert polynomials by descending from the longest element of S_n.
inline Polynomial schubert(const Permutation& w) {
  static std::map<std::vector<int>, Polynomial> memo;
  const std::size_t n = std::max<std::size_t>(w.size(), 1);
  const auto v = padded(w, n);
  if (auto it = memo.find(v); it != memo.end()) return it->second;
  Polynomial p;
  std::size_t asc = 0;
  while (asc + 1 < n && v[asc] > v[asc + 1]) ++asc;
  if (asc + 1 >= n) {
    std::vector<int> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(static_cast<int>(n - 1 - i));
    p = Polynomial::monomial(e);
  } else {
    auto up = v;
    std::swap(up[asc], up[asc + 1]);
    p = divided_difference(schubert(Permutation(up)), static_cast<int>(asc) + 1);
  }
  memo.emplace(v, p);
  return p;
}

// Schubert expansion by peeling the lex-smallest monomial, which is
// x^code(w) for S_w.
inline std::map<Permutation, Coeff> expand(Polynomial p) {
  std::map<Permutation, Coeff> out;
  while (!p.is_zero()) {
    const auto [e, c] = *p.terms().begin();
    const Permutation w = e.empty() ? Permutation::identity() : from_lehmer(e);
    out[w] += c;
    p -= schubert(w) * c;
  }
  return out;
}

// "2 x1^3 x2 + x3 - x4" style text.
inline Polynomial parse(const std::string& text) {
  Polynomial p;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&] {
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return v;
  };
  Coeff sign = 1;
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      continue;
    }
    Coeff c = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) c = number();
    std::vector<int> e;
    while (true) {
      skip();
      if (i >= text.size() || text[i] != 'x') break;
      ++i;
      const int var = number();
      int pow = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        pow = number();
      }
      if (e.size() < static_cast<std::size_t>(var)) e.resize(static_cast<std::size_t>(var), 0);
      e[static_cast<std::size_t>(var) - 1] += pow;
    }
    p.add_term(e, sign * c);
    sign = 1;
  }
  return p;
}

inline std::map<Permutation, Coeff> as_map(const schubert::SchubertExpansion& e) {
  return {e.terms().begin(), e.terms().end()};
}

}  // namespace oracle
