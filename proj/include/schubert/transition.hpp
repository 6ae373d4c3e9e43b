#pragma once

// Transition machinery: Monk's rule, truncation at the last descent, the
// Schubert-times-Schur product by iterated truncation, and rewriting of
// transposition chains between their down-up and block forms.
//
// Chains are applied left to right on positions: base * t_1 * t_2 * ...

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

enum class Direction { down, up };

struct ChainStep {
  Transposition t;
  Direction dir = Direction::up;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
  friend auto operator<=>(const ChainStep&, const ChainStep&) = default;
};

struct TranspositionChain {
  Permutation base;
  std::vector<ChainStep> steps;

  std::vector<Transposition> transpositions() const {
    std::vector<Transposition> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.t);
    return out;
  }

  Permutation result() const {
    Permutation w = base;
    for (const auto& s : steps) w = apply_transposition(w, s.t);
    return w;
  }

  /// Every step changes the length by exactly one in its flagged direction.
  bool is_graded() const {
    Permutation w = base;
    int len = length(w);
    for (const auto& s : steps) {
      w = apply_transposition(w, s.t);
      const int next = length(w);
      if (next != len + (s.dir == Direction::up ? 1 : -1)) return false;
      len = next;
    }
    return true;
  }

  friend bool operator==(const TranspositionChain&, const TranspositionChain&) = default;
};

/// S_w * (x_1 + ... + x_k) as the sum of S_{w(a,b)} over covering (a,b) with a <= k < b.
inline SchubertExpansion monk_multiply(const Permutation& w, int k) {
  if (k < 1) throw PreconditionError("monk: k must be positive");
  SchubertExpansion out;
  // With n = max(size, k), w(a,b) never covers w once b > n + 1: position
  // n + 1 holds n + 1, which lies strictly between w_a and w_b = b.
  const int n = std::max(static_cast<int>(w.size()), k);
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= n + 1; ++b) {
      const Transposition t(a, b);
      if (covers(w, t)) out.add(apply_transposition(w, t), 1);
    }
  }
  return out;
}

/// Data of a truncation at the last descent k: m with k + m = max{i : w_k > w_i}
/// and w-hat, the word with w_k moved just past position k + m.
struct TruncationSetup {
  int k = 0;
  int m = 0;
  Permutation hat;
};

inline TruncationSetup truncation_setup(const Permutation& w) {
  const auto last = last_descent(w);
  if (!last) throw PreconditionError("truncation: the identity has no last descent");
  TruncationSetup s;
  s.k = *last;
  const int wk = w(s.k);
  int top = s.k;
  for (int i = s.k + 1; i <= static_cast<int>(w.size()); ++i) {
    if (w(i) < wk) top = i;
  }
  s.m = top - s.k;
  std::vector<int> v = w.word();
  const auto first = v.begin() + (s.k - 1);
  std::rotate(first, first + 1, v.begin() + top);
  s.hat = Permutation(std::move(v));
#ifndef NDEBUG
  Permutation check = w;
  for (int j = top; j > s.k; --j) check = apply_transposition(check, Transposition(s.k, j));
  if (check != s.hat) throw InternalError("truncation: w-hat disagrees with the transposition product");
#endif
  return s;
}

/// One term of the truncation sum: u = w-hat (a_1,k) (a_2,k+1) ... (a_m,k+m-1).
struct TruncationPath {
  std::vector<int> a;
  /// Base w with the down block (k,k+m) ... (k,k+1) followed by the up steps.
  TranspositionChain chain;
  Permutation result;
};

/// All covering chains from w-hat, every a_i < k, a_i tried in decreasing order.
inline std::vector<TruncationPath> truncation_paths(const Permutation& w) {
  const auto s = truncation_setup(w);
  std::vector<TruncationPath> out;
  TruncationPath cur;
  cur.chain.base = w;
  for (int j = s.k + s.m; j > s.k; --j) cur.chain.steps.push_back({Transposition(s.k, j), Direction::down});
  auto rec = [&](auto&& self, const Permutation& x, int step) -> void {
    if (step == s.m) {
      cur.result = x;
      out.push_back(cur);
      check_term_count(out.size(), "truncation enumeration");
      return;
    }
    const int pos = s.k + step;
    for (int a = s.k - 1; a >= 1; --a) {
      const Transposition t(a, pos);
      if (!covers(x, t)) continue;
      cur.a.push_back(a);
      cur.chain.steps.push_back({t, Direction::up});
      self(self, apply_transposition(x, t), step + 1);
      cur.chain.steps.pop_back();
      cur.a.pop_back();
    }
  };
  rec(rec, s.hat, 0);
  return out;
}

/// S_w(x_1, ..., x_{k-1}, 0) in the Schubert basis, k the last descent of w.
/// The sum is multiplicity-free; a repeated term raises InternalError.
inline SchubertExpansion truncate_last_descent(const Permutation& w) {
  SchubertExpansion out;
  for (const auto& p : truncation_paths(w)) {
    out.add(p.result, 1);
    if (out.coefficient(p.result) > 1) throw InternalError("truncation produced a repeated term");
  }
  return out;
}

/// Truncation chains in alternating form (k,b_1)(a_1,k) ... (k,b_n)(a_n,k):
/// each down step moves the largest entry below w_k into position k, each
/// up step brings some a < k back, and the walk repeats while the current
/// permutation still descends at k.
inline std::vector<TranspositionChain> down_up_chains(const Permutation& w) {
  const auto last = last_descent(w);
  if (!last) throw PreconditionError("truncation: the identity has no last descent");
  const int k = *last;
  std::vector<TranspositionChain> out;
  TranspositionChain cur;
  cur.base = w;
  auto rec = [&](auto&& self, const Permutation& x) -> void {
    if (x(k) < x(k + 1)) {
      out.push_back(cur);
      check_term_count(out.size(), "down-up chain enumeration");
      return;
    }
    int b = k;
    for (int i = k + 1; i <= static_cast<int>(x.size()); ++i) {
      if (x(i) < x(k)) b = i;
    }
    const Transposition down(k, b);
    const Permutation y = apply_transposition(x, down);
    cur.steps.push_back({down, Direction::down});
    for (int a = k - 1; a >= 1; --a) {
      const Transposition up(a, k);
      if (!covers(y, up)) continue;
      cur.steps.push_back({up, Direction::up});
      self(self, apply_transposition(y, up));
      cur.steps.pop_back();
    }
    cur.steps.pop_back();
  };
  rec(rec, w);
  return out;
}

namespace detail {

/// t conjugated by s: the labels s.a and s.b are exchanged in t.
inline Transposition conjugate(const Transposition& t, const Transposition& s) {
  auto relabel = [&](int x) { return x == s.a ? s.b : (x == s.b ? s.a : x); };
  return Transposition(relabel(t.a), relabel(t.b));
}

// Moves every down step in front of all up steps, conjugating each up step a
// down step crosses: U D = D (D U D).
inline std::pair<std::vector<Transposition>, std::vector<Transposition>> separate(
    const std::vector<ChainStep>& steps) {
  std::vector<Transposition> downs;
  std::vector<Transposition> ups;
  for (const auto& s : steps) {
    if (s.dir == Direction::up) {
      ups.push_back(s.t);
    } else {
      for (auto& u : ups) u = conjugate(u, s.t);
      downs.push_back(s.t);
    }
  }
  return {std::move(downs), std::move(ups)};
}

}  // namespace detail

/// Rewrites an alternating down-up chain into block form: the down block
/// (k,k+m) ... (k,k+1) followed by up steps (a_1,k) (a_2,k+1) ... (a_m,k+m-1).
///
/// The gap between consecutive pairs is padded with cancelling pairs
/// (k,j)(k,j), the down steps are commuted to the front, and the up steps are
/// reversed with U X = X^U U. The permutation product never changes.
inline TranspositionChain normalize_chain(const TranspositionChain& c) {
  if (c.steps.empty()) return c;
  if (c.steps.size() % 2 != 0) throw PreconditionError("normalize_chain: chain must alternate down and up steps");
  const int k = c.steps.front().t.a;
  std::vector<int> bs;
  std::vector<int> as;
  for (std::size_t i = 0; i < c.steps.size(); i += 2) {
    const auto& d = c.steps[i];
    const auto& u = c.steps[i + 1];
    if (d.dir != Direction::down || d.t.a != k) throw PreconditionError("normalize_chain: expected a down step (k,b)");
    if (u.dir != Direction::up || u.t.b != k) throw PreconditionError("normalize_chain: expected an up step (a,k)");
    if (!bs.empty() && d.t.b >= bs.back()) throw PreconditionError("normalize_chain: down positions must decrease");
    bs.push_back(d.t.b);
    as.push_back(u.t.a);
  }

  std::vector<ChainStep> padded;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    padded.push_back({Transposition(k, bs[i]), Direction::down});
    padded.push_back({Transposition(as[i], k), Direction::up});
    const int stop = (i + 1 < bs.size()) ? bs[i + 1] : k;
    for (int j = bs[i] - 1; j > stop; --j) {
      padded.push_back({Transposition(k, j), Direction::down});
      padded.push_back({Transposition(k, j), Direction::up});
    }
  }

  auto [downs, ups] = detail::separate(padded);

  std::vector<Transposition> reversed;
  std::vector<Transposition> pending = std::move(ups);
  std::vector<Transposition> tail;
  while (!pending.empty()) {
    const Transposition head = pending.front();
    std::vector<Transposition> rest;
    for (std::size_t i = 1; i < pending.size(); ++i) rest.push_back(detail::conjugate(pending[i], head));
    tail.push_back(head);
    pending = std::move(rest);
  }
  reversed.assign(tail.rbegin(), tail.rend());

  TranspositionChain out;
  out.base = c.base;
  for (const auto& t : downs) out.steps.push_back({t, Direction::down});
  for (const auto& t : reversed) out.steps.push_back({t, Direction::up});
  return out;
}

namespace detail {

inline void check_product_preconditions(const Permutation& u, const Partition& lambda, int k) {
  if (k < 1) throw PreconditionError("product: k must be positive");
  if (auto d = last_descent(u); d && *d > k) throw PreconditionError("product: last descent of u exceeds k");
  if (lambda.size() > static_cast<std::size_t>(k)) throw PreconditionError("product: partition has more than k parts");
}

/// u x_l v(lambda, length(lambda)) with l = max(k, size(u)).
inline Permutation product_start(const Permutation& u, const Partition& lambda, int k) {
  const int l = std::max(k, static_cast<int>(u.size()));
  if (lambda.empty()) return u;
  return cross(u, grassmannian(lambda, static_cast<int>(lambda.size())), l);
}

inline bool settled(const Permutation& w, int k) {
  const auto d = last_descent(w);
  return !d || *d <= k;
}

}  // namespace detail

/// S_u * s_lambda(x_1..x_k) in the Schubert basis.
///
/// Starts from S_{u x v(lambda)} and truncates at the last descent until every
/// term has its last descent at or before k.
inline SchubertExpansion schubert_times_schur(const Permutation& u, const Partition& lambda, int k) {
  detail::check_product_preconditions(u, lambda, k);
  SchubertExpansion done;
  std::map<Permutation, Coeff> pending{{detail::product_start(u, lambda, k), 1}};
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Permutation& w = node.key();
    const Coeff c = node.mapped();
    if (detail::settled(w, k)) {
      done.add(w, c);
      continue;
    }
    const int d = *last_descent(w);
    const auto truncated = truncate_last_descent(w);
    for (const auto& [v, cv] : truncated.terms()) {
      if (auto dv = last_descent(v); dv && *dv >= d) {
        throw InternalError("product: truncation did not lower the last descent");
      }
      auto& slot = pending[v];
      slot = checked_add(slot, checked_mul(c, cv));
    }
    check_term_count(pending.size() + done.size(), "product worklist");
  }
  return done;
}

/// One chain contributing to schubert_times_schur.
struct ProductPath {
  Permutation result;
  /// From u x v(lambda): the concatenated truncation chains.
  TranspositionChain from_cross;
  /// From u: covering steps (a_i, b_i) with a_i <= k < b_i, when the
  /// rewriting below succeeds.
  std::optional<std::vector<Transposition>> from_u;
};

namespace detail {

// Cancels adjacent equal transpositions, commutes the down steps to the
// front and accepts the remaining up steps when the downs carry the start
// back to u and every up step is a covering (a,b) with a <= k < b.
inline std::optional<std::vector<Transposition>> chain_from_u(const TranspositionChain& c, const Permutation& u,
                                                              int k) {
  std::vector<ChainStep> steps;
  for (const auto& s : c.steps) {
    if (!steps.empty() && steps.back().t == s.t) {
      steps.pop_back();
    } else {
      steps.push_back(s);
    }
  }
  auto [downs, ups] = separate(steps);
  Permutation x = c.base;
  for (const auto& t : downs) x = apply_transposition(x, t);
  if (x != u) return std::nullopt;
  for (const auto& t : ups) {
    if (!(t.a <= k && k < t.b) || !covers(x, t)) return std::nullopt;
    x = apply_transposition(x, t);
  }
  return ups;
}

}  // namespace detail

/// Same product, keeping every contributing chain instead of merging terms.
inline std::vector<ProductPath> schubert_times_schur_paths(const Permutation& u, const Partition& lambda, int k) {
  detail::check_product_preconditions(u, lambda, k);
  std::vector<ProductPath> out;
  TranspositionChain start;
  start.base = detail::product_start(u, lambda, k);
  std::vector<std::pair<Permutation, TranspositionChain>> stack{{start.base, start}};
  while (!stack.empty()) {
    auto [w, chain] = std::move(stack.back());
    stack.pop_back();
    if (detail::settled(w, k)) {
      ProductPath p{w, chain, detail::chain_from_u(chain, u, k)};
      out.push_back(std::move(p));
      check_term_count(out.size(), "product path enumeration");
      continue;
    }
    for (const auto& tp : truncation_paths(w)) {
      TranspositionChain next = chain;
      next.steps.insert(next.steps.end(), tp.chain.steps.begin(), tp.chain.steps.end());
      stack.emplace_back(tp.result, std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [](const ProductPath& x, const ProductPath& y) {
    if (x.result != y.result) return x.result < y.result;
    return x.from_cross.steps < y.from_cross.steps;
  });
  return out;
}

/// Coefficient of S_w in S_u * s_lambda(x_1..x_k).
inline Coeff lr_coefficient(const Permutation& u, const Partition& lambda, int k, const Permutation& w) {
  detail::check_product_preconditions(u, lambda, k);
  if (length(w) != length(u) + lambda.weight()) return 0;
  return schubert_times_schur(u, lambda, k).coefficient(w);
}

/// Whether S_{u x_n v}(x_1..x_k) == S_u * S_v(x_1..x_k); requires m <= k <= n
/// with m the largest position moved by u.
inline bool cross_identity_check(const Permutation& u, const Permutation& v, int k, int n) {
  const int m = static_cast<int>(u.size());
  if (k < 1 || k < m || n < k) throw PreconditionError("cross identity: requires m <= k <= n and k >= 1");
  const Polynomial lhs = schubert_polynomial(cross(u, v, n)).substitute_zero(k);
  const Polynomial rhs = schubert_polynomial(u) * stanley(v, k);
  return lhs == rhs;
}

}  // namespace schubert
