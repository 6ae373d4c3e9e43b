#pragma once

// Permutations in one-line notation.
//
// Positions and values are 1-based. A Permutation is stored without trailing
// fixed points, so the same element of S_infinity compares equal regardless
// of the ambient size it was written in; the identity is the empty word.
// Every operation pads with fixed points internally as needed.
//
// Transpositions act on the right, i.e. on positions: w * (a,b) swaps the
// entries in positions a and b.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"

namespace schubert {

class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  /// Accepts any bijection of {1..n}; trailing fixed points are dropped.
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const std::size_t n = word_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
        throw PreconditionError("not a permutation in one-line notation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    canonicalize();
  }

  static Permutation identity() { return {}; }

  /// Length of the canonical word, i.e. max{i : w(i) != i}, or 0.
  std::size_t size() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }
  const std::vector<int>& word() const noexcept { return word_; }

  /// Value at 1-based position i; fixed beyond size().
  int operator()(int i) const noexcept {
    return (i >= 1 && static_cast<std::size_t>(i) <= word_.size()) ? word_[static_cast<std::size_t>(i) - 1] : i;
  }

  /// One-line word in S_n for n >= size().
  std::vector<int> padded(std::size_t n) const {
    std::vector<int> v = word_;
    for (std::size_t i = v.size(); i < n; ++i) v.push_back(static_cast<int>(i) + 1);
    return v;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& x, const Permutation& y) noexcept {
    return x.word_ <=> y.word_;
  }

 private:
  void canonicalize() {
    while (!word_.empty() && word_.back() == static_cast<int>(word_.size())) word_.pop_back();
  }

  std::vector<int> word_;
};

struct Transposition {
  int a = 1;
  int b = 2;

  Transposition() = default;
  /// Order of the two positions does not matter; they must differ.
  Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (a < 1 || a == b) throw PreconditionError("transposition needs two distinct positive positions");
  }

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// Coxeter length (number of inversions).
inline int length(const Permutation& w) {
  const auto& v = w.word();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inv;
    }
  }
  return inv;
}

inline std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> d;
  const auto& v = w.word();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) d.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

/// Largest descent position; nullopt for the identity.
inline std::optional<int> last_descent(const Permutation& w) {
  const auto& v = w.word();
  for (std::size_t i = v.size(); i >= 2; --i) {
    if (v[i - 2] > v[i - 1]) return static_cast<int>(i) - 1;
  }
  return std::nullopt;
}

inline bool is_grassmannian(const Permutation& w) { return descent_set(w).size() <= 1; }

/// Lehmer code: code(w)_i = #{j > i : w_j < w_i}. Length = size(w).
inline WeakComposition code(const Permutation& w) {
  const auto& v = w.word();
  std::vector<int> c(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) ++c[i];
    }
  }
  return WeakComposition(std::move(c));
}

/// Inverse of code(); any weak composition is the code of exactly one permutation.
inline Permutation from_code(const WeakComposition& c) {
  std::size_t n = c.size();
  for (std::size_t i = 1; i <= c.size(); ++i) n = std::max(n, i + static_cast<std::size_t>(c.part(i)));
  std::vector<int> unused;
  for (std::size_t v = 1; v <= n; ++v) unused.push_back(static_cast<int>(v));
  std::vector<int> word;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto take = static_cast<std::size_t>(c.part(i));
    word.push_back(unused[take]);
    unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return Permutation(std::move(word));
}

inline Permutation apply_transposition(const Permutation& w, const Transposition& t) {
  std::vector<int> v = w.padded(std::max(w.size(), static_cast<std::size_t>(t.b)));
  std::swap(v[static_cast<std::size_t>(t.a) - 1], v[static_cast<std::size_t>(t.b) - 1]);
  return Permutation(std::move(v));
}

/// True iff length(w * t) == length(w) + 1.
inline bool covers(const Permutation& w, const Transposition& t) {
  const int lo = w(t.a);
  const int hi = w(t.b);
  if (lo > hi) return false;
  for (int c = t.a + 1; c < t.b; ++c) {
    const int x = w(c);
    if (lo < x && x < hi) return false;
  }
  return true;
}

/// Applies the transpositions left to right.
inline Permutation apply_chain(Permutation w, std::span<const Transposition> steps) {
  for (const auto& t : steps) w = apply_transposition(w, t);
  return w;
}

/// u x_m v: u on positions 1..m, then m + v_i. Requires u to fix everything past m.
inline Permutation cross(const Permutation& u, const Permutation& v, int m) {
  if (m < 0) throw PreconditionError("cross: m must be nonnegative");
  if (u.size() > static_cast<std::size_t>(m)) {
    throw PreconditionError("cross: u moves a position beyond m");
  }
  std::vector<int> word = u.padded(static_cast<std::size_t>(m));
  for (int x : v.word()) word.push_back(x + m);
  return Permutation(std::move(word));
}

/// 1^m x w.
inline Permutation shift(const Permutation& w, int m) { return cross(Permutation::identity(), w, m); }

/// Grassmannian permutation with its unique descent at k and shape lambda.
inline Permutation grassmannian(const Partition& lambda, int k) {
  if (k < 1) throw PreconditionError("grassmannian: k must be positive");
  if (lambda.size() > static_cast<std::size_t>(k)) {
    throw PreconditionError("grassmannian: partition has more than k parts");
  }
  const auto kk = static_cast<std::size_t>(k);
  std::vector<int> word;
  for (std::size_t i = 1; i <= kk; ++i) word.push_back(static_cast<int>(i) + lambda.part(kk - i + 1));
  const int n = word.back();
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int x : word) used[static_cast<std::size_t>(x)] = true;
  for (int x = 1; x <= n; ++x) {
    if (!used[static_cast<std::size_t>(x)]) word.push_back(x);
  }
  return Permutation(std::move(word));
}

/// Inverse of grassmannian(., k).
inline Partition to_partition(const Permutation& v, int k) {
  if (k < 1) throw PreconditionError("to_partition: k must be positive");
  const auto d = descent_set(v);
  if (d.size() > 1) throw PreconditionError("to_partition: permutation is not grassmannian");
  if (d.size() == 1 && d.front() != k) throw PreconditionError("to_partition: descent is not at k");
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) {
    const int p = v(i) - i;
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

/// All of S_n, lexicographic.
inline std::vector<Permutation> permutations_of(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace schubert
