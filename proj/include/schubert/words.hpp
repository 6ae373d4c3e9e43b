#pragma once

// Reduced words, run decompositions, descent compositions and compatible
// sequences.
//
// A reduced word (i_k, ..., i_1) is stored in the order it is written. It
// names w = s_{i_k} ... s_{i_1}: starting from the identity and swapping
// positions i_1, then i_2, ..., then i_k yields w in one-line notation. The
// leftmost letter is therefore always a descent of w.

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"
#include "schubert/perm.hpp"

namespace schubert {

struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

/// Product of the simple transpositions named by `letters` (right to left).
inline Permutation permutation_of(const std::vector<int>& letters) {
  std::vector<int> v;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int i = *it;
    if (i < 1) throw PreconditionError("simple transposition indices are positive");
    while (v.size() < static_cast<std::size_t>(i) + 1) v.push_back(static_cast<int>(v.size()) + 1);
    std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(i)]);
  }
  return Permutation(std::move(v));
}

inline bool is_reduced(const std::vector<int>& letters) {
  return static_cast<std::size_t>(length(permutation_of(letters))) == letters.size();
}

using ReducedWordSet = std::shared_ptr<const std::vector<ReducedWord>>;

namespace detail {

struct WordHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Bounded, thread-safe memo of R(w) keyed by canonical word. Eviction is
/// first-in first-out once limits().cache_entries is reached.
class ReducedWordCache {
 public:
  ReducedWordSet find(const Permutation& w) {
    std::lock_guard lock(mutex_);
    auto it = map_.find(w.word());
    return it == map_.end() ? nullptr : it->second;
  }

  void insert(const Permutation& w, ReducedWordSet words) {
    const std::size_t cap = limits().cache_entries.load(std::memory_order_relaxed);
    std::lock_guard lock(mutex_);
    if (cap == 0 || map_.count(w.word()) != 0) return;
    while (map_.size() >= cap && !order_.empty()) {
      map_.erase(order_.front());
      order_.pop_front();
    }
    map_.emplace(w.word(), std::move(words));
    order_.push_back(w.word());
  }

  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
    order_.clear();
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return map_.size();
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::vector<int>, ReducedWordSet, WordHash> map_;
  std::deque<std::vector<int>> order_;
};

inline ReducedWordCache& reduced_word_cache() {
  static ReducedWordCache cache;
  return cache;
}

}  // namespace detail

/// R(w) in lexicographic order. Words starting with descent d are d followed
/// by the words of w * s_d.
inline ReducedWordSet reduced_words(const Permutation& w) {
  auto& cache = detail::reduced_word_cache();
  if (auto hit = cache.find(w)) return hit;

  auto out = std::make_shared<std::vector<ReducedWord>>();
  if (w.is_identity()) {
    out->push_back(ReducedWord{});
  } else {
    for (int d : descent_set(w)) {
      const auto tail = reduced_words(apply_transposition(w, Transposition(d, d + 1)));
      check_term_count(out->size() + tail->size(), "reduced word enumeration");
      for (const auto& t : *tail) {
        ReducedWord r;
        r.letters.reserve(t.size() + 1);
        r.letters.push_back(d);
        r.letters.insert(r.letters.end(), t.letters.begin(), t.letters.end());
        out->push_back(std::move(r));
      }
    }
  }
  ReducedWordSet result = std::move(out);
  cache.insert(w, result);
  return result;
}

/// Maximal strictly increasing blocks, stored leftmost first. In the
/// conventional indexing the leftmost block is rho^(k) and the rightmost is
/// rho^(1); run(i) follows that convention.
struct RunDecomposition {
  std::vector<std::vector<int>> runs;

  std::size_t count() const noexcept { return runs.size(); }
  /// 1-based, counted from the right.
  const std::vector<int>& run(std::size_t i) const { return runs.at(runs.size() - i); }
};

inline RunDecomposition run_decomposition(const ReducedWord& rho) {
  RunDecomposition rd;
  for (std::size_t j = 0; j < rho.letters.size(); ++j) {
    if (j == 0 || rho.letters[j - 1] >= rho.letters[j]) rd.runs.emplace_back();
    rd.runs.back().push_back(rho.letters[j]);
  }
  return rd;
}

/// des(rho), or nullopt when rho is virtual. Trailing zeros are stripped.
inline std::optional<WeakComposition> weak_descent_composition(const ReducedWord& rho) {
  const auto rd = run_decomposition(rho);
  const std::size_t k = rd.count();
  if (k == 0) return WeakComposition{};
  std::vector<int> r(k + 1, 0);
  r[k] = rd.run(k).front();
  for (std::size_t i = k - 1; i >= 1; --i) r[i] = std::min(rd.run(i).front(), r[i + 1] - 1);
  if (r[1] <= 0) return std::nullopt;
  std::vector<int> parts(static_cast<std::size_t>(r[k]), 0);
  for (std::size_t i = 1; i <= k; ++i) parts[static_cast<std::size_t>(r[i]) - 1] = static_cast<int>(rd.run(i).size());
  return WeakComposition(std::move(parts));
}

/// Des(rho): run sizes listed rightmost run first.
inline StrongComposition strong_descent_composition(const ReducedWord& rho) {
  const auto rd = run_decomposition(rho);
  std::vector<int> parts;
  for (std::size_t i = 1; i <= rd.count(); ++i) parts.push_back(static_cast<int>(rd.run(i).size()));
  return StrongComposition(std::move(parts));
}

using CompatibleSequence = std::vector<int>;

// Compatibility pairs alpha_j with the j-th letter of the word read from the
// right: with r = reverse(rho), alpha is weakly increasing, alpha_j <= r_j,
// and alpha_j < alpha_{j+1} whenever r_j < r_{j+1}.

/// Every compatible sequence for rho, lexicographic.
inline std::vector<CompatibleSequence> compatible_sequences(const ReducedWord& rho) {
  const std::vector<int> r(rho.letters.rbegin(), rho.letters.rend());
  std::vector<CompatibleSequence> out;
  CompatibleSequence cur(r.size(), 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == r.size()) {
      out.push_back(cur);
      return;
    }
    int lo = 1;
    if (j > 0) lo = (r[j - 1] < r[j]) ? cur[j - 1] + 1 : cur[j - 1];
    for (int a = lo; a <= r[j]; ++a) {
      cur[j] = a;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Entrywise-largest compatible sequence, built right to left; nullopt if none exists.
inline std::optional<CompatibleSequence> greedy_compatible(const ReducedWord& rho) {
  const std::vector<int> r(rho.letters.rbegin(), rho.letters.rend());
  CompatibleSequence alpha(r.size(), 0);
  for (std::size_t j = r.size(); j-- > 0;) {
    int a = r[j];
    if (j + 1 < r.size()) a = std::min(a, r[j] < r[j + 1] ? alpha[j + 1] - 1 : alpha[j + 1]);
    if (a < 1) return std::nullopt;
    alpha[j] = a;
  }
  return alpha;
}

/// Multiplicity vector: part i counts the entries equal to i.
inline WeakComposition sequence_weight(const CompatibleSequence& alpha) {
  std::vector<int> parts;
  for (int a : alpha) {
    if (static_cast<std::size_t>(a) > parts.size()) parts.resize(static_cast<std::size_t>(a), 0);
    ++parts[static_cast<std::size_t>(a) - 1];
  }
  return WeakComposition(std::move(parts));
}

/// Letters shifted up by m; a reduced word for 1^m x w when rho is one for w.
inline ReducedWord shift_word(const ReducedWord& rho, int m) {
  ReducedWord out = rho;
  for (int& x : out.letters) x += m;
  return out;
}

}  // namespace schubert
