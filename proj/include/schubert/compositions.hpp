#pragma once

// Weak compositions, strong compositions and partitions.
//
// All three are thin value wrappers around a vector of parts; the wrapper
// fixes which invariant holds. Part access through part() is 1-based and
// reads zero past the end, matching how exponent and descent data are
// indexed throughout the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "schubert/core.hpp"

namespace schubert {

namespace detail {

template <class Derived>
class PartsBase {
 public:
  using const_iterator = std::vector<int>::const_iterator;

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const_iterator begin() const noexcept { return parts_.begin(); }
  const_iterator end() const noexcept { return parts_.end(); }

  /// 1-based; zero beyond the stored length.
  int part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend bool operator==(const Derived& x, const Derived& y) noexcept { return x.parts_ == y.parts_; }
  friend std::strong_ordering operator<=>(const Derived& x, const Derived& y) noexcept {
    return x.parts_ <=> y.parts_;
  }

 protected:
  PartsBase() = default;
  explicit PartsBase(std::vector<int> parts) : parts_(std::move(parts)) {}

  std::vector<int> parts_;
};

}  // namespace detail

class WeakComposition : public detail::PartsBase<WeakComposition> {
 public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}
  explicit WeakComposition(std::vector<int> parts) : PartsBase(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) throw PreconditionError("weak composition parts must be nonnegative");
    }
  }

  /// Copy with trailing zeros removed.
  WeakComposition stripped() const {
    std::vector<int> v = parts_;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return WeakComposition(std::move(v));
  }

  /// Copy extended with zeros to at least `n` parts.
  WeakComposition padded(std::size_t n) const {
    std::vector<int> v = parts_;
    if (v.size() < n) v.resize(n, 0);
    return WeakComposition(std::move(v));
  }
};

class StrongComposition : public detail::PartsBase<StrongComposition> {
 public:
  StrongComposition() = default;
  StrongComposition(std::initializer_list<int> parts) : StrongComposition(std::vector<int>(parts)) {}
  explicit StrongComposition(std::vector<int> parts) : PartsBase(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw PreconditionError("strong composition parts must be positive");
    }
  }
};

class Partition : public detail::PartsBase<Partition> {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : PartsBase(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    }
  }
};

/// Removes zero parts, keeping order.
inline StrongComposition flatten(const WeakComposition& a) {
  std::vector<int> v;
  for (int p : a) {
    if (p != 0) v.push_back(p);
  }
  return StrongComposition(std::move(v));
}

/// True iff `coarse` is obtained from `fine` by summing consecutive blocks.
inline bool refines(const StrongComposition& fine, const StrongComposition& coarse) {
  std::size_t j = 0;
  int acc = 0;
  for (int p : fine) {
    if (j >= coarse.size()) return false;
    acc += p;
    const int target = coarse.parts()[j];
    if (acc > target) return false;
    if (acc == target) {
      ++j;
      acc = 0;
    }
  }
  return acc == 0 && j == coarse.size();
}

/// Prefix-sum dominance b >= a, both padded with zeros to a common length.
inline bool dominates(const WeakComposition& b, const WeakComposition& a) {
  const std::size_t n = std::max(a.size(), b.size());
  long sb = 0;
  long sa = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    sb += b.part(i);
    sa += a.part(i);
    if (sb < sa) return false;
  }
  return true;
}

/// All weak compositions of `weight` with exactly `length` parts, lexicographic order.
inline std::vector<WeakComposition> weak_compositions(int weight, int length) {
  std::vector<WeakComposition> out;
  if (weight < 0 || length < 0) return out;
  if (length == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == cur.size()) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      cur[pos] = p;
      self(self, pos + 1, left - p);
    }
  };
  rec(rec, 0, weight);
  return out;
}

/// Partitions of `n`, parts in decreasing order, listed in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace schubert
