#pragma once

// Shared error types, checked coefficient arithmetic and global limits.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schubert {

using Coeff = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (permutation, composition, chain, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration grew past `limits().max_terms`.
class TermLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The Schubert-basis oracle found no solution in the requested ambient group.
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// Slide-basis elimination did not terminate.
class NonExpandable : public Error {
 public:
  using Error::Error;
};

/// A proven identity failed at runtime. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

/// Process-wide knobs. Both are read on every use, so changes take effect immediately.
struct Limits {
  /// Cap on the size of any single enumeration (monomials of one slide
  /// polynomial, reduced words of one permutation, worklist terms).
  std::atomic<std::size_t> max_terms{1'000'000};
  /// Number of permutations whose reduced-word sets are memoized.
  std::atomic<std::size_t> cache_entries{10'000};
};

inline Limits& limits() {
  static Limits instance;
  return instance;
}

inline void check_term_count(std::size_t count, const char* what) {
  const std::size_t cap = limits().max_terms.load(std::memory_order_relaxed);
  if (count > cap) {
    throw TermLimitExceeded(std::string(what) + " exceeded the term cap of " + std::to_string(cap));
  }
}

}  // namespace schubert
