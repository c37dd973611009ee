#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kbonacci {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter outside the documented domain (k too small, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A generated word would exceed the configured length guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class T>
constexpr T checked_add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

template <class T>
constexpr T checked_sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return out;
}

template <class T>
constexpr T checked_mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

/// 2^e as a signed 64-bit value; e must lie in [0, 62].
constexpr std::int64_t pow2(std::int64_t e) {
  if (e < 0) {
    throw DomainError("negative exponent " + std::to_string(e));
  }
  if (e > 62) {
    throw OverflowError("2^" + std::to_string(e) + " does not fit in 64 bits");
  }
  return std::int64_t{1} << e;
}

}  // namespace detail

inline void require_generation_k(int k) {
  if (k < 2) {
    throw DomainError("k must be >= 2 for word generation, got " + std::to_string(k));
  }
}

// The palindrome theory only holds for k > 2.
inline void require_palindrome_k(int k) {
  if (k < 3) {
    throw DomainError("k must be >= 3 for palindrome operations, got " + std::to_string(k));
  }
}

inline void require_index(int n, const char* what = "n") {
  if (n < 0) {
    throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(n));
  }
}

}  // namespace kbonacci
