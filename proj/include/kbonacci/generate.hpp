#pragma once

/**
 * @file generate.hpp
 * @brief k-bonacci numbers and k-bonacci words over the infinite alphabet.
 *
 * The morphism phi_k acts on a digit ki+j (0 <= j <= k-1) as
 *
 *   ki+j  ->  (ki)(ki+j+1)   if j <= k-2
 *   ki+j  ->  (ki+j+1)       if j == k-1
 *
 * and W_n = phi_k^n(0). Two independent generators are provided: iterating
 * the morphism, and the block recurrences
 *
 *   W_n = W_{n-1} W_{n-2} ... W_0 n                        (1 <= n <= k-1)
 *   W_n = W_{n-1} ... W_{n-k+1} (k (+) W_{n-k})            (n >= k)
 *
 * where (+) adds a constant to every digit. Reducing W_n mod k gives the
 * classical k-bonacci word F_n over {0, ..., k-1}.
 */

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kbonacci/error.hpp"
#include "kbonacci/word.hpp"

namespace kbonacci {

enum class GenMethod { ByMorphism, ByRecurrence };

inline constexpr std::size_t kDefaultLengthGuard = std::size_t{1} << 26;

namespace detail {
inline std::atomic<std::size_t>& length_guard_storage() {
  static std::atomic<std::size_t> guard{kDefaultLengthGuard};
  return guard;
}
}  // namespace detail

/// Maximum number of digits any generator may produce.
inline std::size_t length_guard() { return detail::length_guard_storage().load(); }
inline void set_length_guard(std::size_t max_len) { detail::length_guard_storage().store(max_len); }

/// Restores the previous guard on scope exit.
class ScopedLengthGuard {
 public:
  explicit ScopedLengthGuard(std::size_t max_len) : previous_(length_guard()) {
    set_length_guard(max_len);
  }
  ~ScopedLengthGuard() { set_length_guard(previous_); }
  ScopedLengthGuard(const ScopedLengthGuard&) = delete;
  ScopedLengthGuard& operator=(const ScopedLengthGuard&) = delete;

 private:
  std::size_t previous_;
};

/// f_n^(k): zero for n <= k-2, one at n = k-1, then the sum of the previous k terms.
inline std::uint64_t kbonacci_number(int k, int n) {
  require_generation_k(k);
  require_index(n);
  if (n < k - 1) {
    return 0;
  }
  if (n == k - 1) {
    return 1;
  }
  // Sliding window over the last k values.
  std::vector<std::uint64_t> window(static_cast<std::size_t>(k), 0);
  window.back() = 1;
  std::uint64_t sum = 1;
  std::size_t oldest = 0;
  for (int i = k; i <= n; ++i) {
    const std::uint64_t next = sum;
    sum = detail::checked_add(sum - window[oldest], next);
    window[oldest] = next;
    oldest = (oldest + 1) % window.size();
  }
  return window[(oldest + window.size() - 1) % window.size()];
}

/// |W_n^(k)| = f_{n+k}^(k).
inline std::uint64_t word_length(int k, int n) {
  require_index(n);
  return kbonacci_number(k, n + k);
}

namespace detail {

inline std::size_t guarded_length(int k, int n, const char* what) {
  std::uint64_t len = 0;
  try {
    len = word_length(k, n);
  } catch (const OverflowError&) {
    throw SizeError(std::string(what) + " for k = " + std::to_string(k) + ", n = " +
                    std::to_string(n) + " exceeds the length guard");
  }
  if (len > length_guard()) {
    throw SizeError(std::string(what) + " for k = " + std::to_string(k) + ", n = " +
                    std::to_string(n) + " has " + std::to_string(len) +
                    " digits, above the length guard of " + std::to_string(length_guard()));
  }
  return static_cast<std::size_t>(len);
}

}  // namespace detail

/// phi_k applied digit-wise.
inline Word apply_morphism(int k, const Word& w) {
  require_generation_k(k);
  const Digit kk = static_cast<Digit>(k);
  std::vector<Digit> out;
  out.reserve(w.size() * 2);
  for (Digit d : w) {
    const Digit j = d % kk;
    const Digit next = detail::checked_add<Digit>(d, 1);
    if (j + 1 < kk) {
      out.push_back(d - j);
    }
    out.push_back(next);
  }
  return Word(std::move(out));
}

/// n (+) w: adds d to every digit.
inline Word shift_add(Digit d, const Word& w) {
  std::vector<Digit> out;
  out.reserve(w.size());
  for (Digit x : w) {
    out.push_back(detail::checked_add(x, d));
  }
  return Word(std::move(out));
}

/// Inverse of shift_add; every digit must be >= d.
inline Word shift_sub(Digit d, const Word& w) {
  std::vector<Digit> out;
  out.reserve(w.size());
  for (Digit x : w) {
    if (x < d) {
      throw DomainError("cannot subtract " + std::to_string(d) + " from digit " + std::to_string(x));
    }
    out.push_back(x - d);
  }
  return Word(std::move(out));
}

inline Word reduce_mod_k(int k, const Word& w) {
  require_generation_k(k);
  std::vector<Digit> out;
  out.reserve(w.size());
  for (Digit x : w) {
    out.push_back(x % static_cast<Digit>(k));
  }
  return Word(std::move(out));
}

namespace detail {

inline Word word_by_morphism(int k, int n) {
  Word w{0};
  for (int i = 1; i <= n; ++i) {
    guarded_length(k, i, "W_n");
    w = apply_morphism(k, w);
  }
  return w;
}

// Every W_i is a prefix of W_n, so the recurrence only ever copies prefixes of
// the buffer under construction.
inline Word word_by_recurrence(int k, int n) {
  const std::size_t total = guarded_length(k, n, "W_n");
  std::vector<std::size_t> len(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    len[static_cast<std::size_t>(i)] = static_cast<std::size_t>(word_length(k, i));
  }
  std::vector<Digit> buf;
  buf.reserve(total);
  buf.push_back(0);
  auto append_prefix = [&buf](std::size_t count, Digit shift) {
    for (std::size_t t = 0; t < count; ++t) {
      buf.push_back(buf[t] + shift);
    }
  };
  for (int m = 1; m <= n; ++m) {
    // buf currently holds W_{m-1}.
    if (m < k) {
      for (int i = m - 2; i >= 0; --i) {
        append_prefix(len[static_cast<std::size_t>(i)], 0);
      }
      buf.push_back(static_cast<Digit>(m));
    } else {
      for (int i = m - 2; i >= m - k + 1; --i) {
        append_prefix(len[static_cast<std::size_t>(i)], 0);
      }
      append_prefix(len[static_cast<std::size_t>(m - k)], static_cast<Digit>(k));
    }
  }
  return Word(std::move(buf));
}

}  // namespace detail

/// W_n^(k) = phi_k^n(0).
inline Word word(int k, int n, GenMethod method = GenMethod::ByRecurrence) {
  require_generation_k(k);
  require_index(n);
  return method == GenMethod::ByMorphism ? detail::word_by_morphism(k, n)
                                         : detail::word_by_recurrence(k, n);
}

/// F_n^(k) = psi_k^n(0), with psi_k(i) = 0(i+1) for i <= k-2 and psi_k(k-1) = 0.
inline Word classical_word(int k, int n) {
  require_generation_k(k);
  require_index(n);
  const Digit last = static_cast<Digit>(k - 1);
  Word w{0};
  for (int i = 1; i <= n; ++i) {
    std::vector<Digit> out;
    out.reserve(detail::guarded_length(k, i, "F_n"));
    for (Digit d : w) {
      out.push_back(0);
      if (d != last) {
        out.push_back(d + 1);
      }
    }
    w = Word(std::move(out));
  }
  return w;
}

/// The last two digits of W_n^(k): (n-j, n) when n = j mod k with j != 0,
/// and (n-k+1, n) when k divides n.
inline std::pair<Digit, Digit> suffix_pair(int k, int n) {
  require_palindrome_k(k);
  if (n < 1) {
    throw DomainError("suffix_pair needs n >= 1, got " + std::to_string(n));
  }
  const int j = n % k;
  const int first = j != 0 ? n - j : n - k + 1;
  return {static_cast<Digit>(first), static_cast<Digit>(n)};
}

/**
 * W_0 ... W_n for a fixed k, built once. Each W_i is stored as a prefix of
 * W_n, so a table costs exactly |W_n| digits. Immutable after construction.
 */
class WordTable {
 public:
  WordTable(int k, int n_max) : k_(k), full_(word(k, n_max)) {
    for (int i = 0; i <= n_max; ++i) {
      lengths_.push_back(static_cast<std::size_t>(word_length(k, i)));
    }
  }

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int n_max() const noexcept { return static_cast<int>(lengths_.size()) - 1; }

  [[nodiscard]] std::size_t length(int i) const { return lengths_.at(index(i)); }

  [[nodiscard]] std::span<const Digit> view(int i) const {
    return full_.digits().first(length(i));
  }

  [[nodiscard]] Word operator[](int i) const { return full_.prefix(length(i)); }

 private:
  [[nodiscard]] std::size_t index(int i) const {
    if (i < 0 || i > n_max()) {
      throw DomainError("word index " + std::to_string(i) + " outside table [0, " +
                        std::to_string(n_max()) + "]");
    }
    return static_cast<std::size_t>(i);
  }

  int k_;
  Word full_;
  std::vector<std::size_t> lengths_;
};

}  // namespace kbonacci
