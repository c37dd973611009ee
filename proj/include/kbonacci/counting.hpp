#pragma once

/**
 * @file counting.hpp
 * @brief Palindrome occurrence counts P(n) of W_n^(k) and their pieces.
 *
 * For n >= k the block recurrence splits every palindrome of W_n into one
 * contained in a block, a bordering palindrome of type j, or a straddling
 * palindrome, so
 *
 *   P(n) = sum_{i=n-k}^{n-1} P(i) + alpha(n),   alpha(n) = sum_j B(n, j) + S(n).
 *
 * Two modes are offered. Derived sums the bordering and straddling counts.
 * AsStated evaluates the published piecewise expression for alpha, which
 * disagrees with Derived for k >= 4 and k <= n < 2k-3. Single letters are not
 * counted (min length 2), so P(0) = P(1) = 0 and P(2) = 1.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "kbonacci/error.hpp"
#include "kbonacci/generate.hpp"

namespace kbonacci {

enum class FormulaMode { AsStated, Derived };

inline const char* to_string(FormulaMode mode) {
  return mode == FormulaMode::AsStated ? "as-stated" : "derived";
}

/// P(n) = 2^{n-1}(n-2) + 1 for 1 <= n <= k-1.
inline std::int64_t p_initial(int k, int n) {
  require_palindrome_k(k);
  if (n < 1 || n > k - 1) {
    throw DomainError("p_initial needs 1 <= n <= k-1, got n = " + std::to_string(n));
  }
  using detail::checked_add;
  using detail::checked_mul;
  return checked_add<std::int64_t>(checked_mul<std::int64_t>(detail::pow2(n - 1), n - 2), 1);
}

/// Bordering palindromes of type j in W_n: 2^j - 2^{n-k+1} inside
/// k <= n <= 2k-3, n-k+2 <= j <= k-1, and zero everywhere else.
inline std::int64_t b_count(int k, int n, int j) {
  require_palindrome_k(k);
  if (n < k) {
    throw DomainError("b_count needs n >= k, got n = " + std::to_string(n));
  }
  if (n > 2 * k - 3 || j < n - k + 2 || j > k - 1) {
    return 0;
  }
  return detail::pow2(j) - detail::pow2(n - k + 1);
}

/// Straddling palindromes of W_n.
inline std::int64_t s_count(int k, int n) {
  require_palindrome_k(k);
  require_index(n);
  if (n >= 2 * k - 1 && n < 3 * k - 2) {
    return detail::pow2(n - 2 * k + 2) - 1;
  }
  if (n == 3 * k - 2) {
    return detail::pow2(k) - 2;
  }
  return 0;
}

/// Length of the maximal bordering palindrome of type j: 2(|W_j| - |W_{n-k+1}|) + 1.
inline std::int64_t border_max_length(int k, int n, int j) {
  require_palindrome_k(k);
  if (n < k || n > 2 * k - 3 || j < n - k + 2 || j > k - 1) {
    throw DomainError("no bordering palindrome of type " + std::to_string(j) + " in W_" +
                      std::to_string(n) + " for k = " + std::to_string(k));
  }
  const auto wj = static_cast<std::int64_t>(word_length(k, j));
  const auto wl = static_cast<std::int64_t>(word_length(k, n - k + 1));
  return 2 * (wj - wl) + 1;
}

/// Total bordering count for k <= n <= 2k-3 in closed form: 2^k - (2k-n) 2^{n-k+1}.
inline std::int64_t bordering_total_closed_form(int k, int n) {
  require_palindrome_k(k);
  if (n < k || n > 2 * k - 3) {
    throw DomainError("closed form holds for k <= n <= 2k-3");
  }
  return detail::pow2(k) - detail::checked_mul<std::int64_t>(2 * k - n, detail::pow2(n - k + 1));
}

/// alpha(n) for n >= k.
inline std::int64_t alpha(int k, int n, FormulaMode mode = FormulaMode::Derived) {
  require_palindrome_k(k);
  if (n < k) {
    throw DomainError("alpha needs n >= k, got n = " + std::to_string(n));
  }
  if (mode == FormulaMode::Derived) {
    std::int64_t sum = s_count(k, n);
    for (int j = n - k + 2; j <= n - 1; ++j) {
      sum = detail::checked_add(sum, b_count(k, n, j));
    }
    return sum;
  }
  using detail::pow2;
  if (n <= 2 * k - 3) {
    const std::int64_t middle = detail::checked_mul<std::int64_t>(k - 3, pow2(n - k + 2));
    const std::int64_t tail = detail::checked_mul<std::int64_t>(n, pow2(n - k + 1));
    return detail::checked_sub(detail::checked_add(pow2(k), middle), tail);
  }
  if (n == 2 * k - 2) {
    return 0;
  }
  if (n <= 3 * k - 3) {
    return pow2(n - 2 * k + 2) - 1;
  }
  if (n == 3 * k - 2) {
    return pow2(k) - 2;
  }
  return 0;
}

/// P(n) for every n in [0, n_max].
struct CountTable {
  int k = 0;
  FormulaMode mode = FormulaMode::Derived;
  std::vector<std::int64_t> p;                   ///< P[n]
  std::vector<std::int64_t> alpha;               ///< alpha[n], zero for n < k
  std::vector<std::int64_t> s;                   ///< S[n], zero for n < k
  std::vector<std::vector<std::int64_t>> b;      ///< b[n][j] for 0 <= j < n, zero for n < k

  [[nodiscard]] int n_max() const { return static_cast<int>(p.size()) - 1; }
};

inline CountTable count_table(int k, int n_max, FormulaMode mode = FormulaMode::Derived) {
  require_palindrome_k(k);
  require_index(n_max, "n_max");
  CountTable t;
  t.k = k;
  t.mode = mode;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    std::int64_t a = 0;
    std::int64_t s = 0;
    std::int64_t p = 0;
    if (n >= 1 && n <= k - 1) {
      p = p_initial(k, n);
    } else if (n >= k) {
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = b_count(k, n, j);
      }
      s = s_count(k, n);
      a = alpha(k, n, mode);
      p = a;
      for (int i = n - k; i <= n - 1; ++i) {
        p = detail::checked_add(p, t.p[static_cast<std::size_t>(i)]);
      }
    }
    t.p.push_back(p);
    t.alpha.push_back(a);
    t.s.push_back(s);
    t.b.push_back(std::move(row));
  }
  return t;
}

/// P(n): zero at n = 0, the closed form below k, the recurrence from k on.
inline std::int64_t p_total(int k, int n, FormulaMode mode = FormulaMode::Derived) {
  require_index(n);
  return count_table(k, n, mode).p.back();
}

}  // namespace kbonacci
