#pragma once

/**
 * @file structure.hpp
 * @brief The catalog of maximal palindromic factors of W^(k).
 *
 * Every maximal palindrome of W^(k) (length >= 2) is ki (+) t for a template
 * t from one of four families:
 *
 *   P1  W_n n^{-1}                                   2 <= n <= k-1, i >= 0
 *   P2  R^R j R,  R = W_{j-1} ... W_{n-k+1}          k <= n <= 2k-3, n-k+2 <= j <= k-1, i >= 0
 *   P3  W_m W_m m^{-1},  W_m W_m W_m m^{-1}          1 <= m <= k-2 (m = n-2k+1), i >= 1
 *   P4  W_{k-1} W_{k-1} (k-1)^{-1},
 *       0^{-1} W_{k-1} W_{k-1} W_{k-1} (0 (k-1))^{-1},  00                           i >= 1
 *
 * Every template contains the digit 0, so the shift of a catalog word is its
 * smallest digit.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kbonacci/counting.hpp"
#include "kbonacci/error.hpp"
#include "kbonacci/generate.hpp"
#include "kbonacci/palindrome.hpp"
#include "kbonacci/word.hpp"

namespace kbonacci {

enum class PalFamily { P1, P2, P3, P4 };
enum class PalVariant { None, Double, Triple, KK };

inline const char* to_string(PalFamily f) {
  switch (f) {
    case PalFamily::P1: return "P1";
    case PalFamily::P2: return "P2";
    case PalFamily::P3: return "P3";
    case PalFamily::P4: return "P4";
  }
  return "?";
}

inline const char* to_string(PalVariant v) {
  switch (v) {
    case PalVariant::None: return "";
    case PalVariant::Double: return "double";
    case PalVariant::Triple: return "triple";
    case PalVariant::KK: return "kk";
  }
  return "?";
}

/// Smallest shift allowed in a family.
inline std::uint64_t min_shift(PalFamily f) {
  return f == PalFamily::P1 || f == PalFamily::P2 ? 0 : 1;
}

/// Names one catalog element. Unused parameters stay zero.
struct PalClass {
  PalFamily family = PalFamily::P1;
  std::uint64_t shift = 0;  ///< i, the word is ki (+) template
  int n = 0;                ///< P1: n; P2: n
  int j = 0;                ///< P2: j
  int m = 0;                ///< P3: m = n - 2k + 1
  PalVariant variant = PalVariant::None;

  friend bool operator==(const PalClass&, const PalClass&) = default;
  friend auto operator<=>(const PalClass&, const PalClass&) = default;
};

inline std::string to_string(const PalClass& c) {
  std::string out = std::string(to_string(c.family)) + "(i=" + std::to_string(c.shift);
  switch (c.family) {
    case PalFamily::P1: out += ",n=" + std::to_string(c.n); break;
    case PalFamily::P2: out += ",n=" + std::to_string(c.n) + ",j=" + std::to_string(c.j); break;
    case PalFamily::P3: out += ",m=" + std::to_string(c.m) + "," + to_string(c.variant); break;
    case PalFamily::P4: out += std::string(",") + to_string(c.variant); break;
  }
  return out + ")";
}

struct CatalogEntry {
  Word word;
  PalClass cls;
};

/// (left, right) split of a straddling palindrome at the final cut.
struct StraddlingPair {
  Word left;
  Word right;

  [[nodiscard]] Word joined() const { return left + right; }
  friend bool operator==(const StraddlingPair&, const StraddlingPair&) = default;
};

namespace detail {

/// W_{hi} W_{hi-1} ... W_{lo}.
inline Word block_product(const WordTable& w, int hi, int lo) {
  Word out;
  for (int i = hi; i >= lo; --i) {
    out += w[i];
  }
  return out;
}

inline void require_bordering_range(int k, int n, int j) {
  require_palindrome_k(k);
  if (n < k || n > 2 * k - 3 || j < n - k + 2 || j > k - 1) {
    throw DomainError("(n, j) = (" + std::to_string(n) + ", " + std::to_string(j) +
                      ") is outside k <= n <= 2k-3, n-k+2 <= j <= k-1 for k = " + std::to_string(k));
  }
}

}  // namespace detail

/// (W_{j-1} ... W_{n-k+1})^R j (W_{j-1} ... W_{n-k+1}).
inline Word maximal_bordering_word(int k, int n, int j) {
  detail::require_bordering_range(k, n, j);
  const WordTable w(k, k - 1);
  const Word core = detail::block_product(w, j - 1, n - k + 1);
  Word out = core.reversed();
  out.push_back(static_cast<Digit>(j));
  out += core;
  return out;
}

/// Where the maximal bordering palindrome of type j sits in W_n: centered on
/// the last digit of block W_j of W_n = W_{n-1} ... W_{n-k+1} (k (+) W_{n-k}).
inline Occurrence maximal_bordering_occurrence(int k, int n, int j) {
  detail::require_bordering_range(k, n, j);
  std::size_t center = 0;
  for (int i = n - 1; i >= j; --i) {
    center += static_cast<std::size_t>(word_length(k, i));
  }
  const auto len = static_cast<std::size_t>(border_max_length(k, n, j));
  return Occurrence{center - (len - 1) / 2, len};
}

/// The maximal straddling palindromes of W_n, split at the final cut. Empty
/// outside 2k-1 <= n <= 3k-2.
inline std::vector<StraddlingPair> maximal_straddling_words(int k, int n) {
  require_palindrome_k(k);
  require_index(n);
  const Digit kk = static_cast<Digit>(k);
  if (n == 2 * k - 1) {
    return {StraddlingPair{Word{kk}, Word{kk}}};
  }
  if (n > 2 * k - 1 && n < 3 * k - 2) {
    const int m = n - 2 * k + 1;
    const Word wm = word(k, m);
    const Word core = wm.drop_back(1);
    return {StraddlingPair{shift_add(kk, wm), shift_add(kk, core)},
            StraddlingPair{shift_add(kk, wm), shift_add(kk, wm + core)}};
  }
  if (n == 3 * k - 2) {
    const Word w = word(k, k - 1);
    return {StraddlingPair{shift_add(kk, w), shift_add(kk, w.drop_back(1))},
            StraddlingPair{shift_add(kk, w.drop_front(1)), shift_add(kk, (w + w).drop_back(2))}};
  }
  return {};
}

/**
 * Shift-0 templates of all four families for one k. Built once; elements at
 * larger shifts are produced on demand.
 */
class Catalog {
 public:
  explicit Catalog(int k) : k_(k) {
    require_palindrome_k(k);
    const WordTable w(k, k - 1);
    for (int n = 2; n <= k - 1; ++n) {
      add(w[n].drop_back(1), PalClass{PalFamily::P1, 0, n, 0, 0, PalVariant::None});
    }
    for (int n = k; n <= 2 * k - 3; ++n) {
      for (int j = n - k + 2; j <= k - 1; ++j) {
        const Word core = detail::block_product(w, j - 1, n - k + 1);
        Word t = core.reversed();
        t.push_back(static_cast<Digit>(j));
        t += core;
        add(std::move(t), PalClass{PalFamily::P2, 0, n, j, 0, PalVariant::None});
      }
    }
    for (int m = 1; m <= k - 2; ++m) {
      const Word wm = w[m];
      const Word core = wm.drop_back(1);
      add(wm + core, PalClass{PalFamily::P3, 0, 0, 0, m, PalVariant::Double});
      add(wm + wm + core, PalClass{PalFamily::P3, 0, 0, 0, m, PalVariant::Triple});
    }
    const Word last = w[k - 1];
    add(last + last.drop_back(1), PalClass{PalFamily::P4, 0, 0, 0, 0, PalVariant::Double});
    add((last + last + last).drop_front(1).drop_back(2),
        PalClass{PalFamily::P4, 0, 0, 0, 0, PalVariant::Triple});
    add(Word{0, 0}, PalClass{PalFamily::P4, 0, 0, 0, 0, PalVariant::KK});
  }

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<CatalogEntry>& templates() const noexcept { return templates_; }

  /// All elements of `family` (every family when empty) with shift <= i_max.
  [[nodiscard]] std::vector<CatalogEntry> elements(std::optional<PalFamily> family,
                                                   std::uint64_t i_max) const {
    std::vector<CatalogEntry> out;
    for (const auto& t : templates_) {
      if (family && t.cls.family != *family) {
        continue;
      }
      for (std::uint64_t i = min_shift(t.cls.family); i <= i_max; ++i) {
        PalClass cls = t.cls;
        cls.shift = i;
        out.push_back({shift_add(detail::checked_mul<Digit>(static_cast<Digit>(k_), i), t.word), cls});
      }
    }
    return out;
  }

  /// Every catalog element equal to w. Families overlap, so several may match.
  [[nodiscard]] std::vector<PalClass> classify(const Word& w) const {
    if (!is_palindrome(w)) {
      throw DomainError("classify_palindrome needs a palindrome, got " + to_display(w));
    }
    std::vector<PalClass> out;
    if (w.empty()) {
      return out;
    }
    const Digit low = w.min_digit();
    if (low % static_cast<Digit>(k_) != 0) {
      return out;
    }
    const std::uint64_t shift = low / static_cast<Digit>(k_);
    const Word base = shift_sub(low, w);
    for (const auto& t : templates_) {
      if (shift >= min_shift(t.cls.family) && t.word == base) {
        PalClass cls = t.cls;
        cls.shift = shift;
        out.push_back(cls);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void add(Word w, PalClass cls) { templates_.push_back({std::move(w), cls}); }

  int k_;
  std::vector<CatalogEntry> templates_;
};

inline std::vector<CatalogEntry> catalog_elements(int k, std::optional<PalFamily> family,
                                                  std::uint64_t i_max) {
  return Catalog(k).elements(family, i_max);
}

inline std::vector<PalClass> classify_palindrome(int k, const Word& w) {
  return Catalog(k).classify(w);
}

/// Admissible palindrome lengths (>= 2) of one family, or of all families.
struct LengthSet {
  int k = 0;
  std::optional<PalFamily> family;
  FormulaMode mode = FormulaMode::Derived;
  std::set<std::size_t> lengths;

  [[nodiscard]] bool contains(std::size_t len) const { return lengths.count(len) != 0; }
  [[nodiscard]] std::size_t max() const { return lengths.empty() ? 0 : *lengths.rbegin(); }
};

namespace detail {

inline void insert_odd_range(std::set<std::size_t>& out, std::size_t top) {
  for (std::size_t len = 3; len <= top; len += 2) {
    out.insert(len);
  }
}

// The printed sets: {2i-1 : 2 <= i <= bound}, plus {2} for P4.
inline std::set<std::size_t> printed_lengths(int k, PalFamily f) {
  std::set<std::size_t> out;
  std::int64_t bound = 0;
  switch (f) {
    case PalFamily::P1: bound = pow2(k - 2); break;
    case PalFamily::P2: bound = pow2(k - 1) - 1; break;
    case PalFamily::P3: bound = 3 * pow2(k - 3); break;
    case PalFamily::P4: bound = 3 * pow2(k - 2); out.insert(2); break;
  }
  insert_odd_range(out, static_cast<std::size_t>(2 * bound - 1));
  return out;
}

}  // namespace detail

/// Derived mode collects the lengths of all centered sub-palindromes of the
/// constructed templates; AsStated returns the published ranges.
inline LengthSet length_set(int k, std::optional<PalFamily> family, FormulaMode mode) {
  require_palindrome_k(k);
  LengthSet out{k, family, mode, {}};
  const std::vector<PalFamily> families =
      family ? std::vector<PalFamily>{*family}
             : std::vector<PalFamily>{PalFamily::P1, PalFamily::P2, PalFamily::P3, PalFamily::P4};
  if (mode == FormulaMode::AsStated) {
    for (PalFamily f : families) {
      const auto part = detail::printed_lengths(k, f);
      out.lengths.insert(part.begin(), part.end());
    }
    return out;
  }
  const Catalog catalog(k);
  std::size_t max_odd = 0;
  std::size_t max_even = 0;
  for (const auto& t : catalog.templates()) {
    if (std::find(families.begin(), families.end(), t.cls.family) == families.end()) {
      continue;
    }
    const std::size_t len = t.word.size();
    if (len % 2 == 1) {
      max_odd = std::max(max_odd, len);
    } else {
      max_even = std::max(max_even, len);
    }
  }
  detail::insert_odd_range(out.lengths, max_odd);
  for (std::size_t len = 2; len <= max_even; len += 2) {
    out.lengths.insert(len);
  }
  return out;
}

inline LengthSet allowed_lengths(int k, FormulaMode mode) {
  return length_set(k, std::nullopt, mode);
}

enum class Complexity { Zero, Infinite };

inline const char* to_string(Complexity c) { return c == Complexity::Infinite ? "infinite" : "0"; }

/// Number of distinct palindromic factors of W^(k) of length len: infinite
/// for admissible lengths, zero otherwise. Length 1 is rejected.
inline Complexity complexity(int k, std::size_t len, FormulaMode mode) {
  require_palindrome_k(k);
  if (len < 2) {
    throw DomainError("palindrome complexity is only defined here for lengths >= 2");
  }
  return allowed_lengths(k, mode).contains(len) ? Complexity::Infinite : Complexity::Zero;
}

}  // namespace kbonacci
