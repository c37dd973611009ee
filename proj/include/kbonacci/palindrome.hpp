#pragma once

/**
 * @file palindrome.hpp
 * @brief Alphabet-agnostic palindrome machinery.
 *
 * Everything here works on any sequence whose elements are equality
 * comparable; no assumption is made about alphabet size. A word of length n
 * has 2n-1 centers: center index c (0-based) sits on position c/2 when c is
 * even and on the gap between positions (c-1)/2 and (c+1)/2 when c is odd.
 * Occurrences report the doubled center 2*start + length - 1 (1-based start),
 * which equals c + 2.
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kbonacci/error.hpp"
#include "kbonacci/word.hpp"

namespace kbonacci {

/// A located palindromic factor.
struct Occurrence {
  std::size_t start = 0;   ///< 1-based
  std::size_t length = 0;

  [[nodiscard]] std::size_t end() const noexcept { return start + length - 1; }
  /// 2 * c_p, where c_p = |U| + (|P|+1)/2 for W = U P V. Even for odd-length palindromes.
  [[nodiscard]] std::size_t doubled_center() const noexcept { return 2 * start + length - 1; }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Maximal palindrome length at each of the 2n-1 centers.
class RadiusProfile {
 public:
  RadiusProfile() = default;
  explicit RadiusProfile(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {}

  [[nodiscard]] std::size_t centers() const noexcept { return lengths_.size(); }
  [[nodiscard]] std::size_t word_length() const noexcept {
    return lengths_.empty() ? 0 : (lengths_.size() + 1) / 2;
  }
  [[nodiscard]] bool empty() const noexcept { return lengths_.empty(); }

  /// Length at 0-based center index c.
  [[nodiscard]] std::size_t at_center(std::size_t c) const { return lengths_.at(c); }
  /// Odd length centered on 1-based position p.
  [[nodiscard]] std::size_t at_position(std::size_t p) const { return lengths_.at(2 * (p - 1)); }
  /// Even length centered on the gap after 1-based position p (1 <= p < n).
  [[nodiscard]] std::size_t at_gap(std::size_t p) const { return lengths_.at(2 * p - 1); }

  /// The maximal occurrence at center c; length 0 at a gap yields length 0.
  [[nodiscard]] Occurrence occurrence(std::size_t c) const {
    const std::size_t len = at_center(c);
    // doubled center = c + 2 = 2 * start + len - 1
    return Occurrence{(c + 3 - len) / 2, len};
  }

  [[nodiscard]] const std::vector<std::size_t>& lengths() const noexcept { return lengths_; }

  friend bool operator==(const RadiusProfile&, const RadiusProfile&) = default;

 private:
  std::vector<std::size_t> lengths_;
};

template <std::equality_comparable T>
bool is_palindrome(std::span<const T> s) {
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

inline bool is_palindrome(const Word& w) { return is_palindrome(w.digits()); }

/// Manacher's scan, odd and even centers together. O(n).
template <std::equality_comparable T>
RadiusProfile maximal_radii(std::span<const T> s) {
  const std::size_t n = s.size();
  if (n == 0) {
    return {};
  }
  // odd[i]: palindromes centered on i (len = 2*odd[i]-1).
  // even[i]: palindromes centered between i-1 and i (len = 2*even[i]).
  // [l, r] is the rightmost palindrome window found so far, inclusive.
  using I = std::ptrdiff_t;
  const I len = static_cast<I>(n);
  std::vector<I> odd(n), even(n);
  for (I i = 0, l = 0, r = -1; i < len; ++i) {
    I k = i > r ? 1 : std::min(odd[static_cast<std::size_t>(l + r - i)], r - i + 1);
    while (i - k >= 0 && i + k < len && s[static_cast<std::size_t>(i - k)] == s[static_cast<std::size_t>(i + k)]) {
      ++k;
    }
    odd[static_cast<std::size_t>(i)] = k--;
    if (i + k > r) {
      l = i - k;
      r = i + k;
    }
  }
  for (I i = 0, l = 0, r = -1; i < len; ++i) {
    I k = i > r ? 0 : std::min(even[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
    while (i - k - 1 >= 0 && i + k < len &&
           s[static_cast<std::size_t>(i - k - 1)] == s[static_cast<std::size_t>(i + k)]) {
      ++k;
    }
    even[static_cast<std::size_t>(i)] = k--;
    if (i + k > r) {
      l = i - k - 1;
      r = i + k;
    }
  }
  std::vector<std::size_t> lengths(2 * n - 1);
  for (std::size_t p = 0; p < n; ++p) {
    lengths[2 * p] = static_cast<std::size_t>(2 * odd[p] - 1);
    if (p + 1 < n) {
      lengths[2 * p + 1] = static_cast<std::size_t>(2 * even[p + 1]);
    }
  }
  return RadiusProfile(std::move(lengths));
}

inline RadiusProfile maximal_radii(const Word& w) { return maximal_radii(w.digits()); }

namespace detail {

inline void require_min_len(std::size_t min_len) {
  if (min_len < 1) {
    throw DomainError("min_len must be >= 1");
  }
}

/// Number of centered sub-palindromes of length >= min_len inside one of length len.
inline std::uint64_t centered_count(std::size_t len, std::size_t min_len) {
  std::size_t lo = min_len;
  if (lo % 2 != len % 2) {
    ++lo;
  }
  return len >= lo ? (len - lo) / 2 + 1 : 0;
}

}  // namespace detail

/// Number of (start, length) pairs with length >= min_len that are palindromes.
inline std::uint64_t count_occurrences(const RadiusProfile& radii, std::size_t min_len) {
  detail::require_min_len(min_len);
  std::uint64_t total = 0;
  for (std::size_t len : radii.lengths()) {
    total += detail::centered_count(len, min_len);
  }
  return total;
}

template <std::equality_comparable T>
std::uint64_t count_occurrences(std::span<const T> s, std::size_t min_len) {
  detail::require_min_len(min_len);
  return count_occurrences(maximal_radii(s), min_len);
}

inline std::uint64_t count_occurrences(const Word& w, std::size_t min_len) {
  return count_occurrences(w.digits(), min_len);
}

/// One occurrence per center whose maximal palindrome has length >= min_len,
/// ordered by doubled center.
inline std::vector<Occurrence> enumerate_maximal(const RadiusProfile& radii, std::size_t min_len) {
  detail::require_min_len(min_len);
  std::vector<Occurrence> out;
  for (std::size_t c = 0; c < radii.centers(); ++c) {
    if (radii.at_center(c) >= min_len) {
      out.push_back(radii.occurrence(c));
    }
  }
  return out;
}

template <std::equality_comparable T>
std::vector<Occurrence> enumerate_maximal(std::span<const T> s, std::size_t min_len) {
  detail::require_min_len(min_len);
  return enumerate_maximal(maximal_radii(s), min_len);
}

inline std::vector<Occurrence> enumerate_maximal(const Word& w, std::size_t min_len) {
  return enumerate_maximal(w.digits(), min_len);
}

/**
 * Palindromic tree (eertree). Nodes are the distinct nonempty palindromic
 * factors of the input; children are kept in ordered maps so that the
 * alphabet can be unbounded.
 */
template <class T>
  requires std::totally_ordered<T>
class Eertree {
 public:
  struct Node {
    std::int64_t length;
    std::size_t suffix_link;
    std::size_t first_end;  ///< 0-based end position of the first occurrence
    std::map<T, std::size_t> next;
  };

  explicit Eertree(std::span<const T> s) {
    nodes_.push_back(Node{-1, 0, 0, {}});
    nodes_.push_back(Node{0, 0, 0, {}});
    std::size_t last = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const T& c = s[i];
      std::size_t cur = find_extendable(s, i, last);
      auto hit = nodes_[cur].next.find(c);
      if (hit != nodes_[cur].next.end()) {
        last = hit->second;
        continue;
      }
      const std::int64_t len = nodes_[cur].length + 2;
      std::size_t link = 1;
      if (len > 1) {
        const std::size_t p = find_extendable(s, i, nodes_[cur].suffix_link);
        link = nodes_[p].next.at(c);
      }
      nodes_.push_back(Node{len, link, i, {}});
      const std::size_t id = nodes_.size() - 1;
      nodes_[cur].next.emplace(c, id);
      last = id;
    }
  }

  /// Number of distinct nonempty palindromic factors.
  [[nodiscard]] std::size_t distinct_count() const noexcept { return nodes_.size() - 2; }

  /// Nodes 0 and 1 are the two roots (lengths -1 and 0).
  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }

 private:
  std::size_t find_extendable(std::span<const T> s, std::size_t i, std::size_t v) const {
    while (true) {
      const std::int64_t len = nodes_[v].length;
      const std::int64_t before = static_cast<std::int64_t>(i) - 1 - len;
      if (before >= 0 && s[static_cast<std::size_t>(before)] == s[i]) {
        return v;
      }
      if (len == -1) {
        return v;  // the imaginary root always extends
      }
      v = nodes_[v].suffix_link;
    }
  }

  std::vector<Node> nodes_;
};

/// The set of distinct palindromic factors of length >= min_len.
inline std::set<Word> distinct_factors(const Word& w, std::size_t min_len) {
  detail::require_min_len(min_len);
  Eertree<Digit> tree(w.digits());
  std::set<Word> out;
  for (std::size_t v = 2; v < tree.nodes().size(); ++v) {
    const auto& node = tree.nodes()[v];
    const auto len = static_cast<std::size_t>(node.length);
    if (len >= min_len) {
      out.insert(w.slice(node.first_end + 2 - len, node.first_end + 1));
    }
  }
  return out;
}

/// Distinct palindrome lengths >= min_len occurring in the word. Each chain of
/// centered sub-palindromes is closed downward in steps of two, so the answer
/// is determined by the longest odd and the longest even maximal palindrome.
inline std::set<std::size_t> distinct_lengths(const RadiusProfile& radii, std::size_t min_len) {
  detail::require_min_len(min_len);
  std::size_t max_odd = 0;
  std::size_t max_even = 0;
  for (std::size_t len : radii.lengths()) {
    if (len % 2 == 1) {
      max_odd = std::max(max_odd, len);
    } else {
      max_even = std::max(max_even, len);
    }
  }
  std::set<std::size_t> out;
  for (std::size_t len = std::max<std::size_t>(min_len, 1); len <= std::max(max_odd, max_even); ++len) {
    if ((len % 2 == 1 && len <= max_odd) || (len % 2 == 0 && len <= max_even)) {
      out.insert(len);
    }
  }
  return out;
}

/**
 * Block structure of a word: `cuts` are after-positions (a cut c separates
 * positions c and c+1, 1-based) and `labels` names each of the cuts+1 blocks.
 * The last block is the designated final block.
 */
struct CutSpec {
  std::vector<std::size_t> cuts;
  std::vector<std::int64_t> labels;  ///< empty means 0, 1, 2, ...
};

struct CrossingCounts {
  std::uint64_t contained = 0;
  std::map<std::int64_t, std::uint64_t> bordering;  ///< keyed by the label of the start block
  std::uint64_t straddling = 0;

  [[nodiscard]] std::uint64_t total() const {
    std::uint64_t sum = contained + straddling;
    for (const auto& [label, count] : bordering) {
      sum += count;
    }
    return sum;
  }

  friend bool operator==(const CrossingCounts&, const CrossingCounts&) = default;
};

inline void validate_cuts(const CutSpec& spec, std::size_t word_len) {
  for (std::size_t i = 0; i < spec.cuts.size(); ++i) {
    const std::size_t c = spec.cuts[i];
    if (c == 0 || c >= word_len) {
      throw DomainError("cut " + std::to_string(c) + " outside word of length " +
                        std::to_string(word_len));
    }
    if (i > 0 && spec.cuts[i - 1] >= c) {
      throw DomainError("cuts must be strictly increasing");
    }
  }
  if (!spec.labels.empty() && spec.labels.size() != spec.cuts.size() + 1) {
    throw DomainError("expected " + std::to_string(spec.cuts.size() + 1) + " block labels, got " +
                      std::to_string(spec.labels.size()));
  }
}

/**
 * Sorts every palindromic occurrence of length >= min_len into one bucket:
 * straddling when it crosses the last cut; otherwise bordering (keyed by the
 * block holding its start) when it crosses any cut; otherwise contained.
 */
inline CrossingCounts classify_crossing(const Word& w, const CutSpec& spec, std::size_t min_len) {
  detail::require_min_len(min_len);
  validate_cuts(spec, w.size());
  const auto& cuts = spec.cuts;
  auto label_of = [&spec](std::size_t block) {
    return spec.labels.empty() ? static_cast<std::int64_t>(block) : spec.labels[block];
  };

  CrossingCounts out;
  for (std::size_t b = 0; b + 1 < cuts.size() + 1; ++b) {
    out.bordering[label_of(b)] = 0;
  }

  const RadiusProfile radii = maximal_radii(w);
  using I = std::int64_t;
  for (std::size_t c = 0; c < radii.centers(); ++c) {
    const std::size_t len = radii.at_center(c);
    if (len == 0) {
      continue;
    }
    // Occurrences at this center are [a - t, b + t] (1-based), t in [t_lo, t_hi].
    const bool odd = c % 2 == 0;
    const I a = odd ? static_cast<I>(c / 2) + 1 : static_cast<I>(c / 2) + 2;
    const I b = static_cast<I>(c / 2) + 1;
    const I base = b - a + 1;  // 1 or 0
    I t_lo = odd ? 0 : 1;
    const I t_hi = (static_cast<I>(len) - base) / 2;
    if (static_cast<I>(min_len) > base) {
      t_lo = std::max(t_lo, (static_cast<I>(min_len) - base + 1) / 2);
    }
    if (t_lo > t_hi) {
      continue;
    }
    if (cuts.empty()) {
      out.contained += static_cast<std::uint64_t>(t_hi - t_lo + 1);
      continue;
    }
    auto need = [a, b](I cut) { return std::max(a - cut, cut + 1 - b); };

    const I t_straddle = need(static_cast<I>(cuts.back()));
    // Nearest cuts on either side of the center.
    I t_any = std::numeric_limits<I>::max();
    auto right = std::lower_bound(cuts.begin(), cuts.end(), static_cast<std::size_t>(b));
    if (right != cuts.end()) {
      t_any = std::min(t_any, need(static_cast<I>(*right)));
    }
    if (right != cuts.begin()) {
      t_any = std::min(t_any, need(static_cast<I>(*std::prev(right))));
    }

    const I s_lo = std::max(t_lo, t_straddle);
    if (s_lo <= t_hi) {
      out.straddling += static_cast<std::uint64_t>(t_hi - s_lo + 1);
    }
    const I cross_lo = std::max(t_lo, t_any);
    const I cross_hi = std::min(t_hi, t_straddle - 1);
    const I contained_hi = std::min(t_hi, t_any - 1);
    if (contained_hi >= t_lo) {
      out.contained += static_cast<std::uint64_t>(contained_hi - t_lo + 1);
    }
    if (cross_lo > cross_hi) {
      continue;
    }
    // Starts run from a - cross_lo down to a - cross_hi; split them by block.
    I start_hi = a - cross_lo;
    const I start_lo = a - cross_hi;
    while (start_hi >= start_lo) {
      // Block index of start_hi = number of cuts strictly below it.
      const auto block = static_cast<std::size_t>(
          std::lower_bound(cuts.begin(), cuts.end(), static_cast<std::size_t>(start_hi)) - cuts.begin());
      const I block_first = block == 0 ? 1 : static_cast<I>(cuts[block - 1]) + 1;
      const I chunk_lo = std::max(start_lo, block_first);
      out.bordering[label_of(block)] += static_cast<std::uint64_t>(start_hi - chunk_lo + 1);
      start_hi = chunk_lo - 1;
    }
  }
  return out;
}

}  // namespace kbonacci
