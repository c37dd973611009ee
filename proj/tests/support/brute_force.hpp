#pragma once

// Slow reference implementations used as oracles by the tests. Nothing here
// shares code with the library beyond the Word container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "kbonacci/word.hpp"

namespace kbonacci::brute {

// pal[i][j]: w[i..j] (0-based, inclusive) is a palindrome.
class PalTable {
 public:
  explicit PalTable(const std::vector<Digit>& w) : n_(w.size()), pal_(n_ * n_, false) {
    for (std::size_t len = 1; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len - 1;
        pal_[i * n_ + j] = w[i] == w[j] && (len <= 2 || pal_[(i + 1) * n_ + (j - 1)]);
      }
    }
  }

  [[nodiscard]] bool operator()(std::size_t i, std::size_t j) const { return pal_[i * n_ + j]; }
  [[nodiscard]] std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<bool> pal_;
};

inline bool is_pal(const std::vector<Digit>& w) {
  return std::equal(w.begin(), w.end(), w.rbegin());
}

// Longest palindrome at each of the 2n-1 centers by direct expansion.
inline std::vector<std::size_t> radii(const std::vector<Digit>& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; n != 0 && c < 2 * n - 1; ++c) {
    std::ptrdiff_t l = static_cast<std::ptrdiff_t>(c / 2);
    std::ptrdiff_t r = static_cast<std::ptrdiff_t>(c % 2 == 0 ? c / 2 : c / 2 + 1);
    std::size_t len = 0;
    while (l >= 0 && r < static_cast<std::ptrdiff_t>(n) && w[l] == w[r]) {
      len = static_cast<std::size_t>(r - l + 1);
      --l;
      ++r;
    }
    out.push_back(len);
  }
  return out;
}

// Number of (i, j) with w[i..j] a palindrome of length >= min_len.
inline std::uint64_t count(const std::vector<Digit>& w, std::size_t min_len) {
  const PalTable t(w);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      total += (j - i + 1 >= min_len && t(i, j)) ? 1 : 0;
    }
  }
  return total;
}

// (1-based start, length) of every palindrome that cannot be extended on both sides.
inline std::vector<std::pair<std::size_t, std::size_t>> maximal(const std::vector<Digit>& w,
                                                               std::size_t min_len) {
  const PalTable t(w);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      if (j - i + 1 < min_len || !t(i, j)) {
        continue;
      }
      const bool extends = i > 0 && j + 1 < w.size() && t(i - 1, j + 1);
      if (!extends) {
        out.emplace_back(i + 1, j - i + 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every distinct palindromic factor, cubic in the word length.
inline std::set<std::vector<Digit>> distinct(const std::vector<Digit>& w, std::size_t min_len) {
  std::set<std::vector<Digit>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      std::vector<Digit> f(w.begin() + static_cast<std::ptrdiff_t>(i),
                           w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      if (f.size() >= min_len && is_pal(f)) {
        out.insert(std::move(f));
      }
    }
  }
  return out;
}

struct Buckets {
  std::uint64_t contained = 0;
  std::map<std::size_t, std::uint64_t> bordering;  // by 0-based start block
  std::uint64_t straddling = 0;
};

// cuts are after-positions (1-based), strictly increasing; the last block is final.
inline Buckets crossing(const std::vector<Digit>& w, const std::vector<std::size_t>& cuts,
                        std::size_t min_len) {
  const PalTable t(w);
  auto block_of = [&cuts](std::size_t pos1) {
    return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), pos1) - cuts.begin());
  };
  Buckets out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      if (j - i + 1 < min_len || !t(i, j)) {
        continue;
      }
      const std::size_t first = block_of(i + 1);
      const std::size_t last = block_of(j + 1);
      if (first == last) {
        ++out.contained;
      } else if (last == cuts.size()) {
        ++out.straddling;
      } else {
        ++out.bordering[first];
      }
    }
  }
  return out;
}

inline std::vector<Digit> random_word(std::mt19937_64& rng, std::size_t max_len, Digit alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<Digit> digit(0, alphabet - 1);
  std::vector<Digit> w(len_dist(rng));
  for (auto& d : w) {
    d = digit(rng);
  }
  return w;
}

// Random words skewed towards small alphabets and planted repetitions, so
// long palindromes are common.
inline std::vector<Digit> random_palindrome_rich(std::mt19937_64& rng, std::size_t max_len,
                                                 Digit max_alphabet) {
  std::uniform_int_distribution<Digit> alpha(1, max_alphabet);
  std::vector<Digit> w = random_word(rng, max_len, alpha(rng));
  std::uniform_int_distribution<int> coin(0, 2);
  if (coin(rng) == 0 && !w.empty()) {
    std::vector<Digit> half(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2));
    std::vector<Digit> pal = half;
    pal.insert(pal.end(), half.rbegin(), half.rend());
    pal.resize(std::min(pal.size(), max_len));
    return pal;
  }
  return w;
}

}  // namespace kbonacci::brute
