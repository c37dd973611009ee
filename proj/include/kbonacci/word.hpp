#pragma once

/**
 * @file word.hpp
 * @brief Finite words over the alphabet of nonnegative integers.
 *
 * A Word is a value type wrapping a sequence of digits. Public positions are
 * 1-based and slices are inclusive, so `w.slice(j, jp)` is w_j ... w_jp.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kbonacci/error.hpp"

namespace kbonacci {

using Digit = std::uint64_t;

class Word {
 public:
  using value_type = Digit;
  using const_iterator = std::vector<Digit>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Digit> digits) : digits_(std::move(digits)) {}
  Word(std::initializer_list<Digit> digits) : digits_(digits) {}

  /// Parses "0102" (one character per digit) or a list separated by
  /// spaces and/or commas ("4 5 10", "4,5,10").
  static Word parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return digits_.empty(); }
  [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }
  [[nodiscard]] const std::vector<Digit>& vector() const noexcept { return digits_; }

  const_iterator begin() const noexcept { return digits_.begin(); }
  const_iterator end() const noexcept { return digits_.end(); }

  /// Digit at 1-based position `pos`.
  [[nodiscard]] Digit at(std::size_t pos) const {
    if (pos == 0 || pos > digits_.size()) {
      throw DomainError("position " + std::to_string(pos) + " outside word of length " +
                        std::to_string(digits_.size()));
    }
    return digits_[pos - 1];
  }

  [[nodiscard]] Digit front() const { return at(1); }
  [[nodiscard]] Digit back() const { return at(digits_.size()); }

  /// W[first, last], 1-based and inclusive. An empty slice is allowed when last == first - 1.
  [[nodiscard]] Word slice(std::size_t first, std::size_t last) const {
    if (first == 0 || last > digits_.size() || last + 1 < first) {
      throw DomainError("slice [" + std::to_string(first) + ", " + std::to_string(last) +
                        "] outside word of length " + std::to_string(digits_.size()));
    }
    return Word(std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                                   digits_.begin() + static_cast<std::ptrdiff_t>(last)));
  }

  [[nodiscard]] Word prefix(std::size_t length) const { return slice(1, length); }
  [[nodiscard]] Word suffix(std::size_t length) const {
    if (length > digits_.size()) {
      throw DomainError("suffix longer than word");
    }
    return slice(digits_.size() - length + 1, digits_.size());
  }

  /// W with its first `count` digits removed (written U^{-1}W).
  [[nodiscard]] Word drop_front(std::size_t count) const {
    return slice(count + 1, digits_.size());
  }
  /// W with its last `count` digits removed (WU^{-1}).
  [[nodiscard]] Word drop_back(std::size_t count) const {
    if (count > digits_.size()) {
      throw DomainError("cannot drop more digits than the word has");
    }
    return slice(1, digits_.size() - count);
  }

  [[nodiscard]] Word reversed() const {
    return Word(std::vector<Digit>(digits_.rbegin(), digits_.rend()));
  }

  [[nodiscard]] std::set<Digit> alphabet() const { return {digits_.begin(), digits_.end()}; }

  [[nodiscard]] std::size_t count(Digit a) const {
    return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), a));
  }

  [[nodiscard]] Digit max_digit() const {
    if (digits_.empty()) {
      throw DomainError("empty word has no largest digit");
    }
    return *std::max_element(digits_.begin(), digits_.end());
  }

  [[nodiscard]] Digit min_digit() const {
    if (digits_.empty()) {
      throw DomainError("empty word has no smallest digit");
    }
    return *std::min_element(digits_.begin(), digits_.end());
  }

  [[nodiscard]] bool starts_with(const Word& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
  }

  [[nodiscard]] bool ends_with(const Word& s) const {
    return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
  }

  /// 1-based start of the first occurrence of `f`, or 0 when absent.
  [[nodiscard]] std::size_t find(const Word& f) const {
    if (f.empty()) {
      return 1;
    }
    auto it = std::search(digits_.begin(), digits_.end(),
                          std::boyer_moore_horspool_searcher(f.begin(), f.end()));
    return it == digits_.end() ? 0 : static_cast<std::size_t>(it - digits_.begin()) + 1;
  }

  [[nodiscard]] bool contains(const Word& f) const { return find(f) != 0; }

  void push_back(Digit d) { digits_.push_back(d); }
  void reserve(std::size_t n) { digits_.reserve(n); }

  Word& operator+=(const Word& rhs) {
    digits_.insert(digits_.end(), rhs.begin(), rhs.end());
    return *this;
  }

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Digits concatenated with no separator. Refused when a digit exceeds 9,
/// since the result would be ambiguous.
inline std::string to_plain(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Digit d : w) {
    if (d > 9) {
      throw DomainError("digit " + std::to_string(d) +
                        " exceeds 9; plain output is ambiguous, use spaced or json");
    }
    out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

inline std::string to_spaced(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      out.push_back(' ');
    }
    out += std::to_string(w.digits()[i]);
  }
  return out;
}

/// Plain rendering when unambiguous, spaced otherwise. Used for diagnostics.
inline std::string to_display(const Word& w) {
  const bool small = std::all_of(w.begin(), w.end(), [](Digit d) { return d <= 9; });
  return small ? to_plain(w) : to_spaced(w);
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_display(w); }

inline Word Word::parse(std::string_view text) {
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  std::vector<Digit> digits;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw DomainError("invalid digit character '" + std::string(1, c) + "'");
      }
      digits.push_back(static_cast<Digit>(c - '0'));
    }
    return Word(std::move(digits));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) {
      ++i;
    }
    if (i == text.size()) {
      break;
    }
    Digit value = 0;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = detail::checked_add(detail::checked_mul<Digit>(value, 10),
                                  static_cast<Digit>(text[i] - '0'));
      ++i;
    }
    if (i == start || (i < text.size() && text[i] != ' ' && text[i] != ',' && text[i] != '\t')) {
      throw DomainError("malformed word \"" + std::string(text) + "\"");
    }
    digits.push_back(value);
  }
  return Word(std::move(digits));
}

}  // namespace kbonacci
