#pragma once

/*
 * Colored permutations U_m wr S_n and colored arrangements U_m wr S_I.
 *
 * Colors are stored as values in [1, m]; the value m plays the role of 0
 * mod m and is called the neutral color.  A colored arrangement
 * theta = (phi, eps) lists, for positions 1..n, a value phi(i) of the
 * multiset I and a color eps(i).  A colored permutation is the special case
 * I = [n].  Positions are 1-based in text and in the public accessors'
 * values; the vectors themselves are 0-indexed.
 *
 * Right action of (sigma, alpha) on (phi, eps):
 *
 *     psi(i) = phi(sigma(i)),   eta(i) = eps(sigma(i)) + alpha(i)  (mod m)
 *
 * Group composition is this action with theta a permutation.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quon/errors.hpp"

namespace quon {

/// Sorted multiset of positive integers.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
      if (v < 1) throw InvalidArgument("multiset elements must be positive integers");
    std::sort(values_.begin(), values_.end());
  }

  /// [n] = {1, ..., n}
  static Multiset range(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Multiset(std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<int>& values() const { return values_; }

  /// True when the multiset is exactly [n].
  bool is_range() const {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// n! / prod(multiplicity!)
  std::size_t rearrangement_count() const {
    std::size_t total = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      total *= i + 1;
      run = (i > 0 && values_[i] == values_[i - 1]) ? run + 1 : 1;
      total /= run;
    }
    return total;
  }

  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<int> values_;
};

inline std::string to_string(const Multiset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.values()[i]);
  }
  return out;
}

/// "1,2,2,5" (whitespace tolerated).
inline Multiset parse_multiset(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw ParseError("empty multiset element in '" + std::string(text) + "'");
    for (char c : token)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad multiset element '" + token + "'");
    values.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') flush();
    else token.push_back(c);
  }
  if (!token.empty() || !values.empty()) flush();
  if (values.empty()) throw ParseError("empty multiset");
  try {
    return Multiset(std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

/// Representative of c mod m in [1, m].
inline int wrap_color(long c, int m) {
  long r = c % m;
  if (r <= 0) r += m;
  return static_cast<int>(r);
}

class ColoredArrangement {
 public:
  ColoredArrangement() = default;

  ColoredArrangement(int m, std::vector<int> values, std::vector<int> colors)
      : m_(m), values_(std::move(values)), colors_(std::move(colors)) {
    if (m_ < 1) throw InvalidArgument("color count must be >= 1");
    if (values_.size() != colors_.size()) throw SizeMismatch("values and colors differ in length");
    for (int v : values_)
      if (v < 1) throw InvalidArgument("arrangement values must be positive");
    for (int c : colors_)
      if (c < 1 || c > m_) throw InvalidArgument("color out of range [1, m]");
  }

  int m() const { return m_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<int>& values() const { return values_; }
  const std::vector<int>& colors() const { return colors_; }
  int value(std::size_t i) const { return values_[i]; }
  int color(std::size_t i) const { return colors_[i]; }

  Multiset multiset() const { return Multiset(values_); }

  friend auto operator<=>(const ColoredArrangement&, const ColoredArrangement&) = default;

 private:
  int m_ = 1;
  std::vector<int> values_;
  std::vector<int> colors_;
};

class ColoredPermutation {
 public:
  ColoredPermutation() = default;

  ColoredPermutation(int m, std::vector<int> sigma, std::vector<int> alpha)
      : arr_(m, std::move(sigma), std::move(alpha)) {
    std::vector<bool> seen(arr_.size() + 1, false);
    for (int v : arr_.values()) {
      if (v < 1 || v > static_cast<int>(arr_.size()) || seen[static_cast<std::size_t>(v)])
        throw InvalidArgument("sigma is not a permutation of [n]");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  explicit ColoredPermutation(const ColoredArrangement& a)
      : ColoredPermutation(a.m(), a.values(), a.colors()) {}

  /// Identity permutation with every color neutral.
  static ColoredPermutation neutral(int m, std::size_t n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    return ColoredPermutation(m, std::move(sigma), std::vector<int>(n, m));
  }

  int m() const { return arr_.m(); }
  std::size_t size() const { return arr_.size(); }
  const std::vector<int>& sigma() const { return arr_.values(); }
  const std::vector<int>& alpha() const { return arr_.colors(); }

  const ColoredArrangement& as_arrangement() const { return arr_; }

  bool is_neutral() const { return *this == neutral(m(), size()); }

  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  ColoredArrangement arr_;
};

/// Inversions of sigma plus the number of non-neutral colors.
inline unsigned cinv(const ColoredPermutation& pi) {
  const auto& s = pi.sigma();
  unsigned count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++count;
  for (int c : pi.alpha())
    if (c != pi.m()) ++count;
  return count;
}

/// theta . pi  (right action of the group on arrangements)
inline ColoredArrangement act(const ColoredArrangement& theta, const ColoredPermutation& pi) {
  if (theta.m() != pi.m()) throw SizeMismatch("act: color counts differ");
  if (theta.size() != pi.size()) throw SizeMismatch("act: lengths differ");
  const std::size_t n = theta.size();
  const int m = theta.m();
  std::vector<int> values(n), colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(pi.sigma()[i] - 1);
    values[i] = theta.value(s);
    colors[i] = wrap_color(static_cast<long>(theta.color(s)) + pi.alpha()[i], m);
  }
  return ColoredArrangement(m, std::move(values), std::move(colors));
}

/// Group product a*b, defined so that act(act(t, a), b) == act(t, a*b).
inline ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
  return ColoredPermutation(act(a.as_arrangement(), b));
}

inline ColoredPermutation operator*(const ColoredPermutation& a, const ColoredPermutation& b) {
  return compose(a, b);
}

inline ColoredPermutation inverse(const ColoredPermutation& pi) {
  const std::size_t n = pi.size();
  const int m = pi.m();
  std::vector<int> sigma_inv(n), alpha(n);
  for (std::size_t i = 0; i < n; ++i) sigma_inv[static_cast<std::size_t>(pi.sigma()[i] - 1)] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < n; ++i)
    alpha[i] = wrap_color(-static_cast<long>(pi.alpha()[static_cast<std::size_t>(sigma_inv[i] - 1)]), m);
  return ColoredPermutation(m, std::move(sigma_inv), std::move(alpha));
}

/// Pure permutation part (all colors neutral) and pure color part (identity
/// sigma) with compose(perm_part, color_part) == pi.
inline std::pair<ColoredPermutation, ColoredPermutation> decompose(const ColoredPermutation& pi) {
  const std::size_t n = pi.size();
  ColoredPermutation perm(pi.m(), pi.sigma(), std::vector<int>(n, pi.m()));
  ColoredPermutation color(pi.m(), ColoredPermutation::neutral(pi.m(), n).sigma(), pi.alpha());
  return {std::move(perm), std::move(color)};
}

/*
 * Canonical order: rearrangements of I in ascending lexicographic order of
 * the word; within one rearrangement, color tuples are read in value order
 * (positions sorted stably by their letter, so for I = [n] slot k is the
 * position holding k), slot 1 varying fastest and each slot cycling through
 * m, 1, 2, ..., m-1.
 */
inline std::vector<ColoredArrangement> enumerate_arrangements(int m, const Multiset& set) {
  if (m < 1) throw InvalidArgument("color count must be >= 1");
  const std::size_t n = set.size();
  std::size_t colorings = 1;
  for (std::size_t i = 0; i < n; ++i) colorings *= static_cast<std::size_t>(m);

  std::vector<ColoredArrangement> out;
  out.reserve(colorings * set.rearrangement_count());
  std::vector<int> word = set.values();
  std::vector<std::size_t> slot(n);
  do {
    std::iota(slot.begin(), slot.end(), std::size_t{0});
    std::stable_sort(slot.begin(), slot.end(), [&word](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<int> digits(n, 0);
    for (std::size_t c = 0; c < colorings; ++c) {
      std::vector<int> colors(n);
      for (std::size_t k = 0; k < n; ++k) colors[slot[k]] = digits[k] == 0 ? m : digits[k];
      out.emplace_back(m, word, std::move(colors));
      for (std::size_t k = 0; k < n; ++k) {
        if (++digits[k] < m) break;
        digits[k] = 0;
      }
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

/// All m^n * n! elements of U_m wr S_n in canonical order.
inline std::vector<ColoredPermutation> enumerate_group(int m, std::size_t n) {
  auto arrangements = enumerate_arrangements(m, Multiset::range(static_cast<int>(n)));
  std::vector<ColoredPermutation> out;
  out.reserve(arrangements.size());
  for (const auto& a : arrangements) out.emplace_back(a);
  return out;
}

/// m^n * n!
inline std::size_t group_order(int m, std::size_t n) {
  std::size_t order = 1;
  for (std::size_t i = 1; i <= n; ++i) order *= i * static_cast<std::size_t>(m);
  return order;
}

/// "(s1,c1)(s2,c2)..."
inline std::string to_string(const ColoredArrangement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out += "(" + std::to_string(a.value(i)) + "," + std::to_string(a.color(i)) + ")";
  return out;
}

inline std::string to_string(const ColoredPermutation& p) { return to_string(p.as_arrangement()); }

/// Pairs "(i,k)(i,k)..." as parsed integers; the empty string yields no pairs.
inline std::vector<std::pair<int, int>> parse_pairs(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("word parse error at offset " + std::to_string(pos) + ": " + why + " in '" +
                     std::string(text) + "'");
  };
  auto number = [&]() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a non-negative integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  skip();
  while (pos < text.size()) {
    expect('(');
    int a = number();
    expect(',');
    int b = number();
    expect(')');
    out.emplace_back(a, b);
    skip();
  }
  return out;
}

inline ColoredArrangement parse_arrangement(int m, std::string_view text) {
  auto pairs = parse_pairs(text);
  std::vector<int> values, colors;
  for (auto [v, c] : pairs) {
    values.push_back(v);
    colors.push_back(c);
  }
  try {
    return ColoredArrangement(m, std::move(values), std::move(colors));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline ColoredPermutation parse_colored_permutation(int m, std::string_view text) {
  try {
    return ColoredPermutation(parse_arrangement(m, text));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace quon
