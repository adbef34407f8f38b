#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace redword {

/// Hard storage bound on n. A window of 16 values packs into one 64-bit key.
inline constexpr std::size_t kMaxRank = 16;

/// Default working bound on n for the CLI and the scan harness.
inline constexpr std::size_t kDefaultMaxN = 10;

/// An element of S_n in one-line notation. Positions and values are 1-based.
class Permutation {
public:
  Permutation() : Permutation(identity(1)) {}

  static Permutation identity(std::size_t n) {
    if (n == 0)
      throw invalid_input("permutation size must be at least 1");
    if (n > kMaxRank)
      throw config_error("n = " + std::to_string(n) + " exceeds storage limit " +
                         std::to_string(kMaxRank));
    Permutation p(private_tag{});
    p.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t k = 0; k < n; ++k)
      p.w_[k] = static_cast<std::uint8_t>(k + 1);
    return p;
  }

  static Permutation longest(std::size_t n) {
    Permutation p = identity(n);
    std::reverse(p.w_.begin(), p.w_.begin() + n);
    return p;
  }

  static Permutation from_window(std::span<const int> values) {
    if (values.empty())
      throw invalid_input("empty window");
    const std::size_t n = values.size();
    if (n > kMaxRank)
      throw config_error("n = " + std::to_string(n) + " exceeds storage limit " +
                         std::to_string(kMaxRank));
    Permutation p(private_tag{});
    p.n_ = static_cast<std::uint8_t>(n);
    std::array<bool, kMaxRank + 1> seen{};
    for (std::size_t k = 0; k < n; ++k) {
      const int v = values[k];
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw invalid_input("window value " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
      if (seen[v])
        throw invalid_input("window value " + std::to_string(v) + " is duplicated");
      seen[v] = true;
      p.w_[k] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  static Permutation from_window(std::initializer_list<int> values) {
    return from_window(std::span<const int>(values.begin(), values.size()));
  }

  static Permutation from_window(const std::vector<int>& values) {
    return from_window(std::span<const int>(values));
  }

  /// Accepts "[25314]" (one digit per value) or "2 5 3 1 4" / "2,5,3,1,4",
  /// with or without brackets.
  static Permutation parse(std::string_view text) {
    std::string body;
    for (char ch : text)
      if (ch != '[' && ch != ']')
        body.push_back(ch);
    const bool separated = body.find_first_of(" ,\t") != std::string::npos;
    std::vector<int> values;
    if (separated) {
      std::string token;
      auto flush = [&] {
        if (token.empty())
          return;
        values.push_back(parse_int(token));
        token.clear();
      };
      for (char ch : body) {
        if (ch == ' ' || ch == ',' || ch == '\t')
          flush();
        else
          token.push_back(ch);
      }
      flush();
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw invalid_input("unexpected character '" + std::string(1, ch) +
                              "' in window \"" + std::string(text) + "\"");
        values.push_back(ch - '0');
      }
    }
    return from_window(values);
  }

  std::size_t size() const noexcept { return n_; }

  /// w(i) for 1 <= i <= n.
  int operator()(std::size_t i) const noexcept { return w_[i - 1]; }

  std::vector<int> window() const { return {w_.begin(), w_.begin() + n_}; }

  /// Number of inversion pairs (i, j), i < j, w(i) > w(j).
  std::size_t length() const noexcept {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        inv += w_[i] > w_[j];
    return inv;
  }

  bool is_identity() const noexcept {
    for (std::size_t k = 0; k < n_; ++k)
      if (w_[k] != k + 1)
        return false;
    return true;
  }

  bool has_right_descent(int i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) < n_ && w_[i - 1] > w_[i];
  }

  /// {i : w(i) > w(i+1)}, increasing.
  std::vector<int> right_descents() const {
    std::vector<int> out;
    for (int i = 1; static_cast<std::size_t>(i) < n_; ++i)
      if (w_[i - 1] > w_[i])
        out.push_back(i);
    return out;
  }

  /// Right descents of the inverse: value i+1 sits left of value i.
  std::vector<int> left_descents() const {
    const auto pos = positions();
    std::vector<int> out;
    for (int i = 1; static_cast<std::size_t>(i) < n_; ++i)
      if (pos[i + 1] < pos[i])
        out.push_back(i);
    return out;
  }

  /// w * s_i: swaps positions i and i+1.
  Permutation multiply_right(int i) const {
    check_generator(i);
    Permutation p = *this;
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
  }

  /// s_i * w: swaps the values i and i+1.
  Permutation multiply_left(int i) const {
    check_generator(i);
    Permutation p = *this;
    for (std::size_t k = 0; k < n_; ++k) {
      if (p.w_[k] == i)
        p.w_[k] = static_cast<std::uint8_t>(i + 1);
      else if (p.w_[k] == i + 1)
        p.w_[k] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  Permutation inverse() const {
    Permutation p = *this;
    for (std::size_t k = 0; k < n_; ++k)
      p.w_[w_[k] - 1] = static_cast<std::uint8_t>(k + 1);
    return p;
  }

  /// Positions of each value: result[v] = w^{-1}(v), index 0 unused.
  std::array<std::uint8_t, kMaxRank + 1> positions() const noexcept {
    std::array<std::uint8_t, kMaxRank + 1> pos{};
    for (std::size_t k = 0; k < n_; ++k)
      pos[w_[k]] = static_cast<std::uint8_t>(k + 1);
    return pos;
  }

  /// Injective within a fixed n: four bits per window entry.
  std::uint64_t key() const noexcept {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n_; ++i)
      k |= static_cast<std::uint64_t>(w_[i] - 1) << (4 * i);
    return k;
  }

  static Permutation from_key(std::uint64_t key, std::size_t n) {
    std::vector<int> values(n);
    for (std::size_t i = 0; i < n; ++i)
      values[i] = static_cast<int>((key >> (4 * i)) & 0xF) + 1;
    return from_window(values);
  }

  /// "[25314]" when n <= 9, otherwise "[1 2 ... 10]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < n_; ++k) {
      if (n_ > 9 && k > 0)
        s.push_back(' ');
      s += std::to_string(w_[k]);
    }
    s.push_back(']');
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct private_tag {};
  explicit Permutation(private_tag) {}

  void check_generator(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) >= n_)
      throw invalid_input("generator s_" + std::to_string(i) + " out of range for S_" +
                          std::to_string(n_));
  }

  static int parse_int(const std::string& token) {
    int v = 0;
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw invalid_input("bad window entry \"" + token + "\"");
      v = v * 10 + (ch - '0');
      if (v > 1000)
        throw invalid_input("window entry \"" + token + "\" too large");
    }
    return v;
  }

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> w_{};
};

/// Inversions as value pairs (larger, smaller), in position order.
inline std::vector<std::pair<int, int>> inversion_values(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  const std::size_t n = w.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (w(i) > w(j))
        out.emplace_back(w(i), w(j));
  return out;
}

/// No i < j < k with w(i) > w(j) > w(k).
inline bool is_321_avoiding(const Permutation& w) {
  const std::size_t n = w.size();
  for (std::size_t j = 2; j < n; ++j) {
    bool bigger_left = false;
    for (std::size_t i = 1; i < j && !bigger_left; ++i)
      bigger_left = w(i) > w(j);
    if (!bigger_left)
      continue;
    for (std::size_t k = j + 1; k <= n; ++k)
      if (w(k) < w(j))
        return false;
  }
  return true;
}

/// Every two inversions, read as value pairs, have a value in common.
inline bool inversions_pairwise_share_letter(const Permutation& w) {
  const auto inv = inversion_values(w);
  for (std::size_t a = 0; a < inv.size(); ++a)
    for (std::size_t b = a + 1; b < inv.size(); ++b) {
      const auto [p, q] = inv[a];
      const auto [r, s] = inv[b];
      if (p != r && p != s && q != r && q != s)
        return false;
    }
  return true;
}

/// Value complement v -> n+1-v, i.e. left multiplication by the longest element.
inline Permutation complement(const Permutation& w) {
  const std::size_t n = w.size();
  std::vector<int> values(n);
  for (std::size_t k = 1; k <= n; ++k)
    values[k - 1] = static_cast<int>(n + 1) - w(k);
  return Permutation::from_window(values);
}

/// Reverses every reduced word: the group inverse.
inline Permutation reverse(const Permutation& w) { return w.inverse(); }

/// Conjugation by the longest element; replaces every letter i of every
/// reduced word by n-i.
inline Permutation conjugate_by_longest(const Permutation& w) {
  const std::size_t n = w.size();
  std::vector<int> values(n);
  for (std::size_t k = 1; k <= n; ++k)
    values[k - 1] = static_cast<int>(n + 1) - w(n + 1 - k);
  return Permutation::from_window(values);
}

/// Lexicographic order of windows; visits every element of S_n once.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<int> values(n);
  for (std::size_t k = 0; k < n; ++k)
    values[k] = static_cast<int>(k + 1);
  do {
    fn(Permutation::from_window(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

} // namespace redword

template <>
struct std::hash<redword::Permutation> {
  std::size_t operator()(const redword::Permutation& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.key() ^ (std::uint64_t{w.size()} << 60));
  }
};
