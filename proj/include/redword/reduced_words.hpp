#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace redword {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Default bound on |R(w)| before enumeration reports "too large".
inline constexpr std::uint64_t kDefaultWordCap = 2'000'000;

/// Contiguous digits when n <= 10, otherwise comma-separated integers.
inline std::string format_word(WordView word, std::size_t n) {
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (n > 10 && k > 0)
      s.push_back(',');
    s += std::to_string(word[k]);
  }
  return s;
}

inline Word parse_word(std::string_view text) {
  Word out;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw invalid_input("bad letter '" + std::string(1, ch) + "' in word \"" +
                            std::string(text) + "\"");
      out.push_back(static_cast<Letter>(ch - '0'));
    }
    return out;
  }
  int value = 0;
  bool have = false;
  auto flush = [&] {
    if (!have)
      return;
    if (value < 1 || value > 255)
      throw invalid_input("letter " + std::to_string(value) + " out of range");
    out.push_back(static_cast<Letter>(value));
    value = 0;
    have = false;
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      value = value * 10 + (ch - '0');
      have = true;
      if (value > 255)
        throw invalid_input("letter out of range in \"" + std::string(text) + "\"");
    } else {
      throw invalid_input("bad character '" + std::string(1, ch) + "' in word \"" +
                          std::string(text) + "\"");
    }
  }
  flush();
  return out;
}

inline void check_letters(WordView word, std::size_t n) {
  for (Letter a : word)
    if (a < 1 || a + 1 > n)
      throw invalid_input("letter " + std::to_string(a) + " out of range for S_" +
                          std::to_string(n));
}

/// s_{i_1} s_{i_2} ... s_{i_k}, multiplied left to right.
inline Permutation evaluate(WordView word, std::size_t n) {
  check_letters(word, n);
  Permutation p = Permutation::identity(n);
  for (Letter a : word)
    p = p.multiply_right(a);
  return p;
}

inline bool is_reduced(WordView word, std::size_t n) {
  check_letters(word, n);
  Permutation p = Permutation::identity(n);
  for (Letter a : word) {
    if (p.has_right_descent(a))
      return false;
    p = p.multiply_right(a);
  }
  return true;
}

/// R(w): every reduced word of one permutation, strictly increasing in
/// lexicographic order. All words share the length l(w), so the letters are
/// kept in one flat buffer with that stride.
class WordSet {
public:
  WordSet(Permutation target, std::size_t length, std::vector<Letter> letters)
    : target_(target), length_(length), letters_(std::move(letters)) {}

  /// Builds a set from words in any order; each must be a reduced word of
  /// `target`. Duplicates are rejected.
  static WordSet from_words(const Permutation& target, std::vector<Word> words) {
    const std::size_t len = target.length();
    for (const Word& u : words)
      if (u.size() != len || evaluate(u, target.size()) != target)
        throw invalid_input("\"" + format_word(u, target.size()) +
                            "\" is not a reduced word of " + target.to_string());
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
      throw invalid_input("duplicate word in word set");
    if (len == 0 && words.size() != 1)
      throw invalid_input("the identity has exactly one reduced word");
    std::vector<Letter> flat;
    flat.reserve(words.size() * len);
    for (const Word& u : words)
      flat.insert(flat.end(), u.begin(), u.end());
    return WordSet(target, len, std::move(flat));
  }

  const Permutation& target() const noexcept { return target_; }
  std::size_t rank() const noexcept { return target_.size(); }
  std::size_t word_length() const noexcept { return length_; }

  std::size_t size() const noexcept {
    // The identity has exactly one reduced word, the empty one.
    return length_ == 0 ? 1 : letters_.size() / length_;
  }

  WordView operator[](std::size_t k) const noexcept {
    return WordView(letters_.data() + k * length_, length_);
  }

  std::string text(std::size_t k) const { return format_word((*this)[k], rank()); }

  std::optional<std::size_t> index_of(WordView word) const {
    if (word.size() != length_)
      return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const WordView m = (*this)[mid];
      const auto cmp = std::lexicographical_compare_three_way(m.begin(), m.end(), word.begin(),
                                                              word.end());
      if (cmp == 0)
        return mid;
      if (cmp < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    return std::nullopt;
  }

  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k)
      out.push_back(text(k));
    return out;
  }

private:
  Permutation target_;
  std::size_t length_;
  std::vector<Letter> letters_;
};

namespace detail {

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

inline std::uint64_t count_memo(const Permutation& w,
                                std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (w.is_identity())
    return 1;
  if (auto it = memo.find(w.key()); it != memo.end())
    return it->second;
  std::uint64_t total = 0;
  for (int i : w.right_descents())
    total = saturating_add(total, count_memo(w.multiply_right(i), memo));
  memo.emplace(w.key(), total);
  return total;
}

inline void enumerate_from(const Permutation& rest, std::size_t depth, Word& prefix,
                           std::vector<Letter>& out) {
  if (depth == prefix.size()) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    return;
  }
  // Peeling left descents in increasing order emits words in lexicographic order.
  for (int i : rest.left_descents()) {
    prefix[depth] = static_cast<Letter>(i);
    enumerate_from(rest.multiply_left(i), depth + 1, prefix, out);
  }
}

} // namespace detail

/// |R(w)| by the descent recursion, saturating at 2^64 - 1.
inline std::uint64_t count_saturating(const Permutation& w) {
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  return detail::count_memo(w, memo);
}

/// |R(w)|; throws cap_exceeded above `cap`.
inline std::uint64_t count(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  const std::uint64_t r = count_saturating(w);
  if (r > cap)
    throw cap_exceeded(r, cap);
  return r;
}

inline WordSet enumerate(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  const std::uint64_t r = count(w, cap);
  const std::size_t len = w.length();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(r) * len);
  Word prefix(len);
  detail::enumerate_from(w, 0, prefix, letters);
  WordSet set(w, len, std::move(letters));
  if (len > 0 && set.size() != r)
    throw theorem_violation("enumeration of " + w.to_string() + " produced " +
                            std::to_string(set.size()) + " words, expected " +
                            std::to_string(r));
  return set;
}

} // namespace redword
