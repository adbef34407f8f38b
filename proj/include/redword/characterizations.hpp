#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "classes.hpp"
#include "error.hpp"
#include "graphs.hpp"
#include "permutation.hpp"
#include "reduced_words.hpp"

namespace redword {

/// r = |R(w)|, b = |B(w)|, c = |C(w)|, with b + c - 1 <= r <= b * c.
struct BoundStatus {
  std::uint64_t r = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  bool achieves_lower = false;
  bool achieves_upper = false;
};

inline BoundStatus bound_status(std::uint64_t r, std::uint64_t b, std::uint64_t c) {
  if (b + c - 1 > r || r > b * c)
    throw theorem_violation("bounds fail: r=" + std::to_string(r) + " b=" + std::to_string(b) +
                            " c=" + std::to_string(c));
  return {r, b, c, r == b + c - 1, r == b * c};
}

inline BoundStatus bound_status(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  const WordSet words = enumerate(w, cap);
  return bound_status(words.size(), partition(words, MoveKind::braid).size(),
                      partition(words, MoveKind::commutation).size());
}

/// w(i) = i+2, w(i+2) = i, every other value fixed.
inline bool is_long_braid_pattern(const Permutation& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    if (w(i) != static_cast<int>(i + 2) || w(i + 2) != static_cast<int>(i))
      continue;
    bool rest_fixed = true;
    for (std::size_t k = 1; k <= n && rest_fixed; ++k)
      if (k != i && k != i + 2)
        rest_fixed = w(k) == static_cast<int>(k);
    if (rest_fixed)
      return true;
  }
  return false;
}

/// Upper-bound achievers, without enumerating R(w).
inline bool upper_predicate(const Permutation& w) {
  return is_321_avoiding(w) || is_long_braid_pattern(w);
}

// Words of the form u i(i+1)i v whose permutations are circuit-free while
// having several braid and several commutation classes.

/// The four images of a word under reversal and letter complement i -> n-i.
inline std::vector<Word> symmetric_images(WordView word, std::size_t n) {
  Word id(word.begin(), word.end());
  Word rev(word.rbegin(), word.rend());
  Word comp = id, revcomp = rev;
  for (auto& a : comp)
    a = static_cast<Letter>(n - a);
  for (auto& a : revcomp)
    a = static_cast<Letter>(n - a);
  return {id, rev, comp, revcomp};
}

namespace detail {

inline bool is_run(WordView part, int first, int step) {
  for (std::size_t k = 0; k < part.size(); ++k)
    if (part[k] != first + step * static_cast<int>(k))
      return false;
  return true;
}

} // namespace detail

/// True when the whole word is u i(i+1)i v with
///   u empty and v = (i-1)i or v = (i-1)(i-2)...(i-1-t), t >= 0, or
///   u = v = (i-1), or
///   u = (i-1-t)...(i-1) and v = (i+2)...(i+2+t'), t, t' >= 0.
/// No symmetry is applied here.
inline bool matches_lower_template(WordView word) {
  const std::size_t len = word.size();
  for (std::size_t p = 0; p + 3 <= len; ++p) {
    const int i = word[p];
    if (word[p + 1] != i + 1 || word[p + 2] != i)
      continue;
    const WordView u = word.subspan(0, p);
    const WordView v = word.subspan(p + 3);
    if (u.empty() && !v.empty()) {
      if (v.size() == 2 && v[0] == i - 1 && v[1] == i)
        return true;
      if (detail::is_run(v, i - 1, -1))
        return true;
    }
    if (u.size() == 1 && v.size() == 1 && u[0] == i - 1 && v[0] == i - 1)
      return true;
    if (!u.empty() && !v.empty() && detail::is_run(u, i - static_cast<int>(u.size()), 1) &&
        detail::is_run(v, i + 2, 1))
      return true;
  }
  return false;
}

inline bool matches_lower_template_up_to_symmetry(WordView word, std::size_t n) {
  for (const Word& image : symmetric_images(word, n))
    if (matches_lower_template(image))
      return true;
  return false;
}

/// Every word in [1, n-1] produced by the templates above (before symmetry).
inline std::vector<Word> lower_template_words(std::size_t n) {
  std::vector<Word> out;
  if (n < 3)
    return out;
  const int top = static_cast<int>(n) - 1;  // largest letter
  for (int i = 1; i + 1 <= top; ++i) {
    const Word core{static_cast<Letter>(i), static_cast<Letter>(i + 1), static_cast<Letter>(i)};
    auto with = [&](const Word& u, const Word& v) {
      Word w = u;
      w.insert(w.end(), core.begin(), core.end());
      w.insert(w.end(), v.begin(), v.end());
      out.push_back(std::move(w));
    };
    if (i < 2)
      continue;
    const auto im1 = static_cast<Letter>(i - 1);
    with({}, {im1, static_cast<Letter>(i)});
    for (int t = 0; i - 1 - t >= 1; ++t) {
      Word v;
      for (int a = i - 1; a >= i - 1 - t; --a)
        v.push_back(static_cast<Letter>(a));
      with({}, v);
    }
    with({im1}, {im1});
    for (int t = 0; i - 1 - t >= 1; ++t) {
      Word u;
      for (int a = i - 1 - t; a <= i - 1; ++a)
        u.push_back(static_cast<Letter>(a));
      for (int t2 = 0; i + 2 + t2 <= top; ++t2) {
        Word v;
        for (int a = i + 2; a <= i + 2 + t2; ++a)
          v.push_back(static_cast<Letter>(a));
        with(u, v);
      }
    }
  }
  return out;
}

/// Sorted keys of the permutations with a reduced template word, up to
/// symmetry. Cached per n; safe to call from several threads.
inline const std::vector<std::uint64_t>& lower_template_keys(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end())
    return it->second;
  std::vector<std::uint64_t> keys;
  for (const Word& w : lower_template_words(n))
    for (const Word& image : symmetric_images(w, n))
      if (is_reduced(image, n))
        keys.push_back(evaluate(image, n).key());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return cache.emplace(n, std::move(keys)).first->second;
}

/// Lower-bound achievers, without enumerating R(w).
inline bool lower_predicate_pattern(const Permutation& w) {
  if (inversions_pairwise_share_letter(w) || is_321_avoiding(w))
    return true;
  const auto& keys = lower_template_keys(w.size());
  return std::binary_search(keys.begin(), keys.end(), w.key());
}

/// The same characterization read off a complete R(w).
inline bool lower_predicate_from_words(const WordSet& words, std::size_t braid_classes,
                                       std::size_t commutation_classes) {
  if (braid_classes == 1 || commutation_classes == 1)
    return true;
  for (std::size_t k = 0; k < words.size(); ++k)
    if (matches_lower_template_up_to_symmetry(words[k], words.rank()))
      return true;
  return false;
}

/// Γ(w) is a tree.
inline bool is_circuit_free(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  const WordSet words = enumerate(w, cap);
  return is_tree(build_gamma(partition(words, MoveKind::braid),
                             partition(words, MoveKind::commutation), words));
}

namespace detail {

inline std::uint64_t checked(unsigned __int128 v, const char* what, std::uint64_t n) {
  if (v > UINT64_MAX)
    throw config_error(std::string(what) + "(" + std::to_string(n) + ") overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

} // namespace detail

/// binom(2n, n) / (n + 1).
inline std::uint64_t catalan(std::uint64_t n) {
  unsigned __int128 c = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    c = c * 2 * (2 * k + 1) / (k + 2);
    detail::checked(c, "catalan", n);
  }
  return detail::checked(c, "catalan", n);
}

/// Permutations of S_n with |R(w)| = |B(w)| |C(w)|.
inline std::uint64_t count_upper(std::uint64_t n) {
  if (n == 0)
    throw invalid_input("n must be at least 1");
  if (n == 1)
    return 1;
  return detail::checked(static_cast<unsigned __int128>(catalan(n)) + n - 2, "count_upper", n);
}

/// Permutations of S_n with |R(w)| = |B(w)| + |C(w)| - 1.
inline std::uint64_t count_lower(std::uint64_t n) {
  if (n == 0)
    throw invalid_input("n must be at least 1");
  if (n <= 2)
    return n;
  const __int128 m = static_cast<__int128>(n);
  const __int128 cubic = m * m * m - 3 * m * m + 8 * m - 21;
  if (cubic % 3 != 0)
    throw theorem_violation("cubic term not divisible by 3 at n=" + std::to_string(n));
  return detail::checked(static_cast<unsigned __int128>(catalan(n)) +
                             static_cast<unsigned __int128>(cubic / 3),
                         "count_lower", n);
}

} // namespace redword
