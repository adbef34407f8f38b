#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "characterizations.hpp"
#include "error.hpp"
#include "permutation.hpp"
#include "reduced_words.hpp"

namespace redword {

/// The interval [e, w] in right weak order, graded by length.
struct WeakInterval {
  Permutation top;
  std::vector<std::vector<Permutation>> ranks;  // ranks[k]: elements of length k, sorted
  std::vector<std::size_t> rank_sizes;
  std::size_t width = 0;
  std::vector<int> support;  // letters used by every reduced word of `top`
  std::size_t support_size = 0;

  std::size_t element_count() const {
    std::size_t total = 0;
    for (auto s : rank_sizes)
      total += s;
    return total;
  }
};

/// Elements are the values of all prefixes of all reduced words of w.
inline WeakInterval interval(const WordSet& words) {
  const std::size_t n = words.rank();
  const std::size_t len = words.word_length();
  std::vector<std::unordered_set<std::uint64_t>> seen(len + 1);

  // Consecutive words share prefixes; only the differing tail is re-evaluated.
  std::vector<Permutation> chain(len + 1, Permutation::identity(n));
  std::uint32_t support_mask = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const WordView word = words[k];
    std::size_t start = 0;
    if (k > 0) {
      const WordView prev = words[k - 1];
      while (start < len && prev[start] == word[start])
        ++start;
    }
    for (std::size_t d = start; d < len; ++d)
      chain[d + 1] = chain[d].multiply_right(word[d]);
    for (std::size_t d = start; d <= len; ++d)
      seen[d].insert(chain[d].key());

    std::uint32_t mask = 0;
    for (Letter a : word)
      mask |= 1u << a;
    if (k == 0)
      support_mask = mask;
    else if (mask != support_mask)
      throw theorem_violation("reduced words of " + words.target().to_string() +
                              " use different letters");
  }

  WeakInterval out;
  out.top = words.target();
  for (std::size_t d = 0; d <= len; ++d) {
    std::vector<Permutation> rank;
    rank.reserve(seen[d].size());
    for (auto key : seen[d])
      rank.push_back(Permutation::from_key(key, n));
    std::sort(rank.begin(), rank.end());
    out.rank_sizes.push_back(rank.size());
    out.width = std::max(out.width, rank.size());
    out.ranks.push_back(std::move(rank));
  }
  for (int a = 1; a < 32; ++a)
    if (support_mask & (1u << a))
      out.support.push_back(a);
  out.support_size = out.support.size();
  return out;
}

inline WeakInterval interval(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  return interval(enumerate(w, cap));
}

/// Cover relations u < u s_i inside the interval, as (lower, upper, i).
struct Cover {
  Permutation lower;
  Permutation upper;
  int letter;
};

inline std::vector<Cover> covers(const WeakInterval& iv) {
  std::vector<Cover> out;
  for (std::size_t d = 0; d + 1 < iv.ranks.size(); ++d) {
    const auto& above = iv.ranks[d + 1];
    for (const Permutation& u : iv.ranks[d]) {
      for (int i = 1; static_cast<std::size_t>(i) < u.size(); ++i) {
        if (u.has_right_descent(i))
          continue;
        const Permutation v = u.multiply_right(i);
        if (std::binary_search(above.begin(), above.end(), v))
          out.push_back({u, v, i});
      }
    }
  }
  return out;
}

/// Which of the four narrow-interval conditions hold.
struct ConjectureConditions {
  bool one_commutation_class = false;  // |C(w)| = 1
  bool one_braid_class = false;        // |B(w)| = 1
  bool width_two = false;              // wid(w) = 2
  bool width_support_three = false;    // wid(w) = sup(w) = 3

  bool any() const {
    return one_commutation_class || one_braid_class || width_two || width_support_three;
  }
};

inline ConjectureConditions conjecture_conditions(const Permutation& w, const WeakInterval& iv) {
  return {is_321_avoiding(w), inversions_pairwise_share_letter(w), iv.width == 2,
          iv.width == 3 && iv.support_size == 3};
}

inline bool conjecture_predicate(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  return conjecture_conditions(w, interval(w, cap)).any();
}

enum class ConjectureOutcome {
  agree,
  conditions_but_circuit,    // some condition holds, yet Γ(w) has a circuit
  circuit_free_no_condition  // circuit-free, yet no condition holds
};

inline std::string to_string(ConjectureOutcome o) {
  switch (o) {
  case ConjectureOutcome::agree:
    return "agree";
  case ConjectureOutcome::conditions_but_circuit:
    return "conditions_but_circuit";
  case ConjectureOutcome::circuit_free_no_condition:
    return "circuit_free_no_condition";
  }
  return "?";
}

inline ConjectureOutcome compare_conjecture(bool predicate, bool circuit_free) {
  if (predicate == circuit_free)
    return ConjectureOutcome::agree;
  return predicate ? ConjectureOutcome::conditions_but_circuit
                   : ConjectureOutcome::circuit_free_no_condition;
}

/// Never throws on disagreement: the statement checked is open.
inline ConjectureOutcome check_conjecture(const Permutation& w, std::uint64_t cap = kDefaultWordCap) {
  const WordSet words = enumerate(w, cap);
  const bool predicate = conjecture_conditions(w, interval(words)).any();
  const bool free = is_tree(build_gamma(partition(words, MoveKind::braid),
                                        partition(words, MoveKind::commutation), words));
  return compare_conjecture(predicate, free);
}

} // namespace redword
