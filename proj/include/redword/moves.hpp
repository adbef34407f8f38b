#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "reduced_words.hpp"

namespace redword {

enum class MoveKind : std::uint8_t { braid, commutation };

inline std::string to_string(MoveKind kind) {
  return kind == MoveKind::braid ? "braid" : "commutation";
}

inline MoveKind parse_move_kind(std::string_view text) {
  if (text == "braid" || text == "b")
    return MoveKind::braid;
  if (text == "commutation" || text == "c")
    return MoveKind::commutation;
  throw invalid_input("unknown move kind \"" + std::string(text) + "\"");
}

/// b_i rewrites letters (i-1, i, i+1); c_i swaps letters (i, i+1).
/// Positions are 1-based.
struct Move {
  MoveKind kind;
  std::size_t position;

  friend bool operator==(const Move&, const Move&) = default;
};

inline bool supports_braid(WordView word, std::size_t i) {
  if (i < 2 || i + 1 > word.size())
    return false;
  const int a = word[i - 2], b = word[i - 1], c = word[i];
  return a == c && std::abs(a - b) == 1;
}

inline bool supports_commutation(WordView word, std::size_t i) {
  if (i < 1 || i + 1 > word.size())
    return false;
  return std::abs(int{word[i - 1]} - int{word[i]}) > 1;
}

/// a(a±1)a -> (a±1)a(a±1) at position i; unchanged when unsupported.
inline Word apply_braid(WordView word, std::size_t i) {
  Word out(word.begin(), word.end());
  if (supports_braid(word, i)) {
    std::swap(out[i - 2], out[i - 1]);
    out[i] = out[i - 2];
  }
  return out;
}

inline Word apply_commutation(WordView word, std::size_t i) {
  Word out(word.begin(), word.end());
  if (supports_commutation(word, i))
    std::swap(out[i - 1], out[i]);
  return out;
}

inline Word apply(WordView word, Move m) {
  return m.kind == MoveKind::braid ? apply_braid(word, m.position)
                                   : apply_commutation(word, m.position);
}

enum class PairRelation { overlapping, independent };

inline std::string to_string(PairRelation r) {
  return r == PairRelation::overlapping ? "overlapping" : "independent";
}

/// Relation between two distinct supported moves of the same kind.
inline PairRelation classify_pair(MoveKind kind, std::size_t i, std::size_t j) {
  if (i == j)
    throw invalid_input("classify_pair needs two distinct positions");
  const std::size_t d = i > j ? i - j : j - i;
  if (kind == MoveKind::braid) {
    if (d == 1)
      throw theorem_violation("a reduced word cannot support b_i and b_{i+1}");
    return d == 2 ? PairRelation::overlapping : PairRelation::independent;
  }
  return d == 1 ? PairRelation::overlapping : PairRelation::independent;
}

/// Calls fn(Move, WordView) for each word one supported move away:
/// commutations by position, then braids by position. `scratch` is reused.
template <class Fn>
void for_each_neighbor(WordView word, Word& scratch, Fn&& fn) {
  scratch.assign(word.begin(), word.end());
  const std::size_t len = word.size();
  for (std::size_t i = 1; i + 1 <= len; ++i) {
    if (!supports_commutation(word, i))
      continue;
    std::swap(scratch[i - 1], scratch[i]);
    fn(Move{MoveKind::commutation, i}, WordView(scratch));
    std::swap(scratch[i - 1], scratch[i]);
  }
  for (std::size_t i = 2; i + 1 <= len; ++i) {
    if (!supports_braid(word, i))
      continue;
    const Letter a = word[i - 2], b = word[i - 1];
    scratch[i - 2] = b;
    scratch[i - 1] = a;
    scratch[i] = b;
    fn(Move{MoveKind::braid, i}, WordView(scratch));
    scratch[i - 2] = a;
    scratch[i - 1] = b;
    scratch[i] = a;
  }
}

inline std::vector<std::pair<Move, Word>> neighbors(WordView word) {
  std::vector<std::pair<Move, Word>> out;
  Word scratch;
  for_each_neighbor(word, scratch, [&](Move m, WordView v) {
    out.emplace_back(m, Word(v.begin(), v.end()));
  });
  return out;
}

} // namespace redword
