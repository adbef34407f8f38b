#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph_algo.hpp"
#include "moves.hpp"
#include "reduced_words.hpp"

namespace redword {

/// B(w) or C(w): the components of R(w) under one kind of move.
struct ClassPartition {
  MoveKind kind = MoveKind::braid;
  std::vector<std::uint32_t> class_of;              // word index -> class id
  std::vector<std::vector<std::uint32_t>> classes;  // increasing word indices
  std::vector<std::uint32_t> representatives;       // lexicographically least member

  std::size_t size() const noexcept { return classes.size(); }
};

/// Word-index pairs joined by one move of `kind`, each pair once (u < v).
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> move_edges(const WordSet& words,
                                                                       MoveKind kind) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  Word scratch;
  for (std::uint32_t u = 0; u < words.size(); ++u) {
    for_each_neighbor(words[u], scratch, [&](Move m, WordView next) {
      if (m.kind != kind)
        return;
      const auto v = words.index_of(next);
      if (!v)
        throw theorem_violation("move " + to_string(m.kind) + " at " +
                                std::to_string(m.position) + " left R(" +
                                words.target().to_string() + ")");
      if (u < *v)
        edges.emplace_back(u, static_cast<std::uint32_t>(*v));
    });
  }
  return edges;
}

inline ClassPartition partition(const WordSet& words, MoveKind kind) {
  DisjointSets sets(words.size());
  for (auto [u, v] : move_edges(words, kind))
    sets.unite(u, v);

  ClassPartition p;
  p.kind = kind;
  // Words are sorted, so numbering components by least member orders the
  // classes by their representatives.
  p.class_of = sets.labels();
  std::uint32_t count = 0;
  for (std::uint32_t id : p.class_of)
    count = std::max(count, id + 1);
  p.classes.resize(count);
  for (std::uint32_t u = 0; u < p.class_of.size(); ++u)
    p.classes[p.class_of[u]].push_back(u);
  p.representatives.reserve(count);
  for (const auto& c : p.classes)
    p.representatives.push_back(c.front());
  return p;
}

/// |B| = 2^x 3^y: x independent braid factors, y overlapping pairs.
struct BraidClassShape {
  std::size_t x = 0;
  std::size_t y = 0;

  std::uint64_t size() const noexcept {
    std::uint64_t s = 1;
    for (std::size_t k = 0; k < x; ++k)
      s *= 2;
    for (std::size_t k = 0; k < y; ++k)
      s *= 3;
    return s;
  }

  /// Edges of the product of x two-vertex paths and y three-vertex paths.
  std::uint64_t product_edge_count() const noexcept {
    const std::uint64_t n = size();
    // Each 2-path factor contributes n/2 edges, each 3-path factor 2n/3.
    return x * (n / 2) + y * (2 * n / 3);
  }

  friend bool operator==(const BraidClassShape&, const BraidClassShape&) = default;
};

/// Factor a braid class size; x, y are taken nonnegative.
inline BraidClassShape braid_class_shape(std::uint64_t class_size, std::size_t length) {
  if (class_size == 0)
    throw invalid_input("empty braid class");
  BraidClassShape s;
  std::uint64_t m = class_size;
  while (m % 2 == 0) {
    m /= 2;
    ++s.x;
  }
  while (m % 3 == 0) {
    m /= 3;
    ++s.y;
  }
  if (m != 1)
    throw theorem_violation("braid class size " + std::to_string(class_size) +
                            " is not of the form 2^x 3^y");
  if (3 * s.x + 5 * s.y > length)
    throw theorem_violation("braid class shape (" + std::to_string(s.x) + "," +
                            std::to_string(s.y) + ") needs 3x+5y <= " + std::to_string(length));
  return s;
}

/// Checks that the braid edges inside one class form the expected product of
/// paths: right vertex count, connected, bipartite, product edge count.
inline bool verify_braid_class_graph(const WordSet& words, const std::vector<std::uint32_t>& members) {
  BraidClassShape shape;
  try {
    shape = braid_class_shape(members.size(), words.word_length());
  } catch (const theorem_violation&) {
    return false;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  Word scratch;
  for (std::uint32_t a = 0; a < members.size(); ++a) {
    for_each_neighbor(words[members[a]], scratch, [&](Move m, WordView next) {
      if (m.kind != MoveKind::braid)
        return;
      const auto idx = words.index_of(next);
      if (!idx)
        return;
      const auto it = std::lower_bound(members.begin(), members.end(),
                                       static_cast<std::uint32_t>(*idx));
      if (it == members.end() || *it != *idx)
        return;
      const auto b = static_cast<std::uint32_t>(it - members.begin());
      if (a < b)
        edges.emplace_back(a, b);
    });
  }
  const Adjacency adj = make_adjacency(members.size(), edges);
  return shape.size() == members.size() && adjacency_connected(adj) &&
         adjacency_bipartite(adj) && edges.size() == shape.product_edge_count();
}

} // namespace redword
