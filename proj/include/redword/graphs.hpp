#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "classes.hpp"
#include "error.hpp"
#include "graph_algo.hpp"
#include "moves.hpp"
#include "reduced_words.hpp"

namespace redword {

enum class EdgeKind : std::uint8_t { braid, commutation, incidence };

inline std::string to_string(EdgeKind k) {
  switch (k) {
  case EdgeKind::braid:
    return "braid";
  case EdgeKind::commutation:
    return "commutation";
  case EdgeKind::incidence:
    return "incidence";
  }
  return "?";
}

inline EdgeKind edge_kind(MoveKind k) {
  return k == MoveKind::braid ? EdgeKind::braid : EdgeKind::commutation;
}

struct Edge {
  std::uint32_t u;
  std::uint32_t v;
  EdgeKind kind;
  std::string witness;  // Γ(w) only: the word in B ∩ C
};

/// Shared representation of G(w), G_c(w), G_b(w) and Γ(w).
struct LabeledGraph {
  std::vector<std::string> vertex_labels;
  std::vector<Edge> edges;

  std::size_t vertex_count() const noexcept { return vertex_labels.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }

  std::size_t edge_count(EdgeKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.kind == kind; }));
  }

  Adjacency adjacency() const {
    Adjacency adj(vertex_count());
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return adj;
  }
};

/// G(w): vertices are the words of R(w) in order, one edge per single move.
inline LabeledGraph build_word_graph(const WordSet& words) {
  LabeledGraph g;
  g.vertex_labels = words.texts();
  Word scratch;
  for (std::uint32_t u = 0; u < words.size(); ++u) {
    for_each_neighbor(words[u], scratch, [&](Move m, WordView next) {
      const auto v = words.index_of(next);
      if (!v)
        throw theorem_violation("move left R(" + words.target().to_string() + ")");
      if (u < *v)
        g.edges.push_back({u, static_cast<std::uint32_t>(*v), edge_kind(m.kind), {}});
    });
  }
  return g;
}

/// Contracts every edge of `kind`. Contracting commutation edges gives G_c
/// (vertices "C1", "C2", ...); contracting braid edges gives G_b ("B1", ...).
/// Components are numbered by their least vertex. Surviving edges are
/// deduplicated per kind.
inline LabeledGraph contract(const LabeledGraph& g, MoveKind kind) {
  const EdgeKind contracted = edge_kind(kind);
  DisjointSets sets(g.vertex_count());
  bool any = false;
  for (const Edge& e : g.edges)
    if (e.kind == contracted) {
      sets.unite(e.u, e.v);
      any = true;
    }
  if (!any)
    return g;
  const auto label = sets.labels();
  std::uint32_t count = 0;
  for (auto id : label)
    count = std::max(count, id + 1);

  LabeledGraph out;
  const std::string prefix = kind == MoveKind::commutation ? "C" : "B";
  for (std::uint32_t k = 0; k < count; ++k)
    out.vertex_labels.push_back(prefix + std::to_string(k + 1));
  std::set<std::tuple<std::uint32_t, std::uint32_t, EdgeKind>> seen;
  for (const Edge& e : g.edges) {
    if (e.kind == contracted)
      continue;
    std::uint32_t a = label[e.u], b = label[e.v];
    if (a == b)
      continue;
    if (a > b)
      std::swap(a, b);
    if (seen.emplace(a, b, e.kind).second)
      out.edges.push_back({a, b, e.kind, {}});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v, x.kind) < std::tie(y.u, y.v, y.kind);
  });
  return out;
}

inline bool is_connected(const LabeledGraph& g) { return adjacency_connected(g.adjacency()); }

inline bool is_bipartite(const LabeledGraph& g) { return adjacency_bipartite(g.adjacency()); }

inline bool is_tree(const LabeledGraph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Γ(w): vertices B1..Bb then C1..Cc; B_i -- C_j iff they share a word,
/// which is recorded as the edge witness.
inline LabeledGraph build_gamma(const ClassPartition& braid, const ClassPartition& comm,
                                const WordSet& words) {
  if (braid.kind != MoveKind::braid || comm.kind != MoveKind::commutation)
    throw invalid_input("build_gamma expects a braid partition and a commutation partition");
  if (braid.class_of.size() != words.size() || comm.class_of.size() != words.size())
    throw invalid_input("partitions do not match the word set");
  LabeledGraph g;
  for (std::size_t k = 0; k < braid.size(); ++k)
    g.vertex_labels.push_back("B" + std::to_string(k + 1));
  for (std::size_t k = 0; k < comm.size(); ++k)
    g.vertex_labels.push_back("C" + std::to_string(k + 1));
  const auto offset = static_cast<std::uint32_t>(braid.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t u = 0; u < words.size(); ++u) {
    const std::uint32_t b = braid.class_of[u], c = comm.class_of[u];
    if (!seen.emplace(b, c).second)
      throw theorem_violation("B" + std::to_string(b + 1) + " and C" + std::to_string(c + 1) +
                              " share more than one word");
    g.edges.push_back({b, offset + c, EdgeKind::incidence, words.text(u)});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  return g;
}

/// T(w): rows are braid classes, columns commutation classes, each cell at
/// most one word (stored as its index in the word set).
struct IntersectionTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<std::uint32_t>> cells;  // row-major

  const std::optional<std::uint32_t>& at(std::size_t r, std::size_t c) const {
    return cells[r * cols + c];
  }

  std::size_t nonempty_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const auto& x) { return x.has_value(); }));
  }
};

inline IntersectionTable build_table(const ClassPartition& braid, const ClassPartition& comm,
                                     const WordSet& words) {
  if (braid.kind != MoveKind::braid || comm.kind != MoveKind::commutation)
    throw invalid_input("build_table expects a braid partition and a commutation partition");
  IntersectionTable t;
  t.rows = braid.size();
  t.cols = comm.size();
  t.cells.assign(t.rows * t.cols, std::nullopt);
  for (std::uint32_t u = 0; u < words.size(); ++u) {
    auto& cell = t.cells[braid.class_of[u] * t.cols + comm.class_of[u]];
    if (cell)
      throw theorem_violation("cell (B" + std::to_string(braid.class_of[u] + 1) + ", C" +
                              std::to_string(comm.class_of[u] + 1) + ") holds " +
                              words.text(*cell) + " and " + words.text(u));
    cell = u;
  }
  return t;
}

/// For any r x c array: every row and column nonempty, nonempty cells
/// connected by in-row and in-column jumps, and at least r + c - 1 of them.
template <class Occupied>
bool verify_jump_property(std::size_t rows, std::size_t cols, Occupied&& occupied) {
  if (rows == 0 || cols == 0)
    return false;
  std::vector<std::uint32_t> index(rows * cols, UINT32_MAX);
  std::uint32_t filled = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (occupied(r, c))
        index[r * cols + c] = filled++;
  DisjointSets sets(filled);
  std::vector<std::uint32_t> first_in_col(cols, UINT32_MAX);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t first_in_row = UINT32_MAX;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::uint32_t k = index[r * cols + c];
      if (k == UINT32_MAX)
        continue;
      if (first_in_row == UINT32_MAX)
        first_in_row = k;
      else
        sets.unite(first_in_row, k);
      if (first_in_col[c] == UINT32_MAX)
        first_in_col[c] = k;
      else
        sets.unite(first_in_col[c], k);
    }
    if (first_in_row == UINT32_MAX)
      return false;
  }
  for (auto k : first_in_col)
    if (k == UINT32_MAX)
      return false;
  for (std::uint32_t k = 1; k < filled; ++k)
    if (sets.find(k) != sets.find(0))
      return false;
  return filled + 1 >= rows + cols;
}

inline bool verify_jump_property(const IntersectionTable& t) {
  return verify_jump_property(t.rows, t.cols,
                              [&](std::size_t r, std::size_t c) { return t.at(r, c).has_value(); });
}

enum class DotStyle { word, klass };

/// Undirected DOT; braid edges dashed, commutation edges solid. In class
/// style, incidence edges carry their witness word as a label.
inline std::string export_dot(const LabeledGraph& g, DotStyle style = DotStyle::word) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& label : g.vertex_labels)
    os << "  \"" << label << "\";\n";
  for (const Edge& e : g.edges) {
    os << "  \"" << g.vertex_labels[e.u] << "\" -- \"" << g.vertex_labels[e.v] << "\"";
    if (e.kind == EdgeKind::braid)
      os << " [style=dashed]";
    else if (e.kind == EdgeKind::incidence && style == DotStyle::klass && !e.witness.empty())
      os << " [label=\"" << e.witness << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace redword
