#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library's enumeration, move, or interval code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Window = std::vector<int>;
using Letters = std::vector<int>;

inline Window identity(int n) {
  Window w(n);
  for (int k = 0; k < n; ++k)
    w[k] = k + 1;
  return w;
}

inline Window apply_word(const Letters& word, int n) {
  Window w = identity(n);
  for (int a : word)
    std::swap(w[a - 1], w[a]);
  return w;
}

inline int inversions(const Window& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      inv += w[i] > w[j];
  return inv;
}

/// Every letter sequence of length l(w) over [1, n-1] that evaluates to w,
/// in lexicographic order.
inline std::vector<Letters> naive_reduced_words(const Window& w) {
  const int n = static_cast<int>(w.size());
  const int len = inversions(w);
  std::vector<Letters> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  Letters word(len, 1);
  while (true) {
    if (apply_word(word, n) == w)
      out.push_back(word);
    int k = len - 1;
    while (k >= 0 && word[k] == n - 1)
      word[k--] = 1;
    if (k < 0)
      break;
    ++word[k];
  }
  return out;
}

inline bool has_321(const Window& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (w[i] > w[j] && w[j] > w[k])
          return true;
  return false;
}

/// [e, w] in right weak order by downward closure: repeatedly drop a right
/// descent.
inline std::set<Window> interval_by_closure(const Window& w) {
  std::set<Window> seen{w};
  std::vector<Window> todo{w};
  while (!todo.empty()) {
    Window u = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] < u[i + 1])
        continue;
      Window v = u;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second)
        todo.push_back(v);
    }
  }
  return seen;
}

/// Closure of one word under braid moves only.
inline std::set<Letters> braid_closure(const Letters& start) {
  std::set<Letters> seen{start};
  std::vector<Letters> todo{start};
  while (!todo.empty()) {
    Letters u = todo.back();
    todo.pop_back();
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
      if (u[i - 1] != u[i + 1] || std::abs(u[i] - u[i - 1]) != 1)
        continue;
      Letters v = u;
      v[i - 1] = u[i];
      v[i] = u[i - 1];
      v[i + 1] = u[i];
      if (seen.insert(v).second)
        todo.push_back(v);
    }
  }
  return seen;
}

/// Edge count of the Cartesian product of paths with the given vertex
/// counts, by explicit construction of the product graph.
inline std::size_t product_of_paths_edges(const std::vector<int>& path_sizes) {
  std::vector<std::vector<int>> vertices{{}};
  for (int size : path_sizes) {
    std::vector<std::vector<int>> next;
    for (const auto& v : vertices)
      for (int k = 0; k < size; ++k) {
        auto x = v;
        x.push_back(k);
        next.push_back(x);
      }
    vertices = next;
  }
  std::size_t edges = 0;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      int diff = 0, step = 0;
      for (std::size_t k = 0; k < path_sizes.size(); ++k)
        if (vertices[a][k] != vertices[b][k]) {
          ++diff;
          step = std::abs(vertices[a][k] - vertices[b][k]);
        }
      edges += diff == 1 && step == 1;
    }
  return edges;
}

/// binom(2n, n) / (n + 1) by Pascal's triangle.
inline std::uint64_t catalan_by_pascal(int n) {
  std::vector<std::vector<std::uint64_t>> c(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j)
      c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[2 * n][n] / (n + 1);
}

} // namespace oracle
