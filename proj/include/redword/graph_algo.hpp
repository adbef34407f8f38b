#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace redword {

/// Union-find with path halving and union by size.
class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (size_[a] < size_[b])
      std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const noexcept { return parent_.size(); }

  /// Component id per element, ids numbered by smallest member.
  std::vector<std::uint32_t> labels() {
    const std::size_t n = parent_.size();
    std::vector<std::uint32_t> root_label(n, UINT32_MAX), out(n);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint32_t r = find(v);
      if (root_label[r] == UINT32_MAX)
        root_label[r] = next++;
      out[v] = root_label[r];
    }
    return out;
  }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

using Adjacency = std::vector<std::vector<std::uint32_t>>;

inline Adjacency make_adjacency(std::size_t vertices,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  Adjacency adj(vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

/// Empty graphs count as connected.
inline bool adjacency_connected(const Adjacency& adj) {
  if (adj.empty())
    return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == adj.size();
}

inline bool adjacency_bipartite(const Adjacency& adj) {
  std::vector<signed char> color(adj.size(), -1);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < adj.size(); ++s) {
    if (color[s] >= 0)
      continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      for (std::uint32_t v : adj[u]) {
        if (color[v] < 0) {
          color[v] = static_cast<signed char>(1 - color[u]);
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace redword
