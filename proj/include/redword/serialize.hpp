#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "characterizations.hpp"
#include "classes.hpp"
#include "graphs.hpp"
#include "reduced_words.hpp"
#include "weak_order.hpp"

namespace redword {

using json = nlohmann::ordered_json;

inline json to_json(const WordSet& words) {
  json j;
  j["permutation"] = words.target().to_string();
  j["length"] = words.word_length();
  j["count"] = words.size();
  j["words"] = words.texts();
  return j;
}

/// Classes as arrays of word strings, ordered by representative.
inline json to_json(const ClassPartition& p, const WordSet& words) {
  json classes = json::array();
  for (const auto& c : p.classes) {
    json members = json::array();
    for (auto k : c)
      members.push_back(words.text(k));
    classes.push_back(std::move(members));
  }
  json j;
  j["permutation"] = words.target().to_string();
  j["kind"] = to_string(p.kind);
  j["count"] = p.size();
  j["classes"] = std::move(classes);
  return j;
}

/// Row-major array of rows; empty cells are null.
inline json to_json(const IntersectionTable& t, const WordSet& words) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.cols; ++c) {
      const auto& cell = t.at(r, c);
      row.push_back(cell ? json(words.text(*cell)) : json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  json j;
  j["permutation"] = words.target().to_string();
  j["rows"] = t.rows;
  j["columns"] = t.cols;
  j["cells"] = std::move(rows);
  return j;
}

inline json to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges) {
    json je;
    je["u"] = g.vertex_labels[e.u];
    je["v"] = g.vertex_labels[e.v];
    je["kind"] = to_string(e.kind);
    if (!e.witness.empty())
      je["witness"] = e.witness;
    edges.push_back(std::move(je));
  }
  json j;
  j["vertices"] = g.vertex_labels;
  j["edges"] = std::move(edges);
  return j;
}

/// Per-rank element lists in window notation, plus cover relations.
inline json to_json(const WeakInterval& iv) {
  json ranks = json::array();
  for (const auto& rank : iv.ranks) {
    json r = json::array();
    for (const auto& u : rank)
      r.push_back(u.to_string());
    ranks.push_back(std::move(r));
  }
  json cov = json::array();
  for (const Cover& c : covers(iv))
    cov.push_back(json::array({c.lower.to_string(), c.upper.to_string(), c.letter}));
  json j;
  j["permutation"] = iv.top.to_string();
  j["rank_sizes"] = iv.rank_sizes;
  j["width"] = iv.width;
  j["support"] = iv.support;
  j["support_size"] = iv.support_size;
  j["ranks"] = std::move(ranks);
  j["covers"] = std::move(cov);
  return j;
}

inline json to_json(const BoundStatus& s) {
  json j;
  j["r"] = s.r;
  j["b"] = s.b;
  j["c"] = s.c;
  j["achieves_lower"] = s.achieves_lower;
  j["achieves_upper"] = s.achieves_upper;
  return j;
}

} // namespace redword
