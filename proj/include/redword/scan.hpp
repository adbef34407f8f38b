#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "characterizations.hpp"
#include "classes.hpp"
#include "error.hpp"
#include "graphs.hpp"
#include "permutation.hpp"
#include "reduced_words.hpp"
#include "serialize.hpp"
#include "weak_order.hpp"

namespace redword {

inline constexpr int kScanSchema = 1;

/// Check groups; predicates are enumeration-free and always run.
enum CheckSet : unsigned {
  check_predicates = 0,
  check_enumeration = 1u << 0,  // R(w), classes, graphs, table, bounds
  check_weak_order = 1u << 1,   // [e, w], width, support, conjecture
  check_all = check_enumeration | check_weak_order,
};

struct ScanOptions {
  std::size_t n = 1;
  std::uint64_t word_cap = kDefaultWordCap;
  unsigned checks = check_all;
  unsigned workers = 1;
  std::string output_path;  // empty: no JSON Lines output
  std::size_t max_n = kDefaultMaxN;
  std::size_t batch = 256;
};

inline void validate(const ScanOptions& o) {
  if (o.n < 1)
    throw invalid_input("n must be at least 1");
  if (o.n > o.max_n)
    throw config_error("n = " + std::to_string(o.n) + " exceeds the configured maximum " +
                       std::to_string(o.max_n));
  if (o.max_n > kMaxRank)
    throw config_error("max n cannot exceed " + std::to_string(kMaxRank));
  if (o.word_cap < 1)
    throw invalid_input("word cap must be at least 1");
  if (o.workers < 1)
    throw invalid_input("workers must be at least 1");
}

struct ScanRecord {
  Permutation w;

  bool avoids_321 = false;
  bool inversions_share_letter = false;
  bool upper_predicate = false;
  bool lower_pattern = false;

  bool enumerated = false;
  bool skipped = false;  // |R(w)| above the cap
  std::uint64_t r = 0, b = 0, c = 0;
  bool achieves_lower = false;
  bool achieves_upper = false;
  bool circuit_free = false;

  bool weak = false;
  std::size_t width = 0;
  std::size_t support_size = 0;
  std::optional<ConjectureOutcome> conjecture;

  std::vector<std::string> braid_anomalies;
  std::vector<std::string> violations;

  /// Enumerated result when available, otherwise the closed predicate.
  bool counts_upper() const { return enumerated ? achieves_upper : upper_predicate; }
  bool counts_lower() const { return enumerated ? achieves_lower : lower_pattern; }
};

namespace detail {

inline void expect(std::vector<std::string>& out, bool ok, const std::string& what) {
  if (!ok)
    out.push_back(what);
}

} // namespace detail

/// Runs every selected check on one permutation. Violations are recorded,
/// never thrown.
inline ScanRecord verify_permutation(const Permutation& w, unsigned checks = check_all,
                                     std::uint64_t cap = kDefaultWordCap) {
  ScanRecord rec;
  rec.w = w;
  rec.avoids_321 = is_321_avoiding(w);
  rec.inversions_share_letter = inversions_pairwise_share_letter(w);
  rec.upper_predicate = upper_predicate(w);
  rec.lower_pattern = lower_predicate_pattern(w);
  auto& bad = rec.violations;
  detail::expect(bad, !rec.upper_predicate || rec.lower_pattern,
                 "upper_predicate without lower_pattern");

  if ((checks & check_all) == 0)
    return rec;

  std::optional<WordSet> words;
  try {
    words.emplace(enumerate(w, cap));
  } catch (const cap_exceeded&) {
    rec.skipped = true;
    return rec;
  }

  try {
    const std::size_t len = w.length();
    for (std::size_t k = 0; k < words->size(); ++k) {
      if ((*words)[k].size() != len || evaluate((*words)[k], w.size()) != w) {
        bad.push_back("word " + words->text(k) + " does not evaluate to w");
        break;
      }
    }
    const ClassPartition bp = partition(*words, MoveKind::braid);
    const ClassPartition cp = partition(*words, MoveKind::commutation);
    const LabeledGraph gamma = build_gamma(bp, cp, *words);
    rec.enumerated = true;
    rec.r = words->size();
    rec.b = bp.size();
    rec.c = cp.size();
    rec.circuit_free = is_tree(gamma);
    const BoundStatus s = bound_status(rec.r, rec.b, rec.c);
    rec.achieves_lower = s.achieves_lower;
    rec.achieves_upper = s.achieves_upper;

    if (checks & check_enumeration) {
      for (const auto& members : bp.classes) {
        const std::string rep = words->text(members.front());
        try {
          braid_class_shape(members.size(), len);
          if (!verify_braid_class_graph(*words, members))
            rec.braid_anomalies.push_back(rep + ": size " + std::to_string(members.size()) +
                                          " not a product of 2- and 3-paths");
        } catch (const theorem_violation&) {
          rec.braid_anomalies.push_back(rep + ": size " + std::to_string(members.size()) +
                                        " not 2^x 3^y with 3x+5y <= l(w)");
        }
      }

      const LabeledGraph g = build_word_graph(*words);
      detail::expect(bad, is_connected(g), "G(w) not connected");
      detail::expect(bad, is_bipartite(contract(g, MoveKind::commutation)), "G_c(w) not bipartite");
      detail::expect(bad, is_bipartite(contract(g, MoveKind::braid)), "G_b(w) not bipartite");
      detail::expect(bad, gamma.edge_count() == rec.r, "Γ(w) edge count differs from |R(w)|");
      detail::expect(bad, is_connected(gamma), "Γ(w) not connected");
      const IntersectionTable t = build_table(bp, cp, *words);
      detail::expect(bad, t.nonempty_count() == rec.r, "T(w) cell count differs from |R(w)|");
      detail::expect(bad, verify_jump_property(t), "T(w) lacks the jump property");

      detail::expect(bad, rec.achieves_upper == (rec.b == 1 || rec.c == 1),
                     "upper bound not equivalent to b=1 or c=1");
      detail::expect(bad, rec.achieves_upper == rec.upper_predicate,
                     "upper bound disagrees with upper_predicate");
      detail::expect(bad, rec.achieves_lower == rec.circuit_free,
                     "lower bound disagrees with Γ(w) being a tree");
      detail::expect(bad, rec.achieves_lower == rec.lower_pattern,
                     "lower bound disagrees with lower_pattern");
      detail::expect(bad,
                     rec.achieves_lower == lower_predicate_from_words(*words, rec.b, rec.c),
                     "lower bound disagrees with template match over R(w)");
      detail::expect(bad, (rec.c == 1) == rec.avoids_321, "c=1 disagrees with 321-avoidance");
      detail::expect(bad, (rec.b == 1) == rec.inversions_share_letter,
                     "b=1 disagrees with pairwise-sharing inversions");
      detail::expect(bad, !rec.achieves_upper || rec.achieves_lower,
                     "upper bound achieved without lower bound");
      detail::expect(bad, rec.c != 1 || rec.b == rec.r, "c=1 but b != r");
      detail::expect(bad, rec.b != 1 || rec.c == rec.r, "b=1 but c != r");
    }

    if (checks & check_weak_order) {
      const WeakInterval iv = interval(*words);
      rec.weak = true;
      rec.width = iv.width;
      rec.support_size = iv.support_size;
      detail::expect(bad, iv.rank_sizes.front() == 1 && iv.rank_sizes.back() == 1,
                     "[e,w] end ranks are not singletons");
      rec.conjecture =
          compare_conjecture(conjecture_conditions(w, iv).any(), rec.circuit_free);
    }
  } catch (const theorem_violation& e) {
    bad.push_back(e.what());
  }
  return rec;
}

inline json to_json(const ScanRecord& rec) {
  json j;
  j["schema"] = kScanSchema;
  j["type"] = "record";
  j["window"] = rec.w.to_string();
  j["avoids_321"] = rec.avoids_321;
  j["inversions_share_letter"] = rec.inversions_share_letter;
  j["upper_predicate"] = rec.upper_predicate;
  j["lower_pattern"] = rec.lower_pattern;
  j["status"] = rec.skipped ? "skipped_cap" : rec.enumerated ? "enumerated" : "predicates_only";
  if (rec.enumerated) {
    j["r"] = rec.r;
    j["b"] = rec.b;
    j["c"] = rec.c;
    j["achieves_lower"] = rec.achieves_lower;
    j["achieves_upper"] = rec.achieves_upper;
    j["circuit_free"] = rec.circuit_free;
  }
  if (rec.weak) {
    j["width"] = rec.width;
    j["support_size"] = rec.support_size;
  }
  if (rec.conjecture)
    j["conjecture"] = to_string(*rec.conjecture);
  j["braid_anomalies"] = rec.braid_anomalies;
  j["violations"] = rec.violations;
  return j;
}

inline ConjectureOutcome parse_conjecture_outcome(const std::string& s) {
  for (auto o : {ConjectureOutcome::agree, ConjectureOutcome::conditions_but_circuit,
                 ConjectureOutcome::circuit_free_no_condition})
    if (to_string(o) == s)
      return o;
  throw invalid_input("unknown conjecture outcome \"" + s + "\"");
}

inline ScanRecord record_from_json(const json& j) {
  if (j.at("schema").get<int>() != kScanSchema || j.at("type") != "record")
    throw invalid_input("not a schema-1 scan record");
  ScanRecord rec;
  rec.w = Permutation::parse(j.at("window").get<std::string>());
  rec.avoids_321 = j.at("avoids_321");
  rec.inversions_share_letter = j.at("inversions_share_letter");
  rec.upper_predicate = j.at("upper_predicate");
  rec.lower_pattern = j.at("lower_pattern");
  const std::string status = j.at("status");
  rec.skipped = status == "skipped_cap";
  rec.enumerated = status == "enumerated";
  if (rec.enumerated) {
    rec.r = j.at("r");
    rec.b = j.at("b");
    rec.c = j.at("c");
    rec.achieves_lower = j.at("achieves_lower");
    rec.achieves_upper = j.at("achieves_upper");
    rec.circuit_free = j.at("circuit_free");
  }
  if (j.contains("width")) {
    rec.weak = true;
    rec.width = j.at("width");
    rec.support_size = j.at("support_size");
  }
  if (j.contains("conjecture"))
    rec.conjecture = parse_conjecture_outcome(j.at("conjecture"));
  rec.braid_anomalies = j.at("braid_anomalies").get<std::vector<std::string>>();
  rec.violations = j.at("violations").get<std::vector<std::string>>();
  return rec;
}

struct Counterexample {
  std::string window;
  ConjectureOutcome side;
};

struct ScanReport {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t upper_achiever_count = 0;
  std::uint64_t lower_achiever_count = 0;
  std::uint64_t skipped_count = 0;
  std::uint64_t enumerated_count = 0;
  std::uint64_t conjecture_checked = 0;
  std::uint64_t conjecture_agree = 0;
  std::vector<Counterexample> conjecture_counterexamples;
  std::uint64_t expected_upper = 0;
  std::uint64_t expected_lower = 0;
  bool closed_form_upper_match = false;
  bool closed_form_lower_match = false;
  std::uint64_t braid_anomaly_classes = 0;
  std::uint64_t braid_anomaly_permutations = 0;
  std::vector<std::string> violations;  // "window: message"

  bool ok() const { return violations.empty(); }

  void add(const ScanRecord& rec) {
    ++total;
    upper_achiever_count += rec.counts_upper();
    lower_achiever_count += rec.counts_lower();
    skipped_count += rec.skipped;
    enumerated_count += rec.enumerated;
    if (rec.conjecture) {
      ++conjecture_checked;
      if (*rec.conjecture == ConjectureOutcome::agree)
        ++conjecture_agree;
      else
        conjecture_counterexamples.push_back({rec.w.to_string(), *rec.conjecture});
    }
    braid_anomaly_classes += rec.braid_anomalies.size();
    braid_anomaly_permutations += !rec.braid_anomalies.empty();
    for (const auto& v : rec.violations)
      violations.push_back(rec.w.to_string() + ": " + v);
  }

  void finish() {
    expected_upper = count_upper(n);
    expected_lower = count_lower(n);
    closed_form_upper_match = upper_achiever_count == expected_upper;
    closed_form_lower_match = lower_achiever_count == expected_lower;
  }
};

inline json to_json(const ScanReport& r) {
  json ce = json::array();
  for (const auto& c : r.conjecture_counterexamples)
    ce.push_back(json{{"window", c.window}, {"side", to_string(c.side)}});
  json j;
  j["schema"] = kScanSchema;
  j["type"] = "report";
  j["n"] = r.n;
  j["total"] = r.total;
  j["upper_achiever_count"] = r.upper_achiever_count;
  j["lower_achiever_count"] = r.lower_achiever_count;
  j["expected_upper"] = r.expected_upper;
  j["expected_lower"] = r.expected_lower;
  j["closed_form_match"] = {{"upper", r.closed_form_upper_match},
                            {"lower", r.closed_form_lower_match}};
  j["enumerated_count"] = r.enumerated_count;
  j["skipped_count"] = r.skipped_count;
  j["conjecture_checked"] = r.conjecture_checked;
  j["conjecture_agree"] = r.conjecture_agree;
  j["conjecture_counterexamples"] = std::move(ce);
  j["braid_anomaly_classes"] = r.braid_anomaly_classes;
  j["braid_anomaly_permutations"] = r.braid_anomaly_permutations;
  j["violation_count"] = r.violations.size();
  j["violations"] = r.violations;
  return j;
}

inline std::string format_report_text(const ScanReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    os << std::left << std::setw(28) << k << v << "\n";
  };
  auto yes = [](bool b) { return std::string(b ? "yes" : "NO"); };
  row("n", std::to_string(r.n));
  row("permutations", std::to_string(r.total));
  row("enumerated", std::to_string(r.enumerated_count));
  row("skipped (cap)", std::to_string(r.skipped_count));
  row("upper achievers", std::to_string(r.upper_achiever_count) + " (closed form " +
                             std::to_string(r.expected_upper) + ", match " +
                             yes(r.closed_form_upper_match) + ")");
  row("lower achievers", std::to_string(r.lower_achiever_count) + " (closed form " +
                             std::to_string(r.expected_lower) + ", match " +
                             yes(r.closed_form_lower_match) + ")");
  row("conjecture checked", std::to_string(r.conjecture_checked));
  row("conjecture agree", std::to_string(r.conjecture_agree));
  row("conjecture counterexamples", std::to_string(r.conjecture_counterexamples.size()));
  for (const auto& c : r.conjecture_counterexamples)
    row("  " + c.window, to_string(c.side));
  row("braid anomaly classes", std::to_string(r.braid_anomaly_classes) + " in " +
                                   std::to_string(r.braid_anomaly_permutations) +
                                   " permutations");
  row("violations", std::to_string(r.violations.size()));
  for (std::size_t k = 0; k < r.violations.size() && k < 20; ++k)
    os << "  " << r.violations[k] << "\n";
  return os.str();
}

/// Computes records for `perms` with `workers` threads; result order follows
/// the input order regardless of scheduling.
inline std::vector<ScanRecord> verify_batch(const std::vector<Permutation>& perms, std::size_t begin,
                                            std::size_t end, const ScanOptions& o) {
  std::vector<ScanRecord> out(end - begin);
  std::atomic<std::size_t> next{begin};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < end;)
      out[k - begin] = verify_permutation(perms[k], o.checks, o.word_cap);
  };
  const unsigned threads = std::min<std::size_t>(o.workers, end - begin);
  if (threads <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(work);
  for (auto& t : pool)
    t.join();
  return out;
}

namespace detail {

/// Leading records of an earlier run over the same S_n, in order. Stops at
/// the first line that is not the expected next record (truncated tail,
/// final report line, or a mismatch).
inline std::vector<std::pair<std::string, ScanRecord>>
read_resumable(const std::string& path, const std::vector<Permutation>& perms) {
  std::vector<std::pair<std::string, ScanRecord>> kept;
  std::ifstream in(path);
  if (!in)
    return kept;
  std::string line;
  while (kept.size() < perms.size() && std::getline(in, line)) {
    if (in.eof())
      break;  // no trailing newline: possibly cut mid-write
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("type", "") != "record")
      break;
    ScanRecord rec;
    try {
      rec = record_from_json(j);
    } catch (const std::exception&) {
      break;
    }
    if (rec.w != perms[kept.size()])
      break;
    kept.emplace_back(line, std::move(rec));
  }
  return kept;
}

} // namespace detail

/// Scans S_n in lexicographic window order. With an output path, writes one
/// JSON line per record and a final report line; an existing file is resumed
/// from its last complete record.
inline ScanReport scan(const ScanOptions& o) {
  validate(o);
  const std::vector<Permutation> perms = all_permutations(o.n);
  ScanReport report;
  report.n = o.n;

  std::optional<std::ofstream> out;
  std::size_t start = 0;
  if (!o.output_path.empty()) {
    auto kept = detail::read_resumable(o.output_path, perms);
    std::string prefix;
    for (auto& [line, rec] : kept) {
      prefix += line;
      prefix += '\n';
      report.add(rec);
    }
    start = kept.size();
    out.emplace(o.output_path, std::ios::binary | std::ios::trunc);
    if (!*out)
      throw std::runtime_error("cannot open " + o.output_path + " for writing");
    *out << prefix;
  }

  for (std::size_t begin = start; begin < perms.size(); begin += o.batch) {
    const std::size_t end = std::min(perms.size(), begin + o.batch);
    for (const ScanRecord& rec : verify_batch(perms, begin, end, o)) {
      report.add(rec);
      if (out)
        *out << to_json(rec).dump() << '\n';
    }
    if (out)
      out->flush();
  }
  report.finish();
  if (out) {
    *out << to_json(report).dump() << '\n';
    out->flush();
    if (!*out)
      throw std::runtime_error("write to " + o.output_path + " failed");
  }
  return report;
}

} // namespace redword
