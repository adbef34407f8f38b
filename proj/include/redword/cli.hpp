#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redword.hpp"

namespace redword::cli {

enum ExitCode : int { ok = 0, usage = 1, violation = 2, cap_skip = 3 };

struct Common {
  std::uint64_t cap = kDefaultWordCap;
  std::string format = "text";
  bool strict = false;
  std::size_t max_n = kDefaultMaxN;
};

namespace detail {

inline void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  sub->add_option("--cap", c.cap, "Maximum |R(w)| to enumerate")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)));
  sub->add_flag("--strict", c.strict, "Exit 3 when the word cap forces a skip");
  sub->add_option("--max-n", c.max_n, "Largest n accepted")->check(CLI::Range(1, 16));
}

inline Permutation target(const std::string& text, const Common& c) {
  Permutation w = Permutation::parse(text);
  if (w.size() > c.max_n)
    throw config_error("n = " + std::to_string(w.size()) + " exceeds --max-n " +
                       std::to_string(c.max_n));
  return w;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k)
      s += sep;
    s += v[k];
  }
  return s;
}

inline void print_table(std::ostream& out, const IntersectionTable& t, const WordSet& words,
                        bool csv) {
  std::size_t width = std::max<std::size_t>(words.word_length(), 3);
  if (csv) {
    for (std::size_t c = 0; c < t.cols; ++c)
      out << ",C" << c + 1;
    out << "\n";
    for (std::size_t r = 0; r < t.rows; ++r) {
      out << "B" << r + 1;
      for (std::size_t c = 0; c < t.cols; ++c) {
        out << ",";
        if (const auto& cell = t.at(r, c))
          out << words.text(*cell);
      }
      out << "\n";
    }
    return;
  }
  const int w = static_cast<int>(width + 2);
  out << std::setw(6) << "";
  for (std::size_t c = 0; c < t.cols; ++c)
    out << std::setw(w) << ("C" + std::to_string(c + 1));
  out << "\n";
  for (std::size_t r = 0; r < t.rows; ++r) {
    out << std::left << std::setw(6) << ("B" + std::to_string(r + 1)) << std::right;
    for (std::size_t c = 0; c < t.cols; ++c) {
      const auto& cell = t.at(r, c);
      out << std::setw(w) << (cell ? words.text(*cell) : std::string("."));
    }
    out << "\n";
  }
}

} // namespace detail

/// Runs one invocation; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced words, braid and commutation classes in S_n"};
  app.require_subcommand(1, 1);

  Common common;
  std::string perm_text;
  std::string kind = "braid";
  std::string which = "word";
  std::size_t n = 0;
  unsigned workers = 1;
  std::string output;
  std::string checks = "all";
  bool range = false;

  auto* words_cmd = app.add_subcommand("words", "List R(w) in lexicographic order");
  auto* classes_cmd = app.add_subcommand("classes", "Partition R(w) into B(w) or C(w)");
  auto* table_cmd = app.add_subcommand("table", "Print the intersection table T(w)");
  auto* graph_cmd = app.add_subcommand("graph", "Emit G(w), G_c(w), G_b(w) or Γ(w)");
  auto* check_cmd = app.add_subcommand("check", "Bounds, predicates and checks for one w");
  auto* interval_cmd = app.add_subcommand("interval", "Weak order interval [e,w]");
  auto* counts_cmd = app.add_subcommand("counts", "Closed-form counts for S_n");
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive verification over S_n");
  auto* conj_cmd = app.add_subcommand("conjecture", "Compare the width/support conditions with circuit-freeness over S_n");

  for (auto* sub : {words_cmd, classes_cmd, table_cmd, graph_cmd, check_cmd, interval_cmd})
    sub->add_option("permutation", perm_text, "Window, e.g. [25314] or \"2 5 3 1 4\"")
        ->required();
  detail::add_common(words_cmd, common, {"text", "json"});
  detail::add_common(classes_cmd, common, {"text", "json"});
  detail::add_common(table_cmd, common, {"text", "json", "csv"});
  detail::add_common(graph_cmd, common, {"dot", "json"});
  detail::add_common(check_cmd, common, {"text", "json"});
  detail::add_common(interval_cmd, common, {"text", "json"});
  detail::add_common(counts_cmd, common, {"text", "json", "csv"});
  detail::add_common(scan_cmd, common, {"text", "json"});
  detail::add_common(conj_cmd, common, {"text", "json"});
  classes_cmd->add_option("--kind", kind, "braid or commutation")
      ->check(CLI::IsMember({"braid", "commutation", "b", "c"}));
  graph_cmd->add_option("--which", which, "word, gc, gb or gamma")
      ->check(CLI::IsMember({"word", "gc", "gb", "gamma"}));
  for (auto* sub : {counts_cmd, scan_cmd, conj_cmd})
    sub->add_option("--n", n, "Group size")->required()->check(CLI::PositiveNumber);
  counts_cmd->add_flag("--range", range, "Print every k from 1 to n");
  for (auto* sub : {scan_cmd, conj_cmd})
    sub->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--output", output, "JSON Lines destination (resumed if present)");
  scan_cmd->add_option("--checks", checks, "all, predicates, enumeration or weak")
      ->check(CLI::IsMember({"all", "predicates", "enumeration", "weak"}));

  // The graph subcommand defaults to DOT.
  graph_cmd->preparse_callback([&](std::size_t) { common.format = "dot"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ExitCode::ok;
    }
    app.exit(e, out, err);
    return ExitCode::usage;
  }

  const bool as_json = common.format == "json";
  try {
    if (words_cmd->parsed()) {
      const WordSet words = enumerate(detail::target(perm_text, common), common.cap);
      if (as_json)
        out << to_json(words).dump(2) << "\n";
      else
        for (std::size_t k = 0; k < words.size(); ++k)
          out << words.text(k) << "\n";
      return ExitCode::ok;
    }

    if (classes_cmd->parsed()) {
      const WordSet words = enumerate(detail::target(perm_text, common), common.cap);
      const MoveKind mk = parse_move_kind(kind);
      const ClassPartition p = partition(words, mk);
      if (as_json) {
        out << to_json(p, words).dump(2) << "\n";
      } else {
        const std::string prefix = mk == MoveKind::braid ? "B" : "C";
        for (std::size_t k = 0; k < p.size(); ++k) {
          std::vector<std::string> members;
          for (auto idx : p.classes[k])
            members.push_back(words.text(idx));
          out << prefix << k + 1 << ": " << detail::join(members, " ") << "\n";
        }
      }
      return ExitCode::ok;
    }

    if (table_cmd->parsed()) {
      const WordSet words = enumerate(detail::target(perm_text, common), common.cap);
      const IntersectionTable t = build_table(partition(words, MoveKind::braid),
                                              partition(words, MoveKind::commutation), words);
      if (as_json)
        out << to_json(t, words).dump(2) << "\n";
      else
        detail::print_table(out, t, words, common.format == "csv");
      return ExitCode::ok;
    }

    if (graph_cmd->parsed()) {
      const WordSet words = enumerate(detail::target(perm_text, common), common.cap);
      LabeledGraph g;
      DotStyle style = DotStyle::word;
      if (which == "gamma") {
        g = build_gamma(partition(words, MoveKind::braid), partition(words, MoveKind::commutation),
                        words);
        style = DotStyle::klass;
      } else {
        g = build_word_graph(words);
        if (which == "gc")
          g = contract(g, MoveKind::commutation);
        else if (which == "gb")
          g = contract(g, MoveKind::braid);
        if (which != "word")
          style = DotStyle::klass;
      }
      if (as_json)
        out << to_json(g).dump(2) << "\n";
      else
        out << export_dot(g, style);
      return ExitCode::ok;
    }

    if (check_cmd->parsed()) {
      const Permutation w = detail::target(perm_text, common);
      const ScanRecord rec = verify_permutation(w, check_all, common.cap);
      if (as_json) {
        json j = to_json(rec);
        j.erase("schema");
        j.erase("type");
        out << j.dump(2) << "\n";
      } else {
        auto line = [&](const std::string& k, const std::string& v) {
          out << std::left << std::setw(26) << k << v << "\n";
        };
        line("permutation", w.to_string());
        line("length", std::to_string(w.length()));
        line("avoids_321", detail::yes_no(rec.avoids_321));
        line("inversions_share_letter", detail::yes_no(rec.inversions_share_letter));
        line("upper_predicate", detail::yes_no(rec.upper_predicate));
        line("lower_pattern", detail::yes_no(rec.lower_pattern));
        if (rec.skipped) {
          line("status", "skipped: |R(w)| exceeds cap " + std::to_string(common.cap));
        } else {
          line("r", std::to_string(rec.r));
          line("b", std::to_string(rec.b));
          line("c", std::to_string(rec.c));
          line("achieves_lower", detail::yes_no(rec.achieves_lower));
          line("achieves_upper", detail::yes_no(rec.achieves_upper));
          line("circuit_free", detail::yes_no(rec.circuit_free));
          line("wid", std::to_string(rec.width));
          line("sup", std::to_string(rec.support_size));
          line("conjecture", to_string(*rec.conjecture));
          for (const auto& a : rec.braid_anomalies)
            line("braid_anomaly", a);
        }
        for (const auto& v : rec.violations)
          line("VIOLATION", v);
      }
      if (!rec.violations.empty())
        return ExitCode::violation;
      if (rec.skipped && common.strict)
        return ExitCode::cap_skip;
      return ExitCode::ok;
    }

    if (interval_cmd->parsed()) {
      const WeakInterval iv = interval(detail::target(perm_text, common), common.cap);
      if (as_json) {
        out << to_json(iv).dump(2) << "\n";
      } else {
        std::vector<std::string> sizes, sup;
        for (auto s : iv.rank_sizes)
          sizes.push_back(std::to_string(s));
        for (auto a : iv.support)
          sup.push_back(std::to_string(a));
        out << "permutation  " << iv.top.to_string() << "\n";
        out << "rank_sizes   " << detail::join(sizes, " ") << "\n";
        out << "elements     " << iv.element_count() << "\n";
        out << "width        " << iv.width << "\n";
        out << "support      " << iv.support_size << " {" << detail::join(sup, ",") << "}\n";
      }
      return ExitCode::ok;
    }

    if (counts_cmd->parsed()) {
      const std::size_t from = range ? 1 : n;
      if (common.format == "json") {
        json rows = json::array();
        for (std::size_t k = from; k <= n; ++k)
          rows.push_back(json{{"n", k},
                              {"catalan", catalan(k)},
                              {"upper", count_upper(k)},
                              {"lower", count_lower(k)}});
        out << rows.dump(2) << "\n";
      } else if (common.format == "csv") {
        out << "n,catalan,upper,lower\n";
        for (std::size_t k = from; k <= n; ++k)
          out << k << "," << catalan(k) << "," << count_upper(k) << "," << count_lower(k) << "\n";
      } else {
        for (std::size_t k = from; k <= n; ++k)
          out << "n " << k << "  catalan " << catalan(k) << "  upper " << count_upper(k)
              << "  lower " << count_lower(k) << "\n";
      }
      return ExitCode::ok;
    }

    if (scan_cmd->parsed() || conj_cmd->parsed()) {
      ScanOptions o;
      o.n = n;
      o.word_cap = common.cap;
      o.workers = workers;
      o.max_n = common.max_n;
      if (scan_cmd->parsed()) {
        o.output_path = output;
        o.checks = checks == "all"           ? check_all
                   : checks == "predicates"  ? check_predicates
                   : checks == "enumeration" ? check_enumeration
                                             : check_weak_order;
      } else {
        o.checks = check_weak_order;
      }
      const ScanReport r = scan(o);
      if (conj_cmd->parsed()) {
        if (as_json) {
          json j;
          j["n"] = r.n;
          j["checked"] = r.conjecture_checked;
          j["agree"] = r.conjecture_agree;
          j["skipped"] = r.skipped_count;
          json ce = json::array();
          for (const auto& c : r.conjecture_counterexamples)
            ce.push_back(json{{"window", c.window}, {"side", to_string(c.side)}});
          j["counterexamples"] = std::move(ce);
          out << j.dump(2) << "\n";
        } else {
          out << "n " << r.n << ": checked " << r.conjecture_checked << ", agree "
              << r.conjecture_agree << ", counterexamples " << r.conjecture_counterexamples.size()
              << ", skipped " << r.skipped_count << "\n";
          if (!r.conjecture_counterexamples.empty())
            out << "*** COUNTEREXAMPLES FOUND ***\n";
          for (const auto& c : r.conjecture_counterexamples)
            out << "  " << c.window << "  " << to_string(c.side) << "\n";
        }
      } else if (as_json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << format_report_text(r);
      }
      if (!r.ok())
        return ExitCode::violation;
      if (r.skipped_count > 0 && common.strict)
        return ExitCode::cap_skip;
      return ExitCode::ok;
    }
  } catch (const cap_exceeded& e) {
    err << "skipped: " << e.what() << "\n";
    return common.strict ? ExitCode::cap_skip : ExitCode::ok;
  } catch (const theorem_violation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return ExitCode::violation;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const config_error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }
  return ExitCode::usage;
}

} // namespace redword::cli
