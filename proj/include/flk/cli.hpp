#pragma once

// Command-line front end. run() never prints; it returns the exit code and
// the text or JSON payload so callers and tests see exactly what a shell
// would.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flk/braid.hpp"
#include "flk/braid_equality.hpp"
#include "flk/budget.hpp"
#include "flk/error.hpp"
#include "flk/gauss_code.hpp"
#include "flk/link_search.hpp"
#include "flk/markov.hpp"
#include "flk/moves.hpp"
#include "flk/verdict.hpp"
#include "flk/yangbaxter.hpp"

namespace flk::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 2, kBudget = 3 };

struct CommandOutcome {
  int exit_code = kOk;
  std::string payload;
};

// ---------------------------------------------------------------------------
// JSON encodings

inline Json to_json(const BudgetSpent& s) {
  return Json{{"states", s.states}, {"depth", s.depth}, {"exhausted", s.exhausted}};
}

inline Json to_json(const Witness& w) {
  return Json{{"invariant", w.invariant}, {"left", w.left}, {"right", w.right}};
}

inline Json to_json(const std::vector<Generator>& letters) {
  Json out = Json::array();
  for (Generator g : letters) out.push_back(format_generator(g));
  return out;
}

inline Json to_json(const Rewrite& r) {
  return Json{{"rule", rule_name(r.rule)}, {"position", r.position}, {"from", to_json(r.from)}, {"to", to_json(r.to)}};
}

inline Json to_json(const MoveApplication& m) {
  Json slots = Json::array();
  for (const auto& s : m.slots) slots.push_back({s.component, s.index});
  Json out{{"kind", move_kind_name(m.kind)}, {"slots", slots}, {"fresh", m.fresh}};
  if (m.kind == MoveKind::R2Plus) out["pattern"] = m.pattern == R2Pattern::Parallel ? "parallel" : "antiparallel";
  out["text"] = format_move(m);
  return out;
}

inline Json to_json(const LMoveSpec& s) {
  return Json{{"flavor", flavor_name(s.flavor)}, {"cut_position", s.cut_position}, {"cut_strand", s.cut_strand}};
}

inline Json to_json(const MarkovStep& s) {
  Json out{{"kind", markov_step_name(s.kind)}};
  switch (s.kind) {
    case MarkovStepKind::Relation: out["rewrite"] = to_json(s.rewrite); break;
    case MarkovStepKind::Conjugation:
      out["generator"] = format_generator(s.g);
      out["reversed"] = s.reversed;
      break;
    case MarkovStepKind::LMove:
    case MarkovStepKind::InverseLMove: out["spec"] = to_json(s.spec); break;
    case MarkovStepKind::ClosureIsotopy: {
      Json path = Json::array();
      for (const auto& m : s.link_path) path.push_back(to_json(m));
      out["link_path"] = path;
      break;
    }
  }
  out["from"] = format_braid_word(s.from);
  out["to"] = format_braid_word(s.to);
  return out;
}

template <typename Step>
Json path_json(const std::vector<Step>& path) {
  Json out = Json::array();
  for (const auto& s : path) out.push_back(to_json(s));
  return out;
}

// ---------------------------------------------------------------------------
// Text renderings

inline std::string format_rewrite(const Rewrite& r) {
  return std::string(rule_name(r.rule)) + "@" + std::to_string(r.position);
}

inline std::string join_text(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " " : "") + parts[k];
  return out;
}

template <typename Step>
std::string verdict_text(const EqResult<Step>& r, const std::function<std::string(const Step&)>& fmt) {
  std::string out = verdict_name(r.verdict);
  switch (r.verdict) {
    case Verdict::Equal: {
      std::vector<std::string> steps;
      for (const auto& s : r.path) steps.push_back(fmt(s));
      out += "  path: " + (steps.empty() ? std::string("(empty)") : join_text(steps));
      break;
    }
    case Verdict::Distinct:
      out += "  witness: " + r.witness.invariant + " " + r.witness.left + " vs " + r.witness.right;
      break;
    case Verdict::Unknown:
      out += "  states: " + std::to_string(r.spent.states) + "  depth: " + std::to_string(r.spent.depth) +
             (r.spent.exhausted ? "  (budget exhausted)" : "  (all states within caps explored)");
      break;
  }
  return out + "\n";
}

template <typename Step>
Json verdict_json(Json doc, const EqResult<Step>& r) {
  doc["verdict"] = verdict_name(r.verdict);
  if (r.verdict == Verdict::Equal) doc["path"] = path_json(r.path);
  if (r.verdict == Verdict::Distinct) doc["witness"] = to_json(r.witness);
  doc["budget_spent"] = to_json(r.spent);
  return doc;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// ---------------------------------------------------------------------------
// Argument helpers

struct BudgetFlags {
  std::optional<int> max_crossings;
  std::optional<int> max_depth;
  std::optional<long> max_states;
};

/// Flags override the defaults; FLK_MAX_STATES applies when --max-states
/// is absent.
inline SearchBudget resolve_budget(SearchBudget base, const BudgetFlags& flags) {
  if (flags.max_crossings) base.max_crossings = *flags.max_crossings;
  if (flags.max_depth) base.max_depth = *flags.max_depth;
  if (flags.max_states) {
    base.max_states = *flags.max_states;
  } else if (const char* env = std::getenv("FLK_MAX_STATES"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0') throw Error(ErrorCode::InvalidBudget, std::string("FLK_MAX_STATES='") + env + "' is not an integer");
    base.max_states = v;
  }
  base.validate();
  return base;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] != ',') continue;
    const std::string item = text.substr(start, k - start);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw Error(ErrorCode::MalformedToken, std::string(what) + ": token '" + item + "' at position " +
                                                 std::to_string(start) + " is not an integer");
    }
    out.push_back(v);
    start = k + 1;
  }
  if (out.size() != expected) {
    throw Error(ErrorCode::MalformedToken, std::string(what) + ": expected " + std::to_string(expected) +
                                               " comma-separated integers, got " + std::to_string(out.size()));
  }
  return out;
}

inline Generator parse_generator(const std::string& text, int strands) {
  const auto w = parse_braid_word("fB " + std::to_string(strands) + ": " + text);
  if (w.size() != 1) throw Error(ErrorCode::MalformedToken, "expected one generator, got '" + text + "'");
  return w[0];
}

inline MoveKinds parse_kinds(const std::string& text) {
  if (text.empty() || text == "all") return all_move_kinds();
  MoveKinds out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] != ',') continue;
    const std::string item = text.substr(start, k - start);
    bool found = false;
    for (MoveKind kind : all_move_kinds()) {
      if (item == move_kind_name(kind)) {
        out.insert(kind);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::MalformedToken, "move kind '" + item + "' at position " + std::to_string(start) +
                                                 " is not one of R1-, R1+, R2-, R2+, R3");
    }
    start = k + 1;
  }
  return out;
}

inline RMatrix parse_r_matrix(std::uint32_t m, const std::string& abcd, const std::string& entries) {
  if (!entries.empty()) {
    return RMatrix::full(ModMatrix(4, m, parse_int_list(entries, 16, "--entries")));
  }
  if (abcd.empty()) throw Error(ErrorCode::MalformedToken, "one of --abcd or --entries is required");
  const auto v = parse_int_list(abcd, 4, "--abcd");
  return RMatrix::eight_vertex(m, v[0], v[1], v[2], v[3]);
}

inline Json r_matrix_json(const RMatrix& r) {
  Json out;
  if (r.params()) out["abcd"] = {r.params()->a, r.params()->b, r.params()->c, r.params()->d};
  out["entries"] = r.matrix().entries();
  return out;
}

inline std::string r_matrix_label(const RMatrix& r) {
  if (r.params()) {
    const auto& p = *r.params();
    return std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," + std::to_string(p.d);
  }
  std::string out;
  for (auto e : r.matrix().entries()) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

// ---------------------------------------------------------------------------
// run

/// Parses args (without the program name) and executes one subcommand.
inline CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Free braids, free links and Yang-Baxter invariants"};
  app.name("flk");
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 1;
  BudgetFlags bf;
  bool unoriented = false;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_option("--max-crossings", bf.max_crossings, "Crossing cap for diagram searches, length cap for words");
  app.add_option("--max-depth", bf.max_depth, "Combined depth cap of both search frontiers");
  app.add_option("--max-states", bf.max_states, "State cap (overrides FLK_MAX_STATES)");
  app.add_flag("--unoriented", unoriented, "Compare diagrams up to component reversal");

  std::function<CommandOutcome()> action;
  auto emit = [&](Json doc, const std::string& text) {
    if (!doc.contains("budget_spent")) doc["budget_spent"] = to_json(BudgetSpent{});
    return CommandOutcome{kOk, json ? doc.dump(2) + "\n" : text};
  };
  auto base = [](const char* command, Json inputs) { return Json{{"command", command}, {"inputs", std::move(inputs)}}; };

  // braid ------------------------------------------------------------------
  auto* braid = app.add_subcommand("braid", "Free braid words")->require_subcommand(1);
  std::string w_text, a_text, b_text;

  auto* simplify = braid->add_subcommand("simplify", "Normalize a word");
  simplify->add_option("--braid", w_text, "Word, e.g. 'fB 3: s1 z2'")->required();
  simplify->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(w_text);
      auto [nf, trace] = normalize_traced(w);
      Json doc = base("braid simplify", {{"braid", format_braid_word(w)}});
      doc["result"] = format_braid_word(nf);
      doc["path"] = path_json(trace);
      return emit(doc, format_braid_word(nf) + "\n");
    };
  });

  auto* beq = braid->add_subcommand("eq", "Bounded word equality");
  beq->add_option("--a", a_text)->required();
  beq->add_option("--b", b_text)->required();
  beq->callback([&] {
    action = [&] {
      const BraidWord u = parse_braid_word(a_text), v = parse_braid_word(b_text);
      const SearchBudget budget =
          resolve_budget(SearchBudget::defaults_for(static_cast<int>(std::max(u.size(), v.size()))), bf);
      const BraidResult r = words_equal_bounded(u, v, budget);
      Json doc = base("braid eq", {{"a", format_braid_word(u)}, {"b", format_braid_word(v)}});
      return emit(verdict_json(doc, r), verdict_text<Rewrite>(r, format_rewrite));
    };
  });

  auto* perm = braid->add_subcommand("perm", "Strand permutation (top position -> bottom position)");
  perm->add_option("--braid", w_text)->required();
  perm->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(w_text);
      const Permutation p = strand_permutation(w);
      Json doc = base("braid perm", {{"braid", format_braid_word(w)}});
      doc["result"] = format_permutation(p);
      doc["images"] = p.images();
      return emit(doc, format_permutation(p) + "\n");
    };
  });

  // link -------------------------------------------------------------------
  auto* link = app.add_subcommand("link", "Free link diagrams as Gauss codes")->require_subcommand(1);
  std::string code_text, kinds_text;
  auto opts = [&] {
    LinkSearchOptions o;
    o.unoriented = unoriented;
    return o;
  };

  auto* canon = link->add_subcommand("canon", "Canonical form");
  canon->add_option("--code", code_text, "Gauss code, e.g. '1 2 1 2' or 'x | x'")->required();
  canon->callback([&] {
    action = [&] {
      const GaussCode c = parse_gauss_code(code_text);
      const GaussCode k = canonical_form(c, unoriented);
      Json doc = base("link canon", {{"code", format_gauss_code(c)}, {"unoriented", unoriented}});
      doc["result"] = format_gauss_code(k);
      return emit(doc, format_gauss_code(k) + "\n");
    };
  });

  auto* moves = link->add_subcommand("moves", "Enumerate Reidemeister moves");
  moves->add_option("--code", code_text)->required();
  moves->add_option("--kinds", kinds_text, "Comma-separated subset of R1-,R1+,R2-,R2+,R3 (default all)");
  moves->callback([&] {
    action = [&] {
      const GaussCode c = parse_gauss_code(code_text);
      const SearchBudget cap = resolve_budget(SearchBudget::defaults_for(static_cast<int>(c.crossing_count())), bf);
      const auto list = enumerate_moves(c, parse_kinds(kinds_text), cap);
      Json doc = base("link moves", {{"code", format_gauss_code(c)}, {"kinds", kinds_text.empty() ? "all" : kinds_text}});
      Json arr = Json::array();
      std::size_t width = 0;
      for (const auto& e : list) width = std::max(width, format_move(e.move).size());
      std::string text;
      for (const auto& e : list) {
        Json item = to_json(e.move);
        item["result"] = format_gauss_code(e.result);
        arr.push_back(item);
        text += pad(format_move(e.move), width) + "  ->  " + format_gauss_code(e.result) + "\n";
      }
      doc["moves"] = arr;
      return emit(doc, text.empty() ? "(no moves)\n" : text);
    };
  });

  auto* lreduce = link->add_subcommand("reduce", "Reduce the crossing count");
  lreduce->add_option("--code", code_text)->required();
  lreduce->callback([&] {
    action = [&] {
      const GaussCode c = parse_gauss_code(code_text);
      const SearchBudget budget =
          resolve_budget(SearchBudget::defaults_for(static_cast<int>(c.crossing_count())), bf);
      const ReduceResult r = reduce(c, budget, opts());
      Json doc = base("link reduce", {{"code", format_gauss_code(c)}});
      doc["result"] = format_gauss_code(r.code);
      doc["path"] = path_json(r.path);
      doc["budget_spent"] = to_json(r.spent);
      return emit(doc, format_gauss_code(r.code) + "  path: " + (r.path.empty() ? "(empty)" : format_path(r.path)) + "\n");
    };
  });

  auto* leq = link->add_subcommand("eq", "Bounded diagram equivalence");
  leq->add_option("--a", a_text)->required();
  leq->add_option("--b", b_text)->required();
  leq->callback([&] {
    action = [&] {
      const GaussCode a = parse_gauss_code(a_text), b = parse_gauss_code(b_text);
      const SearchBudget budget = resolve_budget(default_link_budget(a, b), bf);
      const LinkResult r = equivalent_bounded(a, b, budget, opts());
      Json doc = base("link eq", {{"a", format_gauss_code(a)}, {"b", format_gauss_code(b)}, {"unoriented", unoriented}});
      return emit(verdict_json(doc, r), verdict_text<MoveApplication>(r, format_move));
    };
  });

  // markov -----------------------------------------------------------------
  auto* markov = app.add_subcommand("markov", "Closure, braiding and Markov moves")->require_subcommand(1);
  std::string flavor_text, gen_text;
  std::size_t cut = 0;
  int strand = 1;

  auto* close = markov->add_subcommand("close", "Closure of a braid");
  close->add_option("--braid", w_text)->required();
  close->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(w_text);
      const GaussCode c = closure(w);
      Json doc = base("markov close", {{"braid", format_braid_word(w)}});
      doc["result"] = format_gauss_code(c);
      return emit(doc, format_gauss_code(c) + "\n");
    };
  });

  auto* braid_cmd = markov->add_subcommand("braid", "A braid whose closure is the diagram");
  braid_cmd->add_option("--code", code_text)->required();
  braid_cmd->callback([&] {
    action = [&] {
      const GaussCode c = parse_gauss_code(code_text);
      const BraidWord w = braiding(c);
      Json doc = base("markov braid", {{"code", format_gauss_code(c)}});
      doc["result"] = format_braid_word(w);
      return emit(doc, format_braid_word(w) + "\n");
    };
  });

  auto add_spec_options = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--flavor", flavor_text,
                              "right-virtual, right-flat, threaded-right, threaded-left, left-virtual, left-flat");
    if (required) f->required();
    sub->add_option("--cut", cut, "Cut position between letters (0..length)");
    sub->add_option("--strand", strand, "Cut strand position (1..n)");
  };
  auto spec_from_flags = [&] {
    const auto flavor = parse_flavor(flavor_text);
    if (!flavor) throw Error(ErrorCode::MalformedToken, "unknown L-move flavor '" + flavor_text + "'");
    return LMoveSpec{cut, strand, *flavor};
  };

  auto* lmove = markov->add_subcommand("lmove", "Apply an L-move");
  lmove->add_option("--braid", w_text)->required();
  add_spec_options(lmove, true);
  lmove->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(w_text);
      const LMoveSpec spec = spec_from_flags();
      const BraidWord r = l_move(w, spec);
      Json doc = base("markov lmove", {{"braid", format_braid_word(w)}, {"spec", to_json(spec)}});
      doc["result"] = format_braid_word(r);
      return emit(doc, format_braid_word(r) + "\n");
    };
  });

  auto* conj = markov->add_subcommand("conj", "Conjugate by a generator");
  conj->add_option("--braid", w_text)->required();
  conj->add_option("--gen", gen_text, "Generator, e.g. s1 or z2")->required();
  conj->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(w_text);
      const Generator g = parse_generator(gen_text, std::max(w.strands(), 2));
      const BraidWord r = conjugate(w, g);
      Json doc = base("markov conj", {{"braid", format_braid_word(w)}, {"gen", format_generator(g)}});
      doc["result"] = format_braid_word(r);
      doc["normalized"] = format_braid_word(normalize(r));
      return emit(doc, format_braid_word(r) + "  normalized: " + format_braid_word(normalize(r)) + "\n");
    };
  });

  auto* meq = markov->add_subcommand("eq", "Bounded Markov equivalence");
  meq->add_option("--a", a_text)->required();
  meq->add_option("--b", b_text)->required();
  meq->callback([&] {
    action = [&] {
      const BraidWord u = parse_braid_word(a_text), v = parse_braid_word(b_text);
      const SearchBudget budget = resolve_budget(default_markov_budget(u, v), bf);
      const MarkovResult r = markov_equivalent_bounded(u, v, budget);
      Json doc = base("markov eq", {{"a", format_braid_word(u)}, {"b", format_braid_word(v)}});
      return emit(verdict_json(doc, r), verdict_text<MarkovStep>(r, format_markov_step));
    };
  });

  auto* check = markov->add_subcommand("check-move", "Check a Markov move against the closures");
  check->add_option("--braid", w_text)->required();
  check->add_option("--conj", gen_text, "Conjugate by this generator instead of an L-move");
  add_spec_options(check, false);
  check->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(w_text);
      MarkovMove m;
      if (!gen_text.empty()) {
        m.kind = MarkovMoveKind::Conjugation;
        m.g = parse_generator(gen_text, std::max(w.strands(), 2));
      } else {
        m.spec = spec_from_flags();
      }
      const BraidWord result = apply_markov_move(w, m);
      const SearchBudget budget = resolve_budget(default_link_budget(closure(w), closure(result)), bf);
      const SoundnessReport r = verify_move_soundness(w, m, budget);
      Json doc = base("markov check-move", {{"braid", format_braid_word(w)}, {"move", format_markov_move(m)}});
      doc["verdict"] = r.sound ? "SOUND" : "UNRESOLVED";
      doc["result"] = format_braid_word(r.result);
      doc["closures"] = {format_gauss_code(r.before), format_gauss_code(r.after)};
      if (r.sound) doc["path"] = path_json(r.path);
      doc["budget_spent"] = to_json(r.spent);
      std::string text = std::string(r.sound ? "SOUND" : "UNRESOLVED") + "  " + format_braid_word(r.result) + "\n" +
                         "closure before: " + format_gauss_code(r.before) + "\n" +
                         "closure after:  " + format_gauss_code(r.after) + "\n";
      text += r.sound ? "path: " + (r.path.empty() ? std::string("(empty)") : format_path(r.path)) + "\n"
                      : "states: " + std::to_string(r.spent.states) + "\n";
      return emit(doc, text);
    };
  });

  // yb ---------------------------------------------------------------------
  auto* yb = app.add_subcommand("yb", "Yang-Baxter solutions and trace invariants")->require_subcommand(1);
  std::uint32_t modulus = 0;
  std::string abcd, entries;
  bool full = false;
  std::uint64_t max_candidates = kDefaultFullCandidates;
  int strands = 3, trials = 200;

  std::vector<std::string> positional;
  auto add_r_options = [&](CLI::App* sub) {
    sub->add_option("--mod", modulus, "Modulus m >= 2")->required();
    sub->add_option("--abcd,--r", abcd, "Eight-vertex parameters a,b,c,d");
    sub->add_option("--entries", entries, "All 16 entries, row-major");
    sub->add_option("params", positional, "Eight-vertex parameters as four separate values");
  };
  // Positional "a b c d" is accepted wherever --abcd is.
  auto abcd_text = [&] {
    if (!abcd.empty() || positional.empty()) return abcd;
    if (positional.size() != 4) throw Error(ErrorCode::MalformedToken, "expected four parameters a b c d");
    return positional[0] + "," + positional[1] + "," + positional[2] + "," + positional[3];
  };

  auto* solve = yb->add_subcommand("solve", "All solutions over Z_m");
  solve->add_option("--mod", modulus)->required();
  solve->add_flag("--full", full, "Search general symmetric 4x4 matrices instead of the eight-vertex form");
  solve->add_option("--max-candidates", max_candidates, "Candidate cap for --full");
  solve->callback([&] {
    action = [&] {
      Json doc = base("yb solve", {{"mod", modulus}, {"full", full}});
      Json sols = Json::array();
      std::string text;
      if (full) {
        for (const auto& r : solve_full(modulus, max_candidates)) {
          sols.push_back(r.matrix().entries());
          std::string row;
          for (auto e : r.matrix().entries()) row += (row.empty() ? "" : " ") + std::to_string(e);
          text += row + "\n";
        }
      } else {
        std::size_t width = std::to_string(modulus - 1).size();
        for (const auto& p : solve_8vertex(modulus)) {
          sols.push_back({p.a, p.b, p.c, p.d});
          std::string row;
          for (auto x : {p.a, p.b, p.c, p.d}) {
            std::string s = std::to_string(x);
            row += (row.empty() ? "" : " ") + std::string(width - s.size(), ' ') + s;
          }
          text += row + "\n";
        }
      }
      doc["solutions"] = sols;
      return emit(doc, text);
    };
  });

  auto* ycheck = yb->add_subcommand("check", "Check one R-matrix");
  add_r_options(ycheck);
  ycheck->callback([&] {
    action = [&] {
      const RMatrix r = parse_r_matrix(modulus, abcd_text(), entries);
      const RChecks c = check_r_matrix(r);
      Json doc = base("yb check", {{"mod", modulus}, {"r", r_matrix_json(r)}});
      doc["result"] = {{"ybe", c.ybe}, {"symmetry", c.symmetry}, {"involution", c.involution}, {"all", c.all()}};
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      return emit(doc, std::string("ybe:        ") + yn(c.ybe) + "\nsymmetry:   " + yn(c.symmetry) +
                           "\ninvolution: " + yn(c.involution) + "\n");
    };
  });

  auto* report = yb->add_subcommand("report", "Evaluate the eight-vertex equation systems");
  report->add_option("--mod", modulus)->required();
  report->add_option("--abcd,--r", abcd, "Eight-vertex parameters a,b,c,d");
  report->add_option("params", positional, "Eight-vertex parameters as four separate values");
  report->callback([&] {
    action = [&] {
      const auto v = parse_int_list(abcd_text(), 4, "--abcd");
      const SystemReport rep = equation_system_report(v[0], v[1], v[2], v[3], modulus);
      Json doc = base("yb report", {{"mod", modulus}, {"abcd", {rep.params.a, rep.params.b, rep.params.c, rep.params.d}}});
      auto system_json = [](const SystemCheck& s) {
        Json eqs = Json::array();
        for (const auto& e : s.equations)
          eqs.push_back({{"equation", e.equation}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds},
                         {"rejects_direct_solution", e.rejects_direct_solution}});
        return Json{{"holds", s.holds}, {"agrees_with_direct", s.agrees_with_direct}, {"equations", eqs}};
      };
      doc["result"] = {{"direct", {{"ybe", rep.direct.ybe}, {"symmetry", rep.direct.symmetry},
                                   {"involution", rep.direct.involution}, {"all", rep.direct.all()}}},
                       {"general", system_json(rep.general)},
                       {"reduced", system_json(rep.reduced)}};
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      std::string text = "direct check: " + std::string(yn(rep.direct.all())) + "\n";
      for (auto [name, sys] : {std::pair{"general", &rep.general}, std::pair{"reduced", &rep.reduced}}) {
        text += std::string(name) + " system: " + yn(sys->holds) +
                (sys->agrees_with_direct ? "" : "  (disagrees with direct check)") + "\n";
        std::size_t width = 0;
        for (const auto& e : sys->equations) width = std::max(width, e.equation.size());
        for (const auto& e : sys->equations) {
          text += "  " + pad(e.equation, width) + "  " + std::to_string(e.lhs) + " vs " + std::to_string(e.rhs) +
                  (e.holds ? "" : e.rejects_direct_solution ? "  FAILS (rejects a direct solution)" : "  FAILS") +
                  "\n";
        }
      }
      return emit(doc, text);
    };
  });

  auto* trace = yb->add_subcommand("trace", "Trace invariant of a braid");
  add_r_options(trace);
  trace->add_option("--braid", w_text)->required();
  trace->callback([&] {
    action = [&] {
      const RMatrix r = parse_r_matrix(modulus, abcd_text(), entries);
      const BraidWord w = parse_braid_word(w_text);
      const Representation rep = build_and_verify_rep(r, w.strands());
      const std::uint32_t t = trace_invariant(rep, w);
      Json doc = base("yb trace", {{"mod", modulus}, {"r", r_matrix_json(r)}, {"braid", format_braid_word(w)}});
      doc["result"] = t;
      return emit(doc, std::to_string(t) + "\n");
    };
  });

  auto* experiment = yb->add_subcommand("experiment", "Random conjugation and stabilization checks");
  add_r_options(experiment);
  experiment->add_option("--strands", strands, "Strand count n >= 2");
  experiment->add_option("--trials", trials, "Number of random words");
  experiment->callback([&] {
    action = [&] {
      const RMatrix r = parse_r_matrix(modulus, abcd_text(), entries);
      const Representation rep = build_and_verify_rep(r, strands);
      const ExperimentReport e = invariance_experiments(rep, trials, seed);
      Json doc = base("yb experiment", {{"mod", modulus}, {"r", r_matrix_json(r)}, {"strands", strands},
                                        {"trials", trials}, {"seed", seed}});
      auto stats_json = [](const StabilizationStats& s) {
        Json out{{"equal", s.equal}, {"doubled", s.doubled}};
        out["uniform_factor"] = s.uniform_factor ? Json(*s.uniform_factor) : Json();
        return out;
      };
      doc["result"] = {{"conjugation_holds", e.conjugation_holds},
                       {"conjugation_failures", e.conjugation_failures},
                       {"virtual_stabilization", stats_json(e.virtual_stabilization)},
                       {"flat_stabilization", stats_json(e.flat_stabilization)}};
      auto stats_text = [&](const StabilizationStats& s) {
        return "equal " + std::to_string(s.equal) + "/" + std::to_string(e.trials) + ", doubled " +
               std::to_string(s.doubled) + "/" + std::to_string(e.trials) + ", factor " +
               (s.uniform_factor ? std::to_string(*s.uniform_factor) : std::string("none"));
      };
      std::string text = "conjugation:            " + std::to_string(e.conjugation_holds) + "/" +
                         std::to_string(e.trials) + "\n" +
                         "virtual stabilization:  " + stats_text(e.virtual_stabilization) + "\n" +
                         "flat stabilization:     " + stats_text(e.flat_stabilization) + "\n";
      return emit(doc, text);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kUsage, out.str() + err.str()};
  }
  try {
    return action();
  } catch (const Error& e) {
    return {e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace flk::cli
