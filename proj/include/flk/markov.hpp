#pragma once

// Closure and braiding between free braids and free links, L-moves, flat
// conjugation, and the bounded Markov equivalence search.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flk/braid.hpp"
#include "flk/braid_equality.hpp"
#include "flk/budget.hpp"
#include "flk/gauss_code.hpp"
#include "flk/link_search.hpp"
#include "flk/verdict.hpp"

namespace flk {

// ---------------------------------------------------------------------------
// Closure and braiding

/// Joins bottom position i to top position i. The k-th flat letter becomes
/// crossing c<k>; virtual letters leave no trace. Each component starts at
/// the least top position of its cycle.
inline GaussCode closure(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(n);  // at[pos-1] = strand (top position) now at pos
  for (int k = 0; k < n; ++k) at[k] = k + 1;
  std::vector<std::vector<Label>> visits(n);
  std::vector<std::string> names;
  for (Generator g : w.letters()) {
    int& left = at[g.index - 1];
    int& right = at[g.index];
    if (g.is_flat()) {
      const auto id = static_cast<Label>(names.size());
      names.push_back("c" + std::to_string(id));
      visits[left - 1].push_back(id);
      visits[right - 1].push_back(id);
    }
    std::swap(left, right);
  }
  std::vector<std::vector<Label>> comps;
  for (const auto& cycle : strand_permutation(w).cycles()) {
    std::vector<Label> comp;
    for (int strand : cycle) comp.insert(comp.end(), visits[strand - 1].begin(), visits[strand - 1].end());
    comps.push_back(std::move(comp));
  }
  return GaussCode(std::move(comps), std::move(names));
}

/// A braid whose closure is the given diagram exactly (up to canonical
/// form). One strand per visit, numbered by component then visit; empty
/// components get a bare strand. Each crossing, in order of first
/// appearance, brings its right strand next to its left one with virtual
/// letters, crosses them flat, and undoes the virtual run. A final virtual
/// word sends each strand's bottom to the top of its successor.
inline BraidWord braiding(const GaussCode& c) {
  std::vector<int> succ;                       // 0-based strand -> successor strand
  std::unordered_map<Label, std::vector<int>> occurrences;  // label -> strands visiting it
  std::vector<Label> order;                    // labels by first appearance
  for (const auto& comp : c.components()) {
    const int first = static_cast<int>(succ.size());
    const int len = std::max<int>(static_cast<int>(comp.size()), 1);
    for (int k = 0; k < len; ++k) succ.push_back(first + (k + 1) % len);
    for (int k = 0; k < static_cast<int>(comp.size()); ++k) {
      auto& occ = occurrences[comp[k]];
      if (occ.empty()) order.push_back(comp[k]);
      occ.push_back(first + k);
    }
  }
  const int n = static_cast<int>(succ.size());
  std::vector<int> pos(n), at(n);  // 0-based strand <-> 0-based position
  for (int k = 0; k < n; ++k) pos[k] = at[k] = k;
  std::vector<Generator> letters;
  auto emit = [&](Generator g) {
    letters.push_back(g);
    const int p = g.index - 1;
    std::swap(at[p], at[p + 1]);
    pos[at[p]] = p;
    pos[at[p + 1]] = p + 1;
  };
  for (Label x : order) {
    const auto& occ = occurrences[x];
    const int lo = std::min(pos[occ[0]], pos[occ[1]]);
    const int hi = std::max(pos[occ[0]], pos[occ[1]]);
    for (int p = hi; p > lo + 1; --p) emit(virt(p));
    emit(flat(lo + 1));
    for (int p = lo + 2; p <= hi; ++p) emit(virt(p));
  }
  std::vector<int> images(n);
  for (int s = 0; s < n; ++s) images[pos[s]] = succ[s] + 1;
  const BraidWord tail = permutation_to_virtual_word(Permutation(std::move(images)));
  letters.insert(letters.end(), tail.letters().begin(), tail.letters().end());
  return BraidWord(n, std::move(letters));
}

// ---------------------------------------------------------------------------
// L-moves and conjugation

enum class LMoveFlavor : std::uint8_t { RightVirtual, RightFlat, ThreadedRight, ThreadedLeft, LeftVirtual, LeftFlat };

inline const char* flavor_name(LMoveFlavor f) noexcept {
  switch (f) {
    case LMoveFlavor::RightVirtual: return "right-virtual";
    case LMoveFlavor::RightFlat: return "right-flat";
    case LMoveFlavor::ThreadedRight: return "threaded-right";
    case LMoveFlavor::ThreadedLeft: return "threaded-left";
    case LMoveFlavor::LeftVirtual: return "left-virtual";
    case LMoveFlavor::LeftFlat: return "left-flat";
  }
  return "?";
}

inline std::optional<LMoveFlavor> parse_flavor(std::string_view s) {
  for (auto f : {LMoveFlavor::RightVirtual, LMoveFlavor::RightFlat, LMoveFlavor::ThreadedRight,
                 LMoveFlavor::ThreadedLeft, LMoveFlavor::LeftVirtual, LMoveFlavor::LeftFlat}) {
    if (s == flavor_name(f)) return f;
  }
  return std::nullopt;
}

/// The flavors used by the Markov search: right virtual, right flat, and
/// both threaded moves. Left basic moves are conveniences only.
inline constexpr LMoveFlavor kMarkovFlavors[] = {LMoveFlavor::RightVirtual, LMoveFlavor::RightFlat,
                                                 LMoveFlavor::ThreadedRight, LMoveFlavor::ThreadedLeft};

struct LMoveSpec {
  std::size_t cut_position = 0;  // between letters, 0..len
  int cut_strand = 1;            // position at that height, 1..n
  LMoveFlavor flavor = LMoveFlavor::RightVirtual;

  friend bool operator==(const LMoveSpec&, const LMoveSpec&) = default;
};

inline std::string format_lmove_spec(const LMoveSpec& s) {
  return std::string(flavor_name(s.flavor)) + "(cut=" + std::to_string(s.cut_position) +
         ",strand=" + std::to_string(s.cut_strand) + ")";
}

namespace detail {

/// Letters inserted at the cut by an L-move on n strands, in the n+1 strand
/// numbering of the result.
inline std::vector<Generator> l_move_middle(LMoveFlavor flavor, int n, int j) {
  std::vector<Generator> out;
  auto run_up = [&](int from, int to) {  // z_from z_{from+1} ... z_to
    for (int i = from; i <= to; ++i) out.push_back(virt(i));
  };
  auto run_down = [&](int from, int to) {  // z_from z_{from-1} ... z_to
    for (int i = from; i >= to; --i) out.push_back(virt(i));
  };
  switch (flavor) {
    case LMoveFlavor::RightVirtual:
    case LMoveFlavor::RightFlat:
      run_up(j, n - 1);
      out.push_back(flavor == LMoveFlavor::RightFlat ? flat(n) : virt(n));
      run_down(n - 1, j);
      break;
    case LMoveFlavor::ThreadedRight:
      run_up(j, n - 2);
      out.insert(out.end(), {flat(n - 1), virt(n), flat(n - 1)});
      run_down(n - 2, j);
      break;
    case LMoveFlavor::ThreadedLeft:
      run_down(j, 3);
      out.insert(out.end(), {flat(2), virt(1), flat(2)});
      run_up(3, j);
      break;
    case LMoveFlavor::LeftVirtual:
    case LMoveFlavor::LeftFlat:
      run_down(j, 2);
      out.push_back(flavor == LMoveFlavor::LeftFlat ? flat(1) : virt(1));
      run_up(2, j);
      break;
  }
  return out;
}

inline bool left_flavor(LMoveFlavor f) {
  return f == LMoveFlavor::ThreadedLeft || f == LMoveFlavor::LeftVirtual || f == LMoveFlavor::LeftFlat;
}

inline void check_spec(const BraidWord& w, const LMoveSpec& s) {
  const int n = w.strands();
  if (s.cut_position > w.size()) {
    throw Error(ErrorCode::OutOfRange, "cut position " + std::to_string(s.cut_position) + " outside 0.." +
                                           std::to_string(w.size()));
  }
  const bool threaded = s.flavor == LMoveFlavor::ThreadedRight || s.flavor == LMoveFlavor::ThreadedLeft;
  if (threaded && n < 2) throw Error(ErrorCode::ThreadRequiresTwoStrands, "threaded L-moves need n >= 2");
  int lo = 1, hi = n;
  if (s.flavor == LMoveFlavor::ThreadedRight) hi = n - 1;
  if (s.flavor == LMoveFlavor::ThreadedLeft) lo = 2;
  if (s.cut_strand < lo || s.cut_strand > hi) {
    throw Error(ErrorCode::OutOfRange, std::string(flavor_name(s.flavor)) + " cut strand " +
                                           std::to_string(s.cut_strand) + " outside " + std::to_string(lo) + ".." +
                                           std::to_string(hi));
  }
}

}  // namespace detail

/// Cuts w at cut_position on strand cut_strand and pulls the two ends out
/// to a new strand: on the right (index n) for right and threaded-right
/// moves, on the left (old strands shifted up by one) otherwise.
inline BraidWord l_move(const BraidWord& w, const LMoveSpec& spec) {
  detail::check_spec(w, spec);
  const int n = w.strands();
  const int shift = detail::left_flavor(spec.flavor) ? 1 : 0;
  std::vector<Generator> letters;
  const auto& ls = w.letters();
  auto lifted = [&](Generator g) { return Generator{g.kind, g.index + shift}; };
  for (std::size_t k = 0; k < spec.cut_position; ++k) letters.push_back(lifted(ls[k]));
  for (Generator g : detail::l_move_middle(spec.flavor, n, spec.cut_strand)) letters.push_back(g);
  for (std::size_t k = spec.cut_position; k < ls.size(); ++k) letters.push_back(lifted(ls[k]));
  return BraidWord(n + 1, std::move(letters));
}

/// Every way of writing w as an L-move of a word on one fewer strand, for
/// the given flavors: the schema's middle occurs literally and the new
/// strand is touched nowhere else.
inline std::vector<std::pair<LMoveSpec, BraidWord>> l_move_preimages(const BraidWord& w,
                                                                     const std::vector<LMoveFlavor>& flavors) {
  std::vector<std::pair<LMoveSpec, BraidWord>> out;
  const int n = w.strands() - 1;
  if (n < 1) return out;
  const auto& ls = w.letters();
  for (LMoveFlavor flavor : flavors) {
    const bool threaded = flavor == LMoveFlavor::ThreadedRight || flavor == LMoveFlavor::ThreadedLeft;
    if (threaded && n < 2) continue;
    const int shift = detail::left_flavor(flavor) ? 1 : 0;
    const int lo = flavor == LMoveFlavor::ThreadedLeft ? 2 : 1;
    const int hi = flavor == LMoveFlavor::ThreadedRight ? n - 1 : n;
    for (int strand = lo; strand <= hi; ++strand) {
      const auto middle = detail::l_move_middle(flavor, n, strand);
      for (std::size_t p = 0; p + middle.size() <= ls.size(); ++p) {
        if (!std::equal(middle.begin(), middle.end(), ls.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        std::vector<Generator> rest;
        bool ok = true;
        for (std::size_t k = 0; k < ls.size() && ok; ++k) {
          if (k >= p && k < p + middle.size()) continue;
          const int i = ls[k].index - shift;
          ok = i >= 1 && i <= n - 1;
          rest.push_back(Generator{ls[k].kind, i});
        }
        if (!ok) continue;
        LMoveSpec spec{p, strand, flavor};
        BraidWord before(n, std::move(rest));
        if (l_move(before, spec) == w) out.emplace_back(spec, std::move(before));
      }
    }
  }
  return out;
}

/// g w g; every generator is an involution, so this is conjugation.
inline BraidWord conjugate(const BraidWord& w, Generator g) {
  if (g.index < 1 || g.index >= w.strands()) {
    throw Error(ErrorCode::IndexOutOfRange, format_generator(g) + " is not a generator of fB_" +
                                                std::to_string(w.strands()));
  }
  std::vector<Generator> letters{g};
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(g);
  return BraidWord(w.strands(), std::move(letters));
}

// ---------------------------------------------------------------------------
// Markov equivalence

enum class MarkovStepKind : std::uint8_t { Relation, Conjugation, LMove, InverseLMove, ClosureIsotopy };

inline const char* markov_step_name(MarkovStepKind k) noexcept {
  switch (k) {
    case MarkovStepKind::Relation: return "relation";
    case MarkovStepKind::Conjugation: return "conjugation";
    case MarkovStepKind::LMove: return "lmove";
    case MarkovStepKind::InverseLMove: return "inverse-lmove";
    case MarkovStepKind::ClosureIsotopy: return "closure-isotopy";
  }
  return "?";
}

/// One auditable step from `from` to `to`.
///   Relation:        to = apply_rewrite(from, rewrite)
///   Conjugation:     to = g from g, or from = g to g when `reversed`
///   LMove:           to = l_move(from, spec)
///   InverseLMove:    from = l_move(to, spec)
///   ClosureIsotopy:  link_path carries closure(from) to closure(to)
struct MarkovStep {
  MarkovStepKind kind = MarkovStepKind::Relation;
  bool reversed = false;
  Rewrite rewrite{Rule::Cancel, 0, {}, {}};
  Generator g{};
  LMoveSpec spec{};
  BraidWord from, to;
  std::vector<MoveApplication> link_path;
};

inline std::string format_markov_step(const MarkovStep& s) {
  switch (s.kind) {
    case MarkovStepKind::Relation:
      return std::string(rule_name(s.rewrite.rule)) + "@" + std::to_string(s.rewrite.position);
    case MarkovStepKind::Conjugation:
      return std::string(s.reversed ? "unconj(" : "conj(") + format_generator(s.g) + ")";
    case MarkovStepKind::LMove: return "L:" + format_lmove_spec(s.spec);
    case MarkovStepKind::InverseLMove: return "L^-1:" + format_lmove_spec(s.spec);
    case MarkovStepKind::ClosureIsotopy: return "closure[" + format_path(s.link_path) + "]";
  }
  return "?";
}

inline MarkovStep reverse_step(const MarkovStep& s) {
  MarkovStep r = s;
  std::swap(r.from, r.to);
  switch (s.kind) {
    case MarkovStepKind::Relation: r.rewrite = inverse(s.rewrite); break;
    case MarkovStepKind::Conjugation: r.reversed = !s.reversed; break;
    case MarkovStepKind::LMove: r.kind = MarkovStepKind::InverseLMove; break;
    case MarkovStepKind::InverseLMove: r.kind = MarkovStepKind::LMove; break;
    case MarkovStepKind::ClosureIsotopy:
      throw std::logic_error("closure isotopy steps are not reversed");
  }
  return r;
}

/// True when the step's claim holds.
inline bool check_step(const MarkovStep& s) {
  try {
    switch (s.kind) {
      case MarkovStepKind::Relation: return apply_rewrite(s.from, s.rewrite) == s.to;
      case MarkovStepKind::Conjugation:
        return s.reversed ? conjugate(s.to, s.g) == s.from : conjugate(s.from, s.g) == s.to;
      case MarkovStepKind::LMove: return l_move(s.from, s.spec) == s.to;
      case MarkovStepKind::InverseLMove: return l_move(s.to, s.spec) == s.from;
      case MarkovStepKind::ClosureIsotopy:
        return replay_moves(closure(s.from), s.link_path) == canonical_form(closure(s.to));
    }
  } catch (const Error&) {
  }
  return false;
}

/// Follows a path from u, checking each step's claim and that consecutive
/// steps chain. Returns the final word; throws InvalidMove on a bad step.
inline BraidWord replay_markov(const BraidWord& u, const std::vector<MarkovStep>& path) {
  BraidWord cur = u;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k].from != cur || !check_step(path[k])) {
      throw Error(ErrorCode::InvalidMove, "step " + std::to_string(k) + " (" + format_markov_step(path[k]) +
                                              ") does not apply");
    }
    cur = path[k].to;
  }
  return cur;
}

using MarkovResult = EqResult<MarkovStep>;

namespace detail {

inline std::vector<MarkovStep> relation_steps(BraidWord w, const std::vector<Rewrite>& rewrites) {
  std::vector<MarkovStep> out;
  for (const auto& r : rewrites) {
    MarkovStep s;
    s.kind = MarkovStepKind::Relation;
    s.rewrite = r;
    s.from = w;
    w = apply_rewrite(w, r);
    s.to = w;
    out.push_back(std::move(s));
  }
  return out;
}

/// Every Markov-move neighbour of w within the caps, in a fixed order:
/// relations, flat conjugations, L-moves, inverse L-moves.
inline std::vector<MarkovStep> markov_neighbours(const BraidWord& w, int max_strands, std::size_t max_length) {
  std::vector<MarkovStep> out;
  auto add = [&](MarkovStep s) {
    if (s.to.size() <= std::max(max_length, w.size())) out.push_back(std::move(s));
  };
  for (const auto& r : enumerate_rewrites(w, max_length)) {
    MarkovStep s;
    s.rewrite = r;
    s.from = w;
    s.to = apply_rewrite(w, r);
    add(std::move(s));
  }
  for (int i = 1; i < w.strands(); ++i) {
    MarkovStep s;
    s.kind = MarkovStepKind::Conjugation;
    s.g = flat(i);
    s.from = w;
    s.to = conjugate(w, s.g);
    add(std::move(s));
  }
  if (w.strands() < max_strands) {
    for (LMoveFlavor flavor : kMarkovFlavors) {
      const int n = w.strands();
      const bool threaded = flavor == LMoveFlavor::ThreadedRight || flavor == LMoveFlavor::ThreadedLeft;
      if (threaded && n < 2) continue;
      const int lo = flavor == LMoveFlavor::ThreadedLeft ? 2 : 1;
      const int hi = flavor == LMoveFlavor::ThreadedRight ? n - 1 : n;
      for (std::size_t p = 0; p <= w.size(); ++p)
        for (int j = lo; j <= hi; ++j) {
          MarkovStep s;
          s.kind = MarkovStepKind::LMove;
          s.spec = LMoveSpec{p, j, flavor};
          s.from = w;
          s.to = l_move(w, s.spec);
          add(std::move(s));
        }
    }
  }
  // Destabilization only where the schema occurs literally in a normal form;
  // other words reach their normal form through relation steps first.
  if (normalize(w) == w) {
    for (auto& [spec, before] : l_move_preimages(w, {std::begin(kMarkovFlavors), std::end(kMarkovFlavors)})) {
      MarkovStep s;
      s.kind = MarkovStepKind::InverseLMove;
      s.spec = spec;
      s.from = w;
      s.to = std::move(before);
      add(std::move(s));
    }
  }
  return out;
}

struct MarkovNode {
  std::string parent;
  MarkovStep step;  // parent -> node
};

class MarkovFrontier {
 public:
  explicit MarkovFrontier(const BraidWord& root) {
    const std::string key = word_key(root);
    nodes_.emplace(key, MarkovNode{{}, MarkovStep{}});
    words_.emplace(key, root);
    normal_.emplace(word_key(normalize(root)), key);
    level_.push_back(key);
  }

  const std::vector<std::string>& level() const noexcept { return level_; }
  int depth() const noexcept { return depth_; }
  const BraidWord& word(const std::string& key) const { return words_.at(key); }

  const std::string* reached(const std::string& nf) const {
    auto it = normal_.find(nf);
    return it == normal_.end() ? nullptr : &it->second;
  }

  std::optional<std::pair<std::string, std::string>> expand(int max_strands, std::size_t max_length,
                                                            const SearchBudget& budget, long& states, bool& capped,
                                                            const MarkovFrontier& other) {
    ++depth_;
    std::vector<std::string> next;
    for (const auto& key : level_) {
      const BraidWord w = words_.at(key);
      for (auto& step : markov_neighbours(w, max_strands, max_length)) {
        std::string child_key = word_key(step.to);
        if (nodes_.count(child_key)) continue;
        if (states >= budget.max_states) {
          capped = true;
          return std::nullopt;
        }
        ++states;
        const std::string nf = word_key(normalize(step.to));
        words_.emplace(child_key, step.to);
        nodes_.emplace(child_key, MarkovNode{key, std::move(step)});
        normal_.emplace(nf, child_key);
        if (const std::string* hit = other.reached(nf)) return std::make_pair(child_key, *hit);
        next.push_back(std::move(child_key));
      }
    }
    level_ = std::move(next);
    return std::nullopt;
  }

  std::vector<MarkovStep> path_from_root(std::string key) const {
    std::vector<MarkovStep> path;
    while (!nodes_.at(key).parent.empty()) {
      path.push_back(nodes_.at(key).step);
      key = nodes_.at(key).parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  std::unordered_map<std::string, MarkovNode> nodes_;
  std::unordered_map<std::string, BraidWord> words_;
  std::unordered_map<std::string, std::string> normal_;
  std::vector<std::string> level_;
  int depth_ = 0;
};

}  // namespace detail

inline SearchBudget default_markov_budget(const BraidWord& u, const BraidWord& v) {
  return SearchBudget::defaults_for(static_cast<int>(std::max(u.size(), v.size())));
}

/// Bounded search of the Markov move graph: relations, flat conjugation,
/// right virtual, right flat and threaded L-moves, and inverse L-moves found
/// as literal schema instances in normal forms. Words stay within one strand
/// more than the larger input and budget.max_crossings letters. When the
/// search fails, an isotopy of the closures found by the diagram search is
/// accepted as a certificate of equality. Never returns Distinct.
inline MarkovResult markov_equivalent_bounded(const BraidWord& u, const BraidWord& v, const SearchBudget& budget) {
  budget.validate();
  auto join = [&](std::vector<MarkovStep> to_x, const BraidWord& x, const BraidWord& y,
                  std::vector<MarkovStep> y_to_v, BudgetSpent spent) {
    std::vector<MarkovStep> path = std::move(to_x);
    for (auto& s : detail::relation_steps(x, normalize_traced(x).second)) path.push_back(std::move(s));
    auto from_y = detail::relation_steps(y, normalize_traced(y).second);
    for (auto it = from_y.rbegin(); it != from_y.rend(); ++it) path.push_back(reverse_step(*it));
    for (auto& s : y_to_v) path.push_back(std::move(s));
    if (replay_markov(u, path) != v) throw std::logic_error("Markov path does not replay");
    return MarkovResult::equal(std::move(path), spent);
  };

  if (u.strands() == v.strands() && normalize(u) == normalize(v)) return join({}, u, v, {}, {2, 0, false});

  const int max_strands = std::max(u.strands(), v.strands()) + 1;
  const auto max_length = static_cast<std::size_t>(budget.max_crossings);
  detail::MarkovFrontier fwd(u), bwd(v);
  long states = 2;
  bool capped = false;
  while (!capped && fwd.depth() + bwd.depth() < budget.max_depth && !fwd.level().empty() && !bwd.level().empty()) {
    const bool forward = fwd.level().size() <= bwd.level().size();
    detail::MarkovFrontier& mine = forward ? fwd : bwd;
    const detail::MarkovFrontier& other = forward ? bwd : fwd;
    auto meet = mine.expand(max_strands, max_length, budget, states, capped, other);
    if (!meet) continue;
    const std::string& x = forward ? meet->first : meet->second;
    const std::string& y = forward ? meet->second : meet->first;
    std::vector<MarkovStep> back;
    auto tail = bwd.path_from_root(y);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) back.push_back(reverse_step(*it));
    return join(fwd.path_from_root(x), fwd.word(x), bwd.word(y), std::move(back),
                {states, fwd.depth() + bwd.depth(), false});
  }
  BudgetSpent spent{states, fwd.depth() + bwd.depth(), capped || (!fwd.level().empty() && !bwd.level().empty())};

  const GaussCode cu = closure(u), cv = closure(v);
  const LinkResult iso = equivalent_bounded(cu, cv, budget);
  spent.states += iso.spent.states;
  if (iso.verdict == Verdict::Equal) {
    MarkovStep s;
    s.kind = MarkovStepKind::ClosureIsotopy;
    s.from = u;
    s.to = v;
    s.link_path = iso.path;
    std::vector<MarkovStep> path{std::move(s)};
    if (replay_markov(u, path) != v) throw std::logic_error("closure isotopy does not replay");
    return MarkovResult::equal(std::move(path), spent);
  }
  return MarkovResult::unknown(spent);
}

inline MarkovResult markov_equivalent_bounded(const BraidWord& u, const BraidWord& v) {
  return markov_equivalent_bounded(u, v, default_markov_budget(u, v));
}

// ---------------------------------------------------------------------------
// Soundness harness

enum class MarkovMoveKind : std::uint8_t { Conjugation, LMove };

struct MarkovMove {
  MarkovMoveKind kind = MarkovMoveKind::LMove;
  Generator g{};
  LMoveSpec spec{};
};

inline BraidWord apply_markov_move(const BraidWord& w, const MarkovMove& m) {
  return m.kind == MarkovMoveKind::Conjugation ? conjugate(w, m.g) : l_move(w, m.spec);
}

inline std::string format_markov_move(const MarkovMove& m) {
  return m.kind == MarkovMoveKind::Conjugation ? "conj(" + format_generator(m.g) + ")" : format_lmove_spec(m.spec);
}

struct SoundnessReport {
  bool sound = false;
  BraidWord result;
  GaussCode before, after;  // closures
  std::vector<MoveApplication> path;  // from closure(result) to closure(w)
  BudgetSpent spent;
};

/// Applies m and searches for moves carrying the closure of the result back
/// to the closure of w, at the default diagram budget unless one is given.
inline SoundnessReport verify_move_soundness(const BraidWord& w, const MarkovMove& m,
                                             std::optional<SearchBudget> budget = std::nullopt) {
  SoundnessReport r;
  r.result = apply_markov_move(w, m);
  r.before = closure(w);
  r.after = closure(r.result);
  const LinkResult iso =
      equivalent_bounded(r.after, r.before, budget ? *budget : default_link_budget(r.after, r.before));
  r.sound = iso.verdict == Verdict::Equal;
  r.path = iso.path;
  r.spent = iso.spent;
  return r;
}

}  // namespace flk
