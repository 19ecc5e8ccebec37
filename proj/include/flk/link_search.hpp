#pragma once

// Bounded searches over free link diagrams. Every search works on canonical
// forms, so a recorded move is always relative to the canonical form of the
// diagram it was found on.

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flk/budget.hpp"
#include "flk/gauss_code.hpp"
#include "flk/moves.hpp"
#include "flk/verdict.hpp"

namespace flk {

/// A diagram invariant used to separate inputs before searching. The
/// evaluation must be constant along every move.
struct NamedInvariant {
  std::string name;
  std::function<std::string(const GaussCode&)> evaluate;
};

struct LinkSearchOptions {
  bool unoriented = false;
  MoveRules rules;
  std::vector<NamedInvariant> invariants;
};

using LinkResult = EqResult<MoveApplication>;

inline SearchBudget default_link_budget(const GaussCode& a, const GaussCode& b) {
  return SearchBudget::defaults_for(static_cast<int>(std::max(a.crossing_count(), b.crossing_count())));
}

/// Applies `path` starting from the canonical form of `a`, canonicalizing
/// after every move. Throws InvalidMove if a step does not apply.
inline GaussCode replay_moves(const GaussCode& a, const std::vector<MoveApplication>& path,
                              const LinkSearchOptions& opts = {}) {
  GaussCode cur = canonical_form(a, opts.unoriented);
  for (const auto& m : path) cur = canonical_form(apply_move(cur, m, opts.rules), opts.unoriented);
  return cur;
}

namespace detail {

struct SearchNode {
  GaussCode code;  // canonical
  std::string parent;
  MoveApplication move;  // forward side: parent --move--> code; backward side: unused
  int depth = 0;
};

using NodeMap = std::unordered_map<std::string, SearchNode>;

/// One breadth-first frontier over canonical forms.
class Frontier {
 public:
  Frontier(const GaussCode& start, const LinkSearchOptions& opts) : opts_(&opts) {
    GaussCode canon = canonical_form(start, opts.unoriented);
    const std::string key = code_key(canon);
    nodes_.emplace(key, SearchNode{std::move(canon), std::string(), {}, 0});
    level_.push_back(key);
  }

  const NodeMap& nodes() const noexcept { return nodes_; }
  const std::vector<std::string>& level() const noexcept { return level_; }
  int depth() const noexcept { return depth_; }

  /// Expands the current level. Stops at the first key accepted by `hit`
  /// and returns it; also stops when the shared state count reaches the cap.
  std::string expand(const SearchBudget& budget, long& states, bool& capped,
                     const std::function<bool(const std::string&)>& hit) {
    std::vector<std::string> next;
    ++depth_;
    for (const auto& key : level_) {
      const GaussCode code = nodes_.at(key).code;
      for (auto& [move, result] : enumerate_moves(code, all_move_kinds(), budget, opts_->rules)) {
        GaussCode canon = canonical_form(result, opts_->unoriented);
        std::string child = code_key(canon);
        if (nodes_.count(child)) continue;
        if (states >= budget.max_states) {
          capped = true;
          level_ = std::move(next);
          return {};
        }
        ++states;
        nodes_.emplace(child, SearchNode{std::move(canon), key, move, depth_});
        if (hit(child)) return child;
        next.push_back(std::move(child));
      }
    }
    level_ = std::move(next);
    return {};
  }

  /// Moves from the root to `key`, each relative to the canonical form of
  /// the preceding diagram.
  std::vector<MoveApplication> path_from_root(std::string key) const {
    std::vector<MoveApplication> path;
    while (!nodes_.at(key).parent.empty()) {
      path.push_back(nodes_.at(key).move);
      key = nodes_.at(key).parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Moves from `key` back to the root, found by re-enumerating from each
  /// diagram so the steps point in the walking direction.
  std::vector<MoveApplication> path_to_root(std::string key, const SearchBudget& budget) const {
    std::vector<MoveApplication> path;
    while (!nodes_.at(key).parent.empty()) {
      const SearchNode& node = nodes_.at(key);
      bool found = false;
      for (auto& [move, result] : enumerate_moves(node.code, all_move_kinds(), budget, opts_->rules)) {
        if (code_key(canonical_form(result, opts_->unoriented)) == node.parent) {
          path.push_back(move);
          found = true;
          break;
        }
      }
      if (!found) path.push_back(inverse_move(nodes_.at(node.parent).code, node.move, opts_->rules));
      key = node.parent;
    }
    return path;
  }

 private:
  const LinkSearchOptions* opts_;
  NodeMap nodes_;
  std::vector<std::string> level_;
  int depth_ = 0;
};

}  // namespace detail

/// Bounded equivalence of free links. Distinct only on a component-count or
/// configured invariant mismatch; exhaustion yields Unknown.
inline LinkResult equivalent_bounded(const GaussCode& a, const GaussCode& b, const SearchBudget& budget,
                                     const LinkSearchOptions& opts = {}) {
  budget.validate();
  if (a.component_count() != b.component_count()) {
    return LinkResult::distinct(
        {"component count", std::to_string(a.component_count()), std::to_string(b.component_count())});
  }
  for (const auto& inv : opts.invariants) {
    std::string va = inv.evaluate(a), vb = inv.evaluate(b);
    if (va != vb) return LinkResult::distinct({inv.name, std::move(va), std::move(vb)});
  }

  detail::Frontier fwd(a, opts), bwd(b, opts);
  const std::string target = fwd.level().front();
  if (target == bwd.level().front()) return LinkResult::equal({}, {1, 0, false});

  long states = 2;
  bool capped = false;
  while (!capped && fwd.depth() + bwd.depth() < budget.max_depth && !fwd.level().empty() && !bwd.level().empty()) {
    // Expand the smaller frontier; ties go forward.
    const bool forward = fwd.level().size() <= bwd.level().size();
    detail::Frontier& mine = forward ? fwd : bwd;
    const detail::Frontier& other = forward ? bwd : fwd;
    const std::string meet =
        mine.expand(budget, states, capped, [&](const std::string& k) { return other.nodes().count(k) > 0; });
    if (!meet.empty()) {
      std::vector<MoveApplication> path = fwd.path_from_root(meet);
      for (auto& m : bwd.path_to_root(meet, budget)) path.push_back(std::move(m));
      return LinkResult::equal(std::move(path), {states, fwd.depth() + bwd.depth(), false});
    }
  }
  const bool exhausted = capped || (fwd.depth() + bwd.depth() >= budget.max_depth && !fwd.level().empty() &&
                                    !bwd.level().empty());
  return LinkResult::unknown({states, fwd.depth() + bwd.depth(), exhausted});
}

inline LinkResult equivalent_bounded(const GaussCode& a, const GaussCode& b, const LinkSearchOptions& opts = {}) {
  return equivalent_bounded(a, b, default_link_budget(a, b), opts);
}

struct ReduceResult {
  GaussCode code;
  std::vector<MoveApplication> path;
  BudgetSpent spent;
};

/// Greedy R1-/R2- deletions, then a bounded search for any diagram with
/// fewer crossings, repeated until neither helps. Returns the input
/// unchanged when nothing reduces it.
inline ReduceResult reduce(const GaussCode& c, const SearchBudget& budget, const LinkSearchOptions& opts = {}) {
  budget.validate();
  ReduceResult out{c, {}, {}};
  GaussCode cur = canonical_form(c, opts.unoriented);
  const MoveKinds shrinking{MoveKind::R1Minus, MoveKind::R2Minus};
  for (;;) {
    auto moves = enumerate_moves(cur, shrinking, budget, opts.rules);
    if (!moves.empty()) {
      out.path.push_back(moves.front().move);
      cur = canonical_form(moves.front().result, opts.unoriented);
      continue;
    }
    if (cur.crossing_count() == 0) break;
    // Breadth-first search for a smaller diagram.
    detail::Frontier frontier(cur, opts);
    const std::size_t size = cur.crossing_count();
    long states = 1;
    bool capped = false;
    std::string found;
    while (found.empty() && !capped && frontier.depth() < budget.max_depth && !frontier.level().empty()) {
      found = frontier.expand(budget, states, capped, [&](const std::string& k) {
        return frontier.nodes().at(k).code.crossing_count() < size;
      });
    }
    out.spent.states += states;
    out.spent.depth = std::max(out.spent.depth, frontier.depth());
    if (found.empty()) {
      out.spent.exhausted = capped || !frontier.level().empty();
      break;
    }
    for (auto& m : frontier.path_from_root(found)) out.path.push_back(std::move(m));
    cur = frontier.nodes().at(found).code;
  }
  if (!out.path.empty()) out.code = cur;
  return out;
}

inline ReduceResult reduce(const GaussCode& c, const LinkSearchOptions& opts = {}) {
  return reduce(c, SearchBudget::defaults_for(static_cast<int>(c.crossing_count())), opts);
}

}  // namespace flk
