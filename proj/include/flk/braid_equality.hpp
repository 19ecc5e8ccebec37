#pragma once

// Bounded word equality in fB_n: invariants can prove two words different,
// a relation path found by search proves them equal, anything else is
// Unknown.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flk/braid.hpp"
#include "flk/budget.hpp"
#include "flk/verdict.hpp"
#include "flk/yangbaxter.hpp"

namespace flk {

using BraidResult = EqResult<Rewrite>;

inline std::string word_key(const BraidWord& w) {
  std::string key;
  key.reserve(w.size() + 1);
  key.push_back(static_cast<char>(w.strands()));
  for (Generator g : w.letters()) key.push_back(static_cast<char>(g.index * 2 + (g.is_flat() ? 0 : 1)));
  return key;
}

/// Largest strand count for which the default trace battery is consulted.
inline constexpr int kBatteryMaxStrands = 8;

/// Witness for a separating invariant, if any. The battery is used only when
/// non-null.
inline std::optional<Witness> separating_invariant(const BraidWord& u, const BraidWord& v,
                                                   const std::vector<BatteryEntry>* battery) {
  const Permutation pu = strand_permutation(u), pv = strand_permutation(v);
  if (pu != pv) return Witness{"strand_permutation", format_permutation(pu), format_permutation(pv)};
  const auto qu = parity_vector(u), qv = parity_vector(v);
  if (qu != qv) {
    auto fmt = [](std::pair<int, int> p) {
      return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    };
    return Witness{"parity_vector", fmt(qu), fmt(qv)};
  }
  if (battery) {
    for (const auto& entry : *battery) {
      if (entry.rep.strands() != u.strands()) continue;
      const auto tu = trace_invariant(entry.rep, u), tv = trace_invariant(entry.rep, v);
      if (tu != tv) return Witness{entry.name, std::to_string(tu), std::to_string(tv)};
    }
  }
  return std::nullopt;
}

namespace detail {

struct WordNode {
  BraidWord word;
  std::string parent;
  Rewrite step;  // parent -> word
};

inline std::vector<Rewrite> inverted(const std::vector<Rewrite>& steps) {
  std::vector<Rewrite> out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

/// Breadth-first side of the word search. Nodes are raw words; each side
/// also indexes the normal forms it has reached.
class WordFrontier {
 public:
  explicit WordFrontier(const BraidWord& root) {
    const std::string key = word_key(root);
    nodes_.emplace(key, WordNode{root, {}, Rewrite{Rule::Cancel, 0, {}, {}}});
    normal_.emplace(word_key(normalize(root)), key);
    level_.push_back(key);
  }

  const std::vector<std::string>& level() const noexcept { return level_; }
  int depth() const noexcept { return depth_; }
  const BraidWord& word(const std::string& key) const { return nodes_.at(key).word; }

  /// Raw node whose normal form has key `nf`, if reached.
  const std::string* reached(const std::string& nf) const {
    auto it = normal_.find(nf);
    return it == normal_.end() ? nullptr : &it->second;
  }

  /// Expands one level; returns (this side's node, other side's node) at the
  /// first shared normal form.
  std::optional<std::pair<std::string, std::string>> expand(std::size_t max_length, const SearchBudget& budget,
                                                            long& states, bool& capped, const WordFrontier& other) {
    ++depth_;
    std::vector<std::string> next;
    for (const auto& key : level_) {
      const BraidWord w = nodes_.at(key).word;
      for (const auto& r : enumerate_rewrites(w, max_length)) {
        BraidWord child = apply_rewrite(w, r);
        std::string child_key = word_key(child);
        if (nodes_.count(child_key)) continue;
        if (states >= budget.max_states) {
          capped = true;
          return std::nullopt;
        }
        ++states;
        const std::string nf = word_key(normalize(child));
        nodes_.emplace(child_key, WordNode{std::move(child), key, r});
        normal_.emplace(nf, child_key);
        if (const std::string* hit = other.reached(nf)) return std::make_pair(child_key, *hit);
        next.push_back(std::move(child_key));
      }
    }
    level_ = std::move(next);
    return std::nullopt;
  }

  /// Rewrites from the root to `key`.
  std::vector<Rewrite> path_from_root(std::string key) const {
    std::vector<Rewrite> path;
    while (!nodes_.at(key).parent.empty()) {
      path.push_back(nodes_.at(key).step);
      key = nodes_.at(key).parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  std::unordered_map<std::string, WordNode> nodes_;
  std::unordered_map<std::string, std::string> normal_;
  std::vector<std::string> level_;
  int depth_ = 0;
};

}  // namespace detail

/// Three-valued equality. Distinct needs a separating invariant (strand
/// permutation, parity vector, battery traces); Equal carries a replayable
/// relation path from u to v. The path is found by bidirectional
/// breadth-first search over words of length <= budget.max_crossings, the
/// two sides meeting as soon as they reach a common normal form.
inline BraidResult words_equal_bounded(const BraidWord& u, const BraidWord& v, const SearchBudget& budget,
                                       const std::vector<BatteryEntry>* battery = nullptr) {
  budget.validate();
  if (u.strands() != v.strands()) {
    throw Error(ErrorCode::StrandMismatch,
                "fB_" + std::to_string(u.strands()) + " vs fB_" + std::to_string(v.strands()));
  }
  std::vector<BatteryEntry> owned;
  if (!battery && u.strands() >= 2 && u.strands() <= kBatteryMaxStrands) {
    owned = default_trace_battery(u.strands());
    battery = &owned;
  }
  if (auto w = separating_invariant(u, v, battery)) return BraidResult::distinct(std::move(*w));

  // u -> x, x -> normal form, normal form -> y, y -> v.
  auto join = [&](std::vector<Rewrite> to_x, const BraidWord& x, const BraidWord& y, std::vector<Rewrite> y_to_v,
                  BudgetSpent spent) {
    std::vector<Rewrite> path = std::move(to_x);
    for (auto& r : normalize_traced(x).second) path.push_back(std::move(r));
    for (auto& r : detail::inverted(normalize_traced(y).second)) path.push_back(std::move(r));
    for (auto& r : y_to_v) path.push_back(std::move(r));
    if (replay(u, path) != v) throw std::logic_error("relation path does not replay");
    return BraidResult::equal(std::move(path), spent);
  };

  detail::WordFrontier fwd(u), bwd(v);
  if (normalize(u) == normalize(v)) return join({}, u, v, {}, {2, 0, false});

  long states = 2;
  bool capped = false;
  const auto max_length = static_cast<std::size_t>(budget.max_crossings);
  while (!capped && fwd.depth() + bwd.depth() < budget.max_depth && !fwd.level().empty() && !bwd.level().empty()) {
    const bool forward = fwd.level().size() <= bwd.level().size();
    detail::WordFrontier& mine = forward ? fwd : bwd;
    const detail::WordFrontier& other = forward ? bwd : fwd;
    auto meet = mine.expand(max_length, budget, states, capped, other);
    if (!meet) continue;
    const std::string& x = forward ? meet->first : meet->second;
    const std::string& y = forward ? meet->second : meet->first;
    if (auto w = separating_invariant(u, v, battery)) {
      throw std::logic_error("equal words separated by " + w->invariant);
    }
    return join(fwd.path_from_root(x), fwd.word(x), bwd.word(y), detail::inverted(bwd.path_from_root(y)),
                {states, fwd.depth() + bwd.depth(), false});
  }
  const bool exhausted = capped || (!fwd.level().empty() && !bwd.level().empty());
  return BraidResult::unknown({states, fwd.depth() + bwd.depth(), exhausted});
}

inline BraidResult words_equal_bounded(const BraidWord& u, const BraidWord& v) {
  return words_equal_bounded(u, v, SearchBudget::defaults_for(static_cast<int>(std::max(u.size(), v.size()))));
}

}  // namespace flk
