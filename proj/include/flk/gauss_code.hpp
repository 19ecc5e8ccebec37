#pragma once

// Free link diagrams as unsigned oriented Gauss codes.
//
// A free link is a framed 4-graph: each vertex is two transversal passages of
// strands. Unicursal components become cyclic words over crossing labels and
// each label occurs exactly twice in the whole code. The model stores no
// over/under data, no virtual crossings and no planar embedding.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flk/error.hpp"

namespace flk {

using Label = int;

class GaussCode {
 public:
  GaussCode() : GaussCode(std::vector<std::vector<Label>>{{}}) {}

  /// names[id], when present and non-empty, is the spelling of label id;
  /// otherwise a label prints as its decimal id.
  explicit GaussCode(std::vector<std::vector<Label>> components, std::vector<std::string> names = {})
      : components_(std::move(components)), names_(std::move(names)) {
    if (components_.empty()) throw Error(ErrorCode::EmptyInput, "a Gauss code needs at least one component");
    std::map<Label, int> count;
    for (const auto& comp : components_)
      for (Label x : comp) {
        if (x < 0) throw Error(ErrorCode::OccurrenceCount, "negative label id " + std::to_string(x));
        ++count[x];
      }
    for (auto [label, n] : count) {
      if (n != 2) {
        throw Error(ErrorCode::OccurrenceCount,
                    "label '" + label_name(label) + "' occurs " + std::to_string(n) + " times, expected 2");
      }
    }
  }

  const std::vector<std::vector<Label>>& components() const noexcept { return components_; }
  const std::vector<Label>& operator[](std::size_t k) const { return components_[k]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept {
    std::size_t letters = 0;
    for (const auto& c : components_) letters += c.size();
    return letters / 2;
  }

  /// One past the largest label id in use (0 for a crossingless code).
  Label label_bound() const noexcept {
    Label bound = 0;
    for (const auto& c : components_)
      for (Label x : c) bound = std::max(bound, x + 1);
    return bound;
  }

  std::string label_name(Label id) const {
    if (id >= 0 && static_cast<std::size_t>(id) < names_.size() && !names_[id].empty()) return names_[id];
    return std::to_string(id);
  }

  /// Same shape and the same spelled label at every position.
  friend bool operator==(const GaussCode& a, const GaussCode& b) {
    if (a.components_.size() != b.components_.size()) return false;
    for (std::size_t k = 0; k < a.components_.size(); ++k) {
      if (a.components_[k].size() != b.components_[k].size()) return false;
      for (std::size_t s = 0; s < a.components_[k].size(); ++s)
        if (a.label_name(a.components_[k][s]) != b.label_name(b.components_[k][s])) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<Label>> components_;
  std::vector<std::string> names_;
};

inline std::string format_gauss_code(const GaussCode& c) {
  std::string out;
  for (std::size_t k = 0; k < c.component_count(); ++k) {
    if (k) out += " | ";
    const auto& comp = c[k];
    if (comp.empty()) {
      out += '.';
      continue;
    }
    for (std::size_t s = 0; s < comp.size(); ++s) {
      if (s) out += ' ';
      out += c.label_name(comp[s]);
    }
  }
  return out;
}

/// Components separated by '|', labels alphanumeric and whitespace
/// separated, '.' for a crossingless component. Label ids are assigned in
/// order of first appearance.
inline GaussCode parse_gauss_code(std::string_view text) {
  std::vector<std::string_view> parts;
  std::vector<std::size_t> offsets;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == '|') {
      parts.push_back(text.substr(start, k - start));
      offsets.push_back(start);
      start = k + 1;
    }
  }
  const bool blank = std::all_of(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (blank) throw Error(ErrorCode::EmptyInput, "no components in input");

  std::map<std::string, Label, std::less<>> ids;
  std::vector<std::string> names;
  std::vector<std::vector<Label>> comps;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Label> comp;
    std::vector<std::pair<std::string, std::size_t>> tokens;
    std::size_t k = 0;
    const auto part = parts[p];
    while (k < part.size()) {
      while (k < part.size() && std::isspace(static_cast<unsigned char>(part[k]))) ++k;
      const std::size_t s = k;
      while (k < part.size() && !std::isspace(static_cast<unsigned char>(part[k]))) ++k;
      if (k > s) tokens.emplace_back(std::string(part.substr(s, k - s)), offsets[p] + s);
    }
    if (tokens.empty()) {
      throw Error(ErrorCode::MalformedToken, "component " + std::to_string(p) + " at position " +
                                                 std::to_string(offsets[p]) + " is empty; write '.' for an unknot");
    }
    if (tokens.size() == 1 && tokens[0].first == ".") {
      comps.emplace_back();
      continue;
    }
    for (const auto& [tok, pos] : tokens) {
      const bool alnum = std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)); });
      if (!alnum) {
        throw Error(ErrorCode::MalformedToken, "token '" + tok + "' at position " + std::to_string(pos) +
                                                   ": labels are alphanumeric");
      }
      auto [it, inserted] = ids.try_emplace(tok, static_cast<Label>(names.size()));
      if (inserted) names.push_back(tok);
      comp.push_back(it->second);
    }
    comps.push_back(std::move(comp));
  }
  return GaussCode(std::move(comps), std::move(names));
}

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

struct CanonPartial {
  std::vector<Label> map;  // dense input label -> canonical id, -1 if unassigned
  Label next = 1;
  std::vector<bool> used;
  std::vector<std::size_t> order;     // chosen component per slot
  std::vector<std::vector<Label>> out;  // chosen relabeled components

  friend bool operator==(const CanonPartial& a, const CanonPartial& b) {
    return a.map == b.map && a.used == b.used;
  }
};

/// Relabels `word` under `map` (extending it), stopping early once the
/// result is known to exceed `bound`. Returns -1, 0, 1 versus bound.
inline int relabel_compare(const std::vector<Label>& word, std::vector<Label>& map, Label& next,
                           std::vector<Label>& seg, const std::vector<Label>* bound) {
  seg.clear();
  int cmp = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Label& id = map[word[k]];
    if (id < 0) id = next++;
    seg.push_back(id);
    if (bound && cmp == 0) {
      if (id < (*bound)[k]) cmp = -1;
      else if (id > (*bound)[k]) return 1;
    }
  }
  return bound ? cmp : -1;
}

}  // namespace detail

/// Minimal representative over component orderings and cyclic rotations
/// (and per-component reversal when `unoriented`), with crossings relabeled
/// 1, 2, 3, ... by first occurrence. Components are ordered by length
/// first, so the comparison reduces to the concatenated relabeled words.
inline GaussCode canonical_form(const GaussCode& c, bool unoriented = false) {
  // Dense relabeling so the working maps stay small.
  std::vector<Label> dense(static_cast<std::size_t>(c.label_bound()), -1);
  Label dense_count = 0;
  std::vector<std::vector<Label>> comps;
  std::size_t empties = 0;
  for (const auto& comp : c.components()) {
    if (comp.empty()) {
      ++empties;
      continue;
    }
    std::vector<Label> w;
    for (Label x : comp) {
      if (dense[x] < 0) dense[x] = dense_count++;
      w.push_back(dense[x]);
    }
    comps.push_back(std::move(w));
  }
  std::vector<std::size_t> lengths;
  for (const auto& w : comps) lengths.push_back(w.size());
  std::sort(lengths.begin(), lengths.end());

  detail::CanonPartial root;
  root.map.assign(static_cast<std::size_t>(dense_count), -1);
  root.used.assign(comps.size(), false);
  std::vector<detail::CanonPartial> cands{root};

  std::vector<Label> rotated, seg, best;
  for (std::size_t slot = 0; slot < lengths.size(); ++slot) {
    const std::size_t len = lengths[slot];
    std::vector<detail::CanonPartial> next_cands;
    bool have_best = false;
    for (const auto& cand : cands) {
      for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        if (cand.used[ci] || comps[ci].size() != len) continue;
        for (int dir = 0; dir < (unoriented ? 2 : 1); ++dir) {
          std::vector<Label> base = comps[ci];
          if (dir == 1) std::reverse(base.begin(), base.end());
          for (std::size_t rot = 0; rot < len; ++rot) {
            rotated.assign(base.begin() + static_cast<std::ptrdiff_t>(rot), base.end());
            rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(rot));
            std::vector<Label> map = cand.map;
            Label next = cand.next;
            const int cmp = detail::relabel_compare(rotated, map, next, seg, have_best ? &best : nullptr);
            if (cmp > 0) continue;
            if (cmp < 0) {
              next_cands.clear();
              best = seg;
              have_best = true;
            }
            detail::CanonPartial ext;
            ext.map = std::move(map);
            ext.next = next;
            ext.used = cand.used;
            ext.used[ci] = true;
            if (std::find(next_cands.begin(), next_cands.end(), ext) != next_cands.end()) continue;
            ext.order = cand.order;
            ext.order.push_back(ci);
            ext.out = cand.out;
            ext.out.push_back(seg);
            next_cands.push_back(std::move(ext));
          }
        }
      }
    }
    cands = std::move(next_cands);
  }

  std::vector<std::vector<Label>> out(empties);
  for (auto& w : cands.front().out) out.push_back(std::move(w));
  return GaussCode(std::move(out));
}

/// Compact byte key of the canonical form of an already-canonical code.
inline std::string code_key(const GaussCode& canonical) {
  std::string key;
  for (const auto& comp : canonical.components()) {
    for (Label x : comp) {
      // Canonical ids are 1..k; two bytes keep keys unambiguous for k < 65536.
      key.push_back(static_cast<char>(x & 0xff));
      key.push_back(static_cast<char>((x >> 8) & 0xff));
    }
    key.push_back('\xff');
    key.push_back('\xff');
  }
  return key;
}

}  // namespace flk
