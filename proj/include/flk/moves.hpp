#pragma once

// Reidemeister moves on unsigned Gauss codes.
//
// An edge is named by the slot it starts at: edge (c, s) joins slot s of
// component c to slot (s + 1) mod L. Occurrences (passages) are slots.
//
//   R1-  an edge joining the two occurrences of one label; both are deleted.
//   R2-  two edges joining labels x != y that use different occurrences of x
//        and different occurrences of y; all four occurrences are deleted.
//   R3   three edges joining (x,y), (y,z), (z,x) with distinct occurrences at
//        each label; each edge's two labels swap in place.
//   R1+  inserts "x x" before an index.
//   R2+  inserts "x y" at one index and "x y" (parallel) or "y x"
//        (antiparallel) at another; equal indices insert the two segments
//        contiguously, first then second.
//
// Components are never deleted, so component count is preserved.

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flk/budget.hpp"
#include "flk/error.hpp"
#include "flk/gauss_code.hpp"

namespace flk {

enum class MoveKind : std::uint8_t { R1Minus, R1Plus, R2Minus, R2Plus, R3 };
enum class R2Pattern : std::uint8_t { Parallel, Antiparallel };

inline const char* move_kind_name(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

struct Slot {
  int component = 0;
  int index = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct MoveApplication {
  MoveKind kind = MoveKind::R1Minus;
  std::vector<Slot> slots;   // edge starts for R1-/R2-/R3, insertion points for R1+/R2+
  std::vector<Label> fresh;  // new labels for R1+/R2+
  R2Pattern pattern = R2Pattern::Parallel;

  friend bool operator==(const MoveApplication&, const MoveApplication&) = default;
};

/// Text form, e.g. "R2-(0:0,0:2)", "R2+(0:1,1:0;5,6;anti)".
inline std::string format_move(const MoveApplication& m) {
  std::string out = move_kind_name(m.kind);
  out += '(';
  for (std::size_t k = 0; k < m.slots.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(m.slots[k].component) + ":" + std::to_string(m.slots[k].index);
  }
  if (!m.fresh.empty()) {
    out += ';';
    for (std::size_t k = 0; k < m.fresh.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(m.fresh[k]);
    }
  }
  if (m.kind == MoveKind::R2Plus) out += m.pattern == R2Pattern::Parallel ? ";par" : ";anti";
  out += ')';
  return out;
}

inline std::string format_path(const std::vector<MoveApplication>& path) {
  std::string out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) out += ' ';
    out += format_move(path[k]);
  }
  return out;
}

/// Selects the R2 convention. The strict convention admits only the
/// antiparallel pattern ("x y ... y x").
struct MoveRules {
  bool allow_parallel_r2 = true;
};

namespace detail {

using Occurrence = std::pair<int, int>;  // (component, slot)

struct Edge {
  Occurrence from, to;
  Label first, second;
};

inline Error invalid(const MoveApplication& m, const std::string& why) {
  return Error(ErrorCode::InvalidMove, format_move(m) + ": " + why);
}

inline Edge edge_at(const GaussCode& c, const MoveApplication& m, Slot s) {
  if (s.component < 0 || static_cast<std::size_t>(s.component) >= c.component_count()) {
    throw invalid(m, "component " + std::to_string(s.component) + " does not exist");
  }
  const auto& comp = c[static_cast<std::size_t>(s.component)];
  const int len = static_cast<int>(comp.size());
  if (s.index < 0 || s.index >= len) {
    throw invalid(m, "slot " + std::to_string(s.index) + " outside component " + std::to_string(s.component));
  }
  if (len < 2) throw invalid(m, "edge at " + std::to_string(s.component) + ":" + std::to_string(s.index) +
                                    " returns to the same passage");
  const int t = (s.index + 1) % len;
  return Edge{{s.component, s.index}, {s.component, t}, comp[s.index], comp[t]};
}

/// The occurrence of `label` on edge e.
inline Occurrence occurrence_of(const Edge& e, Label label) { return e.first == label ? e.from : e.to; }

inline bool label_in_use(const GaussCode& c, Label x) {
  for (const auto& comp : c.components())
    if (std::find(comp.begin(), comp.end(), x) != comp.end()) return true;
  return false;
}

inline void check_insertion_point(const GaussCode& c, const MoveApplication& m, Slot s) {
  if (s.component < 0 || static_cast<std::size_t>(s.component) >= c.component_count()) {
    throw invalid(m, "component " + std::to_string(s.component) + " does not exist");
  }
  const int len = static_cast<int>(c[static_cast<std::size_t>(s.component)].size());
  if (s.index < 0 || s.index > len) throw invalid(m, "insertion index " + std::to_string(s.index) + " out of range");
}

inline void check_fresh(const GaussCode& c, const MoveApplication& m, std::size_t count) {
  if (m.fresh.size() != count) throw invalid(m, "expected " + std::to_string(count) + " fresh labels");
  for (std::size_t k = 0; k < m.fresh.size(); ++k) {
    if (m.fresh[k] < 0) throw invalid(m, "fresh label ids must be non-negative");
    if (label_in_use(c, m.fresh[k])) throw invalid(m, "label " + std::to_string(m.fresh[k]) + " is not fresh");
    for (std::size_t j = 0; j < k; ++j)
      if (m.fresh[j] == m.fresh[k]) throw invalid(m, "fresh labels must differ");
  }
}

/// Names for labels introduced into a code that carries spellings.
inline std::vector<std::string> extend_names(const GaussCode& c, const std::vector<Label>& fresh) {
  std::vector<std::string> names = c.names();
  if (names.empty()) return names;
  std::set<std::string> taken;
  for (const auto& comp : c.components())
    for (Label x : comp) taken.insert(c.label_name(x));
  for (Label x : fresh) {
    if (names.size() <= static_cast<std::size_t>(x)) names.resize(static_cast<std::size_t>(x) + 1);
    std::string name = std::to_string(x);
    for (int k = 0; taken.count(name); ++k) name = "n" + std::to_string(x) + (k ? "_" + std::to_string(k) : "");
    taken.insert(name);
    names[static_cast<std::size_t>(x)] = name;
  }
  return names;
}

inline GaussCode delete_occurrences(const GaussCode& c, std::vector<Occurrence> occ) {
  auto comps = c.components();
  std::sort(occ.begin(), occ.end(), std::greater<>());
  for (auto [ci, s] : occ) comps[ci].erase(comps[ci].begin() + s);
  return GaussCode(std::move(comps), c.names());
}

struct R2Shape {
  Edge e1, e2;
  Label x, y;
};

inline R2Shape check_r2_minus(const GaussCode& c, const MoveApplication& m, const MoveRules& rules) {
  if (m.slots.size() != 2) throw invalid(m, "R2- names two edges");
  const Edge e1 = edge_at(c, m, m.slots[0]);
  const Edge e2 = edge_at(c, m, m.slots[1]);
  const Label x = e1.first, y = e1.second;
  if (x == y) throw invalid(m, "first edge joins a label to itself");
  const bool same_set = (e2.first == x && e2.second == y) || (e2.first == y && e2.second == x);
  if (!same_set) throw invalid(m, "the two edges do not join the same pair of labels");
  if (occurrence_of(e1, x) == occurrence_of(e2, x)) throw invalid(m, "both edges use the same occurrence of " + c.label_name(x));
  if (occurrence_of(e1, y) == occurrence_of(e2, y)) throw invalid(m, "both edges use the same occurrence of " + c.label_name(y));
  if (!rules.allow_parallel_r2 && e2.first == x) throw invalid(m, "parallel bigon rejected by the strict R2 convention");
  return {e1, e2, x, y};
}

inline std::array<Edge, 3> check_r3(const GaussCode& c, const MoveApplication& m) {
  if (m.slots.size() != 3) throw invalid(m, "R3 names three edges");
  std::array<Edge, 3> e{edge_at(c, m, m.slots[0]), edge_at(c, m, m.slots[1]), edge_at(c, m, m.slots[2])};
  std::set<Label> labels;
  for (const auto& edge : e) {
    if (edge.first == edge.second) throw invalid(m, "an edge joins a label to itself");
    labels.insert(edge.first);
    labels.insert(edge.second);
  }
  if (labels.size() != 3) throw invalid(m, "edges do not form a triangle on three labels");
  for (Label x : labels) {
    std::vector<Occurrence> used;
    for (const auto& edge : e)
      if (edge.first == x || edge.second == x) used.push_back(occurrence_of(edge, x));
    if (used.size() != 2) throw invalid(m, "label " + c.label_name(x) + " is not on exactly two triangle edges");
    if (used[0] == used[1]) throw invalid(m, "both triangle edges at " + c.label_name(x) + " use the same occurrence");
  }
  return e;
}

}  // namespace detail

/// Throws InvalidMove naming the violated condition; otherwise returns the
/// moved code.
inline GaussCode apply_move(const GaussCode& c, const MoveApplication& m, const MoveRules& rules = {}) {
  using detail::invalid;
  switch (m.kind) {
    case MoveKind::R1Minus: {
      if (m.slots.size() != 1) throw invalid(m, "R1- names one edge");
      const auto e = detail::edge_at(c, m, m.slots[0]);
      if (e.first != e.second) throw invalid(m, "edge does not join the two occurrences of one label");
      return detail::delete_occurrences(c, {e.from, e.to});
    }
    case MoveKind::R2Minus: {
      const auto s = detail::check_r2_minus(c, m, rules);
      return detail::delete_occurrences(c, {s.e1.from, s.e1.to, s.e2.from, s.e2.to});
    }
    case MoveKind::R3: {
      const auto edges = detail::check_r3(c, m);
      auto comps = c.components();
      for (const auto& e : edges) std::swap(comps[e.from.first][e.from.second], comps[e.to.first][e.to.second]);
      return GaussCode(std::move(comps), c.names());
    }
    case MoveKind::R1Plus: {
      if (m.slots.size() != 1) throw invalid(m, "R1+ names one insertion point");
      detail::check_insertion_point(c, m, m.slots[0]);
      detail::check_fresh(c, m, 1);
      auto comps = c.components();
      auto& comp = comps[m.slots[0].component];
      const Label x = m.fresh[0];
      comp.insert(comp.begin() + m.slots[0].index, {x, x});
      return GaussCode(std::move(comps), detail::extend_names(c, m.fresh));
    }
    case MoveKind::R2Plus: {
      if (m.slots.size() != 2) throw invalid(m, "R2+ names two insertion points");
      detail::check_insertion_point(c, m, m.slots[0]);
      detail::check_insertion_point(c, m, m.slots[1]);
      if (m.slots[1] < m.slots[0]) throw invalid(m, "insertion points must be in increasing order");
      detail::check_fresh(c, m, 2);
      if (!rules.allow_parallel_r2 && m.pattern == R2Pattern::Parallel) {
        throw invalid(m, "parallel bigon rejected by the strict R2 convention");
      }
      const Label x = m.fresh[0], y = m.fresh[1];
      const std::vector<Label> first{x, y};
      const std::vector<Label> second = m.pattern == R2Pattern::Parallel ? std::vector<Label>{x, y} : std::vector<Label>{y, x};
      auto comps = c.components();
      auto& c2 = comps[m.slots[1].component];
      c2.insert(c2.begin() + m.slots[1].index, second.begin(), second.end());
      auto& c1 = comps[m.slots[0].component];
      c1.insert(c1.begin() + m.slots[0].index, first.begin(), first.end());
      return GaussCode(std::move(comps), detail::extend_names(c, m.fresh));
    }
  }
  throw invalid(m, "unknown move kind");
}

/// A move that undoes m: apply_move(apply_move(c, m), inverse_move(c, m))
/// is c up to rotation of cyclic words.
inline MoveApplication inverse_move(const GaussCode& c, const MoveApplication& m, const MoveRules& rules = {}) {
  switch (m.kind) {
    case MoveKind::R3:
      detail::check_r3(c, m);
      return m;
    case MoveKind::R1Plus:
      return MoveApplication{MoveKind::R1Minus, {m.slots[0]}, {}, R2Pattern::Parallel};
    case MoveKind::R2Plus: {
      Slot a = m.slots[0], b = m.slots[1];
      if (a.component == b.component) b.index += 2;
      return MoveApplication{MoveKind::R2Minus, {a, b}, {}, R2Pattern::Parallel};
    }
    case MoveKind::R1Minus:
    case MoveKind::R2Minus: {
      std::vector<detail::Edge> places;
      if (m.kind == MoveKind::R1Minus) {
        if (m.slots.size() != 1) throw detail::invalid(m, "R1- names one edge");
        places.push_back(detail::edge_at(c, m, m.slots[0]));
        if (places[0].first != places[0].second) throw detail::invalid(m, "not a loop");
      } else {
        const auto s = detail::check_r2_minus(c, m, rules);
        places = {s.e1, s.e2};
      }
      std::set<detail::Occurrence> removed;
      for (const auto& e : places) {
        removed.insert(e.from);
        removed.insert(e.to);
      }
      // Each deleted edge becomes an insertion point in the reduced word; a
      // wrapping edge sits at the end, after any other point at that index.
      struct Point {
        Slot slot;
        bool wraps;
        int from;
        Label first, second;
      };
      std::vector<Point> points;
      for (const auto& e : places) {
        const int comp = e.from.first;
        const bool wraps = e.to.second < e.from.second;
        int before = 0;
        const int len = static_cast<int>(c[static_cast<std::size_t>(comp)].size());
        const int limit = wraps ? len : e.from.second;
        for (int s = 0; s < limit; ++s) before += removed.count({comp, s}) ? 0 : 1;
        points.push_back({{comp, before}, wraps, e.from.second, e.first, e.second});
      }
      std::sort(points.begin(), points.end(), [&](const Point& p, const Point& q) {
        return std::tie(p.slot, p.wraps, p.from) < std::tie(q.slot, q.wraps, q.from);
      });
      if (m.kind == MoveKind::R1Minus) {
        return MoveApplication{MoveKind::R1Plus, {points[0].slot}, {points[0].first}, R2Pattern::Parallel};
      }
      const Label x = points[0].first, y = points[0].second;
      const R2Pattern pattern = points[1].first == x ? R2Pattern::Parallel : R2Pattern::Antiparallel;
      return MoveApplication{MoveKind::R2Plus, {points[0].slot, points[1].slot}, {x, y}, pattern};
    }
  }
  throw detail::invalid(m, "unknown move kind");
}

using MoveKinds = std::set<MoveKind>;

inline const MoveKinds& all_move_kinds() {
  static const MoveKinds kinds{MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus, MoveKind::R2Plus, MoveKind::R3};
  return kinds;
}

struct EnumeratedMove {
  MoveApplication move;
  GaussCode result;
};

/// Every valid application of the requested kinds, insertions limited to
/// cap.max_crossings crossings. Order: kind, then slots lexicographically.
/// Applications with identical effect (the same deleted occurrences or the
/// same swapped pairs) are listed once.
inline std::vector<EnumeratedMove> enumerate_moves(const GaussCode& c, const MoveKinds& kinds, const SearchBudget& cap,
                                                   const MoveRules& rules = {}) {
  std::vector<EnumeratedMove> out;
  std::vector<Slot> edges;
  for (std::size_t ci = 0; ci < c.component_count(); ++ci)
    if (c[ci].size() >= 2)
      for (std::size_t s = 0; s < c[ci].size(); ++s) edges.push_back({static_cast<int>(ci), static_cast<int>(s)});
  std::vector<Slot> points;
  for (std::size_t ci = 0; ci < c.component_count(); ++ci) {
    const std::size_t n = std::max<std::size_t>(c[ci].size(), 1);
    for (std::size_t s = 0; s < n; ++s) points.push_back({static_cast<int>(ci), static_cast<int>(s)});
  }
  const Label fresh = c.label_bound();
  const auto crossings = static_cast<long>(c.crossing_count());

  auto label_at = [&](Slot s) { return c[static_cast<std::size_t>(s.component)][static_cast<std::size_t>(s.index)]; };
  auto next_slot = [&](Slot s) {
    return Slot{s.component, (s.index + 1) % static_cast<int>(c[static_cast<std::size_t>(s.component)].size())};
  };
  auto pair_key = [&](Slot s) {
    Slot t = next_slot(s);
    return s < t ? std::make_pair(s, t) : std::make_pair(t, s);
  };

  for (MoveKind kind : kinds) {
    switch (kind) {
      case MoveKind::R1Minus: {
        std::set<std::pair<Slot, Slot>> seen;
        for (Slot e : edges) {
          if (label_at(e) != label_at(next_slot(e)) || !seen.insert(pair_key(e)).second) continue;
          MoveApplication m{MoveKind::R1Minus, {e}, {}, R2Pattern::Parallel};
          out.push_back({m, apply_move(c, m, rules)});
        }
        break;
      }
      case MoveKind::R1Plus: {
        if (crossings + 1 > cap.max_crossings) break;
        for (Slot p : points) {
          MoveApplication m{MoveKind::R1Plus, {p}, {fresh}, R2Pattern::Parallel};
          out.push_back({m, apply_move(c, m, rules)});
        }
        break;
      }
      case MoveKind::R2Minus: {
        std::set<std::pair<Label, Label>> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          const Label x = label_at(edges[i]), y = label_at(next_slot(edges[i]));
          if (x == y) continue;
          for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Label u = label_at(edges[j]), v = label_at(next_slot(edges[j]));
            if (!((u == x && v == y) || (u == y && v == x))) continue;
            const auto key = std::minmax(x, y);
            if (seen.count(key)) continue;
            MoveApplication m{MoveKind::R2Minus, {edges[i], edges[j]}, {}, R2Pattern::Parallel};
            try {
              auto result = apply_move(c, m, rules);
              seen.insert(key);
              out.push_back({m, std::move(result)});
            } catch (const Error&) {
            }
          }
        }
        break;
      }
      case MoveKind::R2Plus: {
        if (crossings + 2 > cap.max_crossings) break;
        for (std::size_t i = 0; i < points.size(); ++i)
          for (std::size_t j = i; j < points.size(); ++j)
            for (R2Pattern pattern : {R2Pattern::Parallel, R2Pattern::Antiparallel}) {
              if (pattern == R2Pattern::Parallel && !rules.allow_parallel_r2) continue;
              MoveApplication m{MoveKind::R2Plus, {points[i], points[j]}, {fresh, fresh + 1}, pattern};
              out.push_back({m, apply_move(c, m, rules)});
            }
        break;
      }
      case MoveKind::R3: {
        std::set<std::array<std::pair<Slot, Slot>, 3>> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          const Label a = label_at(edges[i]), b = label_at(next_slot(edges[i]));
          if (a == b) continue;
          for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Label p = label_at(edges[j]), q = label_at(next_slot(edges[j]));
            if (p == q) continue;
            const int shared = (p == a || p == b) + (q == a || q == b);
            if (shared != 1) continue;
            for (std::size_t k = j + 1; k < edges.size(); ++k) {
              MoveApplication m{MoveKind::R3, {edges[i], edges[j], edges[k]}, {}, R2Pattern::Parallel};
              std::array<std::pair<Slot, Slot>, 3> key{pair_key(edges[i]), pair_key(edges[j]), pair_key(edges[k])};
              std::sort(key.begin(), key.end());
              if (seen.count(key)) continue;
              try {
                detail::check_r3(c, m);
              } catch (const Error&) {
                continue;
              }
              seen.insert(key);
              out.push_back({m, apply_move(c, m, rules)});
            }
          }
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace flk
