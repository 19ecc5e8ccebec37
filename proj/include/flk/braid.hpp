#pragma once

// Words in the free braid group fB_n.
//
// fB_n is generated by sigma_1..sigma_{n-1} (flat crossings) and
// zeta_1..zeta_{n-1} (virtual crossings). Every generator is an involution,
// so a word's inverse is its reversal and the data model has no inverse
// letters. The word problem is not known to be decidable; normalize() is a
// deterministic reduced form, not a canonical one.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flk/error.hpp"

namespace flk {

enum class GenKind : std::uint8_t { Flat, Virtual };

struct Generator {
  GenKind kind = GenKind::Flat;
  int index = 1;  // 1-based; acts on strand positions index, index + 1

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.kind <=> b.kind;
  }

  bool is_flat() const noexcept { return kind == GenKind::Flat; }
};

inline constexpr Generator flat(int i) { return Generator{GenKind::Flat, i}; }
inline constexpr Generator virt(int i) { return Generator{GenKind::Virtual, i}; }

inline std::string format_generator(Generator g) {
  return (g.is_flat() ? "s" : "z") + std::to_string(g.index);
}

class BraidWord {
 public:
  BraidWord() : BraidWord(1) {}

  explicit BraidWord(int strands, std::vector<Generator> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) {
      throw Error(ErrorCode::NonPositiveStrands, "strand count must be >= 1, got " + std::to_string(strands_));
    }
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const int i = letters_[k].index;
      if (i < 1 || i >= strands_) {
        throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(k) + " (" +
                                                    format_generator(letters_[k]) + ") needs 1 <= i < " +
                                                    std::to_string(strands_));
      }
    }
  }

  int strands() const noexcept { return strands_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Generator& operator[](std::size_t k) const { return letters_[k]; }

  std::size_t flat_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(),
                                                  [](Generator g) { return g.is_flat(); }));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b) {
    if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
  }

 private:
  int strands_;
  std::vector<Generator> letters_;
};

// ---------------------------------------------------------------------------
// Text format:  "fB <n>: s1 z2 s1"

inline std::string format_braid_word(const BraidWord& w) {
  std::string out = "fB " + std::to_string(w.strands()) + ":";
  for (Generator g : w.letters()) {
    out += ' ';
    out += format_generator(g);
  }
  return out;
}

namespace detail {

struct Token {
  std::string text;
  std::size_t offset;
};

inline std::vector<Token> split_whitespace(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    const std::size_t start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k > start) tokens.push_back({std::string(text.substr(start, k - start)), start});
  }
  return tokens;
}

inline std::optional<long> parse_decimal(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  long v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + (ch - '0');
  }
  return v;
}

inline Error malformed(const Token& t, const std::string& why) {
  return Error(ErrorCode::MalformedToken,
               "token '" + t.text + "' at position " + std::to_string(t.offset) + ": " + why);
}

}  // namespace detail

inline BraidWord parse_braid_word(std::string_view text) {
  using detail::Token;
  auto tokens = detail::split_whitespace(text);
  if (tokens.empty()) throw Error(ErrorCode::MalformedToken, "empty input at position 0: expected 'fB <n>:'");
  if (tokens[0].text != "fB") throw detail::malformed(tokens[0], "expected 'fB'");

  // The colon may be attached to the strand count ("3:") or stand alone.
  std::size_t next = 1;
  if (next >= tokens.size()) throw Error(ErrorCode::MalformedToken, "missing strand count after 'fB'");
  Token count = tokens[next++];
  bool colon = false;
  if (!count.text.empty() && count.text.back() == ':') {
    count.text.pop_back();
    colon = true;
  }
  if (!colon) {
    if (next >= tokens.size() || tokens[next].text != ":") {
      throw detail::malformed(count, "expected ':' after strand count");
    }
    ++next;
  }
  const bool negative = !count.text.empty() && count.text[0] == '-';
  auto n = detail::parse_decimal(negative ? std::string_view(count.text).substr(1) : std::string_view(count.text));
  if (!n) throw detail::malformed(count, "strand count is not an integer");
  if (negative || *n < 1) {
    throw Error(ErrorCode::NonPositiveStrands, "strand count " + count.text + " at position " +
                                                   std::to_string(count.offset) + " must be >= 1");
  }
  const int strands = static_cast<int>(*n);

  std::vector<Generator> letters;
  for (; next < tokens.size(); ++next) {
    const Token& t = tokens[next];
    if (t.text.size() < 2 || (t.text[0] != 's' && t.text[0] != 'z')) {
      throw detail::malformed(t, "expected s<i> or z<i>");
    }
    auto i = detail::parse_decimal(std::string_view(t.text).substr(1));
    if (!i) throw detail::malformed(t, "generator index is not an integer");
    if (*i < 1 || *i >= strands) {
      throw Error(ErrorCode::IndexOutOfRange, "token '" + t.text + "' at position " + std::to_string(t.offset) +
                                                  ": index must satisfy 1 <= i < " + std::to_string(strands));
    }
    letters.push_back(Generator{t.text[0] == 's' ? GenKind::Flat : GenKind::Virtual, static_cast<int>(*i)});
  }
  return BraidWord(strands, std::move(letters));
}

// ---------------------------------------------------------------------------
// Group operations

inline BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw Error(ErrorCode::StrandMismatch,
                "cannot compose fB_" + std::to_string(u.strands()) + " with fB_" + std::to_string(v.strands()));
  }
  std::vector<Generator> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

inline BraidWord invert(const BraidWord& w) {
  return BraidWord(w.strands(), std::vector<Generator>(w.letters().rbegin(), w.letters().rend()));
}

/// Re-embeds w into fB_strands, adding `shift` to every generator index.
inline BraidWord include(const BraidWord& w, int strands, int shift = 0) {
  std::vector<Generator> letters = w.letters();
  for (auto& g : letters) g.index += shift;
  return BraidWord(strands, std::move(letters));
}

/// (number of flat letters mod 2, number of virtual letters mod 2). Every
/// defining relation of fB_n preserves both counts mod 2.
inline std::pair<int, int> parity_vector(const BraidWord& w) {
  const auto f = w.flat_count();
  return {static_cast<int>(f % 2), static_cast<int>((w.size() - f) % 2)};
}

// ---------------------------------------------------------------------------
// Permutations

/// Bijection on {1..n}; images()[k-1] is the image of k.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 1 || x > static_cast<int>(images_.size()) || seen[x - 1]) {
        throw Error(ErrorCode::OutOfRange, "not a permutation of 1.." + std::to_string(images_.size()));
      }
      seen[x - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(n);
    for (int k = 0; k < n; ++k) images[k] = k + 1;
    return Permutation(std::move(images));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(k - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// x -> next(this(x)).
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw Error(ErrorCode::StrandMismatch, "permutation sizes differ");
    std::vector<int> out(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) out[k] = next(images_[k]);
    return Permutation(std::move(out));
  }

  bool is_identity() const noexcept {
    for (std::size_t k = 0; k < images_.size(); ++k)
      if (images_[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  /// Cycles (fixed points included), each starting at its least element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= size(); ++start) {
      if (seen[start - 1]) continue;
      std::vector<int> cycle;
      for (int x = start; !seen[x - 1]; x = (*this)(x)) {
        seen[x - 1] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation, fixed points omitted; "()" for the identity.
inline std::string format_permutation(const Permutation& p) {
  std::string out;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Maps each strand's top position to its bottom position; every letter
/// (flat or virtual) transposes the adjacent positions it acts on.
inline Permutation strand_permutation(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(n);  // at[pos-1] = top position of the strand now at pos
  for (int k = 0; k < n; ++k) at[k] = k + 1;
  for (Generator g : w.letters()) std::swap(at[g.index - 1], at[g.index]);
  std::vector<int> images(n);
  for (int pos = 1; pos <= n; ++pos) images[at[pos - 1] - 1] = pos;
  return Permutation(std::move(images));
}

/// Pure-virtual word realising p, built by bubble-sorting the images.
inline BraidWord permutation_to_virtual_word(const Permutation& p) {
  const int n = p.size();
  std::vector<int> arr = p.images();
  std::vector<Generator> letters;
  for (int pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (int k = 0; k + 1 < n - pass; ++k) {
      if (arr[k] > arr[k + 1]) {
        std::swap(arr[k], arr[k + 1]);
        letters.push_back(virt(k + 1));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return BraidWord(n, std::move(letters));
}

// ---------------------------------------------------------------------------
// Relations and rewriting

enum class Rule : std::uint8_t {
  Cancel,        // X X -> e
  Insert,        // e -> X X
  FarCommute,    // A B -> B A, |i - j| > 1
  MixedCommute,  // s_i z_i <-> z_i s_i
  FlatBraid,     // s_i s_j s_i <-> s_j s_i s_j, |i - j| = 1
  VirtualBraid,  // z_i z_j z_i <-> z_j z_i z_j, |i - j| = 1
  MixedBraid,    // s_i z_{i+1} z_i <-> z_{i+1} z_i s_{i+1}, and its inverse form
  Absorb,        // z_i s_i z_i -> s_i, s_i z_i s_i -> z_i
  Expand,        // inverse of Absorb
};

inline const char* rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::Cancel: return "cancel";
    case Rule::Insert: return "insert";
    case Rule::FarCommute: return "far-commute";
    case Rule::MixedCommute: return "mixed-commute";
    case Rule::FlatBraid: return "flat-braid";
    case Rule::VirtualBraid: return "virtual-braid";
    case Rule::MixedBraid: return "mixed-braid";
    case Rule::Absorb: return "absorb";
    case Rule::Expand: return "expand";
  }
  return "?";
}

inline Rule inverse_rule(Rule r) noexcept {
  switch (r) {
    case Rule::Cancel: return Rule::Insert;
    case Rule::Insert: return Rule::Cancel;
    case Rule::Absorb: return Rule::Expand;
    case Rule::Expand: return Rule::Absorb;
    default: return r;
  }
}

/// Replace letters[position, position + from.size()) by `to`.
struct Rewrite {
  Rule rule;
  std::size_t position;
  std::vector<Generator> from;
  std::vector<Generator> to;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

inline Rewrite inverse(const Rewrite& r) { return Rewrite{inverse_rule(r.rule), r.position, r.to, r.from}; }

namespace detail {

inline bool same_index_pair(Generator a, Generator b) { return a.index == b.index; }

inline bool is_mixed_braid(const std::vector<Generator>& f, const std::vector<Generator>& t) {
  if (f.size() != 3 || t.size() != 3) return false;
  auto fits = [](const std::vector<Generator>& lhs, const std::vector<Generator>& rhs) {
    // s_i z_{i+1} z_i = z_{i+1} z_i s_{i+1}
    const int i = lhs[0].index;
    if (lhs == std::vector{flat(i), virt(i + 1), virt(i)} && rhs == std::vector{virt(i + 1), virt(i), flat(i + 1)})
      return true;
    // inverse form: z_i z_{i+1} s_i = s_{i+1} z_i z_{i+1}
    const int j = lhs[2].index;
    return lhs == std::vector{virt(j), virt(j + 1), flat(j)} && rhs == std::vector{flat(j + 1), virt(j), virt(j + 1)};
  };
  return fits(f, t) || fits(t, f);
}

}  // namespace detail

/// True when (r.from, r.to) is an instance of r.rule in fB_n.
inline bool is_relation_instance(const Rewrite& r) {
  const auto& f = r.from;
  const auto& t = r.to;
  switch (r.rule) {
    case Rule::Cancel: return f.size() == 2 && f[0] == f[1] && t.empty();
    case Rule::Insert: return t.size() == 2 && t[0] == t[1] && f.empty();
    case Rule::FarCommute:
      return f.size() == 2 && t.size() == 2 && std::abs(f[0].index - f[1].index) > 1 && t[0] == f[1] && t[1] == f[0];
    case Rule::MixedCommute:
      return f.size() == 2 && t.size() == 2 && f[0].index == f[1].index && f[0].kind != f[1].kind && t[0] == f[1] &&
             t[1] == f[0];
    case Rule::FlatBraid:
    case Rule::VirtualBraid: {
      const GenKind k = r.rule == Rule::FlatBraid ? GenKind::Flat : GenKind::Virtual;
      if (f.size() != 3 || t.size() != 3) return false;
      for (auto g : f)
        if (g.kind != k) return false;
      return f[0] == f[2] && std::abs(f[0].index - f[1].index) == 1 && t[0] == f[1] && t[1] == f[0] && t[2] == f[1];
    }
    case Rule::MixedBraid: return detail::is_mixed_braid(f, t);
    case Rule::Absorb:
      return f.size() == 3 && t.size() == 1 && f[0] == f[2] && detail::same_index_pair(f[0], f[1]) &&
             f[0].kind != f[1].kind && t[0] == f[1];
    case Rule::Expand:
      return t.size() == 3 && f.size() == 1 && t[0] == t[2] && detail::same_index_pair(t[0], t[1]) &&
             t[0].kind != t[1].kind && f[0] == t[1];
  }
  return false;
}

inline BraidWord apply_rewrite(const BraidWord& w, const Rewrite& r) {
  const auto& ls = w.letters();
  if (r.position > ls.size() || r.from.size() > ls.size() - r.position ||
      !std::equal(r.from.begin(), r.from.end(), ls.begin() + static_cast<std::ptrdiff_t>(r.position))) {
    throw Error(ErrorCode::InvalidMove, std::string(rule_name(r.rule)) + " pattern not present at position " +
                                            std::to_string(r.position));
  }
  if (!is_relation_instance(r)) {
    throw Error(ErrorCode::InvalidMove, std::string(rule_name(r.rule)) + " is not a relation instance");
  }
  std::vector<Generator> out(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r.position));
  out.insert(out.end(), r.to.begin(), r.to.end());
  out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(r.position + r.from.size()), ls.end());
  return BraidWord(w.strands(), std::move(out));
}

inline BraidWord replay(BraidWord w, const std::vector<Rewrite>& path) {
  for (const auto& r : path) w = apply_rewrite(w, r);
  return w;
}

/// Every rewrite applicable to w whose result has at most max_length letters,
/// in order (position, rule, inserted letter).
inline std::vector<Rewrite> enumerate_rewrites(const BraidWord& w, std::size_t max_length) {
  const auto& ls = w.letters();
  const std::size_t len = ls.size();
  const int n = w.strands();
  std::vector<Rewrite> out;
  auto slice = [&](std::size_t p, std::size_t k) {
    return std::vector<Generator>(ls.begin() + static_cast<std::ptrdiff_t>(p),
                                  ls.begin() + static_cast<std::ptrdiff_t>(p + k));
  };
  auto try_add = [&](Rewrite r) {
    if (is_relation_instance(r)) out.push_back(std::move(r));
  };
  for (std::size_t p = 0; p <= len; ++p) {
    if (p + 2 <= len) {
      auto two = slice(p, 2);
      try_add({Rule::Cancel, p, two, {}});
      try_add({Rule::FarCommute, p, two, {two[1], two[0]}});
      try_add({Rule::MixedCommute, p, two, {two[1], two[0]}});
    }
    if (p + 3 <= len) {
      auto three = slice(p, 3);
      try_add({Rule::FlatBraid, p, three, {three[1], three[0], three[1]}});
      try_add({Rule::VirtualBraid, p, three, {three[1], three[0], three[1]}});
      const int i = three[0].index;
      const int j = three[2].index;
      for (auto to : {std::vector{virt(i + 1), virt(i), flat(i + 1)}, std::vector{flat(i - 1), virt(i), virt(i - 1)},
                      std::vector{flat(j + 1), virt(j), virt(j + 1)}, std::vector{virt(j - 1), virt(j), flat(j - 1)}}) {
        bool ok = true;
        for (auto g : to) ok = ok && g.index >= 1 && g.index < n;
        if (ok) try_add({Rule::MixedBraid, p, three, to});
      }
      try_add({Rule::Absorb, p, three, {three[1]}});
    }
    if (p < len && len + 2 <= max_length) {
      Generator g = ls[p];
      Generator other{g.is_flat() ? GenKind::Virtual : GenKind::Flat, g.index};
      try_add({Rule::Expand, p, {g}, {other, g, other}});
    }
    if (len + 2 <= max_length) {
      for (int i = 1; i < n; ++i) {
        for (GenKind k : {GenKind::Flat, GenKind::Virtual}) {
          Generator g{k, i};
          out.push_back({Rule::Insert, p, {}, {g, g}});
        }
      }
    }
  }
  // A single window can match MixedBraid through more than one candidate;
  // drop duplicates while keeping order.
  std::vector<Rewrite> unique;
  for (auto& r : out)
    if (std::find(unique.begin(), unique.end(), r) == unique.end()) unique.push_back(std::move(r));
  return unique;
}

/// Deterministic reduced form plus the rewrites that produce it. Rules, in
/// priority order, each applied at the leftmost match until none applies:
/// cancel XX; absorb z_i s_i z_i -> s_i and s_i z_i s_i -> z_i; swap far
/// letters into nondecreasing index order.
inline std::pair<BraidWord, std::vector<Rewrite>> normalize_traced(const BraidWord& w) {
  std::vector<Generator> ls = w.letters();
  std::vector<Rewrite> trace;
  for (;;) {
    bool changed = false;
    for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
      if (ls[p] == ls[p + 1]) {
        trace.push_back({Rule::Cancel, p, {ls[p], ls[p]}, {}});
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p), ls.begin() + static_cast<std::ptrdiff_t>(p + 2));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t p = 0; p + 2 < ls.size(); ++p) {
      if (ls[p] == ls[p + 2] && ls[p].index == ls[p + 1].index && ls[p].kind != ls[p + 1].kind) {
        trace.push_back({Rule::Absorb, p, {ls[p], ls[p + 1], ls[p + 2]}, {ls[p + 1]}});
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p + 2));
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
      if (ls[p].index > ls[p + 1].index + 1) {
        trace.push_back({Rule::FarCommute, p, {ls[p], ls[p + 1]}, {ls[p + 1], ls[p]}});
        std::swap(ls[p], ls[p + 1]);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  return {BraidWord(w.strands(), std::move(ls)), std::move(trace)};
}

inline BraidWord normalize(const BraidWord& w) { return normalize_traced(w).first; }

/// A defining relation lhs = rhs of fB_n.
struct Relation {
  std::string name;
  BraidWord lhs;
  BraidWord rhs;
};

/// Every defining relation instance of fB_n.
inline std::vector<Relation> defining_relations(int n) {
  std::vector<Relation> out;
  auto word = [n](std::vector<Generator> ls) { return BraidWord(n, std::move(ls)); };
  auto name = [](std::string_view pattern, int i, int j = 0) {
    std::string s(pattern);
    auto put = [&s](char key, int v) {
      for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key)) s.replace(pos, 1, std::to_string(v));
    };
    put('i', i);
    put('j', j);
    return s;
  };
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      if (i < j) {
        out.push_back({name("si sj = sj si", i, j), word({flat(i), flat(j)}), word({flat(j), flat(i)})});
        out.push_back({name("zi zj = zj zi", i, j), word({virt(i), virt(j)}), word({virt(j), virt(i)})});
      }
      out.push_back({name("zi sj = sj zi", i, j), word({virt(i), flat(j)}), word({flat(j), virt(i)})});
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back({name("si sj si = sj si sj", i, i + 1), word({flat(i), flat(i + 1), flat(i)}),
                   word({flat(i + 1), flat(i), flat(i + 1)})});
    out.push_back({name("zi zj zi = zj zi zj", i, i + 1), word({virt(i), virt(i + 1), virt(i)}),
                   word({virt(i + 1), virt(i), virt(i + 1)})});
    out.push_back({name("si zj zi = zj zi sj", i, i + 1), word({flat(i), virt(i + 1), virt(i)}),
                   word({virt(i + 1), virt(i), flat(i + 1)})});
  }
  for (int i = 1; i < n; ++i) {
    out.push_back({name("zi zi = 1", i), word({virt(i), virt(i)}), word({})});
    out.push_back({name("si si = 1", i), word({flat(i), flat(i)}), word({})});
    out.push_back({name("si zi = zi si", i), word({flat(i), virt(i)}), word({virt(i), flat(i)})});
  }
  return out;
}

}  // namespace flk
