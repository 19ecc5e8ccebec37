#pragma once

// Yang-Baxter solutions over Z_m and the representations of fB_n they induce.
//
// An R-matrix is a 4x4 matrix on V (x) V with V = span(e0, e1); row and
// column (a,b) use index 2a + b. A representation sends sigma_i to R and
// zeta_i to the basis swap P, both acting on tensor slots (i, i+1).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flk/braid.hpp"
#include "flk/error.hpp"
#include "flk/modular.hpp"
#include "flk/random.hpp"

namespace flk {

struct EightVertex {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;

  friend bool operator==(const EightVertex&, const EightVertex&) = default;
  friend auto operator<=>(const EightVertex&, const EightVertex&) = default;
};

class RMatrix {
 public:
  /// Rows [[a,0,0,b],[0,c,d,0],[0,d,c,0],[b,0,0,a]].
  static RMatrix eight_vertex(std::uint32_t modulus, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    ModMatrix m(4, modulus, {a, 0, 0, b, 0, c, d, 0, 0, d, c, 0, b, 0, 0, a});
    RMatrix r(std::move(m));
    r.params_ = EightVertex{r.matrix_(0, 0), r.matrix_(0, 3), r.matrix_(1, 1), r.matrix_(1, 2)};
    return r;
  }

  static RMatrix full(ModMatrix m) {
    if (m.dim() != 4) throw Error(ErrorCode::OutOfRange, "an R-matrix is 4x4");
    return RMatrix(std::move(m));
  }

  const ModMatrix& matrix() const noexcept { return matrix_; }
  std::uint32_t modulus() const noexcept { return matrix_.modulus(); }
  /// Set when constructed through eight_vertex().
  const std::optional<EightVertex>& params() const noexcept { return params_; }

  /// True when the matrix has the eight-vertex sparsity and symmetry pattern.
  bool has_eight_vertex_shape() const {
    const auto& m = matrix_;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        const bool allowed = r == c || r + c == 3;
        if (!allowed && m(r, c) != 0) return false;
      }
    return m(0, 0) == m(3, 3) && m(0, 3) == m(3, 0) && m(1, 1) == m(2, 2) && m(1, 2) == m(2, 1);
  }

  friend bool operator==(const RMatrix& a, const RMatrix& b) { return a.matrix_ == b.matrix_; }

 private:
  explicit RMatrix(ModMatrix m) : matrix_(std::move(m)) {}

  ModMatrix matrix_;
  std::optional<EightVertex> params_;
};

/// The basis swap e_a (x) e_b -> e_b (x) e_a; the eight-vertex point (1,0,0,1).
inline ModMatrix swap_matrix(std::uint32_t modulus) {
  return RMatrix::eight_vertex(modulus, 1, 0, 0, 1).matrix();
}

struct RChecks {
  bool ybe = false;
  bool symmetry = false;
  bool involution = false;

  bool all() const noexcept { return ybe && symmetry && involution; }
};

/// YBE (R (x) Id)(Id (x) R)(R (x) Id) = (Id (x) R)(R (x) Id)(Id (x) R) on
/// the 8-dimensional space, symmetry P R P = R, and involution R^2 = I.
inline RChecks check_r_matrix(const RMatrix& r) {
  const std::uint32_t m = r.modulus();
  const ModMatrix& R = r.matrix();
  const ModMatrix id2 = ModMatrix::identity(2, m);
  const ModMatrix left = kron(R, id2);
  const ModMatrix right = kron(id2, R);
  const ModMatrix P = swap_matrix(m);

  RChecks out;
  out.ybe = left * right * left == right * left * right;
  out.symmetry = P * R * P == R;
  out.involution = R * R == ModMatrix::identity(4, m);
  return out;
}

/// All (a,b,c,d) in Z_m^4 whose eight-vertex matrix passes every check of
/// check_r_matrix, in lexicographic order.
///
/// R^2 = I for the eight-vertex form is exactly a^2+b^2 = 1, 2ab = 0,
/// c^2+d^2 = 1, 2cd = 0, so the (a,b) and (c,d) halves are filtered
/// separately before the full check runs on each pairing.
inline std::vector<EightVertex> solve_8vertex(std::uint32_t m) {
  if (m < 2) throw Error(ErrorCode::OutOfRange, "modulus must be >= 2");
  if (m > kMaxModulus) throw Error(ErrorCode::ModulusTooLarge, "modulus " + std::to_string(m) + " exceeds 65536");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> halves;
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      if ((x * x + y * y) % m == 1 % m && (2 * x * y) % m == 0) halves.emplace_back(x, y);

  std::vector<EightVertex> out;
  for (auto [a, b] : halves)
    for (auto [c, d] : halves)
      if (check_r_matrix(RMatrix::eight_vertex(m, a, b, c, d)).all()) out.push_back({a, b, c, d});
  return out;
}

/// Number of candidates solve_full enumerates: matrices satisfying
/// R^{ab}_{cd} = R^{ba}_{dc} have 10 free entries.
inline std::uint64_t full_candidate_count(std::uint32_t m) {
  std::uint64_t n = 1;
  for (int k = 0; k < 10; ++k) {
    if (n > (std::uint64_t{1} << 53) / m) return UINT64_MAX;
    n *= m;
  }
  return n;
}

inline constexpr std::uint64_t kDefaultFullCandidates = 4096;

/// Every 4x4 matrix over Z_m passing all three checks, sorted by row-major
/// entries. Candidates are drawn from the symmetric subspace (the symmetry
/// check's solution set), then filtered by involution and YBE.
inline std::vector<RMatrix> solve_full(std::uint32_t m, std::uint64_t max_candidates = kDefaultFullCandidates) {
  if (m < 2) throw Error(ErrorCode::OutOfRange, "modulus must be >= 2");
  if (m > kMaxModulus) throw Error(ErrorCode::ModulusTooLarge, "modulus " + std::to_string(m) + " exceeds 65536");
  const std::uint64_t count = full_candidate_count(m);
  if (count > max_candidates) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(count) + " candidates over Z_" + std::to_string(m) +
                                               " exceed the budget of " + std::to_string(max_candidates));
  }

  // Orbits of entry positions under (ab, cd) -> (ba, dc).
  auto swap_bits = [](std::size_t k) { return ((k & 1) << 1) | (k >> 1); };
  std::array<int, 16> orbit{};
  orbit.fill(-1);
  int free_count = 0;
  for (std::size_t pos = 0; pos < 16; ++pos) {
    if (orbit[pos] >= 0) continue;
    const std::size_t mirror = swap_bits(pos / 4) * 4 + swap_bits(pos % 4);
    orbit[pos] = orbit[mirror] = free_count++;
  }

  std::vector<std::uint32_t> digits(static_cast<std::size_t>(free_count), 0);
  std::vector<RMatrix> out;
  const ModMatrix id4 = ModMatrix::identity(4, m);
  for (;;) {
    ModMatrix R(4, m);
    for (std::size_t pos = 0; pos < 16; ++pos) R.set(pos / 4, pos % 4, digits[orbit[pos]]);
    if (R * R == id4) {
      RMatrix candidate = RMatrix::full(R);
      if (check_r_matrix(candidate).all()) out.push_back(std::move(candidate));
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == m) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const RMatrix& x, const RMatrix& y) {
    return x.matrix().entries() < y.matrix().entries();
  });
  return out;
}

// ---------------------------------------------------------------------------
// The displayed equation systems for the eight-vertex ansatz.

struct EquationCheck {
  std::string equation;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  bool holds = false;
  bool rejects_direct_solution = false;  // holds == false although the direct check passes
};

struct SystemCheck {
  std::vector<EquationCheck> equations;
  bool holds = false;
  bool agrees_with_direct = false;
};

struct SystemReport {
  std::uint32_t modulus = 0;
  EightVertex params;
  RChecks direct;
  SystemCheck general;
  SystemCheck reduced;
};

namespace detail {

struct Poly {
  const char* text;
  std::int64_t lhs;
  std::int64_t rhs;
};

inline SystemCheck evaluate_system(const std::vector<Poly>& polys, std::uint32_t m, bool direct_ok) {
  SystemCheck out;
  out.holds = true;
  for (const auto& p : polys) {
    EquationCheck e;
    e.equation = p.text;
    e.lhs = mod_reduce(p.lhs, m);
    e.rhs = mod_reduce(p.rhs, m);
    e.holds = e.lhs == e.rhs;
    e.rejects_direct_solution = direct_ok && !e.holds;
    out.holds = out.holds && e.holds;
    out.equations.push_back(std::move(e));
  }
  out.agrees_with_direct = out.holds == direct_ok;
  return out;
}

}  // namespace detail

/// Evaluates the general and reduced polynomial systems for the eight-vertex
/// ansatz alongside the direct matrix check. The direct check is the ground
/// truth; disagreements are reported as found.
inline SystemReport equation_system_report(std::int64_t a_in, std::int64_t b_in, std::int64_t c_in, std::int64_t d_in,
                                        std::uint32_t m) {
  const RMatrix r = RMatrix::eight_vertex(m, a_in, b_in, c_in, d_in);
  const auto [ua, ub, uc, ud] = *r.params();
  const std::int64_t a = ua, b = ub, c = uc, d = ud;

  SystemReport out;
  out.modulus = m;
  out.params = *r.params();
  out.direct = check_r_matrix(r);
  const bool ok = out.direct.all();

  out.general = detail::evaluate_system(
      {
          {"a^2 b + b c a = a b c + b d^2", a * a * b + b * c * a, a * b * c + b * d * d},
          {"c d^2 + d a c = c d a + d b^2", c * d * d + d * a * c, c * d * a + d * b * b},
          {"d c^2 + c a d = a d c + b^2 d", d * c * c + c * a * d, a * d * c + b * b * d},
          {"d c d + c a c = a c a + b a b", d * c * d + c * a * c, a * c * a + b * a * b},
          {"a d^2 + b c^2 = d^2 a + c b^2", a * d * d + b * c * c, d * d * a + c * b * b},
          {"d^2 b + c b a = a c b + b a^2", d * d * b + c * b * a, a * c * b + b * a * a},
          {"a^2 + b^2 = 1", a * a + b * b, 1},
          {"c^2 + d^2 = 1", c * c + d * d, 1},
          {"a b + b a = 0", a * b + b * a, 0},
          {"c d + d c = 0", c * d + d * c, 0},
      },
      m, ok);
  out.reduced = detail::evaluate_system(
      {
          {"b^2 d = 0", b * b * d, 0},
          {"b d^2 = 0", b * d * d, 0},
          {"2 a b = 0", 2 * a * b, 0},
          {"2 c d = 0", 2 * c * d, 0},
          {"a c^2 = a^2 c", a * c * c, a * a * c},
          {"b c^2 = b^2 c", b * c * c, b * b * c},
          {"a^2 + b^2 = 1", a * a + b * b, 1},
          {"c^2 + d^2 = 1", c * c + d * d, 1},
      },
      m, ok);
  return out;
}

// ---------------------------------------------------------------------------
// Representations of fB_n on V^{(x) n}

inline constexpr int kMaxRepresentationStrands = 16;

class Representation;
inline Representation build_and_verify_rep(const RMatrix& r, int strands);

class Representation {
 public:
  const RMatrix& r_matrix() const noexcept { return r_; }
  const ModMatrix& swap() const noexcept { return swap_; }
  int strands() const noexcept { return strands_; }
  std::uint32_t modulus() const noexcept { return r_.modulus(); }
  std::size_t dimension() const noexcept { return std::size_t{1} << strands_; }

  const ModMatrix& local(Generator g) const noexcept { return g.is_flat() ? r_.matrix() : swap_; }

  /// v <- rho(g) v, slot i of n at bit (n - i).
  void apply(Generator g, const std::vector<std::uint32_t>& in, std::vector<std::uint32_t>& out) const {
    const ModMatrix& M = local(g);
    const std::uint32_t m = modulus();
    const int hi = strands_ - g.index;  // bit of slot i
    const int lo = hi - 1;              // bit of slot i + 1
    const std::size_t mask = (std::size_t{1} << hi) | (std::size_t{1} << lo);
    std::fill(out.begin(), out.end(), 0u);
    for (std::size_t s = 0; s < in.size(); ++s) {
      const std::uint64_t x = in[s];
      if (x == 0) continue;
      const std::size_t col = (((s >> hi) & 1) << 1) | ((s >> lo) & 1);
      const std::size_t base = s & ~mask;
      for (std::size_t row = 0; row < 4; ++row) {
        const std::uint32_t coeff = M(row, col);
        if (coeff == 0) continue;
        const std::size_t t = base | ((row >> 1) << hi) | ((row & 1) << lo);
        out[t] = static_cast<std::uint32_t>((out[t] + x * coeff) % m);
      }
    }
  }

  /// rho(w) e_s, with rho(uv) = rho(u) rho(v).
  std::vector<std::uint32_t> image_of_basis(const BraidWord& w, std::size_t s) const {
    std::vector<std::uint32_t> v(dimension(), 0), scratch(dimension(), 0);
    v[s] = 1;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      apply(*it, v, scratch);
      v.swap(scratch);
    }
    return v;
  }

  /// Dense matrix of rho(w); only sensible for small strand counts.
  ModMatrix matrix_of(const BraidWord& w) const {
    ModMatrix out(dimension(), modulus());
    for (std::size_t s = 0; s < dimension(); ++s) {
      auto col = image_of_basis(w, s);
      for (std::size_t t = 0; t < dimension(); ++t) out.set(t, s, col[t]);
    }
    return out;
  }

 private:
  friend Representation build_and_verify_rep(const RMatrix& r, int strands);
  Representation(RMatrix r, int strands) : r_(std::move(r)), swap_(swap_matrix(r_.modulus())), strands_(strands) {}

  RMatrix r_;
  ModMatrix swap_;
  int strands_;
};

/// sigma_i -> R, zeta_i -> P on slots (i, i+1). Every defining relation of
/// fB_k, k = min(n, 4), is checked as an operator identity on V^{(x) k}; all
/// relations involve at most four adjacent slots, so this covers every n.
inline Representation build_and_verify_rep(const RMatrix& r, int strands) {
  if (strands < 2) throw Error(ErrorCode::OutOfRange, "a representation needs at least 2 strands");
  if (strands > kMaxRepresentationStrands) {
    throw Error(ErrorCode::OutOfRange, "at most " + std::to_string(kMaxRepresentationStrands) + " strands supported");
  }
  const int k = std::min(strands, 4);
  Representation probe(r, k);
  for (const auto& rel : defining_relations(k)) {
    if (probe.matrix_of(rel.lhs) != probe.matrix_of(rel.rhs)) {
      throw Error(ErrorCode::RelationViolation, "relation '" + rel.name + "' fails on V^(x)" + std::to_string(k));
    }
  }
  return Representation(r, strands);
}

/// trace(rho(w)) in Z_m by propagating each basis state through the letters.
inline std::uint32_t trace_invariant(const Representation& rep, const BraidWord& w) {
  if (w.strands() != rep.strands()) {
    throw Error(ErrorCode::StrandMismatch, "word has " + std::to_string(w.strands()) + " strands, representation " +
                                               std::to_string(rep.strands()));
  }
  std::uint64_t sum = 0;
  for (std::size_t s = 0; s < rep.dimension(); ++s) sum += rep.image_of_basis(w, s)[s];
  return static_cast<std::uint32_t>(sum % rep.modulus());
}

// ---------------------------------------------------------------------------
// Experiments

inline BraidWord random_word(Rng& rng, int strands, int max_length) {
  const int len = strands < 2 ? 0 : uniform_int(rng, 0, max_length);
  std::vector<Generator> letters;
  for (int k = 0; k < len; ++k) {
    const GenKind kind = uniform_below(rng, 2) ? GenKind::Virtual : GenKind::Flat;
    letters.push_back(Generator{kind, uniform_int(rng, 1, strands - 1)});
  }
  return BraidWord(strands, std::move(letters));
}

/// How trace_{n+1}(w X_n) relates to trace_n(w) across the samples.
struct StabilizationStats {
  int equal = 0;    // trace(w X_n) == trace(w)
  int doubled = 0;  // trace(w X_n) == 2 trace(w)
  /// Least c in Z_m with trace(w X_n) == c * trace(w) on every sample.
  std::optional<std::uint32_t> uniform_factor;
};

struct ExperimentReport {
  int trials = 0;
  int conjugation_holds = 0;
  std::vector<std::string> conjugation_failures;  // formatted (w, g) pairs
  StabilizationStats virtual_stabilization;
  StabilizationStats flat_stabilization;
};

/// Random conjugation checks (must always hold) and stabilization
/// observations (informative only) for a verified representation.
inline ExperimentReport invariance_experiments(const Representation& rep, int trials, std::uint64_t seed,
                                               int max_length = 12) {
  Rng rng(seed);
  const int n = rep.strands();
  const std::uint32_t m = rep.modulus();
  const Representation bigger = build_and_verify_rep(rep.r_matrix(), n + 1);

  ExperimentReport out;
  out.trials = trials;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> virt_samples, flat_samples;
  for (int t = 0; t < trials; ++t) {
    const BraidWord w = random_word(rng, n, max_length);
    const Generator g{uniform_below(rng, 2) ? GenKind::Virtual : GenKind::Flat, uniform_int(rng, 1, n - 1)};
    const BraidWord conj = compose(compose(BraidWord(n, {g}), w), BraidWord(n, {g}));
    const std::uint32_t base = trace_invariant(rep, w);
    if (trace_invariant(rep, conj) == base) {
      ++out.conjugation_holds;
    } else {
      out.conjugation_failures.push_back(format_braid_word(w) + " / " + format_generator(g));
    }
    const BraidWord lifted = include(w, n + 1);
    virt_samples.emplace_back(base, trace_invariant(bigger, compose(lifted, BraidWord(n + 1, {virt(n)}))));
    flat_samples.emplace_back(base, trace_invariant(bigger, compose(lifted, BraidWord(n + 1, {flat(n)}))));
  }

  auto summarize = [m](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& samples) {
    StabilizationStats s;
    for (auto [before, after] : samples) {
      s.equal += after == before;
      s.doubled += after == (2ull * before) % m;
    }
    for (std::uint64_t c = 0; c < m; ++c) {
      const bool fits = std::all_of(samples.begin(), samples.end(),
                                    [&](auto p) { return p.second == (c * p.first) % m; });
      if (fits) {
        s.uniform_factor = static_cast<std::uint32_t>(c);
        break;
      }
    }
    return s;
  };
  out.virtual_stabilization = summarize(virt_samples);
  out.flat_stabilization = summarize(flat_samples);
  return out;
}

/// A named, verified representation used as a trace invariant.
struct BatteryEntry {
  std::string name;
  Representation rep;
};

/// Eight-vertex solutions over Z_5 plus (4,3,3,4) over Z_12, each on
/// `strands` strands.
inline std::vector<BatteryEntry> default_trace_battery(int strands) {
  std::vector<BatteryEntry> out;
  auto add = [&](std::uint32_t m, EightVertex p) {
    std::string name = "trace[Z" + std::to_string(m) + ";" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                       std::to_string(p.c) + "," + std::to_string(p.d) + "]";
    out.push_back({std::move(name), build_and_verify_rep(RMatrix::eight_vertex(m, p.a, p.b, p.c, p.d), strands)});
  };
  for (const auto& p : solve_8vertex(5)) add(5, p);
  add(12, {4, 3, 3, 4});
  return out;
}

}  // namespace flk
