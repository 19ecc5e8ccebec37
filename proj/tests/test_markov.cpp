#include <gtest/gtest.h>

#include <functional>

#include "flk/markov.hpp"
#include "oracles.hpp"

using namespace flk;

namespace {

BraidWord W(const char* text) { return parse_braid_word(text); }
GaussCode G(const char* text) { return parse_gauss_code(text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::EmptyInput;
}

LMoveSpec spec(LMoveFlavor f, std::size_t cut, int strand) { return LMoveSpec{cut, strand, f}; }

// A valid spec for the flavor on w, or nothing when the flavor cannot apply.
std::optional<LMoveSpec> random_spec(Rng& rng, const BraidWord& w, LMoveFlavor f) {
  const int n = w.strands();
  int lo = 1, hi = n;
  if (f == LMoveFlavor::ThreadedRight) hi = n - 1;
  if (f == LMoveFlavor::ThreadedLeft) lo = 2;
  if ((f == LMoveFlavor::ThreadedRight || f == LMoveFlavor::ThreadedLeft) && n < 2) return std::nullopt;
  if (lo > hi) return std::nullopt;
  return spec(f, uniform_below(rng, w.size() + 1), uniform_int(rng, lo, hi));
}

// Component words of the library closure, as flat-letter ordinals.
std::vector<std::vector<int>> closure_ordinals(const GaussCode& c) {
  std::vector<std::vector<int>> out;
  for (const auto& comp : c.components()) {
    std::vector<int> v;
    for (Label x : comp) v.push_back(std::stoi(c.label_name(x).substr(1)));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST(Closure, Examples) {
  EXPECT_EQ(format_gauss_code(closure(W("fB 2: s1 z1"))), "c0 | c0");
  EXPECT_EQ(format_gauss_code(closure(W("fB 1:"))), ".");
  EXPECT_EQ(format_gauss_code(closure(W("fB 3:"))), ". | . | .");
  EXPECT_EQ(format_gauss_code(closure(W("fB 2: s1"))), "c0 c0");
  EXPECT_EQ(canonical_form(closure(W("fB 2: s1 s1 s1"))), canonical_form(G("1 2 3 1 2 3")));
}

TEST(Closure, MatchesStrandWalkOracle) {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 6), 12);
    const GaussCode c = closure(w);
    EXPECT_EQ(closure_ordinals(c), oracle::closure_words(w)) << format_braid_word(w);
    EXPECT_EQ(static_cast<int>(c.component_count()), oracle::cycle_count(oracle::permutation(w)));
    EXPECT_EQ(c.crossing_count(), w.flat_count());
  }
}

TEST(Braiding, Examples) {
  EXPECT_EQ(braiding(G(".")), W("fB 1:"));
  EXPECT_EQ(braiding(G(". | .")), W("fB 2:"));
  const BraidWord kink = braiding(G("1 1"));
  EXPECT_EQ(kink.strands(), 2);
  EXPECT_EQ(canonical_form(closure(kink)), canonical_form(G("1 1")));
}

TEST(Braiding, ClosureRoundTrip) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const GaussCode c = oracle::random_code(rng, uniform_int(rng, 0, 6), uniform_int(rng, 1, 3));
    const BraidWord b = braiding(c);
    EXPECT_EQ(b.flat_count(), c.crossing_count());
    EXPECT_EQ(canonical_form(closure(b)), canonical_form(c)) << format_gauss_code(c) << " -> " << format_braid_word(b);
  }
}

TEST(LMove, Examples) {
  EXPECT_EQ(l_move(W("fB 1:"), spec(LMoveFlavor::RightVirtual, 0, 1)), W("fB 2: z1"));
  EXPECT_EQ(l_move(W("fB 1:"), spec(LMoveFlavor::RightFlat, 0, 1)), W("fB 2: s1"));
  EXPECT_EQ(l_move(W("fB 2: s1"), spec(LMoveFlavor::RightVirtual, 1, 1)), W("fB 3: s1 z1 z2 z1"));
  EXPECT_EQ(l_move(W("fB 2: s1"), spec(LMoveFlavor::RightVirtual, 1, 2)), W("fB 3: s1 z2"));
  EXPECT_EQ(l_move(W("fB 2:"), spec(LMoveFlavor::ThreadedRight, 0, 1)), W("fB 3: s1 z2 s1"));
  EXPECT_EQ(l_move(W("fB 2:"), spec(LMoveFlavor::ThreadedLeft, 0, 2)), W("fB 3: s2 z1 s2"));
  EXPECT_EQ(l_move(W("fB 2: s1"), spec(LMoveFlavor::LeftVirtual, 0, 1)), W("fB 3: z1 s2"));
  EXPECT_EQ(l_move(W("fB 2: s1"), spec(LMoveFlavor::LeftFlat, 1, 2)), W("fB 3: s2 z2 s1 z2"));
}

TEST(LMove, Errors) {
  EXPECT_EQ(code_of([] { l_move(W("fB 2: s1"), spec(LMoveFlavor::RightVirtual, 2, 1)); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { l_move(W("fB 2: s1"), spec(LMoveFlavor::RightVirtual, 0, 3)); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { l_move(W("fB 2: s1"), spec(LMoveFlavor::RightVirtual, 0, 0)); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { l_move(W("fB 1:"), spec(LMoveFlavor::ThreadedRight, 0, 1)); }),
            ErrorCode::ThreadRequiresTwoStrands);
  EXPECT_EQ(code_of([] { l_move(W("fB 2:"), spec(LMoveFlavor::ThreadedRight, 0, 2)); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { l_move(W("fB 2:"), spec(LMoveFlavor::ThreadedLeft, 0, 1)); }), ErrorCode::OutOfRange);
}

TEST(LMove, PreimagesRoundTrip) {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 4), 5);
    for (LMoveFlavor f : kMarkovFlavors) {
      const auto s = random_spec(rng, w, f);
      if (!s) continue;
      const BraidWord moved = l_move(w, *s);
      EXPECT_EQ(moved.strands(), w.strands() + 1);
      bool found = false;
      for (const auto& [ps, pre] : l_move_preimages(moved, {f})) {
        EXPECT_EQ(l_move(pre, ps), moved) << format_lmove_spec(ps);
        found = found || (ps == *s && pre == w);
      }
      EXPECT_TRUE(found) << format_braid_word(w) << " " << format_lmove_spec(*s);
    }
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(W("fB 3: s1"), flat(2)), W("fB 3: s2 s1 s2"));
  EXPECT_EQ(conjugate(W("fB 2:"), virt(1)), W("fB 2: z1 z1"));
  EXPECT_EQ(code_of([] { conjugate(W("fB 2:"), flat(2)); }), ErrorCode::IndexOutOfRange);
}

TEST(MarkovEquivalent, Examples) {
  const auto stab = markov_equivalent_bounded(W("fB 2: s1"), W("fB 3: s1 z2"));
  ASSERT_EQ(stab.verdict, Verdict::Equal);
  EXPECT_EQ(replay_markov(W("fB 2: s1"), stab.path), W("fB 3: s1 z2"));

  const auto flat_stab = markov_equivalent_bounded(W("fB 1:"), W("fB 2: s1"));
  ASSERT_EQ(flat_stab.verdict, Verdict::Equal);
  EXPECT_EQ(replay_markov(W("fB 1:"), flat_stab.path), W("fB 2: s1"));

  const auto conj = markov_equivalent_bounded(W("fB 3: s1 s2"), W("fB 3: s2 s1"));
  ASSERT_EQ(conj.verdict, Verdict::Equal);
  EXPECT_EQ(replay_markov(W("fB 3: s1 s2"), conj.path), W("fB 3: s2 s1"));
}

TEST(MarkovEquivalent, NeverDistinct) {
  const auto r = markov_equivalent_bounded(W("fB 2: s1 z1"), W("fB 1:"), SearchBudget{4, 3, 2000});
  EXPECT_EQ(r.verdict, Verdict::Unknown);
}

TEST(MarkovEquivalent, PathsReplayAndStepsCheck) {
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 3), 3);
    const auto f = kMarkovFlavors[uniform_below(rng, 4)];
    const auto s = random_spec(rng, w, f);
    if (!s) continue;
    const BraidWord v = l_move(w, *s);
    const auto r = markov_equivalent_bounded(w, v, SearchBudget{8, 4, 50000});
    ASSERT_NE(r.verdict, Verdict::Distinct);
    if (r.verdict != Verdict::Equal) continue;
    EXPECT_EQ(replay_markov(w, r.path), v);
    for (const auto& step : r.path) {
      EXPECT_TRUE(check_step(step)) << format_markov_step(step);
      EXPECT_TRUE(check_step(reverse_step(step))) << format_markov_step(step);
    }
  }
}

TEST(Soundness, Examples) {
  const auto end_stab =
      verify_move_soundness(W("fB 2: s1"), {MarkovMoveKind::LMove, {}, spec(LMoveFlavor::RightVirtual, 1, 2)});
  EXPECT_TRUE(end_stab.sound);
  EXPECT_TRUE(end_stab.path.empty());

  const auto thread =
      verify_move_soundness(W("fB 2:"), {MarkovMoveKind::LMove, {}, spec(LMoveFlavor::ThreadedRight, 0, 1)});
  EXPECT_TRUE(thread.sound);
  ASSERT_EQ(thread.path.size(), 1u);
  EXPECT_EQ(thread.path[0].kind, MoveKind::R2Minus);

  const auto conj = verify_move_soundness(W("fB 3: s1 s2"), {MarkovMoveKind::Conjugation, flat(2), {}});
  EXPECT_TRUE(conj.sound);
  EXPECT_EQ(conj.result, W("fB 3: s2 s1 s2 s2"));
  EXPECT_EQ(conj.after.crossing_count(), 4u);
  EXPECT_EQ(replay_moves(conj.after, conj.path), canonical_form(conj.before));
}

TEST(Soundness, PathsReplayOnClosures) {
  Rng rng(45);
  for (int t = 0; t < 40; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 3), 5);
    const auto f = kMarkovFlavors[uniform_below(rng, 4)];
    const auto s = random_spec(rng, w, f);
    if (!s) continue;
    const auto r = verify_move_soundness(w, {MarkovMoveKind::LMove, {}, *s});
    ASSERT_TRUE(r.sound) << format_braid_word(w) << " " << format_lmove_spec(*s);
    EXPECT_EQ(replay_moves(r.after, r.path), canonical_form(r.before));
  }
}

TEST(Soundness, LeftFlavorsAreSoundToo) {
  Rng rng(46);
  for (int t = 0; t < 30; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 3), 4);
    for (LMoveFlavor f : {LMoveFlavor::LeftVirtual, LMoveFlavor::LeftFlat}) {
      const auto s = random_spec(rng, w, f);
      EXPECT_TRUE(verify_move_soundness(w, {MarkovMoveKind::LMove, {}, *s}).sound)
          << format_braid_word(w) << " " << format_lmove_spec(*s);
    }
  }
}

TEST(Closure, DefiningRelationsGiveEquivalentClosures) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& rel : defining_relations(n)) {
      const auto r = equivalent_bounded(closure(rel.lhs), closure(rel.rhs), SearchBudget{6, 4, 20000});
      EXPECT_EQ(r.verdict, Verdict::Equal) << rel.name << " on " << n;
    }
}
