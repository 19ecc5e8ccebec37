#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "flk/braid.hpp"
#include "flk/braid_equality.hpp"
#include "flk/yangbaxter.hpp"
#include "oracles.hpp"

using namespace flk;

namespace {

BraidWord W(const char* text) { return parse_braid_word(text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::EmptyInput;
}

}  // namespace

TEST(BraidParse, Examples) {
  const BraidWord w = W("fB 3: s1 z2 s1");
  EXPECT_EQ(w.strands(), 3);
  EXPECT_EQ(w.letters(), (std::vector<Generator>{flat(1), virt(2), flat(1)}));
  EXPECT_TRUE(W("fB 2:").empty());
  EXPECT_EQ(W("fB 2:").strands(), 2);
  EXPECT_EQ(code_of([] { W("fB 2: s2"); }), ErrorCode::IndexOutOfRange);
}

TEST(BraidParse, Errors) {
  EXPECT_EQ(code_of([] { W("fB 0:"); }), ErrorCode::NonPositiveStrands);
  EXPECT_EQ(code_of([] { W("fB -2:"); }), ErrorCode::NonPositiveStrands);
  EXPECT_EQ(code_of([] { W("fB 3: s0"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { W("fB 3: x1"); }), ErrorCode::MalformedToken);
  EXPECT_EQ(code_of([] { W("fB 3 s1"); }), ErrorCode::MalformedToken);
  EXPECT_EQ(code_of([] { W("B 3: s1"); }), ErrorCode::MalformedToken);
  EXPECT_EQ(code_of([] { W(""); }), ErrorCode::MalformedToken);
  try {
    W("fB 3: s1 sx");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'sx' at position 9"), std::string::npos) << e.what();
  }
}

TEST(BraidParse, FormatRoundTrip) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 6), 10);
    EXPECT_EQ(parse_braid_word(format_braid_word(w)), w);
  }
  EXPECT_EQ(format_braid_word(W("fB 3 : s1  z2")), "fB 3: s1 z2");
}

TEST(BraidGroup, ComposeInvert) {
  EXPECT_EQ(invert(W("fB 3: s1 z2")), W("fB 3: z2 s1"));
  EXPECT_EQ(compose(W("fB 2: s1"), W("fB 2: s1")), W("fB 2: s1 s1"));
  EXPECT_TRUE(normalize(compose(W("fB 2: s1"), W("fB 2: s1"))).empty());
  EXPECT_TRUE(invert(W("fB 2:")).empty());
  EXPECT_EQ(code_of([] { compose(W("fB 2: s1"), W("fB 3: s1")); }), ErrorCode::StrandMismatch);

  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 1, 5), 12);
    EXPECT_EQ(invert(invert(w)), w);
    EXPECT_TRUE(normalize(compose(w, invert(w))).empty()) << format_braid_word(w);
  }
}

TEST(StrandPermutation, Examples) {
  EXPECT_EQ(format_permutation(strand_permutation(W("fB 2: s1"))), "(1 2)");
  EXPECT_TRUE(strand_permutation(W("fB 2: s1 z1")).is_identity());
  const Permutation p = strand_permutation(W("fB 3: s1 z2"));
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p(3), 2);
  EXPECT_EQ(p(2), 1);
}

TEST(StrandPermutation, MatchesOracleAndIsHomomorphism) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform_int(rng, 1, 6);
    const BraidWord u = random_word(rng, n, 10), v = random_word(rng, n, 10);
    EXPECT_EQ(strand_permutation(u).images(), oracle::permutation(u));
    EXPECT_EQ(strand_permutation(compose(u, v)), strand_permutation(u).then(strand_permutation(v)));
  }
}

TEST(PermutationToVirtualWord, Examples) {
  EXPECT_TRUE(permutation_to_virtual_word(Permutation::identity(3)).empty());
  EXPECT_EQ(permutation_to_virtual_word(Permutation({2, 1})), W("fB 2: z1"));
  EXPECT_EQ(permutation_to_virtual_word(Permutation({2, 3, 1})), W("fB 3: z2 z1"));
}

TEST(PermutationToVirtualWord, RealisesEveryPermutation) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      const Permutation p(images);
      const BraidWord w = permutation_to_virtual_word(p);
      EXPECT_EQ(strand_permutation(w), p);
      EXPECT_LE(static_cast<int>(w.size()), n * (n - 1) / 2);
      EXPECT_EQ(w.flat_count(), 0u);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(Normalize, Examples) {
  EXPECT_TRUE(normalize(W("fB 2: s1 s1")).empty());
  EXPECT_EQ(normalize(W("fB 2: z1 s1 z1")), W("fB 2: s1"));
  EXPECT_EQ(normalize(W("fB 4: s3 s1")), W("fB 4: s1 s3"));
}

TEST(Normalize, TraceReplaysAndPreservesInvariants) {
  Rng rng(14);
  const auto battery = default_trace_battery(4);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform_int(rng, 1, 5);
    const BraidWord w = random_word(rng, n, 12);
    const auto [nf, trace] = normalize_traced(w);
    EXPECT_EQ(replay(w, trace), nf);
    EXPECT_LE(nf.size(), w.size());
    EXPECT_EQ(normalize(nf), nf);
    EXPECT_EQ(strand_permutation(nf), strand_permutation(w));
    EXPECT_EQ(parity_vector(nf), parity_vector(w));
    if (n == 4)
      for (const auto& e : battery) EXPECT_EQ(trace_invariant(e.rep, nf), trace_invariant(e.rep, w)) << e.name;
  }
}

TEST(Relations, ParityConstantOnEveryInstance) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& rel : defining_relations(n)) {
      EXPECT_EQ(parity_vector(rel.lhs), parity_vector(rel.rhs)) << rel.name;
      EXPECT_EQ(strand_permutation(rel.lhs), strand_permutation(rel.rhs)) << rel.name;
    }
}

TEST(Relations, EnumeratedRewritesAreInvertibleRelationInstances) {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 2, 4), 6);
    for (const auto& r : enumerate_rewrites(w, w.size() + 2)) {
      ASSERT_TRUE(is_relation_instance(r));
      const BraidWord x = apply_rewrite(w, r);
      EXPECT_EQ(apply_rewrite(x, inverse(r)), w);
      EXPECT_EQ(parity_vector(x), parity_vector(w));
    }
  }
  EXPECT_EQ(code_of([] { apply_rewrite(W("fB 2: s1"), Rewrite{Rule::Cancel, 0, {flat(1), flat(1)}, {}}); }),
            ErrorCode::InvalidMove);
}

TEST(WordsEqualBounded, Examples) {
  const auto r1 = words_equal_bounded(W("fB 3: s1 s2 s1"), W("fB 3: s2 s1 s2"));
  EXPECT_EQ(r1.verdict, Verdict::Equal);
  EXPECT_EQ(replay(W("fB 3: s1 s2 s1"), r1.path), W("fB 3: s2 s1 s2"));

  const auto r2 = words_equal_bounded(W("fB 2: s1"), W("fB 2: z1"));
  EXPECT_EQ(r2.verdict, Verdict::Distinct);
  EXPECT_EQ(r2.witness.invariant, "parity_vector");
  EXPECT_EQ(r2.witness.left, "(1,0)");
  EXPECT_EQ(r2.witness.right, "(0,1)");

  const auto r3 = words_equal_bounded(W("fB 2: s1 z1"), W("fB 2: z1 s1"));
  EXPECT_EQ(r3.verdict, Verdict::Equal);
  EXPECT_EQ(replay(W("fB 2: s1 z1"), r3.path), W("fB 2: z1 s1"));
}

TEST(WordsEqualBounded, DerivedRelationNeedsLongerWords) {
  // z1 s2 z1 = z2 s1 z2 follows from the mixed relation only through
  // intermediate words longer than either side.
  const auto r = words_equal_bounded(W("fB 3: z1 s2 z1"), W("fB 3: z2 s1 z2"));
  ASSERT_EQ(r.verdict, Verdict::Equal);
  EXPECT_EQ(replay(W("fB 3: z1 s2 z1"), r.path), W("fB 3: z2 s1 z2"));
}

TEST(WordsEqualBounded, PermutationWitness) {
  const auto r = words_equal_bounded(W("fB 3: s1"), W("fB 3: s2"));
  EXPECT_EQ(r.verdict, Verdict::Distinct);
  EXPECT_EQ(r.witness.invariant, "strand_permutation");
}

TEST(WordsEqualBounded, ConsistentOnRandomPairs) {
  Rng rng(16);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform_int(rng, 2, 4);
    const BraidWord u = random_word(rng, n, 5);
    // v is u moved by a few random relation steps, or an unrelated word.
    BraidWord v = u;
    if (t % 2 == 0) {
      for (int k = 0; k < 3; ++k) {
        const auto rs = enumerate_rewrites(v, v.size() + 2);
        if (rs.empty()) break;
        v = apply_rewrite(v, rs[uniform_below(rng, rs.size())]);
      }
    } else {
      v = random_word(rng, n, 5);
    }
    const auto r = words_equal_bounded(u, v, SearchBudget{9, 6, 20000});
    if (r.verdict == Verdict::Equal) {
      EXPECT_EQ(replay(u, r.path), v);
      EXPECT_FALSE(separating_invariant(u, v, nullptr).has_value());
    }
    if (t % 2 == 0) EXPECT_NE(r.verdict, Verdict::Distinct);
  }
}

TEST(WordsEqualBounded, RejectsBadInput) {
  EXPECT_EQ(code_of([] { words_equal_bounded(W("fB 2:"), W("fB 3:")); }), ErrorCode::StrandMismatch);
  EXPECT_EQ(code_of([] { words_equal_bounded(W("fB 2:"), W("fB 2:"), SearchBudget{0, 1, 1}); }),
            ErrorCode::InvalidBudget);
}
