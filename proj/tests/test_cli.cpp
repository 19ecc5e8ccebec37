#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>

#include "flk/cli.hpp"
#include "flk/flk.hpp"

using namespace flk;
using flk::cli::Json;
using flk::cli::run;

namespace {

cli::CommandOutcome R(std::vector<std::string> args) { return run(args); }

Json J(std::vector<std::string> args) {
  args.push_back("--json");
  const auto out = run(args);
  EXPECT_EQ(out.exit_code, 0) << out.payload;
  return Json::parse(out.payload);
}

// Restores FLK_MAX_STATES when the test ends.
class EnvGuard {
 public:
  EnvGuard() {
    if (const char* v = std::getenv("FLK_MAX_STATES")) saved_ = v;
  }
  ~EnvGuard() {
    if (saved_) {
      setenv("FLK_MAX_STATES", saved_->c_str(), 1);
    } else {
      unsetenv("FLK_MAX_STATES");
    }
  }

 private:
  std::optional<std::string> saved_;
};

std::pair<int, std::string> shell(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, BraidCommands) {
  EXPECT_EQ(R({"braid", "simplify", "--braid", "fB 2: z1 s1 z1"}).payload, "fB 2: s1\n");
  EXPECT_EQ(R({"braid", "perm", "--braid", "fB 2: s1"}).payload, "(1 2)\n");
  const auto eq = R({"braid", "eq", "--a", "fB 3: s1 s2 s1", "--b", "fB 3: s2 s1 s2"});
  EXPECT_EQ(eq.exit_code, 0);
  EXPECT_EQ(eq.payload.rfind("EQUAL  path: ", 0), 0u) << eq.payload;
  const auto ne = R({"braid", "eq", "--a", "fB 2: s1", "--b", "fB 2: z1"});
  EXPECT_EQ(ne.payload, "DISTINCT  witness: parity_vector (1,0) vs (0,1)\n");
}

TEST(Cli, LinkCommands) {
  EXPECT_EQ(R({"link", "canon", "--code", "y x y x"}).payload, "1 2 1 2\n");
  const auto eq = R({"link", "eq", "--a", "1 2 1 2", "--b", ".", "--max-depth", "4"});
  EXPECT_EQ(eq.exit_code, 0);
  EXPECT_EQ(eq.payload, "EQUAL  path: R2-(0:0,0:2)\n");
  const auto unk = R({"link", "eq", "--a", "x | x", "--b", ". | ."});
  EXPECT_EQ(unk.exit_code, 0);
  EXPECT_EQ(unk.payload.rfind("UNKNOWN", 0), 0u);
  EXPECT_EQ(R({"link", "reduce", "--code", "1 1 2 2"}).payload.rfind(".  path: R1-", 0), 0u);
  EXPECT_EQ(R({"link", "moves", "--code", ".", "--kinds", "R1-,R2-,R3"}).payload, "(no moves)\n");
}

TEST(Cli, MarkovCommands) {
  EXPECT_EQ(R({"markov", "close", "--braid", "fB 2: s1 z1"}).payload, "c0 | c0\n");
  EXPECT_EQ(R({"markov", "lmove", "--braid", "fB 1:", "--flavor", "right-flat"}).payload, "fB 2: s1\n");
  EXPECT_EQ(R({"markov", "conj", "--braid", "fB 2:", "--gen", "z1"}).payload, "fB 2: z1 z1  normalized: fB 2:\n");
  const auto chk = R({"markov", "check-move", "--braid", "fB 2:", "--flavor", "threaded-right", "--strand", "1"});
  EXPECT_EQ(chk.payload.rfind("SOUND", 0), 0u) << chk.payload;
  const auto eq = R({"markov", "eq", "--a", "fB 2: s1", "--b", "fB 3: s1 z2"});
  EXPECT_EQ(eq.payload.rfind("EQUAL", 0), 0u) << eq.payload;
}

TEST(Cli, YangBaxterCommands) {
  const auto five = R({"yb", "solve", "--mod", "5"});
  EXPECT_EQ(five.exit_code, 0);
  EXPECT_EQ(std::count(five.payload.begin(), five.payload.end(), '\n'), 10);
  EXPECT_NE(R({"yb", "solve", "--mod", "12"}).payload.find(" 4  3  3  4\n"), std::string::npos);
  EXPECT_EQ(R({"yb", "check", "--mod", "12", "--abcd", "4,3,3,4"}).payload, "ybe:        yes\nsymmetry:   yes\ninvolution: yes\n");
  EXPECT_EQ(R({"yb", "check", "--mod", "12", "4", "3", "3", "4"}).payload, "ybe:        yes\nsymmetry:   yes\ninvolution: yes\n");
  EXPECT_EQ(R({"yb", "trace", "--mod", "12", "--r", "4,3,3,4", "--braid", "fB 2: s1"}).payload, "2\n");
  EXPECT_EQ(R({"yb", "report", "--mod", "5", "--abcd", "1,1,1,1"}).payload.rfind("direct check: no", 0), 0u);
  const auto exp = R({"yb", "experiment", "--mod", "7", "--abcd", "1,0,0,1", "--trials", "50"});
  EXPECT_EQ(exp.payload.rfind("conjugation:            50/50", 0), 0u) << exp.payload;
}

TEST(Cli, JsonSchema) {
  const Json eq = J({"link", "eq", "--a", "1 2 1 2", "--b", "."});
  EXPECT_EQ(eq["command"], "link eq");
  EXPECT_EQ(eq["inputs"]["a"], "1 2 1 2");
  EXPECT_EQ(eq["verdict"], "EQUAL");
  ASSERT_TRUE(eq["path"].is_array());
  EXPECT_FALSE(eq["path"].empty());
  EXPECT_TRUE(eq.contains("budget_spent"));

  const Json ne = J({"braid", "eq", "--a", "fB 2: s1", "--b", "fB 2: z1"});
  EXPECT_EQ(ne["verdict"], "DISTINCT");
  EXPECT_EQ(ne["witness"]["invariant"], "parity_vector");

  const Json sols = J({"yb", "solve", "--mod", "7"});
  ASSERT_TRUE(sols["solutions"].is_array());
  std::vector<std::vector<int>> rows = sols["solutions"].get<std::vector<std::vector<int>>>();
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
  EXPECT_TRUE(sols.contains("budget_spent"));

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"braid", "perm", "--braid", "fB 3: s1 z2"},
           {"markov", "close", "--braid", "fB 2: s1 z1"},
           {"yb", "check", "--mod", "5", "--abcd", "1,0,0,1"},
           {"link", "moves", "--code", "1 1"}})
    EXPECT_TRUE(J(args).contains("budget_spent"));
}

TEST(Cli, EmittedPathsReplay) {
  const Json link = J({"link", "eq", "--a", "1 1 2 3 2 3", "--b", "."});
  ASSERT_EQ(link["verdict"], "EQUAL");
  GaussCode c = canonical_form(parse_gauss_code("1 1 2 3 2 3"));
  for (const auto& step : link["path"]) {
    MoveApplication m;
    const std::string kind = step["kind"];
    for (MoveKind k : all_move_kinds())
      if (kind == move_kind_name(k)) m.kind = k;
    for (const auto& s : step["slots"]) m.slots.push_back({s[0].get<int>(), s[1].get<int>()});
    m.fresh = step["fresh"].get<std::vector<Label>>();
    if (step.contains("pattern"))
      m.pattern = step["pattern"] == "parallel" ? R2Pattern::Parallel : R2Pattern::Antiparallel;
    c = canonical_form(apply_move(c, m));
  }
  EXPECT_EQ(format_gauss_code(c), ".");

  const Json braid = J({"braid", "eq", "--a", "fB 3: s1 s2 s1", "--b", "fB 3: s2 s1 s2"});
  ASSERT_EQ(braid["verdict"], "EQUAL");
  BraidWord w = parse_braid_word("fB 3: s1 s2 s1");
  for (const auto& step : braid["path"]) {
    const std::string rule = step["rule"];
    const std::size_t pos = step["position"];
    // Apply by matching the recorded before/after letters.
    auto letters_of = [](const Json& arr) {
      std::string text = "fB 3:";
      for (const auto& g : arr) text += " " + g.get<std::string>();
      return parse_braid_word(text);
    };
    const BraidWord from = letters_of(step["from"]), to = letters_of(step["to"]);
    std::vector<Generator> letters(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
    ASSERT_TRUE(std::equal(from.letters().begin(), from.letters().end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos)))
        << rule;
    letters.insert(letters.end(), to.letters().begin(), to.letters().end());
    letters.insert(letters.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos + from.size()), w.letters().end());
    w = BraidWord(3, letters);
  }
  EXPECT_EQ(w, parse_braid_word("fB 3: s2 s1 s2"));
}

TEST(Cli, ErrorsAndExitCodes) {
  const auto bad = R({"braid", "perm", "--braid", "fB 3: s1 sx"});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.payload.find("'sx' at position 9"), std::string::npos) << bad.payload;
  EXPECT_EQ(R({"link", "canon", "--code", "x y x"}).exit_code, 2);
  EXPECT_EQ(R({"nonsense"}).exit_code, 2);
  EXPECT_EQ(R({}).exit_code, 2);
  EXPECT_EQ(R({"link", "eq", "--a", "1 1"}).exit_code, 2);
  EXPECT_EQ(R({"link", "eq", "--a", "1 1", "--b", ".", "--max-states", "0"}).exit_code, 2);
  EXPECT_EQ(R({"markov", "lmove", "--braid", "fB 2:", "--flavor", "sideways"}).exit_code, 2);
  EXPECT_EQ(R({"yb", "solve", "--mod", "3", "--full"}).exit_code, 3);
  EXPECT_EQ(R({"yb", "solve", "--mod", "2", "--full"}).exit_code, 0);
  EXPECT_EQ(R({"yb", "trace", "--mod", "5", "--abcd", "1,1,1,1", "--braid", "fB 2: s1"}).exit_code, 2);
  EXPECT_EQ(R({"--help"}).exit_code, 0);
}

TEST(Cli, VerdictsAreNotErrors) {
  const auto r = R({"link", "eq", "--a", "1 2 3 1 2 3", "--b", ".", "--max-states", "2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload.rfind("UNKNOWN", 0), 0u);
  EXPECT_NE(r.payload.find("budget exhausted"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"yb", "experiment", "--mod", "12", "--abcd", "4,3,3,4", "--seed", "9", "--json"},
           {"link", "eq", "--a", "1 2 3 1 2 3", "--b", "1 1", "--json"},
           {"markov", "eq", "--a", "fB 3: s1 s2", "--b", "fB 3: s2 s1", "--json"}}) {
    EXPECT_EQ(R(args).payload, R(args).payload);
  }
  EXPECT_NE(R({"yb", "experiment", "--mod", "12", "--abcd", "4,3,3,4", "--seed", "9", "--json"}).payload,
            R({"yb", "experiment", "--mod", "12", "--abcd", "4,3,3,4", "--seed", "9", "--json", "--trials", "3"}).payload);
}

TEST(Cli, EnvBudgetAndFlagPrecedence) {
  EnvGuard guard;
  const std::vector<std::string> args{"link", "eq", "--a", "1 2 3 1 2 3", "--b", ".", "--json"};
  setenv("FLK_MAX_STATES", "2", 1);
  const Json capped = J(args);
  EXPECT_EQ(capped["verdict"], "UNKNOWN");
  EXPECT_LE(capped["budget_spent"]["states"].get<long>(), 4);

  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--max-states", "100000"});
  EXPECT_EQ(J(with_flag)["verdict"], "EQUAL");

  setenv("FLK_MAX_STATES", "many", 1);
  EXPECT_EQ(R(args).exit_code, 2);
  unsetenv("FLK_MAX_STATES");
  EXPECT_EQ(J(args)["verdict"], "EQUAL");
}

TEST(Cli, Binary) {
  const std::string bin = FLK_CLI_PATH;
  const auto ok = shell("'" + bin + "' markov close --braid 'fB 2: s1 z1'");
  EXPECT_EQ(ok.first, 0);
  EXPECT_EQ(ok.second, "c0 | c0\n");
  EXPECT_EQ(shell("'" + bin + "' braid perm --braid 'fB 2: s3'").first, 2);
  EXPECT_EQ(shell("'" + bin + "' yb solve --mod 3 --full").first, 3);
  const auto env = shell("FLK_MAX_STATES=2 '" + bin + "' link eq --a '1 2 3 1 2 3' --b .");
  EXPECT_EQ(env.first, 0);
  EXPECT_EQ(env.second.rfind("UNKNOWN", 0), 0u) << env.second;
}
