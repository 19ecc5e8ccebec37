#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flk/budget.hpp"

namespace flk {

enum class Verdict { Equal, Distinct, Unknown };

constexpr const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal: return "EQUAL";
    case Verdict::Distinct: return "DISTINCT";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

/// A separating invariant: its name and the two differing values.
struct Witness {
  std::string invariant;
  std::string left;
  std::string right;
};

/// Three-valued outcome of a bounded equivalence check. Equal carries a
/// replayable path of Step records, Distinct a witness, Unknown only the
/// budget report.
template <typename Step>
struct EqResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<Step> path;
  Witness witness;
  BudgetSpent spent;

  static EqResult equal(std::vector<Step> path, BudgetSpent spent) {
    EqResult r;
    r.verdict = Verdict::Equal;
    r.path = std::move(path);
    r.spent = spent;
    return r;
  }
  static EqResult distinct(Witness w, BudgetSpent spent = {}) {
    EqResult r;
    r.verdict = Verdict::Distinct;
    r.witness = std::move(w);
    r.spent = spent;
    return r;
  }
  static EqResult unknown(BudgetSpent spent) {
    EqResult r;
    r.spent = spent;
    return r;
  }
};

}  // namespace flk
