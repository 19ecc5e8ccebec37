#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

#include "flk/error.hpp"

namespace flk {

/// Caps shared by every semi-decision procedure. For diagram searches
/// max_crossings bounds the crossing count of visited diagrams; for braid
/// word searches it bounds the word length.
struct SearchBudget {
  int max_crossings = 8;
  int max_depth = 10;
  long max_states = 1'000'000;

  void validate() const {
    if (max_crossings <= 0 || max_depth <= 0 || max_states <= 0) {
      throw Error(ErrorCode::InvalidBudget, "budget fields must be positive");
    }
  }

  /// max_crossings = input + 4, max_depth = 10, max_states = 10^6.
  static SearchBudget defaults_for(int input_size) {
    return SearchBudget{std::max(input_size, 0) + 4, 10, 1'000'000};
  }
};

/// How much of a budget a search consumed.
struct BudgetSpent {
  long states = 0;
  int depth = 0;
  bool exhausted = false;  // true when a cap stopped the search early
};

}  // namespace flk
