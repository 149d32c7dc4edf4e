#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subword/word.hpp"

namespace subword {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

/// Number of acceptance criteria; ids run from 1.
int criterion_count();

/// Runs one criterion against its brute-force oracle. Quick mode shrinks every sweep.
CriterionResult run_criterion(int id, bool quick);

/// Sweeps the zeta or Mobius automaton for d against the oracle, for all |w| <= max_len.
CriterionResult automaton_check(bool mobius_kind, RestrictionParam d, std::size_t max_len);

/// "PASS <id> <title>: <detail>" or "FAIL ...".
std::string format_result(const CriterionResult& r);

/// Runs every criterion, writing one line each as it finishes. True iff all pass.
bool run_acceptance(bool quick, std::ostream& out);

} // namespace subword
