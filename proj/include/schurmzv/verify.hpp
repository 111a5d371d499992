#ifndef SCHURMZV_VERIFY_HPP
#define SCHURMZV_VERIFY_HPP

#include <string>
#include <vector>

#include "schurmzv/mzv.hpp"

namespace schurmzv {

// Outcome of one numeric identity check.  passed means
// |lhs - rhs| <= lhs.err + rhs.err + tol, i.e. the two sides agree up to
// their own error bounds plus the caller's slack.
struct FormulaReport {
  EvalResult lhs;
  EvalResult rhs;
  double abs_diff = 0;
  bool passed = false;
  std::string params;  // echo of the inputs checked
};

FormulaReport make_report(const EvalResult& lhs, const EvalResult& rhs,
                          double tol, std::string params);

// ---- theorem checker registry ----

// Optional overrides for a checker run; zero/empty/-1 fields fall back to
// the per-checker defaults (weight ranges [threshold, threshold+3] and
// tolerance 1e-6, except stair at 1e-5).
struct VerifyOptions {
  std::string shape;                // shape-based checkers
  std::vector<int> s_list, r_list;  // scalar checkers read element 0
  int i = -1;                       // split position (corner splitting)
  int n = -1;                       // stair block count
  long long w_lo = 0, w_hi = 0;
  double tol = 0;
  long long M = 15;  // truncation level for the exact splitting check
};

// ids: mzv-sum, mzsv-sum, anti-hook, stair, s00, inductive, two-corner,
// hook, one-corner, sw-rel, symmetric, square-22, examples-41
const std::vector<std::string>& verify_ids();

// Run one registered checker; throws parse_error on an unknown id and
// domain_error on unusable overrides.  Case order is deterministic.
std::vector<FormulaReport> run_verify(const std::string& id,
                                      const VerifyOptions& opt);

// Every checker with default parameters on a small worker pool.  Results
// come back in registry order regardless of scheduling; ids not started
// before the budget ran out are listed in skipped.
struct VerifySuiteResult {
  std::vector<std::pair<std::string, std::vector<FormulaReport>>> results;
  std::vector<std::string> skipped;
};
VerifySuiteResult run_verify_all(const VerifyOptions& opt, int jobs,
                                 double budget_seconds);

}  // namespace schurmzv

#endif  // SCHURMZV_VERIFY_HPP
