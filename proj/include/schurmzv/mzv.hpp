#ifndef SCHURMZV_MZV_HPP
#define SCHURMZV_MZV_HPP

#include <vector>

#include "schurmzv/words.hpp"

namespace schurmzv {

// Exact truncations zeta_M: all summation variables < M.  Values are exact
// rationals; zeta_M of the empty word is 1, and M <= 1 gives 0 for nonempty
// words.  No admissibility requirement.
Rat mzv_trunc(const Word& w, long long M);
// zeta_M for every M = 0..Mmax in one pass (index by M); cached per word
std::vector<Rat> mzv_trunc_prefix(const Word& w, int Mmax);
Rat mzv_trunc_combo(const WordCombo& c, long long M);

enum class BoundKind { exact, rigorous, heuristic };

struct EvalResult {
  double value = 0;
  double err = 0;            // |true - value| <= err (rigorous/exact) or estimate
  BoundKind kind = BoundKind::exact;
};

const char* bound_kind_name(BoundKind k);

// depth-1 zeta by Euler-Maclaurin, rigorous error bound
EvalResult riemann_zeta(int w);

// numeric MZV of an admissible word: direct summation ladder with either a
// rigorous integral tail bound or a log-polynomial tail fit whose error is
// estimated from fit residuals and rung-to-rung consistency.  Results are
// memoized per word with the best achieved bound.  budget = largest allowed
// summation cutoff N (0 means default_budget()).  Non-admissible nonempty
// words are a domain error.  If the budget is exhausted before err <= tol the
// best achieved result is returned (err reports the honest bound).
EvalResult mzv_numeric(const Word& w, double tol, long long budget = 0);

// linear extension to combos; tolerance apportioned by coefficient mass
EvalResult eval_combo(const WordCombo& c, double tol, long long budget = 0);

long long default_budget();  // SCHURMZV_MAX_N env override, else 10^7

}  // namespace schurmzv

#endif  // SCHURMZV_MZV_HPP
