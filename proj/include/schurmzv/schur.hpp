#ifndef SCHURMZV_SCHUR_HPP
#define SCHURMZV_SCHUR_HPP

#include <vector>

#include "schurmzv/mzv.hpp"
#include "schurmzv/shapes.hpp"
#include "schurmzv/tableaux.hpp"
#include "schurmzv/words.hpp"

namespace schurmzv {

// Expansion of a tableau value zeta(t) into MZV words: classify summations
// by level sets (equivalently: sum over strict set decompositions, each
// block contributing the sum of its entries as a letter).
WordCombo schur_to_combo(const SkewShape& d, const Filling& t);

// The same truncated value computed from the defining sum over semistandard
// tableaux with entries < M (connected components factored, no use of the
// decomposition theory) — the independent cross-check of schur_to_combo.
Rat schur_trunc_direct(const SkewShape& d, const Filling& t, long long M);
// one sweep for many fillings, all cutoffs 0..Mmax at once
std::vector<std::vector<Rat>> schur_trunc_direct_batch(const SkewShape& d,
                                                       const std::vector<Filling>& ts,
                                                       int Mmax);

EvalResult schur_numeric(const SkewShape& d, const Filling& t, double tol);

// Multi-corner nested series indexed by per-corner row indices ll_i (possibly
// empty) and column indices kk_i (admissible: last entry >= 2): per block,
// b_{i,1} <= ... <= b_{i,s_i} <= a_{i,r_i}, a_{i,1} < ... < a_{i,r_i}, and
// blocks linked by b_{i+1,1} < a_{i,1} (with a_{i+1,r_{i+1}} standing in when
// block i+1 has no row part).
using IndexList = std::vector<int>;

struct MultiCornerIndex {
  std::vector<IndexList> ll;  // row parts, entries >= 1, lists may be empty
  std::vector<IndexList> kk;  // column parts, non-empty, last entries >= 2
};

WordCombo multicorner_to_combo(const std::vector<IndexList>& ll,
                               const std::vector<IndexList>& kk);
inline WordCombo multicorner_to_combo(const MultiCornerIndex& mc) {
  return multicorner_to_combo(mc.ll, mc.kk);
}
Rat multicorner_trunc(const std::vector<IndexList>& ll,
                      const std::vector<IndexList>& kk, long long M);
// nested-loop evaluation of the defining truncated sum (test oracle)
Rat multicorner_trunc_direct(const std::vector<IndexList>& ll,
                             const std::vector<IndexList>& kk, long long M);
EvalResult multicorner_numeric(const std::vector<IndexList>& ll,
                               const std::vector<IndexList>& kk, double tol);

// S_w of a ribbon spec: sum of the multi-corner series over all index tuples
// of total weight w (ll_i arbitrary >= 1 entries, kk_i admissible).  This
// agrees with the diagram sum iff s_i >= 1 for all i >= 2.
WordCombo sw_spec_combo(const RibbonSpec& sp, long long w);
Rat sw_spec_trunc(const RibbonSpec& sp, long long w, long long M);
EvalResult sw_spec_numeric(const RibbonSpec& sp, long long w, double tol);

// S_w of a diagram: sum of zeta(t) over admissible fillings of weight w
WordCombo sw_bruteforce_combo(const SkewShape& d, long long w);
EvalResult sw_bruteforce_numeric(const SkewShape& d, long long w, double tol);

}  // namespace schurmzv

#endif  // SCHURMZV_SCHUR_HPP
