#ifndef SCHURMZV_WEIGHTED_HPP
#define SCHURMZV_WEIGHTED_HPP

#include <vector>

#include "schurmzv/schur.hpp"
#include "schurmzv/words.hpp"

namespace schurmzv {

// Binomial-weighted zeta sums
//   P_l(n;k) = sum_{w admissible, w_i >= n_i, wt(w) = wt(k)+l}
//              prod_i C(w_i - n_i, k_i - 1) * zeta(w),
// kept as formal word combos until evaluation.
struct WeightedSumSpec {
  std::vector<int> n;  // per-position lower bounds
  std::vector<int> k;  // binomial parameters
  int l = 0;
};

WordCombo P_def(const WeightedSumSpec& s);

WordCombo P_std(const std::vector<int>& k, int l);  // n = (1,...,1)
WordCombo Q_std(const std::vector<int>& k, int l);  // n = (1,...,1,2), d >= 1

// Q_l(k) = sum_{j=0}^{k_d-1} (-1)^j P_{l+j}(k_1,...,k_{d-1},k_d-j).  Agrees
// with Q_std coefficient by coefficient (the alternating-sum expansion of
// C(w-2,k-1) in terms of C(w-1,*)).
WordCombo Q_via_P(const std::vector<int>& k, int l);

// linear extension of Q_std over a combo's words; the empty word contributes
// its coefficient when l = 0 and nothing otherwise
WordCombo Q_on_combo(const WordCombo& c, int l);

// A formal sum of products of zeta words and corner-series atoms: the shape
// the closed expressions below take before flattening.  Flattening expands
// corner atoms through their decomposition combos first, then resolves the
// products with the harmonic product.
struct MixedTerm {
  Rat coeff;
  std::vector<Word> zetas;
  std::vector<MultiCornerIndex> corners;
};
struct MixedCombo {
  std::vector<MixedTerm> terms;
};
void mixed_add(MixedCombo& m, const Rat& coeff, std::vector<Word> zetas,
               std::vector<MultiCornerIndex> corners = {});
WordCombo mixed_flatten(const MixedCombo& m);

// Depth-reduction recursion, admissible case (k_d >= 2, d >= 2, l > 0): the
// right side evaluated once with the sub-sums expanded by P_def.  This is an
// identity of values, not of formal combos, so callers compare numerically.
WordCombo P_recursive_admissible(const std::vector<int>& k, int l);
// non-admissible case (k_d = 1, d >= 2, l > 0); the correction terms carry
// anti-hook series, and the bound b_0 >= l+1 (below which the binomial
// C(b_0-1,l) vanishes) keeps the term count independent of l
MixedCombo P_recursive_nonadmissible(const std::vector<int>& k, int l);

// closed expressions at depth 2 and 3, valid for any k_i >= 1 and l > 0
MixedCombo P_closed_depth2(int k1, int k2, int l);
MixedCombo P_closed_depth3(int k1, int k2, int k3, int l);

// Coefficient of zeta(w) in sum_{wt(k)=k_total, dep(k)=|n|} P_{w-k_total}(n;k),
// i.e. C(w - wt(n), k_total - d).  The collapse to a single zeta rests on the
// classical sum formula, so it holds for n = (1,...,1) and (1,...,1,2); the
// companion _combo below returns the left side literally for cross-checks.
Rat sum_P_fixed_weight_depth(const std::vector<int>& n, long long k_total,
                             long long w);
WordCombo sum_P_fixed_weight_depth_combo(const std::vector<int>& n,
                                         long long k_total, long long w);

}  // namespace schurmzv

#endif  // SCHURMZV_WEIGHTED_HPP
