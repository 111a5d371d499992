#ifndef SCHURMZV_FORMULAS_HPP
#define SCHURMZV_FORMULAS_HPP

#include <vector>

#include "schurmzv/schur.hpp"
#include "schurmzv/shapes.hpp"
#include "schurmzv/verify.hpp"
#include "schurmzv/weighted.hpp"
#include "schurmzv/words.hpp"

namespace schurmzv {

// A rational multiple of a single zeta value.
struct ZetaMultiple {
  Rat coeff;
  long long w = 0;
  WordCombo to_combo() const;
};

// minimal weight carrying a nonzero sum: |cells| + #corners, block by block
long long spec_min_weight(const RibbonSpec& sp);

// S_w of the anti-hook [s\r] = ((s+1)^r)/(s^{r-1}): C(w-1,s) zeta(w).
// Requires s >= 0, r >= 1, w >= s+r+1.
ZetaMultiple anti_hook_formula(int s, int r, long long w);

// S_w of the stair of tread one, n column runs of height r except the last
// of height r+1: c * zeta(w) with c = (w-1)/n * C(w-(r+1)n-2, n-1).
// Requires r, n >= 1 and w >= (r+2)n+1.
ZetaMultiple stair_formula(int r, int n, long long w);
// the same coefficient as the visibly integral sum
// (r+1) C(w-(r+1)n-2, n-1) + C(w-(r+1)n-1, n)
Rat stair_coeff_integral(int r, int n, long long w);
RibbonSpec stair_spec(int r, int n);

// S_w[s,0,...,0 \ r_1,...,r_n] as depth-n words:
//   sum_{t_1+...+t_n = s} sum_{w_i >= r_i+t_i+1, sum w_i = w}
//     prod_i C(w_i-1, t_i) * (w_1,...,w_n).
// Zero combo below the minimal weight.
WordCombo s00_formula(int s, const std::vector<int>& r, long long w);

// S_w of an arbitrary ribbon spec as depth <= n words: peel at the leftmost
// block with a nonzero row run via the corner-splitting identity until every
// summand is in s00 form.  Memoized; accepts any s_i >= 0, r_i >= 1 (the
// series sense).
WordCombo ribbon_sw_combo(const RibbonSpec& sp, long long w);

// The corner-splitting identity at block i (1-based, 1 <= i <= n-1, needs
// r_i >= 2):
//   S_w[s;r] + S_w[s+e_{i+1}; r-e_i]
//     = sum_{w1+w2=w} S_{w1}[blocks 1..i] S_{w2}[blocks i+1..n].
// Checked exactly in rationals at truncation level M (the index split is
// term-by-term) and numerically in the limit; passed requires both.
FormulaReport inductive_reduction_check(const RibbonSpec& sp, int i,
                                        long long w, long long M = 15,
                                        double tol = 1e-6);

// Two-corner ribbon [s1,s2\r1,r2], both requiring w >= s1+s2+r1+r2+2.
// The intermediate expression: an alternating band of zeta(w1)zeta(w2)
// products plus a binomial-weighted band of depth-2 words.
MixedCombo two_corner_prelim(int s1, int s2, int r1, int r2, long long w);
// The closed form C(w-2,s1+s2) zeta(w) + sum A zeta(w1)zeta(w2)
// + sum B zeta(w1,w2); A and B vanish outside w1 <= s1+s2+r1 or
// w2 <= max(s2+r2-1, s1+r2), so the term count is w-independent.
MixedCombo two_corner_formula(int s1, int s2, int r1, int r2, long long w);
Rat two_corner_A(int s1, int s2, int r1, int r2, long long w1, long long w2);
Rat two_corner_B(int s1, int s2, int r1, int r2, long long w1, long long w2);
Rat two_corner_C(int s1, int s2, long long w1, long long w2);

// S_w of the hook (s,1^r) = [0,s-1\r,1] in the arranged six-sum form.
// Requires s, r >= 1, w >= s+r+2.
MixedCombo hook_formula(int s, int r, long long w);

// closed expressions for small shapes (test anchors)
MixedCombo sw_closed_22(long long w);     // (2,2), w >= 5
MixedCombo sw_closed_33_1(long long w);   // (3,3)/(1), w >= 6
MixedCombo sw_closed_222_1(long long w);  // (2,2,2)/(1), w >= 6

// One-corner shapes: S_w(D) = Q_{w-|D|}(phi(D)), exactly as written.
// Requires exactly one corner and w > |cells|.
WordCombo one_corner_sum(const SkewShape& d, long long w);

// The same value staged for inspection: complete fixed-(weight,depth)
// families of phi collapse to C(w-dep-1, wt-dep) zeta(w) (the weighted sum
// formula), the remainder goes through the Q definition.  total() equals
// one_corner_sum as a real number, not as a combo.
struct OneCornerStages {
  WordCombo phi;
  int l = 0;  // w - |cells|
  WordCombo collapsed;
  WordCombo remainder;
  WordCombo total() const;
};
OneCornerStages one_corner_stages(const SkewShape& d, long long w);

// S_w(shape) by the cheapest valid route: the one-corner theorem, the ribbon
// corner reduction, or the defining sum over fillings.  Weights below
// |cells| + #corners give the zero combo.
WordCombo sw_value_combo(const SkewShape& d, long long w);

// The decrement relation on a one-corner shape embedded as (n^m)/mu:
//   sum_{i in I} ((i-mu_i)-(m-n)) S_w(lambda/mu[i])
//     = (w-|lambda/mu|-1) S_w(lambda/mu).
// Both sides through one_corner_sum; the combos agree exactly, and the
// report carries the numeric comparison on top.
FormulaReport sw_relation_check(const SkewShape& d, long long w,
                                double tol = 1e-6);

// Symmetrized sums sum_sigma S_w[s,0,...,0 \ r_sigma].  At n=2 the right
// side is the exact product form
//   sum_{t1+t2=s} sum_{w_i >= r_i+t_i+1} C(w1-1,t1) C(w2-1,t2)
//     (zeta(w1)zeta(w2) - zeta(w)),
// an identity of combos via the harmonic product; at n >= 3 the check is
// numeric against the defining corner series of each summand.
FormulaReport symmetric_sum_check(int s, const std::vector<int>& r,
                                  long long w, double tol = 1e-6);
WordCombo symmetric_sum_closed_n2(int s, int r1, int r2, long long w);

// For r2 = s2+r1 the depth-2 band of two_corner_prelim has a symmetric
// coefficient matrix, so it rewrites as products of single zetas:
// zeta(a,b)+zeta(b,a) = zeta(a)zeta(b) - zeta(a+b).  The report compares the
// rewritten expression against the original; passed also requires the
// symmetry to hold exactly.
FormulaReport single_zeta_poly_check(int s1, int s2, int r1, long long w,
                                     double tol = 1e-6);

}  // namespace schurmzv

#endif  // SCHURMZV_FORMULAS_HPP
