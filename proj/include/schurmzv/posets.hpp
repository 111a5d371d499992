#ifndef SCHURMZV_POSETS_HPP
#define SCHURMZV_POSETS_HPP

#include <string>
#include <utility>
#include <vector>

#include "schurmzv/schur.hpp"
#include "schurmzv/verify.hpp"
#include "schurmzv/weighted.hpp"
#include "schurmzv/words.hpp"

namespace schurmzv {

// A finite labeled poset: elements 0..n-1, covers (a,b) meaning a < b,
// label 1 for the form dt/(1-t) and 0 for dt/t.  The attached iterated
// integral converges iff every minimal element has label 1 and every
// maximal element label 0; we never integrate numerically -- the value is
// defined through the word expansion of the admissible part.
struct TwoPoset {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> label;
};

// text form "a<b,c<d,...;bitstring"; covers may be empty, labels fix n
TwoPoset parse_poset(const std::string& s);
std::string poset_to_string(const TwoPoset& x);

bool poset_admissible(const TwoPoset& x);

// Linear extensions as bottom-to-top label sequences, one entry per
// extension (equal sequences repeated).  Deterministic order.
std::vector<std::vector<int>> total_extensions(const TwoPoset& x,
                                               int cap = 14);
Int extension_count(const TwoPoset& x, int cap = 14);

// Split a chain's labels 1 0^{k1-1} 1 0^{k2-1} ... into (k1,...,kd); the
// chain must start with 1 and end with 0.
Word chain_to_word(const std::vector<int>& labels);
std::vector<int> word_to_chain(const Word& w);

// Sum of chain_to_word over the admissible linear extensions (those starting
// with 1 and ending with 0), via a dp over down-sets of the poset.
WordCombo admissible_part(const TwoPoset& x, int cap = 14);

// Poset attached to the weighted sum P_l(k): a bottom 1, a chain of l 0s on
// one branch and 0^{k1-1} 1 0^{k2-1} ... 1 0^{kd-1} on the other.
TwoPoset build_X(int l, const Word& k);

// Two chains joined only at the top: left, bottom to top,
// 1 0^{p_{i-1}} ... 1 0^{p_1} 1 0^{p_0}; right 1 0^{p_{i+1}} ... 1 0^{p_{d-1}} 1,
// with the bare right top placed just below the left top.  p lists
// (p_0,...,p_{i-1},p_{i+1},...,p_{d-1}) with slot i omitted; p_0 >= 1.
TwoPoset build_Y(int i, const std::vector<int>& p);

// Corner-series expansion of the Y poset's value: one-corner atoms times
// trailing zeta words (the trailing factor is empty in the leading term).
// Agrees with admissible_part(build_Y(i, p)) as real numbers.
MixedCombo y_corner_series(int i, const std::vector<int>& p);

// Poset whose admissible part expands the one-corner series zeta[ll\kk]:
// main chain 1 0^{k1-1} ... 1 0^{kr-1}, then teeth l_s,...,l_1 hung from the
// top, each tooth a chain 1 0^{l_q-1} whose bottom sits below the previous
// tooth's top (below the main chain's top for the first tooth).
TwoPoset build_corner_poset(const IndexList& ll, const IndexList& kk);

// numeric check of the series-vs-word-expansion identity for zeta[ll\kk]
FormulaReport verify_integral_series(const IndexList& ll, const IndexList& kk,
                                     double tol);

}  // namespace schurmzv

#endif  // SCHURMZV_POSETS_HPP
