#ifndef SCHURMZV_EXPAND_HPP
#define SCHURMZV_EXPAND_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "schurmzv/words.hpp"

namespace schurmzv {

// A finite family of positive-integer variables with <= / < constraints and
// an exponent per variable.  Sums of prod x_v^{-expo_v} over all admissible
// assignments expand into Z-linear combinations of (quasi-)MZV words by
// classifying assignments by their level sets: each level is a set of
// variables sharing one value, levels strictly increase, and the word letter
// of a level is the sum of its exponents.
struct ChainSystem {
  int n = 0;
  std::vector<std::pair<int, int>> weak;    // (a,b): x_a <= x_b
  std::vector<std::pair<int, int>> strict;  // (a,b): x_a <  x_b
  std::vector<long long> expo;
};

// word combo of the full expansion (memoized over remaining-variable masks)
WordCombo expand_to_combo(const ChainSystem& sys);

// enumerate level-set sequences (bottom level first) as variable masks;
// deterministic order.  Used for the explicit decomposition streams.
void for_each_level_sequence(const ChainSystem& sys,
                             const std::function<void(const std::vector<std::uint32_t>&)>& f);

}  // namespace schurmzv

#endif  // SCHURMZV_EXPAND_HPP
