#ifndef SCHURMZV_TABLEAUX_HPP
#define SCHURMZV_TABLEAUX_HPP

#include <functional>
#include <string>
#include <vector>

#include "schurmzv/shapes.hpp"

namespace schurmzv {

// An index filling assigns a positive integer exponent to every cell,
// row-major.  It is admissible when every corner entry is >= 2.
using Filling = std::vector<long long>;

long long filling_weight(const Filling& t);
bool is_admissible_filling(const SkewShape& d, const Filling& t);
Filling parse_filling(const SkewShape& d, const std::string& s);  // "1;2,1" rows ; cols ,
std::string filling_to_string(const SkewShape& d, const Filling& t);

// all fillings of the given weight (entries >= 1), and the admissible ones;
// deterministic lexicographic order
std::vector<Filling> enumerate_fillings(const SkewShape& d, long long w);
std::vector<Filling> enumerate_admissible_fillings(const SkewShape& d, long long w);

// semistandard Young tableaux with entries < M (weak rows, strict columns),
// row-major entry vectors, lexicographic order
std::vector<std::vector<int>> enumerate_ssyt(const SkewShape& d, int M);
bool is_ssyt(const SkewShape& d, const std::vector<int>& entries);

// A strict set decomposition of a diagram: an ordered partition of the cells
// D_1,...,D_r such that filling each D_i with the value i is a semistandard
// tableau.  Blocks are lists of row-major cell indices.
using StrictDecomp = std::vector<std::vector<int>>;

std::vector<StrictDecomp> enumerate_ssd(const SkewShape& d);

}  // namespace schurmzv

#endif  // SCHURMZV_TABLEAUX_HPP
