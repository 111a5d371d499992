#ifndef SCHURMZV_SHAPES_HPP
#define SCHURMZV_SHAPES_HPP

#include <compare>
#include <string>
#include <vector>

#include "schurmzv/rational.hpp"

namespace schurmzv {

// Partitions are weakly decreasing lists of nonnegative ints; trailing zeros
// are stripped on normalization.
using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
bool is_partition(const Partition& p);

struct Cell {
  int r, c;  // 1-based, rows grow downward
  auto operator<=>(const Cell&) const = default;
};

// A skew diagram lambda/mu.  Construct through make_skew_shape so that the
// pair is normalized: empty rows stripped, columns shifted so min(mu) == 0.
struct SkewShape {
  Partition lambda, mu;  // mu padded with zeros to lambda.size() on demand
  auto operator<=>(const SkewShape&) const = default;
};

SkewShape make_skew_shape(Partition lambda, Partition mu);
SkewShape parse_shape(const std::string& s);    // "3,3/1" or "2,2"
std::string shape_to_string(const SkewShape& d);

int mu_at(const SkewShape& d, int i);           // 1-based, padded
bool contains(const SkewShape& d, int r, int c);
std::vector<Cell> cells(const SkewShape& d);    // row-major
int num_cells(const SkewShape& d);
std::vector<Cell> corners(const SkewShape& d);  // (r,c): no cell right/below
bool is_connected(const SkewShape& d);
bool is_ribbon(const SkewShape& d);             // connected, no 2x2 block

// Ribbon description by runs, read from bottom-left to top-right: s_1 >= 0
// horizontal cells, then column run r_1 >= 1 whose bottom cell closes the
// row; the next row run starts directly above the top of the previous column
// run.  s_i >= 1 for i >= 2 whenever the spec describes an actual diagram.
struct RibbonSpec {
  std::vector<int> s, r;  // same length n >= 1
  auto operator<=>(const RibbonSpec&) const = default;
};

RibbonSpec ribbon_to_spec(const SkewShape& d);  // throws domain_error
SkewShape spec_to_shape(const RibbonSpec& sp);  // requires s_i >= 1 for i >= 2
int spec_num_corners(const RibbonSpec& sp);

// One-corner shapes and the rectangle embedding lambda = (n^m), mu_1 = n,
// mu_m > 0 used by the decrement relation.
bool is_one_corner(const SkewShape& d);

struct OneCornerForm {
  int n = 0, m = 0;        // lambda = (n^m)
  std::vector<int> mu;     // length m, mu[0] == n, mu[m-1] > 0
};

OneCornerForm one_corner_canonical(const SkewShape& d);
SkewShape form_to_shape(const OneCornerForm& f);

struct MuDecrement {
  int i = 0;           // 1-based position decremented
  Int coeff;           // (i - mu_i) - (m - n)
  SkewShape shape;     // normalized (n^m)/mu[i]
};

std::vector<MuDecrement> mu_decrement_set(const OneCornerForm& f);

// All normalized skew diagrams with 1..max_cells cells and every column in
// 1..lambda_1 occupied (compact translation representatives); deterministic
// order.
std::vector<SkewShape> enumerate_skew_shapes(int max_cells);

}  // namespace schurmzv

#endif  // SCHURMZV_SHAPES_HPP
