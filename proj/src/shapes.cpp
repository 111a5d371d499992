#include "schurmzv/shapes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schurmzv {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty() || p[0] == 0) return q;
  q.resize(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++q[j];
  return q;
}

SkewShape make_skew_shape(Partition lambda, Partition mu) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (!is_partition(lambda) || !is_partition(mu))
    throw domain_error("make_skew_shape: not partitions");
  if (mu.size() > lambda.size())
    throw domain_error("make_skew_shape: mu has more rows than lambda");
  for (size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) throw domain_error("make_skew_shape: mu not inside lambda");

  // strip empty rows (safe: an empty row separates column-disjoint parts)
  Partition l2, m2;
  for (size_t i = 0; i < lambda.size(); ++i) {
    int m = i < mu.size() ? mu[i] : 0;
    if (lambda[i] > m) {
      l2.push_back(lambda[i]);
      m2.push_back(m);
    }
  }
  if (!l2.empty()) {
    int shift = *std::min_element(m2.begin(), m2.end());
    if (shift > 0)
      for (size_t i = 0; i < l2.size(); ++i) {
        l2[i] -= shift;
        m2[i] -= shift;
      }
  }
  while (!m2.empty() && m2.back() == 0) m2.pop_back();
  if (!is_partition(l2) || !is_partition(m2))
    throw domain_error("make_skew_shape: normalization broke monotonicity");
  return SkewShape{std::move(l2), std::move(m2)};
}

SkewShape parse_shape(const std::string& s) {
  auto parse_list = [](const std::string& t) {
    Partition out;
    if (t.empty()) return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("parse_shape: bad integer '" + item + "'");
      out.push_back(std::stoi(item));
    }
    return out;
  };
  auto slash = s.find('/');
  Partition lambda = parse_list(slash == std::string::npos ? s : s.substr(0, slash));
  Partition mu = slash == std::string::npos ? Partition{} : parse_list(s.substr(slash + 1));
  if (lambda.empty()) throw parse_error("parse_shape: empty lambda");
  try {
    return make_skew_shape(lambda, mu);
  } catch (const domain_error& e) {
    throw parse_error(std::string("parse_shape: ") + e.what());
  }
}

std::string shape_to_string(const SkewShape& d) {
  std::string out;
  for (size_t i = 0; i < d.lambda.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.lambda[i]);
  }
  if (!d.mu.empty()) {
    out += '/';
    for (size_t i = 0; i < d.mu.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(d.mu[i]);
    }
  }
  return out;
}

int mu_at(const SkewShape& d, int i) {
  return (i >= 1 && i <= (int)d.mu.size()) ? d.mu[i - 1] : 0;
}

bool contains(const SkewShape& d, int r, int c) {
  if (r < 1 || r > (int)d.lambda.size()) return false;
  return c > mu_at(d, r) && c <= d.lambda[r - 1];
}

std::vector<Cell> cells(const SkewShape& d) {
  std::vector<Cell> out;
  for (int i = 1; i <= (int)d.lambda.size(); ++i)
    for (int j = mu_at(d, i) + 1; j <= d.lambda[i - 1]; ++j) out.push_back({i, j});
  return out;
}

int num_cells(const SkewShape& d) {
  int n = 0;
  for (int i = 1; i <= (int)d.lambda.size(); ++i) n += d.lambda[i - 1] - mu_at(d, i);
  return n;
}

std::vector<Cell> corners(const SkewShape& d) {
  std::vector<Cell> out;
  for (const Cell& x : cells(d))
    if (!contains(d, x.r, x.c + 1) && !contains(d, x.r + 1, x.c)) out.push_back(x);
  return out;
}

bool is_connected(const SkewShape& d) {
  std::vector<Cell> cs = cells(d);
  if (cs.empty()) return false;
  std::set<Cell> todo(cs.begin(), cs.end());
  std::vector<Cell> stack{cs[0]};
  todo.erase(cs[0]);
  while (!stack.empty()) {
    Cell x = stack.back();
    stack.pop_back();
    for (Cell y : {Cell{x.r + 1, x.c}, Cell{x.r - 1, x.c}, Cell{x.r, x.c + 1},
                   Cell{x.r, x.c - 1}}) {
      auto it = todo.find(y);
      if (it != todo.end()) {
        todo.erase(it);
        stack.push_back(y);
      }
    }
  }
  return todo.empty();
}

bool is_ribbon(const SkewShape& d) {
  if (num_cells(d) == 0 || !is_connected(d)) return false;
  for (const Cell& x : cells(d))
    if (contains(d, x.r, x.c + 1) && contains(d, x.r + 1, x.c) &&
        contains(d, x.r + 1, x.c + 1))
      return false;
  return true;
}

RibbonSpec ribbon_to_spec(const SkewShape& d) {
  if (!is_ribbon(d)) throw domain_error("ribbon_to_spec: not a ribbon");
  int h = (int)d.lambda.size();
  RibbonSpec sp;
  int r = h, c = mu_at(d, h) + 1;  // bottom-left cell
  int consumed = 0;
  while (true) {
    // horizontal run, keeping the last cell as the bottom of the column run
    int len = 1;
    while (contains(d, r, c + 1)) {
      ++c;
      ++len;
    }
    sp.s.push_back(len - 1);
    // vertical run upward, bottom cell shared with the horizontal run
    int vlen = 1;
    while (contains(d, r - 1, c)) {
      --r;
      ++vlen;
    }
    consumed += len + vlen - 1;
    if (contains(d, r, c + 1)) {
      // top of this column starts the next row run
      sp.r.push_back(vlen - 1);
      consumed -= 1;  // top cell recounted as head of the next horizontal run
    } else {
      sp.r.push_back(vlen);
      break;
    }
  }
  if (consumed != num_cells(d))
    throw domain_error("ribbon_to_spec: walk did not cover the diagram");
  return sp;
}

int spec_num_corners(const RibbonSpec& sp) { return (int)sp.r.size(); }

SkewShape spec_to_shape(const RibbonSpec& sp) {
  int n = (int)sp.r.size();
  if (n == 0 || (int)sp.s.size() != n)
    throw domain_error("spec_to_shape: mismatched runs");
  if (sp.s[0] < 0) throw domain_error("spec_to_shape: s_1 < 0");
  for (int i = 1; i < n; ++i)
    if (sp.s[i] < 1) throw domain_error("spec_to_shape: s_i < 1 for i >= 2");
  for (int i = 0; i < n; ++i)
    if (sp.r[i] < 1) throw domain_error("spec_to_shape: r_i < 1");

  // build cells in (y from bottom, x from left) coordinates
  std::set<std::pair<int, int>> cs;  // (y, x)
  int y = 0, x = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < sp.s[i]; ++j) cs.insert({y, x + j});
    x += sp.s[i];                       // column of run i
    for (int j = 0; j < sp.r[i]; ++j) cs.insert({y + j, x});
    y += sp.r[i];                       // next row run sits just above the top
  }
  int height = y;
  Partition lambda(height, 0), mu(height, 0);
  for (int i = 0; i < height; ++i) {
    int lo = -1, hi = -1;
    for (auto& [cy, cx] : cs)
      if (cy == height - 1 - i) {
        if (lo < 0) lo = cx;
        lo = std::min(lo, cx);
        hi = std::max(hi, cx);
      }
    lambda[i] = hi + 1;
    mu[i] = lo;
  }
  return make_skew_shape(lambda, mu);
}

bool is_one_corner(const SkewShape& d) { return corners(d).size() == 1; }

OneCornerForm one_corner_canonical(const SkewShape& d) {
  if (num_cells(d) == 0 || !is_one_corner(d))
    throw domain_error("one_corner_canonical: shape must have exactly one corner");
  int h = (int)d.lambda.size();
  for (int i = 0; i < h; ++i)
    if (d.lambda[i] != d.lambda[0])
      throw domain_error("one_corner_canonical: normalized lambda not a rectangle");
  OneCornerForm f;
  f.n = d.lambda[0] + 1;
  f.m = h + 1;
  f.mu.resize(f.m);
  f.mu[0] = f.n;
  for (int i = 1; i <= h; ++i) f.mu[i] = mu_at(d, i) + 1;
  return f;
}

SkewShape form_to_shape(const OneCornerForm& f) {
  Partition lambda(f.m, f.n);
  return make_skew_shape(lambda, f.mu);
}

std::vector<MuDecrement> mu_decrement_set(const OneCornerForm& f) {
  std::vector<MuDecrement> out;
  for (int i = 1; i <= f.m; ++i) {
    int v = f.mu[i - 1];
    if (v < 1) continue;
    if (i < f.m && v - 1 < f.mu[i]) continue;  // must stay weakly decreasing
    std::vector<int> mu2 = f.mu;
    mu2[i - 1] -= 1;
    MuDecrement md;
    md.i = i;
    md.coeff = Int(i - v) - Int(f.m - f.n);
    md.shape = make_skew_shape(Partition(f.m, f.n), mu2);
    out.push_back(std::move(md));
  }
  return out;
}

std::vector<SkewShape> enumerate_skew_shapes(int max_cells) {
  std::vector<SkewShape> out;
  Partition lambda, mu;
  // rows top-down: intervals (mu_i, lambda_i], weakly decreasing in both ends
  auto column_full = [&]() {
    int width = lambda.empty() ? 0 : lambda[0];
    std::vector<char> seen(width + 1, 0);
    for (size_t i = 0; i < lambda.size(); ++i)
      for (int j = mu[i] + 1; j <= lambda[i]; ++j) seen[j] = 1;
    for (int j = 1; j <= width; ++j)
      if (!seen[j]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int used) -> void {
    if (!lambda.empty() && column_full()) out.push_back(make_skew_shape(lambda, mu));
    if (used >= max_cells) return;
    int maxl = lambda.empty() ? max_cells : lambda.back();
    int maxm = lambda.empty() ? max_cells : (mu.empty() ? 0 : mu.back());
    for (int l = 1; l <= maxl; ++l)
      for (int m = 0; m < l && m <= maxm; ++m) {
        if (used + (l - m) > max_cells) continue;
        lambda.push_back(l);
        mu.push_back(m);
        self(self, used + (l - m));
        lambda.pop_back();
        mu.pop_back();
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace schurmzv
