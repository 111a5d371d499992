#include "schurmzv/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schurmzv/expand.hpp"

namespace schurmzv {

long long filling_weight(const Filling& t) {
  long long w = 0;
  for (long long x : t) w += x;
  return w;
}

bool is_admissible_filling(const SkewShape& d, const Filling& t) {
  std::vector<Cell> cs = cells(d);
  if (t.size() != cs.size()) return false;
  for (long long x : t)
    if (x < 1) return false;
  for (const Cell& x : corners(d)) {
    int i = (int)(std::find(cs.begin(), cs.end(), x) - cs.begin());
    if (t[i] < 2) return false;
  }
  return true;
}

Filling parse_filling(const SkewShape& d, const std::string& s) {
  Filling t;
  std::stringstream rows(s);
  std::string row;
  int ri = 0;
  while (std::getline(rows, row, ';')) {
    ++ri;
    int expected = ri <= (int)d.lambda.size() ? d.lambda[ri - 1] - mu_at(d, ri) : -1;
    int got = 0;
    std::stringstream ss(row);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("parse_filling: bad integer '" + item + "'");
      t.push_back(std::stoll(item));
      ++got;
    }
    if (got != expected) throw parse_error("parse_filling: row length mismatch");
  }
  if (ri != (int)d.lambda.size()) throw parse_error("parse_filling: row count mismatch");
  return t;
}

std::string filling_to_string(const SkewShape& d, const Filling& t) {
  std::string out;
  size_t k = 0;
  for (int i = 1; i <= (int)d.lambda.size(); ++i) {
    if (i > 1) out += ';';
    for (int j = mu_at(d, i) + 1; j <= d.lambda[i - 1]; ++j, ++k) {
      if (j > mu_at(d, i) + 1) out += ',';
      out += std::to_string(t[k]);
    }
  }
  return out;
}

std::vector<Filling> enumerate_fillings(const SkewShape& d, long long w) {
  int n = num_cells(d);
  std::vector<Filling> out;
  if (w < n) return out;
  Filling cur(n, 1);
  auto rec = [&](auto&& self, int i, long long left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (long long v = 1; v <= left - (n - 1 - i); ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, w);
  return out;
}

std::vector<Filling> enumerate_admissible_fillings(const SkewShape& d, long long w) {
  std::vector<Filling> out;
  for (Filling& t : enumerate_fillings(d, w))
    if (is_admissible_filling(d, t)) out.push_back(std::move(t));
  return out;
}

bool is_ssyt(const SkewShape& d, const std::vector<int>& entries) {
  std::vector<Cell> cs = cells(d);
  if (entries.size() != cs.size()) return false;
  std::map<Cell, int> val;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (entries[i] < 1) return false;
    val[cs[i]] = entries[i];
  }
  for (size_t i = 0; i < cs.size(); ++i) {
    auto right = val.find({cs[i].r, cs[i].c + 1});
    if (right != val.end() && entries[i] > right->second) return false;
    auto below = val.find({cs[i].r + 1, cs[i].c});
    if (below != val.end() && entries[i] >= below->second) return false;
  }
  return true;
}

std::vector<std::vector<int>> enumerate_ssyt(const SkewShape& d, int M) {
  std::vector<Cell> cs = cells(d);
  int n = (int)cs.size();
  // row-major predecessors: left neighbor (weak), above neighbor (strict)
  std::vector<int> left(n, -1), up(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      if (cs[j].r == cs[i].r && cs[j].c == cs[i].c - 1) left[i] = j;
      if (cs[j].c == cs[i].c && cs[j].r == cs[i].r - 1) up[i] = j;
    }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    int lo = 1;
    if (left[i] >= 0) lo = std::max(lo, cur[left[i]]);
    if (up[i] >= 0) lo = std::max(lo, cur[up[i]] + 1);
    for (int v = lo; v < M; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<StrictDecomp> enumerate_ssd(const SkewShape& d) {
  std::vector<Cell> cs = cells(d);
  ChainSystem sys;
  sys.n = (int)cs.size();
  sys.expo.assign(sys.n, 1);
  auto idx = [&](int r, int c) -> int {
    for (int i = 0; i < sys.n; ++i)
      if (cs[i].r == r && cs[i].c == c) return i;
    return -1;
  };
  for (int i = 0; i < sys.n; ++i) {
    int right = idx(cs[i].r, cs[i].c + 1);
    if (right >= 0) sys.weak.push_back({i, right});
    int below = idx(cs[i].r + 1, cs[i].c);
    if (below >= 0) sys.strict.push_back({i, below});
  }
  std::vector<StrictDecomp> out;
  for_each_level_sequence(sys, [&](const std::vector<std::uint32_t>& seq) {
    StrictDecomp sd;
    for (std::uint32_t m : seq) {
      std::vector<int> block;
      for (std::uint32_t t = m; t;) {
        int v = __builtin_ctz(t);
        t &= t - 1;
        block.push_back(v);
      }
      sd.push_back(std::move(block));
    }
    out.push_back(std::move(sd));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schurmzv
