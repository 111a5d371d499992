#include "schurmzv/posets.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schurmzv {

namespace {

using Mask = unsigned long long;

void validate(const TwoPoset& x) {
  if (x.n < 0 || (int)x.label.size() != x.n)
    throw domain_error("poset: label count does not match element count");
  for (int b : x.label)
    if (b != 0 && b != 1) throw domain_error("poset: labels must be 0 or 1");
  for (const auto& [a, b] : x.covers)
    if (a < 0 || b < 0 || a >= x.n || b >= x.n || a == b)
      throw domain_error("poset: cover relation out of range");
  // acyclicity (covers may repeat; count multiplicities)
  std::vector<int> indeg(x.n, 0);
  for (const auto& [a, b] : x.covers) ++indeg[b];
  std::vector<int> stack;
  for (int v = 0; v < x.n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& [a, b] : x.covers)
      if (a == v && --indeg[b] == 0) stack.push_back(b);
  }
  if (seen != x.n) throw domain_error("poset: covers contain a cycle");
}

void check_cap(const TwoPoset& x, int cap) {
  if (cap < 0 || cap > 62) throw domain_error("poset: unusable element cap");
  if (x.n > cap) throw domain_error("poset: element cap exceeded");
}

std::vector<Mask> pred_masks(const TwoPoset& x) {
  std::vector<Mask> p(x.n, 0);
  for (const auto& [a, b] : x.covers) p[b] |= Mask(1) << a;
  return p;
}

int add_node(TwoPoset& x, int lab, int below) {
  x.label.push_back(lab);
  int id = (int)x.label.size() - 1;
  if (below >= 0) x.covers.push_back({below, id});
  return id;
}

}  // namespace

TwoPoset parse_poset(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos)
    throw parse_error("poset: expected \"covers;labels\"");
  TwoPoset x;
  for (std::size_t i = semi + 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == ' ') continue;
    if (c != '0' && c != '1') throw parse_error("poset: labels must be 0/1");
    x.label.push_back(c - '0');
  }
  x.n = (int)x.label.size();
  std::string cov = s.substr(0, semi);
  std::size_t pos = 0;
  while (pos < cov.size()) {
    auto end = cov.find(',', pos);
    if (end == std::string::npos) end = cov.size();
    std::string tok = cov.substr(pos, end - pos);
    pos = end + 1;
    std::string t;
    for (char c : tok)
      if (c != ' ') t += c;
    if (t.empty()) continue;
    auto lt = t.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == t.size())
      throw parse_error("poset: cover must look like a<b");
    int a = 0, b = 0;
    try {
      std::size_t used = 0;
      a = std::stoi(t.substr(0, lt), &used);
      if (used != lt) throw parse_error("poset: bad element id");
      b = std::stoi(t.substr(lt + 1), &used);
      if (used != t.size() - lt - 1) throw parse_error("poset: bad element id");
    } catch (const parse_error&) {
      throw;
    } catch (...) {
      throw parse_error("poset: bad element id");
    }
    if (a < 0 || b < 0 || a >= x.n || b >= x.n)
      throw parse_error("poset: cover endpoint out of range");
    x.covers.push_back({a, b});
  }
  return x;
}

std::string poset_to_string(const TwoPoset& x) {
  auto cov = x.covers;
  std::sort(cov.begin(), cov.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < cov.size(); ++i) {
    if (i) os << ',';
    os << cov[i].first << '<' << cov[i].second;
  }
  os << ';';
  for (int b : x.label) os << b;
  return os.str();
}

bool poset_admissible(const TwoPoset& x) {
  validate(x);
  std::vector<int> has_up(x.n, 0), has_down(x.n, 0);
  for (const auto& [a, b] : x.covers) has_up[a] = 1, has_down[b] = 1;
  for (int v = 0; v < x.n; ++v) {
    if (!has_up[v] && x.label[v] != 0) return false;   // maximal must be 0
    if (!has_down[v] && x.label[v] != 1) return false;  // minimal must be 1
  }
  return true;
}

std::vector<std::vector<int>> total_extensions(const TwoPoset& x, int cap) {
  validate(x);
  check_cap(x, cap);
  auto preds = pred_masks(x);
  Mask full = (Mask(1) << x.n) - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  auto rec = [&](auto&& self, Mask mask) -> void {
    if (mask == full) {
      if (out.size() >= 2000000)
        throw domain_error("poset: too many linear extensions to stream");
      out.push_back(seq);
      return;
    }
    for (int v = 0; v < x.n; ++v)
      if (!(mask >> v & 1) && (preds[v] & ~mask) == 0) {
        seq.push_back(x.label[v]);
        self(self, mask | Mask(1) << v);
        seq.pop_back();
      }
  };
  rec(rec, 0);
  return out;
}

Int extension_count(const TwoPoset& x, int cap) {
  validate(x);
  check_cap(x, cap);
  auto preds = pred_masks(x);
  Mask full = (Mask(1) << x.n) - 1;
  std::unordered_map<Mask, Int> memo;
  auto rec = [&](auto&& self, Mask mask) -> Int {
    if (mask == full) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (int v = 0; v < x.n; ++v)
      if (!(mask >> v & 1) && (preds[v] & ~mask) == 0)
        total += self(self, mask | Mask(1) << v);
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, 0);
}

Word chain_to_word(const std::vector<int>& labels) {
  if (labels.empty() || labels.front() != 1 || labels.back() != 0)
    throw domain_error("chain_to_word: not an admissible chain");
  Word w;
  for (int b : labels) {
    if (b == 1)
      w.a.push_back(1);
    else if (b == 0)
      ++w.a.back();
    else
      throw domain_error("chain_to_word: labels must be 0 or 1");
  }
  return w;
}

std::vector<int> word_to_chain(const Word& w) {
  std::vector<int> out;
  for (int k : w.a) {
    if (k < 1) throw domain_error("word_to_chain: letters must be >= 1");
    out.push_back(1);
    out.insert(out.end(), k - 1, 0);
  }
  return out;
}

WordCombo admissible_part(const TwoPoset& x, int cap) {
  validate(x);
  check_cap(x, cap);
  if (x.n == 0) return unit_combo();
  auto preds = pred_masks(x);
  Mask full = (Mask(1) << x.n) - 1;
  // state after removing `mask`: how the remaining labels read, split into
  // the run of 0s extending the current letter plus the completed word
  using Tail = std::pair<int, Word>;
  std::unordered_map<Mask, std::map<Tail, Int>> memo;
  auto rec = [&](auto&& self, Mask mask) -> const std::map<Tail, Int>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::map<Tail, Int> res;
    if (mask == full) {
      res[{0, Word{}}] = 1;
    } else {
      for (int v = 0; v < x.n; ++v) {
        if ((mask >> v & 1) || (preds[v] & ~mask) != 0) continue;
        const auto& sub = self(self, mask | Mask(1) << v);
        for (const auto& [tail, c] : sub) {
          if (x.label[v] == 0) {
            res[{tail.first + 1, tail.second}] += c;
          } else {
            Word w;
            w.a.reserve(tail.second.a.size() + 1);
            w.a.push_back(tail.first + 1);
            w.a.insert(w.a.end(), tail.second.a.begin(), tail.second.a.end());
            res[{0, std::move(w)}] += c;
          }
        }
      }
    }
    return memo.emplace(mask, std::move(res)).first->second;
  };
  WordCombo out;
  for (const auto& [tail, c] : rec(rec, 0))
    if (tail.first == 0 && !tail.second.a.empty() && tail.second.admissible())
      combo_add(out, tail.second, Rat(c));
  return out;
}

TwoPoset build_X(int l, const Word& k) {
  if (l <= 0) throw domain_error("build_X: l must be positive");
  if (k.a.empty()) throw domain_error("build_X: empty index");
  for (int v : k.a)
    if (v < 1) throw domain_error("build_X: letters must be >= 1");
  TwoPoset x;
  int bottom = add_node(x, 1, -1);
  int t = bottom;
  for (int j = 0; j < l; ++j) t = add_node(x, 0, t);
  t = bottom;
  for (std::size_t i = 0; i < k.a.size(); ++i) {
    if (i > 0) t = add_node(x, 1, t);
    for (int j = 0; j + 1 < k.a[i]; ++j) t = add_node(x, 0, t);
  }
  x.n = (int)x.label.size();
  return x;
}

TwoPoset build_Y(int i, const std::vector<int>& p) {
  int d = (int)p.size() + 1;
  if (d < 2 || i < 1 || i > d - 1)
    throw domain_error("build_Y: index out of range");
  for (int v : p)
    if (v < 0) throw domain_error("build_Y: parts must be >= 0");
  if (p[0] < 1) throw domain_error("build_Y: leading part must be positive");
  auto part = [&](int q) { return q < i ? p[q] : p[q - 1]; };  // q != i
  TwoPoset x;
  int t = -1;
  for (int q = i - 1; q >= 0; --q) {
    t = add_node(x, 1, t);
    for (int j = 0; j < part(q); ++j) t = add_node(x, 0, t);
  }
  int left_top = t;
  t = -1;
  for (int q = i + 1; q <= d - 1; ++q) {
    t = add_node(x, 1, t);
    for (int j = 0; j < part(q); ++j) t = add_node(x, 0, t);
  }
  int right_top = add_node(x, 1, t);
  x.covers.push_back({right_top, left_top});
  x.n = (int)x.label.size();
  return x;
}

MixedCombo y_corner_series(int i, const std::vector<int>& p) {
  int d = (int)p.size() + 1;
  if (d < 2 || i < 1 || i > d - 1)
    throw domain_error("y_corner_series: index out of range");
  for (int v : p)
    if (v < 0) throw domain_error("y_corner_series: parts must be >= 0");
  if (p[0] < 1)
    throw domain_error("y_corner_series: leading part must be positive");
  auto part = [&](int q) { return q < i ? p[q] : p[q - 1]; };  // q != i
  IndexList kk;
  for (int q = i - 1; q >= 0; --q) kk.push_back(part(q) + 1);
  MixedCombo m;
  for (int j = i; j <= d - 1; ++j) {
    int cmax = (j == i) ? 0 : part(j) - 1;
    for (int c = 0; c <= cmax; ++c) {
      long long e = c;
      MultiCornerIndex mc;
      mc.ll.push_back({c + 1});
      for (int q = j + 1; q <= d - 1; ++q) {
        mc.ll[0].push_back(part(q) + 1);
        e += part(q);
      }
      mc.kk.push_back(kk);
      std::vector<Word> zs;
      if (j > i) {
        std::vector<int> tail;
        for (int q = i + 1; q < j; ++q) tail.push_back(part(q) + 1);
        tail.push_back(part(j) - c + 1);
        zs.push_back(Word(std::move(tail)));
      }
      mixed_add(m, e % 2 == 0 ? Rat(1) : Rat(-1), std::move(zs), {mc});
    }
  }
  return m;
}

TwoPoset build_corner_poset(const IndexList& ll, const IndexList& kk) {
  if (kk.empty() || kk.back() < 2)
    throw domain_error("corner poset: column part must end with >= 2");
  for (int v : kk)
    if (v < 1) throw domain_error("corner poset: column entries must be >= 1");
  for (int v : ll)
    if (v < 1) throw domain_error("corner poset: row entries must be >= 1");
  TwoPoset x;
  int t = -1;
  for (std::size_t q = 0; q < kk.size(); ++q) {
    t = add_node(x, 1, t);
    for (int j = 0; j + 1 < kk[q]; ++j) t = add_node(x, 0, t);
  }
  int anchor = t;
  for (int q = (int)ll.size() - 1; q >= 0; --q) {
    int b = add_node(x, 1, -1);
    x.covers.push_back({b, anchor});
    int top = b;
    for (int j = 0; j + 1 < ll[q]; ++j) top = add_node(x, 0, top);
    anchor = top;
  }
  x.n = (int)x.label.size();
  return x;
}

FormulaReport verify_integral_series(const IndexList& ll, const IndexList& kk,
                                     double tol) {
  std::ostringstream ps;
  ps << '[';
  for (std::size_t q = 0; q < ll.size(); ++q) ps << (q ? "," : "") << ll[q];
  ps << '\\';
  for (std::size_t q = 0; q < kk.size(); ++q) ps << (q ? "," : "") << kk[q];
  ps << ']';
  EvalResult lhs = multicorner_numeric({ll}, {kk}, tol / 2);
  EvalResult rhs = eval_combo(admissible_part(build_corner_poset(ll, kk)),
                              tol / 2);
  return make_report(lhs, rhs, tol, ps.str());
}

}  // namespace schurmzv
