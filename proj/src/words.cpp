#include "schurmzv/words.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <sstream>

#include "schurmzv/expand.hpp"

namespace schurmzv {

void combo_add(WordCombo& c, const Word& w, const Rat& q) {
  if (q == 0) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, q);
  } else {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

void combo_add(WordCombo& c, const WordCombo& d, const Rat& scale) {
  if (scale == 0) return;
  for (auto& [w, q] : d) combo_add(c, w, q * scale);
}

WordCombo combo_scaled(const WordCombo& c, const Rat& scale) {
  WordCombo out;
  combo_add(out, c, scale);
  return out;
}

bool combo_is_zero(const WordCombo& c) { return c.empty(); }

std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.a[i]);
  }
  return out;
}

Word parse_word(const std::string& s) {
  Word w;
  if (s.empty()) return w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("parse_word: bad integer '" + item + "'");
    int v = std::stoi(item);
    if (v < 1) throw parse_error("parse_word: letters must be >= 1");
    w.a.push_back(v);
  }
  return w;
}

std::string combo_to_string(const WordCombo& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [w, q] : c) {
    if (!first) out += " + ";
    first = false;
    out += rat_to_string(q) + "*(" + word_to_string(w) + ")";
  }
  return out;
}

WordCombo unit_combo() {
  WordCombo c;
  c[Word{}] = 1;
  return c;
}

WordCombo z_power(int k, long long n) {
  WordCombo c;
  if (n < 0) return c;  // zero
  Word w;
  w.a.assign((size_t)n, k);
  c[w] = 1;
  return c;
}

namespace {

Word cons(int head, const Word& tail) {
  Word w;
  w.a.reserve(tail.a.size() + 1);
  w.a.push_back(head);
  w.a.insert(w.a.end(), tail.a.begin(), tail.a.end());
  return w;
}

Word word_tail(const Word& w) { return Word(std::vector<int>(w.a.begin() + 1, w.a.end())); }

using PairKey = std::pair<Word, Word>;

struct PairKeyLess {
  bool operator()(const PairKey& x, const PairKey& y) const {
    if (x.first < y.first) return true;
    if (y.first < x.first) return false;
    return x.second < y.second;
  }
};

WordCombo product_rec(const Word& u, const Word& v, bool merge,
                      std::map<PairKey, WordCombo, PairKeyLess>& memo,
                      std::mutex& mx) {
  if (u.a.empty()) {
    WordCombo c;
    c[v] = 1;
    return c;
  }
  if (v.a.empty()) {
    WordCombo c;
    c[u] = 1;
    return c;
  }
  PairKey key = v < u ? PairKey{v, u} : PairKey{u, v};
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  WordCombo out;
  Word ut = word_tail(u), vt = word_tail(v);
  for (auto& [w, c] : product_rec(ut, v, merge, memo, mx)) combo_add(out, cons(u.a[0], w), c);
  for (auto& [w, c] : product_rec(u, vt, merge, memo, mx)) combo_add(out, cons(v.a[0], w), c);
  if (merge)
    for (auto& [w, c] : product_rec(ut, vt, merge, memo, mx))
      combo_add(out, cons(u.a[0] + v.a[0], w), c);
  std::lock_guard<std::mutex> lk(mx);
  return memo.emplace(key, std::move(out)).first->second;
}

std::map<PairKey, WordCombo, PairKeyLess> g_stuffle_memo;
std::mutex g_stuffle_mx;
std::map<PairKey, WordCombo, PairKeyLess> g_ishuffle_memo;
std::mutex g_ishuffle_mx;

}  // namespace

WordCombo stuffle(const Word& u, const Word& v) {
  return product_rec(u, v, true, g_stuffle_memo, g_stuffle_mx);
}

WordCombo index_shuffle(const Word& u, const Word& v) {
  return product_rec(u, v, false, g_ishuffle_memo, g_ishuffle_mx);
}

WordCombo stuffle(const WordCombo& u, const WordCombo& v) {
  WordCombo out;
  for (auto& [wu, cu] : u)
    for (auto& [wv, cv] : v) combo_add(out, stuffle(wu, wv), cu * cv);
  return out;
}

WordCombo index_shuffle(const WordCombo& u, const WordCombo& v) {
  WordCombo out;
  for (auto& [wu, cu] : u)
    for (auto& [wv, cv] : v) combo_add(out, index_shuffle(wu, wv), cu * cv);
  return out;
}

WordCombo derivation(const Word& w) {
  WordCombo out;
  for (size_t i = 0; i < w.a.size(); ++i) {
    Word w2 = w;
    w2.a[i] += 1;
    combo_add(out, w2, w.a[i]);
  }
  return out;
}

WordCombo derivation(const WordCombo& c) {
  WordCombo out;
  for (auto& [w, q] : c) combo_add(out, derivation(w), q);
  return out;
}

WordCombo det_stuffle(const std::vector<std::vector<WordCombo>>& m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw domain_error("det_stuffle: matrix not square");
  if (n > 30) throw domain_error("det_stuffle: matrix too large");
  // D(mask) = det of rows 0..k-1 x columns in mask (k = popcount), expanded
  // along the last row; shares all column-subset subdeterminants.
  std::unordered_map<std::uint32_t, WordCombo> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> const WordCombo& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    WordCombo out;
    int k = __builtin_popcount(mask);
    if (k == 0) {
      out = unit_combo();
    } else {
      int pos = 0;
      for (std::uint32_t t = mask; t; ++pos) {
        int j = __builtin_ctz(t);
        t &= t - 1;
        const WordCombo& e = m[k - 1][j];
        if (e.empty()) continue;
        const WordCombo& sub = self(self, mask & ~(1u << j));
        int sign = ((k - 1 - pos) % 2 == 0) ? 1 : -1;
        combo_add(out, stuffle(e, sub), sign);
      }
    }
    return memo.emplace(mask, std::move(out)).first->second;
  };
  std::uint32_t full = n == 0 ? 0 : (std::uint32_t(1) << n) - 1;
  return rec(rec, full);
}

namespace {

// grid order constraints of a skew diagram: rows weakly increase rightward,
// columns strictly increase downward
ChainSystem shape_system(const SkewShape& d, const std::vector<long long>& expo) {
  std::vector<Cell> cs = cells(d);
  ChainSystem sys;
  sys.n = (int)cs.size();
  sys.expo = expo;
  auto idx = [&](int r, int c) -> int {
    for (int i = 0; i < (int)cs.size(); ++i)
      if (cs[i].r == r && cs[i].c == c) return i;
    return -1;
  };
  for (int i = 0; i < sys.n; ++i) {
    int right = idx(cs[i].r, cs[i].c + 1);
    if (right >= 0) sys.weak.push_back({i, right});
    int below = idx(cs[i].r + 1, cs[i].c);
    if (below >= 0) sys.strict.push_back({i, below});
  }
  return sys;
}

}  // namespace

WordCombo phi_via_ssd(const SkewShape& d) {
  std::vector<long long> ones(num_cells(d), 1);
  return expand_to_combo(shape_system(d, ones));
}

WordCombo phi_via_jacobi_trudi(const SkewShape& d) {
  int s = d.lambda.empty() ? 0 : d.lambda[0];
  Partition lc = conjugate(d.lambda), mc = conjugate(d.mu);
  lc.resize(s, 0);
  mc.resize(s, 0);
  std::vector<std::vector<WordCombo>> m(s, std::vector<WordCombo>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) m[i][j] = z_power(1, (long long)lc[i] - mc[j] - i + j);
  return det_stuffle(m);
}

WordCombo phi_two_column(int n, int k) {
  if (n < 0 || k < 0) throw domain_error("phi_two_column: need n,k >= 0");
  WordCombo out;
  for (int l = 0; l <= n; ++l) {
    Rat coeff = Rat(k + 1, l + k + 1) * Rat(binomial(2 * l + k, l));
    if (denominator(coeff) != 1)
      throw domain_error("phi_two_column: coefficient unexpectedly fractional");
    WordCombo term = index_shuffle(z_power(2, n - l), z_power(1, 2 * l + k));
    combo_add(out, term, coeff);
  }
  return out;
}

}  // namespace schurmzv
