#include "schurmzv/weighted.hpp"

#include <algorithm>
#include <utility>

namespace schurmzv {

namespace {

Rat sign_pm(long long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

WordCombo P_def(const WeightedSumSpec& s) {
  const int d = (int)s.k.size();
  if ((int)s.n.size() != d) throw domain_error("P_def: |n| != |k|");
  if (s.l < 0) throw domain_error("P_def: l < 0");
  for (int i = 0; i < d; ++i)
    if (s.n[i] < 1 || s.k[i] < 1)
      throw domain_error("P_def: index entries must be >= 1");

  WordCombo res;
  if (d == 0) {
    if (s.l == 0) res = unit_combo();
    return res;
  }
  long long total = s.l;
  for (int x : s.k) total += x;

  // minimal admissible entries: w_i >= max(n_i, 1), last also >= 2
  std::vector<long long> tailmin(d + 1, 0);
  for (int i = d - 1; i >= 0; --i) {
    long long m = std::max<long long>(s.n[i], i + 1 == d ? 2 : 1);
    tailmin[i] = tailmin[i + 1] + m;
  }
  if (tailmin[0] > total) return res;

  std::vector<int> w(d);
  auto rec = [&](auto&& self, int pos, long long rem, const Int& coeff) -> void {
    if (pos + 1 == d) {
      if (rem < std::max<long long>(s.n[pos], 2)) return;
      Int c = coeff * binomial(Int(rem - s.n[pos]), s.k[pos] - 1);
      if (c == 0) return;
      w[pos] = (int)rem;
      combo_add(res, Word(w), Rat(c));
      return;
    }
    for (long long v = s.n[pos]; rem - v >= tailmin[pos + 1]; ++v) {
      Int c = coeff * binomial(Int(v - s.n[pos]), s.k[pos] - 1);
      if (c == 0) continue;
      w[pos] = (int)v;
      self(self, pos + 1, rem - v, c);
    }
  };
  rec(rec, 0, total, Int(1));
  return res;
}

WordCombo P_std(const std::vector<int>& k, int l) {
  return P_def({std::vector<int>(k.size(), 1), k, l});
}

WordCombo Q_std(const std::vector<int>& k, int l) {
  if (k.empty()) throw domain_error("Q_std: empty index");
  std::vector<int> n(k.size(), 1);
  n.back() = 2;
  return P_def({n, k, l});
}

WordCombo Q_via_P(const std::vector<int>& k, int l) {
  if (k.empty()) throw domain_error("Q_via_P: empty index");
  WordCombo res;
  std::vector<int> kj(k);
  for (int j = 0; j < k.back(); ++j) {
    kj.back() = k.back() - j;
    combo_add(res, P_std(kj, l + j), sign_pm(j));
  }
  return res;
}

WordCombo Q_on_combo(const WordCombo& c, int l) {
  WordCombo res;
  for (const auto& [w, coeff] : c) {
    if (w.a.empty()) {
      if (l == 0) combo_add(res, w, coeff);
      continue;
    }
    combo_add(res, Q_std(w.a, l), coeff);
  }
  return res;
}

void mixed_add(MixedCombo& m, const Rat& coeff, std::vector<Word> zetas,
               std::vector<MultiCornerIndex> corners) {
  if (coeff == 0) return;
  m.terms.push_back({coeff, std::move(zetas), std::move(corners)});
}

WordCombo mixed_flatten(const MixedCombo& m) {
  WordCombo res;
  for (const auto& t : m.terms) {
    WordCombo prod = unit_combo();
    for (const auto& mc : t.corners) prod = stuffle(prod, multicorner_to_combo(mc));
    for (const auto& z : t.zetas) prod = stuffle(prod, WordCombo{{z, Rat(1)}});
    combo_add(res, prod, t.coeff);
  }
  return res;
}

WordCombo P_recursive_admissible(const std::vector<int>& k, int l) {
  const int d = (int)k.size();
  if (d < 2) throw domain_error("P_recursive_admissible: need depth >= 2");
  if (k.back() < 2) throw domain_error("P_recursive_admissible: k must be admissible");
  if (l <= 0) throw domain_error("P_recursive_admissible: need l > 0");

  WordCombo res;
  long long kpre = 0;  // k_1 + ... + k_{i-1}
  for (int i = 1; i <= d; ++i) {
    std::vector<int> left;  // (k_{i-1},...,k_1, l+1)
    for (int j = i - 1; j >= 1; --j) left.push_back(k[j - 1]);
    left.push_back(l + 1);
    std::vector<int> right(k.begin() + i, k.end());
    for (int a = 0; a < k[i - 1]; ++a) {
      WordCombo prod = stuffle(P_std(left, k[i - 1] - 1 - a), P_std(right, a));
      combo_add(res, prod, sign_pm(kpre + a));
    }
    kpre += k[i - 1];
  }
  return res;
}

MixedCombo P_recursive_nonadmissible(const std::vector<int>& k, int l) {
  const int d = (int)k.size();
  if (d < 2) throw domain_error("P_recursive_nonadmissible: need depth >= 2");
  if (k.back() != 1) throw domain_error("P_recursive_nonadmissible: need k_d = 1");
  if (l <= 0) throw domain_error("P_recursive_nonadmissible: need l > 0");
  long long wtk = 0;
  for (int x : k) wtk += x;

  MixedCombo res;
  // the same depth-reduction sum as in the admissible case
  long long kpre = 0;
  for (int i = 1; i <= d; ++i) {
    std::vector<int> left;
    for (int j = i - 1; j >= 1; --j) left.push_back(k[j - 1]);
    left.push_back(l + 1);
    std::vector<int> right(k.begin() + i, k.end());
    for (int a = 0; a < k[i - 1]; ++a) {
      WordCombo L = P_std(left, k[i - 1] - 1 - a);
      WordCombo R = P_std(right, a);
      for (const auto& [u, cu] : L)
        for (const auto& [v, cv] : R)
          mixed_add(res, sign_pm(kpre + a) * cu * cv, {u, v});
    }
    kpre += k[i - 1];
  }

  // correction terms: b = (b_0,...,b_{d-1}) with b_0 >= max(2, l+1) (the
  // binomial vanishes below), b_i = 2, the rest >= 1, of total weight
  // wt(k)+l+1; each contributes an anti-hook atom times a plain zeta
  const long long btotal = wtk + l + 1;
  std::vector<int> b(d);
  for (int i = 1; i <= d - 1; ++i) {
    b[i] = 2;
    auto emit = [&]() {
      Int base = binomial(Int(b[0] - 1), l);
      for (int j = 1; j <= d - 1; ++j) {
        if (j == i) continue;
        base *= binomial(Int(b[j] - 1), k[j - 1] - 1);
        if (base == 0) return;
      }
      long long bpre = 0;  // b_0 + ... + b_{i-1}
      for (int j = 0; j <= i - 1; ++j) bpre += b[j];
      long long btail = 0;  // b_{j+1} + ... + b_{d-1}, adjusted in the loop
      for (int j = i + 1; j <= d - 1; ++j) btail += b[j];
      for (int j = i; j <= d - 1; ++j) {
        if (j > i) btail -= b[j];
        for (int c = 1; c <= b[j] - 1; ++c) {
          MultiCornerIndex mc;
          IndexList row{c};
          for (int q = j + 1; q <= d - 1; ++q) row.push_back(b[q]);
          IndexList col;
          for (int q = i - 1; q >= 1; --q) col.push_back(b[q]);
          col.push_back(b[0]);
          mc.ll = {row};
          mc.kk = {col};
          std::vector<Word> zs;
          if (j > i) {
            Word t;
            for (int q = i + 1; q <= j - 1; ++q) t.a.push_back(b[q]);
            t.a.push_back(b[j] - c + 1);
            zs.push_back(t);
          }
          Rat sgn = sign_pm(l + d + k[i - 1] + bpre + c + j + btail);
          mixed_add(res, sgn * Rat(base), std::move(zs), {mc});
        }
      }
    };
    // enumerate the free positions 0, 1..d-1 minus {i}
    auto rec = [&](auto&& self, int pos, long long rem) -> void {
      while (pos == i) ++pos;
      if (pos >= d) {
        if (rem == 0) emit();
        return;
      }
      int slots_after = 0;
      for (int q = pos + 1; q <= d - 1; ++q)
        if (q != i) ++slots_after;
      long long lo = pos == 0 ? std::max(2, l + 1) : 1;
      for (long long v = lo; rem - v >= slots_after; ++v) {
        b[pos] = (int)v;
        self(self, pos + 1, rem - v);
      }
    };
    rec(rec, 0, btotal - 2);
  }
  return res;
}

MixedCombo P_closed_depth2(int k1, int k2, int l) {
  if (k1 < 1 || k2 < 1) throw domain_error("P_closed_depth2: need k_i >= 1");
  if (l <= 0) throw domain_error("P_closed_depth2: need l > 0");
  MixedCombo res;
  const long long W = (long long)k1 + k2 + l;
  for (long long w1 = 2; W - w1 >= 2; ++w1) {
    long long w2 = W - w1;
    Int c = binomial(Int(w1 - 1), k2 - 1) * binomial(Int(w2 - 1), l);
    if (c == 0) continue;
    mixed_add(res, sign_pm(k2 + w1) * Rat(c),
              {Word({(int)w1}), Word({(int)w2})});
  }
  for (long long w1 = 1; W - w1 >= 2; ++w1) {
    long long w2 = W - w1;
    Int c = binomial(Int(w1 - 1), k1 - 1) * binomial(Int(w2 - 1), l);
    if (c == 0) continue;
    mixed_add(res, sign_pm(k1) * Rat(c), {Word({(int)w1, (int)w2})});
  }
  if (k2 == 1) {
    MultiCornerIndex mc;
    mc.ll = {{1}};
    mc.kk = {{l + k1}};
    mixed_add(res, Rat(binomial(Int(l + k1 - 1), k1 - 1)), {}, {mc});
  }
  return res;
}

MixedCombo P_closed_depth3(int k1, int k2, int k3, int l) {
  if (k1 < 1 || k2 < 1 || k3 < 1)
    throw domain_error("P_closed_depth3: need k_i >= 1");
  if (l <= 0) throw domain_error("P_closed_depth3: need l > 0");
  MixedCombo res;
  const long long W = (long long)k1 + k2 + k3 + l;
  for (long long w1 = 1; w1 <= W; ++w1)
    for (long long w2 = 1; w1 + w2 < W; ++w2) {
      long long w3 = W - w1 - w2;
      if (w3 < 2) continue;
      Int c0 = binomial(Int(w1 - 1), k2 - 1) * binomial(Int(w3 - 1), l);
      if (c0 == 0) continue;
      Int c = c0 * binomial(Int(w2 - 1), k1 - 1);
      if (c != 0)
        mixed_add(res, sign_pm(k1 + k2) * Rat(c),
                  {Word({(int)w1, (int)w2, (int)w3})});
      if (w2 >= 2) {
        c = c0 * binomial(Int(w2 - 1), k3 - 1);
        if (c != 0)
          mixed_add(res, sign_pm(k2 + k3 + w1 + w2) * Rat(c),
                    {Word({(int)w1, (int)w2}), Word({(int)w3})});
      }
    }
  for (long long w1 = 2; w1 <= W; ++w1)
    for (long long w2 = 1; w1 + w2 < W; ++w2) {
      long long w3 = W - w1 - w2;
      if (w3 < 2) continue;
      Int c = binomial(Int(w1 - 1), k3 - 1) * binomial(Int(w2 - 1), k1 - 1) *
              binomial(Int(w3 - 1), l);
      if (c == 0) continue;
      mixed_add(res, sign_pm(k1 + k3 + w1) * Rat(c),
                {Word({(int)w1}), Word({(int)w2, (int)w3})});
    }
  if (k3 == 1) {
    const long long B = (long long)k1 + k2 + l;
    for (long long b0 = std::max(2, l + 1); B - b0 >= 1; ++b0) {
      long long b2 = B - b0;
      Int c0 = binomial(Int(b0 - 1), l);
      {
        Int c = c0 * binomial(Int(b2 - 1), k2 - 1);
        if (c != 0) {
          MultiCornerIndex mc;
          mc.ll = {{1, (int)b2}};
          mc.kk = {{(int)b0}};
          mixed_add(res, sign_pm(k2 + 1 + b2 + b2) * Rat(c), {}, {mc});
          for (long long c2 = 1; c2 <= b2 - 1; ++c2) {
            MultiCornerIndex hk;
            hk.ll = {{(int)c2}};
            hk.kk = {{(int)b0}};
            mixed_add(res, sign_pm(k2 + 1 + b2 + c2) * Rat(c),
                      {Word({(int)(b2 - c2 + 1)})}, {hk});
          }
        }
      }
      long long b1 = b2;  // second correction: same range, role of b_1
      Int c = c0 * binomial(Int(b1 - 1), k1 - 1);
      if (c != 0) {
        MultiCornerIndex mc;
        mc.ll = {{1}};
        mc.kk = {{(int)b1, (int)b0}};
        mixed_add(res, sign_pm(k1) * Rat(c), {}, {mc});
      }
    }
  }
  return res;
}

Rat sum_P_fixed_weight_depth(const std::vector<int>& n, long long k_total,
                             long long w) {
  const long long d = (long long)n.size();
  if (d < 1 || k_total < d || w < d + 1)
    throw domain_error("sum_P_fixed_weight_depth: need k >= d >= 1, w >= d+1");
  long long wtn = 0;
  for (int x : n) wtn += x;
  return Rat(binomial(Int(w - wtn), k_total - d));
}

WordCombo sum_P_fixed_weight_depth_combo(const std::vector<int>& n,
                                         long long k_total, long long w) {
  const int d = (int)n.size();
  if (d < 1 || k_total < d || w < d + 1)
    throw domain_error("sum_P_fixed_weight_depth_combo: need k >= d >= 1, w >= d+1");
  WordCombo res;
  if (w < k_total) return res;  // every P would carry l < 0: empty sums
  std::vector<int> k(d);
  auto rec = [&](auto&& self, int pos, long long rem) -> void {
    if (pos + 1 == d) {
      k[pos] = (int)rem;
      combo_add(res, P_def({n, k, (int)(w - k_total)}), Rat(1));
      return;
    }
    for (long long v = 1; rem - v >= d - pos - 1; ++v) {
      k[pos] = (int)v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, k_total);
  return res;
}

}  // namespace schurmzv
