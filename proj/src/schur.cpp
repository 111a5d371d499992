#include "schurmzv/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "schurmzv/expand.hpp"

namespace schurmzv {

namespace {

ChainSystem tableau_system(const SkewShape& d, const Filling& t) {
  auto cs = cells(d);
  if (cs.size() != t.size()) throw domain_error("filling size mismatch");
  for (long long e : t)
    if (e < 1) throw domain_error("filling entries must be >= 1");
  std::map<Cell, int> idx;
  for (std::size_t i = 0; i < cs.size(); ++i) idx[cs[i]] = (int)i;
  ChainSystem sys;
  sys.n = (int)cs.size();
  sys.expo.assign(t.begin(), t.end());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto l = idx.find({cs[i].r, cs[i].c - 1});
    if (l != idx.end()) sys.weak.push_back({l->second, (int)i});
    auto u = idx.find({cs[i].r - 1, cs[i].c});
    if (u != idx.end()) sys.strict.push_back({u->second, (int)i});
  }
  return sys;
}

// nested-loop evaluation of the truncated sum of a chain system (oracle;
// exponential in the variable count, intended for small cutoffs only)
Rat system_trunc_direct(const ChainSystem& sys, long long M) {
  int n = sys.n;
  std::vector<std::uint32_t> wpred(n, 0), spred(n, 0);
  for (auto& [a, b] : sys.weak) wpred[b] |= 1u << a;
  for (auto& [a, b] : sys.strict) spred[b] |= 1u << a;
  std::vector<int> order;
  std::uint32_t placed = 0;
  while ((int)order.size() < n) {
    bool advanced = false;
    for (int v = 0; v < n; ++v) {
      if (placed >> v & 1) continue;
      if (((wpred[v] | spred[v]) & ~placed) == 0) {
        order.push_back(v);
        placed |= 1u << v;
        advanced = true;
      }
    }
    if (!advanced) throw domain_error("cyclic chain system");
  }
  std::vector<long long> val(n, 0);
  Rat total = 0;
  std::function<void(int, const Rat&)> go = [&](int pos, const Rat& cur) {
    if (pos == n) {
      total += cur;
      return;
    }
    int v = order[pos];
    long long lo = 1;
    for (int u = 0; u < n; ++u) {
      if (wpred[v] >> u & 1) lo = std::max(lo, val[u]);
      if (spred[v] >> u & 1) lo = std::max(lo, val[u] + 1);
    }
    for (long long x = lo; x <= M - 1; ++x) {
      val[v] = x;
      Rat f = cur;
      for (long long e = 0; e < sys.expo[v]; ++e) f /= x;
      go(pos + 1, f);
    }
  };
  go(0, Rat(1));
  return total;
}

ChainSystem multicorner_system(const std::vector<IndexList>& ll,
                               const std::vector<IndexList>& kk) {
  if (ll.size() != kk.size() || ll.empty())
    throw domain_error("multicorner: block count mismatch");
  std::size_t nb = ll.size();
  int total = 0;
  std::vector<int> bbase(nb), abase(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    for (int e : ll[i])
      if (e < 1) throw domain_error("multicorner: row index entries must be >= 1");
    if (kk[i].empty()) throw domain_error("multicorner: empty column index");
    for (int e : kk[i])
      if (e < 1) throw domain_error("multicorner: column index entries must be >= 1");
    if (kk[i].back() < 2)
      throw domain_error("multicorner: column index must end with an entry >= 2");
    bbase[i] = total;
    total += (int)ll[i].size();
    abase[i] = total;
    total += (int)kk[i].size();
  }
  ChainSystem sys;
  sys.n = total;
  sys.expo.assign(total, 0);
  for (std::size_t i = 0; i < nb; ++i) {
    int s = (int)ll[i].size(), r = (int)kk[i].size();
    for (int q = 0; q < s; ++q) {
      sys.expo[bbase[i] + q] = ll[i][q];
      if (q > 0) sys.weak.push_back({bbase[i] + q - 1, bbase[i] + q});
    }
    for (int q = 0; q < r; ++q) {
      sys.expo[abase[i] + q] = kk[i][q];
      if (q > 0) sys.strict.push_back({abase[i] + q - 1, abase[i] + q});
    }
    if (s > 0) sys.weak.push_back({bbase[i] + s - 1, abase[i] + r - 1});
    if (i + 1 < nb) {
      int v = ll[i + 1].empty() ? abase[i + 1] + (int)kk[i + 1].size() - 1
                                : bbase[i + 1];
      sys.strict.push_back({v, abase[i]});
    }
  }
  return sys;
}

}  // namespace

WordCombo schur_to_combo(const SkewShape& d, const Filling& t) {
  return expand_to_combo(tableau_system(d, t));
}

Rat schur_trunc_direct(const SkewShape& d, const Filling& t, long long M) {
  if (M < 0) throw domain_error("negative cutoff");
  if (M > 1000) throw domain_error("cutoff too large for the direct sum");
  return schur_trunc_direct_batch(d, {t}, (int)M)[0][M];
}

std::vector<std::vector<Rat>> schur_trunc_direct_batch(
    const SkewShape& d, const std::vector<Filling>& ts, int Mmax) {
  if (Mmax < 0) throw domain_error("negative cutoff");
  auto cs = cells(d);
  std::size_t n = cs.size(), nf = ts.size();
  for (auto& t : ts) {
    if (t.size() != n) throw domain_error("filling size mismatch");
    for (long long e : t)
      if (e < 1) throw domain_error("filling entries must be >= 1");
  }
  std::vector<std::vector<Rat>> res(nf, std::vector<Rat>(Mmax + 1, Rat(1)));
  if (n == 0 || nf == 0) return res;

  std::map<Cell, int> idx;
  for (std::size_t i = 0; i < n; ++i) idx[cs[i]] = (int)i;
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{(int)i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      Cell c = cs[stack.back()];
      stack.pop_back();
      for (Cell nb : {Cell{c.r, c.c - 1}, Cell{c.r, c.c + 1}, Cell{c.r - 1, c.c},
                      Cell{c.r + 1, c.c}}) {
        auto it = idx.find(nb);
        if (it != idx.end() && comp[it->second] < 0) {
          comp[it->second] = ncomp;
          stack.push_back(it->second);
        }
      }
    }
    ++ncomp;
  }

  // Every admissible entry divides L, so each factor (L/v)^e is an integer
  // and the whole inner loop runs in scaled integers over one denominator.
  Int L = 1;
  for (long long v = 2; v <= Mmax - 1; ++v)
    L = boost::multiprecision::lcm(L, Int(v));

  for (int cc = 0; cc < ncomp; ++cc) {
    std::vector<int> loc;  // row-major order, so left/up neighbours precede
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == cc) loc.push_back((int)i);
    int m = (int)loc.size();
    std::map<int, int> g2l;
    for (int q = 0; q < m; ++q) g2l[loc[q]] = q;
    std::vector<int> leftp(m, -1), upp(m, -1);
    for (int q = 0; q < m; ++q) {
      Cell c = cs[loc[q]];
      auto it = idx.find({c.r, c.c - 1});
      if (it != idx.end()) leftp[q] = g2l.at(it->second);
      it = idx.find({c.r - 1, c.c});
      if (it != idx.end()) upp[q] = g2l.at(it->second);
    }
    int vmax = std::max(Mmax, 1);
    std::vector<std::vector<Int>> step(nf), bucket(nf, std::vector<Int>(vmax, 0));
    for (std::size_t f = 0; f < nf; ++f) {
      step[f].assign((std::size_t)m * vmax, Int(0));
      for (int q = 0; q < m; ++q)
        for (long long v = 1; v <= Mmax - 1; ++v)
          step[f][(std::size_t)q * vmax + v] =
              boost::multiprecision::pow(L / v, (unsigned)ts[f][loc[q]]);
    }
    std::vector<std::vector<Int>> prod(m + 1, std::vector<Int>(nf, Int(1)));
    std::vector<long long> val(m, 0);
    std::function<void(int, long long)> go = [&](int q, long long curmax) {
      if (q == m) {
        for (std::size_t f = 0; f < nf; ++f) bucket[f][curmax] += prod[q][f];
        return;
      }
      long long lo = 1;
      if (leftp[q] >= 0) lo = std::max(lo, val[leftp[q]]);
      if (upp[q] >= 0) lo = std::max(lo, val[upp[q]] + 1);
      for (long long v = lo; v <= Mmax - 1; ++v) {
        val[q] = v;
        for (std::size_t f = 0; f < nf; ++f)
          prod[q + 1][f] = prod[q][f] * step[f][(std::size_t)q * vmax + v];
        go(q + 1, std::max(curmax, v));
      }
    };
    go(0, 0);
    for (std::size_t f = 0; f < nf; ++f) {
      long long W = 0;
      for (int q = 0; q < m; ++q) W += ts[f][loc[q]];
      Int D = boost::multiprecision::pow(L, (unsigned)W);
      Int acc = 0;
      for (int M = 0; M <= Mmax; ++M) {
        if (M >= 2) acc += bucket[f][M - 1];
        res[f][M] *= Rat(acc, D);
      }
    }
  }
  return res;
}

EvalResult schur_numeric(const SkewShape& d, const Filling& t, double tol) {
  return eval_combo(schur_to_combo(d, t), tol);
}

WordCombo multicorner_to_combo(const std::vector<IndexList>& ll,
                               const std::vector<IndexList>& kk) {
  return expand_to_combo(multicorner_system(ll, kk));
}

Rat multicorner_trunc(const std::vector<IndexList>& ll,
                      const std::vector<IndexList>& kk, long long M) {
  return mzv_trunc_combo(multicorner_to_combo(ll, kk), M);
}

Rat multicorner_trunc_direct(const std::vector<IndexList>& ll,
                             const std::vector<IndexList>& kk, long long M) {
  if (M < 0) throw domain_error("negative cutoff");
  if (M > 60) throw domain_error("cutoff too large for the direct sum");
  return system_trunc_direct(multicorner_system(ll, kk), M);
}

EvalResult multicorner_numeric(const std::vector<IndexList>& ll,
                               const std::vector<IndexList>& kk, double tol) {
  return eval_combo(multicorner_to_combo(ll, kk), tol);
}

WordCombo sw_spec_combo(const RibbonSpec& sp, long long w) {
  std::size_t nb = sp.r.size();
  if (sp.s.size() != nb || nb == 0) throw domain_error("bad ribbon spec");
  for (std::size_t i = 0; i < nb; ++i)
    if (sp.s[i] < 0 || sp.r[i] < 1) throw domain_error("bad ribbon spec");
  // one slot per summation index; column-corner slots need >= 2
  struct Slot {
    std::size_t block;
    bool row;
    int pos;
    long long min;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < nb; ++i) {
    for (int q = 0; q < sp.s[i]; ++q) slots.push_back({i, true, q, 1});
    for (int q = 0; q + 1 < sp.r[i]; ++q) slots.push_back({i, false, q, 1});
    slots.push_back({i, false, (int)sp.r[i] - 1, 2});
  }
  std::vector<long long> tailmin(slots.size() + 1, 0);
  for (std::size_t p = slots.size(); p-- > 0;)
    tailmin[p] = tailmin[p + 1] + slots[p].min;
  WordCombo out;
  if (w < tailmin[0]) return out;
  std::vector<IndexList> ll(nb), kk(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    ll[i].assign(sp.s[i], 1);
    kk[i].assign(sp.r[i], 1);
  }
  std::function<void(std::size_t, long long)> go = [&](std::size_t pos,
                                                       long long rem) {
    if (pos == slots.size()) {
      if (rem == 0) combo_add(out, multicorner_to_combo(ll, kk));
      return;
    }
    const Slot& sl = slots[pos];
    for (long long v = sl.min; v <= rem - tailmin[pos + 1]; ++v) {
      (sl.row ? ll[sl.block][sl.pos] : kk[sl.block][sl.pos]) = (int)v;
      go(pos + 1, rem - v);
    }
  };
  go(0, w);
  return out;
}

Rat sw_spec_trunc(const RibbonSpec& sp, long long w, long long M) {
  return mzv_trunc_combo(sw_spec_combo(sp, w), M);
}

EvalResult sw_spec_numeric(const RibbonSpec& sp, long long w, double tol) {
  return eval_combo(sw_spec_combo(sp, w), tol);
}

WordCombo sw_bruteforce_combo(const SkewShape& d, long long w) {
  WordCombo out;
  for (const Filling& t : enumerate_admissible_fillings(d, w))
    combo_add(out, schur_to_combo(d, t));
  return out;
}

EvalResult sw_bruteforce_numeric(const SkewShape& d, long long w, double tol) {
  return eval_combo(sw_bruteforce_combo(d, w), tol);
}

}  // namespace schurmzv
