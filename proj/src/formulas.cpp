#include "schurmzv/formulas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "schurmzv/mzv.hpp"

namespace schurmzv {

namespace {

int sgn(long long parity) { return (parity % 2 == 0) ? 1 : -1; }

Word single(long long w) { return Word({(int)w}); }

void check_spec(const RibbonSpec& sp) {
  if (sp.s.size() != sp.r.size() || sp.s.empty())
    throw domain_error("bad ribbon spec");
  for (std::size_t i = 0; i < sp.s.size(); ++i)
    if (sp.s[i] < 0 || sp.r[i] < 1) throw domain_error("bad ribbon spec");
}

std::string spec_params(const RibbonSpec& sp) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < sp.s.size(); ++i)
    os << (i ? "," : "") << sp.s[i];
  os << "\\";
  for (std::size_t i = 0; i < sp.r.size(); ++i)
    os << (i ? "," : "") << sp.r[i];
  os << "]";
  return os.str();
}

}  // namespace

WordCombo ZetaMultiple::to_combo() const {
  WordCombo c;
  combo_add(c, single(w), coeff);
  return c;
}

long long spec_min_weight(const RibbonSpec& sp) {
  check_spec(sp);
  long long m = (long long)sp.s.size();
  for (int v : sp.s) m += v;
  for (int v : sp.r) m += v;
  return m;
}

ZetaMultiple anti_hook_formula(int s, int r, long long w) {
  if (s < 0 || r < 1) throw domain_error("anti_hook_formula: need s >= 0, r >= 1");
  if (w < s + r + 1)
    throw domain_error("anti_hook_formula: weight below threshold s+r+1");
  return {Rat(binomial(w - 1, s)), w};
}

ZetaMultiple stair_formula(int r, int n, long long w) {
  if (r < 1 || n < 1) throw domain_error("stair_formula: need r, n >= 1");
  if (w < (long long)(r + 2) * n + 1)
    throw domain_error("stair_formula: weight below threshold (r+2)n+1");
  Rat c = Rat(w - 1, n) * binomial(w - (long long)(r + 1) * n - 2, n - 1);
  return {c, w};
}

Rat stair_coeff_integral(int r, int n, long long w) {
  if (r < 1 || n < 1) throw domain_error("stair_coeff_integral: need r, n >= 1");
  if (w < (long long)(r + 2) * n + 1)
    throw domain_error("stair_coeff_integral: weight below threshold (r+2)n+1");
  long long base = w - (long long)(r + 1) * n;
  return Rat((r + 1) * binomial(base - 2, n - 1) + binomial(base - 1, n));
}

RibbonSpec stair_spec(int r, int n) {
  if (r < 1 || n < 1) throw domain_error("stair_spec: need r, n >= 1");
  RibbonSpec sp;
  sp.s.assign(n, 1);
  sp.r.assign(n, r);
  sp.r[n - 1] = r + 1;
  return sp;
}

WordCombo s00_formula(int s, const std::vector<int>& r, long long w) {
  if (s < 0 || r.empty()) throw domain_error("s00_formula: need s >= 0, nonempty r");
  for (int v : r)
    if (v < 1) throw domain_error("s00_formula: column runs must be positive");
  int n = (int)r.size();
  // tail[i] = minimal weight of positions i..n-1 with all t_j = 0
  std::vector<long long> tail(n + 1, 0);
  for (int i = n; i-- > 0;) tail[i] = tail[i + 1] + r[i] + 1;
  WordCombo out;
  std::vector<int> word(n);
  std::function<void(int, int, long long, Rat)> rec = [&](int i, int s_rem,
                                                          long long w_rem,
                                                          Rat coeff) {
    if (i == n - 1) {
      long long wi = w_rem;
      if (wi < r[i] + s_rem + 1) return;
      word[i] = (int)wi;
      combo_add(out, Word(word), coeff * binomial(wi - 1, s_rem));
      return;
    }
    for (int ti = 0; ti <= s_rem; ++ti) {
      long long lo = r[i] + ti + 1;
      long long hi = w_rem - tail[i + 1] - (s_rem - ti);
      for (long long wi = lo; wi <= hi; ++wi) {
        word[i] = (int)wi;
        rec(i + 1, s_rem - ti, w_rem - wi, coeff * binomial(wi - 1, ti));
      }
    }
  };
  rec(0, s, w, 1);
  return out;
}

namespace {

std::map<std::string, WordCombo> g_ribbon_memo;
std::mutex g_ribbon_mutex;

std::string ribbon_key(const RibbonSpec& sp, long long w) {
  std::ostringstream os;
  os << spec_params(sp) << "@" << w;
  return os.str();
}

}  // namespace

WordCombo ribbon_sw_combo(const RibbonSpec& sp, long long w) {
  check_spec(sp);
  if (w < spec_min_weight(sp)) return {};
  std::string key = ribbon_key(sp, w);
  {
    std::lock_guard<std::mutex> lock(g_ribbon_mutex);
    auto it = g_ribbon_memo.find(key);
    if (it != g_ribbon_memo.end()) return it->second;
  }
  int n = (int)sp.s.size();
  int b = -1;  // first block past the first with a row run
  for (int i = 1; i < n; ++i)
    if (sp.s[i] > 0) {
      b = i;
      break;
    }
  WordCombo out;
  if (b < 0) {
    out = s00_formula(sp.s[0], sp.r, w);
  } else {
    // S_w[s;r] = sum_{w1+w2=w} S_{w1}[prefix] S_{w2}[suffix] - S_w[merged]
    // where prefix/suffix split the merged spec [s-e_b; r+e_{b-1}] at b.
    RibbonSpec merged = sp;
    merged.s[b] -= 1;
    merged.r[b - 1] += 1;
    RibbonSpec pre{{merged.s.begin(), merged.s.begin() + b},
                   {merged.r.begin(), merged.r.begin() + b}};
    RibbonSpec suf{{merged.s.begin() + b, merged.s.end()},
                   {merged.r.begin() + b, merged.r.end()}};
    long long lo = spec_min_weight(pre), hi = w - spec_min_weight(suf);
    for (long long w1 = lo; w1 <= hi; ++w1)
      combo_add(out, stuffle(ribbon_sw_combo(pre, w1),
                             ribbon_sw_combo(suf, w - w1)));
    combo_add(out, ribbon_sw_combo(merged, w), -1);
  }
  std::lock_guard<std::mutex> lock(g_ribbon_mutex);
  return g_ribbon_memo.emplace(std::move(key), std::move(out)).first->second;
}

FormulaReport inductive_reduction_check(const RibbonSpec& sp, int i,
                                        long long w, long long M, double tol) {
  check_spec(sp);
  int n = (int)sp.s.size();
  if (i < 1 || i > n - 1)
    throw domain_error("inductive_reduction_check: need 1 <= i <= n-1");
  if (sp.r[i - 1] < 2)
    throw domain_error("inductive_reduction_check: needs r_i >= 2");
  RibbonSpec merged = sp;
  merged.s[i] += 1;
  merged.r[i - 1] -= 1;
  RibbonSpec pre{{sp.s.begin(), sp.s.begin() + i},
                 {sp.r.begin(), sp.r.begin() + i}};
  RibbonSpec suf{{sp.s.begin() + i, sp.s.end()},
                 {sp.r.begin() + i, sp.r.end()}};
  long long lo = spec_min_weight(pre), hi = w - spec_min_weight(suf);
  // exact split of the linking inequality at cutoff M
  Rat lhs_t = sw_spec_trunc(sp, w, M) + sw_spec_trunc(merged, w, M);
  Rat rhs_t = 0;
  for (long long w1 = lo; w1 <= hi; ++w1)
    rhs_t += sw_spec_trunc(pre, w1, M) * sw_spec_trunc(suf, w - w1, M);
  bool exact = (lhs_t == rhs_t);
  WordCombo lhs = sw_spec_combo(sp, w);
  combo_add(lhs, sw_spec_combo(merged, w));
  WordCombo rhs;
  for (long long w1 = lo; w1 <= hi; ++w1)
    combo_add(rhs, stuffle(sw_spec_combo(pre, w1), sw_spec_combo(suf, w - w1)));
  std::ostringstream os;
  os << spec_params(sp) << " i=" << i << " w=" << w << " M=" << M
     << (exact ? " exact=yes" : " exact=NO");
  FormulaReport rep = make_report(eval_combo(lhs, tol / 2),
                                  eval_combo(rhs, tol / 2), tol, os.str());
  rep.passed = rep.passed && exact;
  return rep;
}

namespace {

void check_two_corner(int s1, int s2, int r1, int r2, long long w,
                      const char* who) {
  if (s1 < 0 || s2 < 0 || r1 < 1 || r2 < 1)
    throw domain_error(std::string(who) + ": need s_i >= 0, r_i >= 1");
  if (w < s1 + s2 + r1 + r2 + 2)
    throw domain_error(std::string(who) + ": weight below threshold total+2");
}

}  // namespace

MixedCombo two_corner_prelim(int s1, int s2, int r1, int r2, long long w) {
  check_two_corner(s1, s2, r1, r2, w, "two_corner_prelim");
  MixedCombo out;
  for (int i = 0; i < s2; ++i)
    for (long long w1 = s1 + s2 + r1 - i + 1; w1 <= w - (r2 + i + 1); ++w1) {
      long long w2 = w - w1;
      Rat c = Rat(sgn(s2 - i - 1)) * binomial(w1 - 1, s1) * binomial(w2 - 1, i);
      if (c != 0) mixed_add(out, c, {single(w1), single(w2)});
    }
  for (int t1 = 0; t1 <= s1; ++t1) {
    int t2 = s1 - t1;
    for (long long w1 = s2 + r1 + t1 + 1; w1 <= w - (r2 + t2 + 1); ++w1) {
      long long w2 = w - w1;
      Rat c = Rat(sgn(s2)) * binomial(w1 - 1, t1) * binomial(w2 - 1, t2);
      if (c != 0) mixed_add(out, c, {Word({(int)w1, (int)w2})});
    }
  }
  return out;
}

Rat two_corner_C(int s1, int s2, long long w1, long long w2) {
  Rat c = 0;
  long long lo = std::max<long long>(0, w1 - s2);
  long long hi = std::min<long long>(s1, w1 - 1);
  for (long long i = lo; i <= hi; ++i)
    c += Rat(sgn(s2)) * binomial(w1 - 1, i) * binomial(w2 - 1, s1 - i);
  c -= Rat(sgn(s1)) * binomial(w1 - 1, s1) * binomial(w2 - 2, s1 + s2 - w1);
  return c;
}

Rat two_corner_A(int s1, int s2, int r1, int r2, long long w1, long long w2) {
  Rat a = Rat(sgn(w1)) * two_corner_C(s1, s2, w1, w2);
  Rat base = Rat(binomial(w1 - 1, s1));
  if (w1 <= s1 + r1 || w2 <= s2 + r2 - 1)
    a -= base * binomial(w2 - 2, (long long)s2 - 1);
  if (w1 > s1 + r1)
    a += Rat(sgn(s1 + r1 + w1)) * base * binomial(w2 - 2, s1 + s2 + r1 - w1);
  if (r2 < w2 && w2 <= s2 + r2 - 1)
    a += Rat(sgn(s2 + r2 + w2)) * base * binomial(w2 - 2, (long long)r2 - 1);
  return a;
}

Rat two_corner_B(int s1, int s2, int r1, int r2, long long w1, long long w2) {
  Rat b = two_corner_C(s1, s2, w1, w2);
  for (int t1 = 0; t1 <= s1; ++t1) {
    int t2 = s1 - t1;
    if (t1 >= w1 - (s2 + r1) || t2 >= w2 - r2)
      b -= Rat(sgn(s2)) * binomial(w1 - 1, t1) * binomial(w2 - 1, t2);
  }
  return b;
}

MixedCombo two_corner_formula(int s1, int s2, int r1, int r2, long long w) {
  check_two_corner(s1, s2, r1, r2, w, "two_corner_formula");
  MixedCombo out;
  mixed_add(out, Rat(binomial(w - 2, s1 + s2)), {single(w)});
  for (long long w1 = 2; w1 <= w - 2; ++w1) {
    Rat a = two_corner_A(s1, s2, r1, r2, w1, w - w1);
    if (a != 0) mixed_add(out, a, {single(w1), single(w - w1)});
  }
  for (long long w1 = 1; w1 <= w - 2; ++w1) {
    Rat b = two_corner_B(s1, s2, r1, r2, w1, w - w1);
    if (b != 0) mixed_add(out, b, {Word({(int)w1, (int)(w - w1)})});
  }
  return out;
}

MixedCombo hook_formula(int s, int r, long long w) {
  if (s < 1 || r < 1) throw domain_error("hook_formula: need s, r >= 1");
  if (w < s + r + 2)
    throw domain_error("hook_formula: weight below threshold s+r+2");
  MixedCombo out;
  mixed_add(out, Rat(binomial(w - 2, (long long)s - 1)), {single(w)});
  for (long long k = 1; k <= s - 1; ++k)
    mixed_add(out, -Rat(binomial(w - k - 2, s - k - 1)),
              {Word({(int)k, (int)(w - k)})});
  for (long long k = s; k <= s + r - 1; ++k)
    mixed_add(out, Rat(sgn(s)), {Word({(int)k, (int)(w - k)})});
  for (long long k = 2; k <= s - 1; ++k)
    mixed_add(out, -Rat(sgn(k)) * binomial(w - k - 2, s - k - 1),
              {single(k), single(w - k)});
  for (long long k = 2; k <= r; ++k)
    mixed_add(out, -Rat(binomial(w - k - 2, (long long)s - 2)),
              {single(k), single(w - k)});
  for (long long k = r + 1; k <= s + r - 1; ++k)
    mixed_add(out, Rat(sgn(r)) * sgn(k) * binomial(w - k - 2, r + s - 1 - k),
              {single(k), single(w - k)});
  return out;
}

MixedCombo sw_closed_22(long long w) {
  if (w < 5) throw domain_error("sw_closed_22: need w >= 5");
  MixedCombo out;
  mixed_add(out, Rat(2 - w), {Word({1, (int)(w - 1)})});
  mixed_add(out, Rat(w - 4), {Word({2, (int)(w - 2)})});
  mixed_add(out, 2, {Word({3, (int)(w - 3)})});
  mixed_add(out, -2, {single(3), single(w - 3)});
  mixed_add(out, Rat(w - 2), {single(2), single(w - 2)});
  return out;
}

MixedCombo sw_closed_33_1(long long w) {
  if (w < 6) throw domain_error("sw_closed_33_1: need w >= 6");
  MixedCombo out;
  mixed_add(out, Rat(binomial(w - 2, 2)), {single(2), single(w - 2)});
  mixed_add(out, Rat(-5, 4), {single(4), single(w - 4)});
  mixed_add(out, 1, {single(2), Word({2, (int)(w - 4)})});
  mixed_add(out, -1, {single(2), Word({1, (int)(w - 3)})});
  mixed_add(out, -Rat(binomial(w - 2, 2)), {Word({1, (int)(w - 1)})});
  mixed_add(out, Rat(binomial(w - 3, 2)), {Word({2, (int)(w - 2)})});
  mixed_add(out, Rat(w - 3), {Word({3, (int)(w - 3)})});
  mixed_add(out, Rat(w - 3), {Word({1, 1, (int)(w - 2)})});
  mixed_add(out, Rat(5 - w), {Word({1, 2, (int)(w - 3)})});
  mixed_add(out, -2, {Word({1, 3, (int)(w - 4)})});
  mixed_add(out, 1, {Word({2, 1, (int)(w - 3)})});
  mixed_add(out, -1, {Word({2, 2, (int)(w - 4)})});
  return out;
}

MixedCombo sw_closed_222_1(long long w) {
  if (w < 6) throw domain_error("sw_closed_222_1: need w >= 6");
  MixedCombo out;
  mixed_add(out, Rat(w - 2), {single(2), single(w - 2)});
  mixed_add(out, Rat(w - 5), {single(3), single(w - 3)});
  mixed_add(out, Rat(-5, 4), {single(4), single(w - 4)});
  mixed_add(out, -1, {single(2), Word({1, (int)(w - 3)})});
  mixed_add(out, 1, {single(2), Word({2, (int)(w - 4)})});
  mixed_add(out, Rat(2 - w), {Word({1, (int)(w - 1)})});
  mixed_add(out, Rat(w - 4), {Word({2, (int)(w - 2)})});
  mixed_add(out, 2, {Word({3, (int)(w - 3)})});
  mixed_add(out, Rat(w - 3), {Word({1, 1, (int)(w - 2)})});
  mixed_add(out, Rat(5 - w), {Word({1, 2, (int)(w - 3)})});
  mixed_add(out, -2, {Word({1, 3, (int)(w - 4)})});
  mixed_add(out, 1, {Word({2, 1, (int)(w - 3)})});
  mixed_add(out, -1, {Word({2, 2, (int)(w - 4)})});
  return out;
}

WordCombo one_corner_sum(const SkewShape& d, long long w) {
  if (corners(d).size() != 1)
    throw domain_error("one_corner_sum: shape must have exactly one corner");
  long long cells = num_cells(d);
  if (w <= cells) throw domain_error("one_corner_sum: need w > |cells|");
  return Q_on_combo(phi_via_jacobi_trudi(d), (int)(w - cells));
}

WordCombo OneCornerStages::total() const {
  WordCombo t = collapsed;
  combo_add(t, remainder);
  return t;
}

OneCornerStages one_corner_stages(const SkewShape& d, long long w) {
  if (corners(d).size() != 1)
    throw domain_error("one_corner_stages: shape must have exactly one corner");
  long long cells = num_cells(d);
  if (w <= cells) throw domain_error("one_corner_stages: need w > |cells|");
  OneCornerStages st;
  st.phi = phi_via_jacobi_trudi(d);
  st.l = (int)(w - cells);
  std::map<std::pair<long long, int>, std::vector<std::pair<Word, Rat>>> fam;
  for (const auto& [word, c] : st.phi)
    fam[{word.weight(), word.depth()}].push_back({word, c});
  for (const auto& [key, members] : fam) {
    auto [K, dep] = key;
    bool full = Int((long long)members.size()) == binomial(K - 1, (long long)dep - 1);
    bool flat = true;
    for (const auto& m : members) flat = flat && (m.second == members[0].second);
    if (full && flat) {
      long long ww = K + st.l;
      combo_add(st.collapsed, single(ww),
                members[0].second * binomial(ww - dep - 1, K - dep));
    } else {
      for (const auto& [word, c] : members)
        combo_add(st.remainder, Q_std(word.a, st.l), c);
    }
  }
  return st;
}

WordCombo sw_value_combo(const SkewShape& d, long long w) {
  long long cells = num_cells(d);
  if (cells == 0) return w == 0 ? unit_combo() : WordCombo{};
  if (w < cells + (long long)corners(d).size()) return {};
  if (corners(d).size() == 1) return one_corner_sum(d, w);
  if (is_ribbon(d)) return ribbon_sw_combo(ribbon_to_spec(d), w);
  return sw_bruteforce_combo(d, w);
}

FormulaReport sw_relation_check(const SkewShape& d, long long w, double tol) {
  OneCornerForm f = one_corner_canonical(d);
  long long cells = num_cells(d);
  if (w <= cells + 1)
    throw domain_error("sw_relation_check: need w > |cells|+1");
  WordCombo lhs;
  for (const auto& md : mu_decrement_set(f))
    combo_add(lhs, one_corner_sum(md.shape, w), Rat(md.coeff));
  WordCombo rhs = combo_scaled(one_corner_sum(d, w), Rat(w - cells - 1));
  bool exact = (lhs == rhs);
  std::ostringstream os;
  os << "shape=" << shape_to_string(d) << " w=" << w
     << (exact ? " exact=yes" : " exact=NO");
  FormulaReport rep = make_report(eval_combo(lhs, tol / 2),
                                  eval_combo(rhs, tol / 2), tol, os.str());
  rep.passed = rep.passed && exact;
  return rep;
}

WordCombo symmetric_sum_closed_n2(int s, int r1, int r2, long long w) {
  if (s < 0 || r1 < 1 || r2 < 1)
    throw domain_error("symmetric_sum_closed_n2: need s >= 0, r_i >= 1");
  WordCombo out;
  for (int t1 = 0; t1 <= s; ++t1) {
    int t2 = s - t1;
    for (long long w1 = r1 + t1 + 1; w1 <= w - (r2 + t2 + 1); ++w1) {
      long long w2 = w - w1;
      Rat c = Rat(binomial(w1 - 1, t1)) * binomial(w2 - 1, t2);
      if (c == 0) continue;
      combo_add(out, stuffle(single(w1), single(w2)), c);
      combo_add(out, single(w), -c);
    }
  }
  return out;
}

FormulaReport symmetric_sum_check(int s, const std::vector<int>& r,
                                  long long w, double tol) {
  if (s < 0 || r.empty())
    throw domain_error("symmetric_sum_check: need s >= 0, nonempty r");
  for (int v : r)
    if (v < 1) throw domain_error("symmetric_sum_check: column runs must be positive");
  int n = (int)r.size();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  WordCombo lhs;
  std::vector<std::vector<int>> perms;
  do {
    std::vector<int> rp(n);
    for (int i = 0; i < n; ++i) rp[i] = r[idx[i]];
    perms.push_back(rp);
    combo_add(lhs, s00_formula(s, rp, w));
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::ostringstream os;
  os << "s=" << s << " r=(";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << r[i];
  os << ") w=" << w;
  if (n <= 2) {
    WordCombo rhs = n == 1 ? s00_formula(s, r, w)
                           : symmetric_sum_closed_n2(s, r[0], r[1], w);
    bool exact = (lhs == rhs);
    os << (exact ? " exact=yes" : " exact=NO");
    FormulaReport rep = make_report(eval_combo(lhs, tol / 2),
                                    eval_combo(rhs, tol / 2), tol, os.str());
    rep.passed = rep.passed && exact;
    return rep;
  }
  WordCombo rhs;
  for (const auto& rp : perms) {
    RibbonSpec sp;
    sp.s.assign(n, 0);
    sp.s[0] = s;
    sp.r = rp;
    combo_add(rhs, sw_spec_combo(sp, w));
  }
  return make_report(eval_combo(lhs, tol / 2), eval_combo(rhs, tol / 2), tol,
                     os.str());
}

FormulaReport single_zeta_poly_check(int s1, int s2, int r1, long long w,
                                     double tol) {
  int r2 = s2 + r1;
  MixedCombo pre = two_corner_prelim(s1, s2, r1, r2, w);
  std::map<std::pair<int, int>, Rat> band;
  MixedCombo poly;
  for (const auto& t : pre.terms) {
    if (t.zetas.size() == 1 && t.zetas[0].depth() == 2)
      band[{t.zetas[0].a[0], t.zetas[0].a[1]}] += t.coeff;
    else
      poly.terms.push_back(t);
  }
  bool symmetric = true;
  for (const auto& [key, c] : band) {
    auto it = band.find({key.second, key.first});
    symmetric = symmetric && it != band.end() && it->second == c;
  }
  for (const auto& [key, c] : band) {
    mixed_add(poly, c / 2, {single(key.first), single(key.second)});
    mixed_add(poly, -c / 2, {single(key.first + key.second)});
  }
  std::ostringstream os;
  os << "s=(" << s1 << "," << s2 << ") r=(" << r1 << "," << r2 << ") w=" << w
     << (symmetric ? " depth2=symmetric" : " depth2=ASYMMETRIC");
  FormulaReport rep = make_report(eval_combo(mixed_flatten(pre), tol / 2),
                                  eval_combo(mixed_flatten(poly), tol / 2),
                                  tol, os.str());
  rep.passed = rep.passed && symmetric;
  return rep;
}

}  // namespace schurmzv
