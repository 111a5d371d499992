#include "schurmzv/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>
#include <utility>

#include "schurmzv/formulas.hpp"
#include "schurmzv/schur.hpp"
#include "schurmzv/shapes.hpp"
#include "schurmzv/weighted.hpp"
#include "schurmzv/words.hpp"

namespace schurmzv {

FormulaReport make_report(const EvalResult& lhs, const EvalResult& rhs,
                          double tol, std::string params) {
  FormulaReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::fabs(lhs.value - rhs.value);
  r.passed = r.abs_diff <= lhs.err + rhs.err + tol;
  r.params = std::move(params);
  return r;
}

namespace {

using Reports = std::vector<FormulaReport>;

double tol_or(const VerifyOptions& opt, double fallback) {
  return opt.tol > 0 ? opt.tol : fallback;
}

// user range intersected with [lo, hi]; lo stays a hard floor (thresholds)
std::pair<long long, long long> range_or(const VerifyOptions& opt,
                                         long long lo, long long hi) {
  if (opt.w_lo > 0) {
    lo = std::max(lo, opt.w_lo);
    hi = opt.w_hi > 0 ? opt.w_hi : opt.w_lo;
  }
  return {lo, hi};
}

WordCombo zeta_mult(long long w, const Rat& c) {
  WordCombo out;
  combo_add(out, Word({(int)w}), c);
  return out;
}

// all admissible words of the given weight and depth, coefficient 1
WordCombo full_family(int wt, int dep) {
  WordCombo out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int left) -> void {
    if (left == 1) {
      if (rem >= 2) {
        cur.push_back(rem);
        combo_add(out, Word(cur), 1);
        cur.pop_back();
      }
      return;
    }
    for (int v = 1; v + (left - 1) <= rem; ++v) {
      cur.push_back(v);
      self(self, rem - v, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, wt, dep);
  return out;
}

// the star value of one index: contract any subset of the d-1 gaps
WordCombo star_expand(const Word& k) {
  WordCombo out;
  int d = k.depth();
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<int> m;
    int acc = k.a[0];
    for (int j = 1; j < d; ++j) {
      if (mask & (1u << (j - 1))) {
        acc += k.a[j];
      } else {
        m.push_back(acc);
        acc = k.a[j];
      }
    }
    m.push_back(acc);
    combo_add(out, Word(m), 1);
  }
  return out;
}

FormulaReport compare(const WordCombo& lhs, const WordCombo& rhs, double tol,
                      const std::string& params) {
  return make_report(eval_combo(lhs, tol / 2), eval_combo(rhs, tol / 2), tol,
                     params);
}

Reports check_mzv_sum(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  Reports out;
  std::vector<int> depths = opt.n > 0 ? std::vector<int>{opt.n}
                                      : std::vector<int>{1, 2, 3};
  for (int d : depths) {
    auto [lo, hi] = range_or(opt, d + 1, 9);
    for (long long w = lo; w <= hi; ++w) {
      std::ostringstream os;
      os << "d=" << d << " w=" << w;
      out.push_back(compare(full_family((int)w, d), zeta_mult(w, 1), tol,
                            os.str()));
    }
  }
  return out;
}

Reports check_mzsv_sum(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  Reports out;
  std::vector<int> depths = opt.n > 0 ? std::vector<int>{opt.n}
                                      : std::vector<int>{1, 2, 3};
  for (int d : depths) {
    auto [lo, hi] = range_or(opt, d + 1, 9);
    for (long long w = lo; w <= hi; ++w) {
      WordCombo lhs;
      for (const auto& [word, c] : full_family((int)w, d))
        combo_add(lhs, star_expand(word), c);
      std::ostringstream os;
      os << "d=" << d << " w=" << w;
      out.push_back(compare(lhs, zeta_mult(w, binomial(w - 1, d - 1)), tol,
                            os.str()));
    }
  }
  return out;
}

Reports check_anti_hook(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  std::vector<std::pair<int, int>> grid;
  if (!opt.s_list.empty() || !opt.r_list.empty()) {
    int s = opt.s_list.empty() ? 0 : opt.s_list[0];
    int r = opt.r_list.empty() ? 1 : opt.r_list[0];
    grid.push_back({s, r});
  } else {
    for (int s = 0; s <= 3; ++s)
      for (int r = 1; r <= 3; ++r) grid.push_back({s, r});
  }
  Reports out;
  for (auto [s, r] : grid) {
    auto [lo, hi] = range_or(opt, s + r + 1, s + r + 4);
    for (long long w = lo; w <= hi; ++w) {
      ZetaMultiple m = anti_hook_formula(s, r, w);
      WordCombo ref = s + r <= 6
                          ? sw_bruteforce_combo(spec_to_shape({{s}, {r}}), w)
                          : sw_spec_combo({{s}, {r}}, w);
      std::ostringstream os;
      os << "s=" << s << " r=" << r << " w=" << w << " coeff="
         << rat_to_string(m.coeff);
      out.push_back(compare(m.to_combo(), ref, tol, os.str()));
    }
  }
  return out;
}

Reports check_stair(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-5);
  std::vector<std::pair<int, int>> grid;
  if (!opt.r_list.empty() || opt.n > 0) {
    int r = opt.r_list.empty() ? 1 : opt.r_list[0];
    int n = opt.n > 0 ? opt.n : 2;
    grid.push_back({r, n});
  } else {
    grid = {{2, 2}, {1, 3}};
  }
  Reports out;
  for (auto [r, n] : grid) {
    long long thr = (long long)(r + 2) * n + 1;
    auto [lo, hi] = range_or(opt, thr, thr + 3);
    for (long long w = lo; w <= hi; ++w) {
      ZetaMultiple m = stair_formula(r, n, w);
      std::ostringstream os;
      os << "r=" << r << " n=" << n << " w=" << w << " coeff="
         << rat_to_string(m.coeff);
      out.push_back(compare(ribbon_sw_combo(stair_spec(r, n), w), m.to_combo(),
                            tol, os.str()));
    }
  }
  return out;
}

Reports check_s00(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  struct Case {
    int s;
    std::vector<int> r;
    long long lo, hi;
  };
  std::vector<Case> cases;
  if (!opt.r_list.empty()) {
    int s = opt.s_list.empty() ? 0 : opt.s_list[0];
    long long minw = s + (long long)opt.r_list.size();
    for (int v : opt.r_list) minw += v;
    auto [lo, hi] = range_or(opt, minw, minw + 3);
    cases.push_back({s, opt.r_list, lo, hi});
  } else {
    cases = {{0, {2, 2}, 6, 9}, {1, {2, 2}, 8, 10}, {0, {1, 1, 2}, 8, 9}};
  }
  Reports out;
  for (const auto& c : cases)
    for (long long w = c.lo; w <= c.hi; ++w) {
      RibbonSpec sp;
      sp.s.assign(c.r.size(), 0);
      sp.s[0] = c.s;
      sp.r = c.r;
      std::ostringstream os;
      os << "s=" << c.s << " r=(";
      for (std::size_t k = 0; k < c.r.size(); ++k)
        os << (k ? "," : "") << c.r[k];
      os << ") w=" << w;
      out.push_back(compare(s00_formula(c.s, c.r, w), sw_spec_combo(sp, w),
                            tol, os.str()));
    }
  return out;
}

Reports check_inductive(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  Reports out;
  if (!opt.r_list.empty()) {
    RibbonSpec sp{opt.s_list, opt.r_list};
    int i = opt.i > 0 ? opt.i : 1;
    auto [lo, hi] = range_or(opt, spec_min_weight(sp), spec_min_weight(sp) + 2);
    for (long long w = lo; w <= hi; ++w)
      out.push_back(inductive_reduction_check(sp, i, w, opt.M, tol));
    return out;
  }
  out.push_back(inductive_reduction_check({{1, 1}, {2, 1}}, 1, 8, opt.M, tol));
  out.push_back(inductive_reduction_check({{0, 1}, {2, 2}}, 1, 9, opt.M, tol));
  return out;
}

Reports check_two_corner(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  std::vector<std::array<int, 4>> specs;
  if (opt.s_list.size() == 2 && opt.r_list.size() == 2) {
    specs.push_back({opt.s_list[0], opt.s_list[1], opt.r_list[0], opt.r_list[1]});
  } else {
    specs = {{0, 2, 2, 1}, {1, 1, 1, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}};
  }
  Reports out;
  for (const auto& [s1, s2, r1, r2] : specs) {
    long long thr = s1 + s2 + r1 + r2 + 2;
    auto [lo, hi] = range_or(opt, thr, thr + 2);
    for (long long w = lo; w <= hi; ++w) {
      std::ostringstream os;
      os << "s=(" << s1 << "," << s2 << ") r=(" << r1 << "," << r2 << ") w="
         << w;
      out.push_back(compare(mixed_flatten(two_corner_formula(s1, s2, r1, r2, w)),
                            sw_spec_combo({{s1, s2}, {r1, r2}}, w), tol,
                            os.str()));
    }
  }
  return out;
}

Reports check_hook(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  std::vector<std::pair<int, int>> grid;
  if (!opt.s_list.empty() || !opt.r_list.empty()) {
    int s = opt.s_list.empty() ? 2 : opt.s_list[0];
    int r = opt.r_list.empty() ? 1 : opt.r_list[0];
    grid.push_back({s, r});
  } else {
    grid = {{2, 1}, {3, 2}, {2, 2}};
  }
  Reports out;
  for (auto [s, r] : grid) {
    auto [lo, hi] = range_or(opt, s + r + 2, s + r + 5);
    for (long long w = lo; w <= hi; ++w) {
      Partition lam{s};
      for (int q = 0; q < r; ++q) lam.push_back(1);
      std::ostringstream os;
      os << "s=" << s << " r=" << r << " w=" << w;
      WordCombo ref = s >= 2 ? sw_bruteforce_combo(make_skew_shape(lam, {}), w)
                             : sw_spec_combo({{0, s - 1}, {r, 1}}, w);
      out.push_back(compare(mixed_flatten(hook_formula(s, r, w)), ref, tol,
                            os.str()));
    }
  }
  return out;
}

Reports check_one_corner(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  std::vector<std::string> shapes =
      opt.shape.empty()
          ? std::vector<std::string>{"2,2", "3,3/1", "2,2,2/1", "3,3/2"}
          : std::vector<std::string>{opt.shape};
  Reports out;
  for (const auto& sh : shapes) {
    SkewShape d = parse_shape(sh);
    long long cells = num_cells(d);
    auto [lo, hi] = range_or(opt, cells + 1, cells + 4);
    for (long long w = lo; w <= hi; ++w) {
      std::ostringstream os;
      os << "shape=" << shape_to_string(d) << " w=" << w;
      out.push_back(compare(one_corner_sum(d, w), sw_bruteforce_combo(d, w),
                            tol, os.str()));
    }
  }
  return out;
}

Reports check_sw_rel(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  struct Case {
    std::string shape;
    long long lo, hi;
  };
  std::vector<Case> cases;
  if (!opt.shape.empty()) {
    long long cells = num_cells(parse_shape(opt.shape));
    auto [lo, hi] = range_or(opt, cells + 2, cells + 5);
    cases.push_back({opt.shape, lo, hi});
  } else {
    auto [lo1, hi1] = range_or(opt, 6, 9);
    auto [lo2, hi2] = range_or(opt, 8, 10);
    cases = {{"2,2", lo1, hi1}, {"2,2,2,2/1,1", lo2, hi2}};
  }
  Reports out;
  for (const auto& c : cases)
    for (long long w = c.lo; w <= c.hi; ++w)
      out.push_back(sw_relation_check(parse_shape(c.shape), w, tol));
  return out;
}

Reports check_symmetric(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  Reports out;
  if (!opt.r_list.empty()) {
    int s = opt.s_list.empty() ? 0 : opt.s_list[0];
    long long minw = s + (long long)opt.r_list.size();
    for (int v : opt.r_list) minw += v;
    auto [lo, hi] = range_or(opt, minw, minw + 2);
    for (long long w = lo; w <= hi; ++w)
      out.push_back(symmetric_sum_check(s, opt.r_list, w, tol));
    return out;
  }
  out.push_back(symmetric_sum_check(1, {2, 2}, 9, tol));
  out.push_back(symmetric_sum_check(0, {2, 2}, 7, tol));
  out.push_back(symmetric_sum_check(0, {1, 1, 1}, 7, tol));
  return out;
}

Reports check_square22(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  auto [lo, hi] = range_or(opt, 5, 9);
  SkewShape sq = parse_shape("2,2");
  Reports out;
  for (long long w = lo; w <= hi; ++w) {
    std::ostringstream os;
    os << "w=" << w << " vs=one-corner";
    out.push_back(compare(mixed_flatten(sw_closed_22(w)), one_corner_sum(sq, w),
                          tol, os.str()));
    if (w <= 7) {
      std::ostringstream ob;
      ob << "w=" << w << " vs=fillings";
      out.push_back(compare(mixed_flatten(sw_closed_22(w)),
                            sw_bruteforce_combo(sq, w), tol, ob.str()));
    }
  }
  return out;
}

Reports check_examples41(const VerifyOptions& opt) {
  double tol = tol_or(opt, 1e-6);
  auto [lo, hi] = range_or(opt, 6, 8);
  SkewShape a = parse_shape("3,3/1"), b = parse_shape("2,2,2/1");
  Reports out;
  for (long long w = lo; w <= hi; ++w) {
    std::ostringstream os;
    os << "shape=3,3/1 w=" << w;
    out.push_back(compare(mixed_flatten(sw_closed_33_1(w)), one_corner_sum(a, w),
                          tol, os.str()));
    std::ostringstream ob;
    ob << "shape=2,2,2/1 w=" << w;
    out.push_back(compare(mixed_flatten(sw_closed_222_1(w)),
                          one_corner_sum(b, w), tol, ob.str()));
    // 2 S_w((3,3)/(1)) - 2 S_w((2,2,2)/(1)) = (w-5) S_w((2,2))
    WordCombo diff;
    combo_add(diff, mixed_flatten(sw_closed_33_1(w)), 2);
    combo_add(diff, mixed_flatten(sw_closed_222_1(w)), -2);
    std::ostringstream od;
    od << "difference w=" << w << " coeff=" << (w - 5);
    out.push_back(compare(diff,
                          combo_scaled(mixed_flatten(sw_closed_22(w)), w - 5),
                          tol, od.str()));
  }
  return out;
}

using Checker = Reports (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Checker>>& registry() {
  static const std::vector<std::pair<std::string, Checker>> reg = {
      {"mzv-sum", check_mzv_sum},     {"mzsv-sum", check_mzsv_sum},
      {"anti-hook", check_anti_hook}, {"stair", check_stair},
      {"s00", check_s00},             {"inductive", check_inductive},
      {"two-corner", check_two_corner}, {"hook", check_hook},
      {"one-corner", check_one_corner}, {"sw-rel", check_sw_rel},
      {"symmetric", check_symmetric},   {"square-22", check_square22},
      {"examples-41", check_examples41},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::vector<FormulaReport> run_verify(const std::string& id,
                                      const VerifyOptions& opt) {
  for (const auto& [name, fn] : registry())
    if (name == id) return fn(opt);
  throw parse_error("unknown verification id: " + id);
}

VerifySuiteResult run_verify_all(const VerifyOptions& opt, int jobs,
                                 double budget_seconds) {
  const auto& ids = verify_ids();
  std::vector<std::vector<FormulaReport>> slots(ids.size());
  std::vector<char> ran(ids.size(), 0);
  std::atomic<std::size_t> next{0};
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds));
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= ids.size()) return;
      if (std::chrono::steady_clock::now() >= deadline) continue;
      try {
        slots[k] = run_verify(ids[k], opt);
      } catch (const std::exception& e) {
        FormulaReport rep;
        rep.passed = false;
        rep.params = std::string("checker threw: ") + e.what();
        slots[k] = {rep};
      }
      ran[k] = 1;
    }
  };
  int nthreads = std::clamp(jobs, 1, (int)ids.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  VerifySuiteResult out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ran[k])
      out.results.push_back({ids[k], std::move(slots[k])});
    else
      out.skipped.push_back(ids[k]);
  }
  return out;
}

}  // namespace schurmzv
