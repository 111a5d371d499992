#include "schurmzv/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>

namespace schurmzv {

namespace {

std::map<Word, std::vector<Rat>> g_trunc_memo;
std::mutex g_trunc_mx;

std::vector<Rat> trunc_prefix_compute(const Word& w, int Mmax) {
  // res[M] = zeta_M; running strict-prefix sums S_j = A_j(m+1)
  std::vector<Rat> res(Mmax + 1, 0);
  int d = w.depth();
  if (d == 0) {
    for (auto& r : res) r = 1;
    return res;
  }
  std::vector<Rat> S(d, 0);  // S[j] tracks depth j+1 prefix
  for (int m = 1; m <= Mmax - 1; ++m) {
    std::vector<Rat> invp(d);
    for (int j = 0; j < d; ++j) {
      Int den = 1;
      for (int e = 0; e < w.a[j]; ++e) den *= m;
      invp[j] = Rat(1, den);
    }
    for (int j = d - 1; j >= 1; --j) S[j] += S[j - 1] * invp[j];
    S[0] += invp[0];
    res[m + 1] = S[d - 1];
  }
  return res;
}

}  // namespace

std::vector<Rat> mzv_trunc_prefix(const Word& w, int Mmax) {
  {
    std::lock_guard<std::mutex> lk(g_trunc_mx);
    auto it = g_trunc_memo.find(w);
    if (it != g_trunc_memo.end() && (int)it->second.size() > Mmax)
      return std::vector<Rat>(it->second.begin(), it->second.begin() + Mmax + 1);
  }
  std::vector<Rat> res = trunc_prefix_compute(w, Mmax);
  std::lock_guard<std::mutex> lk(g_trunc_mx);
  auto it = g_trunc_memo.find(w);
  if (it == g_trunc_memo.end() || (int)it->second.size() < (int)res.size())
    g_trunc_memo[w] = res;
  return res;
}

Rat mzv_trunc(const Word& w, long long M) {
  if (M < 0) throw domain_error("mzv_trunc: negative cutoff");
  if (w.depth() == 0) return 1;
  if (M <= 1) return 0;
  return mzv_trunc_prefix(w, (int)M)[M];
}

Rat mzv_trunc_combo(const WordCombo& c, long long M) {
  Rat out = 0;
  for (auto& [w, q] : c) out += q * mzv_trunc(w, M);
  return out;
}

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::rigorous: return "rigorous";
    default: return "heuristic";
  }
}

EvalResult riemann_zeta(int s) {
  if (s < 2) throw domain_error("riemann_zeta: need exponent >= 2");
  const long long N = 1000;
  long double sum = 0, comp = 0;
  for (long long m = N; m >= 1; --m) {
    long double term = powl((long double)m, (long double)-s);
    long double y = term - comp, t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  long double Ns = powl((long double)N, (long double)-s);
  long double tail = Ns * N / (s - 1) - Ns / 2 + s * Ns / N / 12 -
                     (long double)s * (s + 1) * (s + 2) * Ns / N / N / N / 720;
  long double v = sum + tail;
  double bound = (double)((long double)s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * Ns /
                          powl((long double)N, 5) / 30240.0L);
  EvalResult r;
  r.value = (double)v;
  r.err = bound + std::abs(r.value) * 1e-16;
  r.kind = BoundKind::rigorous;
  return r;
}

long long default_budget() {
  if (const char* e = std::getenv("SCHURMZV_MAX_N")) {
    long long v = std::atoll(e);
    if (v >= 1000) return v;
  }
  return 10'000'000LL;
}

namespace {

struct CachedEval {
  EvalResult res;
  long long budget_used = 0;
};

std::map<Word, CachedEval> g_eval_memo;
std::mutex g_eval_mx;

// closed form of int_N^inf (c0 + ln N-centered poly)(t)^{-k} dt pieces:
// int_N^inf ln(t/N)^j t^{-k} dt = N^{1-k} j! / (k-1)^{j+1}
long double tail_integral(const std::vector<long double>& coef, long long N, int k) {
  long double n1k = powl((long double)N, (long double)(1 - k));
  long double out = 0, fact = 1;
  for (size_t j = 0; j < coef.size(); ++j) {
    if (j > 0) fact *= (long double)j;
    out += coef[j] * n1k * fact / powl((long double)(k - 1), (long double)(j + 1));
  }
  return out;
}

// least squares fit of samples (x, y) by a degree-deg polynomial in x
std::vector<long double> polyfit(const std::vector<std::pair<long double, long double>>& pts,
                                 int deg) {
  int n = deg + 1;
  std::vector<std::vector<long double>> A(n, std::vector<long double>(n, 0));
  std::vector<long double> b(n, 0);
  for (auto& [x, y] : pts) {
    std::vector<long double> xp(2 * n - 1, 1);
    for (int i = 1; i < 2 * n - 1; ++i) xp[i] = xp[i - 1] * x;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] += xp[i + j];
      b[i] += y * xp[i];
    }
  }
  // Gaussian elimination with partial pivoting
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (fabsl(A[r][c]) > fabsl(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    if (A[c][c] == 0) continue;
    for (int r = c + 1; r < n; ++r) {
      long double f = A[r][c] / A[c][c];
      for (int j = c; j < n; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<long double> coef(n, 0);
  for (int c = n - 1; c >= 0; --c) {
    long double s = b[c];
    for (int j = c + 1; j < n; ++j) s -= A[c][j] * coef[j];
    coef[c] = A[c][c] == 0 ? 0 : s / A[c][c];
  }
  return coef;
}

long double eval_poly(const std::vector<long double>& c, long double x) {
  long double v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

struct Kahan {
  long double s = 0, c = 0;
  void add(long double x) {
    long double y = x - c, t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

EvalResult mzv_numeric_compute(const Word& w, double tol, long long budget) {
  int d = w.depth();
  int kd = w.a.back();
  int u = 0;  // count of 1s before the last letter -> log-power of the outer prefix
  for (int j = 0; j + 1 < d; ++j)
    if (w.a[j] == 1) ++u;
  // rigorous constant: product of zeta upper bounds over entries >= 2
  long double p2 = 1;
  for (int j = 0; j + 1 < d; ++j)
    if (w.a[j] >= 2) {
      long double z = 1 + powl(2.0L, (long double)-w.a[j]) +
                      powl(2.0L, (long double)(1 - w.a[j])) / (w.a[j] - 1);
      p2 *= std::min(z, 1.6449341L);
    }

  std::vector<long long> rungs;
  for (long long r = 10'000; r < budget; r *= 10) rungs.push_back(r);
  rungs.push_back(budget);

  const int kNumSamples = 16;
  std::vector<Kahan> S(d);  // S[0] innermost prefix ... S[d-1] outer prefix
  Kahan V;
  long long m = 1;
  double prevF = 0;
  bool havePrev = false;
  EvalResult best;
  best.err = HUGE_VAL;
  best.kind = BoundKind::heuristic;

  for (long long N : rungs) {
    // sample points for the tail fit live in [N/2, N]
    std::vector<long long> samp(kNumSamples);
    for (int i = 0; i < kNumSamples; ++i)
      samp[i] = (long long)llroundl(N * powl(0.5L, 1.0L - (long double)i / (kNumSamples - 1)));
    std::vector<std::pair<long double, long double>> pts;
    int si = 0;
    for (; m <= N; ++m) {
      while (si < kNumSamples && samp[si] < m) ++si;
      if (si < kNumSamples && samp[si] == m) {
        // S[d-2] currently holds A_{d-1}(m)
        long double a = d >= 2 ? S[d - 2].s : 1.0L;
        pts.push_back({logl((long double)m / N), a});
        ++si;
      }
      long double inv = 1.0L / m;
      auto ipow = [&](int k) {
        long double r = inv;
        for (int e = 1; e < k; ++e) r *= inv;
        return r;
      };
      if (d >= 2) {
        V.add(S[d - 2].s * ipow(kd));
        for (int j = d - 2; j >= 1; --j) S[j].add(S[j - 1].s * ipow(w.a[j]));
        S[0].add(ipow(w.a[0]));
      } else {
        V.add(ipow(kd));
      }
    }

    // rigorous tail: P2 * int_N^inf (1 + ln t)^u t^{-kd} dt, expanding
    // (1 + lnN + x)^u against int x^i e^{-(kd-1)x} dx
    long double lnN = logl((long double)N);
    long double trig = 0, fact = 1;
    {
      long double n1k = powl((long double)N, (long double)(1 - kd));
      long double base = 1 + lnN;
      for (int i = 0; i <= u; ++i) {
        long double binu = 1;
        for (int t = 0; t < i; ++t) binu = binu * (u - t) / (t + 1);
        if (i > 0) fact *= i;
        trig += binu * powl(base, (long double)(u - i)) * fact /
                powl((long double)(kd - 1), (long double)(i + 1)) * n1k;
      }
      trig *= p2;
    }
    double fp_noise = (double)(fabsl(V.s) * 1e-17L * d);
    {
      EvalResult r;
      r.value = (double)(V.s + trig / 2);
      r.err = (double)(trig / 2) + fp_noise;
      r.kind = BoundKind::rigorous;
      if (r.err < best.err) best = r;
      if (r.err <= tol) return best;
    }

    // heuristic: fit the outer prefix as a polynomial in ln(m/N)
    int deg = std::min(u, 6);
    std::vector<long double> coef = polyfit(pts, deg);
    long double resid = 0;
    for (auto& [x, y] : pts) resid = std::max(resid, fabsl(y - eval_poly(coef, x)));
    long double that = tail_integral(coef, N, kd);
    long double p0 = coef[0], p1 = coef.size() > 1 ? coef[1] : 0.0L;
    that += -p0 * powl((long double)N, (long double)-kd) / 2 -
            (p1 - kd * p0) * powl((long double)N, (long double)(-kd - 1)) / 12;
    long double n1k = powl((long double)N, (long double)(1 - kd));
    long double errModel = 3 * resid * n1k / (kd - 1);
    double F = (double)(V.s + that);
    // the fit residual alone misses extrapolation bias, so a heuristic result
    // only counts once it is cross-checked against the previous rung
    if (havePrev) {
      EvalResult r;
      r.value = F;
      r.err = std::max((double)errModel + fp_noise, 3 * std::abs(F - prevF) / 2);
      r.kind = BoundKind::heuristic;
      if (r.err < best.err) best = r;
      if (best.err <= tol * 0.5) return best;
    }
    prevF = F;
    havePrev = true;
  }
  return best;
}

}  // namespace

EvalResult mzv_numeric(const Word& w, double tol, long long budget) {
  if (w.depth() == 0) return EvalResult{1.0, 0.0, BoundKind::exact};
  if (!w.admissible())
    throw domain_error("mzv_numeric: non-admissible word " + word_to_string(w));
  if (budget <= 0) budget = default_budget();
  if (w.depth() == 1) return riemann_zeta(w.a[0]);
  {
    std::lock_guard<std::mutex> lk(g_eval_mx);
    auto it = g_eval_memo.find(w);
    if (it != g_eval_memo.end() &&
        (it->second.res.err <= tol || it->second.budget_used >= budget))
      return it->second.res;
  }
  EvalResult r = mzv_numeric_compute(w, tol, budget);
  std::lock_guard<std::mutex> lk(g_eval_mx);
  auto it = g_eval_memo.find(w);
  if (it == g_eval_memo.end() || r.err < it->second.res.err)
    g_eval_memo[w] = CachedEval{r, budget};
  return r;
}

EvalResult eval_combo(const WordCombo& c, double tol, long long budget) {
  Rat mass = 0;
  for (auto& [w, q] : c) mass += abs(q);
  double dm = mass.convert_to<double>();
  double per = dm == 0 ? tol : tol / dm;
  EvalResult out;
  out.kind = BoundKind::exact;
  long double v = 0;
  double err = 0;
  for (auto& [w, q] : c) {
    double cq = q.convert_to<double>();
    if (w.depth() == 0) {
      v += cq;
      continue;
    }
    EvalResult r = mzv_numeric(w, per, budget);
    v += cq * r.value;
    err += std::abs(cq) * r.err;
    if ((int)r.kind > (int)out.kind) out.kind = r.kind;
  }
  out.value = (double)v;
  out.err = err;
  return out;
}

}  // namespace schurmzv
