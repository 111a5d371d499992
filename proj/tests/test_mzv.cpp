#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "schurmzv/mzv.hpp"

using namespace schurmzv;

namespace {
Word W(const std::string& s) { return parse_word(s); }
const double PI = 3.14159265358979323846;
}  // namespace

TEST_CASE("exact truncations") {
  CHECK(mzv_trunc(W("2"), 5) == Rat(205, 144));
  CHECK(mzv_trunc(W("1,2"), 4) == Rat(5, 12));
  CHECK(mzv_trunc(W(""), 0) == 1);
  CHECK(mzv_trunc(W("3"), 0) == 0);
  CHECK(mzv_trunc(W("3"), 1) == 0);
  CHECK(mzv_trunc(W("3"), 2) == 1);
  CHECK(mzv_trunc(W("1,1"), 3) == Rat(1, 2));  // 1/(1*2)
  // non-admissible words truncate fine
  CHECK(mzv_trunc(W("2,1"), 3) == Rat(1, 2));
  auto pre = mzv_trunc_prefix(W("1,2"), 6);
  REQUIRE(pre.size() == 7);
  for (int M = 0; M <= 6; ++M) CHECK(pre[M] == mzv_trunc(W("1,2"), M));
  // monotone in M for positive terms (first nonzero at M = depth + 1)
  CHECK(pre[2] == 0);
  for (int M = 3; M <= 6; ++M) CHECK(pre[M] > pre[M - 1]);
}

TEST_CASE("truncation is a stuffle homomorphism") {
  for (auto [u, v] :
       {std::pair{W("2"), W("3")}, std::pair{W("1,2"), W("2")},
        std::pair{W("1,1"), W("1,2")}, std::pair{W("2,1"), W("1,3")}}) {
    for (long long M : {2, 5, 9}) {
      WordCombo prod = stuffle(u, v);
      CHECK(mzv_trunc(u, M) * mzv_trunc(v, M) == mzv_trunc_combo(prod, M));
    }
  }
}

TEST_CASE("depth one zeta values") {
  EvalResult z2 = riemann_zeta(2);
  CHECK(z2.kind == BoundKind::rigorous);
  CHECK(std::abs(z2.value - PI * PI / 6) <= z2.err + 1e-14);
  CHECK(z2.err < 1e-12);
  EvalResult z4 = riemann_zeta(4);
  CHECK(std::abs(z4.value - PI * PI * PI * PI / 90) <= z4.err + 1e-14);
  CHECK_THROWS_AS(riemann_zeta(1), domain_error);
}

TEST_CASE("numeric mzv against known closed forms") {
  const double tol = 1e-8;
  // zeta(1,2) = zeta(3)
  EvalResult a = mzv_numeric(W("1,2"), tol);
  CHECK(std::abs(a.value - riemann_zeta(3).value) <= a.err + 1e-10);
  CHECK(a.err <= tol);
  // zeta(2,2) = 3/4 zeta(4) = pi^4 / 120
  EvalResult b = mzv_numeric(W("2,2"), tol);
  CHECK(std::abs(b.value - std::pow(PI, 4) / 120) <= b.err + 1e-10);
  // zeta(1,3) = 1/4 zeta(4)
  EvalResult c = mzv_numeric(W("1,3"), tol);
  CHECK(std::abs(c.value - std::pow(PI, 4) / 360) <= c.err + 1e-10);
  // zeta(1,1,2) = zeta(4) (sum formula)
  EvalResult d = mzv_numeric(W("1,1,2"), 1e-6);
  CHECK(std::abs(d.value - std::pow(PI, 4) / 90) <= d.err + 1e-8);
  // empty word is exactly 1
  EvalResult e = mzv_numeric(W(""), tol);
  CHECK(e.value == 1.0);
  CHECK(e.kind == BoundKind::exact);
  CHECK_THROWS_AS(mzv_numeric(W("2,1"), tol), domain_error);
}

TEST_CASE("numeric values extend the truncations") {
  for (auto w : {W("2"), W("1,2"), W("2,3"), W("1,1,2")}) {
    EvalResult r = mzv_numeric(w, 1e-7);
    Rat t = mzv_trunc(w, 60);
    // truncation is below the limit but within the leftover tail
    CHECK(t.convert_to<double>() < r.value + r.err);
    CHECK(r.value - t.convert_to<double>() < 0.5);
  }
}

TEST_CASE("eval_combo splits tolerance") {
  WordCombo c;
  combo_add(c, W("2"), 1);
  combo_add(c, W("3"), -2);
  EvalResult r = eval_combo(c, 1e-9);
  double expect = riemann_zeta(2).value - 2 * riemann_zeta(3).value;
  CHECK(std::abs(r.value - expect) <= r.err + 1e-9);
  CHECK(r.err <= 1e-9);
  // stuffle relation numerically: zeta(2)*zeta(3) = zeta(2,3)+zeta(3,2)+zeta(5)
  EvalResult lhs = eval_combo(stuffle(W("2"), W("3")), 1e-8);
  double rhs = riemann_zeta(2).value * riemann_zeta(3).value;
  CHECK(std::abs(lhs.value - rhs) <= lhs.err + 1e-8);
  CHECK(eval_combo(WordCombo{}, 1e-8).value == 0.0);
}

TEST_CASE("budget controls") {
  CHECK(default_budget() >= 1000);
  // a coarse budget still reports an honest bound containing the true value
  EvalResult r = mzv_numeric(W("2,4"), 1e-30, 20000);
  EvalResult fine = mzv_numeric(W("2,4"), 1e-9);
  CHECK(std::abs(r.value - fine.value) <= r.err + fine.err);
}
