#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schurmzv/mzv.hpp"
#include "schurmzv/weighted.hpp"

using namespace schurmzv;

namespace {

Word W(const std::string& s) { return parse_word(s); }

WordCombo single(const std::string& s, const Rat& c) {
  WordCombo out;
  combo_add(out, W(s), c);
  return out;
}

// all indices (entries >= 1) of the given weight
std::vector<std::vector<int>> indices_of_weight(int wt) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    for (int v = 1; v <= rem; ++v) {
      cur.push_back(v);
      self(self, rem - v);
      cur.pop_back();
    }
  };
  rec(rec, wt);
  return out;
}

void check_close(const WordCombo& a, const WordCombo& b, double tol = 1e-6) {
  EvalResult ea = eval_combo(a, tol / 2);
  EvalResult eb = eval_combo(b, tol / 2);
  CHECK(std::abs(ea.value - eb.value) <= ea.err + eb.err + tol);
}

bool homogeneous(const WordCombo& c, long long wt) {
  for (const auto& [w, q] : c)
    if (w.weight() != wt) return false;
  return true;
}

}  // namespace

TEST_CASE("P_def basics") {
  CHECK(P_def({{}, {}, 0}) == unit_combo());
  CHECK(P_def({{}, {}, 3}).empty());

  // l = 0 collapses to the single zeta when admissible, nothing otherwise
  CHECK(P_std({1, 2}, 0) == single("1,2", 1));
  CHECK(P_std({3}, 0) == single("3", 1));
  CHECK(P_std({2, 1}, 0).empty());

  // P_1(1,2): (1,3) with C(0,0)C(2,1)=2 and (2,2) with C(1,0)C(1,1)=1
  WordCombo expect;
  combo_add(expect, W("1,3"), 2);
  combo_add(expect, W("2,2"), 1);
  CHECK(P_std({1, 2}, 1) == expect);
  // P_1(2,1): only (2,2) survives C(w1-1,1)C(w2-1,0)
  CHECK(P_std({2, 1}, 1) == single("2,2", 1));

  // explicit lower bounds: n=(1,2) is the Q variant at depth 2
  CHECK(P_def({{1, 2}, {1, 2}, 1}) == single("1,3", 1));
  CHECK(P_def({{1, 2}, {1, 2}, 1}) == Q_std({1, 2}, 1));

  CHECK_THROWS_AS(P_def({{1}, {1, 2}, 0}), domain_error);
  CHECK_THROWS_AS(P_def({{1, 1}, {1, 2}, -1}), domain_error);
  CHECK_THROWS_AS(P_def({{0, 1}, {1, 2}, 1}), domain_error);
  CHECK_THROWS_AS(P_def({{1, 1}, {1, 0}, 1}), domain_error);
}

TEST_CASE("depth-1 closed forms") {
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      Rat cp = Rat(binomial(Int(l + k - 1), k - 1));
      Rat cq = Rat(binomial(Int(l + k - 2), k - 1));
      CHECK(P_std({k}, l) == single(std::to_string(l + k), cp));
      CHECK(Q_std({k}, l) == single(std::to_string(l + k), cq));
    }
  // Q_0 vanishes identically
  CHECK(Q_std({3}, 0).empty());
  CHECK(Q_std({1, 2}, 0).empty());
  CHECK(Q_std({2, 1}, 0).empty());
}

TEST_CASE("Q_via_P equals Q_std") {
  CHECK(Q_via_P({2}, 1) == single("3", 1));
  CHECK(Q_via_P({1, 1}, 1) == P_std({1, 1}, 1));
  {
    WordCombo rhs = P_std({1, 2}, 2);
    combo_add(rhs, P_std({1, 1}, 3), -1);
    CHECK(Q_via_P({1, 2}, 2) == rhs);
    CHECK(rhs == Q_std({1, 2}, 2));
  }
  for (int wt = 1; wt <= 6; ++wt)
    for (const auto& k : indices_of_weight(wt))
      for (int l = 0; l <= 4; ++l) CHECK(Q_via_P(k, l) == Q_std(k, l));
  // on non-admissible indices Q and P coincide
  CHECK(Q_std({2, 1}, 2) == P_std({2, 1}, 2));
  CHECK(Q_std({1, 1, 1}, 3) == P_std({1, 1, 1}, 3));
}

TEST_CASE("Q_on_combo") {
  CHECK(Q_on_combo(single("1", 1), 2) == single("3", 1));
  CHECK(Q_on_combo(WordCombo{}, 3).empty());
  for (int w = 2; w <= 5; ++w)
    CHECK(Q_on_combo(single("1", 1), w - 1) == single(std::to_string(w), 1));
  // linearity
  WordCombo c;
  combo_add(c, W("2"), 2);
  combo_add(c, W("1,1"), 3);
  WordCombo expect = combo_scaled(Q_std({2}, 2), 2);
  combo_add(expect, Q_std({1, 1}, 2), 3);
  CHECK(Q_on_combo(c, 2) == expect);
  // the empty word contributes only at l = 0
  CHECK(Q_on_combo(unit_combo(), 0) == unit_combo());
  CHECK(Q_on_combo(unit_combo(), 2).empty());
}

TEST_CASE("derivation lowers the Q subscript") {
  // (l-1) Q_l(v) = Q_{l-1}(dv), an identity of the binomial coefficients
  for (int wt = 0; wt <= 5; ++wt) {
    std::vector<std::vector<int>> idx =
        wt == 0 ? std::vector<std::vector<int>>{{}} : indices_of_weight(wt);
    for (const auto& v : idx) {
      WordCombo vc;
      combo_add(vc, Word(std::vector<int>(v.begin(), v.end())), 1);
      for (int l = 2; l <= 5; ++l) {
        WordCombo lhs = combo_scaled(Q_on_combo(vc, l), l - 1);
        WordCombo rhs = Q_on_combo(derivation(vc), l - 1);
        CHECK(lhs == rhs);
      }
    }
  }
  // numeric spot check
  WordCombo vc = single("1,2", 1);
  EvalResult a = eval_combo(combo_scaled(Q_on_combo(vc, 3), 2), 1e-8);
  EvalResult b = eval_combo(Q_on_combo(derivation(vc), 2), 1e-8);
  CHECK(std::abs(a.value - b.value) <= a.err + b.err + 1e-8);
}

TEST_CASE("mixed combos flatten through corner atoms and products") {
  MixedCombo m;
  mixed_add(m, 1, {W("2"), W("3")});
  WordCombo expect;
  combo_add(expect, W("2,3"), 1);
  combo_add(expect, W("3,2"), 1);
  combo_add(expect, W("5"), 1);
  CHECK(mixed_flatten(m) == expect);

  // a lone anti-hook atom: zeta[1 \\ 2] = z(1,2) + z(3)
  MixedCombo h;
  MultiCornerIndex mc;
  mc.ll = {{1}};
  mc.kk = {{2}};
  mixed_add(h, Rat(-1, 2), {}, {mc});
  WordCombo hx;
  combo_add(hx, W("1,2"), Rat(-1, 2));
  combo_add(hx, W("3"), Rat(-1, 2));
  CHECK(mixed_flatten(h) == hx);

  // atom times zeta factor multiplies out by the harmonic product
  MixedCombo p;
  mixed_add(p, 1, {W("2")}, {mc});
  WordCombo base;
  combo_add(base, W("1,2"), 1);
  combo_add(base, W("3"), 1);
  CHECK(mixed_flatten(p) == stuffle(base, single("2", 1)));

  // zero coefficients are dropped at insertion
  MixedCombo z;
  mixed_add(z, 0, {W("2")});
  CHECK(z.terms.empty());
  CHECK(mixed_flatten(z).empty());
}

TEST_CASE("depth reduction matches the definition (admissible)") {
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{1, 2}, 1}, {{2, 2}, 1}, {{1, 3}, 2}, {{3, 2}, 1}, {{1, 1, 2}, 2}};
  for (const auto& [k, l] : cases) {
    WordCombo rec = P_recursive_admissible(k, l);
    long long wt = l;
    for (int x : k) wt += x;
    CHECK(homogeneous(rec, wt));
    check_close(rec, P_std(k, l));
  }
  CHECK_THROWS_AS(P_recursive_admissible({2, 1}, 1), domain_error);
  CHECK_THROWS_AS(P_recursive_admissible({3}, 1), domain_error);
  CHECK_THROWS_AS(P_recursive_admissible({1, 2}, 0), domain_error);
}

TEST_CASE("depth reduction matches the definition (non-admissible)") {
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{1, 1}, 1}, {{2, 1}, 2}, {{3, 1}, 1}, {{1, 1, 1}, 2}, {{1, 2, 1}, 1}};
  for (const auto& [k, l] : cases) {
    WordCombo flat = mixed_flatten(P_recursive_nonadmissible(k, l));
    long long wt = l;
    for (int x : k) wt += x;
    CHECK(homogeneous(flat, wt));
    check_close(flat, P_std(k, l));
  }
  CHECK_THROWS_AS(P_recursive_nonadmissible({1, 2}, 1), domain_error);
  CHECK_THROWS_AS(P_recursive_nonadmissible({2}, 1), domain_error);
  CHECK_THROWS_AS(P_recursive_nonadmissible({1, 1}, 0), domain_error);
}

TEST_CASE("closed depth-2 expression") {
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 1; k2 + k1 <= 4; ++k2)
      for (int l = 1; l <= 2; ++l) {
        WordCombo flat = mixed_flatten(P_closed_depth2(k1, k2, l));
        CHECK(homogeneous(flat, k1 + k2 + l));
        check_close(flat, P_std({k1, k2}, l));
      }
  // the indicator branch must agree with the recursive route too
  check_close(mixed_flatten(P_closed_depth2(2, 1, 2)),
              mixed_flatten(P_recursive_nonadmissible({2, 1}, 2)));
  CHECK_THROWS_AS(P_closed_depth2(1, 1, 0), domain_error);
  CHECK_THROWS_AS(P_closed_depth2(0, 1, 1), domain_error);
}

TEST_CASE("closed depth-3 expression") {
  const std::vector<std::array<int, 4>> cases = {
      {1, 1, 1, 3}, {1, 1, 2, 1}, {2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 1, 1}};
  for (const auto& c : cases) {
    WordCombo flat = mixed_flatten(P_closed_depth3(c[0], c[1], c[2], c[3]));
    CHECK(homogeneous(flat, c[0] + c[1] + c[2] + c[3]));
    check_close(flat, P_std({c[0], c[1], c[2]}, c[3]));
  }
  check_close(mixed_flatten(P_closed_depth3(1, 1, 1, 2)),
              mixed_flatten(P_recursive_nonadmissible({1, 1, 1}, 2)));
  CHECK_THROWS_AS(P_closed_depth3(1, 1, 1, 0), domain_error);
}

TEST_CASE("closed expressions stay bounded in l") {
  // The support size stabilizes from l = 2 on; at l = 1 the narrow weight
  // window lets products collide and cancel (e.g. for k = (2,2) the single
  // zeta part is 2*z(2)z(3) - 2*z(3)z(2) = 0), so the count there can only
  // be smaller, never larger.
  for (const auto& k : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    std::size_t n2 = mixed_flatten(P_closed_depth2(k.first, k.second, 2)).size();
    CHECK(mixed_flatten(P_closed_depth2(k.first, k.second, 1)).size() <= n2);
    for (int l = 3; l <= 6; ++l)
      CHECK(mixed_flatten(P_closed_depth2(k.first, k.second, l)).size() == n2);
  }
  for (const auto& k : std::vector<std::array<int, 3>>{
           {1, 1, 1}, {2, 1, 1}, {1, 2, 1}}) {
    std::size_t n2 = mixed_flatten(P_closed_depth3(k[0], k[1], k[2], 2)).size();
    CHECK(mixed_flatten(P_closed_depth3(k[0], k[1], k[2], 1)).size() <= n2);
    for (int l = 3; l <= 6; ++l)
      CHECK(mixed_flatten(P_closed_depth3(k[0], k[1], k[2], l)).size() == n2);
  }
}

TEST_CASE("fixed weight and depth sums collapse to a single zeta") {
  CHECK(sum_P_fixed_weight_depth({1, 1}, 3, 5) == 3);
  CHECK(sum_P_fixed_weight_depth({1, 2}, 2, 4) == 1);
  CHECK(sum_P_fixed_weight_depth({1, 2}, 2, 6) == 1);
  CHECK(sum_P_fixed_weight_depth({1}, 2, 4) == 3);

  // depth 1 is forced exactly
  CHECK(sum_P_fixed_weight_depth_combo({1}, 2, 4) == single("4", 3));

  // deeper cases rest on the classical sum formula: compare numerically
  const std::vector<std::pair<std::vector<int>, std::pair<long long, long long>>>
      cases = {{{1, 1}, {3, 5}},
               {{1, 1}, {2, 4}},
               {{1, 2}, {3, 6}},
               {{1, 1, 2}, {4, 6}}};
  for (const auto& [n, kw] : cases) {
    Rat coeff = sum_P_fixed_weight_depth(n, kw.first, kw.second);
    EvalResult lhs =
        eval_combo(sum_P_fixed_weight_depth_combo(n, kw.first, kw.second), 1e-7);
    EvalResult zw = riemann_zeta((int)kw.second);
    double rhs = coeff.convert_to<double>() * zw.value;
    CHECK(std::abs(lhs.value - rhs) <= lhs.err + zw.err + 1e-6);
  }

  CHECK_THROWS_AS(sum_P_fixed_weight_depth({1, 1}, 1, 5), domain_error);
  CHECK_THROWS_AS(sum_P_fixed_weight_depth({1, 1}, 2, 2), domain_error);
  CHECK_THROWS_AS(sum_P_fixed_weight_depth_combo({}, 0, 5), domain_error);
}
