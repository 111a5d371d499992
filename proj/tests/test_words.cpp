#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schurmzv/tableaux.hpp"
#include "schurmzv/words.hpp"

using namespace schurmzv;

namespace {
Word W(const std::string& s) { return parse_word(s); }
}  // namespace

TEST_CASE("word basics") {
  CHECK(W("1,2").depth() == 2);
  CHECK(W("1,2").weight() == 3);
  CHECK(W("").depth() == 0);
  CHECK(W("").admissible());
  CHECK(W("1,2").admissible());
  CHECK_FALSE(W("2,1").admissible());
  CHECK(word_to_string(W("3,1,2")) == "3,1,2");
  CHECK_THROWS_AS(parse_word("1,,2"), parse_error);
  CHECK_THROWS_AS(parse_word("0"), parse_error);
  // shortlex: length first, then lexicographic
  CHECK(W("9") < W("1,1"));
  CHECK(W("1,2") < W("2,1"));
}

TEST_CASE("combo arithmetic") {
  WordCombo c;
  combo_add(c, W("2"), 1);
  combo_add(c, W("2"), -1);
  CHECK(combo_is_zero(c));
  combo_add(c, W("1,2"), Rat(1, 2));
  combo_add(c, W("3"), 2);
  CHECK(combo_to_string(c) == "2*(3) + 1/2*(1,2)");
  CHECK(combo_is_zero(combo_scaled(c, 0)));
  CHECK(combo_scaled(c, 2)[W("1,2")] == 1);
}

TEST_CASE("stuffle products") {
  // z_2 * z_3 = (2,3) + (3,2) + (5)
  WordCombo p = stuffle(W("2"), W("3"));
  REQUIRE(p.size() == 3);
  CHECK(p[W("2,3")] == 1);
  CHECK(p[W("3,2")] == 1);
  CHECK(p[W("5")] == 1);
  // unit
  CHECK(stuffle(W(""), W("2,1")) == WordCombo{{W("2,1"), 1}});
  // z_1 * z_1 z_1 = 3(1,1,1) + (1,2) + (2,1)
  WordCombo q = stuffle(W("1"), W("1,1"));
  CHECK(q[W("1,1,1")] == 3);
  CHECK(q[W("1,2")] == 1);
  CHECK(q[W("2,1")] == 1);
  // commutative, associative
  for (auto [u, v] : {std::pair{W("1,2"), W("3")}, std::pair{W("2,1"), W("1,1")}}) {
    CHECK(stuffle(u, v) == stuffle(v, u));
  }
  WordCombo a = unit_combo();
  a[W("2")] = 1;
  WordCombo lhs = stuffle(stuffle(a, a), a), rhs = stuffle(a, stuffle(a, a));
  CHECK(lhs == rhs);
  // depth counts: |u*v| preserves total weight
  for (auto& [w, c] : stuffle(W("1,3"), W("2,2"))) {
    CHECK(w.weight() == 8);
    CHECK(c > 0);
  }
}

TEST_CASE("index shuffle drops the merge terms") {
  WordCombo p = index_shuffle(W("1"), W("1,1"));
  REQUIRE(p.size() == 1);
  CHECK(p[W("1,1,1")] == 3);
  WordCombo q = index_shuffle(W("2"), W("3"));
  CHECK(q[W("2,3")] == 1);
  CHECK(q[W("3,2")] == 1);
  CHECK(q.count(W("5")) == 0);
  // all coefficients of z_2^a shuffle z_1^b are multinomial
  WordCombo r = index_shuffle(z_power(2, 2), z_power(1, 1));
  CHECK(r[W("1,2,2")] == 1);
  CHECK(r[W("2,1,2")] == 1);
  CHECK(r[W("2,2,1")] == 1);
}

TEST_CASE("z_power") {
  CHECK(z_power(2, 0) == unit_combo());
  CHECK(z_power(2, 3) == WordCombo{{W("2,2,2"), 1}});
  CHECK(combo_is_zero(z_power(2, -1)));
}

TEST_CASE("derivation") {
  WordCombo d = derivation(W("1,2"));
  CHECK(d[W("2,2")] == 1);
  CHECK(d[W("1,3")] == 2);
  // product rule across the stuffle product
  for (auto [u, v] : {std::pair{W("1"), W("2")}, std::pair{W("1,1"), W("2")},
                      std::pair{W("1,2"), W("1,1")}}) {
    WordCombo lhs = derivation(stuffle(u, v));
    WordCombo rhs;
    combo_add(rhs, stuffle(derivation(u), WordCombo{{v, 1}}));
    combo_add(rhs, stuffle(WordCombo{{u, 1}}, derivation(v)));
    CHECK(lhs == rhs);
  }
  // derivative of a power of z_1
  for (long long n : {1, 2, 3, 4}) {
    WordCombo lhs = derivation(z_power(1, n));
    WordCombo rhs = stuffle(z_power(1, 1), z_power(1, n));
    combo_add(rhs, z_power(1, n + 1), -(n + 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("stuffle determinants") {
  CHECK(det_stuffle({}) == unit_combo());
  std::vector<std::vector<WordCombo>> m1{{z_power(1, 2)}};
  CHECK(det_stuffle(m1) == z_power(1, 2));
  // [[z1, z1^2], [unit, z1]] -> z1*z1 - z1^2
  std::vector<std::vector<WordCombo>> m2{{z_power(1, 1), z_power(1, 2)},
                                         {unit_combo(), z_power(1, 1)}};
  WordCombo expect = stuffle(z_power(1, 1), z_power(1, 1));
  combo_add(expect, z_power(1, 2), -1);
  CHECK(det_stuffle(m2) == expect);
  // a zero row kills the determinant
  std::vector<std::vector<WordCombo>> m3{{WordCombo{}, WordCombo{}},
                                         {unit_combo(), z_power(1, 1)}};
  CHECK(combo_is_zero(det_stuffle(m3)));
  // transpose invariance on a 3x3 with word entries
  std::vector<std::vector<WordCombo>> m4(3, std::vector<WordCombo>(3));
  int k = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m4[i][j] = z_power(1 + (i + j) % 2, 1 + (k++ % 2));
  std::vector<std::vector<WordCombo>> m4t(3, std::vector<WordCombo>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m4t[i][j] = m4[j][i];
  CHECK(det_stuffle(m4) == det_stuffle(m4t));
}

TEST_CASE("phi of a shape, both routes") {
  // worked two-column case: phi((2,2)/(1)) = 2(1,1,1) + (1,2) + (2,1)
  SkewShape d = parse_shape("2,2/1");
  WordCombo expect;
  combo_add(expect, W("1,1,1"), 2);
  combo_add(expect, W("1,2"), 1);
  combo_add(expect, W("2,1"), 1);
  CHECK(phi_via_ssd(d) == expect);
  CHECK(phi_via_jacobi_trudi(d) == expect);

  for (const SkewShape& s : enumerate_skew_shapes(5)) {
    CAPTURE(shape_to_string(s));
    CHECK(phi_via_ssd(s) == phi_via_jacobi_trudi(s));
  }

  // ssd route agrees with the explicit decomposition list
  for (const SkewShape& s : {parse_shape("2,2"), parse_shape("3,1")}) {
    WordCombo direct;
    for (const StrictDecomp& sd : enumerate_ssd(s)) {
      Word w;
      for (const auto& block : sd) w.a.push_back((int)block.size());
      combo_add(direct, w, 1);
    }
    CHECK(direct == phi_via_ssd(s));
  }
}

TEST_CASE("phi closed forms") {
  // two-column shapes (2^{n+k})/(1^k)
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; n + k >= 1 && k <= 4 - n; ++k) {
      Partition lambda(n + k, 2), mu(k, 1);
      SkewShape d = make_skew_shape(lambda, mu);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(phi_two_column(n, k) == phi_via_jacobi_trudi(d));
    }

  // anti-hooks ((s+1)^r)/(s^{r-1}): coefficient depends only on the depth
  for (int s = 0; s <= 2; ++s)
    for (int r = 1; r <= 3; ++r) {
      Partition lambda(r, s + 1), mu(r - 1, s);
      SkewShape d = make_skew_shape(lambda, mu);
      WordCombo expect;
      for (int l = 0; l <= s; ++l) {
        Rat coeff = Rat(binomial(r + l - 1, l));
        // all words of weight r+s and depth r+l
        std::vector<int> cur(r + l, 1);
        auto rec = [&](auto&& self, int i, int left) -> void {
          if (i == (int)cur.size()) {
            if (left == 0) combo_add(expect, Word(cur), coeff);
            return;
          }
          for (int v = 1; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
          }
        };
        rec(rec, 0, r + s);
      }
      CAPTURE(s);
      CAPTURE(r);
      CHECK(phi_via_jacobi_trudi(d) == expect);
    }
}
