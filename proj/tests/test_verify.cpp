#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "schurmzv/verify.hpp"

using namespace schurmzv;

namespace {

// smallest sensible parameters per checker, for fast smoke coverage
VerifyOptions narrow(const std::string& id) {
  VerifyOptions o;
  o.M = 10;
  if (id == "mzv-sum" || id == "mzsv-sum") {
    o.n = 2;
    o.w_lo = o.w_hi = 4;
  } else if (id == "anti-hook") {
    o.s_list = {1};
    o.r_list = {1};
    o.w_lo = o.w_hi = 3;
  } else if (id == "stair") {
    o.r_list = {1};
    o.n = 2;
    o.w_lo = o.w_hi = 7;
  } else if (id == "s00") {
    o.s_list = {0};
    o.r_list = {1, 1};
    o.w_lo = o.w_hi = 4;
  } else if (id == "inductive") {
    o.s_list = {1, 1};
    o.r_list = {2, 1};  // the split needs r_i >= 2 at the chosen corner
    o.i = 1;
    o.w_lo = o.w_hi = 7;
  } else if (id == "two-corner") {
    o.s_list = {0, 1};
    o.r_list = {1, 1};
    o.w_lo = o.w_hi = 5;
  } else if (id == "hook") {
    o.s_list = {2};
    o.r_list = {1};
    o.w_lo = o.w_hi = 5;
  } else if (id == "one-corner") {
    o.shape = "2,2";
    o.w_lo = o.w_hi = 5;
  } else if (id == "sw-rel") {
    o.shape = "2,2";
    o.w_lo = o.w_hi = 6;
  } else if (id == "symmetric") {
    o.s_list = {0};
    o.r_list = {1, 1};
    o.w_lo = o.w_hi = 4;
  } else if (id == "square-22") {
    o.w_lo = o.w_hi = 5;
  } else if (id == "examples-41") {
    o.w_lo = o.w_hi = 6;
  }
  return o;
}

}  // namespace

TEST_CASE("registry lists the thirteen checkers in canonical order") {
  const std::vector<std::string> want = {
      "mzv-sum",  "mzsv-sum",  "anti-hook", "stair",     "s00",
      "inductive", "two-corner", "hook",     "one-corner", "sw-rel",
      "symmetric", "square-22", "examples-41"};
  CHECK(verify_ids() == want);
}

TEST_CASE("every id runs and passes on its narrow parameters") {
  for (const auto& id : verify_ids()) {
    auto reps = run_verify(id, narrow(id));
    CHECK(!reps.empty());
    for (const auto& r : reps) {
      INFO(id, " ", r.params);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(run_verify("no-such-checker", {}), parse_error);
  CHECK_THROWS_AS(run_verify("", {}), parse_error);
}

TEST_CASE("default grids have one report per case") {
  VerifyOptions def;
  CHECK(run_verify("mzv-sum", def).size() == 21);     // d=1,2,3 up to w=9
  CHECK(run_verify("square-22", def).size() == 8);    // 5 weights + 3 brute
  CHECK(run_verify("examples-41", def).size() == 9);  // 3 checks x 3 weights
  CHECK(run_verify("symmetric", def).size() == 3);
}

TEST_CASE("weight ranges clamp to the validity threshold") {
  VerifyOptions o;
  o.r_list = {2};
  o.n = 2;
  o.w_lo = 1;
  o.w_hi = 9;  // threshold for (r,n)=(2,2) is 9
  auto reps = run_verify("stair", o);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].params.find("w=9") != std::string::npos);
}

TEST_CASE("zero budget skips everything, in order") {
  auto suite = run_verify_all({}, 4, 0.0);
  CHECK(suite.results.empty());
  CHECK(suite.skipped == verify_ids());
}

TEST_CASE("full default suite passes within the budget") {
  auto suite = run_verify_all({}, 8, 600.0);
  CHECK(suite.skipped.empty());
  REQUIRE(suite.results.size() == verify_ids().size());
  for (std::size_t k = 0; k < suite.results.size(); ++k) {
    CHECK(suite.results[k].first == verify_ids()[k]);
    CHECK(!suite.results[k].second.empty());
    for (const auto& r : suite.results[k].second) {
      INFO(suite.results[k].first, " ", r.params);
      CHECK(r.passed);
    }
  }
}
