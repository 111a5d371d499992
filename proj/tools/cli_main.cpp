// schurmzv command line: evaluation, theorem verification, tables.
//
// Exit codes: 0 ok, 1 failed verification, 2 parse error / bad id,
// 3 domain error.  JSON objects carry "schema":"1" as their first key and
// are emitted with fixed key order; exact rationals print as bare JSON
// strings.  CSV uses '.' decimals regardless of environment.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurmzv/formulas.hpp"
#include "schurmzv/mzv.hpp"
#include "schurmzv/posets.hpp"
#include "schurmzv/schur.hpp"
#include "schurmzv/shapes.hpp"
#include "schurmzv/tableaux.hpp"
#include "schurmzv/verify.hpp"
#include "schurmzv/weighted.hpp"
#include "schurmzv/words.hpp"

using json = nlohmann::ordered_json;
using namespace schurmzv;

namespace {

int g_exit = 0;

void emit(const json& j) { std::printf("%s\n", j.dump().c_str()); }

void emit_rational(const Rat& q) {
  emit(json(rat_to_string(q)));
}

json result_json(const EvalResult& r) {
  json j;
  j["value"] = r.value;
  j["err_bound"] = r.err;
  j["bound_kind"] = bound_kind_name(r.kind);
  return j;
}

void emit_result(const EvalResult& r) {
  json j;
  j["schema"] = "1";
  j.update(result_json(r));
  emit(j);
}

std::pair<long long, long long> parse_range(const std::string& s) {
  auto p = s.find("..");
  if (p == std::string::npos)
    throw parse_error("bad range '" + s + "' (want a..b)");
  try {
    long long lo = std::stoll(s.substr(0, p));
    long long hi = std::stoll(s.substr(p + 2));
    if (lo > hi) throw parse_error("empty range '" + s + "'");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw parse_error("bad range '" + s + "'");
  } catch (const std::out_of_range&) {
    throw parse_error("bad range '" + s + "'");
  }
}

json report_json(const FormulaReport& r) {
  json c;
  c["params"] = r.params;
  c["lhs"] = result_json(r.lhs);
  c["rhs"] = result_json(r.rhs);
  c["abs_diff"] = r.abs_diff;
  c["passed"] = r.passed;
  return c;
}

bool print_reports_text(const std::string& id,
                        const std::vector<FormulaReport>& reps) {
  int pass = 0;
  for (const auto& r : reps) {
    std::printf("%s %s %s | lhs=%.10g rhs=%.10g diff=%.3g\n",
                r.passed ? "[ OK ]" : "[FAIL]", id.c_str(), r.params.c_str(),
                r.lhs.value, r.rhs.value, r.abs_diff);
    pass += r.passed;
  }
  std::printf("%s: %d/%zu passed\n", id.c_str(), pass, reps.size());
  return pass == (int)reps.size();
}

struct VerifyArgs {
  std::string id;
  VerifyOptions opt;
  std::string w_range;
  bool as_json = false;
  int jobs = 1;
  double budget = 600;
};

void cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt = a.opt;
  if (!a.w_range.empty())
    std::tie(opt.w_lo, opt.w_hi) = parse_range(a.w_range);
  if (a.id == "all") {
    VerifyOptions base;  // the full suite runs its default grids
    base.tol = opt.tol;
    auto suite = run_verify_all(base, a.jobs, a.budget);
    bool all_pass = true;
    if (a.as_json) {
      json out;
      out["schema"] = "1";
      out["results"] = json::array();
      for (const auto& [id, reps] : suite.results) {
        json r;
        r["id"] = id;
        r["cases"] = json::array();
        bool ok = true;
        for (const auto& rep : reps) {
          r["cases"].push_back(report_json(rep));
          ok = ok && rep.passed;
        }
        r["passed"] = ok;
        all_pass = all_pass && ok;
        out["results"].push_back(r);
      }
      out["skipped"] = suite.skipped;
      out["passed"] = all_pass;
      emit(out);
    } else {
      for (const auto& [id, reps] : suite.results)
        all_pass = print_reports_text(id, reps) && all_pass;
      for (const auto& id : suite.skipped)
        std::printf("[SKIP] %s (budget exhausted)\n", id.c_str());
    }
    g_exit = all_pass ? 0 : 1;
    return;
  }
  auto reps = run_verify(a.id, opt);
  bool ok = true;
  if (a.as_json) {
    json out;
    out["schema"] = "1";
    out["id"] = a.id;
    out["cases"] = json::array();
    for (const auto& rep : reps) {
      out["cases"].push_back(report_json(rep));
      ok = ok && rep.passed;
    }
    out["passed"] = ok;
    emit(out);
  } else {
    ok = print_reports_text(a.id, reps);
  }
  g_exit = ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multiple zeta values: evaluation and verification"};
  app.require_subcommand(1);

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate a value");
  eval->require_subcommand(1);

  {
    auto* c = eval->add_subcommand("mzv", "multiple zeta value of an index");
    auto index = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-8);
    auto m = std::make_shared<long long>(0);
    c->add_option("--index", *index, "index, e.g. 1,3")->required();
    c->add_option("--tol", *tol, "target error bound");
    c->add_option("--exact-m", *m, "exact truncation: all variables < M");
    c->callback([index, tol, m] {
      Word w = parse_word(*index);
      if (*m > 0)
        emit_rational(mzv_trunc(w, *m));
      else
        emit_result(mzv_numeric(w, *tol));
    });
  }
  {
    auto* c = eval->add_subcommand("schur", "tableau value of a filled shape");
    auto shape = std::make_shared<std::string>();
    auto fill = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-8);
    auto m = std::make_shared<long long>(0);
    c->add_option("--shape", *shape, "skew shape, e.g. 2,2/1")->required();
    c->add_option("--fill", *fill, "row-major filling, e.g. \"1;2,1\"")
        ->required();
    c->add_option("--tol", *tol, "target error bound");
    c->add_option("--exact-m", *m, "exact truncation: all variables < M");
    c->callback([shape, fill, tol, m] {
      SkewShape d = parse_shape(*shape);
      Filling t = parse_filling(d, *fill);
      if (*m > 0)
        emit_rational(schur_trunc_direct(d, t, *m));
      else
        emit_result(schur_numeric(d, t, *tol));
    });
  }
  {
    auto* c = eval->add_subcommand("sw", "S_w of a shape at one weight");
    auto shape = std::make_shared<std::string>();
    auto w = std::make_shared<long long>(0);
    auto tol = std::make_shared<double>(1e-8);
    auto m = std::make_shared<long long>(0);
    c->add_option("--shape", *shape, "skew shape")->required();
    c->add_option("--w", *w, "weight")->required();
    c->add_option("--tol", *tol, "target error bound");
    c->add_option("--exact-m", *m, "exact truncation: all variables < M");
    c->callback([shape, w, tol, m] {
      WordCombo v = sw_value_combo(parse_shape(*shape), *w);
      if (*m > 0)
        emit_rational(mzv_trunc_combo(v, *m));
      else
        emit_result(eval_combo(v, *tol));
    });
  }
  {
    auto* c = eval->add_subcommand("phi", "phi invariant of a shape");
    auto shape = std::make_shared<std::string>();
    c->add_option("--shape", *shape, "skew shape")->required();
    c->callback([shape] {
      json out;
      out["schema"] = "1";
      out["combo"] = combo_to_string(phi_via_jacobi_trudi(parse_shape(*shape)));
      emit(out);
    });
  }
  {
    auto* c = eval->add_subcommand("weighted", "binomial-weighted sum P_l(n;k)");
    auto k = std::make_shared<std::vector<int>>();
    auto n = std::make_shared<std::vector<int>>();
    auto l = std::make_shared<int>(0);
    auto tol = std::make_shared<double>(0);
    c->add_option("--k", *k, "binomial parameters k")
        ->required()
        ->delimiter(',');
    c->add_option("--l", *l, "extra weight l")->required();
    c->add_option("--n", *n, "lower bounds n (default all 1)")->delimiter(',');
    c->add_option("--tol", *tol, "also evaluate numerically");
    c->callback([k, n, l, tol] {
      WeightedSumSpec s;
      s.k = *k;
      s.n = n->empty() ? std::vector<int>(k->size(), 1) : *n;
      s.l = *l;
      WordCombo v = P_def(s);
      json out;
      out["schema"] = "1";
      out["combo"] = combo_to_string(v);
      if (*tol > 0) out.update(result_json(eval_combo(v, *tol)));
      emit(out);
    });
  }

  // ---- verify ----
  auto va = std::make_shared<VerifyArgs>();
  {
    auto* c = app.add_subcommand("verify", "run a theorem checker");
    c->add_option("id", va->id, "checker id, or 'all'")->required();
    c->add_option("--s", va->opt.s_list, "horizontal run lengths")
        ->delimiter(',');
    c->add_option("--r", va->opt.r_list, "vertical run lengths")
        ->delimiter(',');
    c->add_option("--i", va->opt.i, "block index");
    c->add_option("--n", va->opt.n, "depth / repetition count");
    c->add_option("--shape", va->opt.shape, "skew shape");
    c->add_option("--w-range", va->w_range, "weight range a..b");
    c->add_option("--tol", va->opt.tol, "tolerance override");
    c->add_option("--M", va->opt.M, "truncation cutoff for exact checks");
    c->add_flag("--json", va->as_json, "machine-readable report");
    c->add_option("--jobs", va->jobs, "worker pool size for 'all'");
    c->add_option("--budget-seconds", va->budget,
                  "time budget for 'all' (default 600)");
    c->callback([va] { cmd_verify(*va); });
  }

  // ---- table ----
  auto* table = app.add_subcommand("table", "CSV tables over a weight range");
  table->require_subcommand(1);
  {
    auto* c = table->add_subcommand("sw", "S_w values of a shape");
    auto shape = std::make_shared<std::string>();
    auto range = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-8);
    c->add_option("--shape", *shape, "skew shape")->required();
    c->add_option("--w-range", *range, "weight range a..b")->required();
    c->add_option("--tol", *tol, "target error bound per row");
    c->callback([shape, range, tol] {
      SkewShape d = parse_shape(*shape);
      auto [lo, hi] = parse_range(*range);
      std::printf("w,value,err_bound\n");
      for (long long w = lo; w <= hi; ++w) {
        EvalResult r = eval_combo(sw_value_combo(d, w), *tol);
        std::printf("%lld,%.17g,%.3g\n", w, r.value, r.err);
      }
    });
  }
  {
    auto* c = table->add_subcommand("stair", "stair-ribbon values and c_{w,r}(n)");
    auto r = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto range = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-8);
    c->add_option("--r", *r, "tread width parameter")->required();
    c->add_option("--n", *n, "number of steps")->required();
    c->add_option("--w-range", *range, "weight range a..b")->required();
    c->add_option("--tol", *tol, "target error bound per row");
    c->callback([r, n, range, tol] {
      RibbonSpec sp = stair_spec(*r, *n);
      long long thr = (long long)(*r + 2) * *n + 1;
      auto [lo, hi] = parse_range(*range);
      std::printf("w,coeff,value,err_bound\n");
      for (long long w = lo; w <= hi; ++w) {
        std::string coeff =
            w >= thr ? rat_to_string(stair_coeff_integral(*r, *n, w)) : "0";
        EvalResult v = eval_combo(ribbon_sw_combo(sp, w), *tol);
        std::printf("%lld,%s,%.17g,%.3g\n", w, coeff.c_str(), v.value, v.err);
      }
    });
  }

  // ---- poset ----
  auto* poset = app.add_subcommand("poset", "labeled 2-poset utilities");
  poset->require_subcommand(1);
  {
    auto* c = poset->add_subcommand("expand", "expand the admissible part");
    auto spec = std::make_shared<std::string>();
    auto cap = std::make_shared<int>(14);
    c->add_option("--spec", *spec, "poset \"a<b,c<d;labels\"")->required();
    c->add_option("--cap", *cap, "size cap for extension enumeration");
    c->callback([spec, cap] {
      TwoPoset x = parse_poset(*spec);
      json out;
      out["schema"] = "1";
      out["poset"] = poset_to_string(x);
      out["admissible"] = poset_admissible(x);
      out["extensions"] = extension_count(x, *cap).str();
      out["admissible_part"] = combo_to_string(admissible_part(x, *cap));
      emit(out);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 3;
  }
  return g_exit;
}
