#include "acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <memory>

#include "declab/error.hpp"
#include "declab/hom.hpp"
#include "declab/homology.hpp"
#include "declab/kan.hpp"
#include "checks.hpp"
#include "space.hpp"

namespace declab::cli {

namespace {

struct Criterion {
  const char* name;
  double budget;
  std::function<CheckResult()> body;
};

std::vector<std::pair<std::string, SSet>> corpus() {
  std::vector<std::pair<std::string, SSet>> out;
  for (const auto& expr : acceptance_corpus()) out.emplace_back(expr, parse_space(expr));
  return out;
}

CheckResult over_corpus(const std::function<CheckResult(const SSet&)>& check) {
  for (const auto& [expr, x] : corpus()) {
    auto r = check(x);
    if (!r.ok) {
      r.message = expr + ": " + r.message;
      return r;
    }
  }
  return CheckResult::pass();
}

AbGroup z(std::size_t rank) { return AbGroup{rank, {}}; }

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"splitting uniqueness", 1,
       [] { return check_split_uniqueness(5); }},
      {"split forks", 5,
       [] {
         return over_corpus([](const SSet& x) {
           for (int k = 2; k <= 5; ++k)
             for (int i = 0; i <= k - 1; ++i) {
               const auto fork = verify_split_fork(x, k, i);
               if (!fork.ok) return CheckResult::fail(fork.witness);
             }
           return CheckResult::pass();
         });
       }},
      {"pi0 identification", 5,
       [] { return over_corpus([](const SSet& x) { return check_pi0_identification(x, 4); }); }},
      {"two-route sigma_!", 10,
       [] {
         auto r = over_corpus([](const SSet& x) { return check_two_routes(dec(x), 4); });
         if (!r.ok) return r;
         for (const auto* expr : {"external(boundary(2), simplex(1))", "external(simplex(1), simplex(1))"}) {
           r = check_two_routes(std::make_shared<const BiSSet>(parse_bispace(expr)), 4);
           if (!r.ok) {
             r.message = std::string(expr) + ": " + r.message;
             return r;
           }
         }
         return r;
       }},
      {"counit identification", 10,
       [] { return over_corpus([](const SSet& x) { return check_counit(x, 4); }); }},
      {"unit comparison", 60,
       [] {
         const Total t(dec(simplex(1)));
         const auto endo = hom(simplex(1), simplex(1)).size();
         if (t.size(0) != 3 || endo != 3)
           return CheckResult::fail("|total(dec simplex(1), 0)| = " + std::to_string(t.size(0)) +
                                    ", |hom(simplex(1), simplex(1))| = " + std::to_string(endo) + ", expected 3");
         return over_corpus([](const SSet& x) { return check_comparison(x, 3); });
       }},
      {"weak-equivalence surrogate", 120,
       [] {
         auto r = over_corpus([](const SSet& x) { return verify_retraction(x, 2); });
         if (!r.ok) return r;
         const std::vector<std::pair<std::string, std::vector<AbGroup>>> expected = {
             {"boundary(3)", {z(1), z(0), z(1)}},
             {"quotient(simplex(1), boundary(1))", {z(1), z(1), z(0)}},
             {"simplex(2)", {z(1), z(0), z(0)}},
         };
         for (const auto& [expr, groups] : expected) {
           const auto u = check_unit_homology(parse_space(expr), 2);
           if (!u.result.ok) return CheckResult::fail(expr + ": " + u.result.message);
           if (u.source != groups || u.target != groups)
             return CheckResult::fail(expr + ": H_* = " + to_text(u.source) + " and " + to_text(u.target) +
                                      ", expected " + to_text(groups));
         }
         return r;
       }},
      {"adjunction oracle", 60,
       [] {
         std::vector<std::string> ys = {"dec_simplex(0)", "dec_simplex(1)", "dec_simplex(2)"};
         const auto exprs = acceptance_corpus();
         for (const auto& a : exprs)
           for (const auto& b : exprs) {
             const auto y = "external(" + a + ", " + b + ")";
             if (parse_bispace(y).cells().size() <= 20) ys.push_back(y);
           }
         for (const auto& y : ys) {
           const BiSSet bi = parse_bispace(y);
           if (bi.cells().size() > 20) return CheckResult::fail(y + " has more than 20 bicells");
           for (const auto* x : {"simplex(0)", "simplex(1)", "boundary(2)"}) {
             auto r = check_adjunction(bi, parse_space(x));
             if (!r.ok) return CheckResult::fail(y + " against " + x + ": " + r.message);
           }
         }
         return CheckResult::pass();
       }},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& acceptance_corpus() {
  static const std::vector<std::string> exprs = {
      "simplex(0)",  "simplex(1)", "simplex(2)", "boundary(2)", "boundary(3)",
      "horn(2, 1)",  "quotient(simplex(1), boundary(1))", "product(simplex(1), simplex(1))",
  };
  return exprs;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(criteria().size())) throw PreconditionError("no criterion " + std::to_string(id));
  const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult out;
  out.id = id;
  out.name = c.name;
  out.budget = c.budget;
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = c.body();
  } catch (const InconclusiveError& e) {
    r = CheckResult::fail(std::string("inconclusive: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.ok = r.ok;
  out.detail = r.message;
  if (r.square) out.detail += " [" + r.square->to_string() + "]";
  if (out.ok && out.seconds > out.budget) {
    out.ok = false;
    out.detail = "exceeded the time budget";
  }
  return out;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(criteria().size()); ++id) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string to_text(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, " (%.2f s, budget %.0f s)", r.seconds, r.budget);
  std::string s = "criterion " + std::to_string(r.id) + " " + r.name + ": " + (r.ok ? "PASS" : "FAIL") + timing;
  if (!r.detail.empty()) s += ": " + r.detail;
  return s;
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j = {{"id", r.id}, {"name", r.name}, {"status", r.ok ? "pass" : "fail"}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(j);
  }
  return {{"version", 1}, {"criteria", arr}};
}

}  // namespace declab::cli
