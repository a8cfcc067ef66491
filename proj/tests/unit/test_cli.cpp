#include "acceptance.hpp"
#include "checks.hpp"
#include "corpus.hpp"
#include "declab/error.hpp"
#include "doctest.h"
#include "space.hpp"

using namespace declab;
using namespace declab::cli;

TEST_CASE("builder expressions") {
  CHECK(parse_space("simplex(2)") == simplex(2));
  CHECK(parse_space("  quotient ( simplex(1) ,boundary( 1 ) ) ") == corpus::circle());
  CHECK(parse_space("product(simplex(1), simplex(1))") == product(simplex(1), simplex(1)).sset());
  CHECK(parse_space("disjoint(simplex(0), horn(2, 0))") == disjoint_union(simplex(0), horn(2, 0)));
  CHECK(parse_bispace("external(simplex(1), simplex(0))") == external_product(simplex(1), simplex(0)));
  CHECK(parse_bispace("dec_simplex(1)") == DecSimplex(1).bisset());
  for (const auto& expr : acceptance_corpus()) CHECK_NOTHROW(parse_space(expr));
}

TEST_CASE("builder errors carry positions") {
  auto position = [](const std::string& expr) -> long {
    try {
      parse_space(expr);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("simplex(2") == 9);
  CHECK(position("simplx(2)") == 0);
  CHECK(position("product(simplex(1) simplex(1))") == 19);
  CHECK(position("simplex(2) x") == 11);
  CHECK(position("simplex(-1)") == 8);
  CHECK(position("horn(2, 3)") == 0);
  CHECK(position("") == 0);
  CHECK_THROWS_AS(parse_space("quotient(simplex(1), boundary(2))"), ValidationError);
  CHECK_THROWS_AS(parse_bispace("simplex(1)"), ParseError);
}

TEST_CASE("checks from the command line") {
  const auto cmp = run({"comparison", "simplex(1)", "", 3, 2});
  CHECK(cmp.status == Status::pass);
  CHECK(run({"counit", "boundary(2)", "", 4, 2}).status == Status::pass);
  const auto uh = run({"unit-homology", "quotient(simplex(1),boundary(1))", "", 4, 1});
  CHECK(uh.status == Status::pass);
  CHECK(to_text(uh) == "pass unit-homology quotient(simplex(1),boundary(1)) D=1: H_* = (Z, Z) on both sides");
  for (const auto& name : check_names()) {
    INFO(name);
    CHECK(run({name, "boundary(2)", "", 2, 1}).status == Status::pass);
  }
  CHECK(run({"two-route-sigma", "simplex(0)", "external(boundary(2), simplex(1))", 3, 2}).status == Status::pass);
  CHECK(run({"adjunction", "simplex(1)", "dec_simplex(1)", 4, 2}).status == Status::pass);
  CHECK_THROWS_AS(run({"counit", "", "", 4, 2}), PreconditionError);
  CHECK_THROWS_AS(run({"nonsense", "simplex(0)", "", 4, 2}), PreconditionError);
  CHECK_THROWS_AS(run({"counit", "simplex(0)", "", -1, 2}), PreconditionError);
  CHECK_THROWS_AS(run({"counit", "simplex(0)", "dec_simplex(0)", 1, 2}), PreconditionError);
}

TEST_CASE("reports are deterministic") {
  std::vector<Entry> a, b;
  for (const auto& name : check_names()) {
    a.push_back(run({name, "horn(2, 1)", "", 2, 1}));
    b.push_back(run({name, "horn(2, 1)", "", 2, 1}));
  }
  CHECK(report_json(a).dump() == report_json(b).dump());
  CHECK(report_json(a)["results"].size() == check_names().size());
  CHECK(report_json(a)["results"][0]["object"].is_null());
}

TEST_CASE("report fields") {
  Entry e;
  e.check = "counit";
  e.object = "simplex(1)";
  e.cutoff = 4;
  e.status = Status::fail;
  e.message = "not natural";
  e.witness = SquareFailure{coface(1, 0), 1, 2, 0, 1};
  const auto j = to_json(e);
  CHECK(j["witness"]["beta"] == nlohmann::json::array({0, 1, 1}));
  CHECK(j["status"] == "fail");
  CHECK(exit_code({e}) == 1);

  Entry pending = e;
  pending.status = Status::inconclusive;
  pending.witness.reset();
  Entry ok = pending;
  ok.status = Status::pass;
  CHECK(exit_code({ok, pending}) == 2);
  CHECK(exit_code({ok}) == 0);
  CHECK(exit_code({pending, e}) == 1);

  const auto uh = to_json(run({"unit-homology", "boundary(3)", "", 4, 2}));
  CHECK(uh["homology"]["source"][2]["rank"] == 1);
  CHECK(uh["homology"]["maps"].size() == 3);
}
