#include <memory>

#include "corpus.hpp"
#include "declab/bisset.hpp"
#include "declab/kan.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace declab;

TEST_CASE("bisimplicial sets") {
  const auto e = external_product(simplex(1), simplex(0));
  CHECK(e.size(1, 0) == 3);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) CHECK(e.size(k, l) == simplex(1).size(k));
  for (Elem x = 0; x < e.size(1, 1); ++x) CHECK(e.act(OrdinalMap::identity(1), OrdinalMap::identity(1), x) == x);
  const auto d0 = external_product(simplex(0), simplex(0));
  CHECK(d0.cells().size() == 1);
}

TEST_CASE("decalage levels") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      CHECK(dec(simplex(0))->size(k, l) == 1);
      CHECK(dec(simplex(2))->size(k, l) == oracle::simplex_level(2, k + 1 + l));
    }
  CHECK(dec(simplex(1))->size(0, 0) == 3);
  const auto d = dec(boundary(2));
  for (Elem x = 0; x < d->size(1, 2); ++x) {
    CHECK(d->act(OrdinalMap::identity(1), OrdinalMap::identity(2), x) == x);
    CHECK(d->act(coface(1, 0), coface(2, 2), x) == boundary(2).act(ordinal_sum(coface(1, 0), coface(2, 2)), x));
  }
}

TEST_CASE("decalage of a standard simplex made explicit") {
  // Nondegenerate bicells: maps [p+1+q] -> [n] injective on each block.
  for (int n = 0; n <= 3; ++n) {
    std::size_t expected = 0;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + 1 + q <= 2 * n + 1; ++q)
        for (const auto& v : oracle::monotone(p + 1 + q, n)) {
          bool inj = true;
          for (int r = 1; r <= p; ++r) inj = inj && v[r - 1] < v[r];
          for (int r = p + 2; r <= p + 1 + q; ++r) inj = inj && v[r - 1] < v[r];
          expected += inj;
        }
    const DecSimplex ds(n);
    CHECK(ds.bisset().cells().size() == expected);
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) CHECK(ds.bisset().size(k, l) == oracle::simplex_level(n, k + 1 + l));
  }
  CHECK(hom(DecSimplex(0).bisset(), *dec(simplex(0))).size() == 1);
}

TEST_CASE("split uniqueness, exhaustive") { CHECK(check_split_uniqueness(5).ok); }

TEST_CASE("components of rows and columns") {
  const auto y = dec(simplex(2));
  const Components first(y, Collapse::first);
  const Components second(y, Collapse::second);
  CHECK(first.size(1) == 6);
  CHECK(second.size(1) == 6);
  CHECK(Components(dec(corpus::circle()), Collapse::first).size(0) == 1);
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(check_pi0_identification(x, 4).ok);
  }
}

TEST_CASE("augmentations") {
  CHECK(iota_shriek(std::make_shared<const SSet>(simplex(2)))->size(-1) == 1);
  CHECK(iota_shriek(std::make_shared<const SSet>(boundary(1)))->size(-1) == 2);
  CHECK(iota_shriek(std::make_shared<const SSet>(boundary(1)))->augmentation_coequalizes());

  const auto a = iota2_shriek(std::make_shared<const BiSSet>(external_product(boundary(1), simplex(0))));
  for (int j = 0; j <= 3; ++j) CHECK(a->size(-1, j) == 2);
  CHECK(check_augmentation_laws(*a, 3).ok);

  const auto pt = iota2_shriek(dec(simplex(0)));
  for (int i = -1; i <= 2; ++i)
    for (int j = -1; j <= 2; ++j) CHECK(pt->size(i, j) == 1);
  for (int n = 0; n <= 3; ++n) {
    const auto corner = iota2_shriek(dec(simplex(n)));
    CHECK(corner->size(-1, -1) == 1);
    CHECK(check_augmentation_laws(*corner, 3).ok);
  }
}

TEST_CASE("sigma_! of Dec X has (k+2)|X_k| elements") {
  for (const auto& [name, x] : corpus::all()) {
    const SigmaShriek s(dec(x));
    for (int k = 0; k <= 4; ++k) {
      CHECK(s.size(k) == static_cast<std::size_t>(k + 2) * x.size(k));
      std::size_t total = 0;
      for (int i = -1; i <= k; ++i) total += s.summand_size(k, i);
      CHECK(total == s.size(k));
      for (Elem e = 0; e < s.size(k); ++e) CHECK(s.element(k, s.locate(k, e)) == e);
    }
    CHECK(check_simplicial_identities(s, 4).ok);
  }
}

TEST_CASE("sigma_! of the point is simplex(1)") {
  const SigmaShriek s(std::make_shared<const BiSSet>(external_product(simplex(0), simplex(0))));
  for (int k = 0; k <= 5; ++k) CHECK(s.size(k) == simplex(1).size(k));
  const auto c = cellize(s, 1);
  CHECK(c.sset.cell_count(0) == 2);
  CHECK(c.sset.cell_count(1) == 1);
}

TEST_CASE("a coface whose split point is -1 lands in the first summand") {
  const SigmaShriek s(dec(simplex(2)));
  for (int k = 1; k <= 3; ++k)
    for (Elem e = 0; e < s.size(k); ++e)
      if (s.locate(k, e).i == 0) CHECK(s.locate(k - 1, s.act(coface(k, 0), e)).i == -1);
}

TEST_CASE("two routes to sigma_!") {
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(check_two_routes(dec(x), 4).ok);
  }
  CHECK(check_two_routes(std::make_shared<const BiSSet>(external_product(boundary(2), simplex(1))), 4).ok);
  CHECK(check_two_routes(std::make_shared<const BiSSet>(external_product(simplex(1), simplex(1))), 4).ok);
  CHECK(check_two_routes(std::make_shared<const BiSSet>(DecSimplex(2).bisset()), 3).ok);
}

TEST_CASE("counit") {
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(check_counit(x, 4).ok);
  }
  CHECK(split_indicator(2, -1) == OrdinalMap(2, 1, {1, 1, 1}));
  CHECK(split_indicator(2, 0) == OrdinalMap(2, 1, {0, 1, 1}));
  CHECK(split_indicator(2, 2) == OrdinalMap(2, 1, {0, 0, 0}));
  const auto iso = counit_iso(boundary(2), 3);
  CHECK(iso.verify().ok);
}

TEST_CASE("a permuted bijection is not natural") {
  auto iso = counit_iso(simplex(1), 2);
  std::swap(iso.map.levels[0][0], iso.map.levels[0][1]);
  const auto r = iso.verify();
  CHECK_FALSE(r.ok);
  REQUIRE(r.square.has_value());
  CHECK(r.square->lhs != r.square->rhs);
}

TEST_CASE("total simplicial set") {
  for (int n = 0; n <= 3; ++n) CHECK(Total(dec(simplex(0))).size(n) == 1);
  const Total t(dec(simplex(1)));
  CHECK(t.size(0) == 3);
  CHECK(t.size(0) == hom(simplex(1), simplex(1)).size());
  const auto u = unit_map(simplex(1), t, 0);
  CHECK(u(0, 0) != u(0, 1));
  CHECK(check_simplicial_identities(t, 3).ok);
}

TEST_CASE("comparison with the path object") {
  CHECK(check_comparison(simplex(0), 3).ok);
  CHECK(check_comparison(simplex(1), 3).ok);
  CHECK(check_comparison(boundary(2), 2).ok);
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(check_comparison(x, 3).ok);
  }
  const auto xp = std::make_shared<const SSet>(simplex(1));
  const Total t(dec(xp));
  const Cotensor c(xp, simplex(1));
  CHECK(c.size(0) == 3);
  // The two vertices go to the two constant homotopies.
  for (Elem v = 0; v < 2; ++v) CHECK(comparison(simplex(1), t, c, 0, unit(simplex(1), t, 0, v)) == c.constant(0, v));
}

TEST_CASE("adjunction by enumeration") {
  CHECK(hom(DecSimplex(0).bisset(), *dec(simplex(1))).size() == 3);
  const SigmaShriek s(std::make_shared<const BiSSet>(DecSimplex(0).bisset()));
  CHECK(hom(cellize(s, 1).sset, simplex(1)).size() == 3);
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(hom(external_product(simplex(0), simplex(0)), *dec(x)).size() == x.size(1));
    if (x.total_cells() <= 7) CHECK(check_adjunction(external_product(simplex(0), simplex(0)), x).ok);
  }
  for (int n = 0; n <= 2; ++n) {
    CHECK(check_adjunction(DecSimplex(n).bisset(), simplex(0)).ok);
    CHECK(check_adjunction(DecSimplex(n).bisset(), simplex(1)).ok);
    CHECK(check_adjunction(DecSimplex(n).bisset(), boundary(2)).ok);
  }
  CHECK(check_adjunction(external_product(boundary(2), simplex(1)), boundary(2)).ok);
}
