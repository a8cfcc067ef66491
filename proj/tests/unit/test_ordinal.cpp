#include "declab/error.hpp"
#include "declab/ordinal.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace declab;

namespace {

OrdinalMap map(int dom, int cod, std::vector<int> v) { return OrdinalMap(dom, cod, std::move(v)); }

}  // namespace

TEST_CASE("composition") {
  CHECK(compose(OrdinalMap::identity(2), coface(2, 1)) == coface(2, 1));
  CHECK(compose(codegeneracy(0, 0), coface(1, 1)) == OrdinalMap::identity(0));
  CHECK(compose(coface(2, 0), codegeneracy(1, 0)) == map(2, 2, {1, 1, 2}));
  CHECK(compose(coface(2, 2), codegeneracy(1, 1)) == map(2, 2, {0, 1, 1}));
  CHECK_THROWS_AS(compose(coface(2, 0), coface(2, 0)), CompositionError);
  CHECK_THROWS_AS(map(1, 1, {1, 0}), PreconditionError);
  CHECK_THROWS_AS(map(1, 1, {0, 2}), PreconditionError);
}

TEST_CASE("generators") {
  CHECK(coface(1, 0) == map(0, 1, {1}));
  CHECK(codegeneracy(0, 0) == map(1, 0, {0, 0}));
  CHECK(OrdinalMap::empty(3).dom() == -1);
  CHECK(OrdinalMap::constant(2, 3, 1) == map(2, 3, {1, 1, 1}));
}

TEST_CASE("cosimplicial identities") {
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j)
        CHECK(compose(coface(n + 1, j), coface(n, i)) == compose(coface(n + 1, i), coface(n, j - 1)));
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        CHECK(compose(codegeneracy(n, j), codegeneracy(n + 1, i)) ==
              compose(codegeneracy(n, i), codegeneracy(n + 1, j + 1)));
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const auto sd = compose(codegeneracy(n, j), coface(n + 1, i));
        if (i == j || i == j + 1)
          CHECK(sd.is_identity());
        else if (i < j)
          CHECK(sd == compose(coface(n, i), codegeneracy(n - 1, j - 1)));
        else
          CHECK(sd == compose(coface(n, i - 1), codegeneracy(n - 1, j)));
      }
  }
}

TEST_CASE("ordinal sum") {
  CHECK(ordinal_sum(Ordinal(0), Ordinal(0)) == Ordinal(1));
  CHECK(ordinal_sum(Ordinal(-1), Ordinal(5)) == Ordinal(5));
  CHECK(ordinal_sum(Ordinal(2), Ordinal(3)) == Ordinal(6));
  CHECK(ordinal_sum(map(1, 1, {0, 1}), map(0, 1, {1})) == map(2, 3, {0, 1, 3}));
  for (int k = -1; k <= 3; ++k)
    for (const auto& beta : enumerate_maps(Ordinal(1), Ordinal(k)))
      CHECK(ordinal_sum(OrdinalMap(), beta) == beta);
}

TEST_CASE("cofaces as ordinal sums") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      for (int i = -1; i < k; ++i)
        CHECK(ordinal_sum(OrdinalMap::identity(i), coface(n - i, k - i - 1)) == coface(n + 1, k));
      for (int i = k; i <= n; ++i)
        CHECK(ordinal_sum(coface(i + 1, k), OrdinalMap::identity(n - i - 1)) == coface(n + 1, k));
    }
}

TEST_CASE("split examples") {
  const auto s = split_at(coface(3, 2), 1);
  CHECK(s.j == 1);
  CHECK(s.first == OrdinalMap::identity(1));
  CHECK(s.second == coface(1, 0));

  const auto t = split_at(map(1, 2, {2, 2}), 1);
  CHECK(t.j == -1);
  CHECK(t.first == OrdinalMap::empty(1));
  CHECK(t.second == OrdinalMap::constant(1, 0, 0));

  for (int k = -1; k <= 5; ++k)
    for (int i = -1; i <= k; ++i) {
      const auto id = split_at(OrdinalMap::identity(k), i);
      CHECK(id.j == i);
      CHECK(id.first == OrdinalMap::identity(i));
      CHECK(id.second == OrdinalMap::identity(k - i - 1));
    }
}

TEST_CASE("split is the unique decomposition") {
  // Every (j, first, second) is tried, with maps listed by the oracle.
  for (int l = -1; l <= 4; ++l)
    for (int k = -1; k <= 4; ++k)
      for (const auto& values : oracle::monotone(l, k)) {
        const OrdinalMap beta(l, k, values);
        for (int i = -1; i <= k; ++i) {
          int found = 0;
          Split witness;
          for (int j = -1; j <= l; ++j)
            for (const auto& a : oracle::monotone(j, i))
              for (const auto& b : oracle::monotone(l - j - 1, k - i - 1)) {
                const OrdinalMap first(j, i, a);
                const OrdinalMap second(l - j - 1, k - i - 1, b);
                if (ordinal_sum(first, second) == beta) {
                  ++found;
                  witness = Split{j, first, second};
                }
              }
          REQUIRE(found == 1);
          CHECK(split_at(beta, i) == witness);
        }
      }
}

TEST_CASE("Eilenberg-Zilber factorization") {
  CHECK(ez_factor(OrdinalMap::identity(3)) == EzFactorization{OrdinalMap::identity(3), OrdinalMap::identity(3)});
  CHECK(ez_factor(map(1, 2, {1, 1})) == EzFactorization{map(0, 2, {1}), map(1, 0, {0, 0})});
  CHECK(ez_factor(map(2, 2, {0, 0, 2})) == EzFactorization{map(1, 2, {0, 2}), map(2, 1, {0, 0, 1})});
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= 4; ++k)
      for (const auto& beta : enumerate_maps(Ordinal(l), Ordinal(k))) {
        const auto f = ez_factor(beta);
        CHECK(f.mono.is_injective());
        CHECK(f.epi.is_surjective());
        CHECK(compose(f.mono, f.epi) == beta);
      }
}

TEST_CASE("peeling cofaces") {
  for (int m = 0; m <= 3; ++m)
    for (int n = m + 1; n <= 4; ++n)
      for (const auto& mono : enumerate_injections(Ordinal(m), Ordinal(n))) {
        const auto [i, rest] = peel_coface(mono);
        CHECK(compose(coface(n, i), rest) == mono);
        for (int v = 0; v < i; ++v) CHECK(std::find(mono.values().begin(), mono.values().end(), v) != mono.values().end());
      }
}

TEST_CASE("enumeration matches the brute-force count") {
  CHECK(enumerate_maps(Ordinal(1), Ordinal(1)).size() == 3);
  CHECK(enumerate_maps(Ordinal(-1), Ordinal(3)).size() == 1);
  CHECK(enumerate_maps(Ordinal(2), Ordinal(0)).size() == 1);
  for (int l = -1; l <= 4; ++l)
    for (int k = -1; k <= 4; ++k) {
      const auto maps = enumerate_maps(Ordinal(l), Ordinal(k));
      const auto expected = oracle::monotone(l, k);
      REQUIRE(maps.size() == expected.size());
      CHECK(maps.size() == static_cast<std::size_t>(oracle::binomial(k + l + 1, l + 1)));
      for (std::size_t t = 0; t < maps.size(); ++t) CHECK(maps[t].values() == expected[t]);
      std::size_t surj = 0, inj = 0;
      for (const auto& m : maps) {
        surj += m.is_surjective();
        inj += m.is_injective();
      }
      CHECK(enumerate_surjections(Ordinal(l), Ordinal(k)).size() == surj);
      CHECK(enumerate_injections(Ordinal(l), Ordinal(k)).size() == inj);
    }
}

TEST_CASE("flat encoding") {
  CHECK(to_flat(map(2, 3, {0, 1, 3})) == std::vector<int>{2, 3, 0, 1, 3});
  CHECK(to_flat(OrdinalMap::empty(2)) == std::vector<int>{-1, 2});
  for (int l = -1; l <= 3; ++l)
    for (const auto& m : enumerate_maps(Ordinal(l), Ordinal(2))) CHECK(from_flat(to_flat(m)) == m);
  CHECK_THROWS_AS(from_flat({1}), PreconditionError);
}
