#include <random>

#include "corpus.hpp"
#include "declab/error.hpp"
#include "declab/homology.hpp"
#include "declab/kan.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace declab;

namespace {

MatrixZ to_matrix(const oracle::Mat& m) {
  MatrixZ out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = static_cast<std::int64_t>(m[r][c]);
  return out;
}

oracle::Mat to_oracle(const MatrixZ& m) {
  oracle::Mat out(m.rows(), oracle::Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).to_mpz().get_si();
  return out;
}

AbGroup z(std::size_t rank, std::vector<Int> torsion = {}) { return AbGroup{rank, std::move(torsion)}; }


}  // namespace

TEST_CASE("integers promote instead of overflowing") {
  const Int big = std::numeric_limits<std::int64_t>::max();
  const Int sum = big + Int(1);
  CHECK(sum.to_mpz() == mpz_class("9223372036854775808"));
  CHECK(sum - Int(1) == big);
  CHECK((big * big).to_mpz() == mpz_class("85070591730234615847396907784232501249"));
  CHECK(-Int(std::numeric_limits<std::int64_t>::min()) == Int(mpz_class("9223372036854775808")));
  CHECK(Int(std::numeric_limits<std::int64_t>::min()) / Int(-1) == Int(mpz_class("9223372036854775808")));
  CHECK(Int(-7) / Int(2) == Int(-3));
  CHECK(Int(-7) % Int(2) == Int(-1));
  CHECK_THROWS_AS(Int(1) / Int(0), PreconditionError);
  CHECK(Int(mpz_class("100000000000000000000")) - Int(mpz_class("99999999999999999999")) == Int(1));
  CHECK(Int(-3) < Int(2));
  CHECK(Int(mpz_class("-100000000000000000000")) < Int(-5));
  CHECK(Int(-12).abs() == Int(12));
  CHECK(Int(mpz_class("-100000000000000000000")).to_string() == "-100000000000000000000");

  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const auto a = static_cast<std::int64_t>(rng());
    const auto b = static_cast<std::int64_t>(rng() >> (rng() % 64));
    const mpz_class ma(static_cast<long>(a)), mb(static_cast<long>(b));
    CHECK((Int(a) + Int(b)).to_mpz() == ma + mb);
    CHECK((Int(a) - Int(b)).to_mpz() == ma - mb);
    CHECK((Int(a) * Int(b)).to_mpz() == ma * mb);
    if (b != 0) {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
      CHECK((Int(a) / Int(b)).to_mpz() == q);
      CHECK((Int(a) % Int(b)).to_mpz() == r);
    }
  }
}

TEST_CASE("Smith normal form examples") {
  const auto zero = snf(MatrixZ(2, 3));
  CHECK(zero.d.is_zero());
  CHECK(zero.rank == 0);
  CHECK(snf(MatrixZ(2, 2, {{2, 0}, {0, 3}})).diagonal() == std::vector<Int>{1, 6});
  CHECK(snf(MatrixZ::identity(4)).d == MatrixZ::identity(4));
  CHECK(snf(MatrixZ(3, 3, {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).diagonal() == std::vector<Int>{2, 6, 12});
  CHECK(snf(MatrixZ(0, 3)).rank == 0);
  CHECK(snf(MatrixZ(3, 0)).rank == 0);
}

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937 rng(11);
  for (int t = 0; t < 400; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    oracle::Mat m(rows, oracle::Row(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng() % 13) - 6;
    if (t % 5 == 0) m[0] = oracle::Row(cols, 0);
    const auto f = snf(to_matrix(m));
    const auto expected = oracle::invariant_factors(m);
    const auto got = f.diagonal();
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Int(static_cast<std::int64_t>(expected[i])));
    CHECK(f.u * to_matrix(m) * f.v == f.d);
  }
}

TEST_CASE("determinant against the Leibniz formula") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng() % 5;
    oracle::Mat m(n, oracle::Row(n));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng() % 11) - 5;
    CHECK(determinant(to_matrix(m)) == Int(static_cast<std::int64_t>(oracle::det(m))));
  }
}

TEST_CASE("Smith normal form with entries past 64 bits") {
  const Int huge(mpz_class("100000000000000000000000"));
  const MatrixZ m(2, 2, {{huge, 3}, {7, Int(mpz_class("-99999999999999999999"))}});
  const auto f = snf(m);
  CHECK(f.diagonal()[0] == Int(1));
  CHECK(f.diagonal()[1] == determinant(m).abs());
}

TEST_CASE("boundaries square to zero") {
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(boundary_squares_to_zero(normalized_chains(x, 5)));
  }
  CHECK(boundary_squares_to_zero(normalized_chains(corpus::projective_plane(), 4)));
}

TEST_CASE("homology examples") {
  CHECK(homology(simplex(2), 2) == std::vector<AbGroup>{z(1), z(0), z(0)});
  CHECK(homology(boundary(3), 2) == std::vector<AbGroup>{z(1), z(0), z(1)});
  CHECK(homology(corpus::circle(), 1) == std::vector<AbGroup>{z(1), z(1)});
  CHECK(homology(product(corpus::circle(), corpus::circle()).sset(), 2) == std::vector<AbGroup>{z(1), z(2), z(1)});
  CHECK(homology(corpus::projective_plane(), 2) == std::vector<AbGroup>{z(1), z(0, {Int(2)}), z(0)});
  CHECK(homology(corpus::projective_plane(), 2)[1].to_string() == "Z/2");
  CHECK(homology(disjoint_union(boundary(2), simplex(0)), 1)[0].to_string() == "Z^2");
}

TEST_CASE("Betti numbers against ranks modulo primes") {
  auto check = [](const SSet& x) {
    const auto c = normalized_chains(x, 4);
    const auto h = Homology(c, 3);
    for (int n = 0; n <= 3; ++n) {
      for (long long p : {1000003LL, 2LL, 3LL}) {
        const auto rn = oracle::rank_mod(to_oracle(c.boundary[static_cast<std::size_t>(n)]), p);
        const auto rn1 = oracle::rank_mod(to_oracle(c.boundary[static_cast<std::size_t>(n + 1)]), p);
        const auto betti = c.rank(n) - rn - rn1;
        // Over a large prime: the free rank. Over 2 and 3: free rank plus
        // torsion divisible by p in degrees n and n-1.
        std::size_t expected = h.group(n).rank;
        if (p < 100) {
          for (const auto& t : h.group(n).torsion) expected += (t % Int(static_cast<std::int64_t>(p))).is_zero();
          if (n > 0)
            for (const auto& t : h.group(n - 1).torsion) expected += (t % Int(static_cast<std::int64_t>(p))).is_zero();
        }
        CHECK(betti == expected);
      }
    }
  };
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    check(x);
  }
  check(corpus::projective_plane());
}

TEST_CASE("H_0 counts components") {
  for (const auto& [name, x] : corpus::all()) CHECK(homology(x, 0)[0].rank == pi0(x).class_count());
  const auto two = disjoint_union(corpus::circle(), simplex(2));
  CHECK(homology(two, 0)[0].rank == 2);
}

TEST_CASE("generators and coordinates") {
  const auto c = normalized_chains(boundary(2), 2);
  const Homology h(c, 1);
  const auto gens = h.generators(1);
  REQUIRE(gens.size() == 1);
  CHECK(h.coordinates(1, gens[0]) == std::vector<Int>{1});
  std::vector<Int> twice(gens[0].size());
  for (std::size_t i = 0; i < twice.size(); ++i) twice[i] = gens[0][i] * Int(-2);
  CHECK(h.coordinates(1, twice) == std::vector<Int>{-2});
  CHECK_THROWS_AS(h.coordinates(1, {1, 0, 0}), PreconditionError);

  const auto rp = Homology(normalized_chains(corpus::projective_plane(), 3), 2);
  const auto g = rp.generators(1);
  REQUIRE(g.size() == 1);
  std::vector<Int> thrice(g[0].size());
  for (std::size_t i = 0; i < thrice.size(); ++i) thrice[i] = g[0][i] * Int(3);
  CHECK(rp.coordinates(1, thrice) == std::vector<Int>{1});
}

TEST_CASE("induced maps") {
  const auto x = corpus::circle();
  const auto id = induced(x, x, levelwise(x, x, identity_map(x), 2), 1);
  CHECK(id.homology[0] == MatrixZ::identity(1));
  CHECK(id.homology[1] == MatrixZ::identity(1));
  CHECK(is_homology_iso(id));

  const auto collapse = hom(simplex(1), simplex(0)).front();
  CHECK(is_homology_iso(simplex(1), simplex(0), levelwise(simplex(1), simplex(0), collapse, 2), 1));

  const auto d3 = simplex(3);
  const auto inclusion = find_embedding(boundary(3), d3);
  REQUIRE(inclusion.has_value());
  const auto incl = induced(boundary(3), d3, levelwise(boundary(3), d3, *inclusion, 3), 2);
  CHECK(incl.homology[2].rows() == 0);
  CHECK(incl.homology[2].cols() == 1);
  CHECK_FALSE(is_homology_iso(incl));

  bool saw_constant = false;
  for (const auto& f : hom(x, x)) {
    const auto m = induced(x, x, levelwise(x, x, f, 2), 1);
    if (m.homology[1].is_zero()) {
      saw_constant = true;
      CHECK_FALSE(is_homology_iso(m));
    }
  }
  CHECK(saw_constant);
}

TEST_CASE("induced maps are functorial on chains") {
  const auto a = simplex(1), b = boundary(2), c = corpus::circle();
  const auto fs = hom(a, b);
  const auto gs = hom(b, c);
  for (const auto& f : fs)
    for (const auto& g : gs) {
      const auto gf = compose(a, b, c, g, f);
      const auto lhs = induced(a, c, levelwise(a, c, gf, 2), 1);
      const auto mf = induced(a, b, levelwise(a, b, f, 2), 1);
      const auto mg = induced(b, c, levelwise(b, c, g, 2), 1);
      for (int n = 0; n <= 2; ++n)
        CHECK(lhs.chain[static_cast<std::size_t>(n)] ==
              mg.chain[static_cast<std::size_t>(n)] * mf.chain[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("a levelwise map that is not simplicial is rejected") {
  const auto x = boundary(2);
  auto f = levelwise(x, x, identity_map(x), 2);
  std::swap(f.levels[0][0], f.levels[0][1]);
  CHECK_THROWS_AS(induced(x, x, f, 1), ValidationError);
}

TEST_CASE("retraction identity") {
  CHECK(verify_retraction(simplex(0), 3).ok);
  CHECK(verify_retraction(simplex(1), 2).ok);
  CHECK(verify_retraction(boundary(2), 2).ok);
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(verify_retraction(x, 2).ok);
  }
}

TEST_CASE("the unit induces isomorphisms on homology") {
  const auto s1 = check_unit_homology(corpus::circle(), 1);
  CHECK(s1.result.ok);
  CHECK(s1.source == std::vector<AbGroup>{z(1), z(1)});
  CHECK(s1.target == s1.source);
  CHECK(check_unit_homology(boundary(3), 2).source == std::vector<AbGroup>{z(1), z(0), z(1)});
  CHECK(check_unit_homology(simplex(2), 2).source == std::vector<AbGroup>{z(1), z(0), z(0)});
  for (const auto& [name, x] : corpus::all()) {
    INFO(name);
    CHECK(check_unit_homology(x, 2).result.ok);
  }
  const auto rp = check_unit_homology(corpus::projective_plane(), 1);
  CHECK(rp.result.ok);
  CHECK(rp.target[1] == z(0, {Int(2)}));
}
