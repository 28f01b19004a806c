#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "padiclab/padic.hpp"
#include "padiclab/rng.hpp"

using namespace padiclab;

// ---- independent oracles (brute force over residues) ----------------------

namespace {

// All square roots of x mod p^N by enumeration; empty when none exist.
std::vector<bigint> oracle_sqrts(const bigint& x, int64_t p, int N) {
  bigint mod = pow_int(p, N);
  std::vector<bigint> roots;
  for (bigint y = 0; y < mod; ++y)
    if (mod_reduce(y * y, mod) == mod_reduce(x, mod)) roots.push_back(y);
  return roots;
}

bigint oracle_inverse(const bigint& x, int64_t p, int N) {
  bigint mod = pow_int(p, N);
  for (bigint y = 1; y < mod; ++y)
    if (mod_reduce(x * y, mod) == 1) return y;
  return -1;
}

std::set<int64_t> oracle_squares_mod_p(int64_t p) {
  std::set<int64_t> s;
  for (int64_t r = 0; r < p; ++r) s.insert(r * r % p);
  return s;
}

// Lexicographically first (x, y) with x^2 + y^2 = u mod p.
std::pair<int64_t, int64_t> oracle_two_squares_mod_p(int64_t u, int64_t p) {
  for (int64_t x = 0; x < p; ++x)
    for (int64_t y = 0; y < p; ++y)
      if ((x * x + y * y) % p == ((u % p) + p) % p) return {x, y};
  return {-1, -1};
}

}  // namespace

TEST_CASE("valuation and norm values") {
  CHECK(PadicInt(5, 4, 50).valuation().exponent() == 2);  // 50 = 2 * 5^2
  CHECK(PadicInt(5, 4, 0).valuation().is_below_precision());
  CHECK(PadicInt(3, 5, 7).valuation().exponent() == 0);
  CHECK(norm_le(NormValue::below_precision(), NormValue::exact(3)));
  CHECK(norm_lt(NormValue::exact(2), NormValue::exact(1)));
  CHECK(NormValue::exact(1) == NormValue::exact(1));
}

TEST_CASE("arithmetic mod p^N") {
  CHECK(PadicInt(5, 2, 12) + PadicInt(5, 2, 13) == PadicInt(5, 2, 0));
  CHECK(PadicInt(5, 2, 12) * PadicInt(5, 2, 13) == PadicInt(5, 2, 6));  // 156 mod 25
  CHECK(-PadicInt(2, 3, 3) == PadicInt(2, 3, 5));
  CHECK_THROWS_AS(PadicInt(5, 2, 1) + PadicInt(7, 2, 1), Error);
  CHECK_THROWS_AS(PadicInt(5, 2, 1) + PadicInt(5, 3, 1), Error);
}

TEST_CASE("unit inverse against brute force") {
  CHECK(oracle_inverse(2, 5, 2) == 13);
  CHECK(PadicInt(5, 2, 2).inverse() == PadicInt(5, 2, 13));
  CHECK(oracle_inverse(3, 7, 1) == 5);
  CHECK(PadicInt(7, 1, 3).inverse() == PadicInt(7, 1, 5));
  CHECK_THROWS_AS(PadicInt(5, 2, 5).inverse(), Error);
}

TEST_CASE("square detection by residue enumeration") {
  auto sq5 = oracle_squares_mod_p(5);
  CHECK(sq5 == std::set<int64_t>{0, 1, 4});
  CHECK(is_square(PadicInt(5, 4, 4)));
  CHECK_FALSE(is_square(PadicInt(5, 4, 2)));
  auto sq7 = oracle_squares_mod_p(7);
  CHECK(sq7.count(2) == 1);  // 3^2 = 9 = 2 mod 7
  CHECK(is_square(PadicInt(7, 4, 2)));
  CHECK_THROWS_AS(is_square(PadicInt(2, 4, 3)), Error);
  CHECK_THROWS_AS(is_square(PadicInt(5, 2, 0)), Error);
}

TEST_CASE("canonical square roots (Hensel) match enumeration") {
  auto roots = oracle_sqrts(2, 7, 2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == 10);  // canonical: the smaller of {10, 39}
  CHECK(sqrt(PadicInt(7, 2, 2)) == PadicInt(7, 2, 10));

  auto iroots = oracle_sqrts(24, 5, 2);  // -1 mod 25
  REQUIRE(iroots.size() == 2);
  CHECK(iroots[0] == 7);
  CHECK(sqrt(PadicInt(5, 2, 24)) == PadicInt(5, 2, 7));

  auto r4 = oracle_sqrts(4, 5, 3);
  CHECK(r4 == std::vector<bigint>{2, 123});
  CHECK(sqrt(PadicInt(5, 3, 4)) == PadicInt(5, 3, 2));

  CHECK_THROWS_AS(sqrt(PadicInt(5, 3, 2)), Error);
  CHECK_THROWS_AS(sqrt(PadicInt(2, 3, 1)), Error);
}

TEST_CASE("canonical non-residues") {
  CHECK(oracle_squares_mod_p(5).count(2) == 0);
  CHECK(nonresidue(5, 4) == PadicInt(5, 4, 2));
  CHECK(oracle_squares_mod_p(7).count(3) == 0);
  CHECK(oracle_squares_mod_p(7).count(2) == 1);
  CHECK(nonresidue(7, 4) == PadicInt(7, 4, 3));
  CHECK(nonresidue(3, 4) == PadicInt(3, 4, 2));
  CHECK_THROWS_AS(nonresidue(2, 4), Error);
}

TEST_CASE("two squares decomposition") {
  CHECK(oracle_two_squares_mod_p(2, 5) == std::pair<int64_t, int64_t>{1, 1});
  auto [x, y] = two_squares(PadicInt(5, 4, 2));
  CHECK(x == PadicInt(5, 4, 1));
  CHECK(y == PadicInt(5, 4, 1));

  CHECK(oracle_two_squares_mod_p(3, 7) == std::pair<int64_t, int64_t>{1, 3});
  auto [a, b] = two_squares(PadicInt(7, 1, 3));
  CHECK(a == PadicInt(7, 1, 1));
  CHECK(b == PadicInt(7, 1, 3));

  CHECK_THROWS_AS(two_squares(PadicInt(5, 4, 10)), Error);
  CHECK_THROWS_AS(two_squares(PadicInt(2, 4, 1)), Error);
}

TEST_CASE("ultrametric inequality on random samples") {
  for (int64_t p : {2, 3, 5, 7}) {
    Rng rng(42 + (uint64_t)p);
    const int N = 8;
    for (int i = 0; i < 300; ++i) {
      PadicInt x(p, N, rng.residue(p, N));
      PadicInt y(p, N, rng.residue(p, N));
      int vx = x.valuation().exponent_or(N);
      int vy = y.valuation().exponent_or(N);
      int vs = (x + y).valuation().exponent_or(N);
      CHECK(vs >= std::min(vx, vy));
      if (vx != vy) CHECK(vs == std::min(vx, vy));
    }
  }
}

TEST_CASE("sqrt soundness on 500 random squares per odd prime") {
  for (int64_t p : {3, 5, 7}) {
    Rng rng(1000 + (uint64_t)p);
    const int N = 16;
    for (int i = 0; i < 500; ++i) {
      PadicInt r(p, N, rng.residue(p, N));
      PadicInt x = r * r;
      if (x.is_zero()) continue;
      PadicInt s = sqrt(x);
      CHECK(s * s == x);
    }
  }
}

TEST_CASE("square classes partition the units") {
  for (int64_t p : {3, 5, 7}) {
    Rng rng(77 + (uint64_t)p);
    const int N = 12;
    PadicInt u = nonresidue(p, N);
    for (int i = 0; i < 500; ++i) {
      PadicInt x(p, N, rng.unit_residue(p, N));
      bool a = is_square(x);
      bool b = is_square(x * u);
      CHECK(a != b);
    }
  }
}

TEST_CASE("two squares soundness on random units") {
  for (int64_t p : {3, 5, 7}) {
    Rng rng(9 + (uint64_t)p);
    const int N = 16;
    for (int i = 0; i < 200; ++i) {
      PadicInt u(p, N, rng.unit_residue(p, N));
      auto [x, y] = two_squares(u);
      CHECK(x * x + y * y == u);
    }
  }
}
