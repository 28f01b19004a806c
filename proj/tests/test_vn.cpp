#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "padiclab/corpus.hpp"
#include "padiclab/group_groupoid.hpp"
#include "padiclab/rng.hpp"

using namespace padiclab;

namespace {

MatrixSubalgebra matrix_units_span(int64_t p, int N, size_t n, bool include_diagonal) {
  std::vector<PadicMatrix> gens;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j && !include_diagonal) continue;
      PadicMatrix e(p, N, n, n);
      e.set(i, j, 1);
      gens.push_back(std::move(e));
    }
  return MatrixSubalgebra(p, N, n, std::move(gens));
}

MatrixSubalgebra group_span(const FiniteGroup& g, int64_t p, int N) {
  auto ga = group_algebra(g, p, N);
  return MatrixSubalgebra(p, N, g.order, ga.left_regular.images);
}

}  // namespace

TEST_CASE("group tables validate") {
  CHECK(FiniteGroup::cyclic(6).validate().valid);
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order == 6);
  CHECK(s3.validate().valid);
  auto q8 = FiniteGroup::quaternion8();
  CHECK(q8.validate().valid);
  // Q_8 has a unique element of order 2.
  size_t order2 = 0;
  for (size_t x = 0; x < 8; ++x)
    if (x != q8.identity && q8.mul(x, x) == q8.identity) ++order2;
  CHECK(order2 == 1);
}

TEST_CASE("group algebras and the left regular representation") {
  auto triv = group_algebra(FiniteGroup::cyclic(1), 5, 6);
  CHECK(triv.algebra.dim == 1);
  CHECK(validate_algebra(triv.algebra).valid);

  auto c2 = group_algebra(FiniteGroup::cyclic(2), 5, 6);
  PadicMatrix swap(5, 6, 2, 2);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  CHECK(c2.left_regular.images[1] == swap);

  auto s3 = group_algebra(FiniteGroup::symmetric(3), 5, 6);
  CHECK(validate_algebra(s3.algebra).valid);
  CHECK(check_representation(s3.algebra, s3.left_regular).valid);
  // lambda is isometric: permutation matrices preserve the maximal coordinate.
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<bigint> f(6);
    for (auto& v : f) v = rng.residue(5, 6);
    CHECK(rep_apply(s3.left_regular, f).op_norm() == s3.algebra.coord_norm(f));
  }
  // Faithful: distinct group elements give distinct images.
  std::set<std::vector<bigint>> seen;
  for (const auto& img : s3.left_regular.images) {
    std::vector<bigint> v;
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 6; ++j) v.push_back(img.at(i, j));
    seen.insert(v);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("commutants: scalars, matrix units, group algebras") {
  // Scalars in M_3 commute with everything.
  MatrixSubalgebra scalars(5, 6, 3, {PadicMatrix::identity(5, 6, 3)});
  CHECK(commutant(scalars).rank() == 9);

  // All matrix units: the commutant is exactly the scalars.
  for (size_t n : {2, 3, 4}) {
    auto units = matrix_units_span(5, 6, n, true);
    auto comm = commutant(units);
    CHECK(comm.rank() == 1);
    CHECK(comm.contains(PadicMatrix::identity(5, 6, n)));
  }

  // lambda(Z_p[S_3]): the commutant is the span of the right translations.
  auto s3 = FiniteGroup::symmetric(3);
  auto span = group_span(s3, 5, 6);
  auto comm = commutant(span);
  CHECK(comm.rank() == 6);
  for (size_t g = 0; g < 6; ++g) {
    PadicMatrix rho(5, 6, 6, 6);  // right translation h -> h g^{-1}
    for (size_t h = 0; h < 6; ++h) rho.set(s3.mul(h, s3.inverse[g]), h, 1);
    CHECK(comm.contains(rho));
  }
}

TEST_CASE("commutant is antitone and S''' = S'") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    int64_t p = trial % 2 == 0 ? 3 : 5;
    size_t n = 3;
    PadicMatrix m1 = random_invertible(rng, p, 6, n);
    PadicMatrix m2 = random_invertible(rng, p, 6, n);
    MatrixSubalgebra small(p, 6, n, {m1});
    MatrixSubalgebra large(p, 6, n, {m1, m2});
    auto small_c = commutant(small);
    auto large_c = commutant(large);
    CHECK(small_c.span().contains(large_c.span()));  // S <= T implies T' <= S'
    auto small_ccc = commutant(commutant(small_c));
    CHECK(small_ccc.same_span(small_c));
  }
}

TEST_CASE("bicommutants of group algebras: already von Neumann") {
  for (auto make : {+[] { return FiniteGroup::cyclic(2); }, +[] { return FiniteGroup::cyclic(3); },
                    +[] { return FiniteGroup::cyclic(4); }, +[] { return FiniteGroup::symmetric(3); },
                    +[] { return FiniteGroup::quaternion8(); }}) {
    auto g = make();
    auto span = group_span(g, 5, 6);
    auto result = bicommutant_check(span);
    CHECK(result.is_vn);
  }
}

TEST_CASE("full matrix algebra is von Neumann; off-diagonal units are not") {
  auto full = matrix_units_span(5, 6, 3, true);
  CHECK(bicommutant_check(full).is_vn);

  // The span of the off-diagonal matrix units has trivial commutant, so its
  // bicommutant is everything: a strictly bigger span.
  auto offdiag = matrix_units_span(5, 6, 3, false);
  auto result = bicommutant_check(offdiag);
  CHECK_FALSE(result.is_vn);
  CHECK(result.bicommutant.rank() == 9);
  CHECK(result.bicommutant.same_span(full));
}

TEST_CASE("intersections of von Neumann algebras are von Neumann") {
  auto s3 = group_span(FiniteGroup::symmetric(3), 5, 6);
  auto full = matrix_units_span(5, 6, 6, true);
  auto both = intersect(s3, full);
  CHECK(bicommutant_check(both).is_vn);

  auto c4a = group_span(FiniteGroup::cyclic(4), 3, 6);
  auto scalars = MatrixSubalgebra(3, 6, 4, {PadicMatrix::identity(3, 6, 4)});
  CHECK(bicommutant_check(intersect(c4a, scalars)).is_vn);
}

TEST_CASE("centers, class sums and factors") {
  auto full = matrix_units_span(5, 6, 3, true);
  CHECK(is_factor(full));

  auto s3 = FiniteGroup::symmetric(3);
  auto s3span = group_span(s3, 5, 6);
  auto z = center(s3span);
  CHECK(z.rank() == 3);
  CHECK_FALSE(is_factor(s3span));

  auto classes = conjugacy_classes(s3);
  std::multiset<size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});

  // The center equals the span of the class sums exactly.
  auto ga = group_algebra(s3, 5, 6);
  std::vector<PadicMatrix> chi_mats;
  for (const auto& chi : class_sums(s3, 5, 6)) chi_mats.push_back(rep_apply(ga.left_regular, chi));
  MatrixSubalgebra chi_span(5, 6, 6, chi_mats);
  CHECK(z.same_span(chi_span));

  auto c4 = group_span(FiniteGroup::cyclic(4), 5, 6);
  CHECK(center(c4).rank() == 4);
  CHECK_FALSE(is_factor(c4));
  CHECK(conjugacy_classes(FiniteGroup::cyclic(4)).size() == 4);

  CHECK(conjugacy_classes(FiniteGroup::quaternion8()).size() == 5);
  auto q8 = group_span(FiniteGroup::quaternion8(), 3, 6);
  CHECK(center(q8).rank() == 5);

  // Finite nontrivial groups are never ICC, so only the trivial group
  // yields a factor.
  auto triv = group_span(FiniteGroup::cyclic(1), 5, 6);
  CHECK(is_factor(triv));
  for (size_t n : {2, 3, 4, 5, 6}) CHECK_FALSE(is_factor(group_span(FiniteGroup::cyclic(n), 5, 6)));
}

TEST_CASE("commutant reports precision exhaustion on unsaturated kernels") {
  PadicMatrix gen(5, 2, 2, 2);
  gen.set(0, 1, 5);  // p * E_12 at N = 2: the Sylvester kernel is torsion
  MatrixSubalgebra s(5, 2, 2, {gen});
  CHECK_THROWS_AS(commutant(s), Error);
}

TEST_CASE("groupoid validation and checks") {
  auto pair3 = FiniteGroupoid::pair(3);
  CHECK(pair3.validate().valid);
  auto chk = groupoid_checks(pair3);
  CHECK(chk.effective);
  CHECK(chk.minimal);

  auto c2 = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
  CHECK(c2.validate().valid);
  auto chk2 = groupoid_checks(c2);
  CHECK_FALSE(chk2.effective);
  CHECK(chk2.minimal);

  auto uu = FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(2), FiniteGroupoid::pair(2));
  CHECK(uu.validate().valid);
  auto chk3 = groupoid_checks(uu);
  CHECK(chk3.effective);
  CHECK_FALSE(chk3.minimal);

  for (const auto& [name, g] : groupoid_corpus()) {
    INFO(name);
    CHECK(g.validate().valid);
  }
}

TEST_CASE("Steinberg algebras over F_p") {
  // Pair groupoid on n points is M_n(F_p): compare structure constants under
  // the arrow (i, j) -> E_ij identification.
  for (size_t n : {2, 3}) {
    auto st = steinberg_fp(FiniteGroupoid::pair(n), 5);
    FpAlgebra mn(5, n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) mn.set_structure(i * n + j, j * n + l, i * n + l, 1);
    FpVec unit(n * n, 0);
    for (size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
    mn.unit = unit;
    CHECK(st == mn);
  }

  // One-object C_2 at p = 2 is F_2[C_2]; cross-check against the group
  // algebra reduced mod p.
  auto c2 = FiniteGroup::cyclic(2);
  auto st2 = steinberg_fp(FiniteGroupoid::from_group(c2), 2);
  auto red = mod_p(group_algebra(c2, 2, 4).algebra);
  CHECK(st2 == red);

  // Disjoint unions give block sums: products across blocks vanish.
  auto uu = FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(2),
                                           FiniteGroupoid::from_group(c2));
  auto stu = steinberg_fp(uu, 3);
  FpVec left(stu.dim, 0), right(stu.dim, 0);
  left[0] = 1;
  right[stu.dim - 1] = 1;
  CHECK(stu.product(left, right) == FpVec(stu.dim, 0));
}

TEST_CASE("simplicity over F_p: oracles") {
  // M_2(F_2) is simple, decided exhaustively over its 15 nonzero elements.
  auto m2 = steinberg_fp(FiniteGroupoid::pair(2), 2);
  auto v = is_simple(m2);
  CHECK(v.simple);
  CHECK(v.tier == "exhaustive");

  // F_3[C_3] is local: the augmentation ideal is proper and nilpotent.
  auto f3c3 = steinberg_fp(FiniteGroupoid::from_group(FiniteGroup::cyclic(3)), 3);
  auto v2 = is_simple(f3c3);
  CHECK_FALSE(v2.simple);
  REQUIRE(v2.witness.has_value());
  CHECK(ideal_closure(f3c3, *v2.witness).rank() < 3);
  // The augmentation direction delta_g - delta_e generates a proper ideal.
  CHECK(ideal_closure(f3c3, {2, 1, 0}).rank() < 3);

  // F_5[C_2] splits as F_5 x F_5; (1 + g)/2 generates one factor.
  auto f5c2 = steinberg_fp(FiniteGroupoid::from_group(FiniteGroup::cyclic(2)), 5);
  CHECK_FALSE(is_simple(f5c2).simple);
  CHECK(ideal_closure(f5c2, {3, 3}).rank() == 1);  // 3 = 1/2 mod 5

  CHECK_THROWS_AS(is_simple(steinberg_fp(FiniteGroupoid::pair(2), 5), 1, 10, 2), Error);
}

TEST_CASE("randomized simplicity tier agrees on larger instances") {
  // Pair groupoid on 5 points at p = 5: 5^25 residues, far beyond the
  // exhaustive bound, but M_5(F_5) is simple.
  auto m5 = steinberg_fp(FiniteGroupoid::pair(5), 5);
  auto v = is_simple(m5, 42);
  CHECK(v.simple);
  CHECK(v.tier == "randomized");

  // A disjoint union of two pair groupoids on 4 points: dim 32 at p = 3 is
  // randomized, and the block ideal must be found.
  auto uu = FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(4), FiniteGroupoid::pair(4));
  auto v2 = is_simple(steinberg_fp(uu, 3), 42);
  CHECK_FALSE(v2.simple);
  CHECK(v2.tier == "randomized");
  CHECK(v2.witness.has_value());
}

TEST_CASE("p-simplicity equivalence on the corpus") {
  for (const auto& [name, g] : groupoid_corpus()) {
    for (int64_t p : {2, 3, 5}) {
      INFO(name << " at p = " << p);
      auto verdict = p_simplicity(g, p, 1);
      CHECK(verdict.p_simple == (verdict.checks.effective && verdict.checks.minimal));
    }
  }
  // Named expectations.
  CHECK(p_simplicity(FiniteGroupoid::pair(3), 3).p_simple);
  auto c3 = p_simplicity(FiniteGroupoid::from_group(FiniteGroup::cyclic(3)), 3);
  CHECK_FALSE(c3.p_simple);
  CHECK_FALSE(c3.checks.effective);
  auto uu = p_simplicity(
      FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(2), FiniteGroupoid::pair(2)), 3);
  CHECK_FALSE(uu.p_simple);
  CHECK_FALSE(uu.checks.minimal);
}

TEST_CASE("groupoid algebras over Z_p reduce to the Steinberg algebra") {
  for (const auto& [name, g] : groupoid_corpus()) {
    if (g.arrows.size() > 12) continue;
    INFO(name);
    auto alg = groupoid_algebra(g, 3, 5);
    CHECK(validate_algebra(alg).valid);
    auto red = mod_p(alg);
    auto st = steinberg_fp(g, 3);
    CHECK(red == st);
  }
}
