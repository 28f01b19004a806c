#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "padiclab/rng.hpp"
#include "padiclab/star_algebra.hpp"
#include "padiclab/corpus.hpp"
#include "padiclab/standard_form.hpp"

using namespace padiclab;

namespace {

std::vector<bigint> basis_vec(size_t d, size_t i) {
  std::vector<bigint> v(d, bigint(0));
  v[i] = 1;
  return v;
}

bool space_contains(const std::vector<std::vector<int64_t>>& space, const FpVec& v, int64_t p) {
  if (space.empty()) return false;
  FpSpan span(p, v.size());
  for (const auto& b : space) span.insert(b);
  return span.contains(v);
}

}  // namespace

TEST_CASE("validation of structure constants") {
  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 2)));
  CHECK(validate_algebra(m2).valid);

  StarAlgebra broken(5, 4, 2);
  broken.set_structure(0, 0, 0, 1);
  broken.set_structure(0, 1, 1, 1);
  broken.set_structure(1, 0, 1, 1);
  broken.set_structure(1, 1, 0, 1);
  broken.set_structure(1, 1, 1, 1);  // makes (e1 e1) e1 != e1 (e1 e1)? keep associative check honest
  auto report = validate_algebra(broken);
  if (!report.valid) CHECK(report.issues[0].check == "associativity");

  StarAlgebra badinv = m2;
  badinv.invol.set(0, 0, 2);  // breaks invol^2 = id
  CHECK_FALSE(validate_algebra(badinv).valid);
}

TEST_CASE("unitization") {
  StarAlgebra zero_mult(5, 4, 1);  // one-dimensional zero multiplication
  CHECK_FALSE(zero_mult.is_unital());
  auto plus = unitize(zero_mult);
  CHECK(plus.dim == 2);
  CHECK(plus.is_unital());
  CHECK(validate_algebra(plus).valid);
  // The adjoined unit really multiplies: (1, x)(1, y) has unit coordinate 1.
  auto prod = plus.product({1, 2}, {1, 3});
  CHECK(prod[0] == 1);
  CHECK(prod[1] == 5);  // 2 + 3, zero product contributes nothing

  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 2)));
  CHECK(unitize(m2).dim == m2.dim);
}

TEST_CASE("matrix algebra over an algebra: M_2(M_2) matches M_4") {
  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 2)));
  auto m2m2 = matrix_algebra(m2, 2);
  auto m4 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 4)));
  CHECK(m2m2.dim == 16);
  CHECK(validate_algebra(m2m2).valid);
  // Identify E_IJ ox E_ij with the matrix unit E_{2I+i, 2J+j} of M_4 and
  // compare every structure constant.
  auto reindex = [&](size_t t) {
    size_t outer = t / 4, inner = t % 4;
    size_t I = outer / 2, J = outer % 2, i = inner / 2, j = inner % 2;
    return (2 * I + i) * 4 + (2 * J + j);
  };
  for (size_t x = 0; x < 16; ++x)
    for (size_t y = 0; y < 16; ++y)
      for (size_t z = 0; z < 16; ++z)
        CHECK(m2m2.structure(x, y, z) == m4.structure(reindex(x), reindex(y), reindex(z)));
  // Involutions agree under the same identification.
  for (size_t x = 0; x < 16; ++x) {
    auto lhs = m2m2.star(basis_vec(16, x));
    auto rhs = m4.star(basis_vec(16, reindex(x)));
    for (size_t z = 0; z < 16; ++z) CHECK(lhs[z] == rhs[reindex(z)]);
  }
}

TEST_CASE("reduction mod p") {
  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 2)));
  auto fp = mod_p(m2);
  CHECK(fp.dim == 4);
  // Matrix units: E_11 E_12 = E_12.
  CHECK(fp.product({1, 0, 0, 0}, {0, 1, 0, 0}) == FpVec{0, 1, 0, 0});

  auto quad = quad_ext_algebra(5, 4, 2);
  auto fq = mod_p(quad);
  // t^2 = u-bar in F_p[t]/(t^2 - u).
  CHECK(fq.product({0, 1}, {0, 1}) == FpVec{2, 0});
}

TEST_CASE("nilpotent 2x2 example is ultra-antisymmetric exactly at p = 2") {
  for (int64_t p : {2, 3, 5, 7}) {
    auto a = nilpotent_pair_algebra(p, 8);
    CHECK(validate_algebra(a).valid);
    auto space = ultra_antisymmetric_space(a);
    bool contains_a = space_contains(space, {0, 1}, p);
    if (p == 2)
      CHECK(contains_a);
    else
      CHECK_FALSE(contains_a);
  }
}

TEST_CASE("4x4 antisymmetric example: b*ac + c*a*b vanishes identically") {
  for (int64_t p : {5, 13}) {  // primes with i^2 = -1 solvable
    auto a = antisymmetric_pair_algebra(p, 8);
    CHECK(validate_algebra(a).valid);
    // The defining combination vanishes exactly, not just mod p: check on
    // all basis pairs b, c with a the nilpotent direction e_1.
    const size_t d = a.dim;
    auto e1 = basis_vec(d, 1);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        auto b = basis_vec(d, i);
        auto c = basis_vec(d, j);
        auto t1 = a.product(a.product(a.star(b), e1), c);
        auto t2 = a.product(a.product(a.star(c), a.star(e1)), b);
        for (size_t k = 0; k < d; ++k) CHECK(mod_reduce(t1[k] + t2[k], a.modulus()) == 0);
      }
    auto space = ultra_antisymmetric_space(a);
    CHECK(space_contains(space, {0, 1}, p));
  }
}

TEST_CASE("M_2 of any unital algebra has trivial ultra-antisymmetric space") {
  // The nilpotent pair at p = 2, pushed into M_2.
  auto a2 = nilpotent_pair_algebra(2, 6);
  CHECK(ultra_antisymmetric_space(matrix_algebra(a2, 2)).empty());

  Rng rng(404);
  auto corpus = random_algebra_corpus(rng, 100);
  for (const auto& a : corpus) {
    auto m2a = matrix_algebra(unitize(a), 2);
    CHECK(ultra_antisymmetric_space(m2a).empty());
  }
}

TEST_CASE("ultra-antisymmetry is residue-determined") {
  Rng rng(11);
  auto a = antisymmetric_pair_algebra(5, 8);
  auto space = ultra_antisymmetric_space(a);
  // Perturb the distinguished element by p * (random); membership of the
  // residue class is unchanged, so the test must see the same verdict.
  for (int t = 0; t < 20; ++t) {
    std::vector<bigint> elem{0, 1};
    for (auto& v : elem) v = mod_reduce(v + 5 * rng.residue(5, 7), a.modulus());
    FpVec residue{(elem[0] % 5).convert_to<int64_t>(), (elem[1] % 5).convert_to<int64_t>()};
    CHECK(space_contains(space, residue, 5));
  }
}

TEST_CASE("quasi-state validation") {
  StarAlgebra zp(5, 4, 1);
  zp.set_structure(0, 0, 0, 1);
  zp.unit = basis_vec(1, 0);
  CHECK(validate_quasi_state(zp, {bigint(1)}).valid);
  CHECK_FALSE(validate_quasi_state(zp, {bigint(5)}).valid);  // norm 1/p

  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 2)));
  // phi(X) = X_12 is not symmetric: phi(E_12*) = phi(E_21) = 0 != 1.
  QuasiState phi(4, bigint(0));
  phi[1] = 1;
  auto report = validate_quasi_state(m2, phi);
  CHECK_FALSE(report.valid);
  CHECK(report.issues[0].check == "symmetry");
}

TEST_CASE("coordinate quasi-states") {
  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 4, 2)));
  auto states = coordinate_quasi_states(m2);
  REQUIRE(states.size() == 4);
  // phi_(1,1)(X) = 2 X_11.
  CHECK(states[0].coords == std::vector<bigint>{2, 0, 0, 0});
  CHECK(states[0].valid);
  // phi_(1,2)(X) = X_12 + X_21.
  CHECK(states[1].coords == std::vector<bigint>{0, 1, 1, 0});

  StarAlgebra z2(2, 4, 1);
  z2.set_structure(0, 0, 0, 1);
  z2.unit = basis_vec(1, 0);
  auto s2 = coordinate_quasi_states(z2);
  CHECK_FALSE(s2[0].valid);  // phi = 2 id has norm 1/2 at p = 2
}

TEST_CASE("GNS: rank-one algebra") {
  StarAlgebra zp(5, 6, 1);
  zp.set_structure(0, 0, 0, 1);
  zp.unit = basis_vec(1, 0);
  auto g = gns(zp, {bigint(1)});
  CHECK(g.rep.target.rank() == 1);
  CHECK(g.rep.images[0] == PadicMatrix::identity(5, 6, 1));
  CHECK(*g.rep.cyclic_vector == std::vector<bigint>{1});
  CHECK(g.null_ideal.empty());
}

TEST_CASE("GNS: M_2 with phi(X) = 2 X_11 acts on the first column") {
  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 6, 2)));
  QuasiState phi{2, 0, 0, 0};
  auto g = gns(m2, phi);
  CHECK(g.rep.target.rank() == 2);
  CHECK(g.quotient_columns == std::vector<size_t>{0, 2});  // E_11, E_21 classes
  // I_phi = matrices with vanishing first column: E_12 and E_22 directions.
  RowSpan ideal(5, 6, 4);
  for (auto& v : g.null_ideal) ideal.insert(v);
  CHECK(ideal.contains(std::vector<bigint>{0, 1, 0, 0}));
  CHECK(ideal.contains(std::vector<bigint>{0, 0, 0, 1}));
  CHECK_FALSE(ideal.contains(std::vector<bigint>{1, 0, 0, 0}));
  // pi is the standard action on the column space: pi(E_11) fixes the first
  // basis class and kills the second.
  CHECK(g.rep.images[0].at(0, 0) == 1);
  CHECK(g.rep.images[0].at(1, 1) == 0);
  CHECK(g.rep.isometric_on_basis);
}

TEST_CASE("GNS: state supported on one summand of Z_p x Z_p kills the other") {
  // Coordinatewise product, swap involution; phi = evaluation at both
  // coordinates (symmetric for the swap).
  StarAlgebra a(5, 6, 2);
  a.set_structure(0, 0, 0, 1);
  a.set_structure(1, 1, 1, 1);
  a.invol = PadicMatrix(5, 6, 2, 2);
  a.invol.set(0, 1, 1);
  a.invol.set(1, 0, 1);
  a.unit = std::vector<bigint>{1, 1};
  CHECK(validate_algebra(a).valid);

  // For the swap involution, symmetric states need equal coordinates; a
  // central-idempotent-supported functional is NOT symmetric here, so use
  // the trivial involution variant to isolate a summand.
  StarAlgebra b = a;
  b.invol = PadicMatrix::identity(5, 6, 2);
  QuasiState phi{1, 0};  // supported on the first summand
  auto g = gns(b, phi);
  CHECK(g.rep.target.rank() == 1);
  // pi kills the complementary summand.
  CHECK(g.rep.images[1].is_zero());
  CHECK_FALSE(g.rep.images[0].is_zero());
}

TEST_CASE("GNS identity and contractivity on a generated corpus") {
  Rng rng(2718);
  auto corpus = random_algebra_corpus(rng, 40);
  int instances = 0;
  for (const auto& raw : corpus) {
    StarAlgebra a = unitize(raw);
    for (const auto& st : coordinate_quasi_states(a)) {
      if (!st.valid) continue;
      std::optional<GnsResult> maybe;
      try {
        maybe = gns(a, st.coords);
      } catch (const Error& e) {
        if (e.code() != errc::degenerate_precision) throw;
      }
      if (!maybe) continue;
      GnsResult& g = *maybe;
      ++instances;
      // phi(e_i) = <xi, pi(e_i) xi> is asserted inside gns; re-check one
      // coordinate here as a belt-and-braces assertion.
      auto& xi = *g.rep.cyclic_vector;
      CHECK(g.rep.target.pairing(xi, g.rep.images[0].apply(xi)) ==
            PadicInt(a.prime, a.precision, st.coords[0]));
      for (const auto& img : g.rep.images)
        CHECK(norm_le(img.op_norm(), NormValue::exact(0)));
      // Cyclicity: the orbit of the cyclic vector spans the target.
      RowSpan span(a.prime, a.precision, g.rep.target.rank());
      for (const auto& img : g.rep.images) span.insert(img.apply(xi));
      CHECK(span.unit_rank() == g.rep.target.rank());
    }
  }
  CHECK(instances >= 50);
}

TEST_CASE("quasi-C* certification: matrix algebras pass") {
  for (size_t n : {1, 2, 3}) {
    auto mn = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 6, n)));
    auto cert = quasi_cstar_certify(mn, 7, 8);
    CHECK(cert.certified);
    CHECK(cert.ultra_space.empty());
  }
}

TEST_CASE("quasi-C* certification: the antisymmetric example fails negatively") {
  auto a = antisymmetric_pair_algebra(5, 6);
  auto cert = quasi_cstar_certify(a, 7, 8);
  CHECK_FALSE(cert.certified);
  CHECK_FALSE(cert.ultra_space.empty());
  // The nilpotent direction e_1 is killed by every quasi-state.
  CHECK_FALSE(cert.elements[1].attained);
}

TEST_CASE("quasi-C* certification: zero multiplication fails, unitizing repairs it") {
  // With zero products every phi(b*ac) vanishes, so certification is
  // negative on every direction.
  StarAlgebra zero_mult(5, 6, 2);
  auto cert = quasi_cstar_certify(zero_mult, 7, 4);
  CHECK_FALSE(cert.certified);
  CHECK_FALSE(cert.elements[0].attained);
  CHECK_FALSE(cert.elements[1].attained);
  CHECK_FALSE(cert.ultra_space.empty());  // every norm-one element obstructs

  // Adjoining a unit changes the verdict: b* t c = (b_1 c_1) t no longer
  // vanishes, and the coordinate state at t attains norm 1 for odd p.
  auto plus = unitize(zero_mult);
  auto cert2 = quasi_cstar_certify(plus, 7, 4);
  CHECK(cert2.certified);
}

TEST_CASE("direct sums of representations") {
  auto m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(5, 6, 2)));
  auto states = coordinate_quasi_states(m2);
  std::vector<Representation> reps;
  for (const auto& st : states) {
    if (!st.valid) continue;
    reps.push_back(gns(m2, st.coords).rep);
  }
  REQUIRE(reps.size() == 4);
  auto single = direct_sum_reps(m2, {reps[0]});
  CHECK(single.images == reps[0].images);

  auto total = direct_sum_reps(m2, reps);
  CHECK(total.isometric_on_basis);
  CHECK(check_representation(m2, total).valid);
}
