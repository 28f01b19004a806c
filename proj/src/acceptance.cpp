#include "padiclab/acceptance.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "padiclab/commands.hpp"
#include "padiclab/corpus.hpp"
#include "padiclab/json_io.hpp"
#include "padiclab/standard_form.hpp"

namespace padiclab {

namespace {

constexpr int kPrecision = 16;

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

std::vector<bigint> basis_vec(size_t d, size_t i) {
  std::vector<bigint> v(d, bigint(0));
  v[i] = 1;
  return v;
}

// 1. Hensel suite: random square roots and two-squares plus the two pinned
// values, each checked against a brute-force residue enumeration.
CriterionResult hensel_suite(uint64_t seed) {
  Checker c;
  for (int64_t p : {3, 5, 7}) {
    Rng rng(seed ^ (uint64_t)p);
    for (int i = 0; i < 500 && c.ok; ++i) {
      PadicInt r(p, kPrecision, rng.residue(p, kPrecision));
      PadicInt x = r * r;
      if (x.is_zero()) continue;
      PadicInt s = sqrt(x);
      c.require(s * s == x, "sqrt(x)^2 != x at p = " + std::to_string(p));
    }
    for (int i = 0; i < 200 && c.ok; ++i) {
      PadicInt u(p, kPrecision, rng.unit_residue(p, kPrecision));
      auto [x, y] = two_squares(u);
      c.require(x * x + y * y == u, "two_squares failed at p = " + std::to_string(p));
    }
  }
  // Brute-force oracles for the pinned values.
  auto enumerate_root = [](int64_t p, int N, const bigint& target) {
    bigint mod = pow_int(p, N);
    for (bigint y = 0; y < mod; ++y)
      if (mod_reduce(y * y, mod) == mod_reduce(target, mod)) return y;
    return bigint(-1);
  };
  c.require(enumerate_root(7, 2, 2) == 10, "oracle: first root of 2 mod 49 is not 10");
  c.require(sqrt(PadicInt(7, 2, 2)) == PadicInt(7, 2, 10), "sqrt(2) mod 49 != 10");
  c.require(enumerate_root(5, 2, -1) == 7, "oracle: first root of -1 mod 25 is not 7");
  c.require(sqrt(PadicInt(5, 2, -1)) == PadicInt(5, 2, 7), "sqrt(-1) mod 25 != 7");
  return {1, "hensel", c.ok, c.detail.str()};
}

// 2. Orthogonalization and square-class normalization on 200 random
// symmetric unimodular Gram matrices.
CriterionResult orthogonalization(uint64_t seed) {
  Checker c;
  Rng rng(seed + 2);
  const int64_t primes[] = {3, 5, 7};
  for (int i = 0; i < 200 && c.ok; ++i) {
    int64_t p = primes[i % 3];
    size_t n = 1 + rng.below(6);
    QuasiHilbert h = random_quasi_hilbert(rng, p, kPrecision, n);
    OrthoBasis nb = normalize_square_classes(h);
    c.require(nb.ones_count.has_value(), "profile not recorded");
    const bigint u = nonresidue(p, kPrecision).residue();
    PadicMatrix d(p, kPrecision, n, n);
    for (size_t k = 0; k < n; ++k) {
      c.require(nb.diagonal[k] == 1 || nb.diagonal[k] == u, "diagonal entry not in {1, u}");
      c.require((k < *nb.ones_count) == (nb.diagonal[k] == 1), "ones are not leading");
      d.set(k, k, nb.diagonal[k]);
    }
    PadicMatrix lhs = nb.change_of_basis.transpose() * h.gram() * nb.change_of_basis;
    c.require(lhs == d, "U^t G U != D exactly");
    c.require(det_is_unit(nb.change_of_basis).first, "U is not invertible");
  }
  return {2, "orthogonalization", c.ok, c.detail.str()};
}

// 3. GNS identity, contractivity and cyclicity across a generated corpus.
CriterionResult gns_corpus(uint64_t seed) {
  Checker c;
  Rng rng(seed + 3);
  int instances = 0;
  for (const auto& raw : random_algebra_corpus(rng, 40)) {
    StarAlgebra a = unitize(raw);
    for (const auto& st : coordinate_quasi_states(a)) {
      if (!st.valid) continue;
      GnsResult g = [&]() -> GnsResult {
        try {
          return gns(a, st.coords);
        } catch (const Error& e) {
          if (e.code() == errc::degenerate_precision)
            return GnsResult{Representation{QuasiHilbert(PadicMatrix::identity(2, 1, 1)), {}, std::nullopt, false}, {}, {}};
          throw;
        }
      }();
      if (g.rep.images.empty()) continue;
      ++instances;
      const auto& xi = *g.rep.cyclic_vector;
      for (size_t i = 0; i < a.dim && c.ok; ++i) {
        c.require(g.rep.target.pairing(xi, g.rep.images[i].apply(xi)) ==
                      PadicInt(a.prime, a.precision, st.coords[i]),
                  "GNS identity failed");
        c.require(norm_le(g.rep.images[i].op_norm(), NormValue::exact(0)), "not contractive");
      }
      RowSpan span(a.prime, a.precision, g.rep.target.rank());
      for (const auto& img : g.rep.images) span.insert(img.apply(xi));
      c.require(span.unit_rank() == g.rep.target.rank(), "cyclic vector does not span");
    }
  }
  c.require(instances >= 50, "corpus too small: " + std::to_string(instances));
  return {3, "gns", c.ok, c.detail.str()};
}

bool space_contains(const std::vector<std::vector<int64_t>>& space, const FpVec& v, int64_t p) {
  if (space.empty()) return false;
  FpSpan span(p, v.size());
  for (const auto& b : space) span.insert(b);
  return span.contains(v);
}

// 4. Ultra-antisymmetry: the two worked examples and the M_2 annihilation
// property on 100 random algebras.
CriterionResult ultra_antisymmetry(uint64_t seed) {
  Checker c;
  for (int64_t p : {2, 3, 5, 7}) {
    auto a = nilpotent_pair_algebra(p, kPrecision);
    bool member = space_contains(ultra_antisymmetric_space(a), {0, 1}, p);
    c.require(member == (p == 2), "2x2 verdict wrong at p = " + std::to_string(p));
  }
  for (int64_t p : {5, 13}) {
    auto a = antisymmetric_pair_algebra(p, kPrecision);
    // b* a c + c* a* b = 0 identically, on all basis pairs, exactly mod p^N.
    auto e1 = basis_vec(2, 1);
    for (size_t i = 0; i < 2 && c.ok; ++i)
      for (size_t j = 0; j < 2; ++j) {
        auto t1 = a.product(a.product(a.star(basis_vec(2, i)), e1), basis_vec(2, j));
        auto t2 = a.product(a.product(a.star(basis_vec(2, j)), a.star(e1)), basis_vec(2, i));
        for (size_t k = 0; k < 2; ++k)
          c.require(mod_reduce(t1[k] + t2[k], a.modulus()) == 0, "4x4 combination not zero");
      }
    c.require(space_contains(ultra_antisymmetric_space(a), {0, 1}, p),
              "4x4 element not ultra-antisymmetric at p = " + std::to_string(p));
    // The 4x4 matrix realization: antisymmetric and square-zero.
    PadicMatrix m = antisymmetric_generator_matrix(p, kPrecision);
    c.require(m.transpose() == -m, "matrix is not antisymmetric");
    c.require((m * m).is_zero(), "matrix does not square to zero");
  }
  Rng rng(seed + 4);
  for (const auto& a : random_algebra_corpus(rng, 100)) {
    if (!c.ok) break;
    c.require(ultra_antisymmetric_space(matrix_algebra(unitize(a), 2)).empty(),
              "M_2 has a nonzero ultra-antisymmetric space");
  }
  return {4, "ultra_antisymmetry", c.ok, c.detail.str()};
}

// 5. Quasi-C* certificates: matrix algebras positive, the antisymmetric
// example verified negative.
CriterionResult quasi_cstar(uint64_t seed) {
  Checker c;
  for (int64_t p : {3, 5, 7}) {
    for (size_t n = 1; n <= 4 && c.ok; ++n) {
      auto mn = bounded_algebra(QuasiHilbert(PadicMatrix::identity(p, kPrecision, n)));
      auto cert = quasi_cstar_certify(mn, seed + n, 8);
      c.require(cert.certified,
                "M_" + std::to_string(n) + " not certified at p = " + std::to_string(p));
      c.require(cert.ultra_space.empty(), "matrix algebra has ultra-antisymmetric elements");
    }
  }
  auto a = antisymmetric_pair_algebra(5, kPrecision);
  auto cert = quasi_cstar_certify(a, seed + 5, 8);
  c.require(!cert.certified, "antisymmetric example wrongly certified");
  c.require(!cert.elements[1].attained, "nil direction attained");
  c.require(!cert.ultra_space.empty(), "missing ultra-antisymmetric witness");
  // Every quasi-state kills a: phi(a) = phi(a*) = -phi(a).
  for (const auto& st : coordinate_quasi_states(a)) {
    if (!st.valid) continue;
    c.require(mod_reduce(st.coords[1], a.modulus()) == 0, "a coordinate state does not kill a");
  }
  return {5, "quasi_cstar", c.ok, c.detail.str()};
}

// 6. Standardization of B(H) for 30 random spaces and the GNS route for
// 20 random finite-rank star algebras plus the antisymmetric example.
CriterionResult standardization(uint64_t seed) {
  Checker c;
  Rng rng(seed + 6);
  const int64_t primes[] = {3, 5, 7};
  for (int i = 0; i < 30 && c.ok; ++i) {
    int64_t p = primes[i % 3];
    size_t n = 1 + rng.below(3);
    QuasiHilbert h = random_quasi_hilbert(rng, p, kPrecision, n);
    auto emb = standardize(h, seed + i, 100);
    c.require(emb.ambient_size == 4 * n * n, "wrong ambient size");
    c.require(emb.checks.pass(), "standardize certificate failed: " + emb.checks.detail);
  }

  auto rep = represent_star_algebra(antisymmetric_pair_algebra(5, kPrecision), seed, 100);
  c.require(rep.used_matrix_step, "4x4 example skipped the M_2 step");
  c.require(rep.embedding.checks.pass(), "4x4 example certificate failed");

  int represented = 0, drawn = 0;
  Rng corpus_rng(seed + 66);
  while (represented < 20 && drawn < 80 && c.ok) {
    for (const auto& a : random_algebra_corpus(corpus_rng, 8)) {
      ++drawn;
      if (a.prime == 2) continue;
      try {
        auto r = represent_star_algebra(a, seed + drawn, 100);
        c.require(r.embedding.checks.pass(), "representation certificate failed");
        ++represented;
      } catch (const Error& e) {
        if (e.code() != errc::degenerate_precision) throw;
      }
      if (represented >= 20 || !c.ok) break;
    }
  }
  c.require(represented >= 20, "only " + std::to_string(represented) + " algebras represented");
  return {6, "standardization", c.ok, c.detail.str()};
}

// 7. The von Neumann suite.
CriterionResult von_neumann(uint64_t) {
  Checker c;
  const int64_t p = 5;
  const int N = 8;
  std::vector<MatrixSubalgebra> commutants_seen;
  // Commutant of the full matrix-unit span is exactly the scalars.
  for (size_t n = 2; n <= 8 && c.ok; ++n) {
    std::vector<PadicMatrix> gens;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        PadicMatrix e(p, N, n, n);
        e.set(i, j, 1);
        gens.push_back(std::move(e));
      }
    MatrixSubalgebra units(p, N, n, std::move(gens));
    auto comm = commutant(units);
    c.require(comm.rank() == 1 && comm.contains(PadicMatrix::identity(p, N, n)),
              "commutant of matrix units is not the scalars at n = " + std::to_string(n));
    commutants_seen.push_back(comm);
  }
  // Group algebras are von Neumann algebras; centers match class sums.
  struct Named {
    std::string name;
    FiniteGroup group;
    size_t classes;
  };
  std::vector<Named> groups{{"C2", FiniteGroup::cyclic(2), 2},
                            {"C3", FiniteGroup::cyclic(3), 3},
                            {"C4", FiniteGroup::cyclic(4), 4},
                            {"S3", FiniteGroup::symmetric(3), 3},
                            {"Q8", FiniteGroup::quaternion8(), 5}};
  for (const auto& [name, g, classes] : groups) {
    if (!c.ok) break;
    auto ga = group_algebra(g, p, N);
    MatrixSubalgebra span(p, N, g.order, ga.left_regular.images);
    auto bi = bicommutant_check(span);
    c.require(bi.is_vn, name + " group algebra is not von Neumann");
    auto z = center(span);
    c.require(z.rank() == classes, name + " center rank mismatch");
    std::vector<PadicMatrix> chi_mats;
    for (const auto& chi : class_sums(g, p, N)) chi_mats.push_back(rep_apply(ga.left_regular, chi));
    c.require(z.same_span(MatrixSubalgebra(p, N, g.order, chi_mats)),
              name + " center does not equal the class-sum span");
    c.require(is_factor(span) == (g.order == 1), name + " factor verdict wrong");
    commutants_seen.push_back(commutant(span));
  }
  // Off-diagonal matrix units: trivial commutant, bicommutant everything.
  {
    std::vector<PadicMatrix> gens;
    const size_t n = 4;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        PadicMatrix e(p, N, n, n);
        e.set(i, j, 1);
        gens.push_back(std::move(e));
      }
    MatrixSubalgebra offdiag(p, N, n, std::move(gens));
    auto bi = bicommutant_check(offdiag);
    c.require(!bi.is_vn, "off-diagonal units claim to be von Neumann");
    c.require(bi.bicommutant.rank() == n * n, "bicommutant is not the full matrix algebra");
    commutants_seen.push_back(commutant(offdiag));
  }
  // S''' = S' for every commutant computed above.
  for (const auto& s : commutants_seen) {
    if (!c.ok) break;
    auto triple = commutant(commutant(s));
    c.require(triple.same_span(s), "S''' != S'");
  }
  return {7, "von_neumann", c.ok, c.detail.str()};
}

// 8. p-simplicity vs effectiveness + minimality across the groupoid corpus.
CriterionResult p_simplicity_suite(uint64_t seed, size_t dim_cap) {
  Checker c;
  size_t count = 0;
  for (const auto& [name, g] : groupoid_corpus()) {
    ++count;
    for (int64_t p : {2, 3, 5}) {
      if (!c.ok) break;
      try {
        auto verdict = p_simplicity(g, p, seed, dim_cap);
        c.require(verdict.p_simple == (verdict.checks.effective && verdict.checks.minimal),
                  name + " disagrees at p = " + std::to_string(p));
        const double bits = (double)g.arrows.size() * std::log2((double)p);
        c.require((verdict.algebra.tier == "exhaustive") == (bits <= 20.0 + 1e-9),
                  name + " used the wrong tier at p = " + std::to_string(p));
      } catch (const Error& e) {
        c.require(false, name + ": " + e.what());
      }
    }
  }
  c.require(count >= 20, "groupoid corpus too small");
  return {8, "p_simplicity", c.ok, c.detail.str()};
}

// 9. Tate truncations up to degree 4 at p = 5.
CriterionResult tate(uint64_t) {
  Checker c;
  for (size_t n = 0; n <= 4 && c.ok; ++n) {
    auto demo = tate_truncation_demo(n, 5, kPrecision);
    c.require(demo.norm_attained_on_monomials, "norms not attained at n = " + std::to_string(n));
    c.require(demo.adjoint_swaps_variables, "pi_n(X)* != pi_n(Y) at n = " + std::to_string(n));
    c.require(demo.sum.isometric_on_basis, "direct sum not isometric at n = " + std::to_string(n));
  }
  return {9, "tate", c.ok, c.detail.str()};
}

// 10. Determinism: identical (input, seed) gives byte-identical output.
CriterionResult determinism(uint64_t seed) {
  Checker c;
  CommandConfig cfg;
  cfg.seed = seed;
  const std::string gram = R"({"p":5,"N":8,"gram":[["1","2"],["2","1"]]})";
  auto a = run_command("orthogonalize", cfg, gram);
  auto b = run_command("orthogonalize", cfg, gram);
  c.require(a.payload == b.payload && a.exit_code == b.exit_code,
            "orthogonalize output is not byte-identical");
  const std::string groupoid = groupoid_to_json(FiniteGroupoid::pair(2)).dump();
  cfg.prime = 3;
  auto s1 = run_command("simplicity", cfg, groupoid);
  auto s2 = run_command("simplicity", cfg, groupoid);
  c.require(s1.payload == s2.payload, "simplicity output is not byte-identical");
  c.require(s1.exit_code == 0, "pair groupoid should be p-simple");
  return {10, "determinism", c.ok, c.detail.str()};
}

}  // namespace

AcceptanceReport run_acceptance(uint64_t seed, size_t dim_cap, std::ostream* progress) {
  std::vector<std::function<CriterionResult()>> steps{
      [&] { return hensel_suite(seed); },
      [&] { return orthogonalization(seed); },
      [&] { return gns_corpus(seed); },
      [&] { return ultra_antisymmetry(seed); },
      [&] { return quasi_cstar(seed); },
      [&] { return standardization(seed); },
      [&] { return von_neumann(seed); },
      [&] { return p_simplicity_suite(seed, dim_cap); },
      [&] { return tate(seed); },
      [&] { return determinism(seed); },
  };
  AcceptanceReport report;
  report.all_pass = true;
  for (size_t i = 0; i < steps.size(); ++i) {
    CriterionResult r = [&]() -> CriterionResult {
      try {
        return steps[i]();
      } catch (const std::exception& e) {
        return {(int)i + 1, "criterion_" + std::to_string(i + 1), false, e.what()};
      }
    }();
    if (progress) {
      *progress << "[" << std::setw(2) << r.id << "/10] " << std::left << std::setw(20)
                << r.name << std::right << (r.pass ? " PASS" : " FAIL");
      if (!r.pass) *progress << "  (" << r.detail << ")";
      *progress << std::endl;
    }
    report.all_pass = report.all_pass && r.pass;
    report.criteria.push_back(std::move(r));
  }
  return report;
}

}  // namespace padiclab
