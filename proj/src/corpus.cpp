#include "padiclab/corpus.hpp"

#include "padiclab/standard_form.hpp"

namespace padiclab {

StarAlgebra nilpotent_pair_algebra(int64_t p, int N) {
  StarAlgebra a(p, N, 2);
  a.set_structure(0, 0, 0, 1);
  a.set_structure(0, 1, 1, 1);
  a.set_structure(1, 0, 1, 1);
  a.unit = std::vector<bigint>{1, 0};
  return a;
}

StarAlgebra antisymmetric_pair_algebra(int64_t p, int N) {
  StarAlgebra a = nilpotent_pair_algebra(p, N);
  a.invol = PadicMatrix(p, N, 2, 2);
  a.invol.set(0, 0, 1);
  a.invol.set(1, 1, -1);
  return a;
}

PadicMatrix antisymmetric_generator_matrix(int64_t p, int N) {
  if (p % 4 != 1) fail(errc::invalid_argument, "needs a square root of -1, so p = 1 mod 4");
  bigint i = sqrt(PadicInt(p, N, -1)).residue();
  PadicMatrix a(p, N, 4, 4);
  a.set(0, 1, -1);
  a.set(0, 3, -i);
  a.set(1, 0, 1);
  a.set(1, 2, -i);
  a.set(2, 1, i);
  a.set(2, 3, -1);
  a.set(3, 0, i);
  a.set(3, 2, 1);
  return a;
}

StarAlgebra conjugate_basis(const StarAlgebra& a, const PadicMatrix& s) {
  const size_t d = a.dim;
  PadicMatrix sinv = inverse_unimodular(s);
  StarAlgebra out(a.prime, a.precision, d);
  // f_i = sum_r s_{ri} e_r; the new constants are S^{-1} (S e_i . S e_j).
  for (size_t i = 0; i < d; ++i) {
    std::vector<bigint> fi(d), fj(d);
    for (size_t r = 0; r < d; ++r) fi[r] = s.at(r, i);
    for (size_t j = 0; j < d; ++j) {
      for (size_t r = 0; r < d; ++r) fj[r] = s.at(r, j);
      std::vector<bigint> prod = sinv.apply(a.product(fi, fj));
      for (size_t k = 0; k < d; ++k) out.set_structure(i, j, k, prod[k]);
    }
  }
  out.invol = sinv * a.invol * s;
  if (a.unit) out.unit = sinv.apply(*a.unit);
  return out;
}

PadicMatrix random_invertible(Rng& rng, int64_t p, int N, size_t n) {
  while (true) {
    PadicMatrix s(p, N, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) s.set(i, j, rng.residue(p, N));
    if (det_is_unit(s).first) return s;
  }
}

QuasiHilbert random_quasi_hilbert(Rng& rng, int64_t p, int N, size_t n) {
  while (true) {
    PadicMatrix g(p, N, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        bigint v = rng.residue(p, N);
        g.set(i, j, v);
        g.set(j, i, v);
      }
    QuasiHilbert h(g);
    if (h.validate().valid) return h;
  }
}

namespace {

StarAlgebra dual_numbers(int64_t p, int N, bool negate_t) {
  StarAlgebra a(p, N, 2);  // basis {1, t}, t^2 = 0
  a.set_structure(0, 0, 0, 1);
  a.set_structure(0, 1, 1, 1);
  a.set_structure(1, 0, 1, 1);
  if (negate_t) {
    a.invol = PadicMatrix(p, N, 2, 2);
    a.invol.set(0, 0, 1);
    a.invol.set(1, 1, -1);
  }
  a.unit = std::vector<bigint>{1, 0};
  return a;
}

StarAlgebra split_pair(int64_t p, int N, bool swap) {
  StarAlgebra a(p, N, 2);  // Z_p x Z_p, coordinatewise product
  a.set_structure(0, 0, 0, 1);
  a.set_structure(1, 1, 1, 1);
  if (swap) {
    a.invol = PadicMatrix(p, N, 2, 2);
    a.invol.set(0, 1, 1);
    a.invol.set(1, 0, 1);
  }
  a.unit = std::vector<bigint>{1, 1};
  return a;
}

}  // namespace

std::vector<StarAlgebra> random_algebra_corpus(Rng& rng, size_t count) {
  static const int64_t primes[] = {2, 3, 5, 7};
  std::vector<StarAlgebra> out;
  size_t family = 0;
  while (out.size() < count) {
    int64_t p = primes[rng.below(4)];
    int N = 6 + (int)rng.below(5);
    StarAlgebra base = [&]() -> StarAlgebra {
      switch (family % 8) {
        case 0: return group_algebra(FiniteGroup::cyclic(1 + rng.below(3)), p, N).algebra;
        case 1: return dual_numbers(p, N, false);
        case 2: return dual_numbers(p, N, true);
        case 3: return split_pair(p, N, rng.below(2) == 0);
        case 4: return nilpotent_pair_algebra(p, N);
        case 5: return antisymmetric_pair_algebra(p, N);
        case 6:
          if (p == 2) return split_pair(p, N, true);
          return quad_ext_algebra(p, N, nonresidue(p, N).residue());
        default:
          return bounded_algebra(QuasiHilbert(PadicMatrix::identity(p, N, 2)));
      }
    }();
    ++family;
    if (rng.below(2) == 0 && base.dim <= 4) {
      PadicMatrix s = random_invertible(rng, p, N, base.dim);
      out.push_back(conjugate_basis(base, s));
    } else {
      out.push_back(std::move(base));
    }
  }
  return out;
}

std::vector<std::pair<std::string, FiniteGroupoid>> groupoid_corpus() {
  std::vector<std::pair<std::string, FiniteGroupoid>> out;
  for (size_t n = 1; n <= 5; ++n)
    out.push_back({"pair_" + std::to_string(n), FiniteGroupoid::pair(n)});
  for (size_t n = 2; n <= 6; ++n)
    out.push_back({"group_C" + std::to_string(n),
                   FiniteGroupoid::from_group(FiniteGroup::cyclic(n))});
  out.push_back({"group_S3", FiniteGroupoid::from_group(FiniteGroup::symmetric(3))});
  out.push_back({"pair2_u_pair2", FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(2),
                                                                 FiniteGroupoid::pair(2))});
  out.push_back({"pair3_u_pair1", FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(3),
                                                                 FiniteGroupoid::pair(1))});
  out.push_back({"C2_u_pair2",
                 FiniteGroupoid::disjoint_union(
                     FiniteGroupoid::from_group(FiniteGroup::cyclic(2)), FiniteGroupoid::pair(2))});
  out.push_back({"pair2_u_C3",
                 FiniteGroupoid::disjoint_union(
                     FiniteGroupoid::pair(2), FiniteGroupoid::from_group(FiniteGroup::cyclic(3)))});

  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  // C_2 swapping two points: free and transitive.
  out.push_back({"C2_swap2", FiniteGroupoid::action(c2, {{0, 1}, {1, 0}})});
  // C_2 with a fixed point: isotropy and two orbits.
  out.push_back({"C2_swap2_fix1", FiniteGroupoid::action(c2, {{0, 1, 2}, {1, 0, 2}})});
  // C_2 as two disjoint swaps on four points: free, two orbits.
  out.push_back({"C2_two_swaps", FiniteGroupoid::action(c2, {{0, 1, 2, 3}, {1, 0, 3, 2}})});
  // C_3 cycling three points: free and transitive.
  out.push_back({"C3_cycle3", FiniteGroupoid::action(c3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})});
  // C_3 cycle plus a fixed point.
  out.push_back(
      {"C3_cycle3_fix1", FiniteGroupoid::action(c3, {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}})});
  // C_3 acting trivially on two points: pure isotropy.
  out.push_back({"C3_trivial2", FiniteGroupoid::action(c3, {{0, 1}, {0, 1}, {0, 1}})});
  return out;
}

}  // namespace padiclab
