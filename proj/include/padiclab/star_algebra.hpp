#ifndef PADICLAB_STAR_ALGEBRA_HPP
#define PADICLAB_STAR_ALGEBRA_HPP

// Finite-rank involutive Banach algebras over Z_p given by structure
// constants, with the coordinate sup-norm.  Quasi-states, the GNS
// construction, ultra-antisymmetric elements and quasi-C*-certification.

#include <optional>
#include <vector>

#include "padiclab/fp_algebra.hpp"
#include "padiclab/quasi_hilbert.hpp"

namespace padiclab {

struct StarAlgebra {
  int64_t prime = 0;
  int precision = 0;
  size_t dim = 0;
  // e_i * e_j = sum_k mult[(i*dim + j)*dim + k] e_k
  std::vector<bigint> mult;
  // column i holds the coordinates of (e_i)*
  PadicMatrix invol;
  std::optional<std::vector<bigint>> unit;

  StarAlgebra(int64_t p, int N, size_t d);

  const bigint& structure(size_t i, size_t j, size_t k) const {
    return mult[(i * dim + j) * dim + k];
  }
  void set_structure(size_t i, size_t j, size_t k, const bigint& v);

  bigint& modulus() { return modulus_; }
  const bigint& modulus() const { return modulus_; }

  std::vector<bigint> product(const std::vector<bigint>& x, const std::vector<bigint>& y) const;
  std::vector<bigint> star(const std::vector<bigint>& x) const;
  NormValue coord_norm(const std::vector<bigint>& x) const;

  PadicMatrix left_mult_matrix(size_t basis_index) const;
  PadicMatrix left_mult_matrix(const std::vector<bigint>& x) const;

  bool is_unital() const { return unit.has_value(); }

 private:
  bigint modulus_;
};

ValidationReport validate_algebra(const StarAlgebra& a);
void require_valid_algebra(const StarAlgebra& a);

// Z_p * 1 + A with the unit adjoined as basis element 0; unital input is
// returned unchanged.
StarAlgebra unitize(const StarAlgebra& a);

// M_k(A) with involution (x_ij)* = (x_ji*); basis order (i, j, t) -> (i*k + j)*dim + t.
StarAlgebra matrix_algebra(const StarAlgebra& a, size_t k);

FpAlgebra mod_p(const StarAlgebra& a);

// F_p-basis of S = { a-bar : b*ac + c*a*b = 0 mod p for all b, c }.  An
// element of norm 1 is ultra-antisymmetric iff its residue lies in S \ {0}.
std::vector<std::vector<int64_t>> ultra_antisymmetric_space(const StarAlgebra& a);

using QuasiState = std::vector<bigint>;  // phi(e_i) coordinates

ValidationReport validate_quasi_state(const StarAlgebra& a, const QuasiState& phi);

struct CoordinateState {
  size_t index;      // coordinate k with phi(f) = f_k + (f*)_k
  QuasiState coords;
  bool valid;        // invalid states (norm < 1) are kept but flagged
};

std::vector<CoordinateState> coordinate_quasi_states(const StarAlgebra& a);

struct Representation {
  QuasiHilbert target;
  std::vector<PadicMatrix> images;  // one per source basis element
  std::optional<std::vector<bigint>> cyclic_vector;
  bool isometric_on_basis = false;
};

PadicMatrix rep_apply(const Representation& rep, const std::vector<bigint>& x);

// Multiplicative / involutive / contractive checks against the source.
ValidationReport check_representation(const StarAlgebra& a, const Representation& rep);

struct GnsResult {
  Representation rep;                            // cyclic_vector always set
  std::vector<size_t> quotient_columns;          // basis elements spanning A/I
  std::vector<std::vector<bigint>> null_ideal;   // saturated generators of I_phi
};

// GNS construction for a unital algebra and a valid quasi-state.  The
// quotient A/I_phi is representable as a quasi-Hilbert space only when the
// pairing matrix phi(e_i* e_j) has unit-or-zero elementary divisors;
// intermediate divisors raise DegeneratePrecision.
GnsResult gns(const StarAlgebra& a, const QuasiState& phi);

struct QuasiCstarWitness {
  size_t state_index;  // position in coordinate_quasi_states
  size_t left, right;  // basis pair with |phi(e_left* a e_right)| = 1
};

struct ElementCertificate {
  std::vector<bigint> element;
  bool attained = false;
  std::optional<QuasiCstarWitness> witness;
};

struct QuasiCstarCertificate {
  bool certified = false;
  std::vector<ElementCertificate> elements;           // basis directions, then probes
  std::vector<std::vector<int64_t>> ultra_space;      // obstruction when nonempty
};

// Searches the coordinate quasi-states for norm attainment on every basis
// direction and `probes` random norm-one probes.
QuasiCstarCertificate quasi_cstar_certify(const StarAlgebra& a, uint64_t seed = 1,
                                          size_t probes = 16);

Representation direct_sum_reps(const StarAlgebra& a, const std::vector<Representation>& reps);

}  // namespace padiclab

#endif
