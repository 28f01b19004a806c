#ifndef PADICLAB_QUASI_HILBERT_HPP
#define PADICLAB_QUASI_HILBERT_HPP

// Finite-rank quasi-Hilbert spaces: a symmetric Gram matrix with unit
// determinant over Z/p^N.  Unit determinant is the finite-rank form of the
// duality condition sup_{|eta|<=1} |<eta,xi>| = |xi|: it says xi -> G*xi is
// a sup-norm isometry.

#include <optional>
#include <string>
#include <vector>

#include "padiclab/matrix.hpp"

namespace padiclab {

struct StarAlgebra;

struct ValidationIssue {
  std::string check;
  std::string detail;
  std::vector<bigint> witness;  // empty when no vector witness applies
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationIssue> issues;
};

class QuasiHilbert {
 public:
  // Does not validate; call validate() for a report or require_valid() to throw.
  QuasiHilbert(PadicMatrix gram);

  int64_t prime() const { return gram_.prime(); }
  int precision() const { return gram_.precision(); }
  size_t rank() const { return gram_.rows(); }
  const PadicMatrix& gram() const { return gram_; }

  ValidationReport validate() const;
  void require_valid() const;

  PadicInt pairing(const std::vector<bigint>& xi, const std::vector<bigint>& eta) const;

  // Adjoint with respect to the pairing: T* = G^{-1} T^t G.
  PadicMatrix adjoint(const PadicMatrix& t) const;

  bool operator==(const QuasiHilbert& o) const { return gram_ == o.gram_; }

 private:
  PadicMatrix gram_;
};

// Result of orthogonalization: U^t G U = diag(a_1..a_n) with unit a_i.
// After square-class normalization the diagonal is (1,..,1,u,..,u) and
// `ones_count` records how many leading entries equal 1.
struct OrthoBasis {
  PadicMatrix change_of_basis;
  std::vector<bigint> diagonal;
  std::optional<size_t> ones_count;
};

OrthoBasis orthogonal_basis(const QuasiHilbert& h);

// Refines orthogonal_basis: each diagonal entry is rescaled to 1 (squares)
// or to the canonical non-residue u, then the basis is stably reordered so
// the ones come first.
OrthoBasis normalize_square_classes(const QuasiHilbert& h);

QuasiHilbert direct_sum(const std::vector<QuasiHilbert>& parts);

// B(H) as a finite-rank star algebra on the matrix-unit basis E_ij, with
// involution X -> G^{-1} X^t G.
StarAlgebra bounded_algebra(const QuasiHilbert& h);

}  // namespace padiclab

#endif
