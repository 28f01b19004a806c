#ifndef PADICLAB_STANDARD_FORM_HPP
#define PADICLAB_STANDARD_FORM_HPP

// The embedding pipeline into matrices with transpose involution:
// quadratic extension, twisted matrix algebras, tensor products, column
// representations, and the compilation of B(H) (and via GNS any
// finite-rank star algebra) into standard form.

#include <cstdint>
#include <memory>

#include "padiclab/star_algebra.hpp"

namespace padiclab {

// Gram labelings realizing the two twisted involutions on M_2:
// diag(u, 1) gives (E_12)* = u E_21, diag(1, u) gives (E_12)* = u^{-1} E_21.
enum class TwistConvention { nonresidue_first, unit_first };

// Z_p[sqrt(u)] with trivial involution, basis {1, sqrt(u)}.
StarAlgebra quad_ext_algebra(int64_t p, int N, const bigint& u);

struct AlgebraEmbedding {
  StarAlgebra source;
  StarAlgebra target;
  std::vector<std::vector<bigint>> images;  // target coordinates per source basis element
};

// Exhaustive basis-pair checks: multiplicative, involutive, unit-preserving
// (when both unital) and isometric on basis elements.
ValidationReport check_embedding(const AlgebraEmbedding& e);

// a + b sqrt(u) -> a I + b [[x, y], [y, -x]] with u = x^2 + y^2.
AlgebraEmbedding quad_ext_embed(int64_t p, int N, const bigint& u);

StarAlgebra twisted_m2(int64_t p, int N, const bigint& u,
                       TwistConvention conv = TwistConvention::nonresidue_first);

// Structure constants multiply, involutions tensor; basis (i, j) -> i*dim_b + j.
StarAlgebra tensor(const StarAlgebra& a, const StarAlgebra& b);

// Twisted M_2 into M_2(Z_p[sqrt(u)]): the off-diagonal entries pick up
// sqrt(u)^{+-1} factors depending on the convention.
AlgebraEmbedding twisted_m2_embed(int64_t p, int N, const bigint& u,
                                  TwistConvention conv = TwistConvention::nonresidue_first);

// B(H) for Gram exactly diag(1..1, u..u) with equal halves, mapped onto
// tensor(twisted_m2(unit_first), M_n) by block bookkeeping.
AlgebraEmbedding twisted_m2n_embed(const QuasiHilbert& h);

struct ColumnRep {
  QuasiHilbert space;                            // C_r, rank 2n, diagonal Gram
  StarAlgebra tensor_source;                     // tensor(B(H), Z_p[sqrt(u)])
  Representation rep;                            // left multiplication on C_r
  std::vector<std::vector<bigint>> proof_basis;  // the proof's orthogonal basis
  std::vector<bigint> proof_diagonal;            // its certified pairing values
  size_t ones_in_profile = 0;                    // square-class-1 count (= n)
};

// Column space of tau_r on B(H) ox Z_p[sqrt(u)]; H must carry a normalized
// diagonal Gram (ones, then copies of one non-square unit).  r is 1-based.
ColumnRep column_rep(const QuasiHilbert& h_normalized, size_t r);

struct EmbeddingChecks {
  bool multiplicative = false;
  bool involutive = false;
  bool isometric = false;
  bool injective = false;
  std::string detail;
  bool pass() const { return multiplicative && involutive && isometric && injective; }
};

struct StandardEmbedding {
  size_t ambient_size = 0;
  std::vector<PadicMatrix> images;  // one per source basis element
  EmbeddingChecks checks;
};

// The per-column compilation of B(H) into blocks of M_{4n}(Z_p); apply()
// assembles the block-diagonal image in M_{4n^2}(Z_p) whose involution is
// plain transpose.
class Standardizer {
 public:
  explicit Standardizer(const QuasiHilbert& h);

  size_t source_rank() const { return n_; }
  size_t ambient() const { return 4 * n_ * n_; }
  std::vector<PadicMatrix> apply_blocks(const PadicMatrix& t) const;  // n blocks, 4n x 4n
  PadicMatrix apply(const PadicMatrix& t) const;

 private:
  struct Column;
  int64_t prime_;
  int precision_;
  size_t n_;
  bigint u_;
  bigint x_, y_;                  // u = x^2 + y^2
  PadicMatrix normalizer_;        // U0 with U0^t G U0 = diag(1..1, u..u)
  PadicMatrix normalizer_inv_;
  std::vector<std::shared_ptr<const Column>> columns_;
};

// Certified isometric *-embedding of B(H) into M_{4n^2}(Z_p) with transpose
// involution; multiplicativity/involution exhaustive on basis pairs up to
// `exhaustive_rank`, sampled beyond, isometry on basis + `probes` random
// norm-one probes.
StandardEmbedding standardize(const QuasiHilbert& h, uint64_t seed = 1, size_t probes = 100);

struct RepresentResult {
  StandardEmbedding embedding;  // images per basis element of the input algebra
  size_t hilbert_rank = 0;      // rank of the assembled GNS direct sum
  bool used_matrix_step = false;
  size_t states_used = 0;
};

// unitize -> (M_2 if ultra-antisymmetric elements exist) -> coordinate
// quasi-states -> GNS -> direct sum -> standardize, restricted to the image
// of the input algebra.
RepresentResult represent_star_algebra(const StarAlgebra& a, uint64_t seed = 1,
                                       size_t probes = 100);

struct TateDemo {
  StarAlgebra algebra;  // Z_p[X,Y]/(X^{n+1}, Y^{n+1}), basis X^a Y^b, X* = Y
  std::vector<Representation> truncation_reps;  // pi_0 .. pi_n acting on H_m
  Representation sum;                           // their direct sum; isometric
  bool norm_attained_on_monomials = false;
  bool adjoint_swaps_variables = false;         // pi_n(X)* = pi_n(Y)
};

TateDemo tate_truncation_demo(size_t n, int64_t p, int N);

}  // namespace padiclab

#endif
