#ifndef PADICLAB_GROUP_GROUPOID_HPP
#define PADICLAB_GROUP_GROUPOID_HPP

// Group and groupoid algebras, commutants and centers of matrix
// subalgebras, and p-simplicity of Steinberg algebras.

#include <cstdint>
#include <vector>

#include "padiclab/fp_algebra.hpp"
#include "padiclab/star_algebra.hpp"

namespace padiclab {

struct FiniteGroup {
  size_t order = 0;
  std::vector<size_t> table;  // table[g * order + h] = g h
  std::vector<size_t> inverse;
  size_t identity = 0;

  size_t mul(size_t g, size_t h) const { return table[g * order + h]; }
  ValidationReport validate() const;

  static FiniteGroup cyclic(size_t n);
  static FiniteGroup symmetric(size_t n);  // n <= 5
  static FiniteGroup quaternion8();
};

struct GroupAlgebra {
  StarAlgebra algebra;          // convolution product, f*(g) = f(g^{-1})
  Representation left_regular;  // lambda(delta_g) = permutation of left translation
};

GroupAlgebra group_algebra(const FiniteGroup& g, int64_t p, int N);

std::vector<std::vector<size_t>> conjugacy_classes(const FiniteGroup& g);

// Indicator vectors of the conjugacy classes; a basis of the center of the
// group algebra.
std::vector<std::vector<bigint>> class_sums(const FiniteGroup& g, int64_t p, int N);

// A span of n x n matrices, tracked as a Howell row space of vectorized
// matrices so span comparisons are exact over Z/p^N.
class MatrixSubalgebra {
 public:
  MatrixSubalgebra(int64_t prime, int precision, size_t ambient,
                   std::vector<PadicMatrix> generators);

  int64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  size_t ambient() const { return ambient_; }
  const std::vector<PadicMatrix>& generators() const { return generators_; }
  const RowSpan& span() const { return span_; }

  size_t rank() const { return span_.size(); }
  std::vector<PadicMatrix> basis() const;
  bool contains(const PadicMatrix& m) const;
  bool same_span(const MatrixSubalgebra& o) const;

  // Close the span under products (and optionally transpose / identity).
  void close_under_products();
  void star_close_transpose();
  void adjoin_identity();

 private:
  int64_t prime_;
  int precision_;
  size_t ambient_;
  std::vector<PadicMatrix> generators_;
  RowSpan span_;
};

// { X : X M_i = M_i X for every generator }, via the stacked Sylvester
// system.  Raises PrecisionExhausted when the kernel is not saturated.
MatrixSubalgebra commutant(const MatrixSubalgebra& s);

struct BicommutantResult {
  bool is_vn = false;
  MatrixSubalgebra bicommutant;
};

BicommutantResult bicommutant_check(const MatrixSubalgebra& s);

MatrixSubalgebra intersect(const MatrixSubalgebra& a, const MatrixSubalgebra& b);
MatrixSubalgebra center(const MatrixSubalgebra& s);
bool is_factor(const MatrixSubalgebra& s);

struct FiniteGroupoid {
  size_t n_objects = 0;
  struct Arrow {
    size_t src, tgt;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<int64_t>> compose;  // compose[a][b] = a after b, or -1
  std::vector<size_t> inverse;
  std::vector<size_t> identity_of;  // identity arrow per object

  ValidationReport validate() const;

  static FiniteGroupoid pair(size_t n);
  static FiniteGroupoid from_group(const FiniteGroup& g);
  static FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
  // action[g][x] = g . x for a group acting on {0..n_points-1}
  static FiniteGroupoid action(const FiniteGroup& g, const std::vector<std::vector<size_t>>& act);
};

struct GroupoidChecks {
  bool effective = false;  // trivial isotropy at every object
  bool minimal = false;    // single orbit of objects
};

GroupoidChecks groupoid_checks(const FiniteGroupoid& g);

// Convolution algebra over Z_p with f*(g) = f(g^{-1}); unital (sum of
// object identities).
StarAlgebra groupoid_algebra(const FiniteGroupoid& g, int64_t p, int N);

// The same algebra over F_p: delta_a . delta_b = delta_{ab} when composable.
FpAlgebra steinberg_fp(const FiniteGroupoid& g, int64_t p);

struct PSimplicityVerdict {
  bool p_simple = false;
  GroupoidChecks checks;
  SimplicityVerdict algebra;
};

// Computes both sides of the equivalence (algebra simplicity mod p vs
// effective + minimal) and insists they agree; disagreement is an internal
// failure, not a verdict.
PSimplicityVerdict p_simplicity(const FiniteGroupoid& g, int64_t p, uint64_t seed = 1,
                                size_t dim_cap = 256);

}  // namespace padiclab

#endif
