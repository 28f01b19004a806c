#ifndef PADICLAB_MATRIX_HPP
#define PADICLAB_MATRIX_HPP

// Dense matrices over Z/p^N: arithmetic, operator norm, chain-ring
// elimination, saturated kernels, determinants and congruence
// diagonalization of symmetric unimodular forms.

#include <cstddef>
#include <map>
#include <vector>

#include "padiclab/padic.hpp"

namespace padiclab {

class PadicMatrix {
 public:
  PadicMatrix(int64_t prime, int precision, size_t rows, size_t cols);

  static PadicMatrix identity(int64_t prime, int precision, size_t n);

  int64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const bigint& modulus() const { return modulus_; }

  const bigint& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  void set(size_t i, size_t j, const bigint& v) { entries_[i * cols_ + j] = mod_reduce(v, modulus_); }

  PadicInt entry(size_t i, size_t j) const { return PadicInt(prime_, precision_, at(i, j)); }

  PadicMatrix operator+(const PadicMatrix& o) const;
  PadicMatrix operator-(const PadicMatrix& o) const;
  PadicMatrix operator*(const PadicMatrix& o) const;
  PadicMatrix operator-() const;
  bool operator==(const PadicMatrix& o) const;
  bool operator!=(const PadicMatrix& o) const { return !(*this == o); }

  PadicMatrix scalar_mul(const bigint& c) const;
  PadicMatrix transpose() const;

  bool is_zero() const;
  bool is_symmetric() const;

  // Operator norm for the coordinate sup-norm: the maximal entry norm,
  // i.e. the minimal entry valuation.
  NormValue op_norm() const;

  std::vector<bigint> apply(const std::vector<bigint>& v) const;  // A * v

  // In-place row/column operations (exact mod p^N).  Used by the
  // elimination routines; results are bit-identical to sequential order.
  void swap_rows(size_t a, size_t b);
  void swap_cols(size_t a, size_t b);
  void scale_row(size_t r, const bigint& c);
  void scale_col(size_t c, const bigint& s);
  void add_row_multiple(size_t dst, size_t src, const bigint& c);  // row dst += c * row src
  void add_col_multiple(size_t dst, size_t src, const bigint& c);

 private:
  void require_same_ring(const PadicMatrix& o) const;

  int64_t prime_;
  int precision_;
  size_t rows_, cols_;
  bigint modulus_;
  std::vector<bigint> entries_;
};

PadicMatrix block_diag(const std::vector<PadicMatrix>& blocks);
PadicMatrix kronecker(const PadicMatrix& a, const PadicMatrix& b);

struct Pivot {
  size_t row;
  size_t col;
  int valuation;
};

// Row-reduced form over Z/p^N with a recorded invertible transformation:
// transform * input = reduced.  Pivots are chosen by minimal valuation,
// ties broken by lowest row then column; pivot valuations weakly increase.
struct Echelon {
  PadicMatrix reduced;
  PadicMatrix transform;
  std::vector<Pivot> pivots;
};

Echelon echelonize(const PadicMatrix& a);

// Diagonalization row_ops * A * col_ops = diag(p^{k_1}, ..., p^{k_r}, 0...)
// by invertible transformations; the k_i are weakly increasing.
struct SmithForm {
  PadicMatrix row_ops;   // invertible, rows x rows
  PadicMatrix col_ops;   // invertible, cols x cols
  PadicMatrix diagonal;  // same shape as input
  std::vector<int> divisor_valuations;  // one per pivot, < N
  PadicInt det_row_ops;  // determinant of row_ops (a unit)
  PadicInt det_col_ops;
};

SmithForm smith_form(const PadicMatrix& a);

// Generating set of { v : A v = 0 mod p^N }.  Generators coming from free
// directions carry a unit coordinate (scaled so the leading unit is 1);
// generators forced by elementary divisors 0 < k < N are precision
// artifacts and are flagged as truncated.
struct KernelBasis {
  std::vector<std::vector<bigint>> generators;
  std::vector<bool> truncated;  // parallel to generators
  bool has_truncated() const;
};

KernelBasis kernel_saturated(const PadicMatrix& a);

PadicInt determinant(const PadicMatrix& a);
std::pair<bool, PadicInt> det_is_unit(const PadicMatrix& a);

// Inverse of a matrix with unit determinant.
PadicMatrix inverse_unimodular(const PadicMatrix& a);

// U with U^T G U = diag(a_1..a_n), every a_i a unit.  Requires p odd,
// G symmetric with unit determinant.
struct CongruenceDiagonalization {
  PadicMatrix basis_change;      // U
  std::vector<bigint> diagonal;  // unit entries of D
};

CongruenceDiagonalization congruence_diagonalize(const PadicMatrix& g);

// Canonical triangular basis of a row span over Z/p^N, closed under the
// annihilator rows p^{N-k} * row (Howell-style), so membership testing is
// exact.  Insertion order does not affect the final canonical form.
class RowSpan {
 public:
  RowSpan(int64_t prime, int precision, size_t width);

  void insert(std::vector<bigint> v);
  void insert_matrix_rows(const PadicMatrix& m);

  bool contains(const std::vector<bigint>& v) const;
  bool contains(const RowSpan& other) const;
  bool same_span(const RowSpan& other) const;

  // Number of pivots whose valuation is zero (the free rank).
  size_t unit_rank() const;
  size_t size() const { return rows_.size(); }
  bool all_pivots_unit() const;

  // Rows in pivot-column order, fully reduced (canonical form).
  std::vector<std::vector<bigint>> basis() const;

  int64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  size_t width() const { return width_; }

 private:
  std::vector<bigint> reduce(std::vector<bigint> v, bool* became_zero) const;
  void canonicalize();

  int64_t prime_;
  int precision_;
  size_t width_;
  bigint modulus_;
  std::map<size_t, std::vector<bigint>> rows_;  // pivot column -> row
  std::map<size_t, int> pivot_val_;
};

}  // namespace padiclab

#endif
