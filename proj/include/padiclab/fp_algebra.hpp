#ifndef PADICLAB_FP_ALGEBRA_HPP
#define PADICLAB_FP_ALGEBRA_HPP

// Associative F_p-algebras by structure constants, with the two-tier
// simplicity test (exhaustive enumeration / randomized ideal spinning).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/errors.hpp"

namespace padiclab {

using FpVec = std::vector<int64_t>;

struct FpAlgebra {
  int64_t p = 0;
  size_t dim = 0;
  std::vector<int64_t> mult;  // dim^3, entries reduced mod p
  std::optional<FpVec> unit;

  FpAlgebra(int64_t p_, size_t d);

  int64_t structure(size_t i, size_t j, size_t k) const { return mult[(i * dim + j) * dim + k]; }
  void set_structure(size_t i, size_t j, size_t k, int64_t v);

  FpVec product(const FpVec& x, const FpVec& y) const;
  bool operator==(const FpAlgebra& o) const;
};

// Row space over F_p with reduced-echelon insertion.
class FpSpan {
 public:
  FpSpan(int64_t p, size_t width);
  bool insert(FpVec v);  // true if the vector enlarged the span
  bool contains(FpVec v) const;
  size_t rank() const { return rows_.size(); }
  const std::vector<FpVec>& rows() const { return rows_; }
  size_t width() const { return width_; }

 private:
  int64_t p_;
  size_t width_;
  std::vector<FpVec> rows_;     // reduced echelon, pivot normalized to 1
  std::vector<size_t> pivots_;  // pivot column per row
};

// Kernel basis of an equations x dual: rows are linear functionals.
std::vector<FpVec> fp_kernel(int64_t p, size_t unknowns, const std::vector<FpVec>& equations);

// Two-sided ideal generated by `gen`, by spinning under left/right basis
// multiplication; stops early once the ideal is everything.
FpSpan ideal_closure(const FpAlgebra& a, const FpVec& gen);

struct SimplicityVerdict {
  bool simple = false;
  std::string tier;  // "exhaustive" or "randomized"
  uint64_t seed = 0;
  int rounds = 0;
  std::optional<FpVec> witness;  // generates a proper two-sided ideal
  size_t witness_ideal_dim = 0;
};

// Exhaustive when p^dim fits under `exhaustive_bound`; otherwise a seeded
// randomized search: basis spins plus kernels of left/right multiplication
// by random elements (zero divisors expose proper ideals).  Dimensions above
// `dim_cap` are refused.
SimplicityVerdict is_simple(const FpAlgebra& a, uint64_t seed = 1, int rounds = 200,
                            size_t dim_cap = 256, uint64_t exhaustive_bound = 1u << 20);

}  // namespace padiclab

#endif
