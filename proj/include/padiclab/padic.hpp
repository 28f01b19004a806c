#ifndef PADICLAB_PADIC_HPP
#define PADICLAB_PADIC_HPP

// Fixed-precision arithmetic in Z_p: residues mod p^N with valuation,
// Hensel lifting, square classes and two-squares decompositions.
// Values are immutable; every operation is a pure function.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>

#include "padiclab/errors.hpp"

namespace padiclab {

using bigint = boost::multiprecision::cpp_int;

// |x|_p at precision N: either exactly p^-k with 0 <= k < N, or
// indistinguishable from zero (every residue digit vanished).
class NormValue {
 public:
  static NormValue exact(int k) { return NormValue(k, false); }
  static NormValue below_precision() { return NormValue(0, true); }

  bool is_below_precision() const { return below_; }
  int exponent() const {
    if (below_) fail(errc::precision_exhausted, "norm is below precision, exponent undefined");
    return exponent_;
  }

  // Exponent with below_precision mapped to `n` (useful as a saturating bound).
  int exponent_or(int n) const { return below_ ? n : exponent_; }

  // Norm comparisons: larger norm = smaller exponent; below_precision is smallest.
  friend bool operator==(const NormValue& a, const NormValue& b) {
    return a.below_ == b.below_ && (a.below_ || a.exponent_ == b.exponent_);
  }
  friend bool norm_le(const NormValue& a, const NormValue& b) {
    if (a.below_) return true;
    if (b.below_) return false;
    return a.exponent_ >= b.exponent_;
  }
  friend bool norm_lt(const NormValue& a, const NormValue& b) {
    return norm_le(a, b) && !(a == b);
  }

  std::string to_string() const;

 private:
  NormValue(int e, bool below) : exponent_(e), below_(below) {}
  int exponent_;
  bool below_;
};

class PadicInt {
 public:
  // Reduces `value` into [0, p^N).  `prime` must be >= 2 and `precision` >= 1;
  // primality is the caller's contract.
  PadicInt(int64_t prime, int precision, const bigint& value);

  int64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  const bigint& residue() const { return residue_; }
  const bigint& modulus() const { return modulus_; }

  bool is_zero() const { return residue_ == 0; }  // zero at this precision
  bool is_unit() const { return residue_ % prime_ != 0; }

  // Largest k with p^k | residue; below_precision when the residue is 0 mod p^N.
  NormValue valuation() const;

  PadicInt operator+(const PadicInt& o) const;
  PadicInt operator-(const PadicInt& o) const;
  PadicInt operator*(const PadicInt& o) const;
  PadicInt operator-() const;
  bool operator==(const PadicInt& o) const;
  bool operator!=(const PadicInt& o) const { return !(*this == o); }

  // Multiplicative inverse mod p^N; requires valuation 0.
  PadicInt inverse() const;

  static PadicInt zero(int64_t p, int N) { return PadicInt(p, N, 0); }
  static PadicInt one(int64_t p, int N) { return PadicInt(p, N, 1); }

  std::string to_string() const { return residue_.str(); }

 private:
  void require_compatible(const PadicInt& o) const;

  int64_t prime_;
  int precision_;
  bigint modulus_;
  bigint residue_;
};

bigint pow_int(int64_t base, int exp);

// Residue-level helpers shared with the matrix module.  All take reduced
// representatives in [0, p^N) and return reduced results.
bigint mod_reduce(const bigint& v, const bigint& modulus);
bigint mod_inverse(const bigint& unit, const bigint& modulus);
int residue_valuation(const bigint& r, int64_t p, int N);  // N when r == 0

// True iff x is a square in Z_p at this precision.  Requires p odd and
// valuation known exactly (x not below precision).
bool is_square(const PadicInt& x);

// Canonical square root (smallest nonnegative representative); Hensel-lifted
// from the mod-p root.  Errors: NotASquare, UnsupportedPrime(2).
PadicInt sqrt(const PadicInt& x);

// Smallest positive quadratic non-residue mod p, as a unit at precision N.
PadicInt nonresidue(int64_t p, int N);

// Writes the unit u as x^2 + y^2; search is lexicographic over residues mod p,
// then Hensel lifting in a unit coordinate.  Deterministic.
std::pair<PadicInt, PadicInt> two_squares(const PadicInt& u);

}  // namespace padiclab

#endif
