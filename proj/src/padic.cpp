#include "padiclab/padic.hpp"

#include <algorithm>

namespace padiclab {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::mismatch: return "Mismatch";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::non_unit: return "NonUnit";
    case errc::not_a_square: return "NotASquare";
    case errc::unsupported_prime: return "UnsupportedPrime";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::invalid_quasi_state: return "InvalidQuasiState";
    case errc::degenerate_precision: return "DegeneratePrecision";
    case errc::profile_mismatch: return "ProfileMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_isometric: return "NotIsometric";
    case errc::dimension_cap_exceeded: return "DimensionCapExceeded";
    case errc::invalid_input: return "InvalidInput";
    case errc::internal_check_failed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

std::string NormValue::to_string() const {
  if (below_) return "below_precision";
  return "p^-" + std::to_string(exponent_);
}

bigint pow_int(int64_t base, int exp) {
  bigint r = 1;
  bigint b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

bigint mod_reduce(const bigint& v, const bigint& modulus) {
  bigint r = v % modulus;
  if (r < 0) r += modulus;
  return r;
}

bigint mod_inverse(const bigint& unit, const bigint& modulus) {
  // Extended Euclid; `unit` must be coprime to the modulus.
  bigint r0 = modulus, r1 = mod_reduce(unit, modulus);
  bigint t0 = 0, t1 = 1;
  while (r1 != 0) {
    bigint q = r0 / r1;
    bigint r2 = r0 - q * r1;
    bigint t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) fail(errc::non_unit, "element is not invertible modulo p^N");
  return mod_reduce(t0, modulus);
}

int residue_valuation(const bigint& r, int64_t p, int N) {
  if (r == 0) return N;
  int k = 0;
  bigint v = r;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return std::min(k, N);
}

PadicInt::PadicInt(int64_t prime, int precision, const bigint& value)
    : prime_(prime), precision_(precision) {
  if (prime < 2) fail(errc::invalid_argument, "prime must be >= 2");
  if (precision < 1) fail(errc::invalid_argument, "precision must be >= 1");
  modulus_ = pow_int(prime, precision);
  residue_ = mod_reduce(value, modulus_);
}

void PadicInt::require_compatible(const PadicInt& o) const {
  if (prime_ != o.prime_ || precision_ != o.precision_)
    fail(errc::mismatch, "operands carry different prime or precision");
}

NormValue PadicInt::valuation() const {
  if (residue_ == 0) return NormValue::below_precision();
  return NormValue::exact(residue_valuation(residue_, prime_, precision_));
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
  require_compatible(o);
  return PadicInt(prime_, precision_, residue_ + o.residue_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
  require_compatible(o);
  return PadicInt(prime_, precision_, residue_ - o.residue_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
  require_compatible(o);
  return PadicInt(prime_, precision_, residue_ * o.residue_);
}

PadicInt PadicInt::operator-() const { return PadicInt(prime_, precision_, -residue_); }

bool PadicInt::operator==(const PadicInt& o) const {
  return prime_ == o.prime_ && precision_ == o.precision_ && residue_ == o.residue_;
}

PadicInt PadicInt::inverse() const {
  if (!is_unit()) fail(errc::non_unit, "inverse requires valuation 0");
  return PadicInt(prime_, precision_, mod_inverse(residue_, modulus_));
}

namespace {

// Legendre symbol via Euler's criterion; u must be a unit mod p.
bool is_qr_mod_p(const bigint& u, int64_t p) {
  bigint r = u % p;
  if (r < 0) r += p;
  bigint acc = 1, base = r;
  int64_t e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == 1;
}

int64_t sqrt_mod_p(const bigint& u, int64_t p) {
  bigint target = mod_reduce(u, p);
  for (int64_t r = 0; r < p; ++r) {
    if (bigint(r) * r % p == target) return r;
  }
  fail(errc::not_a_square, "no square root mod p");
}

// Newton iteration y <- y - (y^2 - a) / (2y), doubling precision each step.
bigint hensel_sqrt(const bigint& a, int64_t root_mod_p, int64_t p, int N) {
  bigint y = root_mod_p;
  bigint mod = p;
  int have = 1;
  bigint full = pow_int(p, N);
  while (have < N) {
    have = std::min(2 * have, N);
    mod = pow_int(p, have);
    bigint inv2y = mod_inverse(mod_reduce(2 * y, mod), mod);
    y = mod_reduce(y - (y * y - a) * inv2y, mod);
  }
  return mod_reduce(y, full);
}

bigint canonical_of_pair(const bigint& y, const bigint& modulus) {
  bigint other = mod_reduce(-y, modulus);
  return std::min(y, other);
}

}  // namespace

bool is_square(const PadicInt& x) {
  if (x.prime() == 2) fail(errc::unsupported_prime, "square classes require p odd");
  NormValue v = x.valuation();
  if (v.is_below_precision())
    fail(errc::precision_exhausted, "cannot decide squareness of 0 mod p^N");
  int k = v.exponent();
  if (k % 2 != 0) return false;
  bigint unit_part = x.residue() / pow_int(x.prime(), k);
  return is_qr_mod_p(unit_part, x.prime());
}

PadicInt sqrt(const PadicInt& x) {
  if (x.prime() == 2) fail(errc::unsupported_prime, "sqrt requires p odd");
  if (!is_square(x)) fail(errc::not_a_square, "element is not a square");
  int64_t p = x.prime();
  int N = x.precision();
  int k = x.valuation().exponent();
  bigint unit_part = x.residue() / pow_int(p, k);
  // Lift at full precision; the p^{k/2} factor multiplies back in afterwards.
  int64_t r0 = sqrt_mod_p(unit_part, p);
  bigint y = hensel_sqrt(unit_part, r0, p, N);
  bigint root = mod_reduce(y * pow_int(p, k / 2), pow_int(p, N));
  return PadicInt(p, N, canonical_of_pair(root, pow_int(p, N)));
}

PadicInt nonresidue(int64_t p, int N) {
  if (p == 2) fail(errc::unsupported_prime, "non-residues require p odd");
  for (int64_t u = 2; u < p; ++u) {
    if (!is_qr_mod_p(u, p)) return PadicInt(p, N, u);
  }
  fail(errc::internal_check_failed, "no quadratic non-residue found; p not prime?");
}

std::pair<PadicInt, PadicInt> two_squares(const PadicInt& u) {
  int64_t p = u.prime();
  int N = u.precision();
  if (p == 2) fail(errc::unsupported_prime, "two-squares requires p odd");
  if (!u.is_unit()) fail(errc::non_unit, "two-squares requires a unit");
  // First (x0, y0) in lexicographic order with x0^2 + y0^2 = u mod p.  A
  // solution always exists: the value sets {x^2} and {u - y^2} each have
  // (p+1)/2 elements, so they intersect.
  bigint target = mod_reduce(u.residue(), p);
  for (int64_t x0 = 0; x0 < p; ++x0) {
    for (int64_t y0 = 0; y0 < p; ++y0) {
      if ((bigint(x0) * x0 + bigint(y0) * y0) % p == target) {
        // Lift in a unit coordinate; at least one of x0, y0 is a unit mod p.
        if (y0 % p != 0) {
          PadicInt x(p, N, x0);
          PadicInt y = sqrt(u - x * x);
          return {x, y};
        }
        PadicInt y(p, N, y0);
        PadicInt x = sqrt(u - y * y);
        return {x, y};
      }
    }
  }
  fail(errc::internal_check_failed, "no two-squares decomposition mod p; p not prime?");
}

}  // namespace padiclab
