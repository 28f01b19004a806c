#include "padiclab/matrix.hpp"

#include <algorithm>
#include <limits>

namespace padiclab {

PadicMatrix::PadicMatrix(int64_t prime, int precision, size_t rows, size_t cols)
    : prime_(prime), precision_(precision), rows_(rows), cols_(cols) {
  if (prime < 2) fail(errc::invalid_argument, "prime must be >= 2");
  if (precision < 1) fail(errc::invalid_argument, "precision must be >= 1");
  modulus_ = pow_int(prime, precision);
  entries_.assign(rows * cols, bigint(0));
}

PadicMatrix PadicMatrix::identity(int64_t prime, int precision, size_t n) {
  PadicMatrix m(prime, precision, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void PadicMatrix::require_same_ring(const PadicMatrix& o) const {
  if (prime_ != o.prime_ || precision_ != o.precision_)
    fail(errc::mismatch, "matrices carry different prime or precision");
}

PadicMatrix PadicMatrix::operator+(const PadicMatrix& o) const {
  require_same_ring(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::shape_mismatch, "matrix addition");
  PadicMatrix r(prime_, precision_, rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = mod_reduce(entries_[i] + o.entries_[i], modulus_);
  return r;
}

PadicMatrix PadicMatrix::operator-(const PadicMatrix& o) const {
  require_same_ring(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::shape_mismatch, "matrix subtraction");
  PadicMatrix r(prime_, precision_, rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = mod_reduce(entries_[i] - o.entries_[i], modulus_);
  return r;
}

PadicMatrix PadicMatrix::operator-() const {
  PadicMatrix r(prime_, precision_, rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = mod_reduce(-entries_[i], modulus_);
  return r;
}

namespace {

// Multiplication kernel for moduli below 2^62: unsigned 128-bit accumulation
// with lazy reduction.  Falls back to bigint arithmetic otherwise.
void mul_fast(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
              std::vector<uint64_t>& out, size_t n, size_t k, size_t m, uint64_t mod) {
  const unsigned __int128 limit = (unsigned __int128)1 << 126;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      unsigned __int128 acc = 0;
      const uint64_t* arow = a.data() + i * k;
      for (size_t t = 0; t < k; ++t) {
        acc += (unsigned __int128)arow[t] * b[t * m + j];
        if (acc >= limit) acc %= mod;
      }
      out[i * m + j] = (uint64_t)(acc % mod);
    }
  }
}

}  // namespace

PadicMatrix PadicMatrix::operator*(const PadicMatrix& o) const {
  require_same_ring(o);
  if (cols_ != o.rows_) fail(errc::shape_mismatch, "matrix product");
  PadicMatrix r(prime_, precision_, rows_, o.cols_);
  if (modulus_ < (bigint(1) << 62)) {
    uint64_t mod = modulus_.convert_to<uint64_t>();
    std::vector<uint64_t> a(entries_.size()), b(o.entries_.size()), c(rows_ * o.cols_);
    for (size_t i = 0; i < entries_.size(); ++i) a[i] = entries_[i].convert_to<uint64_t>();
    for (size_t i = 0; i < o.entries_.size(); ++i) b[i] = o.entries_[i].convert_to<uint64_t>();
    mul_fast(a, b, c, rows_, cols_, o.cols_, mod);
    for (size_t i = 0; i < c.size(); ++i) r.entries_[i] = c[i];
    return r;
  }
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < o.cols_; ++j) {
      bigint acc = 0;
      for (size_t t = 0; t < cols_; ++t) acc += at(i, t) * o.at(t, j);
      r.entries_[i * o.cols_ + j] = mod_reduce(acc, modulus_);
    }
  }
  return r;
}

bool PadicMatrix::operator==(const PadicMatrix& o) const {
  return prime_ == o.prime_ && precision_ == o.precision_ && rows_ == o.rows_ &&
         cols_ == o.cols_ && entries_ == o.entries_;
}

PadicMatrix PadicMatrix::scalar_mul(const bigint& c) const {
  PadicMatrix r(prime_, precision_, rows_, cols_);
  bigint cr = mod_reduce(c, modulus_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = mod_reduce(entries_[i] * cr, modulus_);
  return r;
}

PadicMatrix PadicMatrix::transpose() const {
  PadicMatrix r(prime_, precision_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.entries_[j * rows_ + i] = at(i, j);
  return r;
}

bool PadicMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool PadicMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

NormValue PadicMatrix::op_norm() const {
  int best = precision_;
  for (const auto& e : entries_) best = std::min(best, residue_valuation(e, prime_, precision_));
  if (best >= precision_) return NormValue::below_precision();
  return NormValue::exact(best);
}

std::vector<bigint> PadicMatrix::apply(const std::vector<bigint>& v) const {
  if (v.size() != cols_) fail(errc::shape_mismatch, "matrix-vector product");
  std::vector<bigint> out(rows_, bigint(0));
  for (size_t i = 0; i < rows_; ++i) {
    bigint acc = 0;
    for (size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
    out[i] = mod_reduce(acc, modulus_);
  }
  return out;
}

void PadicMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < cols_; ++j) std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

void PadicMatrix::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < rows_; ++i) std::swap(entries_[i * cols_ + a], entries_[i * cols_ + b]);
}

void PadicMatrix::scale_row(size_t r, const bigint& c) {
  for (size_t j = 0; j < cols_; ++j)
    entries_[r * cols_ + j] = mod_reduce(entries_[r * cols_ + j] * c, modulus_);
}

void PadicMatrix::scale_col(size_t c, const bigint& s) {
  for (size_t i = 0; i < rows_; ++i)
    entries_[i * cols_ + c] = mod_reduce(entries_[i * cols_ + c] * s, modulus_);
}

void PadicMatrix::add_row_multiple(size_t dst, size_t src, const bigint& c) {
  for (size_t j = 0; j < cols_; ++j)
    entries_[dst * cols_ + j] =
        mod_reduce(entries_[dst * cols_ + j] + c * entries_[src * cols_ + j], modulus_);
}

void PadicMatrix::add_col_multiple(size_t dst, size_t src, const bigint& c) {
  for (size_t i = 0; i < rows_; ++i)
    entries_[i * cols_ + dst] =
        mod_reduce(entries_[i * cols_ + dst] + c * entries_[i * cols_ + src], modulus_);
}

PadicMatrix block_diag(const std::vector<PadicMatrix>& blocks) {
  if (blocks.empty()) fail(errc::invalid_argument, "block_diag of nothing");
  size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  PadicMatrix out(blocks[0].prime(), blocks[0].precision(), rows, cols);
  size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    if (b.prime() != out.prime() || b.precision() != out.precision())
      fail(errc::mismatch, "block_diag over different rings");
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) out.set(ro + i, co + j, b.at(i, j));
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

PadicMatrix kronecker(const PadicMatrix& a, const PadicMatrix& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision())
    fail(errc::mismatch, "kronecker over different rings");
  PadicMatrix out(a.prime(), a.precision(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
    }
  return out;
}

namespace {

struct Position {
  size_t row, col;
  int val;
  bool found;
};

// Entry of minimal valuation with row >= r0, column not excluded; ties go to
// the lowest row, then the lowest column.
Position find_pivot(const PadicMatrix& m, size_t r0, const std::vector<bool>& col_used) {
  Position best{0, 0, m.precision(), false};
  for (size_t i = r0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (col_used[j]) continue;
      if (m.at(i, j) == 0) continue;
      int v = residue_valuation(m.at(i, j), m.prime(), m.precision());
      if (!best.found || v < best.val) best = {i, j, v, true};
    }
    if (best.found && best.val == 0) break;  // cannot improve on a unit in the lowest row
  }
  return best;
}

}  // namespace

Echelon echelonize(const PadicMatrix& a) {
  const int64_t p = a.prime();
  const int N = a.precision();
  PadicMatrix m = a;
  PadicMatrix t = PadicMatrix::identity(p, N, a.rows());
  std::vector<Pivot> pivots;
  std::vector<bool> col_used(a.cols(), false);
  size_t r = 0;
  while (r < a.rows()) {
    Position pos = find_pivot(m, r, col_used);
    if (!pos.found) break;
    m.swap_rows(r, pos.row);
    t.swap_rows(r, pos.row);
    const bigint pk = pow_int(p, pos.val);
    const bigint unit = m.at(r, pos.col) / pk;
    const bigint unit_inv = mod_inverse(unit, m.modulus());
    m.scale_row(r, unit_inv);
    t.scale_row(r, unit_inv);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m.at(i, pos.col) == 0) continue;
      if (residue_valuation(m.at(i, pos.col), p, N) < pos.val) continue;  // not clearable
      const bigint mult = m.at(i, pos.col) / pk;
      m.add_row_multiple(i, r, -mult);
      t.add_row_multiple(i, r, -mult);
    }
    pivots.push_back({r, pos.col, pos.val});
    col_used[pos.col] = true;
    ++r;
  }
  return {std::move(m), std::move(t), std::move(pivots)};
}

SmithForm smith_form(const PadicMatrix& a) {
  const int64_t p = a.prime();
  const int N = a.precision();
  PadicMatrix d = a;
  PadicMatrix row_ops = PadicMatrix::identity(p, N, a.rows());
  PadicMatrix col_ops = PadicMatrix::identity(p, N, a.cols());
  PadicInt det_r = PadicInt::one(p, N);
  PadicInt det_c = PadicInt::one(p, N);
  std::vector<int> divisors;

  const size_t steps = std::min(a.rows(), a.cols());
  for (size_t t = 0; t < steps; ++t) {
    // Pivot of minimal valuation in the trailing submatrix.
    Position best{0, 0, N, false};
    for (size_t i = t; i < a.rows(); ++i)
      for (size_t j = t; j < a.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        int v = residue_valuation(d.at(i, j), p, N);
        if (!best.found || v < best.val) best = {i, j, v, true};
      }
    if (!best.found) break;
    if (best.row != t) {
      d.swap_rows(t, best.row);
      row_ops.swap_rows(t, best.row);
      det_r = -det_r;
    }
    if (best.col != t) {
      d.swap_cols(t, best.col);
      col_ops.swap_cols(t, best.col);
      det_c = -det_c;
    }
    const bigint pk = pow_int(p, best.val);
    const bigint unit = d.at(t, t) / pk;
    const bigint unit_inv = mod_inverse(unit, d.modulus());
    d.scale_row(t, unit_inv);
    row_ops.scale_row(t, unit_inv);
    det_r = det_r * PadicInt(p, N, unit_inv);
    for (size_t i = t + 1; i < a.rows(); ++i) {
      if (d.at(i, t) == 0) continue;
      const bigint mult = d.at(i, t) / pk;  // exact: pivot valuation is minimal
      d.add_row_multiple(i, t, -mult);
      row_ops.add_row_multiple(i, t, -mult);
    }
    for (size_t j = t + 1; j < a.cols(); ++j) {
      if (d.at(t, j) == 0) continue;
      const bigint mult = d.at(t, j) / pk;
      d.add_col_multiple(j, t, -mult);
      col_ops.add_col_multiple(j, t, -mult);
    }
    divisors.push_back(best.val);
  }
  return {std::move(row_ops), std::move(col_ops), std::move(d), std::move(divisors),
          det_r, det_c};
}

bool KernelBasis::has_truncated() const {
  for (bool b : truncated)
    if (b) return true;
  return false;
}

namespace {

// Scale a kernel generator so its first minimal-valuation coordinate becomes
// p^k (for free generators: the first unit coordinate becomes 1).
void canonicalize_generator(std::vector<bigint>& v, int64_t p, int N, const bigint& modulus) {
  int best = N;
  size_t lead = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    int val = residue_valuation(v[i], p, N);
    if (val < best) {
      best = val;
      lead = i;
    }
  }
  if (best >= N) return;
  const bigint unit = v[lead] / pow_int(p, best);
  const bigint inv = mod_inverse(unit, modulus);
  for (auto& x : v) x = mod_reduce(x * inv, modulus);
}

}  // namespace

KernelBasis kernel_saturated(const PadicMatrix& a) {
  const int64_t p = a.prime();
  const int N = a.precision();
  SmithForm s = smith_form(a);
  KernelBasis out;
  const size_t npiv = s.divisor_valuations.size();
  for (size_t i = 0; i < npiv; ++i) {
    int k = s.divisor_valuations[i];
    if (k == 0) continue;
    // Elementary divisor p^k with 0 < k < N: torsion direction, kernel only
    // at this precision.
    std::vector<bigint> gen(a.cols());
    const bigint scale = pow_int(p, N - k);
    for (size_t r = 0; r < a.cols(); ++r) gen[r] = mod_reduce(s.col_ops.at(r, i) * scale, a.modulus());
    canonicalize_generator(gen, p, N, a.modulus());
    out.generators.push_back(std::move(gen));
    out.truncated.push_back(true);
  }
  for (size_t j = npiv; j < a.cols(); ++j) {
    std::vector<bigint> gen(a.cols());
    for (size_t r = 0; r < a.cols(); ++r) gen[r] = s.col_ops.at(r, j);
    canonicalize_generator(gen, p, N, a.modulus());
    out.generators.push_back(std::move(gen));
    out.truncated.push_back(false);
  }
  return out;
}

PadicInt determinant(const PadicMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::shape_mismatch, "determinant of non-square matrix");
  SmithForm s = smith_form(a);
  PadicInt prod = PadicInt::one(a.prime(), a.precision());
  for (size_t i = 0; i < a.rows(); ++i)
    prod = prod * PadicInt(a.prime(), a.precision(), s.diagonal.at(i, i));
  return s.det_row_ops.inverse() * prod * s.det_col_ops.inverse();
}

std::pair<bool, PadicInt> det_is_unit(const PadicMatrix& a) {
  PadicInt d = determinant(a);
  return {d.is_unit(), d};
}

PadicMatrix inverse_unimodular(const PadicMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::shape_mismatch, "inverse of non-square matrix");
  const size_t n = a.rows();
  PadicMatrix m = a;
  PadicMatrix inv = PadicMatrix::identity(a.prime(), a.precision(), n);
  for (size_t j = 0; j < n; ++j) {
    size_t pivot = n;
    for (size_t i = j; i < n; ++i) {
      if (m.at(i, j) % a.prime() != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) fail(errc::not_unimodular, "matrix has no unit pivot; not invertible");
    m.swap_rows(j, pivot);
    inv.swap_rows(j, pivot);
    const bigint s = mod_inverse(m.at(j, j), m.modulus());
    m.scale_row(j, s);
    inv.scale_row(j, s);
    for (size_t i = 0; i < n; ++i) {
      if (i == j || m.at(i, j) == 0) continue;
      const bigint c = m.at(i, j);
      m.add_row_multiple(i, j, -c);
      inv.add_row_multiple(i, j, -c);
    }
  }
  return inv;
}

CongruenceDiagonalization congruence_diagonalize(const PadicMatrix& g) {
  const int64_t p = g.prime();
  const int N = g.precision();
  if (p == 2) fail(errc::unsupported_prime, "congruence diagonalization requires p odd");
  if (g.rows() != g.cols() || !g.is_symmetric()) fail(errc::not_symmetric, "form is not symmetric");
  if (!det_is_unit(g).first) fail(errc::not_unimodular, "form determinant is not a unit");

  const size_t n = g.rows();
  PadicMatrix work = g;
  PadicMatrix u = PadicMatrix::identity(p, N, n);
  std::vector<bigint> diag;

  auto sym_swap = [&](size_t a, size_t b) {
    work.swap_rows(a, b);
    work.swap_cols(a, b);
    u.swap_cols(a, b);
  };
  // Basis substitution e_dst += c * e_src.
  auto sym_add = [&](size_t dst, size_t src, const bigint& c) {
    work.add_row_multiple(dst, src, c);
    work.add_col_multiple(dst, src, c);
    u.add_col_multiple(dst, src, c);
  };

  for (size_t t = 0; t < n; ++t) {
    size_t unit_diag = n;
    for (size_t s = t; s < n; ++s) {
      if (work.at(s, s) % p != 0) {
        unit_diag = s;
        break;
      }
    }
    if (unit_diag == n) {
      // All remaining diagonal entries vanish mod p; the trailing block is
      // unimodular, so an off-diagonal unit exists.  e_i += e_j makes the
      // (i,i) entry 2*g_ij, a unit since p is odd.
      bool done = false;
      for (size_t i = t; i < n && !done; ++i)
        for (size_t j = i + 1; j < n && !done; ++j) {
          if (work.at(i, j) % p != 0) {
            sym_add(i, j, 1);
            unit_diag = i;
            done = true;
          }
        }
      if (!done) fail(errc::not_unimodular, "no unit pivot available in symmetric reduction");
    }
    if (unit_diag != t) sym_swap(t, unit_diag);
    const bigint d = work.at(t, t);
    const bigint d_inv = mod_inverse(d, work.modulus());
    for (size_t s = t + 1; s < n; ++s) {
      if (work.at(t, s) == 0) continue;
      sym_add(s, t, mod_reduce(-work.at(t, s) * d_inv, work.modulus()));
    }
    diag.push_back(work.at(t, t));
  }
  return {std::move(u), std::move(diag)};
}

RowSpan::RowSpan(int64_t prime, int precision, size_t width)
    : prime_(prime), precision_(precision), width_(width) {
  modulus_ = pow_int(prime, precision);
}

void RowSpan::insert_matrix_rows(const PadicMatrix& m) {
  if (m.cols() != width_) fail(errc::shape_mismatch, "row width mismatch");
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<bigint> row(width_);
    for (size_t j = 0; j < width_; ++j) row[j] = m.at(i, j);
    insert(std::move(row));
  }
}

void RowSpan::insert(std::vector<bigint> v) {
  if (v.size() != width_) fail(errc::shape_mismatch, "row width mismatch");
  for (auto& x : v) x = mod_reduce(x, modulus_);
  while (true) {
    size_t lead = width_;
    for (size_t j = 0; j < width_; ++j) {
      if (v[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead == width_) return;
    const int k = residue_valuation(v[lead], prime_, precision_);
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      const bigint unit = v[lead] / pow_int(prime_, k);
      const bigint inv = mod_inverse(unit, modulus_);
      for (auto& x : v) x = mod_reduce(x * inv, modulus_);
      rows_[lead] = v;
      pivot_val_[lead] = k;
      if (k > 0) {
        // Annihilator row: p^{N-k} * v lies in the span and leads later.
        std::vector<bigint> ann(width_);
        const bigint scale = pow_int(prime_, precision_ - k);
        for (size_t j = 0; j < width_; ++j) ann[j] = mod_reduce(v[j] * scale, modulus_);
        insert(std::move(ann));
      }
      return;
    }
    const int kj = pivot_val_[lead];
    if (k >= kj) {
      const bigint mult = v[lead] / pow_int(prime_, kj);
      const std::vector<bigint>& r = it->second;
      for (size_t j = lead; j < width_; ++j) v[j] = mod_reduce(v[j] - mult * r[j], modulus_);
      continue;
    }
    // Strictly smaller valuation: v becomes the pivot row, the old one
    // gets re-inserted (its lead entry is now reducible by v).
    const bigint unit = v[lead] / pow_int(prime_, k);
    const bigint inv = mod_inverse(unit, modulus_);
    for (auto& x : v) x = mod_reduce(x * inv, modulus_);
    std::vector<bigint> old = std::move(it->second);
    rows_[lead] = v;
    pivot_val_[lead] = k;
    if (k > 0) {
      std::vector<bigint> ann(width_);
      const bigint scale = pow_int(prime_, precision_ - k);
      for (size_t j = 0; j < width_; ++j) ann[j] = mod_reduce(v[j] * scale, modulus_);
      insert(std::move(ann));
    }
    insert(std::move(old));
    return;
  }
}

std::vector<bigint> RowSpan::reduce(std::vector<bigint> v, bool* became_zero) const {
  for (auto& x : v) x = mod_reduce(x, modulus_);
  while (true) {
    size_t lead = width_;
    for (size_t j = 0; j < width_; ++j) {
      if (v[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead == width_) {
      *became_zero = true;
      return v;
    }
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      *became_zero = false;
      return v;
    }
    const int k = residue_valuation(v[lead], prime_, precision_);
    const int kj = pivot_val_.at(lead);
    if (k < kj) {
      *became_zero = false;
      return v;
    }
    const bigint mult = v[lead] / pow_int(prime_, kj);
    const std::vector<bigint>& r = it->second;
    for (size_t j = lead; j < width_; ++j) v[j] = mod_reduce(v[j] - mult * r[j], modulus_);
  }
}

bool RowSpan::contains(const std::vector<bigint>& v) const {
  bool zero = false;
  reduce(v, &zero);
  return zero;
}

bool RowSpan::contains(const RowSpan& other) const {
  for (const auto& [col, row] : other.rows_) {
    (void)col;
    if (!contains(row)) return false;
  }
  return true;
}

bool RowSpan::same_span(const RowSpan& other) const {
  return contains(other) && other.contains(*this);
}

size_t RowSpan::unit_rank() const {
  size_t n = 0;
  for (const auto& [col, val] : pivot_val_)
    if (val == 0) ++n;
  return n;
}

bool RowSpan::all_pivots_unit() const {
  for (const auto& [col, val] : pivot_val_)
    if (val != 0) return false;
  return true;
}

std::vector<std::vector<bigint>> RowSpan::basis() const {
  // Canonical form: reduce every entry sitting above a later pivot mod p^{k'}.
  std::vector<std::vector<bigint>> rows;
  std::vector<size_t> own_col;
  for (const auto& [col, row] : rows_) {
    rows.push_back(row);
    own_col.push_back(col);
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    auto& r = rows[i];
    for (const auto& [col2, row2] : rows_) {
      if (col2 <= own_col[i]) continue;
      const int k2 = pivot_val_.at(col2);
      const bigint pk2 = pow_int(prime_, k2);
      const bigint q = r[col2] / pk2;
      if (q == 0) continue;
      for (size_t j = col2; j < width_; ++j) r[j] = mod_reduce(r[j] - q * row2[j], modulus_);
    }
  }
  return rows;
}

}  // namespace padiclab
