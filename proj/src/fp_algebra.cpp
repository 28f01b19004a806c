#include "padiclab/fp_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "padiclab/rng.hpp"

namespace padiclab {

namespace {
int64_t fp_reduce(int64_t v, int64_t p) {
  int64_t r = v % p;
  return r < 0 ? r + p : r;
}

int64_t fp_inv(int64_t a, int64_t p) {
  int64_t t0 = 0, t1 = 1, r0 = p, r1 = fp_reduce(a, p);
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) fail(errc::non_unit, "no inverse mod p");
  return fp_reduce(t0, p);
}
}  // namespace

FpAlgebra::FpAlgebra(int64_t p_, size_t d) : p(p_), dim(d) {
  if (p_ < 2) fail(errc::invalid_argument, "characteristic must be >= 2");
  mult.assign(d * d * d, 0);
}

void FpAlgebra::set_structure(size_t i, size_t j, size_t k, int64_t v) {
  mult[(i * dim + j) * dim + k] = fp_reduce(v, p);
}

FpVec FpAlgebra::product(const FpVec& x, const FpVec& y) const {
  FpVec out(dim, 0);
  for (size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      int64_t c = fp_reduce(x[i] * y[j], p);
      if (c == 0) continue;
      const int64_t* row = mult.data() + (i * dim + j) * dim;
      for (size_t k = 0; k < dim; ++k) out[k] = fp_reduce(out[k] + c * row[k], p);
    }
  }
  return out;
}

bool FpAlgebra::operator==(const FpAlgebra& o) const {
  return p == o.p && dim == o.dim && mult == o.mult && unit == o.unit;
}

FpSpan::FpSpan(int64_t p, size_t width) : p_(p), width_(width) {}

bool FpSpan::insert(FpVec v) {
  for (auto& x : v) x = fp_reduce(x, p_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (v[pivots_[r]] != 0) {
      int64_t c = v[pivots_[r]];
      for (size_t j = 0; j < width_; ++j) v[j] = fp_reduce(v[j] - c * rows_[r][j], p_);
    }
  }
  size_t lead = width_;
  for (size_t j = 0; j < width_; ++j) {
    if (v[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == width_) return false;
  int64_t inv = fp_inv(v[lead], p_);
  for (auto& x : v) x = fp_reduce(x * inv, p_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][lead] != 0) {
      int64_t c = rows_[r][lead];
      for (size_t j = 0; j < width_; ++j) rows_[r][j] = fp_reduce(rows_[r][j] - c * v[j], p_);
    }
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool FpSpan::contains(FpVec v) const {
  for (auto& x : v) x = fp_reduce(x, p_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (v[pivots_[r]] != 0) {
      int64_t c = v[pivots_[r]];
      for (size_t j = 0; j < width_; ++j) v[j] = fp_reduce(v[j] - c * rows_[r][j], p_);
    }
  }
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

std::vector<FpVec> fp_kernel(int64_t p, size_t unknowns, const std::vector<FpVec>& equations) {
  FpSpan rowspace(p, unknowns);
  for (const auto& eq : equations) rowspace.insert(eq);
  std::vector<int64_t> pivot_row_of(unknowns, -1);
  const auto& rows = rowspace.rows();
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t j = 0; j < unknowns; ++j) {
      if (rows[r][j] != 0) {
        pivot_row_of[j] = (int64_t)r;
        break;
      }
    }
  }
  std::vector<FpVec> kernel;
  for (size_t f = 0; f < unknowns; ++f) {
    if (pivot_row_of[f] >= 0) continue;
    FpVec v(unknowns, 0);
    v[f] = 1;
    for (size_t j = 0; j < unknowns; ++j) {
      if (pivot_row_of[j] < 0) continue;
      v[j] = fp_reduce(-rows[(size_t)pivot_row_of[j]][f], p);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

FpSpan ideal_closure(const FpAlgebra& a, const FpVec& gen) {
  FpSpan ideal(a.p, a.dim);
  std::vector<FpVec> work;
  if (ideal.insert(gen)) work.push_back(gen);
  FpVec basis(a.dim, 0);
  while (!work.empty() && ideal.rank() < a.dim) {
    FpVec v = std::move(work.back());
    work.pop_back();
    for (size_t i = 0; i < a.dim && ideal.rank() < a.dim; ++i) {
      basis.assign(a.dim, 0);
      basis[i] = 1;
      FpVec left = a.product(basis, v);
      if (ideal.insert(left)) work.push_back(std::move(left));
      FpVec right = a.product(v, basis);
      if (ideal.insert(right)) work.push_back(std::move(right));
    }
  }
  return ideal;
}

namespace {

bool spin_is_proper(const FpAlgebra& a, const FpVec& gen, SimplicityVerdict* out) {
  bool zero = std::all_of(gen.begin(), gen.end(), [](int64_t x) { return x == 0; });
  if (zero) return false;
  FpSpan ideal = ideal_closure(a, gen);
  if (ideal.rank() < a.dim) {
    out->simple = false;
    out->witness = gen;
    out->witness_ideal_dim = ideal.rank();
    return true;
  }
  return false;
}

// dim x dim matrix (as rows) of left or right multiplication by x.
std::vector<FpVec> mult_operator(const FpAlgebra& a, const FpVec& x, bool left) {
  std::vector<FpVec> rows(a.dim, FpVec(a.dim, 0));
  FpVec basis(a.dim, 0);
  for (size_t j = 0; j < a.dim; ++j) {
    basis.assign(a.dim, 0);
    basis[j] = 1;
    FpVec col = left ? a.product(x, basis) : a.product(basis, x);
    for (size_t k = 0; k < a.dim; ++k) rows[k][j] = col[k];
  }
  return rows;
}

}  // namespace

SimplicityVerdict is_simple(const FpAlgebra& a, uint64_t seed, int rounds, size_t dim_cap,
                            uint64_t exhaustive_bound) {
  if (a.dim == 0) fail(errc::invalid_argument, "simplicity of the zero algebra");
  if (a.dim > dim_cap)
    fail(errc::dimension_cap_exceeded,
         "dimension " + std::to_string(a.dim) + " exceeds cap " + std::to_string(dim_cap));

  SimplicityVerdict verdict;
  verdict.seed = seed;
  verdict.rounds = rounds;

  const double log_count = (double)a.dim * std::log2((double)a.p);
  const bool exhaustive = log_count <= std::log2((double)exhaustive_bound) + 1e-9;

  if (exhaustive) {
    verdict.tier = "exhaustive";
    FpVec v(a.dim, 0);
    while (true) {
      size_t i = 0;
      while (i < a.dim) {
        v[i] += 1;
        if (v[i] < a.p) break;
        v[i] = 0;
        ++i;
      }
      if (i == a.dim) break;
      if (spin_is_proper(a, v, &verdict)) return verdict;
    }
    verdict.simple = true;
    return verdict;
  }

  verdict.tier = "randomized";
  // Basis spins catch structured ideals (augmentation ideals, block summands).
  FpVec v(a.dim, 0);
  for (size_t i = 0; i < a.dim; ++i) {
    v.assign(a.dim, 0);
    v[i] = 1;
    if (spin_is_proper(a, v, &verdict)) return verdict;
  }
  Rng rng(seed);
  for (int round = 0; round < rounds; ++round) {
    FpVec x(a.dim, 0);
    for (size_t i = 0; i < a.dim; ++i) x[i] = (int64_t)rng.below((uint64_t)a.p);
    if (spin_is_proper(a, x, &verdict)) return verdict;
    // Kernels of multiplication by a zero divisor are one-sided ideals whose
    // elements tend to generate proper two-sided ideals.
    for (bool left : {true, false}) {
      auto op = mult_operator(a, x, left);
      for (const auto& ker : fp_kernel(a.p, a.dim, op)) {
        if (spin_is_proper(a, ker, &verdict)) return verdict;
      }
    }
  }
  verdict.simple = true;
  return verdict;
}

}  // namespace padiclab
