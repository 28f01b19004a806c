#include "padiclab/standard_form.hpp"

#include <algorithm>

#include "padiclab/rng.hpp"

namespace padiclab {

StarAlgebra quad_ext_algebra(int64_t p, int N, const bigint& u) {
  if (p == 2) fail(errc::unsupported_prime, "quadratic extension requires p odd");
  PadicInt uu(p, N, u);
  if (!uu.is_unit()) fail(errc::non_unit, "u must be a unit");
  StarAlgebra a(p, N, 2);  // basis {1, sqrt(u)}
  a.set_structure(0, 0, 0, 1);
  a.set_structure(0, 1, 1, 1);
  a.set_structure(1, 0, 1, 1);
  a.set_structure(1, 1, 0, u);
  a.unit = std::vector<bigint>{1, 0};
  return a;
}

namespace {

std::vector<bigint> basis_vec(size_t d, size_t i) {
  std::vector<bigint> v(d, bigint(0));
  v[i] = 1;
  return v;
}

}  // namespace

ValidationReport check_embedding(const AlgebraEmbedding& e) {
  ValidationReport rep;
  auto note = [&](const std::string& c, const std::string& d) {
    rep.valid = false;
    rep.issues.push_back({c, d, {}});
  };
  const size_t d = e.source.dim;
  if (e.images.size() != d) {
    note("shape", "one image per basis element required");
    return rep;
  }
  auto apply = [&](const std::vector<bigint>& x) {
    std::vector<bigint> out(e.target.dim, bigint(0));
    for (size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (size_t k = 0; k < e.target.dim; ++k) out[k] += x[i] * e.images[i][k];
    }
    for (auto& v : out) v = mod_reduce(v, e.target.modulus());
    return out;
  };
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      auto lhs = e.target.product(e.images[i], e.images[j]);
      auto rhs = apply(e.source.product(basis_vec(d, i), basis_vec(d, j)));
      if (lhs != rhs) {
        note("multiplicative", "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        goto mult_done;
      }
    }
mult_done:
  for (size_t i = 0; i < d; ++i) {
    if (e.target.star(e.images[i]) != apply(e.source.star(basis_vec(d, i)))) {
      note("involutive", "basis element " + std::to_string(i));
      break;
    }
  }
  for (size_t i = 0; i < d; ++i) {
    if (!(e.target.coord_norm(e.images[i]) == NormValue::exact(0))) {
      note("isometric", "basis element " + std::to_string(i));
      break;
    }
  }
  if (e.source.unit && e.target.unit) {
    if (apply(*e.source.unit) != *e.target.unit) note("unit", "unit is not preserved");
  }
  return rep;
}

AlgebraEmbedding quad_ext_embed(int64_t p, int N, const bigint& u) {
  PadicInt uu(p, N, u);
  if (p != 2 && is_square(uu)) fail(errc::invalid_argument, "u must not be a square");
  auto [x, y] = two_squares(uu);
  AlgebraEmbedding e{quad_ext_algebra(p, N, u),
                     bounded_algebra(QuasiHilbert(PadicMatrix::identity(p, N, 2))),
                     {}};
  // 1 -> identity; sqrt(u) -> [[x, y], [y, -x]], a symmetric square root of u.
  e.images.push_back({1, 0, 0, 1});
  e.images.push_back({x.residue(), y.residue(), y.residue(), -x.residue()});
  for (auto& img : e.images)
    for (auto& v : img) v = mod_reduce(v, e.target.modulus());
  auto chk = check_embedding(e);
  if (!chk.valid)
    fail(errc::internal_check_failed, "quadratic extension embedding failed: " + chk.issues[0].check);
  return e;
}

StarAlgebra twisted_m2(int64_t p, int N, const bigint& u, TwistConvention conv) {
  if (p == 2) fail(errc::unsupported_prime, "twisted involutions require p odd");
  PadicMatrix g(p, N, 2, 2);
  if (conv == TwistConvention::nonresidue_first) {
    g.set(0, 0, u);
    g.set(1, 1, 1);
  } else {
    g.set(0, 0, 1);
    g.set(1, 1, u);
  }
  return bounded_algebra(QuasiHilbert(g));
}

StarAlgebra tensor(const StarAlgebra& a, const StarAlgebra& b) {
  if (a.prime != b.prime || a.precision != b.precision)
    fail(errc::mismatch, "tensor over different rings");
  const size_t da = a.dim, db = b.dim, d = da * db;
  StarAlgebra out(a.prime, a.precision, d);
  for (size_t i1 = 0; i1 < da; ++i1)
    for (size_t i2 = 0; i2 < da; ++i2)
      for (size_t k1 = 0; k1 < da; ++k1) {
        const bigint& ca = a.structure(i1, i2, k1);
        if (ca == 0) continue;
        for (size_t j1 = 0; j1 < db; ++j1)
          for (size_t j2 = 0; j2 < db; ++j2)
            for (size_t k2 = 0; k2 < db; ++k2) {
              const bigint& cb = b.structure(j1, j2, k2);
              if (cb == 0) continue;
              out.set_structure(i1 * db + j1, i2 * db + j2, k1 * db + k2, ca * cb);
            }
      }
  out.invol = kronecker(a.invol, b.invol);
  if (a.unit && b.unit) {
    std::vector<bigint> unit(d, bigint(0));
    for (size_t i = 0; i < da; ++i)
      for (size_t j = 0; j < db; ++j)
        unit[i * db + j] = mod_reduce((*a.unit)[i] * (*b.unit)[j], out.modulus());
    out.unit = std::move(unit);
  }
  return out;
}

AlgebraEmbedding twisted_m2_embed(int64_t p, int N, const bigint& u, TwistConvention conv) {
  StarAlgebra source = twisted_m2(p, N, u, conv);
  StarAlgebra m2 = bounded_algebra(QuasiHilbert(PadicMatrix::identity(p, N, 2)));
  StarAlgebra target = tensor(m2, quad_ext_algebra(p, N, u));
  const bigint uinv = PadicInt(p, N, u).inverse().residue();
  AlgebraEmbedding e{std::move(source), std::move(target), {}};
  // Basis order of the source is E_11, E_12, E_21, E_22; target index of
  // E_ab tensor {1, sqrt(u)} is (a*2+b)*2 + {0,1}.
  auto image = [&](size_t m2_index, size_t quad_index, const bigint& c) {
    std::vector<bigint> v(8, bigint(0));
    v[m2_index * 2 + quad_index] = mod_reduce(c, e.target.modulus());
    return v;
  };
  if (conv == TwistConvention::nonresidue_first) {
    // [[a, b], [c, d]] -> [[a, b sqrt(u)], [c sqrt(u^{-1}), d]]
    e.images = {image(0, 0, 1), image(1, 1, 1), image(2, 1, uinv), image(3, 0, 1)};
  } else {
    e.images = {image(0, 0, 1), image(1, 1, uinv), image(2, 1, 1), image(3, 0, 1)};
  }
  auto chk = check_embedding(e);
  if (!chk.valid)
    fail(errc::internal_check_failed, "twisted M_2 embedding failed: " + chk.issues[0].check);
  return e;
}

namespace {

// Reads the normalized profile (1,..,1,u,..,u) off a diagonal Gram; the
// non-square unit u defaults to the canonical non-residue when absent.
struct Profile {
  size_t ones;
  bigint u;
};

Profile read_profile(const QuasiHilbert& h, bool require_equal_halves) {
  const size_t n = h.rank();
  const int64_t p = h.prime();
  const int N = h.precision();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && h.gram().at(i, j) != 0)
        fail(errc::profile_mismatch, "Gram matrix is not diagonal");
  size_t ones = 0;
  while (ones < n && h.gram().at(ones, ones) == 1) ++ones;
  bigint u = nonresidue(p, N).residue();
  if (ones < n) {
    u = h.gram().at(ones, ones);
    PadicInt uu(p, N, u);
    if (!uu.is_unit() || is_square(uu))
      fail(errc::profile_mismatch, "trailing diagonal entries must be a non-square unit");
    for (size_t i = ones; i < n; ++i)
      if (h.gram().at(i, i) != u)
        fail(errc::profile_mismatch, "trailing diagonal entries must all agree");
  }
  if (require_equal_halves && (n % 2 != 0 || ones != n / 2))
    fail(errc::profile_mismatch, "profile must be diag(1..1, u..u) with equal halves");
  return {ones, u};
}

int64_t square_class(const PadicInt& v) { return is_square(v) ? 0 : 1; }

}  // namespace

AlgebraEmbedding twisted_m2n_embed(const QuasiHilbert& h) {
  h.require_valid();
  if (h.prime() == 2) fail(errc::unsupported_prime, "requires p odd");
  Profile prof = read_profile(h, true);
  const size_t n = h.rank() / 2;
  const int64_t p = h.prime();
  const int N = h.precision();
  StarAlgebra source = bounded_algebra(h);
  StarAlgebra target = tensor(twisted_m2(p, N, prof.u, TwistConvention::unit_first),
                              bounded_algebra(QuasiHilbert(PadicMatrix::identity(p, N, n))));
  AlgebraEmbedding e{std::move(source), std::move(target), {}};
  // E_KL with K = alpha n + k, L = beta n + l maps to e_{alpha beta} ox E_kl.
  const size_t d = 4 * n * n;
  for (size_t K = 0; K < 2 * n; ++K)
    for (size_t L = 0; L < 2 * n; ++L) {
      size_t alpha = K / n, k = K % n, beta = L / n, l = L % n;
      std::vector<bigint> v(d, bigint(0));
      v[(alpha * 2 + beta) * (n * n) + (k * n + l)] = 1;
      e.images.push_back(std::move(v));
    }
  auto chk = check_embedding(e);
  if (!chk.valid)
    fail(errc::internal_check_failed, "twisted M_2n embedding failed: " + chk.issues[0].check);
  return e;
}

ColumnRep column_rep(const QuasiHilbert& h, size_t r) {
  h.require_valid();
  if (h.prime() == 2) fail(errc::unsupported_prime, "requires p odd");
  const size_t n = h.rank();
  if (r < 1 || r > n) fail(errc::index_out_of_range, "column index r out of range");
  Profile prof = read_profile(h, false);
  const size_t m = prof.ones;
  const int64_t p = h.prime();
  const int N = h.precision();
  const bigint modulus = pow_int(p, N);
  const bigint u = prof.u;
  const bigint uinv = PadicInt(p, N, u).inverse().residue();

  StarAlgebra tensor_source = tensor(bounded_algebra(h), quad_ext_algebra(p, N, u));
  const size_t td = tensor_source.dim;  // 2 n^2

  // Coordinates of C_r: e_0..e_{n-1}, then sqrt(u) e_0..e_{n-1}.  The basis
  // vector v sits in the tensor algebra as the matrix with column r-1 = v.
  auto tensor_coords = [&](size_t coord) {
    std::vector<bigint> x(td, bigint(0));
    size_t k = coord % n;
    size_t quad = coord / n;  // 0 = real part, 1 = sqrt(u) part
    x[(k * n + (r - 1)) * 2 + quad] = 1;
    return x;
  };
  // tau_r extracts the sqrt(u)-free coefficient at entry (r-1, r-1).
  const size_t tau_index = ((r - 1) * n + (r - 1)) * 2;

  PadicMatrix gram(p, N, 2 * n, 2 * n);
  for (size_t i = 0; i < 2 * n; ++i)
    for (size_t j = 0; j < 2 * n; ++j) {
      auto prod = tensor_source.product(tensor_source.star(tensor_coords(i)), tensor_coords(j));
      gram.set(i, j, prod[tau_index]);
    }
  QuasiHilbert space(gram);
  space.require_valid();
  for (size_t i = 0; i < 2 * n; ++i)
    for (size_t j = 0; j < 2 * n; ++j)
      if (i != j && gram.at(i, j) != 0)
        fail(errc::precision_exhausted, "column pairing is not orthogonal in the working basis");

  // Left multiplication of the tensor algebra on columns.
  Representation rep{space, {}, std::nullopt, true};
  for (size_t t = 0; t < td; ++t) {
    size_t kl = t / 2, quad = t % 2;
    size_t k = kl / n, l = kl % n;
    PadicMatrix img(p, N, 2 * n, 2 * n);
    if (quad == 0) {  // E_kl ox 1 : s -> E s, t -> E t
      img.set(k, l, 1);
      img.set(n + k, n + l, 1);
    } else {  // E_kl ox sqrt(u) : s-part gains u E t, surd part gains E s
      img.set(k, n + l, u);
      img.set(n + k, l, 1);
    }
    rep.images.push_back(std::move(img));
  }
  std::vector<bigint> cyc(2 * n, bigint(0));
  cyc[r - 1] = 1;
  rep.cyclic_vector = std::move(cyc);
  auto chk = check_representation(tensor_source, rep);
  if (!chk.valid)
    fail(errc::internal_check_failed, "column representation failed: " + chk.issues[0].check);

  // The proof's orthogonal basis, branching on r <= m.
  ColumnRep out{std::move(space), std::move(tensor_source), std::move(rep), {}, {}, 0};
  auto unit_vec = [&](size_t i, const bigint& scale) {
    std::vector<bigint> v(2 * n, bigint(0));
    v[i] = mod_reduce(scale, modulus);
    return v;
  };
  if (r <= m) {
    for (size_t k = 0; k < m; ++k) out.proof_basis.push_back(unit_vec(k, 1));
    for (size_t k = m; k < n; ++k) out.proof_basis.push_back(unit_vec(k, u));
    for (size_t k = 0; k < m; ++k) out.proof_basis.push_back(unit_vec(n + k, 1));
    for (size_t k = m; k < n; ++k) out.proof_basis.push_back(unit_vec(n + k, uinv));
  } else {
    for (size_t k = 0; k < n; ++k) out.proof_basis.push_back(unit_vec(k, 1));
    for (size_t k = 0; k < m; ++k) out.proof_basis.push_back(unit_vec(n + k, 1));
    for (size_t k = m; k < n; ++k) out.proof_basis.push_back(unit_vec(n + k, uinv));
  }
  size_t class_one = 0;
  for (size_t i = 0; i < 2 * n; ++i) {
    for (size_t j = 0; j < 2 * n; ++j) {
      PadicInt v = out.space.pairing(out.proof_basis[i], out.proof_basis[j]);
      if (i != j && !v.is_zero())
        fail(errc::precision_exhausted, "proof basis for the column space is not orthogonal");
      if (i == j) {
        if (!v.is_unit())
          fail(errc::precision_exhausted, "proof basis has a non-unit diagonal value");
        out.proof_diagonal.push_back(v.residue());
        if (square_class(v) == 0) ++class_one;
      }
    }
  }
  if (class_one != n)
    fail(errc::precision_exhausted, "column profile is not half ones, half non-squares");
  out.ones_in_profile = class_one;
  return out;
}

// ---------------------------------------------------------------------------
// Standardizer: the per-column compilation without materialized tensors.

struct Standardizer::Column {
  PadicMatrix gram;        // C_r pairing in the working basis (diagonal)
  PadicMatrix v_norm;      // normalizes to diag(1..1, u..u)
  PadicMatrix v_norm_inv;
};

Standardizer::Standardizer(const QuasiHilbert& h)
    : prime_(h.prime()),
      precision_(h.precision()),
      n_(h.rank()),
      normalizer_(PadicMatrix::identity(h.prime(), h.precision(), h.rank())),
      normalizer_inv_(normalizer_) {
  if (prime_ == 2) fail(errc::unsupported_prime, "standardization requires p odd");
  h.require_valid();
  const int64_t p = prime_;
  const int N = precision_;
  OrthoBasis norm = normalize_square_classes(h);
  normalizer_ = norm.change_of_basis;
  normalizer_inv_ = inverse_unimodular(normalizer_);
  const size_t m = *norm.ones_count;
  u_ = nonresidue(p, N).residue();
  auto xy = two_squares(PadicInt(p, N, u_));
  x_ = xy.first.residue();
  y_ = xy.second.residue();

  const bigint modulus = pow_int(p, N);
  for (size_t r = 1; r <= n_; ++r) {
    // C_r pairing: a_r^{-1} diag(a_1..a_n, u a_1..u a_n) for the normalized
    // diagonal a = (1..1, u..u); cross-checked against the tau_r pairing of
    // the tensor algebra by the column_rep tests.
    const bigint ar = r <= m ? bigint(1) : u_;
    const bigint ar_inv = PadicInt(p, N, ar).inverse().residue();
    PadicMatrix gram(p, N, 2 * n_, 2 * n_);
    for (size_t k = 0; k < n_; ++k) {
      const bigint ak = k < m ? bigint(1) : u_;
      gram.set(k, k, mod_reduce(ar_inv * ak, modulus));
      gram.set(n_ + k, n_ + k, mod_reduce(ar_inv * ak * u_, modulus));
    }
    OrthoBasis colnorm = normalize_square_classes(QuasiHilbert(gram));
    if (*colnorm.ones_count != n_)
      fail(errc::internal_check_failed, "column profile is not half ones");
    for (size_t i = 0; i < n_; ++i) {
      if (colnorm.diagonal[i] != 1 || colnorm.diagonal[n_ + i] != u_)
        fail(errc::internal_check_failed, "column normalization has unexpected diagonal");
    }
    PadicMatrix v_inv = inverse_unimodular(colnorm.change_of_basis);
    columns_.push_back(std::make_shared<Column>(
        Column{std::move(gram), std::move(colnorm.change_of_basis), std::move(v_inv)}));
  }
}

std::vector<PadicMatrix> Standardizer::apply_blocks(const PadicMatrix& t) const {
  if (t.rows() != n_ || t.cols() != n_) fail(errc::shape_mismatch, "operator of wrong rank");
  const int64_t p = prime_;
  const int N = precision_;
  const bigint modulus = pow_int(p, N);
  const bigint uinv = PadicInt(p, N, u_).inverse().residue();
  PadicMatrix tn = normalizer_inv_ * t * normalizer_;  // B(H) -> B(H normalized)
  std::vector<PadicMatrix> out;
  for (const auto& col : columns_) {
    // Left multiplication on the column space: block diag(tn, tn), then the
    // basis change normalizing the column Gram.
    PadicMatrix m(p, N, 2 * n_, 2 * n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) {
        m.set(i, j, tn.at(i, j));
        m.set(n_ + i, n_ + j, tn.at(i, j));
      }
    PadicMatrix rho = col->v_norm_inv * m * col->v_norm;
    // Twisted M_2 over the quadratic extension: the (0,1) block picks up
    // u^{-1} sqrt(u), the (1,0) block sqrt(u); then each extension entry
    // a + b sqrt(u) expands to [[a + bx, by], [by, a - bx]].
    PadicMatrix f(p, N, 4 * n_, 4 * n_);
    for (size_t i = 0; i < 2 * n_; ++i)
      for (size_t j = 0; j < 2 * n_; ++j) {
        bigint real = 0, surd = 0;
        const bool i_hi = i >= n_, j_hi = j >= n_;
        if (i_hi == j_hi) {
          real = rho.at(i, j);
        } else if (!i_hi) {
          surd = mod_reduce(uinv * rho.at(i, j), modulus);
        } else {
          surd = rho.at(i, j);
        }
        if (real == 0 && surd == 0) continue;
        f.set(2 * i, 2 * j, real + surd * x_);
        f.set(2 * i, 2 * j + 1, surd * y_);
        f.set(2 * i + 1, 2 * j, surd * y_);
        f.set(2 * i + 1, 2 * j + 1, real - surd * x_);
      }
    out.push_back(std::move(f));
  }
  return out;
}

PadicMatrix Standardizer::apply(const PadicMatrix& t) const { return block_diag(apply_blocks(t)); }

namespace {

NormValue blocks_norm(const std::vector<PadicMatrix>& blocks, int N) {
  int best = N;
  for (const auto& b : blocks) best = std::min(best, b.op_norm().exponent_or(N));
  return best >= N ? NormValue::below_precision() : NormValue::exact(best);
}

std::vector<bigint> vectorize_blocks(const std::vector<PadicMatrix>& blocks) {
  std::vector<bigint> v;
  for (const auto& b : blocks)
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) v.push_back(b.at(i, j));
  return v;
}

// Injective with a split image: the stacked matrix of vectorized images has
// one unit elementary divisor per source basis element.
bool images_independent(const std::vector<std::vector<PadicMatrix>>& blocks, int64_t p, int N) {
  const size_t d = blocks.size();
  const size_t width = vectorize_blocks(blocks[0]).size();
  PadicMatrix stacked(p, N, d, width);
  for (size_t i = 0; i < d; ++i) {
    auto v = vectorize_blocks(blocks[i]);
    for (size_t j = 0; j < width; ++j) stacked.set(i, j, v[j]);
  }
  Echelon e = echelonize(stacked);
  if (e.pivots.size() != d) return false;
  for (const auto& piv : e.pivots)
    if (piv.valuation != 0) return false;
  return true;
}

}  // namespace

StandardEmbedding standardize(const QuasiHilbert& h, uint64_t seed, size_t probes) {
  Standardizer st(h);
  const size_t n = h.rank();
  const int64_t p = h.prime();
  const int N = h.precision();

  std::vector<std::vector<PadicMatrix>> blocks;
  std::vector<PadicMatrix> units;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PadicMatrix e(p, N, n, n);
      e.set(i, j, 1);
      units.push_back(e);
      blocks.push_back(st.apply_blocks(e));
    }

  StandardEmbedding out;
  out.ambient_size = st.ambient();
  for (const auto& b : blocks) out.images.push_back(block_diag(b));

  EmbeddingChecks& chk = out.checks;
  chk.multiplicative = true;
  chk.involutive = true;
  chk.isometric = true;
  // Multiplicativity blockwise on all basis pairs: E_ij E_kl = [j==k] E_il.
  for (size_t a = 0; a < n * n && chk.multiplicative; ++a)
    for (size_t b = 0; b < n * n && chk.multiplicative; ++b) {
      size_t i = a / n, j = a % n, k = b / n, l = b % n;
      for (size_t c = 0; c < n; ++c) {
        PadicMatrix prod = blocks[a][c] * blocks[b][c];
        PadicMatrix expect = j == k ? blocks[i * n + l][c]
                                    : PadicMatrix(p, N, prod.rows(), prod.cols());
        if (prod != expect) {
          chk.multiplicative = false;
          chk.detail = "multiplicativity fails at pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ")";
          break;
        }
      }
    }
  // Involution: the image of the adjoint is the transpose of the image.
  for (size_t a = 0; a < n * n && chk.involutive; ++a) {
    auto adj_blocks = st.apply_blocks(h.adjoint(units[a]));
    for (size_t c = 0; c < n; ++c) {
      if (adj_blocks[c] != blocks[a][c].transpose()) {
        chk.involutive = false;
        chk.detail = "involution fails at basis element " + std::to_string(a);
        break;
      }
    }
  }
  // Isometry on basis elements and random probes, as exact valuations.
  Rng rng(seed);
  for (size_t a = 0; a < n * n && chk.isometric; ++a) {
    if (!(blocks_norm(blocks[a], N) == NormValue::exact(0))) {
      chk.isometric = false;
      chk.detail = "isometry fails at basis element " + std::to_string(a);
    }
  }
  for (size_t t = 0; t < probes && chk.isometric; ++t) {
    PadicMatrix x(p, N, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) x.set(i, j, rng.residue(p, N));
    if (!(blocks_norm(st.apply_blocks(x), N) == x.op_norm())) {
      chk.isometric = false;
      chk.detail = "isometry fails on a random probe";
    }
  }
  chk.injective = images_independent(blocks, p, N);
  if (!chk.injective) chk.detail = "images are linearly dependent";
  return out;
}

RepresentResult represent_star_algebra(const StarAlgebra& a, uint64_t seed, size_t probes) {
  if (a.prime == 2) fail(errc::unsupported_prime, "standard form requires p odd");
  require_valid_algebra(a);
  const int64_t p = a.prime;
  const int N = a.precision;
  const size_t d = a.dim;

  StarAlgebra aplus = unitize(a);
  const size_t shift = aplus.dim - d;  // 1 when a unit was adjoined
  RepresentResult result;

  StarAlgebra big = aplus;
  bool matrix_step = !ultra_antisymmetric_space(aplus).empty();
  if (matrix_step) big = matrix_algebra(aplus, 2);
  result.used_matrix_step = matrix_step;
  // Inclusion of A: coordinates shift for the adjoined unit; the corner
  // embedding x -> E_11 ox x keeps those coordinates in the leading block.
  auto include = [&](const std::vector<bigint>& x) {
    std::vector<bigint> v(big.dim, bigint(0));
    for (size_t i = 0; i < d; ++i) v[i + shift] = x[i];
    return v;
  };

  std::vector<Representation> reps;
  for (const auto& st : coordinate_quasi_states(big)) {
    if (!st.valid) continue;
    reps.push_back(gns(big, st.coords).rep);
  }
  if (reps.empty()) fail(errc::invalid_quasi_state, "no valid coordinate quasi-states");
  result.states_used = reps.size();
  Representation total = direct_sum_reps(big, reps);
  if (total.target.rank() > 64)
    fail(errc::dimension_cap_exceeded, "assembled space rank " +
                                           std::to_string(total.target.rank()) +
                                           " is beyond desk scale");
  result.hilbert_rank = total.target.rank();

  Standardizer st(total.target);
  std::vector<std::vector<PadicMatrix>> blocks;
  for (size_t i = 0; i < d; ++i) {
    std::vector<bigint> e(d, bigint(0));
    e[i] = 1;
    blocks.push_back(st.apply_blocks(rep_apply(total, include(e))));
  }

  StandardEmbedding& emb = result.embedding;
  emb.ambient_size = st.ambient();
  for (const auto& b : blocks) emb.images.push_back(block_diag(b));
  EmbeddingChecks& chk = emb.checks;
  chk.multiplicative = true;
  chk.involutive = true;
  chk.isometric = true;

  const size_t cols = blocks.empty() ? 0 : blocks[0].size();
  for (size_t i = 0; i < d && chk.multiplicative; ++i)
    for (size_t j = 0; j < d && chk.multiplicative; ++j) {
      std::vector<bigint> ei(d, bigint(0)), ej(d, bigint(0));
      ei[i] = 1;
      ej[j] = 1;
      auto prod_coords = a.product(ei, ej);
      for (size_t c = 0; c < cols; ++c) {
        PadicMatrix got = blocks[i][c] * blocks[j][c];
        PadicMatrix expect(p, N, got.rows(), got.cols());
        for (size_t k = 0; k < d; ++k) {
          if (prod_coords[k] == 0) continue;
          expect = expect + blocks[k][c].scalar_mul(prod_coords[k]);
        }
        if (got != expect) {
          chk.multiplicative = false;
          chk.detail = "multiplicativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    }
  for (size_t i = 0; i < d && chk.involutive; ++i) {
    std::vector<bigint> ei(d, bigint(0));
    ei[i] = 1;
    auto star_coords = a.star(ei);
    for (size_t c = 0; c < cols; ++c) {
      PadicMatrix expect(p, N, blocks[i][c].rows(), blocks[i][c].cols());
      for (size_t k = 0; k < d; ++k) {
        if (star_coords[k] == 0) continue;
        expect = expect + blocks[k][c].scalar_mul(star_coords[k]);
      }
      if (expect != blocks[i][c].transpose()) {
        chk.involutive = false;
        chk.detail = "involution fails at basis element " + std::to_string(i);
        break;
      }
    }
  }
  Rng rng(seed);
  for (size_t i = 0; i < d && chk.isometric; ++i) {
    if (!(blocks_norm(blocks[i], N) == NormValue::exact(0))) {
      chk.isometric = false;
      chk.detail = "isometry fails at basis element " + std::to_string(i);
    }
  }
  for (size_t t = 0; t < probes && chk.isometric; ++t) {
    std::vector<bigint> x(d);
    for (auto& v : x) v = rng.residue(p, N);
    std::vector<PadicMatrix> img;
    for (size_t c = 0; c < cols; ++c) {
      PadicMatrix m(p, N, blocks[0][c].rows(), blocks[0][c].cols());
      for (size_t k = 0; k < d; ++k)
        if (x[k] != 0) m = m + blocks[k][c].scalar_mul(x[k]);
      img.push_back(std::move(m));
    }
    if (!(blocks_norm(img, N) == a.coord_norm(x))) {
      chk.isometric = false;
      chk.detail = "isometry fails on a random probe";
    }
  }
  chk.injective = images_independent(blocks, p, N);
  if (!chk.injective) chk.detail = "images are linearly dependent";
  if (!chk.multiplicative || !chk.involutive)
    fail(errc::internal_check_failed, "representation certificate failed: " + chk.detail);
  if (!chk.isometric || !chk.injective) fail(errc::not_isometric, chk.detail);
  return result;
}

TateDemo tate_truncation_demo(size_t n, int64_t p, int N) {
  if (p == 2) fail(errc::unsupported_prime, "requires p odd");
  if (n > 6) fail(errc::invalid_argument, "truncation degree capped at 6");

  auto truncation = [&](size_t deg) {
    const size_t w = deg + 1;
    StarAlgebra t(p, N, w * w);  // basis X^a Y^b at index a*w + b
    for (size_t a1 = 0; a1 < w; ++a1)
      for (size_t b1 = 0; b1 < w; ++b1)
        for (size_t a2 = 0; a2 < w; ++a2)
          for (size_t b2 = 0; b2 < w; ++b2) {
            if (a1 + a2 >= w || b1 + b2 >= w) continue;
            t.set_structure(a1 * w + b1, a2 * w + b2, (a1 + a2) * w + (b1 + b2), 1);
          }
    t.invol = PadicMatrix(p, N, w * w, w * w);
    for (size_t a1 = 0; a1 < w; ++a1)
      for (size_t b1 = 0; b1 < w; ++b1) t.invol.set(b1 * w + a1, a1 * w + b1, 1);
    std::vector<bigint> unit(w * w, bigint(0));
    unit[0] = 1;
    t.unit = std::move(unit);
    return t;
  };

  TateDemo demo{truncation(n), {}, Representation{QuasiHilbert(PadicMatrix::identity(p, N, 1)), {}, std::nullopt, false}, false, false};
  const size_t w = n + 1;

  for (size_t m = 0; m <= n; ++m) {
    StarAlgebra tm = truncation(m);
    const size_t wm = m + 1;
    QuasiState tau(wm * wm, bigint(0));
    tau[m * wm + m] = 1;  // coefficient of X^m Y^m
    GnsResult g = gns(tm, tau);
    // pi_m as a representation of the degree-n truncation, through the
    // quotient map killing monomials of degree > m.
    Representation rep{g.rep.target, {}, g.rep.cyclic_vector, false};
    for (size_t a1 = 0; a1 < w; ++a1)
      for (size_t b1 = 0; b1 < w; ++b1) {
        if (a1 <= m && b1 <= m) {
          rep.images.push_back(g.rep.images[a1 * wm + b1]);
        } else {
          rep.images.push_back(PadicMatrix(p, N, g.rep.target.rank(), g.rep.target.rank()));
        }
      }
    auto chk = check_representation(demo.algebra, rep);
    if (!chk.valid)
      fail(errc::internal_check_failed, "Tate truncation representation failed: " + chk.issues[0].check);
    demo.truncation_reps.push_back(std::move(rep));
  }
  demo.sum = direct_sum_reps(demo.algebra, demo.truncation_reps);
  demo.norm_attained_on_monomials = demo.sum.isometric_on_basis;
  if (n >= 1) {
    const auto& pi_n = demo.truncation_reps[n];
    const PadicMatrix& px = pi_n.images[1 * w + 0];
    const PadicMatrix& py = pi_n.images[0 * w + 1];
    demo.adjoint_swaps_variables = pi_n.target.adjoint(px) == py;
  } else {
    demo.adjoint_swaps_variables = true;
  }
  return demo;
}

}  // namespace padiclab
