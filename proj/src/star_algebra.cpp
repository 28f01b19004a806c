#include "padiclab/star_algebra.hpp"

#include <algorithm>

#include "padiclab/rng.hpp"

namespace padiclab {

StarAlgebra::StarAlgebra(int64_t p, int N, size_t d)
    : prime(p), precision(N), dim(d), invol(PadicMatrix::identity(p, N, d)) {
  modulus_ = pow_int(p, N);
  mult.assign(d * d * d, bigint(0));
}

void StarAlgebra::set_structure(size_t i, size_t j, size_t k, const bigint& v) {
  mult[(i * dim + j) * dim + k] = mod_reduce(v, modulus_);
}

std::vector<bigint> StarAlgebra::product(const std::vector<bigint>& x,
                                         const std::vector<bigint>& y) const {
  if (x.size() != dim || y.size() != dim) fail(errc::shape_mismatch, "algebra product");
  std::vector<bigint> out(dim, bigint(0));
  for (size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      bigint c = mod_reduce(x[i] * y[j], modulus_);
      if (c == 0) continue;
      const bigint* row = mult.data() + (i * dim + j) * dim;
      for (size_t k = 0; k < dim; ++k) {
        if (row[k] == 0) continue;
        out[k] += c * row[k];
      }
    }
  }
  for (auto& v : out) v = mod_reduce(v, modulus_);
  return out;
}

std::vector<bigint> StarAlgebra::star(const std::vector<bigint>& x) const {
  return invol.apply(x);
}

NormValue StarAlgebra::coord_norm(const std::vector<bigint>& x) const {
  int best = precision;
  for (const auto& v : x) best = std::min(best, residue_valuation(v, prime, precision));
  return best >= precision ? NormValue::below_precision() : NormValue::exact(best);
}

PadicMatrix StarAlgebra::left_mult_matrix(size_t i) const {
  PadicMatrix l(prime, precision, dim, dim);
  for (size_t j = 0; j < dim; ++j)
    for (size_t k = 0; k < dim; ++k) l.set(k, j, structure(i, j, k));
  return l;
}

PadicMatrix StarAlgebra::left_mult_matrix(const std::vector<bigint>& x) const {
  PadicMatrix l(prime, precision, dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k)
        l.set(k, j, l.at(k, j) + x[i] * structure(i, j, k));
  }
  return l;
}

namespace {

std::vector<bigint> basis_vec(size_t dim, size_t i) {
  std::vector<bigint> v(dim, bigint(0));
  v[i] = 1;
  return v;
}

std::string idx(size_t i) { return std::to_string(i); }

}  // namespace

ValidationReport validate_algebra(const StarAlgebra& a) {
  ValidationReport rep;
  auto note = [&](const std::string& check, const std::string& detail) {
    rep.valid = false;
    rep.issues.push_back({check, detail, {}});
  };
  // Associativity on all basis triples.
  for (size_t i = 0; i < a.dim && rep.issues.size() < 8; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k) {
        auto lhs = a.product(a.product(basis_vec(a.dim, i), basis_vec(a.dim, j)), basis_vec(a.dim, k));
        auto rhs = a.product(basis_vec(a.dim, i), a.product(basis_vec(a.dim, j), basis_vec(a.dim, k)));
        if (lhs != rhs) {
          note("associativity", "triple (" + idx(i) + "," + idx(j) + "," + idx(k) + ")");
          goto assoc_done;
        }
      }
assoc_done:
  if (a.invol * a.invol != PadicMatrix::identity(a.prime, a.precision, a.dim))
    note("involution_order", "invol^2 != id");
  if (!det_is_unit(a.invol).first) note("involution_isometric", "invol determinant is not a unit");
  for (size_t i = 0; i < a.dim; ++i) {
    for (size_t j = 0; j < a.dim; ++j) {
      auto lhs = a.star(a.product(basis_vec(a.dim, i), basis_vec(a.dim, j)));
      auto rhs = a.product(a.star(basis_vec(a.dim, j)), a.star(basis_vec(a.dim, i)));
      if (lhs != rhs) {
        note("involution_antihom", "pair (" + idx(i) + "," + idx(j) + ")");
        goto antihom_done;
      }
    }
  }
antihom_done:
  if (a.unit) {
    if (a.unit->size() != a.dim) {
      note("unit", "unit vector has wrong length");
    } else {
      for (size_t i = 0; i < a.dim; ++i) {
        auto e = basis_vec(a.dim, i);
        if (a.product(*a.unit, e) != e || a.product(e, *a.unit) != e) {
          note("unit", "unit fails on basis element " + idx(i));
          break;
        }
      }
    }
  }
  return rep;
}

void require_valid_algebra(const StarAlgebra& a) {
  auto r = validate_algebra(a);
  if (!r.valid)
    fail(errc::invalid_argument, "invalid star algebra: " + r.issues[0].check + " (" +
                                     r.issues[0].detail + ")");
}

StarAlgebra unitize(const StarAlgebra& a) {
  if (a.unit) return a;
  const size_t d = a.dim;
  StarAlgebra out(a.prime, a.precision, d + 1);
  out.set_structure(0, 0, 0, 1);
  for (size_t i = 0; i < d; ++i) {
    out.set_structure(0, i + 1, i + 1, 1);
    out.set_structure(i + 1, 0, i + 1, 1);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        out.set_structure(i + 1, j + 1, k + 1, a.structure(i, j, k));
  }
  out.invol = PadicMatrix(a.prime, a.precision, d + 1, d + 1);
  out.invol.set(0, 0, 1);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) out.invol.set(i + 1, j + 1, a.invol.at(i, j));
  out.unit = basis_vec(d + 1, 0);
  return out;
}

StarAlgebra matrix_algebra(const StarAlgebra& a, size_t k) {
  if (!a.unit) fail(errc::invalid_argument, "matrix algebra over a non-unital algebra");
  const size_t d = a.dim;
  const size_t dd = k * k * d;
  StarAlgebra out(a.prime, a.precision, dd);
  auto index = [&](size_t i, size_t j, size_t t) { return (i * k + j) * d + t; };
  // (E_ij ox e_s)(E_lm ox e_t) = [j == l] E_im ox e_s e_t
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      for (size_t m = 0; m < k; ++m)
        for (size_t s = 0; s < d; ++s)
          for (size_t t = 0; t < d; ++t)
            for (size_t r = 0; r < d; ++r) {
              const bigint& c = a.structure(s, t, r);
              if (c != 0) out.set_structure(index(i, j, s), index(j, m, t), index(i, m, r), c);
            }
  out.invol = PadicMatrix(a.prime, a.precision, dd, dd);
  // (E_ij ox e_t)* = E_ji ox e_t*
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      for (size_t t = 0; t < d; ++t)
        for (size_t r = 0; r < d; ++r)
          out.invol.set(index(j, i, r), index(i, j, t), a.invol.at(r, t));
  std::vector<bigint> unit(dd, bigint(0));
  for (size_t i = 0; i < k; ++i)
    for (size_t t = 0; t < d; ++t) unit[index(i, i, t)] = (*a.unit)[t];
  out.unit = std::move(unit);
  return out;
}

FpAlgebra mod_p(const StarAlgebra& a) {
  FpAlgebra out(a.prime, a.dim);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k)
        out.set_structure(i, j, k, (a.structure(i, j, k) % a.prime).convert_to<int64_t>());
  if (a.unit) {
    FpVec u(a.dim);
    for (size_t i = 0; i < a.dim; ++i) u[i] = ((*a.unit)[i] % a.prime).convert_to<int64_t>();
    out.unit = std::move(u);
  }
  return out;
}

std::vector<std::vector<int64_t>> ultra_antisymmetric_space(const StarAlgebra& a) {
  const int64_t p = a.prime;
  const size_t d = a.dim;
  FpAlgebra ap = mod_p(a);
  // Involution mod p.
  std::vector<FpVec> invol_p(d, FpVec(d, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      invol_p[i][j] = (a.invol.at(i, j) % p).convert_to<int64_t>();
  auto star_p = [&](const FpVec& x) {
    FpVec out(d, 0);
    for (size_t i = 0; i < d; ++i) {
      int64_t acc = 0;
      for (size_t j = 0; j < d; ++j) acc = (acc + invol_p[i][j] * x[j]) % p;
      out[i] = acc;
    }
    return out;
  };
  // For each basis pair (r, s) and output coordinate: a linear equation in
  // the unknown residue a-bar from  e_r* a e_s + e_s* a* e_r = 0.
  std::vector<FpVec> equations;
  FpVec er(d, 0), es(d, 0), ei(d, 0);
  for (size_t r = 0; r < d; ++r) {
    er.assign(d, 0);
    er[r] = 1;
    FpVec er_star = star_p(er);
    for (size_t s = 0; s < d; ++s) {
      es.assign(d, 0);
      es[s] = 1;
      FpVec es_star = star_p(es);
      // coefficient matrices: columns indexed by the unknown's coordinate.
      std::vector<FpVec> eq(d, FpVec(d, 0));
      for (size_t i = 0; i < d; ++i) {
        ei.assign(d, 0);
        ei[i] = 1;
        FpVec t1 = ap.product(ap.product(er_star, ei), es);
        FpVec t2 = ap.product(ap.product(es_star, star_p(ei)), er);
        for (size_t k = 0; k < d; ++k) eq[k][i] = (t1[k] + t2[k]) % p;
      }
      for (auto& row : eq) equations.push_back(std::move(row));
    }
  }
  return fp_kernel(p, d, equations);
}

ValidationReport validate_quasi_state(const StarAlgebra& a, const QuasiState& phi) {
  ValidationReport rep;
  if (phi.size() != a.dim) {
    rep.valid = false;
    rep.issues.push_back({"shape", "state vector has wrong length", {}});
    return rep;
  }
  std::vector<bigint> reduced(phi);
  for (auto& v : reduced) v = mod_reduce(v, a.modulus());
  // phi(e_i*) = phi_i for all i.
  for (size_t i = 0; i < a.dim; ++i) {
    bigint acc = 0;
    for (size_t j = 0; j < a.dim; ++j) acc += reduced[j] * a.invol.at(j, i);
    if (mod_reduce(acc, a.modulus()) != reduced[i]) {
      rep.valid = false;
      rep.issues.push_back({"symmetry", "phi(e_" + idx(i) + "*) != phi(e_" + idx(i) + ")", {}});
      break;
    }
  }
  bool has_unit = false;
  for (const auto& v : reduced)
    if (v % a.prime != 0) has_unit = true;
  if (!has_unit) {
    rep.valid = false;
    rep.issues.push_back({"norm", "no coordinate of phi is a unit, so |phi| < 1", {}});
  }
  return rep;
}

std::vector<CoordinateState> coordinate_quasi_states(const StarAlgebra& a) {
  std::vector<CoordinateState> out;
  for (size_t k = 0; k < a.dim; ++k) {
    QuasiState phi(a.dim, bigint(0));
    phi[k] += 1;
    for (size_t i = 0; i < a.dim; ++i) phi[i] = mod_reduce(phi[i] + a.invol.at(k, i), a.modulus());
    bool valid = validate_quasi_state(a, phi).valid;
    out.push_back({k, std::move(phi), valid});
  }
  return out;
}

PadicMatrix rep_apply(const Representation& rep, const std::vector<bigint>& x) {
  if (x.size() != rep.images.size()) fail(errc::shape_mismatch, "representation applied to wrong rank");
  PadicMatrix out(rep.target.prime(), rep.target.precision(), rep.target.rank(), rep.target.rank());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    out = out + rep.images[i].scalar_mul(x[i]);
  }
  return out;
}

ValidationReport check_representation(const StarAlgebra& a, const Representation& rep) {
  ValidationReport report;
  auto note = [&](const std::string& check, const std::string& detail) {
    report.valid = false;
    report.issues.push_back({check, detail, {}});
  };
  if (rep.images.size() != a.dim) {
    note("shape", "one image per basis element required");
    return report;
  }
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      PadicMatrix lhs = rep.images[i] * rep.images[j];
      PadicMatrix rhs(rep.target.prime(), rep.target.precision(), rep.target.rank(),
                      rep.target.rank());
      for (size_t k = 0; k < a.dim; ++k) {
        const bigint& c = a.structure(i, j, k);
        if (c != 0) rhs = rhs + rep.images[k].scalar_mul(c);
      }
      if (lhs != rhs) {
        note("multiplicative", "pair (" + idx(i) + "," + idx(j) + ")");
        goto mult_done;
      }
    }
mult_done:
  for (size_t i = 0; i < a.dim; ++i) {
    PadicMatrix lhs = rep_apply(rep, a.star(basis_vec(a.dim, i)));
    if (lhs != rep.target.adjoint(rep.images[i])) {
      note("involutive", "basis element " + idx(i));
      break;
    }
  }
  for (size_t i = 0; i < a.dim; ++i) {
    if (!norm_le(rep.images[i].op_norm(), NormValue::exact(0))) {
      note("contractive", "basis element " + idx(i));
      break;
    }
  }
  return report;
}

GnsResult gns(const StarAlgebra& a, const QuasiState& phi) {
  if (!a.unit) fail(errc::invalid_argument, "GNS requires a unital algebra");
  auto vr = validate_quasi_state(a, phi);
  if (!vr.valid) fail(errc::invalid_quasi_state, "not a quasi-state: " + vr.issues[0].check);

  const int64_t p = a.prime;
  const int N = a.precision;
  const size_t d = a.dim;

  // Pairing matrix Phi[i][j] = phi(e_i* e_j).
  PadicMatrix form(p, N, d, d);
  std::vector<std::vector<bigint>> star_basis(d);
  for (size_t i = 0; i < d; ++i) star_basis[i] = a.star(basis_vec(d, i));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      std::vector<bigint> prod = a.product(star_basis[i], basis_vec(d, j));
      bigint acc = 0;
      for (size_t t = 0; t < d; ++t) acc += phi[t] * prod[t];
      form.set(i, j, acc);
    }

  // The quotient is a quasi-Hilbert space exactly when the elementary
  // divisors of the form are units or zero; an intermediate divisor p^k
  // (0 < k < N) makes the quotient norm a weighted norm that no coordinate
  // basis realizes, so we refuse rather than emit an invalid space.
  SmithForm s = smith_form(form);
  for (int k : s.divisor_valuations) {
    if (k > 0)
      fail(errc::degenerate_precision,
           "pairing matrix has elementary divisor p^" + std::to_string(k) +
               "; quotient is not coordinate-normed at this precision");
  }

  // Quotient basis: unit-pivot columns of the echelon form, in column order.
  Echelon ech = echelonize(form);
  std::vector<size_t> cols;
  for (const auto& piv : ech.pivots) cols.push_back(piv.col);
  std::sort(cols.begin(), cols.end());
  const size_t r = cols.size();

  PadicMatrix gram(p, N, r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) gram.set(i, j, form.at(cols[i], cols[j]));
  QuasiHilbert target(gram);
  target.require_valid();

  // Class-coordinate map Q = Gram^{-1} * Phi[C,:]; Q * inclusion = id.
  PadicMatrix form_rows(p, N, r, d);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < d; ++j) form_rows.set(i, j, form.at(cols[i], j));
  PadicMatrix class_map = inverse_unimodular(gram) * form_rows;
  PadicMatrix inclusion(p, N, d, r);
  for (size_t i = 0; i < r; ++i) inclusion.set(cols[i], i, 1);

  Representation rep{target, {}, std::nullopt, true};
  for (size_t i = 0; i < d; ++i)
    rep.images.push_back(class_map * a.left_mult_matrix(i) * inclusion);
  rep.cyclic_vector = class_map.apply(*a.unit);
  for (size_t i = 0; i < d; ++i) {
    if (!(rep.images[i].op_norm() == a.coord_norm(basis_vec(d, i)))) rep.isometric_on_basis = false;
  }

  // Certify the construction: star-representation and the GNS identity.
  auto chk = check_representation(a, rep);
  if (!chk.valid)
    fail(errc::internal_check_failed, "GNS representation failed: " + chk.issues[0].check);
  for (size_t i = 0; i < d; ++i) {
    PadicInt lhs(p, N, phi[i]);
    std::vector<bigint> pi_xi = rep.images[i].apply(*rep.cyclic_vector);
    if (target.pairing(*rep.cyclic_vector, pi_xi) != lhs)
      fail(errc::internal_check_failed, "GNS identity failed on basis element " + idx(i));
  }

  GnsResult out{std::move(rep), std::move(cols), {}};
  KernelBasis kb = kernel_saturated(form);
  out.null_ideal = std::move(kb.generators);
  return out;
}

QuasiCstarCertificate quasi_cstar_certify(const StarAlgebra& a, uint64_t seed, size_t probes) {
  const size_t d = a.dim;
  QuasiCstarCertificate cert;
  cert.ultra_space = ultra_antisymmetric_space(a);

  auto states = coordinate_quasi_states(a);
  std::vector<std::vector<bigint>> star_basis(d);
  for (size_t i = 0; i < d; ++i) star_basis[i] = a.star(basis_vec(d, i));

  std::vector<std::vector<bigint>> elements;
  for (size_t t = 0; t < d; ++t) elements.push_back(basis_vec(d, t));
  Rng rng(seed);
  for (size_t t = 0; t < probes; ++t) {
    std::vector<bigint> x(d);
    for (size_t i = 0; i < d; ++i) x[i] = rng.residue(a.prime, a.precision);
    x[rng.below(d)] = rng.unit_residue(a.prime, a.precision);  // force norm 1
    elements.push_back(std::move(x));
  }

  cert.certified = true;
  for (auto& elem : elements) {
    ElementCertificate ec;
    ec.element = elem;
    for (size_t i = 0; i < d && !ec.attained; ++i) {
      std::vector<bigint> left = a.product(star_basis[i], elem);
      for (size_t j = 0; j < d && !ec.attained; ++j) {
        std::vector<bigint> w = a.product(left, basis_vec(d, j));
        for (size_t si = 0; si < states.size(); ++si) {
          if (!states[si].valid) continue;
          bigint acc = 0;
          for (size_t t = 0; t < d; ++t) acc += states[si].coords[t] * w[t];
          if (mod_reduce(acc, a.modulus()) % a.prime != 0) {
            ec.attained = true;
            ec.witness = QuasiCstarWitness{states[si].index, i, j};
            break;
          }
        }
      }
    }
    if (!ec.attained) cert.certified = false;
    cert.elements.push_back(std::move(ec));
  }
  return cert;
}

Representation direct_sum_reps(const StarAlgebra& a, const std::vector<Representation>& reps) {
  if (reps.empty()) fail(errc::invalid_argument, "direct sum of no representations");
  for (const auto& r : reps) {
    if (r.images.size() != a.dim) fail(errc::mismatch, "representations of different sources");
  }
  std::vector<QuasiHilbert> targets;
  for (const auto& r : reps) targets.push_back(r.target);
  QuasiHilbert target = direct_sum(targets);
  Representation out{std::move(target), {}, std::nullopt, true};
  for (size_t i = 0; i < a.dim; ++i) {
    std::vector<PadicMatrix> blocks;
    for (const auto& r : reps) blocks.push_back(r.images[i]);
    out.images.push_back(block_diag(blocks));
    if (!(out.images[i].op_norm() == a.coord_norm(basis_vec(a.dim, i))))
      out.isometric_on_basis = false;
  }
  if (reps.size() == 1) out.cyclic_vector = reps[0].cyclic_vector;
  return out;
}

}  // namespace padiclab
