#include "padiclab/quasi_hilbert.hpp"

#include "padiclab/star_algebra.hpp"

namespace padiclab {

QuasiHilbert::QuasiHilbert(PadicMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) fail(errc::shape_mismatch, "Gram matrix must be square");
}

ValidationReport QuasiHilbert::validate() const {
  ValidationReport report;
  if (!gram_.is_symmetric()) {
    report.valid = false;
    report.issues.push_back({"symmetric", "gram matrix is not symmetric", {}});
  }
  auto [unit, det] = det_is_unit(gram_);
  if (!unit) {
    // Witness: xi with |G xi| < |xi|, read off the diagonalization.
    SmithForm s = smith_form(gram_);
    std::vector<bigint> xi(rank(), bigint(0));
    size_t bad = s.divisor_valuations.size();
    for (size_t i = 0; i < s.divisor_valuations.size(); ++i) {
      if (s.divisor_valuations[i] > 0) {
        bad = i;
        break;
      }
    }
    size_t col = std::min(bad, gram_.cols() - 1);
    for (size_t r = 0; r < rank(); ++r) xi[r] = s.col_ops.at(r, col);
    report.valid = false;
    report.issues.push_back(
        {"unimodular", "determinant " + det.to_string() + " is not a unit", xi});
  }
  return report;
}

void QuasiHilbert::require_valid() const {
  auto r = validate();
  if (!r.valid) fail(errc::not_unimodular, "quasi-Hilbert space invalid: " + r.issues[0].detail);
}

PadicInt QuasiHilbert::pairing(const std::vector<bigint>& xi, const std::vector<bigint>& eta) const {
  if (xi.size() != rank() || eta.size() != rank())
    fail(errc::shape_mismatch, "pairing of vectors of wrong length");
  std::vector<bigint> geta = gram_.apply(eta);
  bigint acc = 0;
  for (size_t i = 0; i < rank(); ++i) acc += xi[i] * geta[i];
  return PadicInt(prime(), precision(), acc);
}

PadicMatrix QuasiHilbert::adjoint(const PadicMatrix& t) const {
  if (t.rows() != rank() || t.cols() != rank())
    fail(errc::shape_mismatch, "adjoint of operator with wrong shape");
  return inverse_unimodular(gram_) * t.transpose() * gram_;
}

OrthoBasis orthogonal_basis(const QuasiHilbert& h) {
  h.require_valid();
  auto cd = congruence_diagonalize(h.gram());
  return {cd.basis_change, cd.diagonal, std::nullopt};
}

OrthoBasis normalize_square_classes(const QuasiHilbert& h) {
  OrthoBasis basis = orthogonal_basis(h);
  const int64_t p = h.prime();
  const int N = h.precision();
  const PadicInt u = nonresidue(p, N);
  const size_t n = h.rank();

  PadicMatrix scaled = basis.change_of_basis;
  std::vector<bigint> diag(n);
  std::vector<bool> is_one(n);
  for (size_t i = 0; i < n; ++i) {
    PadicInt a(p, N, basis.diagonal[i]);
    if (is_square(a)) {
      scaled.scale_col(i, sqrt(a).inverse().residue());
      diag[i] = 1;
      is_one[i] = true;
    } else {
      scaled.scale_col(i, sqrt(a * u.inverse()).inverse().residue());
      diag[i] = u.residue();
      is_one[i] = false;
    }
  }
  // Stable reorder: ones first, original order within each class.
  PadicMatrix reordered(p, N, n, n);
  std::vector<bigint> diag2(n);
  size_t pos = 0, ones = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!is_one[i]) continue;
    for (size_t r = 0; r < n; ++r) reordered.set(r, pos, scaled.at(r, i));
    diag2[pos++] = diag[i];
    ++ones;
  }
  for (size_t i = 0; i < n; ++i) {
    if (is_one[i]) continue;
    for (size_t r = 0; r < n; ++r) reordered.set(r, pos, scaled.at(r, i));
    diag2[pos++] = diag[i];
  }
  return {std::move(reordered), std::move(diag2), ones};
}

QuasiHilbert direct_sum(const std::vector<QuasiHilbert>& parts) {
  if (parts.empty()) fail(errc::invalid_argument, "direct sum of nothing");
  std::vector<PadicMatrix> grams;
  grams.reserve(parts.size());
  for (const auto& h : parts) grams.push_back(h.gram());
  return QuasiHilbert(block_diag(grams));
}

StarAlgebra bounded_algebra(const QuasiHilbert& h) {
  h.require_valid();
  const size_t n = h.rank();
  const int64_t p = h.prime();
  const int N = h.precision();
  StarAlgebra a(p, N, n * n);
  // E_{ij} E_{kl} = [j == k] E_{il}
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l)
        a.set_structure(i * n + j, j * n + l, i * n + l, 1);
  PadicMatrix ginv = inverse_unimodular(h.gram());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // (E_ij)* = G^{-1} E_ji G = (col j of G^{-1}) x (row i of G)
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
          a.invol.set(r * n + c, i * n + j, ginv.at(r, j) * h.gram().at(i, c));
    }
  std::vector<bigint> unit(n * n, bigint(0));
  for (size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  a.unit = std::move(unit);
  return a;
}

}  // namespace padiclab
