#include "padiclab/group_groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace padiclab {

ValidationReport FiniteGroup::validate() const {
  ValidationReport rep;
  auto note = [&](const std::string& c, const std::string& d) {
    rep.valid = false;
    rep.issues.push_back({c, d, {}});
  };
  if (table.size() != order * order || inverse.size() != order || identity >= order) {
    note("shape", "tables do not match the declared order");
    return rep;
  }
  for (size_t g = 0; g < order; ++g) {
    if (mul(identity, g) != g || mul(g, identity) != g) note("identity", "fails at " + std::to_string(g));
    if (mul(g, inverse[g]) != identity || mul(inverse[g], g) != identity)
      note("inverse", "fails at " + std::to_string(g));
  }
  for (size_t a = 0; a < order && rep.valid; ++a)
    for (size_t b = 0; b < order && rep.valid; ++b)
      for (size_t c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          note("associativity", "triple fails");
          break;
        }
  return rep;
}

FiniteGroup FiniteGroup::cyclic(size_t n) {
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.table.resize(n * n);
  g.inverse.resize(n);
  for (size_t a = 0; a < n; ++a) {
    g.inverse[a] = (n - a) % n;
    for (size_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  }
  return g;
}

FiniteGroup FiniteGroup::symmetric(size_t n) {
  if (n > 5) fail(errc::invalid_argument, "symmetric group capped at n = 5");
  std::vector<std::vector<size_t>> perms;
  std::vector<size_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const size_t ord = perms.size();
  auto find = [&](const std::vector<size_t>& p) {
    return (size_t)(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  FiniteGroup g;
  g.order = ord;
  g.identity = 0;  // identity permutation is lexicographically first
  g.table.resize(ord * ord);
  g.inverse.resize(ord);
  for (size_t a = 0; a < ord; ++a) {
    std::vector<size_t> inv(n);
    for (size_t i = 0; i < n; ++i) inv[perms[a][i]] = i;
    g.inverse[a] = find(inv);
    for (size_t b = 0; b < ord; ++b) {
      std::vector<size_t> prod(n);
      for (size_t i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      g.table[a * ord + b] = find(prod);
    }
  }
  return g;
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements 1, -1, i, -i, j, -j, k, -k at indices 0..7.
  auto idx = [](size_t unit, bool neg) { return 2 * unit + (neg ? 1 : 0); };
  // unit codes: 0 = 1, 1 = i, 2 = j, 3 = k; sign table for unit products.
  // i*j = k, j*k = i, k*i = j; squares of imaginary units are -1.
  FiniteGroup g;
  g.order = 8;
  g.identity = 0;
  g.table.resize(64);
  g.inverse.resize(8);
  auto unit_mul = [](size_t a, size_t b, bool* neg) -> size_t {
    *neg = false;
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      *neg = true;  // i^2 = j^2 = k^2 = -1
      return 0;
    }
    // cyclic: (1,2)->3, (2,3)->1, (3,1)->2; reversed order flips the sign
    static const size_t next[4] = {0, 2, 3, 1};
    if (next[a] == b) return 6 - a - b;  // the third imaginary unit
    *neg = true;
    return 6 - a - b;
  };
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = 0; b < 8; ++b) {
      size_t ua = a / 2, ub = b / 2;
      bool na = a % 2, nb = b % 2, nm = false;
      size_t um = unit_mul(ua, ub, &nm);
      bool neg = (na != nb) != nm;
      g.table[a * 8 + b] = idx(um, neg);
    }
  for (size_t a = 0; a < 8; ++a) {
    for (size_t b = 0; b < 8; ++b)
      if (g.table[a * 8 + b] == 0) g.inverse[a] = b;
  }
  return g;
}

GroupAlgebra group_algebra(const FiniteGroup& g, int64_t p, int N) {
  auto vr = g.validate();
  if (!vr.valid) fail(errc::invalid_argument, "invalid group table: " + vr.issues[0].check);
  const size_t n = g.order;
  StarAlgebra a(p, N, n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) a.set_structure(x, y, g.mul(x, y), 1);
  a.invol = PadicMatrix(p, N, n, n);
  for (size_t x = 0; x < n; ++x) a.invol.set(g.inverse[x], x, 1);
  std::vector<bigint> unit(n, bigint(0));
  unit[g.identity] = 1;
  a.unit = std::move(unit);

  Representation lambda{QuasiHilbert(PadicMatrix::identity(p, N, n)), {}, std::nullopt, true};
  for (size_t x = 0; x < n; ++x) {
    PadicMatrix m(p, N, n, n);
    for (size_t h = 0; h < n; ++h) m.set(g.mul(x, h), h, 1);
    lambda.images.push_back(std::move(m));
  }
  std::vector<bigint> cyc(n, bigint(0));
  cyc[g.identity] = 1;
  lambda.cyclic_vector = std::move(cyc);
  return {std::move(a), std::move(lambda)};
}

std::vector<std::vector<size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order, false);
  std::vector<std::vector<size_t>> classes;
  for (size_t x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<size_t> cls;
    for (size_t h = 0; h < g.order; ++h) {
      size_t y = g.mul(g.mul(h, x), g.inverse[h]);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<bigint>> class_sums(const FiniteGroup& g, int64_t p, int N) {
  (void)p;
  (void)N;
  std::vector<std::vector<bigint>> sums;
  for (const auto& cls : conjugacy_classes(g)) {
    std::vector<bigint> chi(g.order, bigint(0));
    for (size_t x : cls) chi[x] = 1;
    sums.push_back(std::move(chi));
  }
  return sums;
}

namespace {

std::vector<bigint> vectorize(const PadicMatrix& m) {
  std::vector<bigint> v(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

PadicMatrix unvectorize(const std::vector<bigint>& v, int64_t p, int N, size_t n) {
  PadicMatrix m(p, N, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
  return m;
}

}  // namespace

MatrixSubalgebra::MatrixSubalgebra(int64_t prime, int precision, size_t ambient,
                                   std::vector<PadicMatrix> generators)
    : prime_(prime),
      precision_(precision),
      ambient_(ambient),
      generators_(std::move(generators)),
      span_(prime, precision, ambient * ambient) {
  for (const auto& m : generators_) {
    if (m.rows() != ambient_ || m.cols() != ambient_)
      fail(errc::shape_mismatch, "generator of wrong size");
    span_.insert(vectorize(m));
  }
}

std::vector<PadicMatrix> MatrixSubalgebra::basis() const {
  std::vector<PadicMatrix> out;
  for (const auto& row : span_.basis()) out.push_back(unvectorize(row, prime_, precision_, ambient_));
  return out;
}

bool MatrixSubalgebra::contains(const PadicMatrix& m) const { return span_.contains(vectorize(m)); }

bool MatrixSubalgebra::same_span(const MatrixSubalgebra& o) const { return span_.same_span(o.span_); }

void MatrixSubalgebra::close_under_products() {
  while (true) {
    const size_t before = span_.size();
    auto mats = basis();
    for (const auto& x : mats)
      for (const auto& y : mats) span_.insert(vectorize(x * y));
    if (span_.size() == before) break;
  }
}

void MatrixSubalgebra::star_close_transpose() {
  while (true) {
    const size_t before = span_.size();
    for (const auto& m : basis()) span_.insert(vectorize(m.transpose()));
    if (span_.size() == before) break;
  }
}

void MatrixSubalgebra::adjoin_identity() {
  span_.insert(vectorize(PadicMatrix::identity(prime_, precision_, ambient_)));
}

MatrixSubalgebra commutant(const MatrixSubalgebra& s) {
  const size_t n = s.ambient();
  const int64_t p = s.prime();
  const int N = s.precision();
  // Unknown X, equations X M - M X = 0 for each generator M, stacked.
  const auto mats = s.basis();
  PadicMatrix system(p, N, std::max<size_t>(1, mats.size() * n * n), n * n);
  size_t row = 0;
  for (const auto& m : mats) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
          system.set(row, i * n + k, system.at(row, i * n + k) + m.at(k, j));
          system.set(row, k * n + j, system.at(row, k * n + j) - m.at(i, k));
        }
        ++row;
      }
  }
  KernelBasis kb = kernel_saturated(system);
  if (kb.has_truncated())
    fail(errc::precision_exhausted, "commutant kernel not saturated at this precision");
  std::vector<PadicMatrix> gens;
  for (const auto& v : kb.generators) gens.push_back(unvectorize(v, p, N, n));
  return MatrixSubalgebra(p, N, n, std::move(gens));
}

BicommutantResult bicommutant_check(const MatrixSubalgebra& s) {
  MatrixSubalgebra second = commutant(commutant(s));
  bool equal = second.same_span(s);
  return {equal, std::move(second)};
}

MatrixSubalgebra intersect(const MatrixSubalgebra& a, const MatrixSubalgebra& b) {
  if (a.ambient() != b.ambient() || a.prime() != b.prime() || a.precision() != b.precision())
    fail(errc::mismatch, "intersection of spans in different ambients");
  const size_t n = a.ambient();
  const int64_t p = a.prime();
  const int N = a.precision();
  auto abasis = a.basis();
  auto bbasis = b.basis();
  const size_t ka = abasis.size(), kb = bbasis.size();
  // Columns: coefficients alpha (on a-basis) and beta (on b-basis) with
  // sum_i alpha_i A_i = sum_j beta_j B_j.
  PadicMatrix system(p, N, n * n, ka + kb);
  for (size_t c = 0; c < ka; ++c) {
    auto v = vectorize(abasis[c]);
    for (size_t r = 0; r < n * n; ++r) system.set(r, c, v[r]);
  }
  for (size_t c = 0; c < kb; ++c) {
    auto v = vectorize(bbasis[c]);
    for (size_t r = 0; r < n * n; ++r) system.set(r, ka + c, -v[r]);
  }
  KernelBasis kernel = kernel_saturated(system);
  std::vector<PadicMatrix> gens;
  for (const auto& coeff : kernel.generators) {
    PadicMatrix x(p, N, n, n);
    for (size_t i = 0; i < ka; ++i) {
      if (coeff[i] == 0) continue;
      x = x + abasis[i].scalar_mul(coeff[i]);
    }
    if (!x.is_zero()) gens.push_back(std::move(x));
  }
  if (gens.empty()) gens.push_back(PadicMatrix(p, N, n, n));
  return MatrixSubalgebra(p, N, n, std::move(gens));
}

MatrixSubalgebra center(const MatrixSubalgebra& s) { return intersect(s, commutant(s)); }

bool is_factor(const MatrixSubalgebra& s) {
  MatrixSubalgebra z = center(s);
  MatrixSubalgebra scalars(s.prime(), s.precision(), s.ambient(),
                           {PadicMatrix::identity(s.prime(), s.precision(), s.ambient())});
  return z.same_span(scalars);
}

ValidationReport FiniteGroupoid::validate() const {
  ValidationReport rep;
  auto note = [&](const std::string& c, const std::string& d) {
    rep.valid = false;
    rep.issues.push_back({c, d, {}});
  };
  const size_t m = arrows.size();
  if (compose.size() != m || inverse.size() != m || identity_of.size() != n_objects) {
    note("shape", "tables do not match arrow/object counts");
    return rep;
  }
  for (size_t a = 0; a < m; ++a) {
    if (arrows[a].src >= n_objects || arrows[a].tgt >= n_objects) note("objects", "arrow endpoint out of range");
    for (size_t b = 0; b < m; ++b) {
      bool composable = arrows[b].tgt == arrows[a].src;
      if (composable != (compose[a][b] >= 0)) {
        note("composability", "arrows " + std::to_string(a) + "," + std::to_string(b));
        return rep;
      }
      if (composable) {
        size_t c = (size_t)compose[a][b];
        if (arrows[c].src != arrows[b].src || arrows[c].tgt != arrows[a].tgt)
          note("composition_endpoints", "arrows " + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  for (size_t x = 0; x < n_objects; ++x) {
    size_t e = identity_of[x];
    if (arrows[e].src != x || arrows[e].tgt != x) note("identities", "object " + std::to_string(x));
  }
  for (size_t a = 0; a < m; ++a) {
    size_t ia = inverse[a];
    if (arrows[ia].src != arrows[a].tgt || arrows[ia].tgt != arrows[a].src)
      note("inverse_endpoints", "arrow " + std::to_string(a));
    else if ((size_t)compose[a][ia] != identity_of[arrows[a].tgt] ||
             (size_t)compose[ia][a] != identity_of[arrows[a].src])
      note("inverses", "arrow " + std::to_string(a));
  }
  for (size_t a = 0; a < m && rep.valid; ++a)
    for (size_t b = 0; b < m && rep.valid; ++b) {
      if (compose[a][b] < 0) continue;
      for (size_t c = 0; c < m; ++c) {
        if (compose[b][c] < 0) continue;
        if (compose[(size_t)compose[a][b]][c] != compose[a][(size_t)compose[b][c]]) {
          note("associativity", "triple fails");
          break;
        }
      }
    }
  return rep;
}

FiniteGroupoid FiniteGroupoid::pair(size_t n) {
  FiniteGroupoid g;
  g.n_objects = n;
  const size_t m = n * n;
  auto arrow = [&](size_t i, size_t j) { return i * n + j; };  // j -> i
  g.arrows.resize(m);
  g.compose.assign(m, std::vector<int64_t>(m, -1));
  g.inverse.resize(m);
  g.identity_of.resize(n);
  for (size_t i = 0; i < n; ++i) {
    g.identity_of[i] = arrow(i, i);
    for (size_t j = 0; j < n; ++j) {
      g.arrows[arrow(i, j)] = {j, i};
      g.inverse[arrow(i, j)] = arrow(j, i);
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) g.compose[arrow(i, j)][arrow(j, k)] = (int64_t)arrow(i, k);
  return g;
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& grp) {
  FiniteGroupoid g;
  g.n_objects = 1;
  const size_t m = grp.order;
  g.arrows.assign(m, {0, 0});
  g.compose.assign(m, std::vector<int64_t>(m, -1));
  g.inverse = grp.inverse;
  g.identity_of = {grp.identity};
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) g.compose[a][b] = (int64_t)grp.mul(a, b);
  return g;
}

FiniteGroupoid FiniteGroupoid::disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid g;
  g.n_objects = a.n_objects + b.n_objects;
  const size_t ma = a.arrows.size(), mb = b.arrows.size();
  g.arrows = a.arrows;
  for (const auto& ar : b.arrows) g.arrows.push_back({ar.src + a.n_objects, ar.tgt + a.n_objects});
  g.compose.assign(ma + mb, std::vector<int64_t>(ma + mb, -1));
  for (size_t i = 0; i < ma; ++i)
    for (size_t j = 0; j < ma; ++j) g.compose[i][j] = a.compose[i][j];
  for (size_t i = 0; i < mb; ++i)
    for (size_t j = 0; j < mb; ++j)
      g.compose[ma + i][ma + j] = b.compose[i][j] < 0 ? -1 : b.compose[i][j] + (int64_t)ma;
  g.inverse = a.inverse;
  for (size_t i = 0; i < mb; ++i) g.inverse.push_back(b.inverse[i] + ma);
  g.identity_of = a.identity_of;
  for (size_t x = 0; x < b.n_objects; ++x) g.identity_of.push_back(b.identity_of[x] + ma);
  return g;
}

FiniteGroupoid FiniteGroupoid::action(const FiniteGroup& grp,
                                      const std::vector<std::vector<size_t>>& act) {
  if (act.size() != grp.order) fail(errc::invalid_argument, "action table has wrong group size");
  const size_t nx = act.empty() ? 0 : act[0].size();
  for (size_t g = 0; g < grp.order; ++g)
    for (size_t h = 0; h < grp.order; ++h)
      for (size_t x = 0; x < nx; ++x)
        if (act[grp.mul(g, h)][x] != act[g][act[h][x]])
          fail(errc::invalid_argument, "not a left action");
  FiniteGroupoid g;
  g.n_objects = nx;
  const size_t m = grp.order * nx;
  auto arrow = [&](size_t gg, size_t x) { return gg * nx + x; };
  g.arrows.resize(m);
  g.compose.assign(m, std::vector<int64_t>(m, -1));
  g.inverse.resize(m);
  g.identity_of.resize(nx);
  for (size_t gg = 0; gg < grp.order; ++gg)
    for (size_t x = 0; x < nx; ++x) {
      g.arrows[arrow(gg, x)] = {x, act[gg][x]};
      g.inverse[arrow(gg, x)] = arrow(grp.inverse[gg], act[gg][x]);
    }
  for (size_t x = 0; x < nx; ++x) g.identity_of[x] = arrow(grp.identity, x);
  for (size_t ga = 0; ga < grp.order; ++ga)
    for (size_t gb = 0; gb < grp.order; ++gb)
      for (size_t x = 0; x < nx; ++x)
        g.compose[arrow(ga, act[gb][x])][arrow(gb, x)] = (int64_t)arrow(grp.mul(ga, gb), x);
  return g;
}

GroupoidChecks groupoid_checks(const FiniteGroupoid& g) {
  auto vr = g.validate();
  if (!vr.valid) fail(errc::invalid_argument, "invalid groupoid: " + vr.issues[0].check);
  GroupoidChecks out;
  out.effective = true;
  for (size_t a = 0; a < g.arrows.size(); ++a) {
    if (g.arrows[a].src == g.arrows[a].tgt && a != g.identity_of[g.arrows[a].src])
      out.effective = false;
  }
  // Orbits: union of endpoints.
  std::vector<size_t> comp(g.n_objects);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (const auto& ar : g.arrows) comp[find(ar.src)] = find(ar.tgt);
  out.minimal = true;
  for (size_t x = 0; x < g.n_objects; ++x)
    if (find(x) != find(0)) out.minimal = false;
  return out;
}

StarAlgebra groupoid_algebra(const FiniteGroupoid& g, int64_t p, int N) {
  const size_t m = g.arrows.size();
  StarAlgebra a(p, N, m);
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      if (g.compose[x][y] >= 0) a.set_structure(x, y, (size_t)g.compose[x][y], 1);
  a.invol = PadicMatrix(p, N, m, m);
  for (size_t x = 0; x < m; ++x) a.invol.set(g.inverse[x], x, 1);
  std::vector<bigint> unit(m, bigint(0));
  for (size_t x = 0; x < g.n_objects; ++x) unit[g.identity_of[x]] = 1;
  a.unit = std::move(unit);
  return a;
}

FpAlgebra steinberg_fp(const FiniteGroupoid& g, int64_t p) {
  const size_t m = g.arrows.size();
  FpAlgebra a(p, m);
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      if (g.compose[x][y] >= 0) a.set_structure(x, y, (size_t)g.compose[x][y], 1);
  FpVec unit(m, 0);
  for (size_t x = 0; x < g.n_objects; ++x) unit[g.identity_of[x]] = 1;
  a.unit = std::move(unit);
  return a;
}

PSimplicityVerdict p_simplicity(const FiniteGroupoid& g, int64_t p, uint64_t seed,
                                size_t dim_cap) {
  PSimplicityVerdict out;
  out.checks = groupoid_checks(g);
  out.algebra = is_simple(steinberg_fp(g, p), seed, 200, dim_cap);
  out.p_simple = out.algebra.simple;
  const bool expected = out.checks.effective && out.checks.minimal;
  if (out.p_simple != expected)
    fail(errc::internal_check_failed,
         "simplicity verdict disagrees with effectiveness/minimality");
  return out;
}

}  // namespace padiclab
