#include "padiclab/json_io.hpp"

namespace padiclab {

void schema_error(const std::string& pointer, const std::string& what) {
  fail(errc::invalid_input, pointer + ": " + what);
}

namespace {

const json& need(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(pointer + "/" + key, "missing field");
  return *it;
}

int64_t need_int(const json& j, const char* key, const std::string& pointer) {
  const json& v = need(j, key, pointer);
  if (!v.is_number_integer()) schema_error(pointer + "/" + key, "expected an integer");
  return v.get<int64_t>();
}

bigint parse_bigint(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return bigint(v.get<int64_t>());
  if (v.is_string()) {
    try {
      return bigint(v.get<std::string>());
    } catch (const std::exception&) {
      schema_error(pointer, "not a decimal integer string");
    }
  }
  schema_error(pointer, "expected a decimal string or integer");
}

}  // namespace

int64_t get_prime(const json& j, const std::string& pointer) {
  int64_t p = need_int(j, "p", pointer);
  if (p < 2) schema_error(pointer + "/p", "prime must be >= 2");
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) schema_error(pointer + "/p", std::to_string(p) + " is not prime");
  return p;
}

int get_precision(const json& j, const std::string& pointer) {
  int64_t n = need_int(j, "N", pointer);
  if (n < 1 || n > 4096) schema_error(pointer + "/N", "precision out of range");
  return (int)n;
}

json entries_to_json(const PadicMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const std::vector<bigint>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<bigint> vector_from_json(const json& j, const std::string& pointer) {
  if (!j.is_array()) schema_error(pointer, "expected an array");
  std::vector<bigint> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_bigint(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

PadicMatrix entries_from_json(const json& j, int64_t p, int N, const std::string& pointer) {
  if (!j.is_array() || j.empty()) schema_error(pointer, "expected a non-empty array of rows");
  const size_t rows = j.size();
  if (!j[0].is_array()) schema_error(pointer + "/0", "expected an array");
  const size_t cols = j[0].size();
  PadicMatrix m(p, N, rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    const std::string rp = pointer + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) schema_error(rp, "ragged rows");
    for (size_t c = 0; c < cols; ++c)
      m.set(i, c, parse_bigint(j[i][c], rp + "/" + std::to_string(c)));
  }
  return m;
}

json matrix_to_json(const PadicMatrix& m) {
  return json{{"p", m.prime()},
              {"N", m.precision()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", entries_to_json(m)}};
}

PadicMatrix matrix_from_json(const json& j, const std::string& pointer) {
  int64_t p = get_prime(j, pointer);
  int N = get_precision(j, pointer);
  PadicMatrix m = entries_from_json(need(j, "entries", pointer), p, N, pointer + "/entries");
  if (j.contains("rows") && (size_t)need_int(j, "rows", pointer) != m.rows())
    schema_error(pointer + "/rows", "row count does not match entries");
  if (j.contains("cols") && (size_t)need_int(j, "cols", pointer) != m.cols())
    schema_error(pointer + "/cols", "column count does not match entries");
  return m;
}

json quasi_hilbert_to_json(const QuasiHilbert& h) {
  return json{{"p", h.prime()}, {"N", h.precision()}, {"gram", entries_to_json(h.gram())}};
}

QuasiHilbert quasi_hilbert_from_json(const json& j, const std::string& pointer) {
  int64_t p = get_prime(j, pointer);
  int N = get_precision(j, pointer);
  PadicMatrix g = entries_from_json(need(j, "gram", pointer), p, N, pointer + "/gram");
  if (g.rows() != g.cols()) schema_error(pointer + "/gram", "gram matrix must be square");
  return QuasiHilbert(std::move(g));
}

json star_algebra_to_json(const StarAlgebra& a) {
  json mult = json::array();
  for (size_t i = 0; i < a.dim; ++i) {
    json plane = json::array();
    for (size_t j = 0; j < a.dim; ++j) {
      json row = json::array();
      for (size_t k = 0; k < a.dim; ++k) row.push_back(a.structure(i, j, k).str());
      plane.push_back(std::move(row));
    }
    mult.push_back(std::move(plane));
  }
  json out{{"p", a.prime}, {"N", a.precision}, {"d", a.dim}, {"mult", std::move(mult)},
           {"invol", entries_to_json(a.invol)}};
  out["unit"] = a.unit ? vector_to_json(*a.unit) : json(nullptr);
  return out;
}

StarAlgebra star_algebra_from_json(const json& j, const std::string& pointer) {
  int64_t p = get_prime(j, pointer);
  int N = get_precision(j, pointer);
  int64_t d64 = need_int(j, "d", pointer);
  if (d64 < 1 || d64 > 512) schema_error(pointer + "/d", "rank out of range");
  const size_t d = (size_t)d64;
  StarAlgebra a(p, N, d);
  const json& mult = need(j, "mult", pointer);
  if (!mult.is_array() || mult.size() != d) schema_error(pointer + "/mult", "expected d planes");
  for (size_t i = 0; i < d; ++i) {
    const std::string pi = pointer + "/mult/" + std::to_string(i);
    if (!mult[i].is_array() || mult[i].size() != d) schema_error(pi, "expected d rows");
    for (size_t jj = 0; jj < d; ++jj) {
      const std::string pj = pi + "/" + std::to_string(jj);
      if (!mult[i][jj].is_array() || mult[i][jj].size() != d) schema_error(pj, "expected d entries");
      for (size_t k = 0; k < d; ++k)
        a.set_structure(i, jj, k, parse_bigint(mult[i][jj][k], pj + "/" + std::to_string(k)));
    }
  }
  a.invol = entries_from_json(need(j, "invol", pointer), p, N, pointer + "/invol");
  if (a.invol.rows() != d || a.invol.cols() != d)
    schema_error(pointer + "/invol", "involution matrix must be d x d");
  if (j.contains("unit") && !j["unit"].is_null()) {
    auto u = vector_from_json(j["unit"], pointer + "/unit");
    if (u.size() != d) schema_error(pointer + "/unit", "unit vector must have length d");
    for (auto& v : u) v = mod_reduce(v, a.modulus());
    a.unit = std::move(u);
  }
  return a;
}

json ortho_basis_to_json(const OrthoBasis& b) {
  json out{{"U", entries_to_json(b.change_of_basis)}, {"diagonal", vector_to_json(b.diagonal)}};
  out["m"] = b.ones_count ? json(*b.ones_count) : json(nullptr);
  return out;
}

json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (size_t a = 0; a < g.order; ++a) {
    json row = json::array();
    for (size_t b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return json{{"order", g.order}, {"table", std::move(table)}};
}

FiniteGroup group_from_json(const json& j, const std::string& pointer) {
  int64_t order = need_int(j, "order", pointer);
  if (order < 1 || order > 256) schema_error(pointer + "/order", "order out of range");
  FiniteGroup g;
  g.order = (size_t)order;
  const json& table = need(j, "table", pointer);
  if (!table.is_array() || table.size() != g.order)
    schema_error(pointer + "/table", "expected `order` rows");
  g.table.resize(g.order * g.order);
  for (size_t a = 0; a < g.order; ++a) {
    const std::string pa = pointer + "/table/" + std::to_string(a);
    if (!table[a].is_array() || table[a].size() != g.order) schema_error(pa, "ragged table");
    for (size_t b = 0; b < g.order; ++b) {
      if (!table[a][b].is_number_integer()) schema_error(pa + "/" + std::to_string(b), "integer expected");
      int64_t v = table[a][b].get<int64_t>();
      if (v < 0 || (size_t)v >= g.order) schema_error(pa + "/" + std::to_string(b), "index out of range");
      g.table[a * g.order + b] = (size_t)v;
    }
  }
  // Derive identity and inverses; validate() recomputes the axioms.
  g.identity = g.order;
  for (size_t e = 0; e < g.order; ++e) {
    bool ok = true;
    for (size_t x = 0; x < g.order; ++x)
      if (g.mul(e, x) != x || g.mul(x, e) != x) ok = false;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity == g.order) schema_error(pointer + "/table", "no identity element");
  g.inverse.assign(g.order, g.order);
  for (size_t x = 0; x < g.order; ++x) {
    for (size_t y = 0; y < g.order; ++y)
      if (g.mul(x, y) == g.identity && g.mul(y, x) == g.identity) g.inverse[x] = y;
    if (g.inverse[x] == g.order) schema_error(pointer + "/table", "missing inverse");
  }
  auto vr = g.validate();
  if (!vr.valid) schema_error(pointer + "/table", "not a group: " + vr.issues[0].check);
  return g;
}

json groupoid_to_json(const FiniteGroupoid& g) {
  json objects = json::array();
  for (size_t x = 0; x < g.n_objects; ++x) objects.push_back(x);
  json arrows = json::array();
  for (size_t a = 0; a < g.arrows.size(); ++a)
    arrows.push_back(json{{"id", a}, {"src", g.arrows[a].src}, {"tgt", g.arrows[a].tgt}});
  json compose = json::array();
  for (const auto& row : g.compose) {
    json r = json::array();
    for (int64_t v : row) r.push_back(v);
    compose.push_back(std::move(r));
  }
  json inv = json::array();
  for (size_t v : g.inverse) inv.push_back(v);
  return json{{"objects", std::move(objects)},
              {"arrows", std::move(arrows)},
              {"compose", std::move(compose)},
              {"inv", std::move(inv)}};
}

FiniteGroupoid groupoid_from_json(const json& j, const std::string& pointer) {
  FiniteGroupoid g;
  const json& objects = need(j, "objects", pointer);
  if (!objects.is_array() || objects.empty()) schema_error(pointer + "/objects", "expected a non-empty array");
  g.n_objects = objects.size();
  const json& arrows = need(j, "arrows", pointer);
  if (!arrows.is_array() || arrows.empty()) schema_error(pointer + "/arrows", "expected a non-empty array");
  const size_t m = arrows.size();
  g.arrows.resize(m);
  for (size_t a = 0; a < m; ++a) {
    const std::string pa = pointer + "/arrows/" + std::to_string(a);
    int64_t id = need_int(arrows[a], "id", pa);
    if (id != (int64_t)a) schema_error(pa + "/id", "arrow ids must be 0..m-1 in order");
    int64_t src = need_int(arrows[a], "src", pa);
    int64_t tgt = need_int(arrows[a], "tgt", pa);
    if (src < 0 || (size_t)src >= g.n_objects) schema_error(pa + "/src", "object out of range");
    if (tgt < 0 || (size_t)tgt >= g.n_objects) schema_error(pa + "/tgt", "object out of range");
    g.arrows[a] = {(size_t)src, (size_t)tgt};
  }
  const json& compose = need(j, "compose", pointer);
  if (!compose.is_array() || compose.size() != m) schema_error(pointer + "/compose", "expected m rows");
  g.compose.assign(m, std::vector<int64_t>(m, -1));
  for (size_t a = 0; a < m; ++a) {
    const std::string pa = pointer + "/compose/" + std::to_string(a);
    if (!compose[a].is_array() || compose[a].size() != m) schema_error(pa, "ragged table");
    for (size_t b = 0; b < m; ++b) {
      if (!compose[a][b].is_number_integer()) schema_error(pa + "/" + std::to_string(b), "integer expected");
      int64_t v = compose[a][b].get<int64_t>();
      if (v < -1 || v >= (int64_t)m) schema_error(pa + "/" + std::to_string(b), "index out of range");
      g.compose[a][b] = v;
    }
  }
  const json& inv = need(j, "inv", pointer);
  if (!inv.is_array() || inv.size() != m) schema_error(pointer + "/inv", "expected m entries");
  g.inverse.resize(m);
  for (size_t a = 0; a < m; ++a) {
    if (!inv[a].is_number_integer()) schema_error(pointer + "/inv/" + std::to_string(a), "integer expected");
    int64_t v = inv[a].get<int64_t>();
    if (v < 0 || v >= (int64_t)m) schema_error(pointer + "/inv/" + std::to_string(a), "index out of range");
    g.inverse[a] = (size_t)v;
  }
  // Identities are derived: id_x = a . a^{-1} for any arrow a with target x.
  g.identity_of.assign(g.n_objects, m);
  for (size_t a = 0; a < m; ++a) {
    size_t x = g.arrows[a].tgt;
    int64_t e = g.compose[a][g.inverse[a]];
    if (e >= 0) g.identity_of[x] = (size_t)e;
  }
  for (size_t x = 0; x < g.n_objects; ++x)
    if (g.identity_of[x] == m) schema_error(pointer, "object " + std::to_string(x) + " has no identity arrow");
  auto vr = g.validate();
  if (!vr.valid) schema_error(pointer, "not a groupoid: " + vr.issues[0].check);
  return g;
}

json validation_to_json(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& issue : r.issues) {
    json e{{"check", issue.check}, {"detail", issue.detail}};
    if (!issue.witness.empty()) e["witness"] = vector_to_json(issue.witness);
    issues.push_back(std::move(e));
  }
  return json{{"valid", r.valid}, {"issues", std::move(issues)}};
}

json embedding_to_json(const StandardEmbedding& e) {
  json images = json::array();
  for (const auto& img : e.images) images.push_back(entries_to_json(img));
  json checks{{"mult", e.checks.multiplicative ? "pass" : "fail"},
              {"invol", e.checks.involutive ? "pass" : "fail"},
              {"isometry", e.checks.isometric ? "pass" : "fail"},
              {"injective", e.checks.injective ? "pass" : "fail"}};
  if (!e.checks.detail.empty()) checks["detail"] = e.checks.detail;
  return json{{"ambient_size", e.ambient_size}, {"images", std::move(images)},
              {"checks", std::move(checks)}};
}

json representation_to_json(const Representation& r) {
  json images = json::array();
  for (const auto& img : r.images) images.push_back(entries_to_json(img));
  json out{{"space", quasi_hilbert_to_json(r.target)},
           {"images", std::move(images)},
           {"isometric_on_basis", r.isometric_on_basis}};
  out["cyclic"] = r.cyclic_vector ? vector_to_json(*r.cyclic_vector) : json(nullptr);
  return out;
}

}  // namespace padiclab
