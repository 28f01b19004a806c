#include "padiclab/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "padiclab/acceptance.hpp"
#include "padiclab/json_io.hpp"

namespace padiclab {

namespace {

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::invalid_input, "/: " + what + " is not valid JSON");
  return j;
}

// A deterministic plain-text rendering for --format text.
void render_text(const json& j, std::ostream& out, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string name = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() || value.is_array()) {
        render_text(value, out, name);
      } else {
        out << name << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    bool scalar = std::all_of(j.begin(), j.end(),
                              [](const json& v) { return !v.is_object() && !v.is_array(); });
    if (scalar) {
      out << prefix << ": ";
      for (size_t i = 0; i < j.size(); ++i) out << (i ? " " : "") << j[i].dump();
      out << "\n";
    } else {
      for (size_t i = 0; i < j.size(); ++i) render_text(j[i], out, prefix + "[" + std::to_string(i) + "]");
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

struct MatrixSpanInput {
  int64_t prime;
  int precision;
  size_t size;
  std::vector<PadicMatrix> generators;
};

MatrixSpanInput span_input(const json& j) {
  int64_t p = get_prime(j, "");
  int N = get_precision(j, "");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    schema_error("/generators", "expected a non-empty array of matrices");
  std::vector<PadicMatrix> gens;
  size_t n = 0;
  for (size_t i = 0; i < j["generators"].size(); ++i) {
    std::string ptr = "/generators/" + std::to_string(i);
    PadicMatrix m = entries_from_json(j["generators"][i], p, N, ptr);
    if (m.rows() != m.cols()) schema_error(ptr, "generators must be square");
    if (i == 0) n = m.rows();
    if (m.rows() != n) schema_error(ptr, "generators of mixed sizes");
    gens.push_back(std::move(m));
  }
  return {p, N, n, std::move(gens)};
}

json span_to_json(const MatrixSubalgebra& s) {
  json basis = json::array();
  for (const auto& m : s.basis()) basis.push_back(entries_to_json(m));
  return json{{"ambient", s.ambient()}, {"rank", s.rank()}, {"basis", std::move(basis)}};
}

json simplicity_to_json(const SimplicityVerdict& v) {
  json out{{"simple", v.simple}, {"tier", v.tier}, {"seed", v.seed}, {"rounds", v.rounds}};
  if (v.witness) {
    json w = json::array();
    for (int64_t x : *v.witness) w.push_back(x);
    out["witness"] = std::move(w);
    out["witness_ideal_dim"] = v.witness_ideal_dim;
  }
  return out;
}

struct RawResult {
  json result;
  int exit_code = 0;
};

RawResult cmd_orthogonalize(const CommandConfig&, const json& in) {
  QuasiHilbert h = quasi_hilbert_from_json(in, "");
  OrthoBasis plain = orthogonal_basis(h);
  OrthoBasis normalized = normalize_square_classes(h);
  // Re-verify the congruence before emitting the certificate.
  PadicMatrix d(h.prime(), h.precision(), h.rank(), h.rank());
  for (size_t i = 0; i < h.rank(); ++i) d.set(i, i, normalized.diagonal[i]);
  if (normalized.change_of_basis.transpose() * h.gram() * normalized.change_of_basis != d)
    fail(errc::internal_check_failed, "congruence re-verification failed");
  json result{{"space", quasi_hilbert_to_json(h)},
              {"orthogonal", ortho_basis_to_json(plain)},
              {"normalized", ortho_basis_to_json(normalized)},
              {"checks", json{{"congruence", "pass"}}}};
  return {std::move(result), 0};
}

RawResult cmd_gns(const CommandConfig&, const json& in) {
  if (!in.contains("algebra")) schema_error("/algebra", "missing field");
  StarAlgebra a = star_algebra_from_json(in["algebra"], "/algebra");
  if (!in.contains("state")) schema_error("/state", "missing field");
  QuasiState phi = vector_from_json(in["state"], "/state");
  if (phi.size() != a.dim) schema_error("/state", "state length must equal the rank");
  GnsResult g = gns(a, phi);
  json cols = json::array();
  for (size_t c : g.quotient_columns) cols.push_back(c);
  json ideal = json::array();
  for (const auto& v : g.null_ideal) ideal.push_back(vector_to_json(v));
  json result{{"representation", representation_to_json(g.rep)},
              {"quotient_columns", std::move(cols)},
              {"null_ideal", std::move(ideal)},
              {"checks", json{{"gns_identity", "pass"}, {"star_representation", "pass"}}}};
  return {std::move(result), 0};
}

RawResult cmd_ultra(const CommandConfig&, const json& in) {
  StarAlgebra a = star_algebra_from_json(in.contains("algebra") ? in["algebra"] : in,
                                         in.contains("algebra") ? "/algebra" : "");
  auto space = ultra_antisymmetric_space(a);
  json basis = json::array();
  for (const auto& v : space) {
    json row = json::array();
    for (int64_t x : v) row.push_back(x);
    basis.push_back(std::move(row));
  }
  json result{{"dimension", space.size()}, {"basis", std::move(basis)}};
  return {std::move(result), 0};
}

RawResult cmd_certify_qc(const CommandConfig& cfg, const json& in) {
  StarAlgebra a = star_algebra_from_json(in.contains("algebra") ? in["algebra"] : in,
                                         in.contains("algebra") ? "/algebra" : "");
  auto cert = quasi_cstar_certify(a, cfg.seed, 16);
  json elements = json::array();
  for (const auto& ec : cert.elements) {
    json e{{"element", vector_to_json(ec.element)}, {"attained", ec.attained}};
    if (ec.witness)
      e["witness"] = json{{"state", ec.witness->state_index},
                          {"left", ec.witness->left},
                          {"right", ec.witness->right}};
    elements.push_back(std::move(e));
  }
  json ultra = json::array();
  for (const auto& v : cert.ultra_space) {
    json row = json::array();
    for (int64_t x : v) row.push_back(x);
    ultra.push_back(std::move(row));
  }
  json result{{"certified", cert.certified},
              {"elements", std::move(elements)},
              {"ultra_space", std::move(ultra)}};
  return {std::move(result), cert.certified ? 0 : 2};
}

RawResult cmd_standardize(const CommandConfig& cfg, const json& in) {
  QuasiHilbert h = quasi_hilbert_from_json(in, "");
  StandardEmbedding emb = standardize(h, cfg.seed, 100);
  if (!emb.checks.pass())
    fail(errc::not_isometric, "standardization certificate failed: " + emb.checks.detail);
  return {embedding_to_json(emb), 0};
}

RawResult cmd_represent(const CommandConfig& cfg, const json& in) {
  StarAlgebra a = star_algebra_from_json(in.contains("algebra") ? in["algebra"] : in,
                                         in.contains("algebra") ? "/algebra" : "");
  RepresentResult r = represent_star_algebra(a, cfg.seed, 100);
  json result = embedding_to_json(r.embedding);
  result["hilbert_rank"] = r.hilbert_rank;
  result["matrix_step"] = r.used_matrix_step;
  result["states_used"] = r.states_used;
  return {std::move(result), 0};
}

RawResult cmd_tate_demo(const CommandConfig& cfg, const json& in) {
  int64_t n = in.contains("n") ? in["n"].get<int64_t>() : 2;
  if (n < 0 || n > 6) schema_error("/n", "degree must be between 0 and 6");
  TateDemo demo = tate_truncation_demo((size_t)n, cfg.prime, cfg.precision);
  json ranks = json::array();
  for (const auto& rep : demo.truncation_reps) ranks.push_back(rep.target.rank());
  json result{{"n", n},
              {"p", cfg.prime},
              {"N", cfg.precision},
              {"algebra_rank", demo.algebra.dim},
              {"truncation_ranks", std::move(ranks)},
              {"checks", json{{"monomial_norms", demo.norm_attained_on_monomials ? "pass" : "fail"},
                              {"adjoint_swap", demo.adjoint_swaps_variables ? "pass" : "fail"},
                              {"direct_sum_isometric", demo.sum.isometric_on_basis ? "pass" : "fail"}}}};
  bool ok = demo.norm_attained_on_monomials && demo.adjoint_swaps_variables &&
            demo.sum.isometric_on_basis;
  if (!ok) fail(errc::internal_check_failed, "Tate demo checks failed");
  return {std::move(result), 0};
}

RawResult cmd_commutant(const CommandConfig&, const json& in) {
  auto input = span_input(in);
  MatrixSubalgebra s(input.prime, input.precision, input.size, input.generators);
  auto comm = commutant(s);
  return {json{{"commutant", span_to_json(comm)}}, 0};
}

RawResult cmd_bicommutant(const CommandConfig&, const json& in) {
  auto input = span_input(in);
  MatrixSubalgebra s(input.prime, input.precision, input.size, input.generators);
  auto result = bicommutant_check(s);
  json out{{"is_vn", result.is_vn}, {"bicommutant", span_to_json(result.bicommutant)}};
  return {std::move(out), result.is_vn ? 0 : 2};
}

RawResult cmd_center(const CommandConfig&, const json& in) {
  auto input = span_input(in);
  MatrixSubalgebra s(input.prime, input.precision, input.size, input.generators);
  return {json{{"center", span_to_json(center(s))}}, 0};
}

RawResult cmd_factor(const CommandConfig&, const json& in) {
  auto input = span_input(in);
  MatrixSubalgebra s(input.prime, input.precision, input.size, input.generators);
  auto z = center(s);
  bool factor = is_factor(s);
  json out{{"is_factor", factor}, {"center_rank", z.rank()}, {"center", span_to_json(z)}};
  return {std::move(out), factor ? 0 : 2};
}

RawResult cmd_class_sums(const CommandConfig& cfg, const json& in) {
  FiniteGroup g = group_from_json(in.contains("group") ? in["group"] : in,
                                  in.contains("group") ? "/group" : "");
  auto classes = conjugacy_classes(g);
  auto sums = class_sums(g, cfg.prime, cfg.precision);
  // Certify: the class sums span the center of the left regular image.
  auto ga = group_algebra(g, cfg.prime, cfg.precision);
  MatrixSubalgebra span(cfg.prime, cfg.precision, g.order, ga.left_regular.images);
  std::vector<PadicMatrix> chi_mats;
  for (const auto& chi : sums) chi_mats.push_back(rep_apply(ga.left_regular, chi));
  bool matches = center(span).same_span(
      MatrixSubalgebra(cfg.prime, cfg.precision, g.order, chi_mats));
  if (!matches) fail(errc::internal_check_failed, "class sums do not span the center");
  json jclasses = json::array();
  for (const auto& cls : classes) {
    json c = json::array();
    for (size_t x : cls) c.push_back(x);
    jclasses.push_back(std::move(c));
  }
  json jsums = json::array();
  for (const auto& chi : sums) jsums.push_back(vector_to_json(chi));
  json result{{"classes", std::move(jclasses)},
              {"class_sums", std::move(jsums)},
              {"center_rank", classes.size()},
              {"checks", json{{"matches_center", "pass"}}}};
  return {std::move(result), 0};
}

RawResult cmd_simplicity(const CommandConfig& cfg, const json& in) {
  FiniteGroupoid g = groupoid_from_json(in.contains("groupoid") ? in["groupoid"] : in,
                                        in.contains("groupoid") ? "/groupoid" : "");
  auto verdict = p_simplicity(g, cfg.prime, cfg.seed, cfg.dimension_cap);
  json result{{"p", cfg.prime},
              {"p_simple", verdict.p_simple},
              {"effective", verdict.checks.effective},
              {"minimal", verdict.checks.minimal},
              {"algebra", simplicity_to_json(verdict.algebra)}};
  return {std::move(result), verdict.p_simple ? 0 : 2};
}

RawResult cmd_selftest(const CommandConfig& cfg, const json&) {
  AcceptanceReport report = run_acceptance(cfg.seed, cfg.dimension_cap, nullptr);
  json criteria = json::array();
  for (const auto& r : report.criteria) {
    json c{{"id", r.id}, {"name", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    criteria.push_back(std::move(c));
  }
  json result{{"all_pass", report.all_pass}, {"criteria", std::move(criteria)}};
  return {std::move(result), report.all_pass ? 0 : 1};
}

}  // namespace

CommandConfig parse_config(const std::string& config_json) {
  CommandConfig cfg;
  if (const char* cap = std::getenv("PADIC_LAB_CAP")) {
    char* end = nullptr;
    long v = std::strtol(cap, &end, 10);
    if (end && *end == '\0' && v > 0) cfg.dimension_cap = (size_t)v;
  }
  if (config_json.empty()) return cfg;
  json j = parse_json(config_json, "config");
  if (!j.is_object()) fail(errc::invalid_input, "/: config must be an object");
  if (j.contains("prime")) {
    json probe{{"p", j["prime"]}};
    cfg.prime = get_prime(probe, "");
  }
  if (j.contains("precision")) {
    json probe{{"N", j["precision"]}};
    cfg.precision = get_precision(probe, "");
    if (cfg.precision < 2) fail(errc::invalid_input, "/precision: must be >= 2");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      fail(errc::invalid_input, "/seed: must be an integer");
    cfg.seed = j["seed"].get<uint64_t>();
  }
  if (j.contains("format")) {
    cfg.format = j["format"].get<std::string>();
    if (cfg.format != "json" && cfg.format != "text")
      fail(errc::invalid_input, "/format: expected \"json\" or \"text\"");
  }
  if (j.contains("cap")) {
    if (!j["cap"].is_number_integer() || j["cap"].get<int64_t>() < 1)
      fail(errc::invalid_input, "/cap: must be a positive integer");
    cfg.dimension_cap = j["cap"].get<size_t>();
  }
  return cfg;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "orthogonalize", "gns",    "ultra",       "certify-qc", "standardize",
      "represent",     "tate-demo", "commutant", "bicommutant", "center",
      "factor",        "class-sums", "simplicity", "selftest"};
  return names;
}

CommandOutcome run_command(const std::string& name, const CommandConfig& config,
                           const std::string& input_json) {
  CommandOutcome outcome;
  try {
    json input =
        input_json.empty() ? json::object() : parse_json(input_json, "input");
    RawResult raw = [&]() -> RawResult {
      if (name == "orthogonalize") return cmd_orthogonalize(config, input);
      if (name == "gns") return cmd_gns(config, input);
      if (name == "ultra") return cmd_ultra(config, input);
      if (name == "certify-qc") return cmd_certify_qc(config, input);
      if (name == "standardize") return cmd_standardize(config, input);
      if (name == "represent") return cmd_represent(config, input);
      if (name == "tate-demo") return cmd_tate_demo(config, input);
      if (name == "commutant") return cmd_commutant(config, input);
      if (name == "bicommutant") return cmd_bicommutant(config, input);
      if (name == "center") return cmd_center(config, input);
      if (name == "factor") return cmd_factor(config, input);
      if (name == "class-sums") return cmd_class_sums(config, input);
      if (name == "simplicity") return cmd_simplicity(config, input);
      if (name == "selftest") return cmd_selftest(config, input);
      fail(errc::invalid_input, "/: unknown command \"" + name + "\"");
    }();
    json envelope{{"command", name}, {"seed", config.seed}, {"result", std::move(raw.result)}};
    outcome.exit_code = raw.exit_code;
    if (raw.exit_code == 1) outcome.error = errc::internal_check_failed;
    if (config.format == "text") {
      std::ostringstream out;
      render_text(envelope, out, "");
      outcome.payload = out.str();
    } else {
      outcome.payload = envelope.dump(2) + "\n";
    }
  } catch (const Error& e) {
    outcome.exit_code = 1;
    outcome.error = e.code();
    json envelope{{"command", name}, {"seed", config.seed},
                  {"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
    outcome.payload = envelope.dump(2) + "\n";
  } catch (const std::exception& e) {
    outcome.exit_code = 1;
    outcome.error = errc::internal_check_failed;
    json envelope{{"command", name}, {"seed", config.seed},
                  {"error", json{{"code", "InternalCheckFailed"}, {"message", e.what()}}}};
    outcome.payload = envelope.dump(2) + "\n";
  }
  return outcome;
}

}  // namespace padiclab
