#ifndef PADICLAB_JSON_IO_HPP
#define PADICLAB_JSON_IO_HPP

// JSON encodings of the file formats: matrix entries are decimal strings,
// schema violations are reported with JSON-pointer paths.

#include <json.hpp>

#include "padiclab/group_groupoid.hpp"
#include "padiclab/quasi_hilbert.hpp"
#include "padiclab/standard_form.hpp"
#include "padiclab/star_algebra.hpp"

namespace padiclab {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what);

int64_t get_prime(const json& j, const std::string& pointer);
int get_precision(const json& j, const std::string& pointer);

json entries_to_json(const PadicMatrix& m);
json vector_to_json(const std::vector<bigint>& v);
std::vector<bigint> vector_from_json(const json& j, const std::string& pointer);

json matrix_to_json(const PadicMatrix& m);
PadicMatrix matrix_from_json(const json& j, const std::string& pointer);
PadicMatrix entries_from_json(const json& j, int64_t p, int N, const std::string& pointer);

json quasi_hilbert_to_json(const QuasiHilbert& h);
QuasiHilbert quasi_hilbert_from_json(const json& j, const std::string& pointer);

json star_algebra_to_json(const StarAlgebra& a);
StarAlgebra star_algebra_from_json(const json& j, const std::string& pointer);

json ortho_basis_to_json(const OrthoBasis& b);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j, const std::string& pointer);

json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const json& j, const std::string& pointer);

json validation_to_json(const ValidationReport& r);
json embedding_to_json(const StandardEmbedding& e);
json representation_to_json(const Representation& r);

}  // namespace padiclab

#endif
