#ifndef PADICLAB_ERRORS_HPP
#define PADICLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padiclab {

// Error categories surfaced across the library.  The C API maps these
// one-to-one onto integer status codes; keep the order stable.
enum class errc {
  invalid_argument = 1,
  mismatch,            // operands disagree on prime or precision
  shape_mismatch,      // incompatible matrix dimensions
  non_unit,
  not_a_square,
  unsupported_prime,   // p = 2 where an odd prime is required
  precision_exhausted, // a quantity vanished mod p^N that must not
  not_symmetric,
  not_unimodular,
  invalid_quasi_state,
  degenerate_precision,
  profile_mismatch,
  index_out_of_range,
  not_isometric,
  dimension_cap_exceeded,
  invalid_input,       // malformed JSON / schema violation
  internal_check_failed,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace padiclab

#endif
