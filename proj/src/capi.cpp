#include "padiclab/padiclab.h"

#include <string>

#include "padiclab/commands.hpp"

using namespace padiclab;

struct padiclab_session {
  CommandConfig config;
  std::string output;
  std::string error_message;
  padiclab_status last_status = PADICLAB_OK;
};

namespace {

padiclab_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return PADICLAB_ERR_INVALID_ARGUMENT;
    case errc::mismatch: return PADICLAB_ERR_MISMATCH;
    case errc::shape_mismatch: return PADICLAB_ERR_SHAPE;
    case errc::non_unit: return PADICLAB_ERR_NON_UNIT;
    case errc::not_a_square: return PADICLAB_ERR_NOT_A_SQUARE;
    case errc::unsupported_prime: return PADICLAB_ERR_UNSUPPORTED_PRIME;
    case errc::precision_exhausted: return PADICLAB_ERR_PRECISION_EXHAUSTED;
    case errc::not_symmetric: return PADICLAB_ERR_NOT_SYMMETRIC;
    case errc::not_unimodular: return PADICLAB_ERR_NOT_UNIMODULAR;
    case errc::invalid_quasi_state: return PADICLAB_ERR_INVALID_QUASI_STATE;
    case errc::degenerate_precision: return PADICLAB_ERR_DEGENERATE_PRECISION;
    case errc::profile_mismatch: return PADICLAB_ERR_PROFILE_MISMATCH;
    case errc::index_out_of_range: return PADICLAB_ERR_INDEX_OUT_OF_RANGE;
    case errc::not_isometric: return PADICLAB_ERR_NOT_ISOMETRIC;
    case errc::dimension_cap_exceeded: return PADICLAB_ERR_DIMENSION_CAP;
    case errc::invalid_input: return PADICLAB_ERR_INVALID_INPUT;
    case errc::internal_check_failed: return PADICLAB_ERR_INTERNAL;
  }
  return PADICLAB_ERR_INTERNAL;
}

}  // namespace

extern "C" {

padiclab_session* padiclab_session_new(void) {
  try {
    return new padiclab_session();
  } catch (...) {
    return nullptr;
  }
}

void padiclab_session_free(padiclab_session* session) { delete session; }

padiclab_status padiclab_configure(padiclab_session* session, const char* config_json) {
  if (!session) return PADICLAB_ERR_INVALID_ARGUMENT;
  try {
    session->config = parse_config(config_json ? config_json : "");
    session->error_message.clear();
    return PADICLAB_OK;
  } catch (const Error& e) {
    session->error_message = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    session->error_message = e.what();
    return PADICLAB_ERR_INTERNAL;
  }
}

padiclab_status padiclab_run(padiclab_session* session, const char* command,
                             const char* input_json) {
  if (!session) return PADICLAB_ERR_INVALID_ARGUMENT;
  if (!command) {
    session->error_message = "command must not be null";
    return session->last_status = PADICLAB_ERR_INVALID_ARGUMENT;
  }
  try {
    CommandOutcome outcome =
        run_command(command, session->config, input_json ? input_json : "");
    session->output = outcome.payload;
    if (outcome.exit_code == 0) {
      session->error_message.clear();
      return session->last_status = PADICLAB_OK;
    }
    if (outcome.exit_code == 2) {
      session->error_message.clear();
      return session->last_status = PADICLAB_NEGATIVE;
    }
    session->error_message = outcome.payload;
    return session->last_status = status_of(outcome.error.value_or(errc::internal_check_failed));
  } catch (const std::exception& e) {
    session->error_message = e.what();
    return session->last_status = PADICLAB_ERR_INTERNAL;
  }
}

const char* padiclab_output(const padiclab_session* session) {
  return session ? session->output.c_str() : "";
}

const char* padiclab_error_message(const padiclab_session* session) {
  return session ? session->error_message.c_str() : "";
}

size_t padiclab_command_count(void) { return command_names().size(); }

const char* padiclab_command_name(size_t index) {
  const auto& names = command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int padiclab_exit_code(padiclab_status status) {
  if (status == PADICLAB_OK) return 0;
  if (status == PADICLAB_NEGATIVE) return 2;
  return 1;
}

const char* padiclab_version(void) { return "0.1.0"; }

}  // extern "C"
