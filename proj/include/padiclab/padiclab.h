#ifndef PADICLAB_H
#define PADICLAB_H

/*
 * C interface to the padic-lab shared library.
 *
 * All computations run through named commands that consume and produce
 * JSON strings.  A session is an opaque handle owning the configuration
 * and the buffers of the last run; sessions are independent and may be
 * used from different threads (a single session is not thread-safe).
 *
 * Exit-code convention (padiclab_exit_code): 0 success, 2 verified
 * negative verdict (e.g. not p-simple, not quasi-C*), 1 failure.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PADICLAB_OK = 0,
  PADICLAB_NEGATIVE = 2, /* computed successfully; the verdict is negative */
  PADICLAB_ERR_INVALID_ARGUMENT = 10,
  PADICLAB_ERR_MISMATCH = 11,
  PADICLAB_ERR_SHAPE = 12,
  PADICLAB_ERR_NON_UNIT = 13,
  PADICLAB_ERR_NOT_A_SQUARE = 14,
  PADICLAB_ERR_UNSUPPORTED_PRIME = 15,
  PADICLAB_ERR_PRECISION_EXHAUSTED = 16,
  PADICLAB_ERR_NOT_SYMMETRIC = 17,
  PADICLAB_ERR_NOT_UNIMODULAR = 18,
  PADICLAB_ERR_INVALID_QUASI_STATE = 19,
  PADICLAB_ERR_DEGENERATE_PRECISION = 20,
  PADICLAB_ERR_PROFILE_MISMATCH = 21,
  PADICLAB_ERR_INDEX_OUT_OF_RANGE = 22,
  PADICLAB_ERR_NOT_ISOMETRIC = 23,
  PADICLAB_ERR_DIMENSION_CAP = 24,
  PADICLAB_ERR_INVALID_INPUT = 25,
  PADICLAB_ERR_INTERNAL = 26
} padiclab_status;

typedef struct padiclab_session padiclab_session;

padiclab_session* padiclab_session_new(void);
void padiclab_session_free(padiclab_session* session);

/*
 * Configure a session from a JSON object; missing fields keep defaults:
 *   {"prime":5, "precision":16, "seed":1, "format":"json", "cap":256}
 * The environment variable PADIC_LAB_CAP overrides the default cap.
 */
padiclab_status padiclab_configure(padiclab_session* session, const char* config_json);

/*
 * Run a named command on a JSON input (may be NULL or "" for commands
 * without input, e.g. "selftest").  The rendered output and any error
 * message stay valid until the next run on the same session.
 */
padiclab_status padiclab_run(padiclab_session* session, const char* command,
                             const char* input_json);

const char* padiclab_output(const padiclab_session* session);
const char* padiclab_error_message(const padiclab_session* session);

/* Number of known commands / name of the i-th command (NULL past the end). */
size_t padiclab_command_count(void);
const char* padiclab_command_name(size_t index);

int padiclab_exit_code(padiclab_status status);
const char* padiclab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PADICLAB_H */
