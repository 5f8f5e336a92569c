/* C interface to the Lie-type character value library.
 *
 * All functions return an error code (LCH_OK on success) and report results
 * through out-parameters. Strings returned through char** are owned by the
 * caller and must be released with lch_string_free. A context holds the data
 * directory and caches the computed tables; it is not thread-safe, use one
 * context per thread.
 */
#ifndef LIECHAR_H
#define LIECHAR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lch_context lch_context;

enum {
  LCH_OK = 0,
  LCH_E_USAGE = 2,
  LCH_E_VALIDATION = 3,
  LCH_E_UNDERDETERMINED = 4,
  LCH_E_INTERNAL = 5
};

/* data_dir may be NULL, meaning "data" relative to the working directory */
lch_context* lch_context_new(const char* data_dir);
void lch_context_free(lch_context* ctx);

/* last error message of a failed call on this context */
const char* lch_last_error(const lch_context* ctx);

/* runs a subcommand (argv[0] = name, flags follow); *out receives the
 * report text */
int lch_run(lch_context* ctx, int argc, const char* const* argv, char** out);
void lch_string_free(char* s);

/* typed convenience queries */
int lch_weyl_order(lch_context* ctx, const char* type, unsigned long long* out);
int lch_root_count(lch_context* ctx, const char* type, int* out);
int lch_center_structure(lch_context* ctx, const char* type,
                         const char* subsystem_or_null, char** out);
/* zeta of a solved case: "1", "-1", or "conditional: ..." */
int lch_solve_zeta(lch_context* ctx, const char* case_name, char** zeta_out);

#ifdef __cplusplus
}
#endif

#endif /* LIECHAR_H */
