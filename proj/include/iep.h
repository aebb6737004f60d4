/* C interface to the iep library. All results are returned as
 * heap-allocated JSON or CSV strings owned by the caller; release them
 * with iep_string_free. Functions return IEP_OK on success; on failure
 * the context holds a message retrievable with iep_ctx_error. */
#ifndef IEP_H
#define IEP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  IEP_OK = 0,
  IEP_ERR_SOLVER = 1,     /* numerical failure (divergence, CFL, NaN) */
  IEP_ERR_THRESHOLD = 2,  /* run finished but an acceptance threshold failed */
  IEP_ERR_INVALID = 3,    /* bad arguments or config */
  IEP_ERR_IO = 4
};

typedef struct iep_ctx iep_ctx;

iep_ctx* iep_ctx_new(void);
void iep_ctx_free(iep_ctx* ctx);

/* message from the last failing call on this context ("" if none) */
const char* iep_ctx_error(const iep_ctx* ctx);

const char* iep_version(void);
void iep_string_free(char* s);

/* dispersion relation report for wave number k0, as JSON */
int iep_dispersion_report(iep_ctx* ctx, double k0, char** json_out);

/* corrector and NLS coefficient table for k0, as JSON */
int iep_coefficient_table(iep_ctx* ctx, double k0, char** json_out);

/* kernel scan as CSV (columns k,km,m,value,bound-product);
 * which is one of "b01", "b10", "b11" */
int iep_kernel_scan(iep_ctx* ctx, const char* which, double k0, double delta, double eps,
                    char** csv_out);

/* experiment drivers; config_json follows the documented config schema.
 * Sweep and residual return IEP_ERR_THRESHOLD when their fitted
 * exponents miss the configured gates. */
int iep_run_validation(iep_ctx* ctx, const char* config_json, char** report_json_out);
int iep_run_sweep(iep_ctx* ctx, const char* config_json, char** report_json_out);
int iep_run_residual(iep_ctx* ctx, const char* config_json, char** report_json_out);

/* write report files; format in {"json","csv","plotdata"}; returns a JSON
 * array of the files written */
int iep_emit(iep_ctx* ctx, const char* report_json, const char* format, const char* out_dir,
             char** files_json_out);

#ifdef __cplusplus
}
#endif

#endif /* IEP_H */
