#ifndef KFLAG_H
#define KFLAG_H

/* C interface to the building/test-configuration library. All structured
 * data crosses this boundary as JSON text; handles own parsed, validated
 * objects. Every computation returns a kf_status; on failure the per-thread
 * message of kf_last_error_message() describes the cause and no output is
 * written. Returned strings are heap-allocated; release with kf_string_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kf_status {
  KF_OK = 0,
  KF_PARSE_ERROR = 1,
  KF_INVALID_ARGUMENT = 2,
  KF_DUPLICATE_ABSCISSA = 3,
  KF_UNVERIFIED_FIT = 4,
  KF_ZERO_VECTOR = 5,
  KF_ZERO_WEIGHT_VECTOR = 6,
  KF_TRIVIAL_FLAG = 7,
  KF_ALMOST_TRIVIAL = 8,
  KF_ALMOST_TRIVIAL_IMAGE = 9,
  KF_ZERO_NORM = 10,
  KF_FIT_UNSTABLE = 11,
  KF_ZERO_B0 = 12,
  KF_UNREACHABLE_POINT = 13,
  KF_INTERNAL_ERROR = 14
} kf_status;

typedef struct kf_polytope kf_polytope;
typedef struct kf_config kf_config;
typedef struct kf_flag kf_flag;
typedef struct kf_filtration kf_filtration;

typedef struct kf_options {
  int k_max;        /* fit sample cap, 0 for the default (100) */
  int holdouts;     /* holdout points per fit, 0 for the default (2) */
  int norm_level_r; /* nonzero: normalize df by the level-r norm */
  int tsv;          /* nonzero: table commands emit TSV instead of JSON */
} kf_options;

kf_status kf_polytope_parse(const char* json, kf_polytope** out);
void kf_polytope_free(kf_polytope* x);

kf_status kf_config_parse(const kf_polytope* x, const char* json, kf_config** out);
void kf_config_free(kf_config* c);

kf_status kf_flag_parse(const char* json, kf_flag** out);
void kf_flag_free(kf_flag* f);

kf_status kf_filtration_parse(const kf_polytope* x, const char* json, kf_filtration** out);
void kf_filtration_free(kf_filtration* f);

/* Donaldson-Futaki data: df_raw, df_normalized, l2_norm_sq. */
kf_status kf_df(const kf_polytope* x, const kf_config* c, const kf_options* opts,
                char** out_json);

/* Both squared norms plus the almost-triviality flag. */
kf_status kf_norm(const kf_polytope* x, const kf_config* c, const kf_options* opts,
                  char** out_json);

/* Full invariant report (polynomials, leading coefficients, chow table). */
kf_status kf_report(const kf_polytope* x, const kf_config* c, const kf_options* opts,
                    char** out);

/* Tits distance between two weighted flags: exact cosine data and radians. */
kf_status kf_flag_distance(const kf_flag* f, const kf_flag* g, char** out_json);

/* Limit pseudo-metric between two configurations on the same polytope. */
kf_status kf_dinf(const kf_polytope* x, const kf_config* a, const kf_config* b,
                  const kf_options* opts, char** out_json);

/* Segre power of an apartment point (JSON in, JSON out). */
kf_status kf_segre(const char* point_json, int k, char** out_json);

/* Retraction of a flag onto a subspace, result in subspace coordinates. */
kf_status kf_retract(const kf_flag* f, const char* subspace_json, char** out_json);

/* iota_{r,k}: the exponent k*r image of a configuration (recentered only,
 * not rescaled, so the L2 norm is preserved). */
kf_status kf_iota(const kf_polytope* x, const kf_config* c, int k, char** out_json);

/* L2 norms of the filtration approximants at each m in m_list. */
kf_status kf_filtration_norms(const kf_polytope* x, const kf_filtration* f,
                              const int* m_list, size_t m_count,
                              const kf_options* opts, char** out);

/* d_infinity(p_m, p_{j m}) rows for each m in m_list. */
kf_status kf_cauchy(const kf_polytope* x, const kf_filtration* f, int j,
                    const int* m_list, size_t m_count, const kf_options* opts,
                    char** out);

const char* kf_status_name(kf_status s);

/* Process exit class for a status: 0 success, 2 invalid input, 3 math. */
int kf_exit_class(kf_status s);

/* Message for the most recent failure on this thread. */
const char* kf_last_error_message(void);

void kf_string_free(char* s);
const char* kf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* KFLAG_H */
