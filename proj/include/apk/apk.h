/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the Arthur-packet library. Results are JSON documents
 * returned as heap strings; release them with apk_string_free.
 * On any non-OK status, apk_last_error() describes the failure (thread local).
 */
#ifndef APK_APK_H
#define APK_APK_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define APK_API __declspec(dllexport)
#else
#define APK_API __attribute__((visibility("default")))
#endif

typedef enum apk_status {
    APK_OK = 0,
    APK_ERR_ARGUMENT = 1,   /* bad scalar input */
    APK_ERR_VALIDATION = 2, /* malformed parameter or other structured input */
    APK_ERR_LIMIT = 3,      /* rank above the configured limit */
    APK_ERR_INTERNAL = 4
} apk_status;

typedef struct apk_param apk_param;

APK_API const char* apk_version(void);
APK_API const char* apk_last_error(void);
APK_API void apk_string_free(char* s);

/* Parameters. The wire format is
 * {"n": int, "unipotent": [{"char": "triv"|"sgn", "dim": int}], "discrete": [{"t": int, "a": int}]}
 * with blocks in canonical order. */
APK_API apk_status apk_param_parse(const char* json, apk_param** out);
APK_API apk_status apk_param_to_json(const apk_param* p, char** out);
APK_API void apk_param_free(apk_param* p);
/* Always answers OK for parseable JSON; reports {"valid": bool, "error": ...}. */
APK_API apk_status apk_param_validate(const char* json, char** out);

APK_API apk_status apk_enumerate_pi(int n, int m, int max_rank, char** out);
APK_API apk_status apk_enumerate_sigma(int n, int k, int max_rank, char** out);

APK_API apk_status apk_decide_pi(const apk_param* p, int m, char** out);
APK_API apk_status apk_decide_sigma(const apk_param* p, int k, char** out);
APK_API apk_status apk_decide_regular(const apk_param* p, int a, char** out);

/* module: 0 = pi_n(index), 1 = sigma_{n,index}. The report carries
 * "discrepancy": true when a tabulated row for the same parameter disagrees. */
APK_API apk_status apk_rho(const apk_param* p, int module, int index, int whittaker, char** out);
/* side: +1 for O(2m,0), -1 for O(0,2m). "vanishing" is set when equal blocks get different signs. */
APK_API apk_status apk_rho_theta(int n, int m, int tau_prime, int tau, int delta, int side, char** out);

APK_API apk_status apk_invariants(int p, int q, int delta, char** out);
/* chr: "Triv", "det", "sgn_1", "sgn_-1", "sgn_1(x)det", "sgn_-1(x)det" */
APK_API apk_status apk_howe(int p, int q, const char* chr, int n, char** out);
APK_API apk_status apk_howe_source(const int* weight, int len, char** out);

/* module: 0 = pi, 1 = sigma */
APK_API apk_status apk_standard(int module, int n, int index, char** out);
APK_API apk_status apk_tableau(int n, int m, char** out);
APK_API apk_status apk_cohind(int n, int p, int q, int t, char** out);
APK_API apk_status apk_cohind_regular(const int* chi_plus, int len, int a, char** out);

#ifdef __cplusplus
}
#endif

#endif
