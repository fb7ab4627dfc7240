/* C interface to the hyperthin library. Results are JSON strings owned by the caller
   and released with ht_string_free. Status codes double as CLI exit codes. */
#ifndef HYPERTHIN_H
#define HYPERTHIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HT_OK = 0,
    HT_ERR_VALIDATION = 2,
    HT_ERR_BUDGET = 3,
    HT_ERR_INTERNAL = 4
} ht_status;

typedef struct ht_pair ht_pair;     /* exponent pair (alpha, beta) */
typedef struct ht_system ht_system; /* Levelt generators and invariant lattice */

/* Message of the last failure on this thread; empty after success. */
const char* ht_last_error(void);
/* JSON object {"error": {"kind", "message"}} describing the last failure. */
char* ht_last_error_json(void);
void ht_string_free(char* s);

/* Comma separated rationals, e.g. "1/3,1/2,2/3". */
ht_status ht_pair_parse(const char* alpha, const char* beta, ht_pair** out);
/* name is one of M1 M2 M3 N1 N2 N3 N4; k is ignored for M families. */
ht_status ht_pair_family(const char* name, int j, int k, int n, ht_pair** out);
/* Exponent pair of an appendix example, 1..6. */
ht_status ht_pair_appendix(int example, ht_pair** out);
void ht_pair_free(ht_pair* p);

ht_status ht_classify(const ht_pair* p, char** json);
ht_status ht_landau(const ht_pair* p, char** json);

ht_status ht_system_build(const ht_pair* p, ht_system** out);
void ht_system_free(ht_system* s);

ht_status ht_build_report(const ht_system* s, char** json);
ht_status ht_gram_report(const ht_system* s, char** json);
/* Returns HT_ERR_BUDGET, with the report still filled in, when the node budget ran out. */
ht_status ht_certify(const ht_system* s, int max_depth, uint64_t node_budget, char** json);
/* word_limit 0 selects the saturation search. csv may be NULL. */
ht_status ht_growth(const ht_system* s, double tmin, double tmax, unsigned points, unsigned word_limit,
                    double margin, char** json, char** csv);

/* Basis-change checks for one appendix example; depth is the Dirichlet word depth (anisotropic cases). */
ht_status ht_appendix(int example, unsigned depth, char** json);

#ifdef __cplusplus
}
#endif

#endif
