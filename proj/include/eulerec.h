#ifndef EULEREC_H
#define EULEREC_H

/* C interface to the eulerec library. All big-integer values cross this
 * boundary as exact decimal strings owned by the library; release them with
 * eulerec_string_free. Handles are opaque and freed by their *_free call.
 * Every entry point is thread-safe; the error message is thread-local. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eulerec_status {
    EULEREC_OK = 0,
    EULEREC_ERR_INVALID = 1,     /* malformed argument */
    EULEREC_ERR_UNKNOWN = 2,     /* name not in a catalog */
    EULEREC_ERR_DOMAIN = 3,      /* n outside the stated domain */
    EULEREC_ERR_GUARD = 4,       /* enumeration size guard exceeded */
    EULEREC_ERR_INEXACT = 5,     /* a division that must be exact was not */
    EULEREC_ERR_SHORT_TABLE = 6, /* table does not cover a required index */
    EULEREC_ERR_INTERNAL = 7
} eulerec_status;

typedef struct eulerec_table eulerec_table;
typedef struct eulerec_report eulerec_report;

const char* eulerec_version(void);

/* Message for the most recent failing call on the calling thread. */
const char* eulerec_last_error(void);

/* ---- sequences ---- */

typedef struct eulerec_sequence_info {
    const char* name; /* static storage, do not free */
    long first_n;     /* first index with a defined value */
    int needs_k;
    int needs_r;
    int has_solver; /* a recurrence path exists */
} eulerec_sequence_info;

long eulerec_sequence_count(void);
eulerec_status eulerec_sequence_at(long index, eulerec_sequence_info* out);
eulerec_status eulerec_sequence_find(const char* name, eulerec_sequence_info* out);

/* Tabulate a sequence from its definition on 0..max_n (pass 0 for an unused
 * k or r). */
eulerec_status eulerec_compute_oracle(const char* name, long max_n, long k, long r,
                                      eulerec_table** out);

/* Tabulate via the Euler-type recurrence (p, q, sigma, r_k only). When terms
 * is non-NULL it receives the number of recurrence terms touched. */
eulerec_status eulerec_compute_recurrence(const char* name, long max_n, long k,
                                          unsigned long long* terms, eulerec_table** out);

long eulerec_table_max_n(const eulerec_table* table);
eulerec_status eulerec_table_value(const eulerec_table* table, long n, char** out);
void eulerec_table_free(eulerec_table* table);

/* ---- identity catalog ---- */

typedef struct eulerec_identity_info {
    const char* name; /* static storage, do not free */
    long domain_start;
    long verify_cap; /* documented bulk-verification ceiling */
    int needs_k;
    int needs_r;
    long default_k;
    long default_r;
    int is_product;
    int has_literal; /* an uncorrected printed form can be selected */
} eulerec_identity_info;

long eulerec_identity_count(void);
eulerec_status eulerec_identity_at(long index, eulerec_identity_info* out);
eulerec_status eulerec_identity_find(const char* name, eulerec_identity_info* out);

/* Check an identity at every n in [n_lo, n_hi], clamped below to its domain
 * start. k or r of 0 selects the catalog default; literal != 0 selects the
 * uncorrected printed form where one exists. */
eulerec_status eulerec_verify(const char* name, long k, long r, int literal, long n_lo,
                              long n_hi, eulerec_report** out);

long eulerec_report_n_lo(const eulerec_report* report);
long eulerec_report_n_hi(const eulerec_report* report);
long eulerec_report_checked(const eulerec_report* report);
long eulerec_report_failure_count(const eulerec_report* report);
eulerec_status eulerec_report_failure(const eulerec_report* report, long index, long* n,
                                      char** lhs, char** rhs);
double eulerec_report_elapsed_seconds(const eulerec_report* report);
void eulerec_report_free(eulerec_report* report);

/* LHS - RHS of an identity at one n, as a decimal string. */
eulerec_status eulerec_residual(const char* name, long k, long r, int literal, long n,
                                char** out);

void eulerec_string_free(char* string);

#ifdef __cplusplus
}
#endif

#endif /* EULEREC_H */
