/*
 * autoseq - automatic sequences and their pseudorandomness measures.
 *
 * C interface to the shared library: opaque handles, status codes, and
 * plain buffers. Every function is thread-safe; handles are immutable after
 * creation and may be shared across threads.
 */

#ifndef AUTOSEQ_H
#define AUTOSEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asq_status {
    ASQ_OK = 0,
    ASQ_ERR_INVALID_ARGUMENT = 1,
    ASQ_ERR_UNKNOWN_NAME = 2,
    ASQ_ERR_DOMAIN = 3,
    ASQ_ERR_CAP_EXCEEDED = 4,
    ASQ_ERR_UNSUPPORTED = 5,
    ASQ_ERR_INTERNAL = 6
} asq_status;

/* Library version, encoded as major * 10000 + minor * 100 + patch. */
unsigned asq_version(void);

/* Static name of a status code. */
const char* asq_status_name(asq_status status);

/* Message of the last failing call on this thread (empty string if none). */
const char* asq_last_error(void);

/* ---- sequences ------------------------------------------------------- */

typedef struct asq_seq asq_seq;

/*
 * Catalog specs: thue-morse, rudin-shapiro, rudin-shapiro-like, baum-sweet,
 * three-squares, paper-folding:v0=<0|1>, apwenian, pattern:<word>[,base=<k>],
 * zeckendorf-z, zeckendorf-u, all-zero.
 */
asq_status asq_seq_create(const char* spec, asq_seq** out);

/*
 * Subsequence transforms stacked on an existing handle:
 *   poly:<c0,c1,...>   s_{f(n)} for the integer polynomial f (constant first)
 *   squares            shorthand for poly:0,0,1
 *   primes             s_p over primes
 *   floorpow:<c>       s_{floor(n^c)}, decimal 1 < c < 2
 *   geom:<g>           s_{g^n}, integer g >= 2
 */
asq_status asq_seq_transform(const asq_seq* base, const char* spec, asq_seq** out);

void asq_seq_free(asq_seq* seq);

const char* asq_seq_name(const asq_seq* seq);
unsigned asq_seq_alphabet(const asq_seq* seq);
int asq_seq_has_automaton(const asq_seq* seq);

/* Fills out[0..count) with the first symbols of the sequence. */
asq_status asq_seq_prefix(const asq_seq* seq, uint64_t count, uint8_t* out);

/* Automaton-vs-recurrence agreement below `count` (catalog entries only).
 * Writes 1/0 to *agree. */
asq_status asq_seq_cross_check(const asq_seq* seq, uint64_t count, int* agree);

/* ---- measures --------------------------------------------------------- */

/*
 * Measures over a raw symbol prefix: linear, maxorder, welldist, correlation,
 * expansion, subword, expsum. `samples` holds prefix lengths (window lengths
 * for subword); values land in out_values. All measures are exact integers
 * except expsum. `options` is a comma-separated key=value list (NULL for
 * defaults): field=<p|p^r>, order=<k>, grid=<g>, threads=<t>, dmax=<cap>.
 */
asq_status asq_measure_profile(const uint8_t* s, uint64_t n, const char* measure,
                               const char* options, const uint64_t* samples,
                               uint64_t num_samples, double* out_values);

/* Witness text for the final prefix (comment lines, '#'-prefixed). The
 * returned string must be released with asq_text_free. */
asq_status asq_measure_witness(const uint8_t* s, uint64_t n, const char* measure,
                               const char* options, char** out_text);

/* Profile CSV ("N,value" header, one row per sample, witness appended). */
asq_status asq_measure_csv(const uint8_t* s, uint64_t n, const char* measure,
                           const char* options, const uint64_t* samples, uint64_t num_samples,
                           char** out_csv);

void asq_text_free(char* text);

/* ---- finite-field experiments ----------------------------------------- */

/*
 * Value histogram CSV of a digit function ("T" or "R").
 *   domain "field":        counts kind(f(xi)) over F_{p^r}; poly required,
 *                          comma-separated coefficients as element indices.
 *   domain "irreducibles": counts over monic irreducibles of degree r over
 *                          F_p; poly ignored.
 */
asq_status asq_ff_histogram(const char* kind, const char* domain, unsigned p, unsigned r,
                            const char* poly, char** out_csv);

/* ---- verification ------------------------------------------------------ */

typedef void (*asq_report_fn)(const char* line, void* user);

/* Runs a verify suite (identities, profiles, bounds, oracles, ff,
 * statistical), reporting one line per check. *failures receives the number
 * of failed checks. */
asq_status asq_verify(const char* suite, int threads, asq_report_fn report, void* user,
                      int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AUTOSEQ_H */
