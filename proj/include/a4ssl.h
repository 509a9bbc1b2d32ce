/*
 * a4ssl — similar sublattices of the root lattice A4 via icosian arithmetic.
 *
 * C API of the shared library. All functions return a status code from
 * a4ssl_status (0 on success) and report results through out-parameters or
 * opaque handles. Every handle returned through a *_create / list function
 * must be released with the matching *_free. On failure, a4ssl_last_error()
 * returns a thread-local human-readable message.
 */
#ifndef A4SSL_H
#define A4SSL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum a4ssl_status {
    A4SSL_OK = 0,
    A4SSL_ERR_INVALID_ARGUMENT = 1,
    A4SSL_ERR_BUDGET_EXCEEDED = 2,
    A4SSL_ERR_MISMATCH = 3,
    A4SSL_ERR_INTERNAL = 4
} a4ssl_status;

const char* a4ssl_version(void);
const char* a4ssl_status_name(int status);
const char* a4ssl_last_error(void);

/* ---- coefficient tables: rows (m, m^2, f(m), f_pr(m)) ------------------- */

typedef struct a4ssl_table a4ssl_table;

typedef struct a4ssl_count_row {
    uint64_t m;
    uint64_t m_squared;
    int64_t f;
    int64_t f_pr;
} a4ssl_count_row;

int a4ssl_count_table(uint64_t max_m, int nonzero_only, a4ssl_table** out);
void a4ssl_table_free(a4ssl_table* table);
uint64_t a4ssl_table_rows(const a4ssl_table* table);
int a4ssl_table_row(const a4ssl_table* table, uint64_t row, a4ssl_count_row* out);

/* ---- similar-sublattice enumeration ------------------------------------- */

typedef struct a4ssl_ssl_list a4ssl_ssl_list;

typedef struct a4ssl_ssl_record {
    uint64_t m;          /* sublattice index is m^2 */
    uint64_t index;      /* m^2 = determinant of the HNF matrix */
    uint64_t scale;      /* d >= 1; d > 1 marks a scaled copy of a primitive SSL */
    int has_generator;   /* 1 for primitive records (scale == 1) */
    int64_t generator[8]; /* Z-coordinates of the generator on the order basis */
    int64_t hnf[4][4];   /* canonical column HNF in the L-basis */
} a4ssl_ssl_record;

/* budget_max_m == 0 uses the default enumeration cap (50) */
int a4ssl_enumerate(uint64_t m, int primitive_only, uint64_t budget_max_m,
                    a4ssl_ssl_list** out);
void a4ssl_ssl_list_free(a4ssl_ssl_list* list);
uint64_t a4ssl_ssl_list_size(const a4ssl_ssl_list* list);
int a4ssl_ssl_list_get(const a4ssl_ssl_list* list, uint64_t idx, a4ssl_ssl_record* out);

/* verify a 4x4 integer matrix (row-major) against the similarity conditions */
int a4ssl_verify_matrix(const int64_t matrix[16], uint64_t m, int claim_primitive,
                        int* ok, int* primitive, char reason[64]);

/* ---- three-way verification: closed form vs construction vs oracle ------ */

typedef struct a4ssl_verify_report {
    int64_t f_closed;
    int64_t fpr_closed;
    int64_t f_enumerated;
    int64_t fpr_enumerated;
    int oracle_ran;      /* 0 when the oracle budget was exceeded (note, not an error) */
    int64_t f_oracle;
    int64_t fpr_oracle;
    int pass;
} a4ssl_verify_report;

int a4ssl_verify_index(uint64_t m, int want_oracle, a4ssl_verify_report* out);

/* ---- root systems -------------------------------------------------------- */

typedef struct a4ssl_kscalar { /* (a + b*tau) / den */
    int64_t a;
    int64_t b;
    int64_t den;
} a4ssl_kscalar;

typedef struct a4ssl_quat {
    a4ssl_kscalar c[4];
} a4ssl_quat;

typedef struct a4ssl_roots a4ssl_roots;

/* system: "h4" (120), "a4" (20) or "h3" (30) */
int a4ssl_roots_create(const char* system, a4ssl_roots** out);
void a4ssl_roots_free(a4ssl_roots* roots);
uint64_t a4ssl_roots_size(const a4ssl_roots* roots);
int a4ssl_roots_get(const a4ssl_roots* roots, uint64_t idx, a4ssl_quat* out);

/* ---- twist maps and symmetry structure ----------------------------------- */

typedef struct a4ssl_twists a4ssl_twists;

typedef struct a4ssl_twists_summary {
    uint64_t map_count;            /* 10 */
    uint64_t group_order;          /* 120 */
    int has_order_four_element;
    int z_cubed_is_minus_one;
    uint64_t orbit_size;           /* 60 */
    uint64_t copies_containing_one; /* 10 */
    int theta_six_to_one;          /* theta maps the 120 roots 6-to-1 onto the 20 */
    int fixed_lattices_are_a4;     /* every fixed lattice has the A4 Gram matrix */
    int a2_cover_ok;               /* the ten hexagons cover the 30 pure roots twice */
} a4ssl_twists_summary;

int a4ssl_twists_create(a4ssl_twists** out);
void a4ssl_twists_free(a4ssl_twists* twists);
int a4ssl_twists_summary_get(const a4ssl_twists* twists, a4ssl_twists_summary* out);
/* defining root a of the idx-th map (0 <= idx < 10), and its recorded witness */
int a4ssl_twists_root(const a4ssl_twists* twists, uint64_t idx, a4ssl_quat* root,
                      a4ssl_quat* witness);

/* ---- asymptotics ---------------------------------------------------------- */

typedef struct a4ssl_asymptotics {
    uint64_t x;
    int64_t summatory;       /* F(x) */
    char rho[80];            /* growth constant, `digits` decimals */
    char target[80];         /* rho * x^2 / 2 */
    char ratio[80];          /* F(x) / (rho x^2 / 2) */
    int within_5_percent;
} a4ssl_asymptotics;

int a4ssl_asymptotics_get(uint64_t x, uint32_t digits, a4ssl_asymptotics* out);
int a4ssl_rho(uint32_t digits, char* buffer, size_t buffer_len);
int a4ssl_summatory(uint64_t x, int64_t* out);

/* first `cap` possible indices m <= max_m with f(m) > 0; *count receives the
 * number written */
int a4ssl_possible_indices(uint64_t max_m, uint64_t* out, uint64_t cap, uint64_t* count);

/* ---- related-lattice series ------------------------------------------------ */

/* lattice: "a1", "a2", "a3" (fcc) or "z2"; values[1..terms], values[0] = 0 */
int a4ssl_series(const char* lattice, uint64_t terms, int64_t* values);

/* ---- brute-force oracle ----------------------------------------------------- */

typedef struct a4ssl_oracle_result {
    int64_t total;
    int64_t primitive;
} a4ssl_oracle_result;

/* preset: one of a4 a4dual a2 fcc z2 z3 z4 rect23, or NULL when gram_json is
 * given: a JSON array of arrays of integers or "p/q" strings.
 * budget_override == 0 keeps the default oracle budget. */
int a4ssl_oracle_count(const char* preset, const char* gram_json, uint64_t index,
                       uint64_t budget_override, a4ssl_oracle_result* out);

#ifdef __cplusplus
}
#endif

#endif /* A4SSL_H */
