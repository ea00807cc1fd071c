#ifndef FUR_FUR_H
#define FUR_FUR_H

/*
 * C interface to the fine-grained uncertainty / parity-oblivious random
 * access code library. All functions return a fur_status; outputs are
 * written through pointers. Handles are opaque and must be released with
 * their destroy function. The last failure message of the calling thread
 * is available via fur_last_error_message().
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fur_status {
    FUR_OK = 0,
    FUR_ERR_INVALID_ARGUMENT = 1,
    FUR_ERR_NULL_POINTER = 2,
    FUR_ERR_INTERNAL = 3
} fur_status;

const char* fur_status_string(fur_status status);
const char* fur_last_error_message(void);
const char* fur_version(void);

/* ---- closed-form game bounds -------------------------------------- */

/* (n + d - 1) / (d n) as an exact fraction. */
fur_status fur_noncontextual_bound(int n, int d, long long* num, long long* den);
/* (1/d)(1 + (d-1)/sqrt(n)): certainty bound for n mutually unbiased outcomes. */
fur_status fur_mub_certainty_bound(int n, int d, double* out);
/* (1/d)(1 + (d-1)/sqrt(n)): ceiling for projective quantum strategies. */
fur_status fur_quantum_upper_bound(int n, int d, double* out);
/* Value of the constructive noncontextual strategy, equal to the bound. */
fur_status fur_classical_po_value(int n, int d, long long* num, long long* den);
/* (1 + 1/sqrt(d))/2: success attained by the 2 -> 1 strategy in dim d. */
fur_status fur_two_dit_achievable(int d, double* out);

/* ---- quantum strategies -------------------------------------------- */

typedef struct fur_strategy fur_strategy;

/*
 * name: "paper2d"   2 -> 1 game in dimension d (n must be 2)
 *       "qubit3to1" 3 -> 1 qubit game (n must be 3, d must be 2)
 *       "naive"     leaking computational-basis demo, any n >= 2, d >= 2
 */
fur_status fur_strategy_create(const char* name, int n, int d, fur_strategy** out);
void fur_strategy_destroy(fur_strategy* strategy);
fur_status fur_strategy_game(const fur_strategy* strategy, int* n, int* d);
fur_status fur_strategy_success_probability(const fur_strategy* strategy, double* out);

/* ---- parity obliviousness ------------------------------------------ */

typedef enum fur_parity_convention {
    FUR_PARITY_ZETA_PAPER = 0, /* at most d-2 zero entries in s */
    FUR_PARITY_HAMMING2 = 1    /* at least two nonzero entries in s */
} fur_parity_convention;

#define FUR_MAX_DITS 16

typedef struct fur_parity_report {
    double max_violation;
    int pass;
    int witness_len;                /* 0 when no violation was found */
    int witness_s[FUR_MAX_DITS];
    int witness_y;                  /* -1 for the state-level check */
    int witness_b;                  /* -1 for the state-level check */
    int witness_class_a;
    int witness_class_b;
} fur_parity_report;

fur_status fur_check_parity_measurement(const fur_strategy* strategy,
                                        fur_parity_convention convention, double tol,
                                        fur_parity_report* out);
fur_status fur_check_parity_state(const fur_strategy* strategy,
                                  fur_parity_convention convention, double tol,
                                  fur_parity_report* out);

/* ---- oracle searches ------------------------------------------------ */

typedef struct fur_search_config {
    long long samples;
    uint64_t seed;
    int refine;
    double tol;
    int threads;
} fur_search_config;

/*
 * Search the maximum certainty sum over pure states for the outcome set
 * made of the first vector of each of n mutually unbiased bases in
 * dimension d (n = 2 works in every dimension; n > 2 requires prime d).
 * bound receives the analytic value (1/d)(1 + (d-1)/sqrt(n)).
 */
fur_status fur_oracle_max_certainty_mub(int n, int d, const fur_search_config* cfg,
                                        double* value, double* bound);

/* Search the game value over Haar-random projective decodings. */
fur_status fur_oracle_max_porac(int n, int d, const fur_search_config* cfg, double* value,
                                double* bound);

/* Exact unconstrained classical optimum (not parity oblivious). */
fur_status fur_oracle_classical_bruteforce(int n, int d, long long* num, long long* den);

typedef enum fur_basis_kind { FUR_BASES_MUB = 0, FUR_BASES_RANDOM = 1 } fur_basis_kind;

/*
 * Bloch-vector sum identity: sum over outcome strings of the squared
 * norm of the summed eigenvector Bloch vectors, against the closed form
 * ((d-1)/(2d)) n d^n. seed is used only for FUR_BASES_RANDOM.
 */
fur_status fur_oracle_lemma3(int n, int d, fur_basis_kind kind, uint64_t seed, double* value,
                             double* expected);

/*
 * Per-string optimal Bloch alignment for the standard MUB decodings and
 * the success probability it implies, against the analytic ceilings.
 */
fur_status fur_oracle_phi_check(int n, int d, double* phi, double* phi_bound,
                                double* implied_success, double* quantum_bound, int* saturated);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FUR_FUR_H */
