/* epigame: solvers for SIS protection games on complete, bipartite and
 * core-coupled community networks, behind a plain C interface.
 *
 * Conventions: functions that can fail return eg_status and write results
 * through out-pointers; EG_OK means every out-pointer is filled. Objects
 * returned as handles (eg_graph, eg_bipartite_report, eg_multicomm_trace,
 * eg_rla_trace) are owned by the caller and released with the matching
 * _destroy function. A human-readable detail for the last failure on the
 * calling thread is available from eg_last_error().
 */

#ifndef EPIGAME_H
#define EPIGAME_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EPIGAME_API __declspec(dllexport)
#else
#define EPIGAME_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eg_status {
    EG_OK = 0,
    EG_ERROR_INVALID_ARGUMENT = 1,
    EG_ERROR_NO_CONVERGENCE = 2,
    EG_ERROR_IO = 3,
    EG_ERROR_DEGENERATE = 4,
    EG_ERROR_OUT_OF_RANGE = 5,
    EG_ERROR_INTERNAL = 6
} eg_status;

EPIGAME_API const char* eg_status_name(eg_status status);
EPIGAME_API const char* eg_last_error(void);
EPIGAME_API const char* eg_version(void);

/* ------------------------------------------------------------------ */
/* Graphs and mean-field steady states                                  */

typedef struct eg_graph eg_graph;

EPIGAME_API eg_status eg_graph_create(int32_t nodes, eg_graph** out);
EPIGAME_API eg_status eg_graph_complete(int32_t n, eg_graph** out);
EPIGAME_API eg_status eg_graph_complete_bipartite(int32_t m, int32_t n, eg_graph** out);
/* Edge-list text format: one "i j" pair per line, 0-indexed; '#' comments
 * and blank lines ignored. Node count is max index + 1, or min_nodes if
 * larger. */
EPIGAME_API eg_status eg_graph_load_edge_list(const char* path, int32_t min_nodes,
                                              eg_graph** out);
EPIGAME_API eg_status eg_graph_add_edge(eg_graph* g, int32_t i, int32_t j);
EPIGAME_API int32_t eg_graph_node_count(const eg_graph* g);
EPIGAME_API void eg_graph_destroy(eg_graph* g);

/* Metastable solution of the per-node steady-state equations by fixed-point
 * iteration. v_out must hold eg_graph_node_count(g) doubles. On
 * EG_ERROR_NO_CONVERGENCE the last iterate and its residual are written. */
EPIGAME_API eg_status eg_nimfa_solve(const eg_graph* g, double tau, double tol,
                                     int64_t max_iter, double* v_out,
                                     int32_t* above_threshold, double* residual,
                                     int64_t* iterations);

EPIGAME_API double eg_nimfa_v_complete(int32_t n, double tau);
EPIGAME_API eg_status eg_nimfa_v_bipartite(int32_t m, int32_t n, double tau,
                                           double* v_m, double* v_n);
EPIGAME_API eg_status eg_nimfa_v_community(int32_t n_m, double tau_m, double u,
                                           double* v);
/* Core probability update 1 - 1/(1 + sum_m tau_m n_m v_m). */
EPIGAME_API eg_status eg_nimfa_core_infection(const int32_t* sizes, const double* taus,
                                              int32_t communities, const int32_t* counts,
                                              double u, double* out);

/* ------------------------------------------------------------------ */
/* Complete-graph investment game                                       */

typedef struct eg_game_params {
    int32_t n;           /* players */
    double invest_cost;  /* C */
    double infect_cost;  /* H */
    double tau;
} eg_game_params;

typedef struct eg_complete_report {
    int32_t n_star;
    double cost_invest;
    double cost_not_invest;
    double potential_at_eq;

    int32_t n_opt;
    double social_cost_eq;
    double social_cost_opt;
    double poa_pure;
    double poa_upper_bound;

    double p_star;
    double p_hat_star;
    double expected_cost_invest;
    double expected_cost_not_invest;
    int32_t mixed_solver_iterations;
    int32_t mixed_interior;

    double p_hat_opt;
    double mixed_opt_cost;
    int32_t mixed_opt_below_threshold;
    int32_t mixed_opt_is_interval;
    double mixed_opt_interval_lo;
    double mixed_opt_interval_hi;

    double poa_mixed_exact;
    double poa_mixed_approx;
    double mixed_eq_cost;
    double mixed_opt_cost_exact;

    double cost_pure_strategy;   /* S(n*) */
    double cost_mixed_strategy;  /* N C */
    double strategy_cost_ratio;
} eg_complete_report;

/* Full report over pure and mixed strategies; requires n >= 2. */
EPIGAME_API eg_status eg_complete_solve(const eg_game_params* params,
                                        eg_complete_report* out);
/* All counts passing the no-deviation inequalities, ascending. */
EPIGAME_API eg_status eg_complete_bruteforce(const eg_game_params* params,
                                             int32_t* counts_out, int32_t capacity,
                                             int32_t* found);
EPIGAME_API eg_status eg_complete_potential(const eg_game_params* params, int32_t n,
                                            double* out);
EPIGAME_API eg_status eg_complete_social_cost(const eg_game_params* params, int32_t n,
                                              double* out);
EPIGAME_API eg_status eg_complete_mixed_cost_not_invest(const eg_game_params* params,
                                                        double p, double* out);

/* ------------------------------------------------------------------ */
/* Bipartite investment game                                            */

typedef struct eg_bipartite_params {
    int32_t m;           /* cluster M size */
    int32_t n;           /* cluster N size */
    double invest_cost;
    double infect_cost;
    double tau;
} eg_bipartite_params;

typedef struct eg_bipartite_pair {
    int32_t n;
    int32_t m;
    double v_m_here;
    double v_m_up;
    double v_n_here;
    double v_n_up;
    int32_t interior;
} eg_bipartite_pair;

typedef struct eg_bipartite_summary {
    int32_t pair_count;
    int32_t balanced_interior;
    int32_t condition2_holds;

    int32_t opt_case;
    double opt_cost_continuous;
    double opt_n_continuous;
    double opt_m_continuous;
    int32_t opt_n_int;
    int32_t opt_m_int;
    double opt_cost_int;

    double poa;
    int32_t poa_degenerate;
    double worst_eq_cost;
    double poa_upper_bound; /* +inf below threshold */
    int32_t poa_unbounded;
} eg_bipartite_summary;

typedef struct eg_bipartite_report eg_bipartite_report;

EPIGAME_API eg_status eg_bipartite_solve(const eg_bipartite_params* params,
                                         eg_bipartite_report** out);
EPIGAME_API eg_status eg_bipartite_report_summary(const eg_bipartite_report* r,
                                                  eg_bipartite_summary* out);
EPIGAME_API eg_status eg_bipartite_report_pair(const eg_bipartite_report* r,
                                               int32_t index, eg_bipartite_pair* out);
EPIGAME_API eg_status eg_bipartite_social_cost(const eg_bipartite_params* params,
                                               int32_t n, int32_t m, double* out);
EPIGAME_API void eg_bipartite_report_destroy(eg_bipartite_report* r);

/* ------------------------------------------------------------------ */
/* Multi-community parametric potential game                            */

typedef struct eg_multicomm_trace eg_multicomm_trace;

/* Runs the alternating equilibrium / core-update procedure. Always returns
 * a trace on EG_OK; inspect eg_multicomm_trace_converged. */
EPIGAME_API eg_status eg_multicomm_run(const int32_t* sizes, const double* taus,
                                       int32_t communities, double invest_cost,
                                       double infect_cost, double u0, double epsilon,
                                       int32_t max_iter, eg_multicomm_trace** out);

EPIGAME_API int32_t eg_multicomm_trace_iterations(const eg_multicomm_trace* t);
EPIGAME_API int32_t eg_multicomm_trace_communities(const eg_multicomm_trace* t);
EPIGAME_API int32_t eg_multicomm_trace_converged(const eg_multicomm_trace* t);
/* 0 when no cycle was detected. */
EPIGAME_API int32_t eg_multicomm_trace_cycle_period(const eg_multicomm_trace* t);
/* u[k] for k in 0..iterations (inclusive). */
EPIGAME_API eg_status eg_multicomm_trace_u(const eg_multicomm_trace* t, int32_t k,
                                           double* out);
/* Equilibrium vector computed at u[k], k in 0..iterations-1. */
EPIGAME_API eg_status eg_multicomm_trace_n_star(const eg_multicomm_trace* t, int32_t k,
                                                int32_t* counts_out);
EPIGAME_API eg_status eg_multicomm_trace_bounds(const eg_multicomm_trace* t, int32_t k,
                                                double* g_bound, double* f_bound,
                                                int32_t* defined, int32_t* interior);

/* Per-community equilibrium for a fixed core probability. */
EPIGAME_API eg_status eg_multicomm_community_equilibrium(
    const int32_t* sizes, const double* taus, int32_t communities, double invest_cost,
    double infect_cost, int32_t community, double u, int32_t* out);

EPIGAME_API void eg_multicomm_trace_destroy(eg_multicomm_trace* t);

/* ------------------------------------------------------------------ */
/* Reinforcement-learning play and its replicator limit                 */

typedef struct eg_rla_config {
    eg_game_params params;
    double b0;               /* learning rate in (0,1] */
    double decay_k0;         /* > 0: b[k] = b0/(1 + k/k0); 0: constant */
    double p0;               /* initial investment probability */
    const double* p0_vector; /* optional per-node override, length n */
    double epsilon_stop;
    int32_t stable_window;
    int64_t max_steps;
    uint64_t seed;
    int32_t keep_history;
} eg_rla_config;

typedef struct eg_rla_trace eg_rla_trace;

EPIGAME_API eg_status eg_rla_run(const eg_rla_config* config, eg_rla_trace** out);
EPIGAME_API int64_t eg_rla_trace_steps(const eg_rla_trace* t);
EPIGAME_API int32_t eg_rla_trace_converged(const eg_rla_trace* t);
/* Non-investor count at the last executed step. */
EPIGAME_API int32_t eg_rla_trace_final_count(const eg_rla_trace* t);
EPIGAME_API eg_status eg_rla_trace_final_p(const eg_rla_trace* t, double* out);
/* History accessors; valid when the run kept history. */
EPIGAME_API eg_status eg_rla_trace_p(const eg_rla_trace* t, int64_t step, int32_t node,
                                     double* out);
EPIGAME_API eg_status eg_rla_trace_action(const eg_rla_trace* t, int64_t step,
                                          int32_t node, int32_t* out);
EPIGAME_API eg_status eg_rla_trace_invest_count(const eg_rla_trace* t, int64_t step,
                                                int32_t* out);
EPIGAME_API void eg_rla_trace_destroy(eg_rla_trace* t);

/* Fills t_out/p_out with floor(horizon/dt)+1 samples; pass NULL arrays to
 * query the length. */
EPIGAME_API eg_status eg_replicator_ode(const eg_game_params* params, double p0,
                                        double horizon, double dt, double* t_out,
                                        double* p_out, int64_t capacity,
                                        int64_t* length);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EPIGAME_H */
