#include "epigame/epigame.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <string>

#include "bipartite_game.hpp"
#include "complete_game.hpp"
#include "multicommunity.hpp"
#include "nimfa.hpp"
#include "rla.hpp"

namespace gc = epigame::game_complete;
namespace gb = epigame::game_bipartite;
namespace gm = epigame::game_multicommunity;
namespace nf = epigame::nimfa;

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <typename Fn>
eg_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const nf::NonConvergenceError& e) {
        set_error(e.what());
        return EG_ERROR_NO_CONVERGENCE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return EG_ERROR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return EG_ERROR_OUT_OF_RANGE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return EG_ERROR_DEGENERATE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return EG_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return EG_ERROR_INTERNAL;
    }
}

gc::GameParams to_core(const eg_game_params& p) {
    return {p.n, p.invest_cost, p.infect_cost, p.tau};
}

nf::MultiCommunitySpec make_spec(const int32_t* sizes, const double* taus,
                                 int32_t communities) {
    if (!sizes || !taus || communities < 1)
        throw std::invalid_argument("sizes/taus must be non-null, communities >= 1");
    nf::MultiCommunitySpec spec;
    spec.sizes.assign(sizes, sizes + communities);
    spec.taus.assign(taus, taus + communities);
    spec.validate();
    return spec;
}

}  // namespace

struct eg_graph {
    nf::Adjacency adj;
};

struct eg_bipartite_report {
    gb::BipartiteGame game;
    gb::BipartiteEquilibria equilibria;
    gb::BipartiteSocialOpt optimum;
    gb::BipartitePoA poa;
};

struct eg_multicomm_trace {
    gm::MultiCommTrace trace;
    int32_t communities;
};

struct eg_rla_trace {
    epigame::rla::RlaTrace trace;
    int32_t nodes;
};

extern "C" {

const char* eg_status_name(eg_status status) {
    switch (status) {
        case EG_OK: return "ok";
        case EG_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case EG_ERROR_NO_CONVERGENCE: return "no_convergence";
        case EG_ERROR_IO: return "io_error";
        case EG_ERROR_DEGENERATE: return "degenerate";
        case EG_ERROR_OUT_OF_RANGE: return "out_of_range";
        case EG_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* eg_last_error(void) { return g_last_error.c_str(); }

const char* eg_version(void) { return "1.0.0"; }

/* ---------------- graphs ---------------- */

eg_status eg_graph_create(int32_t nodes, eg_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must be non-null");
        *out = new eg_graph{nf::Adjacency(nodes)};
        return EG_OK;
    });
}

eg_status eg_graph_complete(int32_t n, eg_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must be non-null");
        *out = new eg_graph{nf::Adjacency::complete(n)};
        return EG_OK;
    });
}

eg_status eg_graph_complete_bipartite(int32_t m, int32_t n, eg_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must be non-null");
        *out = new eg_graph{nf::Adjacency::complete_bipartite(m, n)};
        return EG_OK;
    });
}

eg_status eg_graph_load_edge_list(const char* path, int32_t min_nodes, eg_graph** out) {
    return guarded([&] {
        if (!path || !out) throw std::invalid_argument("path/out must be non-null");
        std::ifstream in(path);
        if (!in) {
            set_error(("cannot open edge list: " + std::string(path)).c_str());
            return EG_ERROR_IO;
        }
        *out = new eg_graph{nf::Adjacency::from_edge_list(in, min_nodes)};
        return EG_OK;
    });
}

eg_status eg_graph_add_edge(eg_graph* g, int32_t i, int32_t j) {
    return guarded([&] {
        if (!g) throw std::invalid_argument("graph must be non-null");
        g->adj.add_edge(i, j);
        return EG_OK;
    });
}

int32_t eg_graph_node_count(const eg_graph* g) { return g ? g->adj.size() : 0; }

void eg_graph_destroy(eg_graph* g) { delete g; }

/* ---------------- nimfa ---------------- */

eg_status eg_nimfa_solve(const eg_graph* g, double tau, double tol, int64_t max_iter,
                         double* v_out, int32_t* above_threshold, double* residual,
                         int64_t* iterations) {
    return guarded([&] {
        if (!g || !v_out) throw std::invalid_argument("graph/v_out must be non-null");
        try {
            const auto ss = nf::solve_general(g->adj, tau, tol, max_iter);
            std::memcpy(v_out, ss.v.data(), ss.v.size() * sizeof(double));
            if (above_threshold) *above_threshold = ss.above_threshold ? 1 : 0;
            if (residual) *residual = ss.residual;
            if (iterations) *iterations = ss.iterations;
            return EG_OK;
        } catch (const nf::NonConvergenceError& e) {
            std::memcpy(v_out, e.last_iterate.data(),
                        e.last_iterate.size() * sizeof(double));
            if (residual) *residual = e.residual;
            throw;
        }
    });
}

double eg_nimfa_v_complete(int32_t n, double tau) {
    return n < 0 || !(tau > 0.0) ? 0.0 : nf::v_complete(n, tau);
}

eg_status eg_nimfa_v_bipartite(int32_t m, int32_t n, double tau, double* v_m,
                               double* v_n) {
    return guarded([&] {
        if (!v_m || !v_n) throw std::invalid_argument("v_m/v_n must be non-null");
        const auto [vm, vn] = nf::v_bipartite(m, n, tau);
        *v_m = vm;
        *v_n = vn;
        return EG_OK;
    });
}

eg_status eg_nimfa_v_community(int32_t n_m, double tau_m, double u, double* v) {
    return guarded([&] {
        if (!v) throw std::invalid_argument("v must be non-null");
        *v = nf::v_community(n_m, tau_m, u);
        return EG_OK;
    });
}

eg_status eg_nimfa_core_infection(const int32_t* sizes, const double* taus,
                                  int32_t communities, const int32_t* counts, double u,
                                  double* out) {
    return guarded([&] {
        if (!counts || !out) throw std::invalid_argument("counts/out must be non-null");
        const auto spec = make_spec(sizes, taus, communities);
        *out = nf::core_infection(spec, std::vector<int>(counts, counts + communities), u);
        return EG_OK;
    });
}

/* ---------------- complete game ---------------- */

eg_status eg_complete_solve(const eg_game_params* params, eg_complete_report* out) {
    return guarded([&] {
        if (!params || !out) throw std::invalid_argument("params/out must be non-null");
        const auto p = to_core(*params);
        if (p.n < 2) throw std::invalid_argument("the full report needs n >= 2");

        eg_complete_report r{};
        const auto eq = gc::pure_equilibrium(p);
        r.n_star = eq.n_star;
        r.cost_invest = eq.cost_invest;
        r.cost_not_invest = eq.cost_not_invest;
        r.potential_at_eq = eq.potential_at_eq;

        const auto poa = gc::poa_pure(p);
        r.n_opt = poa.n_opt;
        r.social_cost_eq = poa.social_cost_eq;
        r.social_cost_opt = poa.social_cost_opt;
        r.poa_pure = poa.poa;
        r.poa_upper_bound = poa.poa_upper_bound;

        const auto mixed = gc::mixed_equilibrium_exact(p);
        r.p_star = mixed.p_star;
        r.p_hat_star = mixed.p_hat_star;
        r.expected_cost_invest = mixed.expected_cost_invest;
        r.expected_cost_not_invest = mixed.expected_cost_not;
        r.mixed_solver_iterations = mixed.solver_iterations;
        r.mixed_interior = gc::mixed_equilibrium_approx(p).interior ? 1 : 0;

        const auto mopt = gc::mixed_social_optimum(p);
        r.p_hat_opt = mopt.p_opt;
        r.mixed_opt_cost = mopt.cost;
        r.mixed_opt_below_threshold = mopt.below_threshold ? 1 : 0;
        r.mixed_opt_is_interval = mopt.is_interval ? 1 : 0;
        r.mixed_opt_interval_lo = mopt.interval_lo;
        r.mixed_opt_interval_hi = mopt.interval_hi;

        const auto pm = gc::poa_mixed(p);
        r.poa_mixed_exact = pm.exact;
        r.poa_mixed_approx = pm.approx;
        r.mixed_eq_cost = pm.eq_cost;
        r.mixed_opt_cost_exact = pm.opt_cost_exact;

        const auto cmp = gc::compare_strategies(p);
        r.cost_pure_strategy = cmp.cost_pure;
        r.cost_mixed_strategy = cmp.cost_mixed;
        r.strategy_cost_ratio = cmp.ratio;

        *out = r;
        return EG_OK;
    });
}

eg_status eg_complete_bruteforce(const eg_game_params* params, int32_t* counts_out,
                                 int32_t capacity, int32_t* found) {
    return guarded([&] {
        if (!params || !counts_out || !found)
            throw std::invalid_argument("params/counts_out/found must be non-null");
        const auto eqs = gc::equilibrium_bruteforce(to_core(*params));
        *found = static_cast<int32_t>(eqs.size());
        if (capacity < static_cast<int32_t>(eqs.size()))
            throw std::out_of_range("capacity too small for the equilibrium set");
        for (std::size_t i = 0; i < eqs.size(); ++i) counts_out[i] = eqs[i];
        return EG_OK;
    });
}

eg_status eg_complete_potential(const eg_game_params* params, int32_t n, double* out) {
    return guarded([&] {
        if (!params || !out) throw std::invalid_argument("params/out must be non-null");
        *out = gc::potential(to_core(*params), n);
        return EG_OK;
    });
}

eg_status eg_complete_social_cost(const eg_game_params* params, int32_t n, double* out) {
    return guarded([&] {
        if (!params || !out) throw std::invalid_argument("params/out must be non-null");
        const auto p = to_core(*params);
        p.validate();
        if (n < 0 || n > p.n) throw std::out_of_range("n must be in 0..N");
        *out = gc::social_cost(p, n);
        return EG_OK;
    });
}

eg_status eg_complete_mixed_cost_not_invest(const eg_game_params* params, double p,
                                            double* out) {
    return guarded([&] {
        if (!params || !out) throw std::invalid_argument("params/out must be non-null");
        *out = gc::mixed_cost_not_invest(to_core(*params), p);
        return EG_OK;
    });
}

/* ---------------- bipartite game ---------------- */

eg_status eg_bipartite_solve(const eg_bipartite_params* params,
                             eg_bipartite_report** out) {
    return guarded([&] {
        if (!params || !out) throw std::invalid_argument("params/out must be non-null");
        gb::BipartiteGame game{params->m, params->n, params->invest_cost,
                               params->infect_cost, params->tau};
        auto report = std::make_unique<eg_bipartite_report>();
        report->game = game;
        report->equilibria = gb::equilibria_enumerate(game);
        report->optimum = gb::social_optimum_bipartite(game);
        report->poa = gb::poa_bipartite(game);
        *out = report.release();
        return EG_OK;
    });
}

eg_status eg_bipartite_report_summary(const eg_bipartite_report* r,
                                      eg_bipartite_summary* out) {
    return guarded([&] {
        if (!r || !out) throw std::invalid_argument("report/out must be non-null");
        eg_bipartite_summary s{};
        s.pair_count = static_cast<int32_t>(r->equilibria.pairs.size());
        s.balanced_interior = r->equilibria.balanced_interior ? 1 : 0;
        s.condition2_holds = r->equilibria.condition2_holds ? 1 : 0;
        s.opt_case = r->optimum.case_id;
        s.opt_cost_continuous = r->optimum.cost;
        s.opt_n_continuous = r->optimum.n_cont;
        s.opt_m_continuous = r->optimum.m_cont;
        s.opt_n_int = r->optimum.n_int;
        s.opt_m_int = r->optimum.m_int;
        s.opt_cost_int = r->optimum.cost_int;
        s.poa = r->poa.poa;
        s.poa_degenerate = r->poa.degenerate ? 1 : 0;
        s.worst_eq_cost = r->poa.worst_eq_cost;
        s.poa_upper_bound = r->poa.upper_bound;
        s.poa_unbounded = r->poa.unbounded ? 1 : 0;
        *out = s;
        return EG_OK;
    });
}

eg_status eg_bipartite_report_pair(const eg_bipartite_report* r, int32_t index,
                                   eg_bipartite_pair* out) {
    return guarded([&] {
        if (!r || !out) throw std::invalid_argument("report/out must be non-null");
        if (index < 0 || index >= static_cast<int32_t>(r->equilibria.pairs.size()))
            throw std::out_of_range("pair index out of range");
        const auto& p = r->equilibria.pairs[index];
        *out = {p.n, p.m, p.v_m_here, p.v_m_up, p.v_n_here, p.v_n_up,
                p.interior ? 1 : 0};
        return EG_OK;
    });
}

eg_status eg_bipartite_social_cost(const eg_bipartite_params* params, int32_t n,
                                   int32_t m, double* out) {
    return guarded([&] {
        if (!params || !out) throw std::invalid_argument("params/out must be non-null");
        gb::BipartiteGame game{params->m, params->n, params->invest_cost,
                               params->infect_cost, params->tau};
        game.validate();
        if (n < 0 || n > game.n_size || m < 0 || m > game.m_size)
            throw std::out_of_range("counts out of range");
        *out = gb::social_cost(game, n, m);
        return EG_OK;
    });
}

void eg_bipartite_report_destroy(eg_bipartite_report* r) { delete r; }

/* ---------------- multi-community game ---------------- */

eg_status eg_multicomm_run(const int32_t* sizes, const double* taus, int32_t communities,
                           double invest_cost, double infect_cost, double u0,
                           double epsilon, int32_t max_iter, eg_multicomm_trace** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must be non-null");
        gm::MultiCommGame game{make_spec(sizes, taus, communities), invest_cost,
                               infect_cost};
        auto trace = gm::iterate(game, u0, epsilon, max_iter);
        *out = new eg_multicomm_trace{std::move(trace), communities};
        return EG_OK;
    });
}

int32_t eg_multicomm_trace_iterations(const eg_multicomm_trace* t) {
    return t ? t->trace.iterations : 0;
}

int32_t eg_multicomm_trace_communities(const eg_multicomm_trace* t) {
    return t ? t->communities : 0;
}

int32_t eg_multicomm_trace_converged(const eg_multicomm_trace* t) {
    return t && t->trace.converged ? 1 : 0;
}

int32_t eg_multicomm_trace_cycle_period(const eg_multicomm_trace* t) {
    return t && t->trace.cycle_detected ? t->trace.cycle_period : 0;
}

eg_status eg_multicomm_trace_u(const eg_multicomm_trace* t, int32_t k, double* out) {
    return guarded([&] {
        if (!t || !out) throw std::invalid_argument("trace/out must be non-null");
        if (k < 0 || k >= static_cast<int32_t>(t->trace.u_history.size()))
            throw std::out_of_range("iteration index out of range");
        *out = t->trace.u_history[k];
        return EG_OK;
    });
}

eg_status eg_multicomm_trace_n_star(const eg_multicomm_trace* t, int32_t k,
                                    int32_t* counts_out) {
    return guarded([&] {
        if (!t || !counts_out)
            throw std::invalid_argument("trace/counts_out must be non-null");
        if (k < 0 || k >= static_cast<int32_t>(t->trace.n_star_history.size()))
            throw std::out_of_range("iteration index out of range");
        const auto& v = t->trace.n_star_history[k];
        for (std::size_t i = 0; i < v.size(); ++i) counts_out[i] = v[i];
        return EG_OK;
    });
}

eg_status eg_multicomm_trace_bounds(const eg_multicomm_trace* t, int32_t k,
                                    double* g_bound, double* f_bound, int32_t* defined,
                                    int32_t* interior) {
    return guarded([&] {
        if (!t) throw std::invalid_argument("trace must be non-null");
        if (k < 0 || k >= static_cast<int32_t>(t->trace.f_bounds.size()))
            throw std::out_of_range("iteration index out of range");
        if (g_bound) *g_bound = t->trace.g_bounds[k];
        if (f_bound) *f_bound = t->trace.f_bounds[k];
        if (defined) *defined = t->trace.bounds_defined[k] ? 1 : 0;
        if (interior) *interior = t->trace.argmin_interior[k] ? 1 : 0;
        return EG_OK;
    });
}

eg_status eg_multicomm_community_equilibrium(const int32_t* sizes, const double* taus,
                                             int32_t communities, double invest_cost,
                                             double infect_cost, int32_t community,
                                             double u, int32_t* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must be non-null");
        gm::MultiCommGame game{make_spec(sizes, taus, communities), invest_cost,
                               infect_cost};
        *out = gm::community_equilibrium(game, community, u);
        return EG_OK;
    });
}

void eg_multicomm_trace_destroy(eg_multicomm_trace* t) { delete t; }

/* ---------------- RLA ---------------- */

eg_status eg_rla_run(const eg_rla_config* config, eg_rla_trace** out) {
    return guarded([&] {
        if (!config || !out) throw std::invalid_argument("config/out must be non-null");
        epigame::rla::RlaConfig c;
        c.params = to_core(config->params);
        c.b0 = config->b0;
        c.decay_k0 = config->decay_k0;
        c.p0 = config->p0;
        if (config->p0_vector)
            c.p0_vector.assign(config->p0_vector, config->p0_vector + config->params.n);
        c.epsilon_stop = config->epsilon_stop;
        c.stable_window = config->stable_window;
        c.max_steps = config->max_steps;
        c.seed = config->seed;
        c.keep_history = config->keep_history != 0;
        auto trace = epigame::rla::rla_run(c);
        *out = new eg_rla_trace{std::move(trace), config->params.n};
        return EG_OK;
    });
}

int64_t eg_rla_trace_steps(const eg_rla_trace* t) { return t ? t->trace.steps : 0; }

int32_t eg_rla_trace_converged(const eg_rla_trace* t) {
    return t && t->trace.converged ? 1 : 0;
}

int32_t eg_rla_trace_final_count(const eg_rla_trace* t) {
    return t ? t->trace.converged_n_star : 0;
}

eg_status eg_rla_trace_final_p(const eg_rla_trace* t, double* out) {
    return guarded([&] {
        if (!t || !out) throw std::invalid_argument("trace/out must be non-null");
        for (std::size_t i = 0; i < t->trace.final_p.size(); ++i)
            out[i] = t->trace.final_p[i];
        return EG_OK;
    });
}

eg_status eg_rla_trace_p(const eg_rla_trace* t, int64_t step, int32_t node,
                         double* out) {
    return guarded([&] {
        if (!t || !out) throw std::invalid_argument("trace/out must be non-null");
        if (step < 0 || step >= static_cast<int64_t>(t->trace.p_history.size()) ||
            node < 0 || node >= t->nodes)
            throw std::out_of_range("step/node out of range (history kept?)");
        *out = t->trace.p_history[step][node];
        return EG_OK;
    });
}

eg_status eg_rla_trace_action(const eg_rla_trace* t, int64_t step, int32_t node,
                              int32_t* out) {
    return guarded([&] {
        if (!t || !out) throw std::invalid_argument("trace/out must be non-null");
        if (step < 0 || step >= static_cast<int64_t>(t->trace.action_history.size()) ||
            node < 0 || node >= t->nodes)
            throw std::out_of_range("step/node out of range (history kept?)");
        *out = t->trace.action_history[step][node];
        return EG_OK;
    });
}

eg_status eg_rla_trace_invest_count(const eg_rla_trace* t, int64_t step, int32_t* out) {
    return guarded([&] {
        if (!t || !out) throw std::invalid_argument("trace/out must be non-null");
        if (step < 0 || step >= static_cast<int64_t>(t->trace.invest_counts.size()))
            throw std::out_of_range("step out of range (history kept?)");
        *out = t->trace.invest_counts[step];
        return EG_OK;
    });
}

void eg_rla_trace_destroy(eg_rla_trace* t) { delete t; }

eg_status eg_replicator_ode(const eg_game_params* params, double p0, double horizon,
                            double dt, double* t_out, double* p_out, int64_t capacity,
                            int64_t* length) {
    return guarded([&] {
        if (!params || !length)
            throw std::invalid_argument("params/length must be non-null");
        if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
        const int64_t needed =
            static_cast<int64_t>(std::ceil(horizon / dt - 1e-12)) + 1;
        *length = needed;
        if (!t_out || !p_out) return EG_OK;  // length query
        if (capacity < needed) throw std::out_of_range("capacity too small");
        const auto traj = epigame::rla::replicator_ode(to_core(*params), p0, horizon, dt);
        for (std::size_t i = 0; i < traj.t.size(); ++i) {
            t_out[i] = traj.t[i];
            p_out[i] = traj.p[i];
        }
        return EG_OK;
    });
}

} /* extern "C" */
