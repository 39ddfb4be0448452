// Command-line front end for the epigame shared library. Every subcommand
// validates its flags, calls the C API and emits JSON (reports) or CSV
// (traces, sweeps). Exit codes: 0 success, 2 validation error, 3
// non-convergence.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epigame/epigame.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

// ---------- formatting ----------

std::string fmt_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Append-only JSON writer with explicit keys; key order is fixed by the
// call sequence, never by a map.
class JsonWriter {
public:
    JsonWriter& begin_object() { return punct("{"); }
    JsonWriter& end_object() { comma_ = true; return raw("}"); }
    JsonWriter& begin_array() { return punct("["); }
    JsonWriter& end_array() { comma_ = true; return raw("]"); }

    JsonWriter& key(const std::string& k) {
        if (comma_) out_ += ',';
        out_ += '"';
        out_ += json_escape(k);
        out_ += "\":";
        comma_ = false;
        return *this;
    }
    JsonWriter& value(double v) { return item(fmt_double(v)); }
    JsonWriter& value(int v) { return item(std::to_string(v)); }
    JsonWriter& value(long long v) { return item(std::to_string(v)); }
    JsonWriter& value(bool v) { return item(v ? "true" : "false"); }
    JsonWriter& value(const std::string& v) { return item('"' + json_escape(v) + '"'); }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    const std::string& str() const { return out_; }

private:
    JsonWriter& punct(const char* s) {
        if (comma_) out_ += ',';
        out_ += s;
        comma_ = false;
        return *this;
    }
    JsonWriter& raw(const char* s) {
        out_ += s;
        return *this;
    }
    JsonWriter& item(const std::string& s) {
        if (comma_) out_ += ',';
        out_ += s;
        comma_ = true;
        return *this;
    }
    std::string out_;
    bool comma_ = false;
};

[[noreturn]] void fail(int code, const std::string& status, const std::string& message) {
    JsonWriter w;
    w.begin_object().key("error").value(message).key("status").value(status).end_object();
    std::cerr << w.str() << "\n";
    std::exit(code);
}

void check(eg_status st) {
    if (st == EG_OK) return;
    const std::string name = eg_status_name(st);
    const std::string detail = eg_last_error();
    if (st == EG_ERROR_NO_CONVERGENCE) fail(kExitNoConvergence, name, detail);
    fail(kExitValidation, name, detail);
}

// ---------- output destinations ----------

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("EPIGAME_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + path;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
        return;
    }
    const std::string full = resolve_out_path(path);
    std::ofstream out(full);
    if (!out) fail(kExitValidation, "io_error", "cannot open output file: " + full);
    out << content;
    if (!content.empty() && content.back() != '\n') out << "\n";
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            fail(kExitValidation, "invalid_argument", "bad integer list entry: " + item);
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            fail(kExitValidation, "invalid_argument", "bad number list entry: " + item);
        }
    }
    return out;
}

void json_params(JsonWriter& w, const eg_game_params& p) {
    w.key("params").begin_object();
    w.key("n").value(p.n);
    w.key("c").value(p.invest_cost);
    w.key("h").value(p.infect_cost);
    w.key("tau").value(p.tau);
    w.end_object();
}

// ---------- subcommand payloads ----------

struct CompleteArgs {
    eg_game_params params{};
    std::string out;
};

int run_complete(const CompleteArgs& a) {
    eg_complete_report r{};
    check(eg_complete_solve(&a.params, &r));
    std::vector<int32_t> eqs(a.params.n + 1);
    int32_t found = 0;
    check(eg_complete_bruteforce(&a.params, eqs.data(),
                                 static_cast<int32_t>(eqs.size()), &found));

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("command").value("complete");
    json_params(w, a.params);
    w.key("result").begin_object();
    w.key("n_star").value(r.n_star);
    w.key("cost_invest").value(r.cost_invest);
    w.key("cost_not_invest").value(r.cost_not_invest);
    w.key("potential_at_equilibrium").value(r.potential_at_eq);
    w.key("equilibria_bruteforce").begin_array();
    for (int32_t i = 0; i < found; ++i) w.value(eqs[i]);
    w.end_array();
    w.key("n_opt").value(r.n_opt);
    w.key("social_cost_equilibrium").value(r.social_cost_eq);
    w.key("social_cost_optimum").value(r.social_cost_opt);
    w.key("poa_pure").value(r.poa_pure);
    w.key("poa_upper_bound").value(r.poa_upper_bound);
    w.key("mixed").begin_object();
    w.key("p_star").value(r.p_star);
    w.key("p_hat_star").value(r.p_hat_star);
    w.key("expected_cost_invest").value(r.expected_cost_invest);
    w.key("expected_cost_not_invest").value(r.expected_cost_not_invest);
    w.key("solver_iterations").value(r.mixed_solver_iterations);
    w.key("interior").value(r.mixed_interior != 0);
    w.key("p_hat_opt").value(r.p_hat_opt);
    w.key("optimal_cost").value(r.mixed_opt_cost);
    w.key("below_threshold").value(r.mixed_opt_below_threshold != 0);
    w.key("optimal_interval").begin_array();
    if (r.mixed_opt_is_interval) {
        w.value(r.mixed_opt_interval_lo);
        w.value(r.mixed_opt_interval_hi);
    }
    w.end_array();
    w.key("poa_mixed_exact").value(r.poa_mixed_exact);
    w.key("poa_mixed_approx").value(r.poa_mixed_approx);
    w.key("equilibrium_cost").value(r.mixed_eq_cost);
    w.key("optimal_cost_exact").value(r.mixed_opt_cost_exact);
    w.end_object();
    w.key("cost_pure_strategy").value(r.cost_pure_strategy);
    w.key("cost_mixed_strategy").value(r.cost_mixed_strategy);
    w.key("strategy_cost_ratio").value(r.strategy_cost_ratio);
    w.end_object();
    w.end_object();
    write_output(a.out, w.str());
    return 0;
}

struct BipartiteArgs {
    eg_bipartite_params params{};
    std::string out;
};

int run_bipartite(const BipartiteArgs& a) {
    eg_bipartite_report* report = nullptr;
    check(eg_bipartite_solve(&a.params, &report));
    eg_bipartite_summary s{};
    check(eg_bipartite_report_summary(report, &s));

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("command").value("bipartite");
    w.key("params").begin_object();
    w.key("m").value(a.params.m);
    w.key("n").value(a.params.n);
    w.key("c").value(a.params.invest_cost);
    w.key("h").value(a.params.infect_cost);
    w.key("tau").value(a.params.tau);
    w.end_object();
    w.key("result").begin_object();
    w.key("equilibria").begin_array();
    for (int32_t i = 0; i < s.pair_count; ++i) {
        eg_bipartite_pair p{};
        check(eg_bipartite_report_pair(report, i, &p));
        w.begin_object();
        w.key("n").value(p.n);
        w.key("m").value(p.m);
        w.key("interior").value(p.interior != 0);
        w.key("v_m").value(p.v_m_here);
        w.key("v_m_up").value(p.v_m_up);
        w.key("v_n").value(p.v_n_here);
        w.key("v_n_up").value(p.v_n_up);
        w.end_object();
    }
    w.end_array();
    w.key("balanced_interior").value(s.balanced_interior != 0);
    w.key("condition2_holds").value(s.condition2_holds != 0);
    w.key("social_optimum").begin_object();
    w.key("case").value(s.opt_case);
    w.key("cost_continuous").value(s.opt_cost_continuous);
    w.key("n_continuous").value(s.opt_n_continuous);
    w.key("m_continuous").value(s.opt_m_continuous);
    w.key("n_int").value(s.opt_n_int);
    w.key("m_int").value(s.opt_m_int);
    w.key("cost_int").value(s.opt_cost_int);
    w.end_object();
    w.key("poa").value(s.poa);
    w.key("poa_degenerate").value(s.poa_degenerate != 0);
    w.key("worst_equilibrium_cost").value(s.worst_eq_cost);
    w.key("poa_upper_bound").value(s.poa_upper_bound);
    w.key("poa_unbounded").value(s.poa_unbounded != 0);
    w.end_object();
    w.end_object();
    eg_bipartite_report_destroy(report);
    write_output(a.out, w.str());
    return 0;
}

struct MulticommArgs {
    std::string sizes_str, taus_str;
    double c = 0, h = 0, q = -1;
    double u0 = 0.5, eps = 1e-7;
    int max_iter = 1000;
    bool sweep_q = false;
    std::string target_n = "6,3";
    double target_u = 0.8389, target_u_tol = 1e-3;
    std::string out, trace;
};

void multicomm_trace_csv(const eg_multicomm_trace* t, int communities,
                         const std::string& path) {
    std::ostringstream csv;
    csv << "k,u,u_next,f,g,bounds_defined,argmin_interior";
    for (int c = 0; c < communities; ++c) csv << ",n_star_" << (c + 1);
    csv << "\n";
    const int iters = eg_multicomm_trace_iterations(t);
    std::vector<int32_t> counts(communities);
    for (int k = 0; k < iters; ++k) {
        double u = 0, un = 0, gb = 0, fb = 0;
        int32_t defined = 0, interior = 0;
        check(eg_multicomm_trace_u(t, k, &u));
        check(eg_multicomm_trace_u(t, k + 1, &un));
        check(eg_multicomm_trace_bounds(t, k, &gb, &fb, &defined, &interior));
        check(eg_multicomm_trace_n_star(t, k, counts.data()));
        csv << k << ',' << fmt_double(u) << ',' << fmt_double(un) << ','
            << fmt_double(fb) << ',' << fmt_double(gb) << ',' << defined << ','
            << interior;
        for (int c = 0; c < communities; ++c) csv << ',' << counts[c];
        csv << "\n";
    }
    write_output(path, csv.str());
}

void multicomm_summary_json(JsonWriter& w, const eg_multicomm_trace* t,
                            int communities) {
    const int iters = eg_multicomm_trace_iterations(t);
    double u_final = 0;
    check(eg_multicomm_trace_u(t, iters, &u_final));
    std::vector<int32_t> counts(communities);
    check(eg_multicomm_trace_n_star(t, iters - 1, counts.data()));
    w.key("converged").value(eg_multicomm_trace_converged(t) != 0);
    w.key("iterations").value(iters);
    w.key("cycle_period").value(eg_multicomm_trace_cycle_period(t));
    w.key("final_u").value(u_final);
    w.key("final_n_star").begin_array();
    for (int c = 0; c < communities; ++c) w.value(counts[c]);
    w.end_array();
}

int run_multicomm(const MulticommArgs& a) {
    const auto sizes = parse_int_list(a.sizes_str);
    const auto taus = parse_double_list(a.taus_str);
    if (sizes.size() != taus.size())
        fail(kExitValidation, "invalid_argument", "sizes and taus must have equal length");
    const int m = static_cast<int>(sizes.size());
    std::vector<int32_t> sz(sizes.begin(), sizes.end());

    if (a.sweep_q) {
        const auto target = parse_int_list(a.target_n);
        JsonWriter w;
        w.begin_object();
        w.key("schema_version").value(1);
        w.key("command").value("multicomm-sweep");
        w.key("target").begin_object();
        w.key("n_star").begin_array();
        for (int v : target) w.value(v);
        w.end_array();
        w.key("u").value(a.target_u);
        w.key("u_tol").value(a.target_u_tol);
        w.end_object();
        w.key("sweep").begin_array();
        bool any = false;
        for (int i = 1; i <= 19; ++i) {
            const double q = 0.05 * i;
            eg_multicomm_trace* t = nullptr;
            check(eg_multicomm_run(sz.data(), taus.data(), m, q, 1.0, a.u0, a.eps,
                                   a.max_iter, &t));
            const int iters = eg_multicomm_trace_iterations(t);
            double u_final = 0;
            check(eg_multicomm_trace_u(t, iters, &u_final));
            std::vector<int32_t> counts(m);
            check(eg_multicomm_trace_n_star(t, iters - 1, counts.data()));
            bool match = eg_multicomm_trace_converged(t) != 0 &&
                         std::fabs(u_final - a.target_u) <= a.target_u_tol &&
                         target.size() == counts.size();
            if (match)
                for (int c = 0; c < m; ++c)
                    if (counts[c] != target[c]) match = false;
            any = any || match;
            w.begin_object();
            w.key("q").value(q);
            multicomm_summary_json(w, t, m);
            w.key("reproduces_target").value(match);
            w.end_object();
            eg_multicomm_trace_destroy(t);
        }
        w.end_array();
        w.key("any_q_reproduces_target").value(any);
        w.end_object();
        write_output(a.out, w.str());
        return 0;
    }

    double c = a.c, h = a.h;
    if (a.q >= 0) {
        c = a.q;
        h = 1.0;
    }
    if (!(c > 0) || !(h > 0))
        fail(kExitValidation, "invalid_argument", "provide --c and --h, or --q");

    eg_multicomm_trace* t = nullptr;
    check(eg_multicomm_run(sz.data(), taus.data(), m, c, h, a.u0, a.eps, a.max_iter, &t));
    if (!a.trace.empty()) multicomm_trace_csv(t, m, a.trace);

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("command").value("multicomm");
    w.key("params").begin_object();
    w.key("sizes").begin_array();
    for (int v : sizes) w.value(v);
    w.end_array();
    w.key("taus").begin_array();
    for (double v : taus) w.value(v);
    w.end_array();
    w.key("c").value(c);
    w.key("h").value(h);
    w.key("u0").value(a.u0);
    w.key("epsilon").value(a.eps);
    w.key("max_iter").value(a.max_iter);
    w.end_object();
    w.key("result").begin_object();
    multicomm_summary_json(w, t, m);
    w.end_object();
    w.end_object();
    const bool converged = eg_multicomm_trace_converged(t) != 0;
    eg_multicomm_trace_destroy(t);
    write_output(a.out, w.str());
    return converged ? 0 : kExitNoConvergence;
}

struct RlaArgs {
    eg_game_params params{};
    double b0 = 0.01, decay_k0 = 0.0, p0 = 0.5, eps = 1e-4;
    int window = 50;
    long long max_steps = 200000;
    std::uint64_t seed = 0;
    std::string out, trace;
};

int run_rla(const RlaArgs& a) {
    eg_rla_config cfg{};
    cfg.params = a.params;
    cfg.b0 = a.b0;
    cfg.decay_k0 = a.decay_k0;
    cfg.p0 = a.p0;
    cfg.p0_vector = nullptr;
    cfg.epsilon_stop = a.eps;
    cfg.stable_window = a.window;
    cfg.max_steps = a.max_steps;
    cfg.seed = a.seed;
    cfg.keep_history = a.trace.empty() ? 0 : 1;

    eg_rla_trace* t = nullptr;
    check(eg_rla_run(&cfg, &t));

    if (!a.trace.empty()) {
        std::ostringstream csv;
        csv << "step,node,p,sigma,cost\n";
        const int64_t steps = eg_rla_trace_steps(t);
        for (int64_t k = 0; k < steps; ++k) {
            int32_t investing = 0;
            check(eg_rla_trace_invest_count(t, k, &investing));
            const int exposed = a.params.n - investing;
            const double infect =
                a.params.infect_cost * eg_nimfa_v_complete(exposed, a.params.tau);
            for (int32_t i = 0; i < a.params.n; ++i) {
                double p = 0;
                int32_t sigma = 0;
                check(eg_rla_trace_p(t, k, i, &p));
                check(eg_rla_trace_action(t, k, i, &sigma));
                csv << k << ',' << i << ',' << fmt_double(p) << ',' << sigma << ','
                    << fmt_double(sigma ? a.params.invest_cost : infect) << "\n";
            }
        }
        write_output(a.trace, csv.str());
    }

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("command").value("rla");
    json_params(w, a.params);
    w.key("config").begin_object();
    w.key("b0").value(a.b0);
    w.key("decay_k0").value(a.decay_k0);
    w.key("p0").value(a.p0);
    w.key("epsilon_stop").value(a.eps);
    w.key("stable_window").value(a.window);
    w.key("max_steps").value(a.max_steps);
    w.key("seed").value(static_cast<long long>(a.seed));
    w.end_object();
    w.key("result").begin_object();
    w.key("steps").value(static_cast<long long>(eg_rla_trace_steps(t)));
    w.key("converged").value(eg_rla_trace_converged(t) != 0);
    w.key("final_non_investors").value(eg_rla_trace_final_count(t));
    std::vector<double> fp(a.params.n);
    check(eg_rla_trace_final_p(t, fp.data()));
    w.key("final_p").begin_array();
    for (double p : fp) w.value(p);
    w.end_array();
    w.end_object();
    w.end_object();
    const bool converged = eg_rla_trace_converged(t) != 0;
    eg_rla_trace_destroy(t);
    write_output(a.out, w.str());
    return converged ? 0 : kExitNoConvergence;
}

struct NimfaArgs {
    std::string edges;
    int min_nodes = 0;
    double tau = 0;
    double tol = 1e-12;
    long long max_iter = 1000000;
    std::string out;
};

int run_nimfa(const NimfaArgs& a) {
    eg_graph* g = nullptr;
    check(eg_graph_load_edge_list(a.edges.c_str(), a.min_nodes, &g));
    const int32_t n = eg_graph_node_count(g);
    std::vector<double> v(n);
    int32_t above = 0;
    double residual = 0;
    int64_t iterations = 0;
    const eg_status st =
        eg_nimfa_solve(g, a.tau, a.tol, a.max_iter, v.data(), &above, &residual,
                       &iterations);
    eg_graph_destroy(g);
    check(st);

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("command").value("nimfa");
    w.key("params").begin_object();
    w.key("edges").value(a.edges);
    w.key("tau").value(a.tau);
    w.key("tol").value(a.tol);
    w.key("max_iter").value(a.max_iter);
    w.end_object();
    w.key("result").begin_object();
    w.key("nodes").value(n);
    w.key("above_threshold").value(above != 0);
    w.key("residual").value(residual);
    w.key("iterations").value(static_cast<long long>(iterations));
    w.key("v").begin_array();
    for (double x : v) w.value(x);
    w.end_array();
    w.end_object();
    w.end_object();
    write_output(a.out, w.str());
    return 0;
}

struct SweepArgs {
    std::string param;  // n | tau | q | mn
    double from = 0, to = 0, step = 0;
    eg_game_params base{};
    std::string out;
};

void sweep_complete_row(std::ostringstream& csv, const std::string& param, double value,
                        const eg_game_params& p) {
    eg_complete_report r{};
    check(eg_complete_solve(&p, &r));
    csv << param << ',' << fmt_double(value) << ',' << p.n << ','
        << fmt_double(p.invest_cost) << ',' << fmt_double(p.infect_cost) << ','
        << fmt_double(p.tau) << ',' << r.n_star << ',' << r.n_opt << ','
        << fmt_double(r.social_cost_eq) << ',' << fmt_double(r.social_cost_opt) << ','
        << fmt_double(r.poa_pure) << ',' << fmt_double(r.poa_upper_bound) << ','
        << fmt_double(r.p_star) << ',' << fmt_double(r.p_hat_star) << ','
        << fmt_double(r.poa_mixed_exact) << ',' << fmt_double(r.poa_mixed_approx) << ','
        << fmt_double(r.cost_pure_strategy) << ',' << fmt_double(r.cost_mixed_strategy)
        << ',' << fmt_double(r.strategy_cost_ratio) << "\n";
}

int run_sweep(const SweepArgs& a) {
    if (!(a.step > 0) || a.to < a.from)
        fail(kExitValidation, "invalid_argument", "sweep range must satisfy from <= to, step > 0");

    std::ostringstream csv;
    if (a.param == "n" || a.param == "tau" || a.param == "q") {
        csv << "param,value,n,c,h,tau,n_star,n_opt,social_cost_eq,social_cost_opt,"
               "poa_pure,poa_upper_bound,p_star,p_hat_star,poa_mixed_exact,"
               "poa_mixed_approx,cost_pure,cost_mixed,cost_ratio\n";
        int rows = 0;
        for (double x = a.from; x <= a.to + 1e-12; x += a.step) {
            eg_game_params p = a.base;
            if (a.param == "n") {
                p.n = static_cast<int32_t>(std::llround(x));
            } else if (a.param == "tau") {
                p.tau = x;
            } else {
                p.invest_cost = x * p.infect_cost;  // q sweep at fixed H
            }
            sweep_complete_row(csv, a.param, x, p);
            ++rows;
        }
        if (rows == 0) fail(kExitValidation, "invalid_argument", "empty sweep range");
    } else if (a.param == "mn") {
        // balanced bipartite K_{k,k} against the complete graph on 2k nodes
        csv << "param,value,m,n,c,h,tau,bipartite_poa,bipartite_bound,bipartite_pairs,"
               "complete_n,complete_poa,complete_bound\n";
        int rows = 0;
        for (double x = a.from; x <= a.to + 1e-12; x += a.step) {
            const int k = static_cast<int>(std::llround(x));
            eg_bipartite_params bp{k, k, a.base.invest_cost, a.base.infect_cost,
                                   a.base.tau};
            eg_bipartite_report* rep = nullptr;
            check(eg_bipartite_solve(&bp, &rep));
            eg_bipartite_summary s{};
            check(eg_bipartite_report_summary(rep, &s));
            eg_bipartite_report_destroy(rep);
            eg_game_params cp = a.base;
            cp.n = 2 * k;
            eg_complete_report cr{};
            check(eg_complete_solve(&cp, &cr));
            csv << "mn," << k << ',' << k << ',' << k << ','
                << fmt_double(a.base.invest_cost) << ',' << fmt_double(a.base.infect_cost)
                << ',' << fmt_double(a.base.tau) << ',' << fmt_double(s.poa) << ','
                << fmt_double(s.poa_upper_bound) << ',' << s.pair_count << ',' << 2 * k
                << ',' << fmt_double(cr.poa_pure) << ',' << fmt_double(cr.poa_upper_bound)
                << "\n";
            ++rows;
        }
        if (rows == 0) fail(kExitValidation, "invalid_argument", "empty sweep range");
    } else {
        fail(kExitValidation, "invalid_argument",
             "unknown sweep parameter (expected n, tau, q or mn): " + a.param);
    }
    write_output(a.out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers for SIS protection games on networks"};
    app.require_subcommand(1);

    CompleteArgs ca;
    auto* complete = app.add_subcommand(
        "complete", "Investment game on the complete graph: full report");
    complete->add_option("--n", ca.params.n, "player count")->required();
    complete->add_option("--c", ca.params.invest_cost, "investment cost")->required();
    complete->add_option("--h", ca.params.infect_cost, "infection cost")->required();
    complete->add_option("--tau", ca.params.tau, "effective spreading rate")->required();
    complete->add_option("--out", ca.out, "output path (default stdout)");

    BipartiteArgs ba;
    auto* bipartite = app.add_subcommand(
        "bipartite", "Investment game on the complete bipartite graph");
    bipartite->add_option("--m", ba.params.m, "cluster M size")->required();
    bipartite->add_option("--n", ba.params.n, "cluster N size")->required();
    bipartite->add_option("--c", ba.params.invest_cost, "investment cost")->required();
    bipartite->add_option("--h", ba.params.infect_cost, "infection cost")->required();
    bipartite->add_option("--tau", ba.params.tau, "effective spreading rate")->required();
    bipartite->add_option("--out", ba.out, "output path (default stdout)");

    MulticommArgs ma;
    auto* multicomm = app.add_subcommand(
        "multicomm", "Iterative equilibrium on the multi-community topology");
    multicomm->add_option("--sizes", ma.sizes_str, "community sizes, comma separated")
        ->required();
    multicomm->add_option("--taus", ma.taus_str, "per-community rates, comma separated")
        ->required();
    multicomm->add_option("--c", ma.c, "investment cost");
    multicomm->add_option("--h", ma.h, "infection cost");
    multicomm->add_option("--q", ma.q, "cost ratio C/H (sets C=q, H=1)");
    multicomm->add_option("--u0", ma.u0, "initial core probability");
    multicomm->add_option("--eps", ma.eps, "stopping tolerance");
    multicomm->add_option("--max-iter", ma.max_iter, "iteration cap");
    multicomm->add_flag("--sweep-q", ma.sweep_q,
                        "sweep q over 0.05..0.95 and report target reproduction");
    multicomm->add_option("--target-n", ma.target_n, "target equilibrium for --sweep-q");
    multicomm->add_option("--target-u", ma.target_u, "target core probability");
    multicomm->add_option("--target-u-tol", ma.target_u_tol, "target tolerance");
    multicomm->add_option("--out", ma.out, "summary output path (default stdout)");
    multicomm->add_option("--trace", ma.trace, "iteration trace CSV path");

    RlaArgs ra;
    auto* rla = app.add_subcommand(
        "rla", "Decentralized reinforcement-learning play of the complete-graph game");
    rla->add_option("--n", ra.params.n, "player count")->required();
    rla->add_option("--c", ra.params.invest_cost, "investment cost")->required();
    rla->add_option("--h", ra.params.infect_cost, "infection cost")->required();
    rla->add_option("--tau", ra.params.tau, "effective spreading rate")->required();
    rla->add_option("--b0", ra.b0, "learning rate");
    rla->add_option("--decay-k0", ra.decay_k0, "decay constant, 0 for constant rate");
    rla->add_option("--p0", ra.p0, "initial investment probability");
    rla->add_option("--eps", ra.eps, "per-step stopping tolerance");
    rla->add_option("--window", ra.window, "quiet steps required to stop");
    rla->add_option("--max-steps", ra.max_steps, "step cap");
    rla->add_option("--seed", ra.seed, "random seed");
    rla->add_option("--out", ra.out, "summary output path (default stdout)");
    rla->add_option("--trace", ra.trace, "per-step trace CSV path");

    NimfaArgs na;
    auto* nimfa = app.add_subcommand(
        "nimfa", "Steady-state infection probabilities for an edge-list graph");
    nimfa->add_option("--edges", na.edges, "edge-list file, one 'i j' pair per line")
        ->required();
    nimfa->add_option("--nodes", na.min_nodes, "minimum node count");
    nimfa->add_option("--tau", na.tau, "effective spreading rate")->required();
    nimfa->add_option("--tol", na.tol, "fixed-point tolerance");
    nimfa->add_option("--max-iter", na.max_iter, "iteration cap");
    nimfa->add_option("--out", na.out, "output path (default stdout)");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Parameter sweep, one CSV row per point");
    sweep->add_option("--param", sa.param, "swept parameter: n, tau, q or mn")
        ->required();
    sweep->add_option("--from", sa.from, "range start")->required();
    sweep->add_option("--to", sa.to, "range end")->required();
    sweep->add_option("--step", sa.step, "range step")->required();
    sweep->add_option("--n", sa.base.n, "player count (fixed)");
    sweep->add_option("--c", sa.base.invest_cost, "investment cost")->required();
    sweep->add_option("--h", sa.base.infect_cost, "infection cost")->required();
    sweep->add_option("--tau", sa.base.tau, "effective spreading rate");
    sweep->add_option("--out", sa.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        JsonWriter w;
        w.begin_object()
            .key("error")
            .value(e.what())
            .key("status")
            .value("invalid_argument")
            .end_object();
        std::cerr << w.str() << "\n";
        return kExitValidation;
    }

    if (complete->parsed()) return run_complete(ca);
    if (bipartite->parsed()) return run_bipartite(ba);
    if (multicomm->parsed()) return run_multicomm(ma);
    if (rla->parsed()) return run_rla(ra);
    if (nimfa->parsed()) return run_nimfa(na);
    if (sweep->parsed()) return run_sweep(sa);
    return kExitValidation;
}
