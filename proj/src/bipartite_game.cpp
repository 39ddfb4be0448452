#include "bipartite_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nimfa.hpp"

namespace epigame::game_bipartite {

using nimfa::v_bipartite;

namespace {

int snapped_ceil(double x) {
    const double r = std::nearbyint(x);
    if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x)))
        return static_cast<int>(r);
    return static_cast<int>(std::ceil(x));
}

}  // namespace

void BipartiteGame::validate() const {
    if (m_size < 1 || n_size < 1) throw std::invalid_argument("cluster sizes must be >= 1");
    if (!(invest_cost > 0.0)) throw std::invalid_argument("investment cost must be > 0");
    if (!(infect_cost > 0.0)) throw std::invalid_argument("infection cost must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
}

BipartiteEquilibria equilibria_enumerate(const BipartiteGame& g, double slack) {
    g.validate();
    const int M = g.m_size, N = g.n_size;
    const double C = g.invest_cost, H = g.infect_cost;

    BipartiteEquilibria out;
    const double q = g.q();
    out.condition2_holds =
        q >= 0.5 || (q < 1.0 && g.tau >= (1.0 + q) * (1.0 - 2.0 * q) / (2.0 * q * (1.0 - q)));

    for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= M; ++m) {
            const auto [vm, vn] = v_bipartite(m, n, g.tau);
            if (!(H * vm < C + slack) || !(H * vn < C + slack)) continue;
            EquilibriumPair pair;
            pair.n = n;
            pair.m = m;
            pair.v_m_here = vm;
            pair.v_n_here = vn;
            if (m < M) {
                pair.v_m_up = v_bipartite(m + 1, n, g.tau).first;
                if (!(C <= H * pair.v_m_up + slack)) continue;
            }
            if (n < N) {
                pair.v_n_up = v_bipartite(m, n + 1, g.tau).second;
                if (!(C <= H * pair.v_n_up + slack)) continue;
            }
            pair.interior = n > 0 && n < N && m > 0 && m < M;
            if (pair.interior && std::abs(n - m) > 1) out.balanced_interior = false;
            out.pairs.push_back(pair);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> equilibria_closed_form(const BipartiteGame& g) {
    g.validate();
    const int M = g.m_size, N = g.n_size;
    const double q = g.q();
    if (q >= 1.0) return {{N, M}};

    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= N; ++n) {
        const double d1 = g.tau * (g.tau * n * (1.0 - q) - q);
        if (d1 <= 0.0) continue;
        const int m = snapped_ceil(1.0 / d1) - 1;
        if (m < 0 || m > M) continue;
        const double d2 = g.tau * (g.tau * m * (1.0 - q) - q);
        if (d2 <= 0.0) continue;
        if (snapped_ceil(1.0 / d2) - 1 == n) out.emplace_back(n, m);
    }
    return out;
}

double social_cost(const BipartiteGame& g, int n, int m) {
    const auto [vm, vn] = v_bipartite(m, n, g.tau);
    return g.invest_cost * ((g.n_size - n) + (g.m_size - m)) +
           g.infect_cost * (n * vn + m * vm);
}

BipartiteSocialOpt social_optimum_bipartite(const BipartiteGame& g) {
    g.validate();
    const double M = g.m_size, N = g.n_size, tau = g.tau;
    const double t2mn = tau * tau * M * N;

    BipartiteSocialOpt out;
    if (t2mn <= 1.0) {
        out.case_id = 1;
        out.cost = 0.0;
        out.n_cont = N;
        out.m_cont = M;
    } else {
        const double ratio = tau * std::max(M, N) * (tau * (M + N) + 2.0) /
                             ((tau * M + 1.0) * (tau * N + 1.0));
        if (ratio >= g.q()) {
            out.case_id = 2;
            out.cost = g.invest_cost * (t2mn - 1.0) / (tau * tau * std::max(M, N));
            if (M >= N) {
                out.n_cont = 1.0 / (tau * tau * M);
                out.m_cont = M;
            } else {
                out.n_cont = N;
                out.m_cont = 1.0 / (tau * tau * N);
            }
        } else {
            out.case_id = 3;
            out.cost = g.infect_cost * (t2mn - 1.0) * (tau * (M + N) + 2.0) /
                       (tau * (tau * M + 1.0) * (tau * N + 1.0));
            out.n_cont = N;
            out.m_cont = M;
        }
    }

    out.cost_int = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= g.n_size; ++n) {
        for (int m = 0; m <= g.m_size; ++m) {
            const double s = social_cost(g, n, m);
            if (s < out.cost_int) {
                out.cost_int = s;
                out.n_int = n;
                out.m_int = m;
            }
        }
    }
    return out;
}

BipartitePoA poa_bipartite(const BipartiteGame& g) {
    const auto eqs = equilibria_enumerate(g);
    const auto opt = social_optimum_bipartite(g);

    BipartitePoA out;
    out.opt_cost = opt.cost_int;
    for (const auto& p : eqs.pairs)
        out.worst_eq_cost = std::max(out.worst_eq_cost, social_cost(g, p.n, p.m));

    if (out.opt_cost == 0.0) {
        if (out.worst_eq_cost == 0.0) {
            out.poa = 1.0;
        } else {
            out.degenerate = true;
        }
    } else {
        out.poa = out.worst_eq_cost / out.opt_cost;
    }

    const double M = g.m_size, N = g.n_size, tau = g.tau;
    const double above = tau * tau * M * N - 1.0;
    if (above <= 0.0) {
        out.unbounded = true;
        out.upper_bound = std::numeric_limits<double>::infinity();
    } else {
        const double inner =
            std::min(1.0 / (tau * std::max(M, N)),
                     g.infect_cost * (tau * (M + N) + 2.0) /
                         (g.invest_cost * (tau * M + 1.0) * (tau * N + 1.0)));
        out.upper_bound = tau * (M + N) / (above * inner);
    }
    if (!(out.upper_bound > std::max(2.0, g.q())))
        throw std::logic_error("bipartite PoA bound fell below max{2, C/H}");
    return out;
}

}  // namespace epigame::game_bipartite
