#ifndef EPIGAME_BIPARTITE_GAME_HPP
#define EPIGAME_BIPARTITE_GAME_HPP

#include <utility>
#include <vector>

// Investment game on the complete bipartite graph K_{M,N}. Equilibria are
// pairs (n*, m*) of non-investor counts per cluster; unlike the complete
// graph there can be several, including unbalanced ones.

namespace epigame::game_bipartite {

struct BipartiteGame {
    int m_size = 0;           // cluster M
    int n_size = 0;           // cluster N
    double invest_cost = 0;   // C
    double infect_cost = 0;   // H
    double tau = 0;

    double q() const { return invest_cost / infect_cost; }
    double coef_a() const { return tau * tau * (1.0 - q()); }
    double coef_b() const { return tau * q(); }
    void validate() const;
};

struct EquilibriumPair {
    int n = 0;  // non-investors in cluster N
    int m = 0;  // non-investors in cluster M
    // the four no-deviation inequality values
    double v_m_here = 0;  // v^(M)(m, n)
    double v_m_up = 0;    // v^(M)(m+1, n), 0 when m = M (condition vacuous)
    double v_n_here = 0;  // v^(N)(m, n)
    double v_n_up = 0;    // v^(N)(m, n+1), 0 when n = N
    bool interior = false;  // 0 < n < N and 0 < m < M
};

struct BipartiteEquilibria {
    std::vector<EquilibriumPair> pairs;  // sorted by (n, m)
    // |n - m| <= 1 over the interior pairs; boundary equilibria (a cluster
    // fully investing or fully exposed) can be arbitrarily unbalanced and
    // are outside the ceiling-system analysis.
    bool balanced_interior = true;
    bool condition2_holds = false;  // q >= 1/2, or the tau condition at q < 1/2
};

/// Exhaustive no-unilateral-deviation check over all (n, m) in
/// [0,N] x [0,M]. The lower inequalities are strict, the upper weak;
/// `slack` loosens the strict side for floating-point boundary cases
/// (default 0: exact as printed).
BipartiteEquilibria equilibria_enumerate(const BipartiteGame& g, double slack = 0.0);

/// Solutions of the coupled ceiling system
///   m = ceil(1/(tau(tau n(1-q) - q))) - 1,
///   n = ceil(1/(tau(tau m(1-q) - q))) - 1,
/// found by scanning n. Interior solutions coincide with the enumeration.
std::vector<std::pair<int, int>> equilibria_closed_form(const BipartiteGame& g);

double social_cost(const BipartiteGame& g, int n, int m);

struct BipartiteSocialOpt {
    int case_id = 0;          // 1: below threshold, 2: cluster boundary, 3: all exposed
    double cost = 0;          // continuous-relaxation optimum value
    double n_cont = 0;        // continuous optimal point
    double m_cont = 0;
    int n_int = 0;            // best integer pair by full grid search
    int m_int = 0;
    double cost_int = 0;
};

BipartiteSocialOpt social_optimum_bipartite(const BipartiteGame& g);

struct BipartitePoA {
    double poa = 1.0;           // worst equilibrium cost over integer-grid optimum
    bool degenerate = false;    // zero optimal cost with nonzero equilibrium cost
    double worst_eq_cost = 0;
    double opt_cost = 0;
    double upper_bound = 0;     // +inf below threshold
    bool unbounded = false;
};

BipartitePoA poa_bipartite(const BipartiteGame& g);

}  // namespace epigame::game_bipartite

#endif
