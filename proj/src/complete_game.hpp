#ifndef EPIGAME_COMPLETE_GAME_HPP
#define EPIGAME_COMPLETE_GAME_HPP

#include <vector>

// Protection-investment game on the complete graph: every node either pays
// a fixed investment cost or an infection cost proportional to its
// metastable infection probability on the overlay graph of non-investors.

namespace epigame::game_complete {

struct GameParams {
    int n = 0;                // player count
    double invest_cost = 0;   // C
    double infect_cost = 0;   // H
    double tau = 0;

    double q() const { return invest_cost / infect_cost; }
    void validate() const;
};

struct PureEquilibrium {
    int n_star = 0;               // non-investors at equilibrium
    double cost_invest = 0;       // C
    double cost_not_invest = 0;   // H v(n*)
    double potential_at_eq = 0;
};

/// Closed-form equilibrium count min{N, ceil(1/((1-C/H) tau))} for C < H,
/// N otherwise; the no-deviation inequalities are re-verified on return.
PureEquilibrium pure_equilibrium(const GameParams& p);

/// Potential Phi(n) = C(N-n) + H sum_{j=2}^{n} v(j); its minima over
/// 0..N are the pure equilibria.
double potential(const GameParams& p, int n);

/// Every n in 0..N passing the no-unilateral-deviation inequalities
/// H v(n) <= C and (n == N or C <= H v(n+1)). Oracle for pure_equilibrium.
std::vector<int> equilibrium_bruteforce(const GameParams& p);

struct SocialOptimum {
    int n_opt = 0;
    double cost = 0;
};

/// Minimizer of the social cost S(n) = C(N-n) + n H v(n). Candidates are
/// N plus both integers around 1 + 1/tau (the below-threshold plateau edge
/// and the first point of the increasing branch).
SocialOptimum social_optimum(const GameParams& p);

double social_cost(const GameParams& p, int n);

struct PoAReport {
    int n_star = 0;
    int n_opt = 0;
    double social_cost_eq = 0;
    double social_cost_opt = 0;
    double poa = 1.0;
    double poa_upper_bound = 0;  // 1/(1 - (1+1/tau)/N), +inf when N <= 1+1/tau
};

PoAReport poa_pure(const GameParams& p);

/// Expected cost of not investing against N-1 opponents who invest
/// independently with probability p. Stable up to N ~ 10^4 (log-space
/// binomial terms above N = 60).
double mixed_cost_not_invest(const GameParams& p, double prob);

struct MixedEquilibrium {
    double p_star = 0;             // exact symmetric equilibrium
    double p_hat_star = 0;         // mean-field closed form
    double expected_cost_invest = 0;
    double expected_cost_not = 0;
    int solver_iterations = 0;
};

/// Unique symmetric mixed equilibrium: p = 0 when investing is dominated
/// at p = 0, otherwise the single root of S0(p) = C by bisection.
MixedEquilibrium mixed_equilibrium_exact(const GameParams& p, double tol = 1e-10);

struct MixedApprox {
    double p_hat_star = 0;
    bool interior = false;
    double social_cost = 0;  // N*C at an interior equilibrium
};

MixedApprox mixed_equilibrium_approx(const GameParams& p);

struct MixedSocialOptimum {
    double p_opt = 0;
    double cost = 0;
    bool below_threshold = false;
    bool is_interval = false;    // C = H: every p in [lo, hi] is optimal
    double interval_lo = 0;
    double interval_hi = 0;
};

MixedSocialOptimum mixed_social_optimum(const GameParams& p);

struct PoAMixed {
    double exact = 1.0;      // equilibrium cost over the exact optimal cost
    double approx = 1.0;     // C / (min{C,H}(1 - 1/(tau(N-1))))
    double eq_cost = 0;
    double opt_cost_exact = 0;
};

PoAMixed poa_mixed(const GameParams& p);

/// Exact expected social cost N(p C + (1-p) S0(p)) minimized over p.
double exact_mixed_optimal_cost(const GameParams& p, double* argmin = nullptr);

struct StrategyComparison {
    double cost_pure = 0;    // S(n*)
    double cost_mixed = 0;   // N*C
    double ratio = 0;        // cost_pure / cost_mixed
    bool interior = false;   // interior mixed equilibrium exists
};

StrategyComparison compare_strategies(const GameParams& p);

}  // namespace epigame::game_complete

#endif
