#ifndef EPIGAME_MULTICOMMUNITY_HPP
#define EPIGAME_MULTICOMMUNITY_HPP

#include <vector>

#include "nimfa.hpp"

// Parametric potential games on the core-coupled multi-community topology:
// with the core infection probability u held fixed, each community plays an
// independent potential game; an outer loop alternates the per-community
// equilibria with the core-probability update until u settles.

namespace epigame::game_multicommunity {

struct MultiCommGame {
    nimfa::MultiCommunitySpec spec;
    double invest_cost = 0;  // C, shared by all non-core players
    double infect_cost = 0;  // H

    double q() const { return invest_cost / infect_cost; }
    void validate() const;
};

/// Phi_m(n_m) = C(N_m - n_m) + H sum_{i=2}^{n_m} v_community(i, tau_m, u).
double parametric_potential(const MultiCommGame& g, int community, int n_m, double u);

/// argmin of the parametric potential over 0..N_m, ties toward smaller n_m.
int community_equilibrium(const MultiCommGame& g, int community, double u);

/// Bracket inversion n = floor(1/(tau_m(1-q)) - u/q) + 1 clamped to
/// [0, N_m] for q < 1 (N_m otherwise); cross-check for the argmin away
/// from boundary clamps.
int community_equilibrium_closed_form(const MultiCommGame& g, int community, double u);

struct BoundPair {
    double g = 0;  // lower bound on the next core probability
    double f = 0;  // upper bound
    bool g_defined = false;
    bool f_defined = false;
};

/// Decreasing bounding functions of the core update, defined for q < 1
/// where the respective denominators stay positive.
BoundPair bounding_functions(const MultiCommGame& g, double u);

struct MultiCommTrace {
    std::vector<double> u_history;                 // u[0], u[1], ...
    std::vector<std::vector<int>> n_star_history;  // n*(u[k]) per step
    std::vector<double> f_bounds;                  // f(u[k])
    std::vector<double> g_bounds;                  // g(u[k])
    std::vector<bool> bounds_defined;              // both denominators positive
    std::vector<bool> argmin_interior;             // no community clamped at 0 or N_m
    bool converged = false;
    int iterations = 0;
    double epsilon = 0;
    bool cycle_detected = false;
    int cycle_period = 0;
};

/// Alternates per-community equilibria at u[k] with the core update
/// u[k+1] = core_infection(n*(u[k]), u[k]) until |u[k+1] - u[k]| < epsilon.
/// Non-convergence (iteration cap or a detected cycle over the discrete
/// n* vectors, period up to 16) is reported in the trace, not thrown.
MultiCommTrace iterate(const MultiCommGame& g, double u0,
                       double epsilon = 1e-7, int max_iter = 1000);

}  // namespace epigame::game_multicommunity

#endif
