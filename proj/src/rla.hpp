#ifndef EPIGAME_RLA_HPP
#define EPIGAME_RLA_HPP

#include <cstdint>
#include <vector>

#include "complete_game.hpp"

// Decentralized reinforcement-learning play of the complete-graph game:
// every node keeps a private investment probability, samples a pure action
// each slot, observes only its own normalized cost and nudges the
// probability toward actions that performed well. The mean drift is the
// replicator dynamic, integrated here as the reference ODE.

namespace epigame::rla {

struct RlaConfig {
    game_complete::GameParams params;
    double b0 = 0.01;          // learning rate
    double decay_k0 = 0.0;     // > 0 switches to b[k] = b0 / (1 + k/k0)
    double p0 = 0.5;           // initial investment probability, broadcast
    std::vector<double> p0_vector;  // optional per-node override
    double epsilon_stop = 1e-4;
    int stable_window = 50;    // consecutive quiet steps required to stop
    long max_steps = 200000;
    std::uint64_t seed = 0;
    bool keep_history = true;

    void validate() const;
};

struct RlaTrace {
    // per-step records (only when keep_history is set)
    std::vector<std::vector<double>> p_history;      // p[k] used at step k
    std::vector<std::vector<std::uint8_t>> action_history;
    std::vector<int> invest_counts;                  // N - n[k]

    std::vector<double> final_p;
    bool converged = false;
    int converged_n_star = 0;  // non-investors at the last step
    long steps = 0;
};

RlaTrace rla_run(const RlaConfig& config);

struct OdeTrajectory {
    std::vector<double> t;
    std::vector<double> p;
};

/// Symmetric replicator dynamic p' = p(1-p)[S0(n(p)) - S1] with the
/// mean-field overlay size n(p) = (1-p)(N-1) + 1, fourth-order
/// Runge-Kutta at fixed step dt.
OdeTrajectory replicator_ode(const game_complete::GameParams& params,
                             double p0, double horizon, double dt);

}  // namespace epigame::rla

#endif
