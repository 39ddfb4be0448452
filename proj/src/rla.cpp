#include "rla.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nimfa.hpp"

namespace epigame::rla {

using nimfa::v_complete;

void RlaConfig::validate() const {
    params.validate();
    if (!(b0 > 0.0 && b0 <= 1.0)) throw std::invalid_argument("b0 must be in (0,1]");
    if (decay_k0 < 0.0) throw std::invalid_argument("decay_k0 must be >= 0");
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must be in [0,1]");
    if (!p0_vector.empty()) {
        if (p0_vector.size() != static_cast<std::size_t>(params.n))
            throw std::invalid_argument("p0_vector length must equal the player count");
        for (double v : p0_vector)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::invalid_argument("p0_vector entries must be in [0,1]");
    }
    if (!(epsilon_stop > 0.0)) throw std::invalid_argument("epsilon_stop must be > 0");
    if (stable_window < 1) throw std::invalid_argument("stable_window must be >= 1");
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
}

namespace {

// Fixed mapping from the engine's 64-bit output to [0,1); keeps action
// sequences bit-identical across platforms, unlike the distribution
// classes in <random>.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

RlaTrace rla_run(const RlaConfig& config) {
    config.validate();
    const auto& gp = config.params;
    const int n_players = gp.n;
    const double cost_scale = gp.invest_cost + gp.infect_cost;

    std::mt19937_64 rng(config.seed);
    std::vector<double> p = config.p0_vector.empty()
                                ? std::vector<double>(n_players, config.p0)
                                : config.p0_vector;
    std::vector<std::uint8_t> sigma(n_players);

    RlaTrace trace;
    trace.final_p = p;
    int quiet = 0;

    for (long k = 0; k < config.max_steps; ++k) {
        if (config.keep_history) trace.p_history.push_back(p);

        int investing = 0;
        for (int i = 0; i < n_players; ++i) {
            sigma[i] = uniform01(rng) < p[i] ? 1 : 0;
            investing += sigma[i];
        }
        const int exposed = n_players - investing;
        const double infect = gp.infect_cost * v_complete(exposed, gp.tau);
        const double b =
            config.decay_k0 > 0.0 ? config.b0 / (1.0 + k / config.decay_k0) : config.b0;

        double max_delta = 0.0;
        for (int i = 0; i < n_players; ++i) {
            const double cost = sigma[i] ? gp.invest_cost : infect;
            const double reward = 1.0 - cost / cost_scale;
            const double next = p[i] + b * reward * (sigma[i] - p[i]);
            max_delta = std::max(max_delta, std::fabs(next - p[i]));
            p[i] = next;
        }

        if (config.keep_history) {
            trace.action_history.push_back(sigma);
            trace.invest_counts.push_back(investing);
        }
        trace.steps = k + 1;
        trace.converged_n_star = exposed;

        quiet = max_delta < config.epsilon_stop ? quiet + 1 : 0;
        if (quiet >= config.stable_window) {
            trace.converged = true;
            break;
        }
    }
    trace.final_p = std::move(p);
    return trace;
}

OdeTrajectory replicator_ode(const game_complete::GameParams& params,
                             double p0, double horizon, double dt) {
    params.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (!(horizon >= 0.0)) throw std::invalid_argument("horizon must be >= 0");
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must be in [0,1]");

    const auto deriv = [&](double p) {
        const double overlay = (1.0 - p) * (params.n - 1) + 1.0;
        const double s0 = params.infect_cost * v_complete(overlay, params.tau);
        return p * (1.0 - p) * (s0 - params.invest_cost);
    };

    OdeTrajectory out;
    const long steps = static_cast<long>(std::ceil(horizon / dt - 1e-12));
    out.t.reserve(steps + 1);
    out.p.reserve(steps + 1);
    double p = p0;
    out.t.push_back(0.0);
    out.p.push_back(p);
    for (long k = 0; k < steps; ++k) {
        const double k1 = deriv(p);
        const double k2 = deriv(p + 0.5 * dt * k1);
        const double k3 = deriv(p + 0.5 * dt * k2);
        const double k4 = deriv(p + dt * k3);
        p += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        p = std::min(1.0, std::max(0.0, p));
        out.t.push_back(dt * (k + 1));
        out.p.push_back(p);
    }
    return out;
}

}  // namespace epigame::rla
