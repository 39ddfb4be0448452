#include "multicommunity.hpp"

#include <cmath>
#include <stdexcept>

namespace epigame::game_multicommunity {

using nimfa::core_infection;
using nimfa::v_community;

void MultiCommGame::validate() const {
    spec.validate();
    if (!(invest_cost > 0.0)) throw std::invalid_argument("investment cost must be > 0");
    if (!(infect_cost > 0.0)) throw std::invalid_argument("infection cost must be > 0");
}

namespace {

void check_community(const MultiCommGame& g, int community) {
    if (community < 0 || community >= g.spec.communities())
        throw std::out_of_range("community index out of range");
}

}  // namespace

double parametric_potential(const MultiCommGame& g, int community, int n_m, double u) {
    g.validate();
    check_community(g, community);
    const int cap = g.spec.sizes[community];
    if (n_m < 0 || n_m > cap) throw std::out_of_range("n_m must be in 0..N_m");
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("u must be in [0,1]");
    const double tau = g.spec.taus[community];
    double phi = g.invest_cost * (cap - n_m);
    for (int i = 2; i <= n_m; ++i) phi += g.infect_cost * v_community(i, tau, u);
    return phi;
}

int community_equilibrium(const MultiCommGame& g, int community, double u) {
    g.validate();
    check_community(g, community);
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("u must be in [0,1]");
    const int cap = g.spec.sizes[community];
    const double tau = g.spec.taus[community];

    int best = 0;
    double best_phi = g.invest_cost * cap;
    double phi = best_phi;
    for (int n = 1; n <= cap; ++n) {
        phi -= g.invest_cost;
        if (n >= 2) phi += g.infect_cost * v_community(n, tau, u);
        if (phi < best_phi) {
            best_phi = phi;
            best = n;
        }
    }
    return best;
}

int community_equilibrium_closed_form(const MultiCommGame& g, int community, double u) {
    g.validate();
    check_community(g, community);
    const int cap = g.spec.sizes[community];
    const double q = g.q();
    if (q >= 1.0) return cap;
    const double tau = g.spec.taus[community];
    const double lower = 1.0 / (tau * (1.0 - q)) - u / q;
    const double c = std::floor(lower) + 1.0;
    if (c <= 0.0) return 0;
    if (c >= static_cast<double>(cap)) return cap;
    return static_cast<int>(c);
}

BoundPair bounding_functions(const MultiCommGame& g, double u) {
    g.validate();
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("u must be in [0,1]");
    const double q = g.q();
    BoundPair out;
    if (q >= 1.0) return out;  // bounds are derived only for q < 1

    double tau_sum = 0.0;
    for (double t : g.spec.taus) tau_sum += t;
    const double M = g.spec.communities();
    const double base = 1.0 + M * q / (1.0 - q) - tau_sum;

    const double g_den = base - u * tau_sum;
    if (g_den > 0.0) {
        out.g_defined = true;
        out.g = 1.0 - 1.0 / g_den;
    }
    const double f_den = base + (1.0 + q) * tau_sum - u * tau_sum;
    if (f_den > 0.0) {
        out.f_defined = true;
        out.f = 1.0 - 1.0 / f_den;
    }
    return out;
}

MultiCommTrace iterate(const MultiCommGame& g, double u0, double epsilon, int max_iter) {
    g.validate();
    if (!(u0 >= 0.0 && u0 <= 1.0)) throw std::invalid_argument("u0 must be in [0,1]");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    constexpr int kCycleWindow = 16;
    const int m = g.spec.communities();

    MultiCommTrace trace;
    trace.epsilon = epsilon;
    trace.u_history.push_back(u0);

    double u = u0;
    for (int k = 0; k < max_iter; ++k) {
        std::vector<int> n_star(m);
        bool interior = true;
        for (int c = 0; c < m; ++c) {
            n_star[c] = community_equilibrium(g, c, u);
            if (n_star[c] == 0 || n_star[c] == g.spec.sizes[c]) interior = false;
        }
        const auto bounds = bounding_functions(g, u);
        const double next = core_infection(g.spec, n_star, u);

        trace.n_star_history.push_back(std::move(n_star));
        trace.f_bounds.push_back(bounds.f_defined ? bounds.f : 0.0);
        trace.g_bounds.push_back(bounds.g_defined ? bounds.g : 0.0);
        trace.bounds_defined.push_back(bounds.f_defined && bounds.g_defined);
        trace.argmin_interior.push_back(interior);
        trace.u_history.push_back(next);
        trace.iterations = k + 1;

        if (std::fabs(next - u) < epsilon) {
            trace.converged = true;
            return trace;
        }
        // The map u -> next is memoryless, so a revisited u value means a
        // genuine cycle over the discrete equilibrium vectors.
        const int steps = static_cast<int>(trace.u_history.size());
        for (int period = 1; period <= kCycleWindow && period + 1 < steps; ++period) {
            const double prev = trace.u_history[steps - 1 - period];
            if (std::fabs(next - prev) < 1e-13) {
                trace.cycle_detected = true;
                trace.cycle_period = period;
                return trace;
            }
        }
        u = next;
    }
    return trace;  // iteration cap reached
}

}  // namespace epigame::game_multicommunity
