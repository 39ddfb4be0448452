#include "complete_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nimfa.hpp"

namespace epigame::game_complete {

using nimfa::v_complete;

namespace {

constexpr int kDirectBinomialLimit = 60;

// Ceiling that snaps values within 1e-9 of an integer onto it, so exact
// boundary ties are not bumped by rounding noise.
int snapped_ceil(double x) {
    const double r = std::nearbyint(x);
    if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x)))
        return static_cast<int>(r);
    return static_cast<int>(std::ceil(x));
}

double threshold_term(const GameParams& p) {
    // 1 - 1/(tau(N-1)); positive above the epidemic threshold
    return 1.0 - 1.0 / (p.tau * (p.n - 1));
}

}  // namespace

void GameParams::validate() const {
    if (n < 1) throw std::invalid_argument("player count must be >= 1");
    if (!(invest_cost > 0.0)) throw std::invalid_argument("investment cost must be > 0");
    if (!(infect_cost > 0.0)) throw std::invalid_argument("infection cost must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
}

PureEquilibrium pure_equilibrium(const GameParams& p) {
    p.validate();
    int n_star = p.n;
    if (p.invest_cost < p.infect_cost) {
        const double x = 1.0 / ((1.0 - p.q()) * p.tau);
        if (x < static_cast<double>(p.n)) n_star = std::max(0, snapped_ceil(x));
    }

    PureEquilibrium out;
    out.n_star = n_star;
    out.cost_invest = p.invest_cost;
    out.cost_not_invest = p.infect_cost * v_complete(n_star, p.tau);
    out.potential_at_eq = potential(p, n_star);

    const double slack = 1e-9 * p.infect_cost;
    if (out.cost_not_invest > p.invest_cost + slack)
        throw std::logic_error("equilibrium check failed: non-investor wants to deviate");
    if (n_star < p.n &&
        p.invest_cost > p.infect_cost * v_complete(n_star + 1, p.tau) + slack)
        throw std::logic_error("equilibrium check failed: investor wants to deviate");
    return out;
}

double potential(const GameParams& p, int n) {
    p.validate();
    if (n < 0 || n > p.n) throw std::out_of_range("n must be in 0..N");
    double phi = p.invest_cost * (p.n - n);
    for (int j = 2; j <= n; ++j) phi += p.infect_cost * v_complete(j, p.tau);
    return phi;
}

std::vector<int> equilibrium_bruteforce(const GameParams& p) {
    p.validate();
    std::vector<int> out;
    for (int n = 0; n <= p.n; ++n) {
        if (p.infect_cost * v_complete(n, p.tau) > p.invest_cost) continue;
        if (n < p.n && p.invest_cost > p.infect_cost * v_complete(n + 1, p.tau)) continue;
        out.push_back(n);
    }
    return out;
}

double social_cost(const GameParams& p, int n) {
    return p.invest_cost * (p.n - n) + n * p.infect_cost * v_complete(n, p.tau);
}

SocialOptimum social_optimum(const GameParams& p) {
    p.validate();
    const double edge = 1.0 + 1.0 / p.tau;
    int cands[3] = {p.n,
                    std::clamp(static_cast<int>(std::floor(edge)), 0, p.n),
                    std::clamp(snapped_ceil(edge), 0, p.n)};
    SocialOptimum best{cands[0], social_cost(p, cands[0])};
    for (int c : cands) {
        const double s = social_cost(p, c);
        if (s < best.cost - 1e-15 || (std::fabs(s - best.cost) <= 1e-15 && c < best.n_opt))
            best = {c, s};
    }
    return best;
}

PoAReport poa_pure(const GameParams& p) {
    const auto eq = pure_equilibrium(p);
    const auto opt = social_optimum(p);
    PoAReport out;
    out.n_star = eq.n_star;
    out.n_opt = opt.n_opt;
    out.social_cost_eq = social_cost(p, eq.n_star);
    out.social_cost_opt = opt.cost;
    if (out.n_star < out.n_opt)
        throw std::logic_error("equilibrium count below the social optimum");
    if (out.social_cost_opt == 0.0) {
        if (out.social_cost_eq != 0.0)
            throw std::domain_error("degenerate PoA: zero optimal cost, nonzero equilibrium cost");
        out.poa = 1.0;
    } else {
        out.poa = out.social_cost_eq / out.social_cost_opt;
    }
    const double denom = 1.0 - (1.0 + 1.0 / p.tau) / p.n;
    out.poa_upper_bound =
        denom > 0.0 ? 1.0 / denom : std::numeric_limits<double>::infinity();
    return out;
}

double mixed_cost_not_invest(const GameParams& p, double prob) {
    p.validate();
    if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    const int N = p.n;
    const int n_low = std::max(1, snapped_ceil(1.0 / p.tau));
    if (n_low > N - 1) return 0.0;
    if (prob == 1.0) return 0.0;
    if (prob == 0.0) return p.infect_cost * (1.0 - 1.0 / (p.tau * (N - 1)));

    double total = 0.0;
    if (N <= kDirectBinomialLimit) {
        double binom = 1.0;  // C(N-1, 0)
        for (int n = 1; n <= N - 1; ++n) {
            binom *= static_cast<double>(N - n) / n;
            if (n < n_low) continue;
            total += (1.0 - 1.0 / (p.tau * n)) * binom *
                     std::pow(1.0 - prob, n) * std::pow(prob, N - 1 - n);
        }
    } else {
        const double lg_n1 = std::lgamma(static_cast<double>(N));
        const double l1p = std::log1p(-prob), lp = std::log(prob);
        for (int n = n_low; n <= N - 1; ++n) {
            const double lc = lg_n1 - std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(N - n));
            total += (1.0 - 1.0 / (p.tau * n)) * std::exp(lc + n * l1p + (N - 1 - n) * lp);
        }
    }
    return p.infect_cost * total;
}

MixedEquilibrium mixed_equilibrium_exact(const GameParams& p, double tol) {
    p.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    MixedEquilibrium out;
    out.p_hat_star = mixed_equilibrium_approx(p).p_hat_star;
    out.expected_cost_invest = p.invest_cost;

    const double at_zero = mixed_cost_not_invest(p, 0.0);
    if (p.invest_cost >= at_zero) {
        out.p_star = 0.0;
        out.expected_cost_not = at_zero;
        return out;
    }
    // S0(p) is strictly decreasing from S0(0) > C to S0(1) = 0
    double lo = 0.0, hi = 1.0, mid = 0.5;
    int it = 0;
    for (; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double g = mixed_cost_not_invest(p, mid) - p.invest_cost;
        if (hi - lo <= tol && std::fabs(g) < 1e-13) break;
        (g > 0.0 ? lo : hi) = mid;
    }
    out.p_star = mid;
    out.expected_cost_not = mixed_cost_not_invest(p, mid);
    out.solver_iterations = it;
    return out;
}

MixedApprox mixed_equilibrium_approx(const GameParams& p) {
    p.validate();
    if (p.n < 2) throw std::invalid_argument("mixed approximation needs N >= 2");
    MixedApprox out;
    const double thr = threshold_term(p);
    if (p.invest_cost < p.infect_cost * thr) {
        out.interior = true;
        out.p_hat_star =
            1.0 - p.infect_cost / (p.tau * (p.infect_cost - p.invest_cost) * (p.n - 1));
        out.social_cost = p.n * p.invest_cost;
    } else {
        out.p_hat_star = 0.0;
        out.social_cost = p.n * p.infect_cost * std::max(0.0, thr);
    }
    return out;
}

MixedSocialOptimum mixed_social_optimum(const GameParams& p) {
    p.validate();
    if (p.n < 2) throw std::invalid_argument("mixed optimum needs N >= 2");
    MixedSocialOptimum out;
    const double thr = threshold_term(p);
    if (thr <= 0.0) {
        out.below_threshold = true;
        return out;  // p = 0, cost 0
    }
    out.cost = p.n * std::min(p.invest_cost, p.infect_cost) * thr;
    if (p.invest_cost > p.infect_cost) {
        out.p_opt = 0.0;
    } else if (p.invest_cost == p.infect_cost) {
        out.is_interval = true;
        out.interval_lo = 0.0;
        out.interval_hi = thr;
        out.p_opt = 0.0;  // canonical left endpoint
    } else {
        out.p_opt = thr;
    }
    return out;
}

double exact_mixed_optimal_cost(const GameParams& p, double* argmin) {
    p.validate();
    auto per_node = [&](double prob) {
        return prob * p.invest_cost + (1.0 - prob) * mixed_cost_not_invest(p, prob);
    };
    const int grid = 2048;
    double best_p = 0.0, best = per_node(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double prob = static_cast<double>(i) / grid;
        const double c = per_node(prob);
        if (c < best) {
            best = c;
            best_p = prob;
        }
    }
    // golden-section refinement around the best grid point
    double a = std::max(0.0, best_p - 1.0 / grid), b = std::min(1.0, best_p + 1.0 / grid);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = per_node(x1), f2 = per_node(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = per_node(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = per_node(x2);
        }
    }
    const double px = 0.5 * (a + b);
    const double fx = per_node(px);
    if (fx < best) {
        best = fx;
        best_p = px;
    }
    if (argmin) *argmin = best_p;
    return p.n * best;
}

PoAMixed poa_mixed(const GameParams& p) {
    const auto eq = mixed_equilibrium_exact(p);
    PoAMixed out;
    out.eq_cost = p.n * (eq.p_star * p.invest_cost +
                         (1.0 - eq.p_star) * eq.expected_cost_not);
    out.opt_cost_exact = exact_mixed_optimal_cost(p);
    if (out.opt_cost_exact == 0.0) {
        if (out.eq_cost != 0.0)
            throw std::domain_error("degenerate mixed PoA: zero optimal cost");
        out.exact = 1.0;
    } else {
        out.exact = out.eq_cost / out.opt_cost_exact;
    }
    const double thr = threshold_term(p);
    out.approx = thr > 0.0
                     ? p.invest_cost / (std::min(p.invest_cost, p.infect_cost) * thr)
                     : 1.0;
    return out;
}

StrategyComparison compare_strategies(const GameParams& p) {
    const auto eq = pure_equilibrium(p);
    StrategyComparison out;
    out.cost_pure = social_cost(p, eq.n_star);
    out.cost_mixed = p.n * p.invest_cost;
    out.ratio = out.cost_pure / out.cost_mixed;
    out.interior = p.n >= 2 && p.invest_cost < p.infect_cost * threshold_term(p);
    return out;
}

}  // namespace epigame::game_complete
