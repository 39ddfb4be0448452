#include "nimfa.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace epigame::nimfa {

namespace {
constexpr double kPrevalenceFloor = 1e-12;
constexpr double kThresholdSlack = 1e-10;
}  // namespace

void EpidemicRates::validate() const {
    if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
}

Adjacency::Adjacency(int nodes) : n_(nodes) {
    if (nodes < 0) throw std::invalid_argument("node count must be >= 0");
    adj_.resize(static_cast<std::size_t>(nodes));
}

Adjacency Adjacency::complete(int n) {
    Adjacency g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Adjacency Adjacency::complete_bipartite(int m, int n) {
    Adjacency g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Adjacency Adjacency::from_edge_list(std::istream& in, int min_nodes) {
    std::vector<std::pair<int, int>> edges;
    int max_node = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long i = -1, j = -1;
        if (!(ls >> i >> j) || i < 0 || j < 0)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected two non-negative node indices");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        max_node = std::max(max_node, static_cast<int>(std::max(i, j)));
    }
    Adjacency g(std::max(min_nodes, max_node + 1));
    for (auto [i, j] : edges)
        if (i != j && !g.has_edge(i, j)) g.add_edge(i, j);
    return g;
}

void Adjacency::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    adj_[i].push_back(j);
    adj_[j].push_back(i);
}

bool Adjacency::has_edge(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
    const auto& row = adj_[i];
    return std::find(row.begin(), row.end(), j) != row.end();
}

std::size_t Adjacency::edge_count() const {
    std::size_t deg = 0;
    for (const auto& row : adj_) deg += row.size();
    return deg / 2;
}

double spectral_radius(const Adjacency& adj, int iterations) {
    const int n = adj.size();
    if (n == 0) return 0.0;
    // Power iteration on A + I keeps the dominant eigenvalue positive
    // even for bipartite spectra; the Rayleigh quotient at the end
    // squares the iteration error.
    std::vector<double> x(n, 1.0), y(n);
    for (int it = 0; it < iterations; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = x[i];
            for (int j : adj.neighbors(i)) s += x[j];
            y[i] = s;
        }
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, std::fabs(v));
        if (norm == 0.0) return 0.0;
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = x[i];
        for (int j : adj.neighbors(i)) s += x[j];
        num += x[i] * s;
        den += x[i] * x[i];
    }
    return num / den - 1.0;
}

SteadyState solve_general(const Adjacency& adj, double tau,
                          double tol, long max_iter) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    const int n = adj.size();
    SteadyState out;
    out.v.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return out;

    // Only the trivial solution exists at or below the epidemic threshold,
    // where the fixed-point iteration would creep toward zero at O(1/k).
    if (tau * spectral_radius(adj) <= 1.0 + kThresholdSlack) return out;

    std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(static_cast<std::size_t>(n));
    double defect = 0.0;
    long k = 0;
    for (; k < max_iter; ++k) {
        defect = 0.0;
        double vmax = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j : adj.neighbors(i)) s += v[j];
            w[i] = 1.0 - 1.0 / (1.0 + tau * s);
            defect = std::max(defect, std::fabs(w[i] - v[i]));
            vmax = std::max(vmax, w[i]);
        }
        v.swap(w);
        if (vmax < kPrevalenceFloor) {
            out.iterations = k + 1;
            return out;  // collapsed to the trivial solution
        }
        if (defect < tol) break;
    }
    if (defect >= tol) {
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j : adj.neighbors(i)) s += v[j];
            res = std::max(res, std::fabs(1.0 - 1.0 / (1.0 + tau * s) - v[i]));
        }
        throw NonConvergenceError("solve_general: no convergence within max_iter", v, res);
    }

    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j : adj.neighbors(i)) s += v[j];
        res = std::max(res, std::fabs(1.0 - 1.0 / (1.0 + tau * s) - v[i]));
    }
    out.v = std::move(v);
    out.above_threshold = true;
    out.residual = res;
    out.iterations = k + 1;
    return out;
}

double v_complete(double n, double tau) {
    if (!(n > 1.0) || !(tau > 0.0)) return 0.0;
    const double x = tau * (n - 1.0);
    return x >= 1.0 ? 1.0 - 1.0 / x : 0.0;
}

double v_complete(int n, double tau) {
    return v_complete(static_cast<double>(n), tau);
}

std::pair<double, double> v_bipartite(int m, int n, double tau) {
    if (m < 0 || n < 0) throw std::invalid_argument("cluster sizes must be >= 0");
    if (m == 0 || n == 0 || !(tau > 0.0)) return {0.0, 0.0};
    const double mn = static_cast<double>(m) * static_cast<double>(n);
    const double num = tau * tau * mn - 1.0;
    if (num <= 0.0) return {0.0, 0.0};
    const double vm = num / (tau * m * (tau * n + 1.0));
    const double vn = num / (tau * n * (tau * m + 1.0));
    return {vm, vn};
}

double v_community(int n_m, double tau_m, double u) {
    if (n_m < 0) throw std::invalid_argument("n_m must be >= 0");
    if (!(tau_m > 0.0)) throw std::invalid_argument("tau_m must be > 0");
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("u must be in [0,1]");
    if (n_m <= 1) return tau_m * u / (1.0 + tau_m * u);
    if (u == 0.0) return v_complete(n_m, tau_m);  // bit-exact reduction
    const double a = tau_m * (n_m - 1);
    const double V = a - tau_m * u - 1.0;
    const double v = (V + std::sqrt(V * V + 4.0 * a * tau_m * u)) / (2.0 * a);
    return std::max(v, 0.0);
}

int MultiCommunitySpec::total_nodes() const {
    int total = 1;  // the core node
    for (int s : sizes) total += s;
    return total;
}

void MultiCommunitySpec::validate() const {
    if (sizes.empty()) throw std::invalid_argument("at least one community required");
    if (sizes.size() != taus.size())
        throw std::invalid_argument("sizes and taus must have equal length");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("every community size must be >= 1");
    for (double t : taus)
        if (!(t > 0.0)) throw std::invalid_argument("every tau_m must be > 0");
}

double core_infection(const MultiCommunitySpec& spec,
                      const std::vector<int>& counts, double u) {
    spec.validate();
    if (counts.size() != spec.sizes.size())
        throw std::invalid_argument("counts length must match community count");
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("u must be in [0,1]");
    double s = 0.0;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        const int n_m = counts[m];
        if (n_m < 0 || n_m > spec.sizes[m])
            throw std::invalid_argument("counts must satisfy 0 <= n_m <= N_m");
        if (n_m == 0) continue;
        s += spec.taus[m] * n_m * v_community(n_m, spec.taus[m], u);
    }
    return 1.0 - 1.0 / (1.0 + s);
}

}  // namespace epigame::nimfa
