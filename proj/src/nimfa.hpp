#ifndef EPIGAME_NIMFA_HPP
#define EPIGAME_NIMFA_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

// Steady-state SIS infection probabilities under the N-intertwined
// mean-field approximation: closed forms for complete, complete-bipartite
// and core-coupled community graphs, plus a general fixed-point solver
// that serves as the oracle for all of them.

namespace epigame::nimfa {

/// Infection/curing rate pair; tau = beta/delta is what the solvers use.
struct EpidemicRates {
    double beta = 0.0;
    double delta = 1.0;

    static EpidemicRates from_tau(double tau) { return {tau, 1.0}; }
    double tau() const { return beta / delta; }
    void validate() const;
};

/// Undirected simple graph stored as neighbor lists.
/// Symmetry and a zero diagonal are enforced by construction.
class Adjacency {
public:
    explicit Adjacency(int nodes);

    static Adjacency complete(int n);
    static Adjacency complete_bipartite(int m, int n);
    /// Parses "i j" pairs, one per line, 0-indexed. Blank lines and
    /// lines starting with '#' are ignored. Node count is
    /// max(min_nodes, largest index + 1).
    static Adjacency from_edge_list(std::istream& in, int min_nodes = 0);

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    int size() const { return n_; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    std::size_t edge_count() const;

private:
    int n_;
    std::vector<std::vector<int>> adj_;
};

struct SteadyState {
    std::vector<double> v;       // metastable infection probability per node
    bool above_threshold = false;
    double residual = 0.0;       // max |v - F(v)| of the returned iterate
    long iterations = 0;
};

/// Thrown when the fixed-point iteration does not reach tol in max_iter.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(std::string what, std::vector<double> last, double residual)
        : std::runtime_error(std::move(what)),
          last_iterate(std::move(last)),
          residual(residual) {}

    std::vector<double> last_iterate;
    double residual;
};

/// Metastable solution of v_i = 1 - 1/(1 + tau * sum_j a_ij v_j), obtained
/// by fixed-point iteration from the all-ones vector. Returns the zero
/// vector (above_threshold = false) when the prevalence collapses or the
/// graph is subcritical (tau * lambda_1 <= 1).
SteadyState solve_general(const Adjacency& adj, double tau,
                          double tol = 1e-12, long max_iter = 1000000);

/// Complete graph K_n: 1 - 1/(tau(n-1)) above threshold, else 0.
/// Accepts real n so the replicator mean-field can reuse it.
double v_complete(double n, double tau);
double v_complete(int n, double tau);

/// Complete bipartite K_{m,n}: (v in cluster M, v in cluster N).
/// Clamped to (0,0) at or below threshold (tau^2 mn <= 1) or when a
/// cluster is empty.
std::pair<double, double> v_bipartite(int m, int n, double tau);

/// Community of n_m non-core members coupled to a core node with
/// infection probability u. Positive root of
///   tau(n_m-1) v^2 - V v - tau u = 0,  V = tau(n_m-1) - tau u - 1,
/// which reduces to v_complete at u = 0 and to the linear limit
/// tau u/(1 + tau u) for n_m <= 1.
double v_community(int n_m, double tau_m, double u);

/// Sizes and per-community effective spreading rates of the
/// core-coupled multi-community topology.
struct MultiCommunitySpec {
    std::vector<int> sizes;    // N_m, non-core members per community
    std::vector<double> taus;  // tau_m

    int communities() const { return static_cast<int>(sizes.size()); }
    int total_nodes() const;
    void validate() const;
};

/// Core-node infection probability 1 - 1/(1 + sum_m tau_m n_m v_m) given
/// per-community non-investor counts and the current core probability u.
double core_infection(const MultiCommunitySpec& spec,
                      const std::vector<int>& counts, double u);

/// Largest adjacency eigenvalue, power iteration on A + I.
double spectral_radius(const Adjacency& adj, int iterations = 300);

}  // namespace epigame::nimfa

#endif
