#pragma once

#include <functional>

#include "dyson/edge_prob.hpp"
#include "dyson/graph.hpp"
#include "dyson/graph_law.hpp"
#include "dyson/rng.hpp"

namespace dyson {

// Unnormalized random-cluster weight q^{omega(g)} * prod_open f(e) *
// prod_closed (1 - f(e)), products over all vertex pairs of g.vertices.
double fk_weight(const Graph& g, const EdgeProbFn& f, double q);

// Exact normalized distribution over all subgraphs; pair universe at most 20
// pairs (2^20 configurations).
DiscreteGraphLaw fk_exact_distribution(Interval v, const EdgeProbFn& f, double q);

// Single-bond heat-bath chain targeting the random-cluster law. One sweep is
// a pass over all pairs in lexicographic order: pair e opens with probability
// f(e) when its endpoints are connected in the current graph minus e, and
// with f(e) / (f(e) + q(1-f(e))) otherwise. The chain starts from the empty
// graph; at q=1 one sweep already produces an exact Bernoulli sample.
class FkHeatBathChain {
  public:
    FkHeatBathChain(Interval v, const EdgeProbFn& f, double q, Seed s);

    void sweep();
    void run(std::int64_t sweeps);
    Graph current_graph() const;
    // Configuration bitmask over the lexicographic pair list; requires at
    // most 32 pairs. Used by small-universe statistics.
    std::uint32_t current_mask() const;
    const std::vector<Edge>& pair_list() const { return pairs_; }
    // Heat-bath conditional used for pair (i, j) given connectivity status;
    // exposed for detailed-balance unit checks.
    static double open_probability(double f_e, double q, bool connected_elsewhere);

  private:
    bool connected_without(Vertex i, Vertex j);
    void set_edge(std::size_t pair_idx, bool open);

    Interval v_;
    std::vector<Edge> pairs_;
    std::vector<double> prob_;       // f(e) per pair
    std::vector<char> open_;         // current configuration
    std::vector<std::vector<Vertex>> adj_;
    double q_;
    Rng rng_;
    // BFS scratch with epoch stamping, reused across connectivity queries
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<Vertex> queue_;
};

// One state after `sweeps` sweeps from the empty start.
Graph fk_sample_mcmc(Interval v, const EdgeProbFn& f, double q, std::int64_t sweeps, Seed s);

} // namespace dyson
