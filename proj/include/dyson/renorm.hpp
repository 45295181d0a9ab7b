#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyson/clusters.hpp"
#include "dyson/edge_prob.hpp"
#include "dyson/graph.hpp"
#include "dyson/rng.hpp"
#include "dyson/schedule.hpp"

namespace dyson {

// Partition of a domain into aligned blocks I_k = [kN, (k+1)N) clipped to the
// domain. Block indices are positions in `blocks`, left to right.
struct BlockPartition {
    std::int64_t N = 1;
    Interval domain;
    std::vector<Interval> blocks;
};

BlockPartition make_block_partition(Interval domain, std::int64_t N);

// Goodness: the largest element of the partition induced on i by g's
// clusters reaches |i|^gamma. Increasing in the edge set.
bool is_good(const Graph& g, Interval i, double gamma);

// Indices k whose block is good in its own graph (one graph per block,
// carrying that block's in-block sprinkle edges only).
std::vector<std::int64_t> good_blocks(const std::vector<Graph>& per_block,
                                      const BlockPartition& partition, double gamma);

// Disjoint vertex sets to be collapsed into coarse nodes.
struct CoarseGraphSpec {
    Interval domain;
    std::vector<std::vector<Vertex>> sets;
};

// Coarse graph on [0, #sets): an edge {a, b} iff h has an edge connecting a
// vertex of sets[a] with a vertex of sets[b].
Graph coarse_graph(const Graph& h, const CoarseGraphSpec& spec);

// Lower bound 1 - exp(-delta |S_i| |S_j| D_ij^-alpha) for the probability
// that a dyson(delta, alpha) sprinkle connects the two sets.
double coarse_edge_prob_lb(double delta, std::int64_t s_i, std::int64_t s_j,
                           std::int64_t d_ij, double alpha);

// Effective inverse temperature of the coarse process: delta 2^-alpha
// N^(2 gamma - alpha); requires the supercritical exponent 2 gamma > alpha.
double effective_beta(double delta, std::int64_t n_block, double gamma, double alpha);

// Smallest power-of-two padding L such that blocks of length M1, embedded in
// [lo - L, hi + L), are good with probability > 1 - eps1. Doubles L from 1;
// errors out past l_max.
std::int64_t find_boundary_padding(double beta, double alpha, std::int64_t M1,
                                   double gamma, double eps1, std::int64_t replicas,
                                   Seed s, std::int64_t l_max = 1 << 20);

// Scaled-down Monte Carlo rehearsal of one renormalization induction step on
// I = [0, M_n), M_n = M_prev * c_n: child goodness, the count K of good
// children vs the Markov bound, coarse-graph connectivity vs the
// Erdos-Renyi bound, and the final cluster-size event, with the per-sample
// chain |C_I| >= |C(coarse)| * M_prev^gamma verified on every replica.
struct InductionReport {
    int n = 0;
    long double M_prev = 0, c_n = 0, d_n = 0, M_n = 0;
    double gamma = 0;
    std::int64_t replicas = 0;
    std::int64_t children_per_replica = 0;
    double child_good_rate = 0;     // (a)
    double eps_hat = 0;             // 1 - child_good_rate
    double k_exceeds_rate = 0;      // (b): P(K > c_n - c_n^gamma)
    double markov_rhs = 0;          // 1 - eps_hat / (1 - d_n), raw
    bool markov_chain_valid = false; // d_n < 1/2 (chained form applies)
    double q_lb = 0;                // uniform coarse edge probability bound
    std::int64_t coarse_samples = 0;   // replicas with K >= 2
    double coarse_connected_rate = 0;  // (c), over coarse_samples
    double coarse_bound_mean = 0;      // mean of clamped 1 - ER bound
    double final_rate = 0;          // (d): P(|C_I| > M_n^gamma)
    double final_bound = 0;         // 1 - eps_hat (1 + 3 d_n), raw
    std::int64_t chain_violations = 0;
};

struct InductionScale {
    std::int64_t M_prev;
    std::int64_t c_n;
};

// `scale` overrides the schedule's (M_{n-1}, c_n); the proof-sized schedule
// is far beyond desk reach, so experiments run on small explicit scales.
InductionReport induction_step_experiment(const ModelParams& params,
                                          const RenormSchedule& schedule, int n,
                                          std::int64_t replicas, Seed s,
                                          std::optional<InductionScale> scale = std::nullopt,
                                          int threads = 1);

} // namespace dyson
