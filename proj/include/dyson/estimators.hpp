#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dyson/edge_prob.hpp"
#include "dyson/graph.hpp"
#include "dyson/rng.hpp"

namespace dyson {

// One-sided models live on [0, M); two-sided models on [-M, M).
enum class Side { one_sided, two_sided };

Interval side_domain(Side side, std::int64_t M);
Side parse_side(const std::string& text);     // "one" | "two"
std::string side_name(Side side);

// Finite-size percolation surrogate. "span": some cluster intersects both
// the first and the last tenth of the domain. "giant(c)": the largest
// cluster reaches c |V|.
struct ProxyKind {
    enum class Tag { span, giant } tag = Tag::span;
    double c = 0.5; // giant threshold fraction
};
ProxyKind parse_proxy(const std::string& id); // "span" or "giant(0.5)"
std::string proxy_name(const ProxyKind& kind);

bool percolation_proxy(const Graph& g, const ProxyKind& kind);

struct ThetaEstimate {
    double mean = 0;
    double std_error = 0;
    std::int64_t replicas = 0;
};

// Mean largest-cluster density |C|/|V| over replicas on the side's domain.
// q = 1 samples exactly; q > 1 runs the heat-bath chain (domain <= 2048).
ThetaEstimate estimate_theta(const ModelParams& params, Side side, std::int64_t M,
                             std::int64_t replicas, Seed s, int threads = 1);

struct LemmaRow {
    std::int64_t N = 0;
    std::int64_t successes = 0;
    std::int64_t replicas = 0;
    double rate = 0;
    double wilson_lo = 0;
    double wilson_hi = 1;
};

struct LemmaReport {
    double alpha = 0, beta = 0, gamma = 0, q = 1;
    std::vector<LemmaRow> rows;
};

// Frequency of |C_I| >= N^gamma on I = [0, N) for each N, with Wilson
// intervals. Requires alpha/2 < gamma < 1.
LemmaReport lemma2_experiment(const ModelParams& params, double gamma,
                              const std::vector<std::int64_t>& N_list,
                              std::int64_t replicas, Seed s, int threads = 1);

// Generalized entry point used by tests with non-dyson edge laws.
LemmaReport lemma2_experiment_with(const EdgeProbFn& f, double q, double alpha,
                                   double beta, double gamma,
                                   const std::vector<std::int64_t>& N_list,
                                   std::int64_t replicas, Seed s, int threads = 1);

struct GridEval {
    double beta = 0;
    std::int64_t successes = 0;
    std::int64_t replicas = 0;
    double rate = 0;
    double std_error = 0;
};

struct SizeCrossing {
    std::int64_t M = 0;
    double crossing = 0;     // linear interpolation inside the bracket
    double bracket_lo = 0;   // last grid point with rate < 1/2
    double bracket_hi = 0;   // first grid point with rate >= 1/2
    double ci_lo = 0;        // crossing of the Wilson upper envelope
    double ci_hi = 0;        // crossing of the Wilson lower envelope
    std::vector<GridEval> evals; // evaluated grid points, ascending beta
};

struct BetaCEstimate {
    Side side = Side::one_sided;
    double alpha = 0;
    double q = 1;
    std::string proxy;
    std::int64_t replicas = 0;
    std::vector<SizeCrossing> crossings; // one per size, ascending M
    double estimate = 0;                 // largest-size crossing
    double ci_lo = 0, ci_hi = 0;         // span of the last two sizes' brackets
};

std::vector<double> default_beta_grid();

// Monotone bisection of the proxy rate over the beta grid, per size; the
// estimate is the largest size's crossing of rate 1/2, with a confidence
// band spanning the last two sizes' brackets. Throws "grid too narrow" when
// the endpoint rates do not straddle 1/2.
BetaCEstimate estimate_beta_c(Side side, double alpha, double q,
                              const std::vector<std::int64_t>& M_list,
                              const std::vector<double>& beta_grid,
                              std::int64_t replicas, const ProxyKind& proxy, Seed s,
                              int threads = 1);

// Bisection core, exposed for tests: rate_eval(index) must return the
// success rate at beta_grid[index] (deterministic per index).
struct CrossingResult {
    std::size_t lo_idx = 0, hi_idx = 0;
    double crossing = 0;
    std::vector<std::pair<std::size_t, double>> evaluated;
};
CrossingResult find_crossing(const std::vector<double>& beta_grid,
                             const std::function<double(std::size_t)>& rate_eval);

} // namespace dyson
