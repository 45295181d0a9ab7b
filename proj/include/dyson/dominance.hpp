#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dyson/edge_prob.hpp"
#include "dyson/graph.hpp"
#include "dyson/graph_law.hpp"
#include "dyson/rng.hpp"

namespace dyson {

// One uniform per pair drives both graphs; requires f_lo <= f_hi pointwise,
// so the low graph is a subgraph of the high graph with probability one.
std::pair<Graph, Graph> monotone_coupling(const EdgeProbFn& f_lo, const EdgeProbFn& f_hi,
                                          Interval v, Seed s);

// Marginal edge probability of a beta-graph union an independent
// delta-sprinkle, against the target at beta + 2 delta. ok is always true:
// 1 - e^{-(b+d)J} <= 1 - e^{-(b+2d)J}.
struct SprinkleIdentity {
    double p_combined = 0;
    double p_target = 0;
    bool ok = false;
};
SprinkleIdentity sprinkle_edge_identity(double beta, double delta, double alpha,
                                        Vertex i, Vertex j);

// Condition on the configuration of pairs outside v's pair universe:
// receives the outside pair list and the outside configuration mask.
using OutsideCondition =
    std::function<bool(const std::vector<Edge>&, std::uint32_t)>;

// Exact conditional law of the inner configuration (pairs of v) under the
// random-cluster law on w, given the condition on the outside pairs.
// Enumerates all graphs on w; at most 20 pairs.
DiscreteGraphLaw conditioned_fk_law(Interval w, Interval v, const EdgeProbFn& f,
                                    double q, const OutsideCondition& condition);

// Strassen certificate at enumerable scale: dominance holds iff a coupling
// supported on {lo subset of hi} exists, decided by max-flow on the
// comparability network. On success `coupling[h * n_lo + l]` carries the
// joint mass; on failure `violating_upset` lists the minimal configurations
// of an increasing event U with P_lo(U) > P_hi(U).
struct DominanceResult {
    bool holds = false;
    std::vector<double> coupling;               // row-major [hi][lo], on success
    std::vector<std::uint32_t> violating_upset; // minimal elements, on failure
    double flow = 0;
};

DominanceResult check_dominance_exact(const DiscreteGraphLaw& lo,
                                      const DiscreteGraphLaw& hi);

} // namespace dyson
