#pragma once

#include "dyson/edge_prob.hpp"
#include "dyson/graph.hpp"
#include "dyson/rng.hpp"

namespace dyson {

// Independent percolation sample on v: each pair present with probability
// f(i, j). Runs in expected O(#edges + |v|) time by per-distance geometric
// skips; memory is proportional to the realized edge count.
Graph sample_bernoulli(Interval v, const EdgeProbFn& f, Seed s);

// Site-bond sample: vertices retained independently with probability lambda,
// pairs of retained vertices joined independently with probability f(i, j).
// Removed vertices stay in the vertex interval as isolated points.
Graph sample_site_bond(Interval v, double lambda, const EdgeProbFn& f, Seed s);

// g plus an independent dyson(delta, alpha) Bernoulli graph on g's vertices.
Graph sprinkle(const Graph& g, double delta, double alpha, Seed s);

// Edge count statistics for tests: per-distance counts of a single sample,
// without building a Graph (saves the canonicalization sort in tight loops).
void accumulate_distance_counts(Interval v, const EdgeProbFn& f, Seed s,
                                std::vector<std::int64_t>& counts_by_distance);

} // namespace dyson
