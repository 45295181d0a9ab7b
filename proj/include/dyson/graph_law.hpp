#pragma once

#include <cstdint>
#include <vector>

#include "dyson/edge_prob.hpp"
#include "dyson/graph.hpp"
#include "dyson/interval.hpp"

namespace dyson {

// Exact distribution over subgraphs of a small pair universe. Configuration
// `mask` opens pair k iff bit k is set; pairs are listed lexicographically.
struct DiscreteGraphLaw {
    Interval domain;
    std::vector<Edge> pairs;
    std::vector<double> prob; // size 2^pairs.size(), sums to 1

    std::size_t n_pairs() const { return pairs.size(); }
    std::size_t n_configs() const { return prob.size(); }
};

// All vertex pairs of v in lexicographic order.
std::vector<Edge> all_pairs(Interval v);

// Product (independent) law with per-pair probabilities from f.
DiscreteGraphLaw product_law(Interval v, const EdgeProbFn& f);

// Number of connected components of the configuration `mask` over the
// domain's vertices.
std::int64_t components_of_mask(const DiscreteGraphLaw& law, std::uint32_t mask);

} // namespace dyson
