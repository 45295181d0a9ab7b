#include "dyson/fk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dyson/clusters.hpp"

namespace dyson {

std::vector<Edge> all_pairs(Interval v) {
    std::vector<Edge> pairs;
    for (Vertex i = v.lo; i < v.hi; ++i)
        for (Vertex j = i + 1; j < v.hi; ++j) pairs.emplace_back(i, j);
    return pairs;
}

std::int64_t components_of_mask(const DiscreteGraphLaw& law, std::uint32_t mask) {
    UnionFind uf(static_cast<std::size_t>(law.domain.length()));
    for (std::size_t k = 0; k < law.pairs.size(); ++k)
        if (mask & (1u << k))
            uf.unite(static_cast<std::size_t>(law.pairs[k].first - law.domain.lo),
                     static_cast<std::size_t>(law.pairs[k].second - law.domain.lo));
    return uf.component_count();
}

DiscreteGraphLaw product_law(Interval v, const EdgeProbFn& f) {
    DiscreteGraphLaw law;
    law.domain = v;
    law.pairs = all_pairs(v);
    if (law.pairs.size() > 20) throw std::invalid_argument("enumeration limit");
    std::vector<double> p(law.pairs.size());
    for (std::size_t k = 0; k < law.pairs.size(); ++k)
        p[k] = edge_prob(f, law.pairs[k].first, law.pairs[k].second);
    const std::size_t n = std::size_t{1} << law.pairs.size();
    law.prob.assign(n, 1.0);
    for (std::size_t mask = 0; mask < n; ++mask)
        for (std::size_t k = 0; k < law.pairs.size(); ++k)
            law.prob[mask] *= (mask & (std::size_t{1} << k)) ? p[k] : 1.0 - p[k];
    return law;
}

double fk_weight(const Graph& g, const EdgeProbFn& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    double w = 1.0;
    for (Vertex i = g.vertices.lo; i < g.vertices.hi; ++i)
        for (Vertex j = i + 1; j < g.vertices.hi; ++j) {
            double p = edge_prob(f, i, j);
            w *= g.has_edge(i, j) ? p : 1.0 - p;
        }
    ClusterPartition parts = clusters(g);
    return w * std::pow(q, static_cast<double>(parts.block_count()));
}

DiscreteGraphLaw fk_exact_distribution(Interval v, const EdgeProbFn& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    DiscreteGraphLaw law = product_law(v, f);
    double z = 0.0;
    for (std::size_t mask = 0; mask < law.prob.size(); ++mask) {
        law.prob[mask] *= std::pow(q, static_cast<double>(components_of_mask(
                                          law, static_cast<std::uint32_t>(mask))));
        z += law.prob[mask];
    }
    if (z <= 0.0) throw std::runtime_error("degenerate distribution: zero total weight");
    for (auto& p : law.prob) p /= z;
    return law;
}

double FkHeatBathChain::open_probability(double f_e, double q, bool connected_elsewhere) {
    if (connected_elsewhere) return f_e;
    return f_e / (f_e + q * (1.0 - f_e));
}

FkHeatBathChain::FkHeatBathChain(Interval v, const EdgeProbFn& f, double q, Seed s)
    : v_(v), pairs_(all_pairs(v)), q_(q), rng_(s) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    if (v.length() < 1) throw std::invalid_argument("vertex interval must be nonempty");
    prob_.resize(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        prob_[k] = edge_prob(f, pairs_[k].first, pairs_[k].second);
    open_.assign(pairs_.size(), 0);
    adj_.assign(static_cast<std::size_t>(v.length()), {});
    stamp_.assign(static_cast<std::size_t>(v.length()), 0);
}

bool FkHeatBathChain::connected_without(Vertex i, Vertex j) {
    // BFS from i, stopping at j; the caller guarantees edge {i, j} is absent.
    ++epoch_;
    queue_.clear();
    queue_.push_back(i);
    stamp_[static_cast<std::size_t>(i - v_.lo)] = epoch_;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        Vertex u = queue_[head];
        for (Vertex w : adj_[static_cast<std::size_t>(u - v_.lo)]) {
            if (w == j) return true;
            auto idx = static_cast<std::size_t>(w - v_.lo);
            if (stamp_[idx] != epoch_) {
                stamp_[idx] = epoch_;
                queue_.push_back(w);
            }
        }
    }
    return false;
}

void FkHeatBathChain::set_edge(std::size_t pair_idx, bool open) {
    if (open_[pair_idx] == static_cast<char>(open)) return;
    auto [i, j] = pairs_[pair_idx];
    auto& ai = adj_[static_cast<std::size_t>(i - v_.lo)];
    auto& aj = adj_[static_cast<std::size_t>(j - v_.lo)];
    if (open) {
        ai.push_back(j);
        aj.push_back(i);
    } else {
        ai.erase(std::find(ai.begin(), ai.end(), j));
        aj.erase(std::find(aj.begin(), aj.end(), i));
    }
    open_[pair_idx] = open ? 1 : 0;
}

void FkHeatBathChain::sweep() {
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        set_edge(k, false);
        bool conn = connected_without(pairs_[k].first, pairs_[k].second);
        double p_open = open_probability(prob_[k], q_, conn);
        set_edge(k, rng_.next_unit() < p_open);
    }
}

void FkHeatBathChain::run(std::int64_t sweeps) {
    for (std::int64_t t = 0; t < sweeps; ++t) sweep();
}

Graph FkHeatBathChain::current_graph() const {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (open_[k]) edges.push_back(pairs_[k]);
    return graph_from_canonical(v_, std::move(edges));
}

std::uint32_t FkHeatBathChain::current_mask() const {
    if (pairs_.size() > 32) throw std::logic_error("mask view needs at most 32 pairs");
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (open_[k]) mask |= (1u << k);
    return mask;
}

Graph fk_sample_mcmc(Interval v, const EdgeProbFn& f, double q, std::int64_t sweeps, Seed s) {
    if (sweeps < 1) throw std::invalid_argument("sweeps must be at least 1");
    FkHeatBathChain chain(v, f, q, s);
    chain.run(sweeps);
    return chain.current_graph();
}

} // namespace dyson
