#include "dyson/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dyson/fk.hpp"

namespace dyson {

std::pair<Graph, Graph> monotone_coupling(const EdgeProbFn& f_lo, const EdgeProbFn& f_hi,
                                          Interval v, Seed s) {
    Rng rng{s};
    std::vector<Edge> lo_edges, hi_edges;
    for (Vertex i = v.lo; i < v.hi; ++i)
        for (Vertex j = i + 1; j < v.hi; ++j) {
            double p_lo = edge_prob(f_lo, i, j);
            double p_hi = edge_prob(f_hi, i, j);
            if (p_lo > p_hi)
                throw std::invalid_argument("pointwise ordering violated at pair (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
            double u = rng.next_unit();
            if (u < p_lo) lo_edges.emplace_back(i, j);
            if (u < p_hi) hi_edges.emplace_back(i, j);
        }
    return {graph_from_canonical(v, std::move(lo_edges)),
            graph_from_canonical(v, std::move(hi_edges))};
}

SprinkleIdentity sprinkle_edge_identity(double beta, double delta, double alpha,
                                        Vertex i, Vertex j) {
    if (i == j) throw std::invalid_argument("self-loop");
    double J = std::pow(static_cast<double>(i > j ? i - j : j - i), -alpha);
    SprinkleIdentity r;
    r.p_combined = -std::expm1(-(beta + delta) * J);
    r.p_target = -std::expm1(-(beta + 2.0 * delta) * J);
    r.ok = r.p_combined <= r.p_target;
    return r;
}

DiscreteGraphLaw conditioned_fk_law(Interval w, Interval v, const EdgeProbFn& f,
                                    double q, const OutsideCondition& condition) {
    if (!w.contains(v)) throw std::invalid_argument("v must be contained in w");
    DiscreteGraphLaw big = fk_exact_distribution(w, f, q);

    DiscreteGraphLaw law;
    law.domain = v;
    law.pairs = all_pairs(v);
    std::vector<Edge> outside;
    std::vector<int> inner_pos(big.pairs.size(), -1), outside_pos(big.pairs.size(), -1);
    for (std::size_t k = 0; k < big.pairs.size(); ++k) {
        const Edge& e = big.pairs[k];
        if (v.contains(e.first) && v.contains(e.second)) {
            inner_pos[k] = static_cast<int>(
                std::lower_bound(law.pairs.begin(), law.pairs.end(), e) - law.pairs.begin());
        } else {
            outside_pos[k] = static_cast<int>(outside.size());
            outside.push_back(e);
        }
    }

    law.prob.assign(std::size_t{1} << law.pairs.size(), 0.0);
    double total = 0.0;
    for (std::size_t mask = 0; mask < big.prob.size(); ++mask) {
        std::uint32_t inner_mask = 0, outside_mask = 0;
        for (std::size_t k = 0; k < big.pairs.size(); ++k) {
            if (!(mask & (std::size_t{1} << k))) continue;
            if (inner_pos[k] >= 0)
                inner_mask |= (1u << inner_pos[k]);
            else
                outside_mask |= (1u << outside_pos[k]);
        }
        if (!condition(outside, outside_mask)) continue;
        law.prob[inner_mask] += big.prob[mask];
        total += big.prob[mask];
    }
    if (total <= 0.0) throw std::invalid_argument("zero-probability condition");
    for (auto& p : law.prob) p /= total;
    return law;
}

namespace {

// Dinic max-flow on the small dominance network. Node ids:
// 0 = source, 1..n_hi = hi configs, n_hi+1..n_hi+n_lo = lo configs, last = sink.
class Dinic {
  public:
    explicit Dinic(int n) : head_(static_cast<std::size_t>(n), -1), n_(n) {}

    void add_edge(int a, int b, double cap) {
        edges_.push_back({b, head_[static_cast<std::size_t>(a)], cap});
        head_[static_cast<std::size_t>(a)] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({a, head_[static_cast<std::size_t>(b)], 0.0});
        head_[static_cast<std::size_t>(b)] = static_cast<int>(edges_.size()) - 1;
    }

    double max_flow(int s, int t) {
        double flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            for (;;) {
                double f = dfs(s, t, std::numeric_limits<double>::infinity());
                if (f <= 0) break;
                flow += f;
            }
        }
        return flow;
    }

    // Residual-reachability from s after max_flow.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[static_cast<std::size_t>(u)]; e >= 0;
                 e = edges_[static_cast<std::size_t>(e)].next) {
                const auto& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap > kEps && !seen[static_cast<std::size_t>(ed.to)]) {
                    seen[static_cast<std::size_t>(ed.to)] = 1;
                    stack.push_back(ed.to);
                }
            }
        }
        return seen;
    }

    // Flow pushed along the forward edge added k-th (0-based add_edge order).
    double flow_on(std::size_t k) const { return edges_[2 * k + 1].cap; }

  private:
    static constexpr double kEps = 1e-15;
    struct E {
        int to;
        int next;
        double cap;
    };

    bool bfs(int s, int t) {
        level_.assign(static_cast<std::size_t>(n_), -1);
        std::vector<int> queue{s};
        level_[static_cast<std::size_t>(s)] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int e = head_[static_cast<std::size_t>(u)]; e >= 0;
                 e = edges_[static_cast<std::size_t>(e)].next) {
                const auto& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap > kEps && level_[static_cast<std::size_t>(ed.to)] < 0) {
                    level_[static_cast<std::size_t>(ed.to)] =
                        level_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(ed.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    double dfs(int u, int t, double limit) {
        if (u == t || limit <= kEps) return limit;
        for (int& e = iter_[static_cast<std::size_t>(u)]; e >= 0;
             e = edges_[static_cast<std::size_t>(e)].next) {
            auto& ed = edges_[static_cast<std::size_t>(e)];
            if (ed.cap > kEps && level_[static_cast<std::size_t>(ed.to)] ==
                                     level_[static_cast<std::size_t>(u)] + 1) {
                double f = dfs(ed.to, t, std::min(limit, ed.cap));
                if (f > kEps) {
                    ed.cap -= f;
                    edges_[static_cast<std::size_t>(e ^ 1)].cap += f;
                    return f;
                }
            }
        }
        return 0.0;
    }

    std::vector<E> edges_;
    std::vector<int> head_;
    std::vector<int> iter_;
    std::vector<int> level_;
    int n_;
};

} // namespace

DominanceResult check_dominance_exact(const DiscreteGraphLaw& lo,
                                      const DiscreteGraphLaw& hi) {
    if (lo.pairs != hi.pairs || !(lo.domain == hi.domain))
        throw std::invalid_argument("universe mismatch");
    const std::size_t P = lo.n_pairs();
    if (P > 10) throw std::invalid_argument("dominance check is limited to 10 pairs");
    const std::size_t n = std::size_t{1} << P;

    const int source = 0;
    const int sink = static_cast<int>(2 * n + 1);
    auto hi_node = [&](std::size_t m) { return static_cast<int>(1 + m); };
    auto lo_node = [&](std::size_t m) { return static_cast<int>(1 + n + m); };

    Dinic net(static_cast<int>(2 * n + 2));
    // add_edge order matters for flow_on: first the n source edges, then the
    // n sink edges, then comparability edges with recorded (h, l).
    for (std::size_t m = 0; m < n; ++m) net.add_edge(source, hi_node(m), hi.prob[m]);
    for (std::size_t m = 0; m < n; ++m) net.add_edge(lo_node(m), sink, lo.prob[m]);
    std::vector<std::pair<std::size_t, std::size_t>> comp_edges;
    for (std::size_t h = 0; h < n; ++h) {
        // All submasks l of h: the coupling may place (hi = h, lo = l).
        std::size_t l = h;
        for (;;) {
            net.add_edge(hi_node(h), lo_node(l), 2.0);
            comp_edges.emplace_back(h, l);
            if (l == 0) break;
            l = (l - 1) & h;
        }
    }

    DominanceResult res;
    res.flow = net.max_flow(source, sink);
    res.holds = res.flow >= 1.0 - 1e-9;
    if (res.holds) {
        res.coupling.assign(n * n, 0.0);
        for (std::size_t k = 0; k < comp_edges.size(); ++k) {
            auto [h, l] = comp_edges[k];
            res.coupling[h * n + l] = net.flow_on(2 * n + k);
        }
        return res;
    }

    // Violating increasing event: the complement of the down-closure of the
    // residual-reachable hi configurations is an upset U with
    // P_lo(U) > P_hi(U); report its minimal elements.
    std::vector<char> seen = net.reachable(source);
    std::vector<char> down(n, 0);
    for (std::size_t m = 0; m < n; ++m)
        if (seen[static_cast<std::size_t>(hi_node(m))]) down[m] = 1;
    for (std::size_t b = 0; b < P; ++b)
        for (std::size_t m = n; m-- > 0;)
            if (!(m & (std::size_t{1} << b)) && down[m | (std::size_t{1} << b)])
                down[m] = 1;
    for (std::size_t m = 0; m < n; ++m) {
        if (down[m]) continue;
        bool minimal = true;
        for (std::size_t b = 0; b < P && minimal; ++b)
            if ((m & (std::size_t{1} << b)) && !down[m ^ (std::size_t{1} << b)])
                minimal = false;
        if (minimal) res.violating_upset.push_back(static_cast<std::uint32_t>(m));
    }
    return res;
}

} // namespace dyson
