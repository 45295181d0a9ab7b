#include "dyson/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyson {

namespace {

// Visits every present pair at one distance via geometric gaps: the number of
// skipped candidates between hits is Geometric(p_d). log_u/log(1-p_d) is the
// standard inversion; p_d == 1 degenerates to "every candidate".
template <typename Emit>
void sample_distance(Vertex lo, Vertex m, Vertex d, double l1m, Rng& rng, Emit&& emit) {
    if (l1m == 0.0) return; // p_d == 0
    if (l1m == -std::numeric_limits<double>::infinity()) {
        for (Vertex pos = 0; pos < m; ++pos) emit(lo + pos, lo + pos + d);
        return;
    }
    Vertex pos = -1;
    for (;;) {
        double g = std::log(rng.next_unit_pos()) / l1m;
        if (g >= static_cast<double>(m)) break; // also guards int overflow
        pos += 1 + static_cast<Vertex>(g);
        if (pos >= m) break;
        emit(lo + pos, lo + pos + d);
    }
}

template <typename Emit>
void sample_pairs(Interval v, const EdgeProbFn& f, Seed s, Emit&& emit) {
    FlatProb fp = flatten(f, v);
    const Vertex len = fp.window.length();
    Rng rng(s);
    for (Vertex d = 1; d < len; ++d) {
        double l1m = fp.log_one_minus_at(d);
        sample_distance(fp.window.lo, len - d, d, l1m, rng, emit);
    }
}

} // namespace

Graph sample_bernoulli(Interval v, const EdgeProbFn& f, Seed s) {
    if (v.length() < 1) throw std::invalid_argument("vertex interval must be nonempty");
    std::vector<Edge> edges;
    sample_pairs(v, f, s, [&](Vertex i, Vertex j) { edges.emplace_back(i, j); });
    std::sort(edges.begin(), edges.end());
    return graph_from_canonical(v, std::move(edges));
}

Graph sample_site_bond(Interval v, double lambda, const EdgeProbFn& f, Seed s) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("site retention probability must lie in [0,1]");
    if (v.length() < 1) throw std::invalid_argument("vertex interval must be nonempty");
    // One retention draw per vertex up front, then thin the bond sample: a
    // pair survives iff both endpoints were retained.
    Rng site_rng{substream(s, stream_tag::sites)};
    std::vector<char> retained(static_cast<std::size_t>(v.length()));
    for (auto& r : retained) r = site_rng.bernoulli(lambda) ? 1 : 0;
    std::vector<Edge> edges;
    sample_pairs(v, f, substream(s, stream_tag::bonds), [&](Vertex i, Vertex j) {
        if (retained[static_cast<std::size_t>(i - v.lo)] &&
            retained[static_cast<std::size_t>(j - v.lo)])
            edges.emplace_back(i, j);
    });
    std::sort(edges.begin(), edges.end());
    return graph_from_canonical(v, std::move(edges));
}

Graph sprinkle(const Graph& g, double delta, double alpha, Seed s) {
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    if (delta == 0.0) return g;
    Graph h = sample_bernoulli(g.vertices, dyson_prob(delta, alpha), s);
    return union_graphs(g, h);
}

void accumulate_distance_counts(Interval v, const EdgeProbFn& f, Seed s,
                                std::vector<std::int64_t>& counts_by_distance) {
    if (counts_by_distance.size() < static_cast<std::size_t>(v.length()))
        counts_by_distance.resize(static_cast<std::size_t>(v.length()), 0);
    sample_pairs(v, f, s,
                 [&](Vertex i, Vertex j) { ++counts_by_distance[static_cast<std::size_t>(j - i)]; });
}

} // namespace dyson
