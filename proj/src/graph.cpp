#include "dyson/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyson {

namespace {

void check_edge_in_range(const Interval& v, Vertex i, Vertex j) {
    if (i == j) throw std::invalid_argument("self-loop");
    if (!v.contains(i) || !v.contains(j))
        throw std::invalid_argument("edge endpoint outside vertex interval: (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
}

} // namespace

bool Graph::has_edge(Vertex i, Vertex j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), Edge{i, j});
}

Graph make_graph(Interval v, std::vector<Edge> edges) {
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        check_edge_in_range(v, e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{v, std::move(edges)};
}

Graph graph_from_canonical(Interval v, std::vector<Edge>&& edges) {
    if (!edges.empty()) {
        check_edge_in_range(v, edges.front().first, edges.front().second);
        check_edge_in_range(v, edges.back().first, edges.back().second);
    }
    return Graph{v, std::move(edges)};
}

Graph union_graphs(const Graph& g, const Graph& h) {
    if (!(g.vertices == h.vertices) && !g.vertices.contains(h.vertices))
        throw std::invalid_argument("incompatible vertex sets in graph union");
    std::vector<Edge> merged;
    merged.reserve(g.edges.size() + h.edges.size());
    std::merge(g.edges.begin(), g.edges.end(), h.edges.begin(), h.edges.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return Graph{g.vertices, std::move(merged)};
}

Graph induced_subgraph(const Graph& g, Interval v) {
    if (!g.vertices.contains(v))
        throw std::invalid_argument("induced subgraph interval not contained in vertex set");
    std::vector<Edge> kept;
    for (const auto& e : g.edges)
        if (v.contains(e.first) && v.contains(e.second)) kept.push_back(e);
    return Graph{v, std::move(kept)};
}

} // namespace dyson
