#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyson/interval.hpp"

namespace dyson {

using Edge = std::pair<Vertex, Vertex>;

// Sparse undirected graph on an interval vertex set. Edges are stored
// canonically: each pair (i, j) with i < j, the list sorted lexicographically
// with no duplicates. Immutable after construction; safe to share across
// threads read-only.
struct Graph {
    Interval vertices;
    std::vector<Edge> edges; // canonical: i < j, lex sorted, unique

    std::size_t edge_count() const { return edges.size(); }
    bool has_edge(Vertex i, Vertex j) const;
};

// Validates, normalizes (i < j), sorts and deduplicates.
Graph make_graph(Interval v, std::vector<Edge> edges);

// Trusted fast path: `edges` must already be canonical. Checked lightly.
Graph graph_from_canonical(Interval v, std::vector<Edge>&& edges);

// Edge set union; vertex sets must match, or h's must be contained in g's
// (the result keeps g's vertex interval).
Graph union_graphs(const Graph& g, const Graph& h);

// Subgraph induced on v: exactly the edges with both endpoints in v.
Graph induced_subgraph(const Graph& g, Interval v);

} // namespace dyson
