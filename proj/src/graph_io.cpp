#include "dyson/graph_io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dyson {

void write_graph(std::ostream& os, const Graph& g) {
    os << "vertices " << g.vertices.lo << ' ' << g.vertices.hi << '\n';
    for (const auto& e : g.edges)
        os << "edge " << e.first << ' ' << e.second << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

Graph read_graph(std::istream& is) {
    std::string tag;
    Vertex lo, hi;
    if (!(is >> tag >> lo >> hi) || tag != "vertices")
        throw std::invalid_argument("graph file must start with 'vertices <lo> <hi>'");
    Interval v = make_interval(lo, hi);
    std::vector<Edge> edges;
    Vertex i, j;
    while (is >> tag) {
        if (tag != "edge") throw std::invalid_argument("unexpected line tag in graph file: " + tag);
        if (!(is >> i >> j)) throw std::invalid_argument("malformed edge line");
        if (i >= j) throw std::invalid_argument("edge endpoints must satisfy i < j");
        if (!v.contains(i) || !v.contains(j))
            throw std::invalid_argument("edge endpoint outside vertex interval");
        if (!edges.empty() && !(edges.back() < Edge{i, j}))
            throw std::invalid_argument("edge lines must be lexicographically sorted and unique");
        edges.emplace_back(i, j);
    }
    return graph_from_canonical(v, std::move(edges));
}

Graph graph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

} // namespace dyson
