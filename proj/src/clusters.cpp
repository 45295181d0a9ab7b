#include "dyson/clusters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dyson {

UnionFind::UnionFind(std::size_t n)
    : parent_(n), size_(n, 1), components_(static_cast<std::int64_t>(n)),
      max_size_(n ? 1 : 0) {
    std::iota(parent_.begin(), parent_.end(), std::int64_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != static_cast<std::int64_t>(x)) {
        parent_[x] = parent_[static_cast<std::size_t>(parent_[x])];
        x = static_cast<std::size_t>(parent_[x]);
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = static_cast<std::int64_t>(ra);
    size_[ra] += size_[rb];
    max_size_ = std::max(max_size_, size_[ra]);
    --components_;
    return true;
}

RollbackUnionFind::RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::int64_t{0});
}

std::size_t RollbackUnionFind::find(std::size_t x) const {
    while (parent_[x] != static_cast<std::int64_t>(x))
        x = static_cast<std::size_t>(parent_[x]);
    return x;
}

bool RollbackUnionFind::unite(std::size_t a, std::size_t b) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = static_cast<std::int64_t>(ra);
    size_[ra] += size_[rb];
    log_.push_back(rb);
    return true;
}

void RollbackUnionFind::rollback(std::size_t mark) {
    while (log_.size() > mark) {
        std::size_t rb = log_.back();
        log_.pop_back();
        std::size_t ra = static_cast<std::size_t>(parent_[rb]);
        size_[ra] -= size_[rb];
        parent_[rb] = static_cast<std::int64_t>(rb);
    }
}

ClusterPartition clusters(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertices.length());
    UnionFind uf(n);
    const Vertex lo = g.vertices.lo;
    for (const auto& e : g.edges)
        uf.unite(static_cast<std::size_t>(e.first - lo), static_cast<std::size_t>(e.second - lo));

    ClusterPartition p;
    p.domain = g.vertices;
    p.block_of.assign(n, -1);
    std::vector<std::int64_t> block_of_root(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t r = uf.find(v);
        if (block_of_root[r] < 0) {
            block_of_root[r] = p.block_count();
            p.block_size.push_back(0);
        }
        p.block_of[v] = block_of_root[r];
        ++p.block_size[static_cast<std::size_t>(block_of_root[r])];
    }
    return p;
}

std::vector<Vertex> largest_cluster(const ClusterPartition& p) {
    if (p.domain.empty()) throw std::invalid_argument("empty domain");
    std::int64_t best = 0;
    for (std::int64_t b = 1; b < p.block_count(); ++b)
        if (p.block_size[static_cast<std::size_t>(b)] > p.block_size[static_cast<std::size_t>(best)])
            best = b; // first block with the max size wins: smallest min vertex
    std::vector<Vertex> members;
    members.reserve(static_cast<std::size_t>(p.block_size[static_cast<std::size_t>(best)]));
    for (Vertex v = p.domain.lo; v < p.domain.hi; ++v)
        if (p.block(v) == best) members.push_back(v);
    return members;
}

std::int64_t largest_cluster_size(const ClusterPartition& p) {
    if (p.domain.empty()) throw std::invalid_argument("empty domain");
    return *std::max_element(p.block_size.begin(), p.block_size.end());
}

namespace {

// Groups i's vertices by source block, ordered by first appearance in i.
struct InducedGroups {
    std::vector<std::int64_t> order;               // block ids, by first appearance
    std::vector<std::vector<Vertex>> members;      // parallel to order
};

InducedGroups induced_groups(const ClusterPartition& p, Interval i) {
    if (!p.domain.contains(i))
        throw std::invalid_argument("interval not contained in partition domain");
    InducedGroups g;
    std::vector<std::int64_t> pos_of_block(static_cast<std::size_t>(p.block_count()), -1);
    for (Vertex v = i.lo; v < i.hi; ++v) {
        std::int64_t b = p.block(v);
        std::int64_t pos = pos_of_block[static_cast<std::size_t>(b)];
        if (pos < 0) {
            pos = static_cast<std::int64_t>(g.order.size());
            pos_of_block[static_cast<std::size_t>(b)] = pos;
            g.order.push_back(b);
            g.members.emplace_back();
        }
        g.members[static_cast<std::size_t>(pos)].push_back(v);
    }
    return g;
}

} // namespace

std::vector<std::vector<Vertex>> induced_partition(const ClusterPartition& p, Interval i) {
    return induced_groups(p, i).members;
}

std::vector<Vertex> largest_induced(const ClusterPartition& p, Interval i) {
    if (i.empty()) throw std::invalid_argument("empty domain");
    InducedGroups g = induced_groups(p, i);
    std::size_t best = 0;
    for (std::size_t k = 1; k < g.members.size(); ++k)
        if (g.members[k].size() > g.members[best].size()) best = k;
    return std::move(g.members[best]);
}

std::int64_t largest_induced_size(const ClusterPartition& p, Interval i) {
    if (i.empty()) throw std::invalid_argument("empty domain");
    InducedGroups g = induced_groups(p, i);
    std::size_t best = 0;
    for (std::size_t k = 1; k < g.members.size(); ++k)
        if (g.members[k].size() > g.members[best].size()) best = k;
    return static_cast<std::int64_t>(g.members[best].size());
}

} // namespace dyson
