#pragma once

#include <cstdint>
#include <vector>

#include "dyson/graph.hpp"
#include "dyson/interval.hpp"

namespace dyson {

// Connected-component decomposition of a graph on an interval. Block ids are
// assigned in order of first appearance scanning the domain left to right, so
// the block containing the smallest vertex has id 0. That makes every
// "maximum size, tie by smallest minimum vertex" selection equal to "maximum
// size, smallest block id".
struct ClusterPartition {
    Interval domain;
    std::vector<std::int64_t> block_of;   // index: v - domain.lo
    std::vector<std::int64_t> block_size; // index: block id
    std::int64_t block_count() const { return static_cast<std::int64_t>(block_size.size()); }
    std::int64_t block(Vertex v) const { return block_of[static_cast<std::size_t>(v - domain.lo)]; }
};

ClusterPartition clusters(const Graph& g);

// Members (ascending) of a maximum-size block; ties broken by smallest
// minimum vertex. Throws on an empty domain.
std::vector<Vertex> largest_cluster(const ClusterPartition& p);

// The partition induced on i: all nonempty intersections C ∩ i, ordered by
// their minimum vertex. Elements need not be connected inside the subgraph
// on i.
std::vector<std::vector<Vertex>> induced_partition(const ClusterPartition& p, Interval i);

// Maximum-size element of induced_partition, same tie-break.
std::vector<Vertex> largest_induced(const ClusterPartition& p, Interval i);

std::int64_t largest_cluster_size(const ClusterPartition& p);
std::int64_t largest_induced_size(const ClusterPartition& p, Interval i);

// Union-find over a contiguous index range with union by size and path
// compression. Exposed for samplers and estimators that only need component
// sizes and want to skip Graph canonicalization.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    // Returns true when the union merged two distinct components.
    bool unite(std::size_t a, std::size_t b);
    std::int64_t size_of(std::size_t x) { return size_[find(x)]; }
    std::int64_t component_count() const { return components_; }
    std::int64_t max_component_size() const { return max_size_; }

  private:
    std::vector<std::int64_t> parent_;
    std::vector<std::int64_t> size_;
    std::int64_t components_;
    std::int64_t max_size_;
};

// Union by size without path compression, with undo. Used where many small
// edge batches are applied to a shared base state (per-child goodness in the
// renormalization experiment).
class RollbackUnionFind {
  public:
    explicit RollbackUnionFind(std::size_t n);
    std::size_t find(std::size_t x) const;
    bool unite(std::size_t a, std::size_t b);
    std::size_t checkpoint() const { return log_.size(); }
    void rollback(std::size_t mark);
    std::int64_t size_of(std::size_t x) const { return size_[find(x)]; }

  private:
    std::vector<std::int64_t> parent_;
    std::vector<std::int64_t> size_;
    std::vector<std::size_t> log_; // roots absorbed, in order
};

} // namespace dyson
