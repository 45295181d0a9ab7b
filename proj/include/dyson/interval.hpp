#pragma once

#include <cstdint>
#include <stdexcept>

namespace dyson {

using Vertex = std::int64_t;

// Half-open integer range [lo, hi). Vertex sets everywhere are intervals;
// negative coordinates are allowed (two-sided domains are [-M, M)).
struct Interval {
    Vertex lo = 0;
    Vertex hi = 0;

    Vertex length() const { return hi - lo; }
    bool empty() const { return hi <= lo; }
    bool contains(Vertex v) const { return v >= lo && v < hi; }
    bool contains(const Interval& o) const { return o.lo >= lo && o.hi <= hi; }
    bool operator==(const Interval& o) const = default;
};

inline Interval make_interval(Vertex lo, Vertex hi) {
    if (lo > hi) throw std::invalid_argument("interval lo must not exceed hi");
    return Interval{lo, hi};
}

} // namespace dyson
