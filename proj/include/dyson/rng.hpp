#pragma once

#include <cstdint>

namespace dyson {

// (master seed, stream id) fully determines a sampler's output.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

// Counter-based generator: the i-th output is a strong 64-bit mix of a key
// derived from (master, stream) and the draw counter. Distinct streams give
// independent sequences; replicas run in parallel on distinct streams and
// reproduce bit-for-bit regardless of thread count.
class Rng {
  public:
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    explicit Rng(Seed s)
        : key_(mix(s.master + 0x9E3779B97F4A7C15ULL) ^ mix(s.stream + 0xD1B54A32D192ED03ULL)) {}

    // Derives a sub-generator; used to give each (task, replica) its own
    // stream without coordinating counters.
    Rng derive(std::uint64_t tag) const {
        Rng r = *this;
        r.key_ = mix(key_ + 0x9E3779B97F4A7C15ULL * (tag + 1));
        r.ctr_ = 0;
        return r;
    }

    std::uint64_t next_u64() { return mix(key_ + (++ctr_) * 0x9E3779B97F4A7C15ULL); }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double next_unit_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

  private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

// Stream id for task `tag`, replica `rep` under a base seed: stable across
// runs, collision-free in practice, independent of execution order.
inline Seed substream(Seed base, std::uint64_t tag, std::uint64_t rep = 0) {
    return Seed{base.master,
                Rng::mix(base.stream + 0x9E3779B97F4A7C15ULL * (tag + 1)) + rep};
}

// Fixed substream labels, one per experiment family. Output rows report the
// tag's rep-0 stream id so any row can be re-derived from (seed, tag).
namespace stream_tag {
inline constexpr std::uint64_t sites = 0x5172;      // site retention draws
inline constexpr std::uint64_t bonds = 0xB02D;      // bond draws
inline constexpr std::uint64_t theta = 0x7E7A;      // theta replicas
inline constexpr std::uint64_t lemma = 0x1E44A;     // + size index
inline constexpr std::uint64_t betac = 0xBE7AC;     // + size*1024 + grid idx
inline constexpr std::uint64_t induction_base = 0x6A5E;
inline constexpr std::uint64_t induction_sprinkle = 0x51F3;
} // namespace stream_tag

} // namespace dyson
