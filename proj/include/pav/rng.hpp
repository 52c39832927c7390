#pragma once

#include <cstdint>
#include <random>

namespace pav {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Reproducible generator: identical (seed, stream) gives an identical draw
// sequence. Parallel replicas each take their own stream id.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {
        std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (stream + 1));
        std::seed_seq seq{splitmix64(s), splitmix64(s), splitmix64(s), splitmix64(s)};
        engine_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::mt19937_64& engine() { return engine_; }

    std::uint64_t next_u64() { return engine_(); }

    // uniform on {lo, ..., hi}
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

} // namespace pav
