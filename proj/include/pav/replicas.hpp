#pragma once

#include <cstdint>

#include "pav/rng.hpp"

namespace pav {

// Replica fan-out: body(r, rng) runs once per replica with its own stream, so
// results are identical whether the loop is serial or OpenMP-parallel. The
// body must only write replica-owned slots.
template <class Body>
void for_each_replica(std::size_t count, std::uint64_t seed, std::uint64_t stream_base,
                      bool parallel, Body&& body) {
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(count); ++r) {
            SeededRng rng(seed, stream_base + static_cast<std::uint64_t>(r));
            body(static_cast<std::size_t>(r), rng);
        }
    } else {
        for (std::size_t r = 0; r < count; ++r) {
            SeededRng rng(seed, stream_base + r);
            body(r, rng);
        }
    }
}

} // namespace pav
