#pragma once

#include <cstdint>
#include <vector>

#include "pav/bigint.hpp"
#include "pav/rng.hpp"
#include "pav/rsk.hpp"

namespace pav {

struct ShapeSamplerOptions {
    // The exact enumeration runs when both bounds hold; beyond them a
    // Metropolis chain with the same stationary weights takes over.
    std::uint64_t max_partitions = 10'000'000;
    std::uint64_t max_cost = 100'000'000'000ull; // partitions * n, tracks bigint work
    long mcmc_burn_factor = 200;                 // burn-in moves = factor * n
    long mcmc_thin_factor = 5;                   // moves between draws = factor * n
    bool parallel = true;
};

// number of partitions of n into at most d parts, saturating at uint64 max
std::uint64_t partition_count_at_most(int n, int d);

bool shape_sampling_is_exact(int n, int d, const ShapeSamplerOptions& opts = {});

// sum over partitions of n into <= d rows of hook_count^2 (= the number of
// permutations of n with longest decreasing subsequence <= d)
BigInt avoider_count(int n, int d);

// `count` draws with P(shape) proportional to hook_count(shape)^2.
std::vector<Shape> sample_shapes(int n, int d, std::size_t count, SeededRng& rng,
                                 const ShapeSamplerOptions& opts = {});

} // namespace pav
