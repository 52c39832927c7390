#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pav/bigint.hpp"
#include "pav/rng.hpp"
#include "pav/rsk.hpp"
#include "pav/shape_sampler.hpp"
#include "pav/words.hpp"

namespace pav {

// uniform standard Young tableau of the shape, by hook walks
Tableau random_syt(const Shape& shape, SeededRng& rng);

// Exactly uniform over the permutations of n with longest decreasing
// subsequence <= d whenever the shape step is exact (see shape_sampler).
Permutation sample_avoider(int n, int d, SeededRng& rng, const ShapeSamplerOptions& opts = {});

// Batch variant: shapes are drawn in one pass on stream `stream_base`, the
// two tableaux of replica r use stream `stream_base + 1 + r`. Results do not
// depend on thread count.
std::vector<Permutation> sample_avoiders(int n, int d, std::size_t count, std::uint64_t seed,
                                         std::uint64_t stream_base = 0,
                                         const ShapeSamplerOptions& opts = {});

// i.i.d. uniform letters for both words
LayeredWords sample_lazy_walk(int n, int d, SeededRng& rng);

// Exact counts of Weyl-confined word pairs: N(t, x) = number of pairs of
// length t whose path stays in the chamber and ends at x.
class BridgeDPTable {
public:
    BridgeDPTable(int n, int d, std::uint64_t max_states);

    int n() const { return n_; }
    int d() const { return d_; }

    const BigInt& count(int t, const std::vector<int>& gaps) const; // zero when absent
    const BigInt& bridge_count() const;                             // N(n, 0)

    std::uint64_t state_count() const;
    std::string to_json() const; // {n, d, states:[{gaps, count}]} at time n

    friend LayeredWords sample_weyl_bridge(const BridgeDPTable& table, SeededRng& rng);

private:
    using Level = std::unordered_map<std::uint64_t, BigInt>;
    std::uint64_t key_of(const std::vector<int>& gaps) const;

    int n_, d_;
    std::uint64_t span_; // gap values live in [0, span_)
    std::vector<Level> levels_;
};

// Predicts the DP footprint and refuses with the estimate when it exceeds
// max_states.
BridgeDPTable bridge_dp(int n, int d, std::uint64_t max_states = 20'000'000);

// uniform over word pairs confined to the chamber from (0,0) to (n,0)
LayeredWords sample_weyl_bridge(const BridgeDPTable& table, SeededRng& rng);

} // namespace pav
