#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pav/words.hpp"

namespace pav {

// Integer path s(0)=0, s(1), ..., s(n) in the zero-coordinate-sum sublattice
// of Z^d; every increment is e_i - e_j (the zero step is i=j).
class LatticePath {
public:
    LatticePath(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }

    std::span<const std::int32_t> point(int m) const {
        return {data_.data() + static_cast<std::size_t>(m) * static_cast<std::size_t>(d_),
                static_cast<std::size_t>(d_)};
    }
    std::int32_t coord(int m, int l) const { // l is 1-based
        return data_[static_cast<std::size_t>(m) * static_cast<std::size_t>(d_) +
                     static_cast<std::size_t>(l - 1)];
    }
    std::int32_t& coord_mut(int m, int l) {
        return data_[static_cast<std::size_t>(m) * static_cast<std::size_t>(d_) +
                     static_cast<std::size_t>(l - 1)];
    }

    bool is_bridge() const; // endpoint 0

private:
    int n_, d_;
    std::vector<std::int32_t> data_;
};

// coordinate l at time m equals count_a(l,m) - count_b(l,m)
LatticePath path_from_words(const LayeredWords& omega);

// gap test x_i >= x_{i+1} + k for every i; negative k relaxes the cone
bool in_weyl_k(std::span<const std::int32_t> x, std::int64_t k);
inline bool in_weyl(std::span<const std::int32_t> x) { return in_weyl_k(x, 0); }

// membership in Weyl shifted by +/- m^{0.4}, decided in exact integer arithmetic
bool in_weyl_shift_pos(std::span<const std::int32_t> x, std::int64_t m); // gaps >= m^.4
bool in_weyl_shift_neg(std::span<const std::int32_t> x, std::int64_t m); // gaps >= -m^.4

// L1 distance from a zero-sum point to the nearest weakly decreasing integer
// vector. Exact search over candidate values drawn from the coordinates.
std::int64_t weyl_distance(std::span<const std::int32_t> x);

} // namespace pav
