#include "pav/lattice_path.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pav/exact_pow.hpp"

namespace pav {

LatticePath::LatticePath(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 1) throw std::invalid_argument("LatticePath: bad dimensions");
    data_.assign((static_cast<std::size_t>(n) + 1) * static_cast<std::size_t>(d), 0);
}

bool LatticePath::is_bridge() const {
    const auto end = point(n_);
    return std::all_of(end.begin(), end.end(), [](std::int32_t v) { return v == 0; });
}

LatticePath path_from_words(const LayeredWords& omega) {
    const int n = omega.n();
    const int d = omega.d();
    LatticePath path(n, d);
    for (int m = 1; m <= n; ++m) {
        for (int l = 1; l <= d; ++l) path.coord_mut(m, l) = path.coord(m - 1, l);
        path.coord_mut(m, omega.a(m)) += 1;
        path.coord_mut(m, omega.b(m)) -= 1;
    }
    return path;
}

namespace {

void require_zero_sum(std::span<const std::int32_t> x) {
    const std::int64_t s = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    if (s != 0) throw std::invalid_argument("expected a zero-coordinate-sum lattice point");
}

} // namespace

bool in_weyl_k(std::span<const std::int32_t> x, std::int64_t k) {
    require_zero_sum(x);
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (static_cast<std::int64_t>(x[i]) - x[i + 1] < k) return false;
    return true;
}

bool in_weyl_shift_pos(std::span<const std::int32_t> x, std::int64_t m) {
    require_zero_sum(x);
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!exact::ge_two_fifths(static_cast<std::int64_t>(x[i]) - x[i + 1], m)) return false;
    return true;
}

bool in_weyl_shift_neg(std::span<const std::int32_t> x, std::int64_t m) {
    require_zero_sum(x);
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!exact::ge_neg_two_fifths(static_cast<std::int64_t>(x[i]) - x[i + 1], m)) return false;
    return true;
}

std::int64_t weyl_distance(std::span<const std::int32_t> x) {
    require_zero_sum(x);
    const std::size_t d = x.size();
    // An optimal fit takes values among the input coordinates.
    std::vector<std::int32_t> vals(x.begin(), x.end());
    std::sort(vals.begin(), vals.end(), std::greater<>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    const std::size_t k = vals.size();

    std::vector<std::int64_t> dp(k), next(k);
    for (std::size_t v = 0; v < k; ++v)
        dp[v] = std::abs(static_cast<std::int64_t>(x[0]) - vals[v]);
    for (std::size_t i = 1; i < d; ++i) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::size_t v = 0; v < k; ++v) {
            best = std::min(best, dp[v]);
            next[v] = best + std::abs(static_cast<std::int64_t>(x[i]) - vals[v]);
        }
        dp.swap(next);
    }
    return *std::min_element(dp.begin(), dp.end());
}

} // namespace pav
