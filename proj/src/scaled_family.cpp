#include "pav/scaled_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pav/words.hpp"

namespace pav {

double ScaledPathFamily::value(int layer, double t) const {
    const auto& bp = layers[static_cast<std::size_t>(layer - 1)];
    if (t <= bp.front().t) return bp.front().y;
    if (t >= bp.back().t) return bp.back().y;
    // first breakpoint with abscissa >= t
    auto it = std::lower_bound(bp.begin(), bp.end(), t,
                               [](const Breakpoint& b, double x) { return b.t < x; });
    if (it->t == t) return it->y;
    const auto& r = *it;
    const auto& l = *(it - 1);
    const double s = (t - l.t) / (r.t - l.t);
    return l.y + s * (r.y - l.y);
}

std::vector<double> ScaledPathFamily::values(double t) const {
    std::vector<double> out(static_cast<std::size_t>(d));
    for (int l = 1; l <= d; ++l) out[static_cast<std::size_t>(l - 1)] = value(l, t);
    return out;
}

std::vector<double> ScaledPathFamily::merged_grid() const {
    std::vector<double> g;
    for (const auto& bp : layers)
        for (const auto& b : bp) g.push_back(b.t);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

ScaledPathFamily build_p_sigma(const Permutation& sigma, int d) {
    const auto dec = layer_decompose(sigma, d);
    const int n = sigma.n();
    const double yscale = 1.0 / std::sqrt(2.0 * d * n);

    ScaledPathFamily fam;
    fam.d = d;
    fam.grid_resolution = n + 1;
    fam.layers.assign(static_cast<std::size_t>(d), {});
    for (int l = 0; l < d; ++l) {
        auto& bp = fam.layers[static_cast<std::size_t>(l)];
        bp.push_back({0.0, 0.0});
        for (int i : dec.layers[static_cast<std::size_t>(l)])
            bp.push_back({static_cast<double>(i) / (n + 1), (sigma(i) - i) * yscale});
        bp.push_back({1.0, 0.0});
    }
    return fam;
}

ScaledPathFamily build_s_hat(const LatticePath& path) {
    if (!path.is_bridge())
        throw std::invalid_argument("build_s_hat: path endpoint must be 0");
    const int n = path.n();
    const int d = path.d();
    const double yscale = 1.0 / std::sqrt(2.0 * n / d);

    ScaledPathFamily fam;
    fam.d = d;
    fam.grid_resolution = n;
    fam.layers.assign(static_cast<std::size_t>(d), {});
    for (int l = 1; l <= d; ++l) {
        auto& bp = fam.layers[static_cast<std::size_t>(l - 1)];
        bp.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            bp.push_back({static_cast<double>(k) / n, path.coord(k, l) * yscale});
    }
    return fam;
}

double sup_distance(const ScaledPathFamily& p, const ScaledPathFamily& q) {
    if (p.d != q.d) throw std::invalid_argument("sup_distance: dimension mismatch");
    std::vector<double> grid = p.merged_grid();
    {
        const auto g2 = q.merged_grid();
        grid.insert(grid.end(), g2.begin(), g2.end());
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    double best = 0.0;
    for (double t : grid) {
        double l1 = 0.0;
        for (int l = 1; l <= p.d; ++l) l1 += std::abs(p.value(l, t) - q.value(l, t));
        best = std::max(best, l1);
    }
    return best;
}

} // namespace pav
