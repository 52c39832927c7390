#pragma once

#include <vector>

#include "pav/lattice_path.hpp"
#include "pav/permutation.hpp"

namespace pav {

// d piecewise-linear functions on [0,1], each starting and ending at 0,
// given by breakpoint lists with strictly increasing abscissae.
struct ScaledPathFamily {
    struct Breakpoint {
        double t;
        double y;
    };

    int d = 0;
    int grid_resolution = 0; // shared evaluation grid hint for exports; 0 = breakpoints only
    std::vector<std::vector<Breakpoint>> layers;

    double value(int layer, double t) const; // layer is 1-based
    std::vector<double> values(double t) const;

    // sorted union of all layers' breakpoint abscissae
    std::vector<double> merged_grid() const;
};

// Layer l interpolates (0,0), (i/(n+1), (sigma(i)-i)/sqrt(2dn)) over the
// layer's positions, then (1,0).
ScaledPathFamily build_p_sigma(const Permutation& sigma, int d);

// Coordinate functions k/n -> s(k)/sqrt(2n/d), linearly interpolated.
// Requires a bridge (endpoint 0).
ScaledPathFamily build_s_hat(const LatticePath& path);

// sup over the union of breakpoint grids of the L1 distance between the
// two families' value vectors; exact for piecewise-linear inputs.
double sup_distance(const ScaledPathFamily& p, const ScaledPathFamily& q);

} // namespace pav
