#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pav/rng.hpp"

namespace pav {

// Time-discretized d x d complex Hermitian bridge with zero trace; pinned to
// the zero matrix at t=0 and t=1.
struct HermitianBridgePath {
    int d = 0;
    std::vector<double> times; // 0 = t_0 < ... < t_G = 1
    // matrices[k] is row-major d x d
    std::vector<std::vector<std::complex<double>>> matrices;

    const std::complex<double>& entry(int k, int i, int j) const {
        return matrices[static_cast<std::size_t>(k)]
                       [static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                        static_cast<std::size_t>(j)];
    }
};

// ranked eigenvalues per grid time, non-increasing, zero sum
struct EigenPath {
    int d = 0;
    std::vector<double> times;
    std::vector<std::vector<double>> values; // values[k][i] = lambda_{i+1}(t_k)
};

// Diagonal: d standard bridges projected to zero sum. Off-diagonal: complex
// bridges with Var(Re Z_ij(t)) = t(1-t)/2. G uniform grid intervals.
HermitianBridgePath sample_hermitian_bridge(int d, int grid, SeededRng& rng);

// H - (tr H / d) I per grid time
HermitianBridgePath traceless_project(const HermitianBridgePath& h);

// Cyclic complex Jacobi iteration for a d x d Hermitian matrix (d <= 8).
// Returns eigenvalues in non-increasing order; vectors optional (columns).
std::vector<double> eig_hermitian(std::span<const std::complex<double>> m, int d,
                                  std::vector<std::complex<double>>* vectors = nullptr);

// d=2 ranked eigenvalues of (1/sqrt 2) [[b1, b2+ib3],[b2-ib3, -b1]]
std::pair<double, double> d2_closed_form(double b1, double b2, double b3);

EigenPath eigenvalue_process(const HermitianBridgePath& z);

// Householder reflection through the vector u with u_i = (2d-2*sqrt(d))^{-1/2}
// for i < d and u_d = (1-sqrt(d)) / sqrt(2d-2*sqrt(d)); an orthogonal
// involution carrying the ordered zero-sum cone onto a cone with last
// coordinate zero.
struct ConeTransform {
    int d = 0;
    std::vector<double> u;
};

ConeTransform householder(int d);
std::vector<double> reflect(const ConeTransform& t, std::span<const double> x);

// product over i<j of (x_i - x_j); exact on lattice points
std::int64_t vandermonde_u(std::span<const std::int64_t> x);
double vandermonde_u(std::span<const double> x);

// Normalized density of the ranked eigenvalues at time t on the ordered
// zero-sum cone, proportional to U(sqrt(d/2) u)^2 exp(-d|u|^2 / (4t(1-t))).
// Densities are taken with respect to (d-1)-dimensional Hausdorff measure on
// the zero-sum hyperplane. Normalization constants are cached per (d, t).
double bridge_marginal_density(int d, double t, std::span<const double> u);

// marginal density of lambda_1 for d=2 (the u = (v,-v) line), normalized in v
double bridge_marginal_density_d2_top(double t, double v);

} // namespace pav
