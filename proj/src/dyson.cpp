#include "pav/dyson.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pav {

namespace {

// one standard Brownian bridge on the given times, sequential conditioning
std::vector<double> brownian_bridge(const std::vector<double>& times, SeededRng& rng) {
    const std::size_t g = times.size();
    std::vector<double> b(g, 0.0);
    for (std::size_t k = 1; k + 1 < g; ++k) {
        const double t0 = times[k - 1], t1 = times[k];
        const double ratio = (1.0 - t1) / (1.0 - t0);
        const double var = (t1 - t0) * ratio;
        b[k] = b[k - 1] * ratio + std::sqrt(var) * rng.normal();
    }
    return b;
}

} // namespace

HermitianBridgePath sample_hermitian_bridge(int d, int grid, SeededRng& rng) {
    if (d < 1 || grid < 2) throw std::invalid_argument("sample_hermitian_bridge: need d >= 1, G >= 2");
    HermitianBridgePath out;
    out.d = d;
    out.times.resize(static_cast<std::size_t>(grid) + 1);
    for (int k = 0; k <= grid; ++k)
        out.times[static_cast<std::size_t>(k)] = static_cast<double>(k) / grid;

    const std::size_t g = out.times.size();
    const std::size_t dd = static_cast<std::size_t>(d);
    out.matrices.assign(g, std::vector<std::complex<double>>(dd * dd, 0.0));

    // diagonal bridges, projected to zero sum
    std::vector<std::vector<double>> diag(dd);
    for (std::size_t i = 0; i < dd; ++i) diag[i] = brownian_bridge(out.times, rng);
    for (std::size_t k = 0; k < g; ++k) {
        double mean = 0.0;
        for (std::size_t i = 0; i < dd; ++i) mean += diag[i][k];
        mean /= static_cast<double>(d);
        for (std::size_t i = 0; i < dd; ++i)
            out.matrices[k][i * dd + i] = diag[i][k] - mean;
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < dd; ++i) {
        for (std::size_t j = i + 1; j < dd; ++j) {
            const auto re = brownian_bridge(out.times, rng);
            const auto im = brownian_bridge(out.times, rng);
            for (std::size_t k = 0; k < g; ++k) {
                const std::complex<double> z(re[k] * inv_sqrt2, im[k] * inv_sqrt2);
                out.matrices[k][i * dd + j] = z;
                out.matrices[k][j * dd + i] = std::conj(z);
            }
        }
    }
    return out;
}

HermitianBridgePath traceless_project(const HermitianBridgePath& h) {
    HermitianBridgePath out = h;
    const std::size_t dd = static_cast<std::size_t>(h.d);
    for (auto& m : out.matrices) {
        std::complex<double> tr = 0.0;
        for (std::size_t i = 0; i < dd; ++i) tr += m[i * dd + i];
        tr /= static_cast<double>(h.d);
        for (std::size_t i = 0; i < dd; ++i) m[i * dd + i] -= tr;
    }
    return out;
}

std::vector<double> eig_hermitian(std::span<const std::complex<double>> m, int d,
                                  std::vector<std::complex<double>>* vectors) {
    const std::size_t dd = static_cast<std::size_t>(d);
    if (m.size() != dd * dd) throw std::invalid_argument("eig_hermitian: size mismatch");

    double scale = 0.0;
    for (const auto& z : m) scale += std::norm(z);
    scale = std::sqrt(scale);
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j)
            if (std::abs(m[i * dd + j] - std::conj(m[j * dd + i])) > 1e-10 * std::max(1.0, scale))
                throw std::invalid_argument("eig_hermitian: input is not Hermitian");

    std::vector<std::complex<double>> a(m.begin(), m.end());
    std::vector<std::complex<double>> v;
    if (vectors) {
        v.assign(dd * dd, 0.0);
        for (std::size_t i = 0; i < dd; ++i) v[i * dd + i] = 1.0;
    }

    const double tol = 1e-13 * std::max(1.0, scale);
    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < dd; ++i)
            for (std::size_t j = 0; j < dd; ++j)
                if (i != j) s += std::norm(a[i * dd + j]);
        return std::sqrt(s);
    };

    int sweeps = 0;
    while (off_norm() > tol) {
        if (++sweeps > 100) throw std::runtime_error("eig_hermitian: no convergence in 100 sweeps");
        for (std::size_t p = 0; p < dd; ++p) {
            for (std::size_t q = p + 1; q < dd; ++q) {
                const std::complex<double> apq = a[p * dd + q];
                const double g = std::abs(apq);
                if (g <= tol / (static_cast<double>(dd) * static_cast<double>(dd))) continue;
                const std::complex<double> alpha = apq / g; // phase
                const double app = a[p * dd + p].real();
                const double aqq = a[q * dd + q].real();
                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a[p * dd + p] = app - t * g;
                a[q * dd + q] = aqq + t * g;
                a[p * dd + q] = 0.0;
                a[q * dd + p] = 0.0;
                for (std::size_t k = 0; k < dd; ++k) {
                    if (k == p || k == q) continue;
                    const std::complex<double> akp = a[k * dd + p];
                    const std::complex<double> akq = a[k * dd + q];
                    a[k * dd + p] = c * akp - s * std::conj(alpha) * akq;
                    a[k * dd + q] = s * alpha * akp + c * akq;
                    a[p * dd + k] = std::conj(a[k * dd + p]);
                    a[q * dd + k] = std::conj(a[k * dd + q]);
                }
                if (vectors) {
                    for (std::size_t k = 0; k < dd; ++k) {
                        const std::complex<double> vkp = v[k * dd + p];
                        const std::complex<double> vkq = v[k * dd + q];
                        v[k * dd + p] = c * vkp - s * std::conj(alpha) * vkq;
                        v[k * dd + q] = s * alpha * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<int> order(dd);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * dd + static_cast<std::size_t>(x)].real() >
               a[static_cast<std::size_t>(y) * dd + static_cast<std::size_t>(y)].real();
    });
    std::vector<double> eig(dd);
    for (std::size_t i = 0; i < dd; ++i)
        eig[i] = a[static_cast<std::size_t>(order[i]) * dd + static_cast<std::size_t>(order[i])].real();
    if (vectors) {
        vectors->assign(dd * dd, 0.0);
        for (std::size_t col = 0; col < dd; ++col)
            for (std::size_t k = 0; k < dd; ++k)
                (*vectors)[k * dd + col] = v[k * dd + static_cast<std::size_t>(order[col])];
    }
    return eig;
}

std::pair<double, double> d2_closed_form(double b1, double b2, double b3) {
    const double r = std::sqrt(b1 * b1 + b2 * b2 + b3 * b3);
    const double lam = r / std::sqrt(2.0);
    return {lam, -lam};
}

EigenPath eigenvalue_process(const HermitianBridgePath& z) {
    EigenPath out;
    out.d = z.d;
    out.times = z.times;
    out.values.reserve(z.matrices.size());
    for (const auto& m : z.matrices) out.values.push_back(eig_hermitian(m, z.d));
    return out;
}

ConeTransform householder(int d) {
    if (d < 2) throw std::invalid_argument("householder: need d >= 2");
    ConeTransform t;
    t.d = d;
    t.u.resize(static_cast<std::size_t>(d));
    const double denom = std::sqrt(2.0 * d - 2.0 * std::sqrt(static_cast<double>(d)));
    for (int i = 0; i + 1 < d; ++i) t.u[static_cast<std::size_t>(i)] = 1.0 / denom;
    t.u[static_cast<std::size_t>(d - 1)] = (1.0 - std::sqrt(static_cast<double>(d))) / denom;
    return t;
}

std::vector<double> reflect(const ConeTransform& t, std::span<const double> x) {
    if (static_cast<int>(x.size()) != t.d) throw std::invalid_argument("householder reflect: dimension mismatch");
    double ip = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) ip += x[i] * t.u[i];
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] -= 2.0 * ip * t.u[i];
    return out;
}

std::int64_t vandermonde_u(std::span<const std::int64_t> x) {
    __int128 prod = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            prod *= static_cast<__int128>(x[i] - x[j]);
            if (prod > static_cast<__int128>(INT64_MAX) || prod < -static_cast<__int128>(INT64_MAX))
                throw std::overflow_error("vandermonde_u: product exceeds 64 bits");
        }
    }
    return static_cast<std::int64_t>(prod);
}

double vandermonde_u(std::span<const double> x) {
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) prod *= x[i] - x[j];
    return prod;
}

namespace {

double density_kernel(int d, double t, std::span<const double> u) {
    std::vector<double> scaled(u.size());
    const double f = std::sqrt(static_cast<double>(d) / 2.0);
    for (std::size_t i = 0; i < u.size(); ++i) scaled[i] = f * u[i];
    const double uu = vandermonde_u(std::span<const double>(scaled));
    double norm2 = 0.0;
    for (double v : u) norm2 += v * v;
    return uu * uu * std::exp(-d * norm2 / (4.0 * t * (1.0 - t)));
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 40);
}

// normalizer over the ordered zero-sum cone w.r.t. Hausdorff measure
double normalizer(int d, double t) {
    const double spread = std::sqrt(t * (1.0 - t));
    const double r = 15.0 * spread;
    if (d == 2) {
        auto f = [&](double v) {
            const double u[2] = {v, -v};
            return density_kernel(2, t, u);
        };
        return std::sqrt(2.0) * integrate(f, 0.0, r, 1e-9);
    }
    if (d == 3) {
        auto outer = [&](double u1) {
            auto inner = [&](double u2) {
                const double u[3] = {u1, u2, -u1 - u2};
                return density_kernel(3, t, u);
            };
            if (u1 <= 0.0) return 0.0;
            return integrate(inner, -u1 / 2.0, u1, 1e-10);
        };
        return std::sqrt(3.0) * integrate(outer, 0.0, r, 1e-9);
    }
    // Monte Carlo self-normalization for d >= 4: importance sample from the
    // Gaussian factor restricted to the cone by sorting.
    SeededRng rng(0xD15C0u, static_cast<std::uint64_t>(d) * 1000003u +
                                static_cast<std::uint64_t>(t * 1e9));
    const double sigma2 = 2.0 * t * (1.0 - t) / d; // matches the exponential factor
    const int samples = 200000;
    double acc = 0.0;
    std::vector<double> x(static_cast<std::size_t>(d));
    double lgfact = 0.0;
    for (int i = 2; i <= d; ++i) lgfact += std::log(static_cast<double>(i));
    for (int s = 0; s < samples; ++s) {
        double mean = 0.0;
        for (auto& xi : x) {
            xi = std::sqrt(sigma2) * rng.normal();
            mean += xi;
        }
        mean /= d;
        for (auto& xi : x) xi -= mean;
        std::sort(x.begin(), x.end(), std::greater<>());
        // proposal density on the cone: d! * zero-sum Gaussian Hausdorff density
        double norm2 = 0.0;
        for (double xi : x) norm2 += xi * xi;
        const double logq =
            lgfact - norm2 / (2.0 * sigma2) - 0.5 * (d - 1) * std::log(2.0 * M_PI * sigma2);
        acc += density_kernel(d, t, x) / std::exp(logq);
    }
    return acc / samples;
}

std::map<std::pair<int, double>, double>& norm_cache() {
    static std::map<std::pair<int, double>, double> cache;
    return cache;
}
std::mutex& norm_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

double bridge_marginal_density(int d, double t, std::span<const double> u) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("bridge_marginal_density: need 0 < t < 1");
    if (static_cast<int>(u.size()) != d) throw std::invalid_argument("bridge_marginal_density: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += u[i];
        if (i + 1 < u.size() && u[i] < u[i + 1])
            throw std::invalid_argument("bridge_marginal_density: u must be ordered non-increasing");
    }
    if (std::abs(sum) > 1e-9) throw std::invalid_argument("bridge_marginal_density: u must have zero sum");

    double z;
    {
        std::lock_guard<std::mutex> lock(norm_mutex());
        auto& cache = norm_cache();
        const auto key = std::make_pair(d, t);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, normalizer(d, t)).first;
        z = it->second;
    }
    return density_kernel(d, t, u) / z;
}

double bridge_marginal_density_d2_top(double t, double v) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("need 0 < t < 1");
    if (v < 0.0) return 0.0;
    const double s = t * (1.0 - t);
    const double z = std::sqrt(M_PI) / 4.0 * std::pow(s, 1.5);
    return v * v * std::exp(-v * v / s) / z;
}

} // namespace pav
