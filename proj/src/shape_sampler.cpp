#include "pav/shape_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pav {

namespace {

// ---- exact enumeration ----------------------------------------------------
//
// Weights are w(lambda) = hook_count(lambda)^2, handled through the shifted
// rows mu_i = lambda_i + d - i and f = n! * prod_{i<j}(mu_i - mu_j) / prod mu_i!.
// The scan walks lambda_2 upward inside a fixed tail (lambda_3, ..., lambda_d)
// and moves one cell from row 1 to row 2 per step, updating w by an exact
// integer ratio. Tail starts are recomputed from factorials.

struct Segment {
    std::vector<int> tail; // lambda_3 >= ... >= lambda_d (empty for d <= 2)
    int k_lo = 0, k_hi = -1; // lambda_2 range
};

std::vector<int> mu_of(int n, int d, const std::vector<int>& tail, int k) {
    std::vector<int> lambda(static_cast<std::size_t>(d), 0);
    int s = 0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        lambda[i + 2] = tail[i];
        s += tail[i];
    }
    if (d >= 2) lambda[1] = k;
    lambda[0] = n - s - (d >= 2 ? k : 0);
    std::vector<int> mu(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) mu[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + d - 1 - i;
    return mu;
}

Shape shape_of(int n, int d, const std::vector<int>& tail, int k) {
    Shape lambda;
    int s = 0;
    for (int t : tail) s += t;
    lambda.push_back(n - s - (d >= 2 ? k : 0));
    if (d >= 2) lambda.push_back(k);
    for (int t : tail) lambda.push_back(t);
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

// f^2 at a segment start, from scratch
BigInt weight_at(const BigInt& n_fact, int n, int d, const std::vector<int>& tail, int k) {
    const auto mu = mu_of(n, d, tail, k);
    BigInt f = n_fact;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            f *= static_cast<unsigned long>(mu[static_cast<std::size_t>(i)] -
                                            mu[static_cast<std::size_t>(j)]);
    BigInt fac;
    for (int i = 0; i < d; ++i) {
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(mu[static_cast<std::size_t>(i)]));
        mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), fac.get_mpz_t());
    }
    return f * f;
}

// collects the ratio factors for the move lambda_2 -> lambda_2 + 1
void step_factors(const std::vector<int>& mu, int d, std::vector<unsigned long>& num,
                  std::vector<unsigned long>& den) {
    num.clear();
    den.clear();
    const long m1 = mu[0], m2 = mu[1];
    num.push_back(static_cast<unsigned long>(m1 - m2 - 2));
    den.push_back(static_cast<unsigned long>(m1 - m2));
    for (int kk = 2; kk < d; ++kk) {
        num.push_back(static_cast<unsigned long>(m1 - 1 - mu[static_cast<std::size_t>(kk)]));
        den.push_back(static_cast<unsigned long>(m1 - mu[static_cast<std::size_t>(kk)]));
        num.push_back(static_cast<unsigned long>(m2 + 1 - mu[static_cast<std::size_t>(kk)]));
        den.push_back(static_cast<unsigned long>(m2 - mu[static_cast<std::size_t>(kk)]));
    }
    num.push_back(static_cast<unsigned long>(m1));
    den.push_back(static_cast<unsigned long>(m2 + 1));
}

// w *= (prod factors)^2, chunked so intermediate products fit 64 bits
void apply_squared(BigInt& w, const std::vector<unsigned long>& factors, bool multiply) {
    unsigned long acc = 1;
    auto flush = [&]() {
        if (acc == 1) return;
        if (multiply) {
            mpz_mul_ui(w.get_mpz_t(), w.get_mpz_t(), acc);
            mpz_mul_ui(w.get_mpz_t(), w.get_mpz_t(), acc);
        } else {
            mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), acc);
            mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), acc);
        }
        acc = 1;
    };
    for (unsigned long f : factors) {
        if (f == 1) continue;
        if (acc > (~0ul) / f) flush();
        acc *= f;
    }
    flush();
}

// enumerate tails lambda_3 >= ... >= lambda_d with a feasible lambda_2 range
void build_tails(int n, int d, std::vector<Segment>& out) {
    if (d <= 2) {
        Segment seg;
        seg.k_lo = 0;
        seg.k_hi = (d == 2) ? n / 2 : 0;
        out.push_back(std::move(seg));
        return;
    }
    std::vector<int> tail;
    auto rec = [&](auto&& self, int idx, int maxPart, int used) -> void {
        if (idx == d - 2) {
            Segment seg;
            seg.tail = tail;
            seg.k_lo = tail.empty() ? 0 : tail[0];
            seg.k_hi = (n - used) / 2;
            if (seg.k_lo <= seg.k_hi) out.push_back(std::move(seg));
            return;
        }
        for (int part = 0; part <= std::min(maxPart, n - used); ++part) {
            tail.push_back(part);
            self(self, idx + 1, part, used + part);
            tail.pop_back();
        }
    };
    rec(rec, 0, n, 0);
}

} // namespace

std::uint64_t partition_count_at_most(int n, int d) {
    if (n < 0) return 0;
    // p(n, k): partitions of n into parts <= k equals partitions into <= k parts
    std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    const std::uint64_t cap = ~0ull;
    for (int part = 1; part <= d; ++part) {
        for (int m = part; m <= n; ++m) {
            const std::uint64_t a = p[static_cast<std::size_t>(m)];
            const std::uint64_t b = p[static_cast<std::size_t>(m - part)];
            p[static_cast<std::size_t>(m)] = (a > cap - b) ? cap : a + b;
        }
    }
    return p[static_cast<std::size_t>(n)];
}

bool shape_sampling_is_exact(int n, int d, const ShapeSamplerOptions& opts) {
    const std::uint64_t parts = partition_count_at_most(n, d);
    if (parts > opts.max_partitions) return false;
    const long double cost = static_cast<long double>(parts) * static_cast<long double>(n);
    return cost <= static_cast<long double>(opts.max_cost);
}

namespace {

// one enumeration sweep over a segment; visit(w, tail, k) per partition
template <class Visit>
void scan_segment(const BigInt& n_fact, int n, int d, const Segment& seg, Visit&& visit) {
    BigInt w = weight_at(n_fact, n, d, seg.tail, seg.k_lo);
    std::vector<int> mu = mu_of(n, d, seg.tail, seg.k_lo);
    std::vector<unsigned long> num, den;
    for (int k = seg.k_lo;; ++k) {
        visit(w, k);
        if (k == seg.k_hi) break;
        step_factors(mu, d, num, den);
        apply_squared(w, num, true);
        apply_squared(w, den, false);
        mu[0] -= 1;
        mu[1] += 1;
    }
}

} // namespace

BigInt avoider_count(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("avoider_count: bad arguments");
    if (n == 0) return 1;
    BigInt n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
    std::vector<Segment> segs;
    build_tails(n, d, segs);
    BigInt total = 0;
#pragma omp parallel
    {
        BigInt local = 0;
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(segs.size()); ++s)
            scan_segment(n_fact, n, d, segs[static_cast<std::size_t>(s)],
                         [&](const BigInt& w, int) { local += w; });
#pragma omp critical
        total += local;
    }
    return total;
}

namespace {

std::vector<Shape> sample_shapes_exact(int n, int d, std::size_t count, SeededRng& rng,
                                       bool parallel) {
    BigInt n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
    std::vector<Segment> segs;
    build_tails(n, d, segs);
    const std::size_t S = segs.size();

    std::vector<BigInt> seg_sum(S);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(S); ++s) {
        BigInt acc = 0;
        scan_segment(n_fact, n, d, segs[static_cast<std::size_t>(s)],
                     [&](const BigInt& w, int) { acc += w; });
        seg_sum[static_cast<std::size_t>(s)] = std::move(acc);
    }

    std::vector<BigInt> prefix(S + 1);
    prefix[0] = 0;
    for (std::size_t s = 0; s < S; ++s) prefix[s + 1] = prefix[s] + seg_sum[s];
    const BigInt& total = prefix[S];

    // sorted exact draws, assigned in one more sweep
    std::vector<std::pair<BigInt, std::size_t>> draws(count);
    for (std::size_t i = 0; i < count; ++i)
        draws[i] = {uniform_bigint_below(rng, total), i};
    std::sort(draws.begin(), draws.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Shape> out(count);
    // draw index range per segment
    std::vector<std::pair<std::size_t, std::size_t>> ranges(S);
    {
        std::size_t lo = 0;
        for (std::size_t s = 0; s < S; ++s) {
            std::size_t hi = lo;
            while (hi < count && draws[hi].first < prefix[s + 1]) ++hi;
            ranges[s] = {lo, hi};
            lo = hi;
        }
    }

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(S); ++s) {
        auto [lo, hi] = ranges[static_cast<std::size_t>(s)];
        if (lo == hi) continue;
        BigInt acc = prefix[static_cast<std::size_t>(s)];
        std::size_t next = lo;
        scan_segment(n_fact, n, d, segs[static_cast<std::size_t>(s)], [&](const BigInt& w, int k) {
            if (next == hi) return;
            acc += w;
            while (next < hi && draws[next].first < acc) {
                out[draws[next].second] = shape_of(n, d, segs[static_cast<std::size_t>(s)].tail, k);
                ++next;
            }
        });
    }
    return out;
}

// Metropolis chain on shifted rows mu, stationary on hook_count^2. Used past
// the exact enumeration bounds; burn-in and thinning are configuration.
std::vector<Shape> sample_shapes_mcmc(int n, int d, std::size_t count, SeededRng& rng,
                                      const ShapeSamplerOptions& opts) {
    std::vector<long> mu(static_cast<std::size_t>(d));
    {
        // balanced start: lambda_i ~ n/d
        const long base = n / d;
        long rem = n % d;
        for (int i = 0; i < d; ++i) {
            long lam = base + (i < rem ? 1 : 0);
            mu[static_cast<std::size_t>(i)] = lam + d - 1 - i;
        }
    }
    std::vector<long> prop(static_cast<std::size_t>(d));
    auto step = [&]() {
        const int i = static_cast<int>(rng.uniform_int(0, d - 1));
        int j = static_cast<int>(rng.uniform_int(0, d - 2));
        if (j >= i) ++j;
        prop = mu;
        prop[static_cast<std::size_t>(i)] += 1;
        prop[static_cast<std::size_t>(j)] -= 1;
        for (int k = 0; k + 1 < d; ++k)
            if (prop[static_cast<std::size_t>(k)] <= prop[static_cast<std::size_t>(k + 1)]) return;
        if (prop[static_cast<std::size_t>(d - 1)] < 0) return;

        // log w(prop) - log w(mu): Vandermonde pairs touching i or j, plus factorials
        double delta = -2.0 * std::log(static_cast<double>(mu[static_cast<std::size_t>(i)]) + 1.0) +
                       2.0 * std::log(static_cast<double>(mu[static_cast<std::size_t>(j)]));
        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (p != i && p != j && q != i && q != j) continue;
                delta += 2.0 * (std::log(static_cast<double>(prop[static_cast<std::size_t>(p)] -
                                                             prop[static_cast<std::size_t>(q)])) -
                                std::log(static_cast<double>(mu[static_cast<std::size_t>(p)] -
                                                             mu[static_cast<std::size_t>(q)])));
            }
        }
        if (delta >= 0.0 || rng.uniform() < std::exp(delta)) mu = prop;
    };

    const long burn = opts.mcmc_burn_factor * static_cast<long>(n);
    for (long t = 0; t < burn; ++t) step();

    std::vector<Shape> out;
    out.reserve(count);
    const long thin = std::max<long>(1, opts.mcmc_thin_factor * static_cast<long>(n));
    for (std::size_t c = 0; c < count; ++c) {
        for (long t = 0; t < thin; ++t) step();
        Shape lambda;
        for (int i = 0; i < d; ++i) {
            const long v = mu[static_cast<std::size_t>(i)] - (d - 1 - i);
            if (v > 0) lambda.push_back(static_cast<int>(v));
        }
        out.push_back(std::move(lambda));
    }
    return out;
}

} // namespace

std::vector<Shape> sample_shapes(int n, int d, std::size_t count, SeededRng& rng,
                                 const ShapeSamplerOptions& opts) {
    if (n < 1 || d < 1) throw std::invalid_argument("sample_shapes: need n >= 1, d >= 1");
    if (count == 0) return {};
    if (d == 1) return std::vector<Shape>(count, Shape{n});
    if (shape_sampling_is_exact(n, d, opts))
        return sample_shapes_exact(n, d, count, rng, opts.parallel);
    return sample_shapes_mcmc(n, d, count, rng, opts);
}

} // namespace pav
