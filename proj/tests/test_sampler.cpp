#include "doctest.h"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "pav/lattice_path.hpp"
#include "pav/sampler.hpp"
#include "pav/stats.hpp"

using namespace pav;

TEST_CASE("random syt is standard and uniform on a small shape") {
    SeededRng rng(41, 0);
    const Shape lam{2, 1};
    std::map<std::vector<std::vector<int>>, int> freq;
    for (int i = 0; i < 6000; ++i) {
        const auto t = random_syt(lam, rng);
        CHECK(is_standard(t));
        CHECK(t.shape() == lam);
        ++freq[t.rows];
    }
    REQUIRE(freq.size() == 2); // hook count of (2,1) is 2
    for (const auto& [rows, c] : freq) CHECK(std::abs(c - 3000) < 300);
}

TEST_CASE("shape sampler exactness boundary") {
    CHECK(shape_sampling_is_exact(2000, 2));
    CHECK(shape_sampling_is_exact(3000, 3));
    CHECK(shape_sampling_is_exact(10000, 3));
    CHECK_FALSE(shape_sampling_is_exact(100000, 3));
    CHECK_FALSE(shape_sampling_is_exact(100000, 5));
}

TEST_CASE("exact shape weights reproduce image frequencies") {
    // n=8, d=2: compare sampled shape frequencies to hook_count^2 weights
    SeededRng rng(43, 0);
    const int n = 8;
    const auto lams = partitions_at_most(n, 2);
    std::map<Shape, double> expected;
    BigInt z = 0;
    for (const auto& l : lams) {
        const BigInt f = hook_count(l);
        z += f * f;
    }
    for (const auto& l : lams) {
        const BigInt f = hook_count(l);
        expected[l] = mpz_get_d(BigInt(f * f).get_mpz_t()) / mpz_get_d(z.get_mpz_t());
    }
    const int draws = 40000;
    std::map<Shape, int> freq;
    for (const auto& s : sample_shapes(n, 2, draws, rng)) ++freq[s];
    for (const auto& [l, p] : expected) {
        const double observed = freq[l] / static_cast<double>(draws);
        CHECK(std::abs(observed - p) < 5.0 * std::sqrt(p * (1 - p) / draws) + 1e-3);
    }
}

TEST_CASE("sampled avoiders stay within the class") {
    SeededRng rng(47, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const auto sigma = sample_avoider(200, 3, rng);
        CHECK(sigma.n() == 200);
        CHECK(longest_decreasing(sigma) <= 3);
    }
}

TEST_CASE("sampler uniformity over Av_5(321)") {
    SeededRng rng(53, 0);
    const auto avoiders = enumerate_avoiders(5, 2);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < avoiders.size(); ++i) index[avoiders[i].to_line()] = i;

    const std::size_t draws = 30000;
    std::vector<std::size_t> counts(avoiders.size(), 0);
    for (std::size_t i = 0; i < draws; ++i) {
        const auto sigma = sample_avoider(5, 2, rng);
        auto it = index.find(sigma.to_line());
        REQUIRE(it != index.end());
        ++counts[it->second];
    }
    const auto rep = chi_square_uniform(counts, draws, 1e-3);
    CHECK(rep.pass);
}

TEST_CASE("mcmc shape sampler approximates the exact law") {
    // force the chain at a size where the exact law is known
    ShapeSamplerOptions force_mcmc;
    force_mcmc.max_partitions = 0;
    SeededRng rng(59, 0);
    const int n = 20;
    const auto lams = partitions_at_most(n, 2);
    BigInt z = 0;
    std::map<Shape, BigInt> w;
    for (const auto& l : lams) {
        w[l] = hook_count(l) * hook_count(l);
        z += w[l];
    }
    const int draws = 4000;
    std::map<Shape, int> freq;
    for (const auto& s : sample_shapes(n, 2, draws, rng, force_mcmc)) ++freq[s];
    double tv = 0.0;
    for (const auto& [l, wl] : w) {
        const double p = mpz_get_d(wl.get_mpz_t()) / mpz_get_d(z.get_mpz_t());
        tv += std::abs(freq[l] / static_cast<double>(draws) - p);
    }
    tv /= 2.0;
    CHECK(tv < 0.06); // measured ~0.02 at this seed; generous margin
}

TEST_CASE("lazy walk step law") {
    SeededRng rng(61, 0);
    const int n = 1000000;
    const int d = 3;
    const auto w = sample_lazy_walk(n, d, rng);
    int zeros = 0, e12 = 0;
    for (int i = 1; i <= n; ++i) {
        if (w.a(i) == w.b(i)) ++zeros;
        if (w.a(i) == 1 && w.b(i) == 2) ++e12;
    }
    const double pz = 1.0 / d, p12 = 1.0 / (d * d);
    CHECK(std::abs(zeros - n * pz) < 3.0 * std::sqrt(n * pz * (1 - pz)));
    CHECK(std::abs(e12 - n * p12) < 3.0 * std::sqrt(n * p12 * (1 - p12)));
}

TEST_CASE("lazy walk endpoint scaling") {
    SeededRng rng(67, 0);
    const int n = 400, reps = 4000, d = 2;
    double sum = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto w = sample_lazy_walk(n, d, rng);
        const auto p = path_from_words(w);
        sum += p.coord(n, 1) / std::sqrt(static_cast<double>(n));
    }
    const double var_coord = 2.0 * (d - 1) / (d * d); // per-step coordinate variance
    const double se = std::sqrt(var_coord / reps);
    CHECK(std::abs(sum / reps) < 3.0 * se);
}

TEST_CASE("large draw at d=5 stays in class") {
    SeededRng rng(131, 0);
    const auto t0 = std::chrono::steady_clock::now();
    const auto sigma = sample_avoider(100000, 5, rng);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(sigma.n() == 100000);
    CHECK(longest_decreasing(sigma) <= 5); // patience-sorting spot check
    CHECK(secs < 60.0);
}
