#include "doctest.h"

#include <cmath>
#include <map>
#include <stdexcept>

#include "pav/cones.hpp"
#include "pav/sampler.hpp"
#include "pav/stats.hpp"

using namespace pav;

namespace {

// brute-force count of chamber-confined bridge words by exhausting [d]^n x [d]^n
long brute_bridge_count(int n, int d) {
    const long total = static_cast<long>(std::pow(d, n));
    long count = 0;
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (long ia = 0; ia < total; ++ia) {
        long v = ia;
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1 + v % d);
            v /= d;
        }
        for (long ib = 0; ib < total; ++ib) {
            long w = ib;
            for (int i = 0; i < n; ++i) {
                b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1 + w % d);
                w /= d;
            }
            LayeredWords om(a, b, d);
            if (!in_omega_n(om)) continue;
            const auto path = path_from_words(om);
            bool ok = true;
            for (int m = 0; m <= n && ok; ++m)
                if (!in_weyl(path.point(m))) ok = false;
            if (ok) ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("small bridge counts") {
    const auto t1 = bridge_dp(1, 2);
    CHECK(t1.bridge_count() == 2);
    const auto t2 = bridge_dp(2, 2);
    CHECK(t2.bridge_count() == 5);
    const auto t4 = bridge_dp(4, 2);
    CHECK(t4.bridge_count() == 42);
}

TEST_CASE("dp counts match exhaustive enumeration") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(bridge_dp(n, 2).bridge_count() == brute_bridge_count(n, 2));
        if (n <= 5) CHECK(bridge_dp(n, 3).bridge_count() == brute_bridge_count(n, 3));
    }
}

TEST_CASE("guard refuses oversized tables") {
    CHECK_THROWS_WITH_AS(bridge_dp(100000, 3), doctest::Contains("states"),
                         std::invalid_argument);
}

TEST_CASE("backward sampler produces confined bridges uniformly") {
    const int n = 4, d = 2;
    const auto table = bridge_dp(n, d);
    SeededRng rng(71, 0);

    std::map<std::string, std::size_t> freq;
    const std::size_t draws = 20000;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto w = sample_weyl_bridge(table, rng);
        CHECK(cone_class(w, ConeVariant::CW, 0, n, LatticePoint{0, 0}, LatticePoint{0, 0}));
        ++freq[w.to_line()];
    }
    REQUIRE(freq.size() == 42);
    std::vector<std::size_t> counts;
    for (const auto& [k, c] : freq) counts.push_back(c);
    CHECK(chi_square_uniform(counts, draws, 1e-3).pass);
}

TEST_CASE("dp json export") {
    const auto t = bridge_dp(2, 2);
    const auto js = t.to_json();
    CHECK(js.find("\"n\":2") != std::string::npos);
    CHECK(js.find("\"count\":\"5\"") != std::string::npos);
}

TEST_CASE("backward sampler total variation at n=4") {
    const auto table = bridge_dp(4, 2);
    SeededRng rng(223, 0);
    std::map<std::string, std::size_t> freq;
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) ++freq[sample_weyl_bridge(table, rng).to_line()];
    double tv = 0.0;
    const double uniform = 1.0 / 42.0;
    for (const auto& [k, c] : freq) tv += std::abs(c / static_cast<double>(draws) - uniform);
    tv += uniform * (42.0 - static_cast<double>(freq.size()));
    tv /= 2.0;
    CHECK(tv < 0.01);
}
