#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "pav/stats.hpp"

using namespace pav;

TEST_CASE("ks two sample") {
    const Sample a{{1, 2}, "a"};
    CHECK(ks_two_sample(a, a, 1e-3).statistic == doctest::Approx(0.0));

    const Sample b{{3, 4}, "b"};
    CHECK(ks_two_sample(a, b, 1e-3).statistic == doctest::Approx(1.0));

    const Sample c{{1, 3}, "c"};
    const Sample d{{2, 4}, "d"};
    CHECK(ks_two_sample(c, d, 1e-3).statistic == doctest::Approx(0.5));

    CHECK_THROWS_AS(ks_two_sample(Sample{{}, "e"}, a, 1e-3), std::invalid_argument);

    // threshold formula
    const auto rep = ks_two_sample(c, d, 0.05);
    const double cc = std::sqrt(-std::log(0.025) / 2.0);
    CHECK(rep.threshold == doctest::Approx(cc * std::sqrt(4.0 / 4.0)));
}

TEST_CASE("ks symmetry and monotone invariance") {
    std::vector<double> x, y;
    for (int i = 0; i < 200; ++i) {
        x.push_back(std::sin(i * 1.7) * 3 + i % 7);
        y.push_back(std::cos(i * 0.9) * 2 + i % 5);
    }
    const Sample a{x, "a"}, b{y, "b"};
    CHECK(ks_two_sample(a, b, 1e-3).statistic == doctest::Approx(ks_two_sample(b, a, 1e-3).statistic));

    auto mono = [](double v) { return std::exp(v / 4.0) + v; }; // strictly increasing
    Sample am{a.values, "am"}, bm{b.values, "bm"};
    for (auto& v : am.values) v = mono(v);
    for (auto& v : bm.values) v = mono(v);
    CHECK(ks_two_sample(am, bm, 1e-3).statistic == doctest::Approx(ks_two_sample(a, b, 1e-3).statistic));
}

TEST_CASE("chi square uniform") {
    CHECK(chi_square_uniform({50, 50}, 100, 1e-3).statistic == doctest::Approx(0.0));
    CHECK(chi_square_uniform({60, 40}, 100, 1e-3).statistic == doctest::Approx(4.0));
    CHECK_THROWS_AS(chi_square_uniform({2, 2}, 4, 1e-3), std::invalid_argument);

    // class relabeling leaves the statistic unchanged
    CHECK(chi_square_uniform({30, 50, 40}, 120, 1e-3).statistic ==
          doctest::Approx(chi_square_uniform({50, 40, 30}, 120, 1e-3).statistic));
}

TEST_CASE("chi square quantiles") {
    CHECK(chi_square_quantile(0.999, 1) == doctest::Approx(10.828).epsilon(1e-3));
    CHECK(chi_square_quantile(0.95, 10) == doctest::Approx(18.307).epsilon(1e-3));
    CHECK(chi_square_quantile(0.999, 131) == doctest::Approx(187.0).epsilon(5e-3));
}

TEST_CASE("regularized gamma") {
    // P(1/2, x) = erf(sqrt(x))
    for (double x : {0.1, 0.5, 1.0, 3.0}) {
        CHECK(regularized_gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-12));
    }
    CHECK(regularized_gamma_p(3.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("moment summary") {
    const Sample constant{{2, 2, 2, 2, 2}, "const"};
    const auto mc = moment_summary(constant);
    CHECK(mc.variance == doctest::Approx(0.0));

    const Sample pm{{-1, 1, -1, 1, -1, 1}, "pm"};
    const auto ms = moment_summary(pm);
    CHECK(ms.mean == doctest::Approx(0.0));

    // jackknife SE of the mean equals s/sqrt(n)
    const Sample v{{0.3, 1.7, -0.4, 2.2, 0.9, -1.3, 0.5}, "v"};
    const auto mv = moment_summary(v);
    CHECK(mv.mean_se == doctest::Approx(std::sqrt(mv.variance / mv.n)).epsilon(1e-10));

    CHECK_THROWS_AS(moment_summary(Sample{{1.0}, "one"}), std::invalid_argument);
}
