#pragma once

#include <string>
#include <vector>

namespace pav {

struct Sample {
    std::vector<double> values;
    std::string label;
};

struct TestReport {
    double statistic = 0.0;
    double threshold = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    bool pass = false;
    std::string description;

    std::string to_json() const;
};

// Two-sided two-sample Kolmogorov-Smirnov test at level alpha; the threshold
// is c(alpha) * sqrt((n1+n2)/(n1*n2)) with c = sqrt(-ln(alpha/2)/2).
TestReport ks_two_sample(const Sample& a, const Sample& b, double alpha);

// Pearson statistic for equiprobable classes against the chi-square quantile
// at 1-alpha with (classes - 1) degrees of freedom. All expected counts must
// be at least 5.
TestReport chi_square_uniform(const std::vector<std::size_t>& counts, std::size_t total,
                              double alpha);

// regularized lower incomplete gamma P(a, x) and the chi-square quantile
double regularized_gamma_p(double a, double x);
double chi_square_quantile(double p, double dof);

struct MomentSummary {
    double mean = 0.0, mean_se = 0.0;
    double variance = 0.0, variance_se = 0.0;
    double skewness = 0.0, skewness_se = 0.0;
    std::size_t n = 0;
};

// unbiased mean/variance and sample skewness with jackknife standard errors
MomentSummary moment_summary(const Sample& a);

} // namespace pav
