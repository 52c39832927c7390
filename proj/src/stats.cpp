#include "pav/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pav {

std::string TestReport::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"statistic\":" << statistic << ",\"threshold\":" << threshold << ",\"n1\":" << n1
       << ",\"n2\":" << n2 << ",\"pass\":" << (pass ? "true" : "false") << ",\"description\":\""
       << description << "\"}";
    return os.str();
}

TestReport ks_two_sample(const Sample& a, const Sample& b, double alpha) {
    if (a.values.empty() || b.values.empty())
        throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> x = a.values, y = b.values;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const std::size_t n1 = x.size(), n2 = y.size();

    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < n1 && j < n2) {
        const double v = std::min(x[i], y[j]);
        while (i < n1 && x[i] <= v) ++i;
        while (j < n2 && y[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
    }

    TestReport rep;
    rep.statistic = d;
    const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
    rep.threshold = c * std::sqrt(static_cast<double>(n1 + n2) / (static_cast<double>(n1) * n2));
    rep.n1 = n1;
    rep.n2 = n2;
    rep.pass = rep.statistic <= rep.threshold;
    rep.description = "KS two-sample: " + a.label + " vs " + b.label;
    return rep;
}

TestReport chi_square_uniform(const std::vector<std::size_t>& counts, std::size_t total,
                              double alpha) {
    const std::size_t k = counts.size();
    if (k < 2) throw std::invalid_argument("chi_square_uniform: need at least 2 classes");
    const double expected = static_cast<double>(total) / static_cast<double>(k);
    if (expected < 5.0)
        throw std::invalid_argument(
            "chi_square_uniform: expected count per class below 5; draw more samples");
    std::size_t seen = 0;
    double stat = 0.0;
    for (std::size_t c : counts) {
        seen += c;
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    if (seen != total) throw std::invalid_argument("chi_square_uniform: counts do not sum to total");

    TestReport rep;
    rep.statistic = stat;
    rep.threshold = chi_square_quantile(1.0 - alpha, static_cast<double>(k - 1));
    rep.n1 = total;
    rep.n2 = k;
    rep.pass = rep.statistic <= rep.threshold;
    std::ostringstream os;
    os << "chi-square uniformity over " << k << " classes";
    rep.description = os.str();
    return rep;
}

double regularized_gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("regularized_gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // series expansion
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q(a, x), Lentz's method
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    const double q = std::exp(-x + a * std::log(x) - gln) * h;
    return 1.0 - q;
}

double chi_square_quantile(double p, double dof) {
    if (p <= 0.0 || p >= 1.0 || dof <= 0.0)
        throw std::invalid_argument("chi_square_quantile: bad arguments");
    const double a = dof / 2.0;
    auto cdf = [&](double x) { return regularized_gamma_p(a, x / 2.0); };
    double lo = 0.0;
    double hi = dof + 40.0 * std::sqrt(2.0 * dof) + 40.0;
    while (cdf(hi) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

struct Moments {
    double mean, variance, skewness;
};

Moments raw_moments(const std::vector<double>& v, std::size_t skip) {
    double mean = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == skip) continue;
        mean += v[i];
        ++n;
    }
    mean /= static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == skip) continue;
        const double dd = v[i] - mean;
        m2 += dd * dd;
        m3 += dd * dd * dd;
    }
    const double nn = static_cast<double>(n);
    Moments m;
    m.mean = mean;
    m.variance = n > 1 ? m2 / (nn - 1.0) : 0.0;
    const double s = std::sqrt(m2 / nn);
    m.skewness = (s > 0.0 && n > 2)
                     ? (m3 / nn) / (s * s * s) * std::sqrt(nn * (nn - 1.0)) / (nn - 2.0)
                     : 0.0;
    return m;
}

} // namespace

MomentSummary moment_summary(const Sample& a) {
    const std::size_t n = a.values.size();
    if (n < 2) throw std::invalid_argument("moment_summary: need n >= 2");

    const Moments full = raw_moments(a.values, a.values.size());
    MomentSummary out;
    out.n = n;
    out.mean = full.mean;
    out.variance = full.variance;
    out.skewness = full.skewness;

    // jackknife standard errors
    double jm = 0.0, jv = 0.0, js = 0.0;
    std::vector<Moments> leave(n);
    for (std::size_t i = 0; i < n; ++i) {
        leave[i] = raw_moments(a.values, i);
        jm += leave[i].mean;
        jv += leave[i].variance;
        js += leave[i].skewness;
    }
    jm /= static_cast<double>(n);
    jv /= static_cast<double>(n);
    js /= static_cast<double>(n);
    double sm = 0.0, sv = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sm += (leave[i].mean - jm) * (leave[i].mean - jm);
        sv += (leave[i].variance - jv) * (leave[i].variance - jv);
        ss += (leave[i].skewness - js) * (leave[i].skewness - js);
    }
    const double f = (static_cast<double>(n) - 1.0) / static_cast<double>(n);
    out.mean_se = std::sqrt(f * sm);
    out.variance_se = std::sqrt(f * sv);
    out.skewness_se = std::sqrt(f * ss);
    return out;
}

} // namespace pav
