#include "pav/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pav {

Tableau random_syt(const Shape& shape, SeededRng& rng) {
    const int rows = static_cast<int>(shape.size());
    int n = 0;
    for (int r : shape) n += r;

    Tableau tab;
    tab.rows.resize(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        tab.rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(r)]), 0);

    std::vector<int> lambda(shape.begin(), shape.end());
    std::vector<int> height(static_cast<std::size_t>(shape.empty() ? 0 : shape[0]), 0);
    for (int c = 0; c < (shape.empty() ? 0 : shape[0]); ++c)
        for (int r = 0; r < rows && lambda[static_cast<std::size_t>(r)] > c; ++r)
            height[static_cast<std::size_t>(c)] = r + 1;

    for (int k = n; k >= 1; --k) {
        // uniform start cell among the k remaining
        std::int64_t u = rng.uniform_int(0, k - 1);
        int r = 0;
        while (u >= lambda[static_cast<std::size_t>(r)]) {
            u -= lambda[static_cast<std::size_t>(r)];
            ++r;
        }
        int c = static_cast<int>(u);
        // hook walk to a corner
        while (true) {
            const int arm = lambda[static_cast<std::size_t>(r)] - 1 - c;
            const int leg = height[static_cast<std::size_t>(c)] - 1 - r;
            if (arm + leg == 0) break;
            const std::int64_t t = rng.uniform_int(0, arm + leg - 1);
            if (t < arm)
                c += 1 + static_cast<int>(t);
            else
                r += 1 + static_cast<int>(t - arm);
        }
        tab.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k;
        lambda[static_cast<std::size_t>(r)] -= 1;
        height[static_cast<std::size_t>(c)] -= 1;
    }
    return tab;
}

Permutation sample_avoider(int n, int d, SeededRng& rng, const ShapeSamplerOptions& opts) {
    const auto shapes = sample_shapes(n, d, 1, rng, opts);
    const Tableau p = random_syt(shapes[0], rng);
    const Tableau q = random_syt(shapes[0], rng);
    return inverse_rsk({p, q});
}

std::vector<Permutation> sample_avoiders(int n, int d, std::size_t count, std::uint64_t seed,
                                         std::uint64_t stream_base, const ShapeSamplerOptions& opts) {
    SeededRng shape_rng(seed, stream_base);
    const auto shapes = sample_shapes(n, d, count, shape_rng, opts);
    std::vector<Permutation> out(count);
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(count); ++r) {
        SeededRng rng(seed, stream_base + 1 + static_cast<std::uint64_t>(r));
        const Tableau p = random_syt(shapes[static_cast<std::size_t>(r)], rng);
        const Tableau q = random_syt(shapes[static_cast<std::size_t>(r)], rng);
        out[static_cast<std::size_t>(r)] = inverse_rsk({p, q});
    }
    return out;
}

LayeredWords sample_lazy_walk(int n, int d, SeededRng& rng) {
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.uniform_int(1, d));
        b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.uniform_int(1, d));
    }
    return LayeredWords(std::move(a), std::move(b), d);
}

// ---- bridge DP -------------------------------------------------------------

namespace {
const BigInt kZero = 0;
}

BridgeDPTable::BridgeDPTable(int n, int d, std::uint64_t max_states) : n_(n), d_(d) {
    if (n < 0 || d < 1) throw std::invalid_argument("bridge_dp: bad arguments");
    span_ = static_cast<std::uint64_t>(2 * n + 2);

    // crude footprint estimate: sum over t of (t+1)^(d-1)
    long double predicted = 0;
    for (int t = 0; t <= n; ++t) predicted += std::pow(static_cast<long double>(t + 1), d - 1);
    if (predicted > static_cast<long double>(max_states)) {
        std::ostringstream os;
        os << "bridge_dp: refusing n=" << n << ", d=" << d << "; predicted ~"
           << static_cast<std::uint64_t>(predicted) << " states exceeds the limit " << max_states;
        throw std::invalid_argument(os.str());
    }

    levels_.resize(static_cast<std::size_t>(n) + 1);
    std::vector<int> zero(static_cast<std::size_t>(d - 1), 0);
    levels_[0][key_of(zero)] = 1;

    std::vector<int> gaps(static_cast<std::size_t>(d - 1));
    for (int t = 1; t <= n; ++t) {
        auto& prev = levels_[static_cast<std::size_t>(t - 1)];
        auto& cur = levels_[static_cast<std::size_t>(t)];
        cur.reserve(prev.size() * 2);
        for (const auto& [key, cnt] : prev) {
            // decode gaps
            std::uint64_t k = key;
            for (int g = 0; g < d - 1; ++g) {
                gaps[static_cast<std::size_t>(g)] = static_cast<int>(k % span_);
                k /= span_;
            }
            // zero step has multiplicity d
            cur[key] += cnt * d;
            // step e_i - e_j: gap_i += 1, gap_{i-1} -= 1, gap_j -= 1, gap_{j-1} += 1
            for (int i = 1; i <= d_; ++i) {
                for (int j = 1; j <= d_; ++j) {
                    if (i == j) continue;
                    auto adjust = [&](int g, int delta) {
                        if (g < 1 || g > d_ - 1) return;
                        gaps[static_cast<std::size_t>(g - 1)] += delta;
                    };
                    adjust(i, 1);
                    adjust(i - 1, -1);
                    adjust(j, -1);
                    adjust(j - 1, 1);
                    bool ok = true;
                    for (int g = 0; g < d_ - 1; ++g)
                        if (gaps[static_cast<std::size_t>(g)] < 0) ok = false;
                    if (ok) cur[key_of(gaps)] += cnt;
                    adjust(i, -1);
                    adjust(i - 1, 1);
                    adjust(j, 1);
                    adjust(j - 1, -1);
                }
            }
        }
    }
}

std::uint64_t BridgeDPTable::key_of(const std::vector<int>& gaps) const {
    std::uint64_t key = 0;
    for (int g = d_ - 2; g >= 0; --g)
        key = key * span_ + static_cast<std::uint64_t>(gaps[static_cast<std::size_t>(g)]);
    return key;
}

const BigInt& BridgeDPTable::count(int t, const std::vector<int>& gaps) const {
    if (t < 0 || t > n_) throw std::invalid_argument("bridge_dp count: t out of range");
    for (int g : gaps)
        if (g < 0) return kZero;
    const auto& lvl = levels_[static_cast<std::size_t>(t)];
    const auto it = lvl.find(key_of(gaps));
    return it == lvl.end() ? kZero : it->second;
}

const BigInt& BridgeDPTable::bridge_count() const {
    return count(n_, std::vector<int>(static_cast<std::size_t>(d_ - 1), 0));
}

std::uint64_t BridgeDPTable::state_count() const {
    std::uint64_t c = 0;
    for (const auto& lvl : levels_) c += lvl.size();
    return c;
}

std::string BridgeDPTable::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n_ << ",\"d\":" << d_ << ",\"states\":[";
    bool first = true;
    // deterministic order: sort keys
    std::vector<std::uint64_t> keys;
    const auto& lvl = levels_[static_cast<std::size_t>(n_)];
    keys.reserve(lvl.size());
    for (const auto& [k, v] : lvl) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t key : keys) {
        if (!first) os << ",";
        first = false;
        os << "{\"gaps\":[";
        std::uint64_t k = key;
        for (int g = 0; g < d_ - 1; ++g) {
            if (g) os << ",";
            os << (k % span_);
            k /= span_;
        }
        os << "],\"count\":\"" << lvl.at(key).get_str() << "\"}";
    }
    os << "]}";
    return os.str();
}

BridgeDPTable bridge_dp(int n, int d, std::uint64_t max_states) {
    return BridgeDPTable(n, d, max_states);
}

LayeredWords sample_weyl_bridge(const BridgeDPTable& table, SeededRng& rng) {
    const int n = table.n();
    const int d = table.d();
    if (table.bridge_count() == 0)
        throw std::invalid_argument("sample_weyl_bridge: no bridge words for these parameters");

    std::vector<std::uint8_t> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    std::vector<int> gaps(static_cast<std::size_t>(d - 1), 0);
    std::vector<int> prev(static_cast<std::size_t>(d - 1));

    for (int t = n; t >= 1; --t) {
        const BigInt& here = table.count(t, gaps);
        BigInt r = uniform_bigint_below(rng, here);
        bool assigned = false;
        for (int i = 1; i <= d && !assigned; ++i) {
            for (int j = 1; j <= d && !assigned; ++j) {
                // predecessor of the step (a(t), b(t)) = (i, j)
                prev = gaps;
                auto adjust = [&](int g, int delta) {
                    if (g < 1 || g > d - 1) return;
                    prev[static_cast<std::size_t>(g - 1)] += delta;
                };
                adjust(i, -1);
                adjust(i - 1, 1);
                adjust(j, 1);
                adjust(j - 1, -1);
                const BigInt& cnt = table.count(t - 1, prev);
                if (cnt == 0) continue;
                if (r < cnt) {
                    a[static_cast<std::size_t>(t - 1)] = static_cast<std::uint8_t>(i);
                    b[static_cast<std::size_t>(t - 1)] = static_cast<std::uint8_t>(j);
                    gaps = prev;
                    assigned = true;
                } else {
                    r -= cnt;
                }
            }
        }
        if (!assigned) throw std::logic_error("sample_weyl_bridge: inconsistent table");
    }
    return LayeredWords(std::move(a), std::move(b), d);
}

} // namespace pav
