#include "pav/petrov.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <vector>

#include "pav/exact_pow.hpp"

namespace pav {

namespace {

// H(t) = d*count(t) - t for one (word, letter) pair; the window condition for
// (i, j] reads on A = 4d*|H(j) - H(i)|:
//   large family: A^5 < w^3,  small family: A^4 < param
std::vector<std::int64_t> count_profile(const std::vector<std::uint8_t>& word, int letter, int d,
                                        int m) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(m) + 1, 0);
    std::int64_t count = 0;
    for (int t = 1; t <= m; ++t) {
        if (word[static_cast<std::size_t>(t - 1)] == letter) ++count;
        h[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(d) * count - t;
    }
    return h;
}

bool scan_naive(const std::vector<std::int64_t>& h, int lo, int hi, int param, int d) {
    for (int i = lo; i < hi; ++i) {
        for (int j = i + 1; j <= hi; ++j) {
            const std::int64_t w = j - i;
            const std::int64_t amp =
                4 * static_cast<std::int64_t>(d) *
                std::abs(h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(i)]);
            if (exact::gt_tenth_root(w, param) && !exact::lt_three_fifths(amp, w)) return false;
            if (exact::lt_two_fifths(w, param) && !exact::lt_quarter_root(amp, param)) return false;
        }
    }
    return true;
}

// sliding max of |h(j) - h(i)| over i in [j-far, j-near], accumulated globally
struct WindowExtrema {
    std::deque<int> maxq, minq;

    void push(const std::vector<std::int64_t>& h, int idx) {
        while (!maxq.empty() && h[static_cast<std::size_t>(maxq.back())] <= h[static_cast<std::size_t>(idx)])
            maxq.pop_back();
        maxq.push_back(idx);
        while (!minq.empty() && h[static_cast<std::size_t>(minq.back())] >= h[static_cast<std::size_t>(idx)])
            minq.pop_back();
        minq.push_back(idx);
    }
    void expire(int oldest) {
        while (!maxq.empty() && maxq.front() < oldest) maxq.pop_front();
        while (!minq.empty() && minq.front() < oldest) minq.pop_front();
    }
    bool empty() const { return maxq.empty(); }
};

std::int64_t class_max_amplitude(const std::vector<std::int64_t>& h, int m, int near, int far) {
    WindowExtrema q;
    std::int64_t best = 0;
    for (int j = near; j <= m; ++j) {
        q.push(h, j - near);
        q.expire(j - far);
        const std::int64_t hj = h[static_cast<std::size_t>(j)];
        best = std::max(best, hj - h[static_cast<std::size_t>(q.minq.front())]);
        best = std::max(best, h[static_cast<std::size_t>(q.maxq.front())] - hj);
    }
    return best;
}

bool scan_pruned(const std::vector<std::int64_t>& h, int m, int d) {
    // small-window family: uniform bound, one sliding pass
    int wsmall = 0;
    while (wsmall < m && exact::lt_two_fifths(wsmall + 1, m)) ++wsmall;
    if (wsmall >= 1) {
        const std::int64_t amp = 4 * static_cast<std::int64_t>(d) * class_max_amplitude(h, m, 1, wsmall);
        if (!exact::lt_quarter_root(amp, m)) return false;
    }

    // large-window family in dyadic length classes [W, 2W-1]
    int wmin = 1;
    while (wmin <= m && !exact::gt_tenth_root(wmin, m)) ++wmin;
    for (int W = wmin; W <= m;) {
        const int hi = (W <= m / 2) ? 2 * W - 1 : m;
        const std::int64_t amp = 4 * static_cast<std::int64_t>(d) * class_max_amplitude(h, m, W, hi);
        if (!exact::lt_three_fifths(amp, W)) {
            // envelope inconclusive: rescan this class with per-window bounds
            for (int j = W; j <= m; ++j) {
                for (int i = std::max(0, j - hi); i <= j - W; ++i) {
                    const std::int64_t w = j - i;
                    const std::int64_t a =
                        4 * static_cast<std::int64_t>(d) *
                        std::abs(h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(i)]);
                    if (!exact::lt_three_fifths(a, w)) return false;
                }
            }
        }
        if (hi >= m) break;
        W = hi + 1;
    }
    return true;
}

} // namespace

bool petrov(const LayeredWords& omega, int m, const PetrovOptions& opts) {
    if (m < 0 || m > omega.n())
        throw std::invalid_argument("petrov: need 0 <= m <= n");
    if (m <= 1) return true; // no window qualifies for either family
    const int d = omega.d();

    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int task = 0; task < 2 * d; ++task) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        const int letter = task / 2 + 1;
        const auto& word = (task % 2 == 0) ? omega.a_word() : omega.b_word();
        const auto h = count_profile(word, letter, d, m);
        const bool pass = opts.pruned ? scan_pruned(h, m, d) : scan_naive(h, 0, m, m, d);
        if (!pass) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

bool petrov_star(const LayeredWords& omega, int m, int n, const PetrovOptions& opts) {
    if (n < 0 || n > omega.n()) throw std::invalid_argument("petrov_star: need 0 <= n <= len");
    std::vector<std::uint8_t> a(omega.a_word().begin(), omega.a_word().begin() + n);
    std::vector<std::uint8_t> b(omega.b_word().begin(), omega.b_word().begin() + n);
    LayeredWords prefix(std::move(a), std::move(b), omega.d());
    return petrov(reversed(prefix), m, opts);
}

bool petrov_conditions_in_range(const LayeredWords& omega, int lo, int hi, int param) {
    if (lo < 0 || hi > omega.n() || lo > hi)
        throw std::invalid_argument("petrov_conditions_in_range: malformed range");
    const int d = omega.d();
    for (int letter = 1; letter <= d; ++letter) {
        for (int side = 0; side < 2; ++side) {
            const auto& word = (side == 0) ? omega.a_word() : omega.b_word();
            const auto h = count_profile(word, letter, d, hi);
            if (!scan_naive(h, lo, hi, param, d)) return false;
        }
    }
    return true;
}

} // namespace pav
