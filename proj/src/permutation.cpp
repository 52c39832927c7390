#include "pav/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pav {

Permutation::Permutation(std::vector<int> v) : values(std::move(v)) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : values) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("permutation values must be a bijection of {1..n}");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

int Permutation::position_of(int v) const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) == v) return i;
    throw std::invalid_argument("value not present in permutation");
}

std::string Permutation::to_line() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) {
        if (i) os << ' ';
        os << values[static_cast<std::size_t>(i)];
    }
    return os.str();
}

Permutation Permutation::from_line(const std::string& line) {
    std::istringstream is(line);
    std::vector<int> v;
    int x;
    while (is >> x) v.push_back(x);
    return Permutation(std::move(v));
}

namespace {

// Backtracking embedding search: occ[k] = index in sigma matched to rho's k-th letter.
bool embed(const std::vector<int>& s, const std::vector<int>& r, std::size_t k,
           std::size_t start, std::vector<int>& occ) {
    if (k == r.size()) return true;
    for (std::size_t i = start; i + (r.size() - k) <= s.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
            const bool want = r[j] < r[k];
            const bool have = s[static_cast<std::size_t>(occ[j])] < s[i];
            if (want != have) ok = false;
        }
        if (!ok) continue;
        occ[k] = static_cast<int>(i);
        if (embed(s, r, k + 1, i + 1, occ)) return true;
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& rho) {
    if (rho.n() > sigma.n())
        throw std::invalid_argument("pattern longer than the host permutation");
    if (rho.n() == 0) return true;
    std::vector<int> occ(static_cast<std::size_t>(rho.n()), -1);
    return embed(sigma.values, rho.values, 0, 0, occ);
}

int longest_decreasing(const Permutation& sigma) {
    // patience piles on the negated sequence: LDS(sigma) = LIS(-sigma)
    std::vector<int> tails; // tails[k] = smallest tail of an increasing subsequence of length k+1
    tails.reserve(sigma.values.size());
    for (int x : sigma.values) {
        const int v = -x;
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

Permutation decreasing_pattern(int d) {
    std::vector<int> v(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) v[static_cast<std::size_t>(i)] = d + 1 - i;
    return Permutation(std::move(v));
}

std::vector<Permutation> enumerate_avoiders(int n, int d, int guard, bool force) {
    if (n < 1 || d < 1) throw std::invalid_argument("enumerate_avoiders: need n >= 1, d >= 1");
    if (n > guard && !force)
        throw std::invalid_argument("enumerate_avoiders: n=" + std::to_string(n) +
                                    " exceeds the brute-force guard " + std::to_string(guard) +
                                    " (pass force to override)");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.values = v;
        if (longest_decreasing(p) <= d) out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int LayerDecomposition::nonempty_count() const {
    int c = 0;
    for (const auto& l : layers)
        if (!l.empty()) ++c;
    return c;
}

LayerDecomposition layer_decompose(const Permutation& sigma, int d) {
    if (d < 1) throw std::invalid_argument("layer_decompose: d must be positive");
    const int n = sigma.n();
    LayerDecomposition out;
    out.d = d;
    out.layers.assign(static_cast<std::size_t>(d), {});
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    int assigned = 0;
    for (int l = 0; l < d && assigned < n; ++l) {
        int best = 0;
        for (int i = 1; i <= n; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            if (sigma(i) > best) {
                best = sigma(i);
                out.layers[static_cast<std::size_t>(l)].push_back(i);
                taken[static_cast<std::size_t>(i)] = 1;
                ++assigned;
            }
        }
    }
    if (assigned < n) {
        // find the first leftover position to name in the error
        int bad = 0;
        for (int i = 1; i <= n && !bad; ++i)
            if (!taken[static_cast<std::size_t>(i)]) bad = i;
        throw std::invalid_argument("layer_decompose: position " + std::to_string(bad) +
                                    " needs a layer beyond d=" + std::to_string(d));
    }
    return out;
}

} // namespace pav
