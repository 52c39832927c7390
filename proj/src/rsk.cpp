#include "pav/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

Shape Tableau::shape() const {
    Shape s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

bool is_standard(const Tableau& t) {
    const int n = t.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const int v = row[c];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            if (c > 0 && row[c - 1] >= v) return false;
            if (r > 0 && t.rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

ShapeTableauPair rsk(const Permutation& sigma) {
    ShapeTableauPair out;
    auto& p = out.p.rows;
    auto& q = out.q.rows;
    for (int i = 1; i <= sigma.n(); ++i) {
        int v = sigma(i);
        std::size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                q[r].push_back(i);
                break;
            }
            std::swap(*it, v); // bump
            ++r;
        }
    }
    return out;
}

Permutation inverse_rsk(const ShapeTableauPair& pair) {
    if (!is_standard(pair.p) || !is_standard(pair.q) || pair.p.shape() != pair.q.shape())
        throw std::invalid_argument("inverse_rsk: inputs must be standard tableaux of one shape");
    const int n = pair.p.size();
    auto p = pair.p.rows;

    // cell of each value in q
    std::vector<std::pair<int, int>> cell(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < pair.q.rows.size(); ++r)
        for (std::size_t c = 0; c < pair.q.rows[r].size(); ++c)
            cell[static_cast<std::size_t>(pair.q.rows[r][c])] = {static_cast<int>(r),
                                                                 static_cast<int>(c)};

    std::vector<int> values(static_cast<std::size_t>(n), 0);
    for (int k = n; k >= 1; --k) {
        auto [r, c] = cell[static_cast<std::size_t>(k)];
        int v = p[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        p[static_cast<std::size_t>(r)].pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = p[static_cast<std::size_t>(rr)];
            // rightmost entry smaller than v
            auto it = std::lower_bound(row.begin(), row.end(), v);
            std::swap(*(it - 1), v);
        }
        values[static_cast<std::size_t>(k - 1)] = v;
    }
    return Permutation(std::move(values));
}

BigInt hook_count(const Shape& shape) {
    const int rows = static_cast<int>(shape.size());
    int n = 0;
    for (int i = 0; i < rows; ++i) {
        if (shape[static_cast<std::size_t>(i)] < 1 ||
            (i > 0 && shape[static_cast<std::size_t>(i)] > shape[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("hook_count: shape must be weakly decreasing, positive");
        n += shape[static_cast<std::size_t>(i)];
    }
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) {
            int leg = 0;
            for (int rr = r + 1; rr < rows && shape[static_cast<std::size_t>(rr)] > c; ++rr) ++leg;
            const int hook = shape[static_cast<std::size_t>(r)] - c + leg;
            mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(hook));
        }
    }
    return f;
}

std::vector<Shape> partitions_at_most(int n, int d) {
    std::vector<Shape> out;
    Shape cur;
    auto rec = [&](auto&& self, int remaining, int rowsLeft, int maxPart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (rowsLeft == 0) return;
        const int lo = (remaining + rowsLeft - 1) / rowsLeft; // rows after this one only shrink
        for (int part = std::min(maxPart, remaining); part >= lo; --part) {
            cur.push_back(part);
            self(self, remaining - part, rowsLeft - 1, part);
            cur.pop_back();
        }
    };
    rec(rec, n, d, n);
    return out;
}

} // namespace pav
