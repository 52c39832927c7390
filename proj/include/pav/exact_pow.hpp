#pragma once

#include <cstdint>

namespace pav {

// Exact integer comparisons of the form a^p vs b^q, used to evaluate
// fractional-power thresholds (m^.1, m^.25, m^.4, w^.6) without floating
// point. All thresholds reduce to integer power comparisons because the
// exponents are rationals with small denominators.
namespace exact {

using u128 = unsigned __int128;

inline constexpr u128 u128_max() { return ~static_cast<u128>(0); }

inline u128 ipow_sat(std::uint64_t base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > u128_max() / base) return u128_max();
        r *= base;
    }
    return r;
}

// w > m^{1/10}
inline bool gt_tenth_root(std::int64_t w, std::int64_t m) {
    if (w <= 0) return false;
    if (w > 6000) return true; // 6000^10 > 6e37 exceeds any int64 m
    return ipow_sat(static_cast<std::uint64_t>(w), 10) > static_cast<u128>(m);
}

// w < m^{2/5}, i.e. w^5 < m^2
inline bool lt_two_fifths(std::int64_t w, std::int64_t m) {
    if (w <= 0) return m > 0;
    if (w >= 3000000) return false; // 3e6^5 > (2^63)^2 / 4; far above any window length in use
    const u128 lhs = ipow_sat(static_cast<std::uint64_t>(w), 5);
    const u128 rhs = static_cast<u128>(m) * static_cast<u128>(m);
    return lhs < rhs;
}

// a <= m^{2/5}, i.e. a^5 <= m^2
inline bool le_two_fifths(std::int64_t a, std::int64_t m) {
    if (a <= 0) return true;
    if (a >= 3000000) return false;
    const u128 lhs = ipow_sat(static_cast<std::uint64_t>(a), 5);
    const u128 rhs = static_cast<u128>(m) * static_cast<u128>(m);
    return lhs <= rhs;
}

// a < w^{3/5}, i.e. a^5 < w^3
inline bool lt_three_fifths(std::int64_t a, std::int64_t w) {
    if (a < 0) return true;
    if (a >= 10000000) return false; // 1e7^5 = 1e35 exceeds any (int32 w)^3
    const u128 lhs = ipow_sat(static_cast<std::uint64_t>(a), 5);
    const u128 rhs = ipow_sat(static_cast<std::uint64_t>(w), 3);
    return lhs < rhs;
}

// a < m^{1/4}, i.e. a^4 < m
inline bool lt_quarter_root(std::int64_t a, std::int64_t m) {
    if (a < 0) return true;
    if (a >= 65536) return false; // 65536^4 = 2^64 exceeds any int64 m
    return ipow_sat(static_cast<std::uint64_t>(a), 4) < static_cast<u128>(m);
}

// g >= m^{2/5}
inline bool ge_two_fifths(std::int64_t g, std::int64_t m) {
    if (g < 0) return false;
    return !lt_two_fifths(g, m);
}

// g >= -m^{2/5}
inline bool ge_neg_two_fifths(std::int64_t g, std::int64_t m) {
    if (g >= 0) return true;
    return le_two_fifths(-g, m);
}

} // namespace exact
} // namespace pav
