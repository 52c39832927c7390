#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>

#include "pav/rng.hpp"

namespace pav {

using BigInt = mpz_class;

// Exact uniform draw from {0, ..., bound-1}, bound >= 1.
inline BigInt uniform_bigint_below(SeededRng& rng, const BigInt& bound) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    BigInt r;
    while (true) {
        r = 0;
        for (std::size_t w = 0; w < words; ++w) {
            r <<= 64;
            r += BigInt(rng.next_u64());
        }
        r >>= static_cast<unsigned long>(words * 64 - bits);
        if (r < bound) return r;
    }
}

// Natural log of a positive big integer, accurate to double precision.
inline double bigint_log(const BigInt& v) {
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

} // namespace pav
