#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "pav/label_matrix.hpp"
#include "pav/words.hpp"

using namespace pav;

namespace {

LayeredWords make_words(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b, int d) {
    return LayeredWords(std::move(a), std::move(b), d);
}

// every word pair over [d]^n x [d]^n, for exhaustive scans
template <class F>
void for_all_pairs(int n, int d, F&& f) {
    const long total = static_cast<long>(std::pow(d, n));
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
            f(LayeredWords(a, b, d));
        }
    }
}

} // namespace

TEST_CASE("words from permutation") {
    const auto w = words_from_perm(Permutation({2, 3, 1}), 2);
    CHECK(w.a_word() == std::vector<std::uint8_t>{1, 1, 2});
    CHECK(w.b_word() == std::vector<std::uint8_t>{2, 1, 1});

    const auto id = words_from_perm(Permutation({1, 2, 3, 4}), 3);
    CHECK(id.a_word() == std::vector<std::uint8_t>{1, 1, 1, 1});
    CHECK(id.b_word() == std::vector<std::uint8_t>{1, 1, 1, 1});
}

TEST_CASE("perm from words") {
    CHECK(perm_from_words(make_words({1, 1, 2}, {2, 1, 1}, 2)) == Permutation({2, 3, 1}));
    CHECK(perm_from_words(make_words({1, 1, 1}, {1, 1, 1}, 1)) == Permutation({1, 2, 3}));
    CHECK(perm_from_words(make_words({1, 2}, {2, 1}, 2)) == Permutation({2, 1}));
    CHECK_THROWS_AS(perm_from_words(make_words({1, 1}, {1, 2}, 2)), std::invalid_argument);
}

TEST_CASE("occurrence tables") {
    const auto w = make_words({1, 1, 2}, {2, 1, 1}, 2);
    CHECK(w.count_a(1, 0) == 0);
    CHECK(w.count_a(1, 2) == 2);
    CHECK(w.count_a(2, 3) == 1);
    CHECK(w.pos_a(1, 2) == 2);
    CHECK(w.pos_b(1, 1) == 2);
    CHECK(w.pos_a(2, 5) == 3); // beyond the letter count clamps to n
    CHECK(in_omega_n(w));
}

TEST_CASE("round trips") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& sigma : enumerate_avoiders(n, 3)) {
            const auto w = words_from_perm(sigma, 3);
            CHECK(in_omega_n(w));
            CHECK(perm_from_words(w) == sigma);
        }
    }
}

TEST_CASE("word serialization") {
    const auto w = make_words({1, 1, 2}, {2, 1, 1}, 2);
    CHECK(w.to_line() == "112,211");
    CHECK(LayeredWords::from_line("112,211", 2) == w);
}

TEST_CASE("properness examples") {
    CHECK(is_proper(make_words({1, 1, 1}, {1, 1, 1}, 2)));
    CHECK_FALSE(is_proper(make_words({2, 1}, {1, 2}, 2)));
    for (const auto& sigma : enumerate_avoiders(6, 3))
        CHECK(is_proper(words_from_perm(sigma, 3)));
    CHECK_THROWS_AS(is_proper(make_words({1, 1}, {1, 2}, 2)), std::invalid_argument);
}

TEST_CASE("properness characterizes images of avoiders") {
    // exhaustive over Omega_n for small n, d
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= 4; ++n) {
            std::set<std::string> image;
            for (const auto& sigma : enumerate_avoiders(n, d))
                image.insert(words_from_perm(sigma, d).to_line());
            for_all_pairs(n, d, [&](const LayeredWords& w) {
                if (!in_omega_n(w)) return;
                const bool minimal = image.count(w.to_line()) > 0;
                CHECK(is_proper(w) == minimal);
                if (minimal) // proper pairs round-trip through the permutation
                    CHECK(words_from_perm(perm_from_words(w), d) == w);
            });
        }
    }
}

TEST_CASE("reversal is an involution and time-reverses the path") {
    const auto w = make_words({1, 2, 1}, {2, 1, 1}, 2);
    const auto r = reversed(w);
    CHECK(reversed(r) == w);
}
