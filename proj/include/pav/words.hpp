#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pav/permutation.hpp"

namespace pav {

// A pair of words over the alphabet {1, ..., d} with per-letter occurrence
// tables. count_*(l, m) counts occurrences of l among the first m letters;
// pos_*(l, t) is the position of the t-th occurrence, clamped to n when t
// exceeds the letter count.
class LayeredWords {
public:
    LayeredWords(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b, int d);

    int n() const { return static_cast<int>(a_.size()); }
    int d() const { return d_; }

    int a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; } // 1-based
    int b(int i) const { return b_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<std::uint8_t>& a_word() const { return a_; }
    const std::vector<std::uint8_t>& b_word() const { return b_; }

    int count_a(int l, int m) const;
    int count_b(int l, int m) const;
    int pos_a(int l, int t) const;
    int pos_b(int l, int t) const;

    int letter_count_a(int l) const { return static_cast<int>(pos_a_[static_cast<std::size_t>(l - 1)].size()); }
    int letter_count_b(int l) const { return static_cast<int>(pos_b_[static_cast<std::size_t>(l - 1)].size()); }

    bool operator==(const LayeredWords& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }

    std::string to_line() const;                              // "112,211"
    static LayeredWords from_line(const std::string& line, int d);

private:
    std::vector<std::uint8_t> a_, b_;
    int d_;
    std::vector<std::vector<int>> pos_a_, pos_b_; // positions per letter, 1-based increasing
};

// every letter occurs equally often in a and b
bool in_omega_n(const LayeredWords& omega);

// Time reversal of the associated path: reverse both words and swap them.
LayeredWords reversed(const LayeredWords& omega);

// a(i) = layer of position i, b(j) = layer of the point with value j
LayeredWords words_from_perm(const Permutation& sigma, int d);

// Pairs the t-th occurrence of each letter in a with the t-th in b.
// Requires omega in Omega_n.
Permutation perm_from_words(const LayeredWords& omega);

} // namespace pav
