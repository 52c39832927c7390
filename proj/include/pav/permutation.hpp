#pragma once

#include <string>
#include <vector>

namespace pav {

// One-line notation: values is a bijection of {1, ..., n}.
struct Permutation {
    std::vector<int> values;

    Permutation() = default;
    explicit Permutation(std::vector<int> v);

    int n() const { return static_cast<int>(values.size()); }
    int operator()(int i) const { return values[static_cast<std::size_t>(i - 1)]; } // 1-based

    bool operator==(const Permutation&) const = default;

    // position of value v, 1-based
    int position_of(int v) const;

    std::string to_line() const;              // "2 3 1"
    static Permutation from_line(const std::string& line);
};

// true iff some subsequence of sigma is order-isomorphic to rho
bool contains_pattern(const Permutation& sigma, const Permutation& rho);

// length of the longest strictly decreasing subsequence
int longest_decreasing(const Permutation& sigma);

// the decreasing pattern (d+1)d...21 of length d+1
Permutation decreasing_pattern(int d);

// All sigma in S_n with longest decreasing subsequence <= d, lex order.
// Refuses n above the guard unless force is set.
std::vector<Permutation> enumerate_avoiders(int n, int d, int guard = 10, bool force = false);

// Iterated peeling of left-to-right maxima into d increasing layers.
struct LayerDecomposition {
    int d = 0;
    // layers[l] = positions (1-based, increasing) assigned to layer l+1; may be empty
    std::vector<std::vector<int>> layers;

    int nonempty_count() const;
};

LayerDecomposition layer_decompose(const Permutation& sigma, int d);

} // namespace pav
