#pragma once

#include <vector>

#include "pav/bigint.hpp"
#include "pav/permutation.hpp"

namespace pav {

using Shape = std::vector<int>; // weakly decreasing positive row lengths

// Standard Young tableau: rows increase left to right, columns top to bottom,
// entries are 1..n each exactly once.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Shape shape() const;
    int size() const;
    bool operator==(const Tableau&) const = default;
};

bool is_standard(const Tableau& t);

struct ShapeTableauPair {
    Tableau p; // insertion tableau
    Tableau q; // recording tableau
};

// Row-insertion correspondence; the shape's row count equals the longest
// decreasing subsequence length of sigma.
ShapeTableauPair rsk(const Permutation& sigma);

// Inverse of rsk; rejects pairs that are not standard or shape-mismatched.
Permutation inverse_rsk(const ShapeTableauPair& pair);

// Number of standard Young tableaux of the shape, n! / (product of hooks).
BigInt hook_count(const Shape& shape);

// Partitions of n into at most d parts, in the enumeration order used by the
// exact shape scan (outer rows fixed first).
std::vector<Shape> partitions_at_most(int n, int d);

} // namespace pav
