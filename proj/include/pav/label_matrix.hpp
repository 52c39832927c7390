#pragma once

#include <vector>

#include "pav/words.hpp"

namespace pav {

// Sparse n x n matrix whose support is the graph of a permutation; the entry
// at (position, value) carries a label in {1, ..., d}.
struct LabelMatrix {
    int n = 0;
    int d = 0;
    // label_at_position[i-1] = {value j, label l} for the unique entry in row i
    std::vector<std::pair<int, int>> entry_by_position;

    int label(int i, int j) const {
        const auto& e = entry_by_position[static_cast<std::size_t>(i - 1)];
        return e.first == j ? e.second : 0;
    }
};

// Mat(omega): entry (pos_a(l,t), pos_b(l,t)) = l. Requires omega in Omega_n.
LabelMatrix label_matrix(const LayeredWords& omega);

// An entry labeled l is proper when the strict upper-left quadrant (earlier
// position, larger value) holds every label below l and no label at or above l.
bool is_proper(const LayeredWords& omega);

} // namespace pav
