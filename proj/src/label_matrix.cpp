#include "pav/label_matrix.hpp"

#include <stdexcept>

namespace pav {

LabelMatrix label_matrix(const LayeredWords& omega) {
    if (!in_omega_n(omega))
        throw std::invalid_argument("label_matrix: unmatched letter occurrence counts");
    LabelMatrix m;
    m.n = omega.n();
    m.d = omega.d();
    m.entry_by_position.assign(static_cast<std::size_t>(m.n), {0, 0});
    for (int l = 1; l <= m.d; ++l) {
        const int c = omega.letter_count_a(l);
        for (int t = 1; t <= c; ++t) {
            const int i = omega.pos_a(l, t);
            const int j = omega.pos_b(l, t);
            m.entry_by_position[static_cast<std::size_t>(i - 1)] = {j, l};
        }
    }
    return m;
}

bool is_proper(const LayeredWords& omega) {
    const LabelMatrix m = label_matrix(omega);
    const int d = m.d;
    // max value seen so far (positions < i) per label; 0 when unseen
    std::vector<int> maxval(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 1; i <= m.n; ++i) {
        const auto [j, l] = m.entry_by_position[static_cast<std::size_t>(i - 1)];
        for (int lp = 1; lp < l; ++lp)
            if (maxval[static_cast<std::size_t>(lp)] <= j) return false;
        for (int lp = l; lp <= d; ++lp)
            if (maxval[static_cast<std::size_t>(lp)] > j) return false;
        if (j > maxval[static_cast<std::size_t>(l)]) maxval[static_cast<std::size_t>(l)] = j;
    }
    return true;
}

} // namespace pav
