#include "pav/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

LayeredWords::LayeredWords(std::vector<std::uint8_t> a, std::vector<std::uint8_t> b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1 || d_ > 62) throw std::invalid_argument("LayeredWords: d out of range");
    if (a_.size() != b_.size()) throw std::invalid_argument("LayeredWords: words must have equal length");
    pos_a_.assign(static_cast<std::size_t>(d_), {});
    pos_b_.assign(static_cast<std::size_t>(d_), {});
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 1 || a_[i] > d_ || b_[i] < 1 || b_[i] > d_)
            throw std::invalid_argument("LayeredWords: letter outside {1..d}");
        pos_a_[static_cast<std::size_t>(a_[i] - 1)].push_back(static_cast<int>(i) + 1);
        pos_b_[static_cast<std::size_t>(b_[i] - 1)].push_back(static_cast<int>(i) + 1);
    }
}

int LayeredWords::count_a(int l, int m) const {
    const auto& p = pos_a_[static_cast<std::size_t>(l - 1)];
    return static_cast<int>(std::upper_bound(p.begin(), p.end(), m) - p.begin());
}

int LayeredWords::count_b(int l, int m) const {
    const auto& p = pos_b_[static_cast<std::size_t>(l - 1)];
    return static_cast<int>(std::upper_bound(p.begin(), p.end(), m) - p.begin());
}

int LayeredWords::pos_a(int l, int t) const {
    const auto& p = pos_a_[static_cast<std::size_t>(l - 1)];
    if (t < 1 || t > static_cast<int>(p.size())) return n(); // clamp convention
    return p[static_cast<std::size_t>(t - 1)];
}

int LayeredWords::pos_b(int l, int t) const {
    const auto& p = pos_b_[static_cast<std::size_t>(l - 1)];
    if (t < 1 || t > static_cast<int>(p.size())) return n();
    return p[static_cast<std::size_t>(t - 1)];
}

std::string LayeredWords::to_line() const {
    std::string s;
    s.reserve(a_.size() * 2 + 1);
    for (auto c : a_) s += static_cast<char>('0' + c);
    s += ',';
    for (auto c : b_) s += static_cast<char>('0' + c);
    return s;
}

LayeredWords LayeredWords::from_line(const std::string& line, int d) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("word pair: expected 'aaa,bbb'");
    std::vector<std::uint8_t> a, b;
    for (std::size_t i = 0; i < comma; ++i) a.push_back(static_cast<std::uint8_t>(line[i] - '0'));
    for (std::size_t i = comma + 1; i < line.size(); ++i) b.push_back(static_cast<std::uint8_t>(line[i] - '0'));
    return LayeredWords(std::move(a), std::move(b), d);
}

bool in_omega_n(const LayeredWords& omega) {
    for (int l = 1; l <= omega.d(); ++l)
        if (omega.letter_count_a(l) != omega.letter_count_b(l)) return false;
    return true;
}

LayeredWords reversed(const LayeredWords& omega) {
    std::vector<std::uint8_t> ra(omega.b_word().rbegin(), omega.b_word().rend());
    std::vector<std::uint8_t> rb(omega.a_word().rbegin(), omega.a_word().rend());
    return LayeredWords(std::move(ra), std::move(rb), omega.d());
}

LayeredWords words_from_perm(const Permutation& sigma, int d) {
    const auto dec = layer_decompose(sigma, d);
    const int n = sigma.n();
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    for (int l = 0; l < d; ++l) {
        for (int i : dec.layers[static_cast<std::size_t>(l)]) {
            a[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(l + 1);
            b[static_cast<std::size_t>(sigma(i) - 1)] = static_cast<std::uint8_t>(l + 1);
        }
    }
    return LayeredWords(std::move(a), std::move(b), d);
}

Permutation perm_from_words(const LayeredWords& omega) {
    if (!in_omega_n(omega))
        throw std::invalid_argument("perm_from_words: unmatched letter occurrence counts");
    const int n = omega.n();
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int l = omega.a(i);
        const int t = omega.count_a(l, i);
        values[static_cast<std::size_t>(i - 1)] = omega.pos_b(l, t);
    }
    return Permutation(std::move(values));
}

} // namespace pav
