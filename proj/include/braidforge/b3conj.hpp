#pragma once

// Exact conjugacy keys for 3-strand braids.  B3 modulo its center is the free
// product Z2 * Z3 (x = sigma1 sigma2 sigma1, y = sigma1 sigma2), where
// conjugacy is plain cyclic equality of reduced alternating words; adding the
// writhe pins down the central part.  Generator images:
//   sigma1 -> y^2 x,  sigma2 -> x y^2,  sigma1^-1 -> x y,  sigma2^-1 -> y x.

#include "braid.hpp"

namespace braidforge {

namespace detail {

using Syllable = std::pair<char, int>; // ('x', 1) or ('y', 1|2)

inline void push_syllable(std::vector<Syllable>& w, char sym, int e) {
    int ord = (sym == 'x') ? 2 : 3;
    if (!w.empty() && w.back().first == sym) {
        int m = (w.back().second + e) % ord;
        w.pop_back();
        if (m != 0) w.push_back({sym, m});
        return;
    }
    e %= ord;
    if (e != 0) w.push_back({sym, e});
}

inline std::vector<Syllable> free_product_word(const std::vector<int>& letters) {
    std::vector<Syllable> w;
    for (int l : letters) {
        switch (l) {
        case 1: push_syllable(w, 'y', 2); push_syllable(w, 'x', 1); break;
        case 2: push_syllable(w, 'x', 1); push_syllable(w, 'y', 2); break;
        case -1: push_syllable(w, 'x', 1); push_syllable(w, 'y', 1); break;
        case -2: push_syllable(w, 'y', 1); push_syllable(w, 'x', 1); break;
        default: throw domain_error("b3 conjugacy: letters must be ±1, ±2");
        }
    }
    return w;
}

inline std::vector<Syllable> cyclically_reduce(std::vector<Syllable> w) {
    while (w.size() >= 2 && w.front().first == w.back().first) {
        char sym = w.front().first;
        int ord = (sym == 'x') ? 2 : 3;
        int e = (w.front().second + w.back().second) % ord;
        w.erase(w.begin());
        w.pop_back();
        if (e != 0) w.push_back({sym, e});
    }
    return w;
}

} // namespace detail

// canonical string for the conjugacy class of a 3-strand word; two words are
// conjugate in B3 iff their keys are equal
inline std::string b3_conjugacy_key(const BraidWord& w) {
    if (w.strands != 3) throw domain_error("b3_conjugacy_key: expected a 3-strand word");
    auto red = detail::cyclically_reduce(detail::free_product_word(w.letters));
    std::string best;
    const size_t n = red.size();
    for (size_t s = 0; s < std::max<size_t>(n, 1); ++s) {
        std::string cand;
        for (size_t k = 0; k < n; ++k) {
            const auto& syl = red[(s + k) % n];
            cand += syl.first;
            cand += char('0' + syl.second);
        }
        if (s == 0 || cand < best) best = std::move(cand);
    }
    return "w" + std::to_string(writhe(w)) + ":" + best;
}

// key invariant under word reversal as well (closure orientation reversal)
inline std::string b3_class_key(const BraidWord& w) {
    std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
    std::string a = b3_conjugacy_key(w);
    std::string b = b3_conjugacy_key(BraidWord(3, std::move(rev)));
    return a < b ? a : b;
}

} // namespace braidforge
