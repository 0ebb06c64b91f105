#pragma once

// Burau representations and the Alexander polynomial
//   Al(q) = (1-q^2)/(1-q^{2n}) det(1 - B(w)),
// unit-normalized by +-q^{2k} to the palindromic representative that is
// positive at q = 1 (the Knot Atlas convention).

#include "braid.hpp"
#include "matrix.hpp"

namespace braidforge {

namespace detail {
inline LaurentPoly q2(int k, int c = 1) { return LaurentPoly::q_power(2 * k, c); }
}

// unreduced n x n generator: identity except the 2x2 block [[1-q^2, q^2],[1,0]]
// at rows/cols (i, i+1), 1-based
inline LMatrix burau_unreduced_l(int i, int n, bool inv = false) {
    if (i < 1 || i > n - 1) throw domain_error("burau_unreduced: generator index out of range");
    LMatrix m = LMatrix::identity(n);
    int r = i - 1;
    if (!inv) {
        m.at(r, r) = LaurentPoly(1) - detail::q2(1);
        m.at(r, r + 1) = detail::q2(1);
        m.at(r + 1, r) = LaurentPoly(1);
        m.at(r + 1, r + 1) = {};
    } else {
        m.at(r, r) = {};
        m.at(r, r + 1) = LaurentPoly(1);
        m.at(r + 1, r) = detail::q2(-1);
        m.at(r + 1, r + 1) = LaurentPoly(1) - detail::q2(-1);
    }
    return m;
}

// reduced (n-1) x (n-1) generator: identity except row i, which carries
// q^2 at column i-1, -q^2 at i, 1 at i+1 (columns that exist); n = 2 gives (-q^2)
inline LMatrix burau_reduced_l(int i, int n, bool inv = false) {
    if (n < 2) throw domain_error("burau_reduced: need at least two strands");
    if (i < 1 || i > n - 1) throw domain_error("burau_reduced: generator index out of range");
    LMatrix m = LMatrix::identity(n - 1);
    int r = i - 1;
    if (!inv) {
        if (r - 1 >= 0) m.at(r, r - 1) = detail::q2(1);
        m.at(r, r) = detail::q2(1, -1);
        if (r + 1 <= n - 2) m.at(r, r + 1) = LaurentPoly(1);
    } else {
        if (r - 1 >= 0) m.at(r, r - 1) = LaurentPoly(1);
        m.at(r, r) = detail::q2(-1, -1);
        if (r + 1 <= n - 2) m.at(r, r + 1) = detail::q2(-1);
    }
    return m;
}

inline QMatrix burau_unreduced(int i, int n) { return to_qmatrix(burau_unreduced_l(i, n)); }
inline QMatrix burau_reduced(int i, int n) { return to_qmatrix(burau_reduced_l(i, n)); }

inline LMatrix burau_rep_l(const BraidWord& w, bool reduced) {
    const int dim = reduced ? w.strands - 1 : w.strands;
    LMatrix m = LMatrix::identity(dim);
    for (int g : w.letters) {
        int i = std::abs(g);
        m = m * (reduced ? burau_reduced_l(i, w.strands, g < 0)
                         : burau_unreduced_l(i, w.strands, g < 0));
    }
    return m;
}

inline QMatrix burau_rep(const BraidWord& w, bool reduced) { return to_qmatrix(burau_rep_l(w, reduced)); }

// +-q^{2k} normalization to the palindromic representative positive at q = 1
inline LaurentPoly normalize_alexander_units(const LaurentPoly& p) {
    if (p.is_zero()) throw internal_error("alexander normalization: zero polynomial");
    int s2 = p.min_exp_half() + p.max_exp_half();
    if (s2 % 2 != 0) throw internal_error("alexander normalization: no centering unit exists");
    int shift = -s2 / 2;
    if (shift % 4 != 0)
        throw internal_error("alexander normalization: centering unit is not a power of q^2");
    LaurentPoly c = p.scaled(shift, 1);
    if (!c.is_palindromic()) throw internal_error("alexander normalization: not palindromic");
    Int v = c.value_at_one();
    if (v == 0) throw internal_error("alexander normalization: vanishes at q = 1");
    return v > 0 ? c : -c;
}

inline LaurentPoly alexander(const BraidWord& w) {
    auto info = closure_info(w);
    if (!info.is_knot())
        throw domain_error("alexander: closure has " + std::to_string(info.components) +
                           " components, not a knot");
    const int n = w.strands;
    if (n == 1) return LaurentPoly(1);
    LMatrix b = burau_rep_l(w, true);
    LaurentPoly d = det_bareiss(LMatrix::identity(n - 1) - b);
    // (1-q^2)/(1-q^{2n}) = 1 / (1 + q^2 + ... + q^{2(n-1)})
    LaurentPoly cyc;
    for (int j = 0; j < n; ++j) cyc += detail::q2(j);
    return normalize_alexander_units(divide_exact(d, cyc));
}

} // namespace braidforge
