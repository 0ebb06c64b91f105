#pragma once

// The block R-matrices of the 3- and 4-strand decompositions carry two square
// roots: s = sqrt([3]_q) and u = sqrt(q^2 + q^-2).  ExtScalar is the free
// rank-4 module over rational functions of q with basis {1, s, u, su} and the
// obvious multiplication; q -> q^-1 extends to a ring automorphism because
// both radicands are q-inversion symmetric.

#include "matrix.hpp"

namespace braidforge {

struct ExtScalar {
    RationalFn one, s, u, su;

    ExtScalar() = default;
    ExtScalar(RationalFn c) : one(std::move(c)) {}
    ExtScalar(int c) : one(c) {}

    static const RationalFn& s_squared() {
        static const RationalFn v{BiLaurent(quantum_int(3))};
        return v;
    }
    static const RationalFn& u_squared() {
        static const RationalFn v{BiLaurent(LaurentPoly::q_power(2) + LaurentPoly::q_power(-2))};
        return v;
    }

    friend bool operator==(const ExtScalar&, const ExtScalar&) = default;

    ExtScalar operator-() const { return {-one, -s, -u, -su}; }
    ExtScalar(RationalFn c1, RationalFn cs, RationalFn cu, RationalFn csu)
        : one(std::move(c1)), s(std::move(cs)), u(std::move(cu)), su(std::move(csu)) {}

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        return {a.one + b.one, a.s + b.s, a.u + b.u, a.su + b.su};
    }
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
        const RationalFn& S2 = s_squared();
        const RationalFn& U2 = u_squared();
        ExtScalar r;
        r.one = a.one * b.one + S2 * (a.s * b.s) + U2 * (a.u * b.u) + S2 * U2 * (a.su * b.su);
        r.s   = a.one * b.s + a.s * b.one + U2 * (a.u * b.su + a.su * b.u);
        r.u   = a.one * b.u + a.u * b.one + S2 * (a.s * b.su + a.su * b.s);
        r.su  = a.one * b.su + a.su * b.one + a.s * b.u + a.u * b.s;
        return r;
    }
    ExtScalar& operator+=(const ExtScalar& o) { *this = *this + o; return *this; }
    ExtScalar& operator-=(const ExtScalar& o) { *this = *this - o; return *this; }
    ExtScalar& operator*=(const ExtScalar& o) { *this = *this * o; return *this; }

    bool is_rational() const { return s.is_zero() && u.is_zero() && su.is_zero(); }

    ExtScalar invert_q() const {
        return {one.invert_q(), s.invert_q(), u.invert_q(), su.invert_q()};
    }
};

using ExtMatrix = Matrix<ExtScalar>;

inline ExtMatrix ext_invert_q(const ExtMatrix& m) {
    ExtMatrix r(m.rows, m.cols);
    for (size_t i = 0; i < m.e.size(); ++i) r.e[i] = m.e[i].invert_q();
    return r;
}

} // namespace braidforge
