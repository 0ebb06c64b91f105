#pragma once

// Reduced fractions of BiLaurents.  Canonical form: gcd(num, den) is a unit
// monomial, den's lowest exponents are zero in both variables, and den's
// leading coefficient (in the (A, q)-lex term order) is positive.  Equality is
// cross-multiplication equality, which is basis-independent anyway.

#include "bilaurent.hpp"

namespace braidforge {

class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(const Int& c) : num_(c), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}
    RationalFn(int c) : num_(c), den_(1) {}
    RationalFn(BiLaurent n) : num_(std::move(n)), den_(1) {}
    RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}
    RationalFn(BiLaurent n, BiLaurent d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw domain_error("RationalFn: zero denominator");
        reduce();
    }

    const BiLaurent& num() const { return num_; }
    const BiLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }

    // exact conversion; throws if a true denominator is left
    const BiLaurent& as_bilaurent() const {
        if (!den_.is_one()) throw internal_error("RationalFn: denominator does not clear: " + to_string());
        return num_;
    }
    LaurentPoly as_laurent_q() const {
        const BiLaurent& b = as_bilaurent();
        if (!b.is_zero() && (b.min_a_half() != 0 || b.max_a_half() != 0))
            throw internal_error("RationalFn: value depends on A");
        return b.subst_A_one();
    }

    friend bool operator==(const RationalFn& x, const RationalFn& y) {
        return x.num_ * y.den_ == y.num_ * x.den_;
    }
    friend bool operator!=(const RationalFn& x, const RationalFn& y) { return !(x == y); }

    RationalFn operator-() const { RationalFn r = *this; r.num_ = -r.num_; return r; }

    friend RationalFn operator+(const RationalFn& x, const RationalFn& y) {
        return RationalFn(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RationalFn operator-(const RationalFn& x, const RationalFn& y) { return x + (-y); }
    friend RationalFn operator*(const RationalFn& x, const RationalFn& y) {
        return RationalFn(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RationalFn operator/(const RationalFn& x, const RationalFn& y) {
        if (y.is_zero()) throw domain_error("RationalFn: division by zero");
        return RationalFn(x.num_ * y.den_, x.den_ * y.num_);
    }
    RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
    RationalFn& operator-=(const RationalFn& o) { *this = *this - o; return *this; }
    RationalFn& operator*=(const RationalFn& o) { *this = *this * o; return *this; }
    RationalFn& operator/=(const RationalFn& o) { *this = *this / o; return *this; }

    RationalFn invert_q() const {
        RationalFn r;
        r.num_ = num_.invert_q();
        r.den_ = den_.invert_q();
        r.canonicalize();
        return r;
    }
    RationalFn invert_A() const {
        RationalFn r;
        r.num_ = num_.invert_A();
        r.den_ = den_.invert_A();
        r.canonicalize();
        return r;
    }

    // A -> q^N; throws domain_error naming the rule if the denominator vanishes
    RationalFn subst_A_qN(int N) const {
        LaurentPoly d = den_.subst_A_qN(N);
        if (d.is_zero())
            throw domain_error("substitution A->q^" + std::to_string(N) + ": denominator vanishes");
        return RationalFn(BiLaurent(num_.subst_A_qN(N)), BiLaurent(d));
    }
    RationalFn subst_A_one() const {
        LaurentPoly d = den_.subst_A_one();
        if (d.is_zero()) throw domain_error("substitution A->1: denominator vanishes");
        return RationalFn(BiLaurent(num_.subst_A_one()), BiLaurent(d));
    }

    Cplx eval(Cplx q0, Cplx a0 = {1.0, 0.0}, double pole_tol = 1e-12) const {
        Cplx d = den_.eval(q0, a0);
        if (std::abs(d) <= pole_tol)
            throw domain_error("eval: denominator vanishes at the evaluation point");
        return num_.eval(q0, a0) / d;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) { den_ = BiLaurent(1); return; }
        BiLaurent g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        canonicalize();
    }
    void canonicalize() {
        // shift den's lowest exponents to zero, flip sign so the leading
        // coefficient is positive; apply the inverse shift to num
        int sq = den_.min_q_half();
        int sa = den_.min_a_half();
        Int lead = den_.terms().back().second;
        Int sgn = lead > 0 ? 1 : -1;
        den_ = den_.scaled(-sq, -sa, sgn);
        num_ = num_.scaled(-sq, -sa, sgn);
    }

    BiLaurent num_, den_;
};

} // namespace braidforge
