#pragma once

// Exact univariate Laurent polynomials in q with bigint coefficients.
// Exponents are stored in half-units: a stored exponent e stands for q^(e/2),
// so q^(1/2) is representable (raw R-matrix entries need it).  Everything a
// caller normally sees has even stored exponents.

#include "common.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

namespace braidforge {

class LaurentPoly {
public:
    using Term = std::pair<int, Int>; // (stored exponent, coefficient)

    LaurentPoly() = default;
    LaurentPoly(const Int& c) { if (c != 0) terms_.push_back({0, c}); }
    LaurentPoly(long c) : LaurentPoly(Int(c)) {}
    LaurentPoly(int c) : LaurentPoly(Int(c)) {}

    // c * q^(e/2) in stored half-units
    static LaurentPoly monomial_half(int e, Int c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({e, std::move(c)});
        return p;
    }
    // c * q^e
    static LaurentPoly q_power(int e, Int c = 1) { return monomial_half(2 * e, std::move(c)); }

    static LaurentPoly from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        LaurentPoly p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (p.terms_.back().second == 0) p.terms_.pop_back();
            } else if (t.second != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
    size_t term_count() const { return terms_.size(); }

    int min_exp_half() const { require_nonzero(); return terms_.front().first; }
    int max_exp_half() const { require_nonzero(); return terms_.back().first; }

    bool has_even_exponents() const {
        for (auto& t : terms_) if (t.first % 2 != 0) return false;
        return true;
    }

    Int coeff_half(int e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, int v) { return t.first < v; });
        if (it != terms_.end() && it->first == e) return it->second;
        return 0;
    }
    Int coeff_q(int e) const { return coeff_half(2 * e); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Int c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0) r.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i; ++j;
            }
        }
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
        if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
        std::map<int, Int> acc;
        for (auto& ta : a.terms_)
            for (auto& tb : b.terms_) {
                Int& slot = acc[ta.first + tb.first];
                slot += ta.second * tb.second;
            }
        LaurentPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    // multiply by c * q^(e/2)
    LaurentPoly scaled(int e_half, const Int& c) const {
        if (c == 0) return {};
        LaurentPoly r = *this;
        for (auto& t : r.terms_) { t.first += e_half; t.second *= c; }
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    // q -> q^-1
    LaurentPoly invert_q() const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            r.terms_.push_back({-it->first, it->second});
        return r;
    }

    bool is_palindromic() const { return *this == invert_q(); }

    Int value_at_one() const {
        Int s = 0;
        for (auto& t : terms_) s += t.second;
        return s;
    }

    // Exact division; throws internal_error carrying the remainder head if not divisible.
    friend LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) throw domain_error("divide_exact: zero divisor");
        if (num.is_zero()) return {};
        LaurentPoly rem = num, quot;
        const Term& dl = den.terms_.back();
        // leading-term elimination; quotient exponent window bounds the loop
        const int qmax = num.max_exp_half() - den.max_exp_half();
        const int qmin = num.min_exp_half() - den.min_exp_half();
        while (!rem.is_zero()) {
            const Term& rl = rem.terms_.back();
            int e = rl.first - dl.first;
            if (e > qmax || e < qmin || rl.second % dl.second != 0)
                throw internal_error("divide_exact: remainder nonzero (leading term " +
                                     rem.to_string() + " not divisible)");
            Int c = rl.second / dl.second;
            quot.terms_.insert(quot.terms_.begin(), {e, c});
            rem -= den.scaled(e, c);
        }
        std::sort(quot.terms_.begin(), quot.terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return quot;
    }

    // numeric evaluation; exponents are half-units, so odd exponents use the
    // principal square root of q0
    Cplx eval(Cplx q0) const {
        if (terms_.empty()) return {0.0, 0.0};
        Cplx w = std::sqrt(q0);
        // Horner over ascending stored exponents
        Cplx acc = {0.0, 0.0};
        int prev = terms_.back().first;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            acc *= pow_int(w, prev - it->first);
            acc += to_double(it->second);
            prev = it->first;
        }
        return acc * pow_int(w, prev);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!s.empty()) s += (c > 0 ? " + " : " - ");
            else if (c < 0) s += "-";
            Int ac = abs(c);
            bool unit = (ac == 1) && e != 0;
            if (!unit) s += ac.str();
            if (e != 0) {
                if (!unit) s += "*";
                s += "q";
                if (e != 2) {
                    s += "^";
                    if (e % 2 == 0) s += std::to_string(e / 2);
                    else s += "(" + std::to_string(e) + "/2)";
                }
            }
        }
        return s;
    }

private:
    static Cplx pow_int(Cplx w, int n) {
        Cplx r = {1.0, 0.0};
        bool neg = n < 0;
        unsigned m = neg ? unsigned(-(long)n) : unsigned(n);
        while (m) {
            if (m & 1) r *= w;
            w *= w;
            m >>= 1;
        }
        return neg ? Cplx(1.0, 0.0) / r : r;
    }
    void require_nonzero() const {
        if (terms_.empty()) throw domain_error("zero polynomial has no exponent range");
    }

    std::vector<Term> terms_; // ascending exponents, no zero coefficients
};

// ---- univariate gcd over Z[q^(1/2), q^(-1/2)] ---------------------------------
// Returned gcd is primitive, has lowest stored exponent 0 and positive leading
// coefficient; defined up to that normalization.

namespace detail {

// dense integer polynomial in x = q^(1/2), index = degree
using ZPoly = std::vector<Int>;

inline ZPoly to_zpoly(const LaurentPoly& p, int& shift) {
    shift = p.min_exp_half();
    ZPoly v(size_t(p.max_exp_half() - shift) + 1, Int(0));
    for (auto& [e, c] : p.terms()) v[size_t(e - shift)] = c;
    return v;
}

inline void ztrim(ZPoly& v) { while (!v.empty() && v.back() == 0) v.pop_back(); }

inline Int zcontent(const ZPoly& v) {
    Int g = 0;
    for (auto& c : v) { g = gcd(g, c); if (g == 1) break; }
    return g;
}

inline void zdiv_scalar(ZPoly& v, const Int& d) { for (auto& c : v) c /= d; }

// pseudo-remainder of a by b (deg a >= deg b), b nonzero
inline ZPoly zprem(ZPoly a, const ZPoly& b) {
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        ztrim(a);
        if (a.size() < b.size()) break;
        Int la = a.back();
        size_t off = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

inline ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a); ztrim(b);
    if (a.empty()) { if (!b.empty() && b.back() < 0) for (auto& c : b) c = -c; return b; }
    if (b.empty()) { if (a.back() < 0) for (auto& c : a) c = -c; return a; }
    Int ca = zcontent(a), cb = zcontent(b);
    Int cg = gcd(ca, cb);
    zdiv_scalar(a, ca); zdiv_scalar(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        ZPoly r = zprem(a, b);
        if (r.empty()) break;
        Int cr = zcontent(r);
        zdiv_scalar(r, cr);
        a = std::move(b);
        b = std::move(r);
    }
    if (b.back() < 0) for (auto& c : b) c = -c;
    for (auto& c : b) c *= cg;
    return b;
}

} // namespace detail

inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& nz = a.is_zero() ? b : a;
        int sh;
        auto v = detail::to_zpoly(nz, sh);
        detail::ztrim(v);
        if (v.back() < 0) for (auto& c : v) c = -c;
        std::vector<LaurentPoly::Term> ts;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) ts.push_back({int(i), v[i]});
        return LaurentPoly::from_terms(std::move(ts));
    }
    int sa, sb;
    auto va = detail::to_zpoly(a, sa);
    auto vb = detail::to_zpoly(b, sb);
    auto g = detail::zgcd(std::move(va), std::move(vb));
    size_t low = 0;
    while (low < g.size() && g[low] == 0) ++low;
    std::vector<LaurentPoly::Term> ts;
    for (size_t i = low; i < g.size(); ++i)
        if (g[i] != 0) ts.push_back({int(i - low), g[i]});
    return LaurentPoly::from_terms(std::move(ts));
}

// ---- q-combinatorics -----------------------------------------------------------

// [n]_q = (q^n - q^-n)/(q - q^-1); [-n] = -[n], [0] = 0
inline LaurentPoly quantum_int(int n) {
    if (n == 0) return {};
    if (n < 0) return -quantum_int(-n);
    std::vector<LaurentPoly::Term> ts;
    for (int e = -(n - 1); e <= n - 1; e += 2) ts.push_back({2 * e, 1});
    return LaurentPoly::from_terms(std::move(ts));
}

// {x} = q^x - q^-x
inline LaurentPoly quantum_bracket(int x) {
    if (x == 0) return {};
    return LaurentPoly::q_power(x) - LaurentPoly::q_power(-x);
}

// [n]! = [n][n-1]...[1], [0]! = 1
inline LaurentPoly q_factorial(int n) {
    if (n < 0) throw domain_error("q_factorial: negative n");
    LaurentPoly r(1);
    for (int i = 2; i <= n; ++i) r *= quantum_int(i);
    return r;
}

// [j,k] = [j][j+1]...[j+k-1], [j,0] = 1
inline LaurentPoly rising_q_factorial(int j, int k) {
    if (k < 0) throw domain_error("rising_q_factorial: negative k");
    LaurentPoly r(1);
    for (int i = 0; i < k; ++i) r *= quantum_int(j + i);
    return r;
}

} // namespace braidforge
