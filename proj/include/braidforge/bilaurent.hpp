#pragma once

// Exact bivariate Laurent polynomials in (q, A).  Both exponents are stored in
// half-units, matching LaurentPoly; public results always carry even stored
// exponents (pure functions of q^2, A^2 shifted by integer powers).

#include "laurent.hpp"

#include <map>

namespace braidforge {

struct Exp2 {
    int q = 0, a = 0; // half-units
    friend bool operator==(const Exp2&, const Exp2&) = default;
    // monomial order: lex on (a, q); used for division and canonical storage
    friend bool operator<(const Exp2& x, const Exp2& y) {
        return x.a != y.a ? x.a < y.a : x.q < y.q;
    }
};

class BiLaurent {
public:
    using Term = std::pair<Exp2, Int>;

    BiLaurent() = default;
    BiLaurent(const Int& c) { if (c != 0) terms_.push_back({{0, 0}, c}); }
    BiLaurent(long c) : BiLaurent(Int(c)) {}
    BiLaurent(int c) : BiLaurent(Int(c)) {}
    BiLaurent(const LaurentPoly& p) {
        for (auto& [e, c] : p.terms()) terms_.push_back({{e, 0}, c});
    }

    // c * q^(eq/2) * A^(ea/2)
    static BiLaurent monomial_half(int eq, int ea, Int c = 1) {
        BiLaurent r;
        if (c != 0) r.terms_.push_back({{eq, ea}, std::move(c)});
        return r;
    }
    static BiLaurent qA_power(int eq, int ea, Int c = 1) {
        return monomial_half(2 * eq, 2 * ea, std::move(c));
    }

    static BiLaurent from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        BiLaurent r;
        for (auto& t : ts) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) {
                r.terms_.back().second += t.second;
                if (r.terms_.back().second == 0) r.terms_.pop_back();
            } else if (t.second != 0) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == Exp2{0, 0} && terms_[0].second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool has_even_exponents() const {
        for (auto& t : terms_) if (t.first.q % 2 || t.first.a % 2) return false;
        return true;
    }

    friend bool operator==(const BiLaurent& x, const BiLaurent& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const BiLaurent& x, const BiLaurent& y) { return !(x == y); }

    BiLaurent operator-() const {
        BiLaurent r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend BiLaurent operator+(const BiLaurent& x, const BiLaurent& y) {
        BiLaurent r;
        r.terms_.reserve(x.terms_.size() + y.terms_.size());
        size_t i = 0, j = 0;
        while (i < x.terms_.size() || j < y.terms_.size()) {
            if (j == y.terms_.size() || (i < x.terms_.size() && x.terms_[i].first < y.terms_[j].first)) {
                r.terms_.push_back(x.terms_[i++]);
            } else if (i == x.terms_.size() || y.terms_[j].first < x.terms_[i].first) {
                r.terms_.push_back(y.terms_[j++]);
            } else {
                Int c = x.terms_[i].second + y.terms_[j].second;
                if (c != 0) r.terms_.push_back({x.terms_[i].first, std::move(c)});
                ++i; ++j;
            }
        }
        return r;
    }
    friend BiLaurent operator-(const BiLaurent& x, const BiLaurent& y) { return x + (-y); }

    friend BiLaurent operator*(const BiLaurent& x, const BiLaurent& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::map<Exp2, Int> acc;
        for (auto& tx : x.terms_)
            for (auto& ty : y.terms_) {
                Exp2 e{tx.first.q + ty.first.q, tx.first.a + ty.first.a};
                acc[e] += tx.second * ty.second;
            }
        BiLaurent r;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    BiLaurent& operator+=(const BiLaurent& o) { *this = *this + o; return *this; }
    BiLaurent& operator-=(const BiLaurent& o) { *this = *this - o; return *this; }
    BiLaurent& operator*=(const BiLaurent& o) { *this = *this * o; return *this; }

    BiLaurent scaled(int eq_half, int ea_half, const Int& c) const {
        if (c == 0) return {};
        BiLaurent r = *this;
        for (auto& t : r.terms_) { t.first.q += eq_half; t.first.a += ea_half; t.second *= c; }
        return r;
    }

    BiLaurent pow(unsigned n) const {
        BiLaurent r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    int min_q_half() const { require_nonzero(); int m = terms_[0].first.q; for (auto& t : terms_) m = std::min(m, t.first.q); return m; }
    int max_q_half() const { require_nonzero(); int m = terms_[0].first.q; for (auto& t : terms_) m = std::max(m, t.first.q); return m; }
    int min_a_half() const { require_nonzero(); return terms_.front().first.a; }
    int max_a_half() const { require_nonzero(); return terms_.back().first.a; }

    // difference of max and min A-degree, in whole-A units
    int a_span() const {
        if (is_zero()) throw domain_error("a_span: zero polynomial");
        return (max_a_half() - min_a_half()) / 2;
    }

    // A -> q^N
    LaurentPoly subst_A_qN(int N) const {
        std::vector<LaurentPoly::Term> ts;
        ts.reserve(terms_.size());
        for (auto& [e, c] : terms_) ts.push_back({e.q + N * e.a, c});
        return LaurentPoly::from_terms(std::move(ts));
    }
    // A -> 1
    LaurentPoly subst_A_one() const {
        std::vector<LaurentPoly::Term> ts;
        ts.reserve(terms_.size());
        for (auto& [e, c] : terms_) ts.push_back({e.q, c});
        return LaurentPoly::from_terms(std::move(ts));
    }
    BiLaurent invert_q() const {
        std::vector<Term> ts = terms_;
        for (auto& t : ts) t.first.q = -t.first.q;
        return from_terms(std::move(ts));
    }
    BiLaurent invert_A() const {
        std::vector<Term> ts = terms_;
        for (auto& t : ts) t.first.a = -t.first.a;
        return from_terms(std::move(ts));
    }

    // collect coefficients of A^(k/2): map from stored A-exponent to LaurentPoly in q
    std::map<int, LaurentPoly> by_A() const {
        std::map<int, std::vector<LaurentPoly::Term>> acc;
        for (auto& [e, c] : terms_) acc[e.a].push_back({e.q, c});
        std::map<int, LaurentPoly> r;
        for (auto& [ea, ts] : acc) r[ea] = LaurentPoly::from_terms(std::move(ts));
        return r;
    }
    static BiLaurent from_by_A(const std::map<int, LaurentPoly>& m) {
        std::vector<Term> ts;
        for (auto& [ea, p] : m)
            for (auto& [eq, c] : p.terms()) ts.push_back({{eq, ea}, c});
        return from_terms(std::move(ts));
    }

    Cplx eval(Cplx q0, Cplx a0) const {
        Cplx wq = std::sqrt(q0), wa = std::sqrt(a0);
        Cplx s = {0.0, 0.0};
        for (auto& [e, c] : terms_) s += to_double(c) * powi(wq, e.q) * powi(wa, e.a);
        return s;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!s.empty()) s += (c > 0 ? " + " : " - ");
            else if (c < 0) s += "-";
            Int ac = abs(c);
            bool unit = (ac == 1) && (e.q != 0 || e.a != 0);
            if (!unit) s += ac.str();
            auto var = [&](const char* v, int eh) {
                if (!eh) return std::string();
                std::string r = v;
                if (eh != 2) {
                    r += "^";
                    if (eh % 2 == 0) r += std::to_string(eh / 2);
                    else r += "(" + std::to_string(eh) + "/2)";
                }
                return r;
            };
            std::string vq = var("q", e.q), va = var("A", e.a);
            if (!unit && (!vq.empty() || !va.empty())) s += "*";
            s += vq;
            if (!vq.empty() && !va.empty()) s += "*";
            s += va;
        }
        return s;
    }

private:
    static Cplx powi(Cplx w, int n) {
        Cplx r = {1.0, 0.0};
        bool neg = n < 0;
        unsigned m = neg ? unsigned(-(long)n) : unsigned(n);
        while (m) { if (m & 1) r *= w; w *= w; m >>= 1; }
        return neg ? Cplx(1.0, 0.0) / r : r;
    }
    void require_nonzero() const {
        if (terms_.empty()) throw domain_error("zero polynomial has no exponent range");
    }

    std::vector<Term> terms_; // sorted by Exp2 order, no zero coefficients
};

// Exact division over Q with an integrality check at the end; throws
// internal_error carrying the remainder if den does not divide num.
inline BiLaurent divide_exact(const BiLaurent& num, const BiLaurent& den) {
    if (den.is_zero()) throw domain_error("divide_exact: zero divisor");
    if (num.is_zero()) return {};
    // leading term of den in the (a, q)-lex order
    const auto& dl = den.terms().back();
    const int qlo = num.min_q_half() - den.min_q_half();
    const int qhi = num.max_q_half() - den.max_q_half();
    const int alo = num.min_a_half() - den.min_a_half();
    const int ahi = num.max_a_half() - den.max_a_half();

    std::map<Exp2, Rat> rem;
    for (auto& [e, c] : num.terms()) rem[e] = Rat(c);
    std::vector<std::pair<Exp2, Rat>> quot;

    while (!rem.empty()) {
        auto lead = std::prev(rem.end()); // max in (a,q)-lex order
        Exp2 e{lead->first.q - dl.first.q, lead->first.a - dl.first.a};
        if (e.q < qlo || e.q > qhi || e.a < alo || e.a > ahi) {
            std::string head = "q^(" + std::to_string(lead->first.q) + "/2)A^(" +
                               std::to_string(lead->first.a) + "/2)";
            throw internal_error("divide_exact: remainder nonzero (head " + head + ")");
        }
        Rat t = lead->second / Rat(dl.second);
        quot.push_back({e, t});
        for (auto& [de, dc] : den.terms()) {
            Exp2 k{e.q + de.q, e.a + de.a};
            auto it = rem.find(k);
            Rat v = (it == rem.end() ? Rat(0) : it->second) - t * Rat(dc);
            if (v == 0) { if (it != rem.end()) rem.erase(it); }
            else rem[k] = std::move(v);
        }
    }
    std::vector<BiLaurent::Term> ts;
    ts.reserve(quot.size());
    for (auto& [e, c] : quot) {
        if (denominator(c) != 1)
            throw internal_error("divide_exact: quotient not integral");
        ts.push_back({e, numerator(c)});
    }
    return BiLaurent::from_terms(std::move(ts));
}

// gcd via content/primitive-part recursion: view p as a polynomial in A with
// coefficients in Z[q^±1]; gcd of the q-contents times the primitive-part gcd.
namespace detail {

inline LaurentPoly bi_content(const BiLaurent& p) {
    LaurentPoly g;
    for (auto& [ea, cq] : p.by_A()) {
        g = gcd(g, cq);
        (void)ea;
    }
    return g;
}

// pseudo-remainder in A over Z[q^±1]
inline BiLaurent bi_prem(BiLaurent a, const BiLaurent& b) {
    auto bm = b.by_A();
    const int db = b.max_a_half();
    const LaurentPoly lb = bm.rbegin()->second;
    while (!a.is_zero() && a.max_a_half() >= db) {
        auto am = a.by_A();
        const int da = a.max_a_half();
        const LaurentPoly la = am.rbegin()->second;
        // a <- lb*a - la*b * A^((da-db)/2 half-units)
        BiLaurent lbb(lb), lab(la);
        a = lbb * a - lab * b.scaled(0, da - db, 1);
    }
    return a;
}

inline BiLaurent bi_primitive(const BiLaurent& p, LaurentPoly* content_out = nullptr) {
    LaurentPoly c = bi_content(p);
    if (content_out) *content_out = c;
    if (p.is_zero() || c.is_one()) return p;
    std::map<int, LaurentPoly> out;
    for (auto& [ea, cq] : p.by_A()) out[ea] = divide_exact(cq, c);
    return BiLaurent::from_by_A(out);
}

} // namespace detail

inline BiLaurent gcd(const BiLaurent& a, const BiLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // factor out A-monomials so both are genuine polynomials in A
    BiLaurent pa = a.scaled(0, -a.min_a_half(), 1);
    BiLaurent pb = b.scaled(0, -b.min_a_half(), 1);
    LaurentPoly ca, cb;
    pa = detail::bi_primitive(pa, &ca);
    pb = detail::bi_primitive(pb, &cb);
    LaurentPoly cg = gcd(ca, cb);
    if (pa.max_a_half() < pb.max_a_half()) std::swap(pa, pb);
    while (!pb.is_zero()) {
        BiLaurent r = detail::bi_prem(pa, pb);
        pa = std::move(pb);
        pb = detail::bi_primitive(r);
    }
    BiLaurent g = detail::bi_primitive(pa);
    return g * BiLaurent(cg);
}

} // namespace braidforge
