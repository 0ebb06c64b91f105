#pragma once

// Truncated hbar-expansion of HOMFLY-PT values under q -> e^{hbar/2},
// A -> e^{N hbar/2}, with N kept symbolic and exact rational arithmetic.

#include "bilaurent.hpp"

#include <json.hpp>
#include <optional>

namespace braidforge {

// polynomial in N with exact rational coefficients; index = power of N
using NPoly = std::vector<Rat>;

inline bool npoly_zero(const NPoly& p) {
    for (auto& c : p) if (c != 0) return false;
    return true;
}

inline void npoly_trim(NPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

struct HbarSeries {
    int order = 0;
    std::vector<NPoly> coeffs; // coeffs[n] multiplies hbar^n

    bool coeff_zero(int n) const { return npoly_zero(coeffs.at(size_t(n))); }

    // substitute a rational value for N; returns the plain hbar-series
    std::vector<Rat> at_N(const Rat& n0) const {
        std::vector<Rat> out;
        for (auto& p : coeffs) {
            Rat acc = 0, pw = 1;
            for (auto& c : p) {
                acc += c * pw;
                pw *= n0;
            }
            out.push_back(acc);
        }
        return out;
    }
};

// a stored monomial c q^{eq/2} A^{ea/2} becomes c exp(hbar (eq + N ea)/4)
inline HbarSeries expand(const BiLaurent& h, int order) {
    if (order < 0 || order > 16) throw domain_error("expand: order must be in 0..16");
    HbarSeries s;
    s.order = order;
    s.coeffs.assign(size_t(order) + 1, NPoly{});
    std::vector<Rat> inv_fact(size_t(order) + 1, Rat(1));
    for (int n = 1; n <= order; ++n) inv_fact[size_t(n)] = inv_fact[size_t(n) - 1] / n;
    for (auto& [e, c] : h.terms()) {
        Rat a(e.q, 4), b(e.a, 4); // exponent is (a + b N)
        // (a + bN)^n = sum_k C(n,k) a^{n-k} b^k N^k
        std::vector<Rat> apow(size_t(order) + 1, Rat(1)), bpow(size_t(order) + 1, Rat(1));
        for (int n = 1; n <= order; ++n) {
            apow[size_t(n)] = apow[size_t(n) - 1] * a;
            bpow[size_t(n)] = bpow[size_t(n) - 1] * b;
        }
        for (int n = 0; n <= order; ++n) {
            NPoly& dst = s.coeffs[size_t(n)];
            if (dst.size() < size_t(n) + 1) dst.resize(size_t(n) + 1, Rat(0));
            Rat binom = 1;
            for (int k = 0; k <= n; ++k) {
                dst[size_t(k)] += Rat(c) * inv_fact[size_t(n)] * binom * apow[size_t(n - k)] * bpow[size_t(k)];
                binom = binom * (n - k) / (k + 1);
            }
        }
    }
    for (auto& p : s.coeffs) npoly_trim(p);
    return s;
}

// one-variable version for Jones-type specializations: q^{e/2} -> e^{e hbar/4}
inline std::vector<Rat> expand_univariate(const LaurentPoly& j, int order) {
    if (order < 0 || order > 16) throw domain_error("expand: order must be in 0..16");
    std::vector<Rat> out(size_t(order) + 1, Rat(0));
    std::vector<Rat> inv_fact(size_t(order) + 1, Rat(1));
    for (int n = 1; n <= order; ++n) inv_fact[size_t(n)] = inv_fact[size_t(n) - 1] / n;
    for (auto& [e, c] : j.terms()) {
        Rat x(e, 4), pw = 1;
        for (int n = 0; n <= order; ++n) {
            out[size_t(n)] += Rat(c) * pw * inv_fact[size_t(n)];
            pw *= x;
        }
    }
    return out;
}

// smallest n >= 1 with a nonzero coefficient; nullopt when the whole truncated
// tail vanishes (the unknot)
inline std::optional<int> vanishing_order(const HbarSeries& s) {
    if (s.coeffs.empty() || npoly_zero(s.coeffs[0]) || s.coeffs[0] != NPoly{Rat(1)})
        throw domain_error("vanishing_order: series must start at 1");
    for (int n = 1; n <= s.order; ++n)
        if (!s.coeff_zero(n)) return n;
    return std::nullopt;
}

inline nlohmann::json to_json(const HbarSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& p : s.coeffs) {
        nlohmann::json np = nlohmann::json::array();
        for (auto& c : p) {
            np.push_back({{"num", numerator(c).str()}, {"den", denominator(c).str()}});
        }
        coeffs.push_back(np);
    }
    return {{"order", s.order}, {"hbar_coeffs", coeffs}};
}

} // namespace braidforge
