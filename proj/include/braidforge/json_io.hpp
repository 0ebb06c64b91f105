#pragma once

// Canonical JSON form for exact polynomials:
//   {"vars":["q","A"],"half_units":true,"terms":[{"q":e,"A":e,"c":"<bigint>"},...]}
// Exponents are the stored half-units; terms are sorted lexicographically by
// (q, A) so output is reproducible byte-for-byte.

#include "rational.hpp"

#include <json.hpp>

namespace braidforge {

inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : p.terms())
        terms.push_back({{"q", e}, {"c", c.str()}});
    return {{"vars", {"q"}}, {"half_units", true}, {"terms", terms}};
}

inline nlohmann::json to_json(const BiLaurent& p) {
    auto ts = p.terms();
    std::sort(ts.begin(), ts.end(), [](const BiLaurent::Term& x, const BiLaurent::Term& y) {
        return x.first.q != y.first.q ? x.first.q < y.first.q : x.first.a < y.first.a;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : ts)
        terms.push_back({{"q", e.q}, {"A", e.a}, {"c", c.str()}});
    return {{"vars", {"q", "A"}}, {"half_units", true}, {"terms", terms}};
}

inline nlohmann::json to_json(const RationalFn& f) {
    if (f.is_polynomial()) return to_json(f.num());
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
    std::vector<LaurentPoly::Term> ts;
    for (auto& t : j.at("terms"))
        ts.push_back({t.at("q").get<int>(), Int(t.at("c").get<std::string>())});
    return LaurentPoly::from_terms(std::move(ts));
}

inline BiLaurent bilaurent_from_json(const nlohmann::json& j) {
    std::vector<BiLaurent::Term> ts;
    for (auto& t : j.at("terms")) {
        int ea = t.contains("A") ? t.at("A").get<int>() : 0;
        ts.push_back({{t.at("q").get<int>(), ea}, Int(t.at("c").get<std::string>())});
    }
    return BiLaurent::from_terms(std::move(ts));
}

} // namespace braidforge
