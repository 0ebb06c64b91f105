#pragma once

// Braid words on n strands and the combinatorial bookkeeping around closures.
// Words are never rewritten through the group relations here; equality of
// braids is always decided downstream through representations.

#include "common.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

namespace braidforge {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters; // g > 0 is sigma_g, g < 0 is sigma_|g| inverse

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
        if (strands < 1) throw domain_error("braid needs at least one strand");
        for (int g : letters)
            if (g == 0 || std::abs(g) > strands - 1)
                throw domain_error("generator index " + std::to_string(g) + " out of range for " +
                                   std::to_string(strands) + " strands");
    }

    size_t size() const { return letters.size(); }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline int writhe(const BraidWord& w) {
    int s = 0;
    for (int g : w.letters) s += g > 0 ? 1 : -1;
    return s;
}

// permutation p with p[i] = end position of the strand starting at i (0-based)
inline std::vector<int> induced_permutation(const BraidWord& w) {
    std::vector<int> p(size_t(w.strands));
    std::iota(p.begin(), p.end(), 0);
    for (int g : w.letters) {
        int i = std::abs(g) - 1;
        std::swap(p[size_t(i)], p[size_t(i) + 1]);
    }
    return p;
}

struct ClosureInfo {
    int components = 0;
    std::vector<std::vector<int>> cycles;
    bool is_knot() const { return components == 1; }
};

inline ClosureInfo closure_info(const BraidWord& w) {
    std::vector<int> p = induced_permutation(w);
    ClosureInfo info;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(int(j));
            j = size_t(p[j]);
        }
        info.cycles.push_back(std::move(cyc));
    }
    info.components = int(info.cycles.size());
    return info;
}

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw domain_error("compose: strand count mismatch");
    std::vector<int> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.strands, std::move(ls));
}

inline BraidWord inverse(const BraidWord& w) {
    std::vector<int> ls(w.letters.rbegin(), w.letters.rend());
    for (int& g : ls) g = -g;
    return BraidWord(w.strands, std::move(ls));
}

inline BraidWord power(const BraidWord& w, int k) {
    BraidWord base = k >= 0 ? w : inverse(w);
    BraidWord r(w.strands, {});
    for (int i = 0; i < std::abs(k); ++i) r = compose(r, base);
    return r;
}

// fundamental half-twist: sigma_1..sigma_{n-1} sigma_1..sigma_{n-2} ... sigma_1
inline BraidWord delta(int strands) {
    if (strands < 2) throw domain_error("delta needs at least two strands");
    std::vector<int> ls;
    for (int top = strands - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) ls.push_back(i);
    return BraidWord(strands, std::move(ls));
}

inline BraidWord project_sigma3_to_sigma1(const BraidWord& w) {
    if (w.strands != 4) throw domain_error("sigma3->sigma1 projection expects a 4-strand word");
    std::vector<int> ls = w.letters;
    for (int& g : ls) {
        if (g == 3) g = 1;
        else if (g == -3) g = -1;
    }
    return BraidWord(3, std::move(ls));
}

// lexicographically minimal cyclic rotation
inline BraidWord canonical_cyclic(const BraidWord& w) {
    const auto& v = w.letters;
    const size_t n = v.size();
    if (n < 2) return w;
    size_t best = 0;
    for (size_t s = 1; s < n; ++s) {
        for (size_t k = 0; k < n; ++k) {
            int a = v[(s + k) % n], b = v[(best + k) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::vector<int> ls(n);
    for (size_t k = 0; k < n; ++k) ls[k] = v[(best + k) % n];
    return BraidWord(w.strands, std::move(ls));
}

// Accepts either a comma/space list of signed letters ("1,1,1,3,3,3,-2") or
// the block-exponent tuple notation "(3,0,3;0,-1,0)" where entries cycle over
// sigma_1..sigma_{n-1} and a signed exponent repeats the generator.
inline BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw domain_error("parse_braid: bad strand count");
    std::string s;
    bool tuple = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) { s += ','; continue; }
        if (c == '(' || c == ')') { tuple = true; continue; }
        if (c == ';') { s += ','; tuple = true; continue; }
        s += c;
    }
    std::vector<int> nums;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string tok = s.substr(i, j - i);
        if (!tok.empty()) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw domain_error("parse_braid: bad token '" + tok + "'");
            }
        }
        i = j + 1;
    }
    if (nums.empty()) return BraidWord(strands, {});
    if (!tuple) {
        for (int g : nums)
            if (g == 0 || std::abs(g) > strands - 1)
                throw domain_error("parse_braid: letter " + std::to_string(g) + " out of range");
        return BraidWord(strands, std::move(nums));
    }
    std::vector<int> ls;
    int gens = strands - 1;
    if (gens == 0) throw domain_error("parse_braid: tuple notation needs >= 2 strands");
    for (size_t k = 0; k < nums.size(); ++k) {
        int gen = int(k) % gens + 1;
        int e = nums[k];
        int letter = e >= 0 ? gen : -gen;
        for (int r = 0; r < std::abs(e); ++r) ls.push_back(letter);
    }
    return BraidWord(strands, std::move(ls));
}

inline nlohmann::json to_json(const BraidWord& w) {
    return {{"strands", w.strands}, {"letters", w.letters}};
}

inline BraidWord braid_from_json(const nlohmann::json& j) {
    return BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
}

} // namespace braidforge
