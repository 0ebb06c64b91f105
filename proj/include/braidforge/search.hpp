#pragma once

// Positive-braid search: enumerate positive 4-strand words of length 5 + 12k,
// keep canonical cyclic representatives whose closure is a knot, and match the
// character coefficients against the twist-shifted target relations.  Words
// are rejected first at floating-point q-points (shared-prefix DFS products),
// and only float survivors are verified exactly.

#include "hypothesis.hpp"

#include <json.hpp>

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

namespace braidforge {

// ------------------------------------------------------------- target -------

struct SearchTarget {
    int m = 0;
    int p = 0;      // number of half-twist factors removed; even
    int length = 5; // positive word length = 2m + 5 + 6p

    // exact match identity, a22 eliminated and cleared of negative twists:
    //   q^{9+4m} (1+q^2+q^4) (a31+ - q^{8p} a211+) = q^{4p} R_0
    LaurentPoly lhs_factor;
    LaurentPoly rhs;

    static SearchTarget make(int m, int k) {
        if (m < 0 || k < 0) throw domain_error("SearchTarget: m, k must be non-negative");
        SearchTarget t;
        t.m = m;
        t.p = 2 * k;
        t.length = 2 * m + 5 + 6 * t.p;
        auto qp = [](int e, int c = 1) { return LaurentPoly::q_power(e, c); };
        LaurentPoly sig5;
        for (int e = 0; e <= 8; e += 2) sig5 += qp(e);
        t.lhs_factor = qp(9 + 4 * m) * (LaurentPoly(1) + qp(2) + qp(4));
        LaurentPoly r0 = (LaurentPoly(1) + qp(2)) * (LaurentPoly(1) + qp(20 + 8 * m)) -
                         sig5 * (qp(2 + 2 * m) + qp(12 + 6 * m));
        t.rhs = r0.scaled(8 * t.p, 1); // q^{4p}
        return t;
    }
};

// --------------------------------------------------------- permutations -----

namespace detail {

struct PermTables {
    std::array<std::array<uint8_t, 3>, 24> step{}; // apply sigma_i (i = 0..2)
    std::array<uint8_t, 24> dist_to_knot{};        // min letters to reach a 4-cycle
    std::array<bool, 24> is_knot{};

    static const PermTables& get() {
        static const PermTables t = build();
        return t;
    }

private:
    static int encode(const std::array<uint8_t, 4>& p) {
        int id = 0;
        std::array<uint8_t, 4> q = p;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (q[size_t(j)] < q[size_t(i)]) ++smaller;
            id = id * (4 - i) + smaller;
        }
        return id;
    }
    static PermTables build() {
        PermTables t;
        std::array<std::array<uint8_t, 4>, 24> perms;
        std::array<uint8_t, 4> base = {0, 1, 2, 3};
        int n = 0;
        std::array<uint8_t, 4> p = base;
        // enumerate all permutations deterministically
        std::sort(p.begin(), p.end());
        do {
            perms[size_t(encode(p))] = p;
            ++n;
        } while (std::next_permutation(p.begin(), p.end()));
        for (int id = 0; id < 24; ++id) {
            auto pm = perms[size_t(id)];
            int cycles = 0;
            std::array<bool, 4> seen{};
            for (int i = 0; i < 4; ++i) {
                if (seen[size_t(i)]) continue;
                ++cycles;
                int j = i;
                while (!seen[size_t(j)]) {
                    seen[size_t(j)] = true;
                    j = pm[size_t(j)];
                }
            }
            t.is_knot[size_t(id)] = (cycles == 1);
            for (int g = 0; g < 3; ++g) {
                auto q2 = pm;
                std::swap(q2[size_t(g)], q2[size_t(g) + 1]);
                t.step[size_t(id)][size_t(g)] = uint8_t(encode(q2));
            }
        }
        // BFS for the distance to any 4-cycle
        t.dist_to_knot.fill(255);
        std::vector<int> frontier;
        for (int id = 0; id < 24; ++id)
            if (t.is_knot[size_t(id)]) {
                t.dist_to_knot[size_t(id)] = 0;
                frontier.push_back(id);
            }
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int id : frontier)
                for (int g = 0; g < 3; ++g) {
                    int nb = t.step[size_t(id)][size_t(g)];
                    if (t.dist_to_knot[size_t(nb)] == 255) {
                        t.dist_to_knot[size_t(nb)] =
                            uint8_t(t.dist_to_knot[size_t(id)] + 1);
                        next.push_back(nb);
                    }
                }
            frontier = std::move(next);
        }
        return t;
    }
};

// 3x3 complex product track for the [3,1] sector at a fixed q-point.  We keep
// products of b_i(1/q) only (row-modified identities, so one step is a rank-1
// update); the sector matrix is M_i = q * b_i(1/q), so a positive word of
// length L contributes an overall q^L that is folded in at the leaf.
struct NumTrack {
    Cplx q;
    // genrow[i]: row i of b_{i+1}(1/q), at columns (i-1, i, i+1), zero padded
    std::array<std::array<Cplx, 3>, 3> genrow{};

    void init(Cplx q0) {
        q = q0;
        // b_i(q) row entries are (q^2, -q^2, 1); here at 1/q0
        Cplx qi2 = 1.0 / (q0 * q0);
        for (int i = 0; i < 3; ++i) {
            genrow[size_t(i)] = {Cplx(0), Cplx(0), Cplx(0)};
            if (i - 1 >= 0) genrow[size_t(i)][0] = qi2;
            genrow[size_t(i)][1] = -qi2;
            if (i + 1 <= 2) genrow[size_t(i)][2] = Cplx(1.0, 0.0);
        }
    }

    // trace multiplier for a positive word of the given length
    Cplx word_scale(int length) const { return std::pow(q, double(length)); }

    static void apply(std::array<Cplx, 9>& prod, const NumTrack& t, int gen /*0..2*/) {
        // P <- P * G, G = I + e_g (r - e_g^T): cols g-1, g, g+1 updated
        const auto& row = t.genrow[size_t(gen)];
        for (int r = 0; r < 3; ++r) {
            Cplx pg = prod[size_t(r) * 3 + size_t(gen)];
            if (gen - 1 >= 0) prod[size_t(r) * 3 + size_t(gen - 1)] += pg * row[0];
            Cplx diag = pg * row[1];
            if (gen + 1 <= 2) prod[size_t(r) * 3 + size_t(gen + 1)] += pg * row[2];
            prod[size_t(r) * 3 + size_t(gen)] = diag;
        }
    }
};

inline bool canonical_cyclic_digits(const std::vector<uint8_t>& d) {
    const size_t n = d.size();
    for (size_t s = 1; s < n; ++s)
        for (size_t k = 0; k < n; ++k) {
            uint8_t a = d[(s + k) % n], b = d[k];
            if (a != b) {
                if (a < b) return false;
                break;
            }
        }
    return true;
}

inline const std::array<Cplx, 2>& prefilter_points() {
    static const std::array<Cplx, 2> pts = {std::polar(1.0, 0.9133731),
                                            std::polar(1.0, 2.2145170)};
    return pts;
}

} // namespace detail

// ------------------------------------------------------ enumeration ---------

// Visits positive words of the given length whose base-3 encoding is congruent
// to shard_index mod shard_total, ascending, canonical cyclic representatives
// only.  `start` is the first encoding to consider (resume support).  Stops
// early if the visitor returns false.
template <class Visitor>
void enumerate_positive(int length, int shard_index, int shard_total, Visitor&& visit,
                        uint64_t start = 0) {
    if (length < 1) throw domain_error("enumerate_positive: length must be positive");
    if (shard_total < 1 || shard_index < 0 || shard_index >= shard_total)
        throw domain_error("enumerate_positive: bad shard");
    std::vector<uint8_t> digits(size_t(length), 0);
    std::vector<uint64_t> scale(size_t(length) + 1, 1); // scale[i] = 3^(length - i)
    for (int i = length - 1; i >= 0; --i) scale[size_t(i)] = scale[size_t(i) + 1] * 3;

    std::function<bool(int, uint64_t)> rec = [&](int depth, uint64_t prefix) -> bool {
        if (depth == length) {
            if (prefix % uint64_t(shard_total) != uint64_t(shard_index)) return true;
            if (prefix < start) return true;
            if (!detail::canonical_cyclic_digits(digits)) return true;
            return visit(digits, prefix);
        }
        uint64_t span = scale[size_t(depth) + 1];
        for (uint8_t d = 0; d < 3; ++d) {
            uint64_t lo = prefix * 3 + d;
            if ((lo + 1) * span <= start) continue; // subtree entirely before start
            digits[size_t(depth)] = d;
            if (!rec(depth + 1, lo)) return false;
        }
        return true;
    };
    rec(0, 0);
}

// convenience collector for small lengths
inline std::vector<BraidWord> enumerate_positive_words(int length, int shard_index = 0,
                                                       int shard_total = 1) {
    std::vector<BraidWord> out;
    enumerate_positive(length, shard_index, shard_total,
                       [&](const std::vector<uint8_t>& d, uint64_t) {
                           std::vector<int> ls;
                           for (uint8_t x : d) ls.push_back(int(x) + 1);
                           out.push_back(BraidWord(4, std::move(ls)));
                           return true;
                       });
    return out;
}

// ------------------------------------------------------------ matching ------

// exact a22-eliminated identity; a211+ is folded through
// a211+(q) = (-1)^L a31+(1/q) for a positive word of length L
inline bool match_word(const BraidWord& w, const SearchTarget& t) {
    if (!closure_info(w).is_knot())
        throw domain_error("match_word: closure must be a knot");
    if (int(w.size()) != t.length || writhe(w) != t.length) return false;
    LaurentPoly a31 = sector_word_matrix(SectorFamily::B4_31, w.letters).trace();
    LaurentPoly a211 = a31.invert_q().scaled(0, (t.length % 2 == 0) ? 1 : -1);
    LaurentPoly lhs = t.lhs_factor * (a31 - a211.scaled(16 * t.p, 1));
    return lhs == t.rhs;
}

// direct cross-validation: take a22 from the word's own [2,2] trace, run
// eq-(a-coef), and test both 3x3-sector relations of eq-(Newacoefficient)
inline bool match_word_via_a22(const BraidWord& w, const SearchTarget& t) {
    if (!closure_info(w).is_knot())
        throw domain_error("match_word_via_a22: closure must be a knot");
    if (int(w.size()) != t.length || writhe(w) != t.length) return false;
    LaurentPoly a22 = sector_word_matrix(SectorFamily::B4_22, w.letters).trace();
    CharCoeffs c = acoef_solve(t.m, RationalFn{BiLaurent(a22)});
    RationalFn a31p{BiLaurent(sector_word_matrix(SectorFamily::B4_31, w.letters).trace())};
    RationalFn a211p{BiLaurent(sector_word_matrix(SectorFamily::B4_211, w.letters).trace())};
    RationalFn q4p{BiLaurent(LaurentPoly::q_power(4 * t.p))};
    RationalFn q4pm{BiLaurent(LaurentPoly::q_power(-4 * t.p))};
    return a31p == q4p * c.a.at({3, 1}) && a211p == q4pm * c.a.at({2, 1, 1});
}

// standalone float prefilter (same arithmetic as the search inner loop); true
// means the word survives to exact verification
inline bool prefilter_accepts(const BraidWord& w, const SearchTarget& t, double tol = 1e-8) {
    if (int(w.size()) != t.length) return false;
    const auto& pts = detail::prefilter_points();
    const double parity = (t.length % 2 == 0) ? 1.0 : -1.0;
    for (const Cplx& q0 : pts) {
        std::array<detail::NumTrack, 2> tr;
        tr[0].init(q0);
        tr[1].init(Cplx(1.0, 0.0) / q0);
        std::array<std::array<Cplx, 9>, 2> prod;
        for (int i = 0; i < 2; ++i)
            prod[size_t(i)] = {Cplx(1), Cplx(0), Cplx(0), Cplx(0), Cplx(1),
                               Cplx(0), Cplx(0), Cplx(0), Cplx(1)};
        for (int g : w.letters) {
            if (g < 1 || g > 3) throw domain_error("prefilter: positive words only");
            for (int i = 0; i < 2; ++i)
                detail::NumTrack::apply(prod[size_t(i)], tr[size_t(i)], g - 1);
        }
        Cplx a31 = tr[0].word_scale(t.length) * (prod[0][0] + prod[0][4] + prod[0][8]);
        Cplx a31_inv = tr[1].word_scale(t.length) * (prod[1][0] + prod[1][4] + prod[1][8]);
        Cplx lhs = t.lhs_factor.eval(q0) *
                   (a31 - std::pow(q0, double(8 * t.p)) * parity * a31_inv);
        Cplx rhs = t.rhs.eval(q0);
        double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
        if (std::abs(lhs - rhs) > tol * scale) return false;
    }
    return true;
}

// ------------------------------------------------------------- search -------

struct ShardState {
    int shard = 0, total = 1;
    uint64_t cursor = 0; // first encoding not yet processed
    uint64_t canonical_examined = 0;
    uint64_t knot_candidates = 0;
    uint64_t float_rejects = 0;
    uint64_t exact_checks = 0;
    std::vector<std::vector<int>> matches; // letter lists
    bool done = false;
};

struct SearchReport {
    int k = 0, m = 0, length = 0, shards = 1;
    uint64_t total_words = 0; // 3^length
    uint64_t canonical_examined = 0;
    uint64_t knot_candidates = 0;
    uint64_t float_rejects = 0;
    uint64_t exact_checks = 0;
    std::vector<std::vector<int>> matches;
    double elapsed_s = 0, words_per_sec = 0, dedup_ratio = 0;
    double t_enumerate_s = 0, t_prefilter_s = 0, t_exact_s = 0;
    bool complete = true;
};

struct SearchConfig {
    int threads = 0;
    uint64_t checkpoint_every = 1u << 20; // canonical words per checkpoint
    uint64_t stop_after_words = 0;        // 0 = run to completion (test hook)
    double float_tol = 1e-8;
    std::string checkpoint_dir;
    bool resume = false;
};

namespace detail {

inline nlohmann::json shard_to_json(const ShardState& s) {
    return {{"shard", s.shard},       {"total", s.total},
            {"cursor", s.cursor},     {"canonical_examined", s.canonical_examined},
            {"knot_candidates", s.knot_candidates}, {"float_rejects", s.float_rejects},
            {"exact_checks", s.exact_checks},       {"matches", s.matches},
            {"done", s.done}};
}

inline ShardState shard_from_json(const nlohmann::json& j) {
    ShardState s;
    s.shard = j.at("shard").get<int>();
    s.total = j.at("total").get<int>();
    s.cursor = j.at("cursor").get<uint64_t>();
    s.canonical_examined = j.at("canonical_examined").get<uint64_t>();
    s.knot_candidates = j.at("knot_candidates").get<uint64_t>();
    s.float_rejects = j.at("float_rejects").get<uint64_t>();
    s.exact_checks = j.at("exact_checks").get<uint64_t>();
    s.matches = j.at("matches").get<std::vector<std::vector<int>>>();
    s.done = j.at("done").get<bool>();
    return s;
}

inline std::filesystem::path shard_file(const std::string& dir, int shard, int total) {
    return std::filesystem::path(dir) /
           ("shard_" + std::to_string(shard) + "_of_" + std::to_string(total) + ".jsonl");
}

// atomic rewrite: history lines plus the current state as the last line
inline void write_checkpoint(const std::string& dir, const ShardState& s,
                             std::vector<std::string>& history) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    history.push_back(shard_to_json(s).dump());
    auto path = shard_file(dir, s.shard, s.total);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw domain_error("checkpoint: cannot write " + tmp.string());
        for (auto& line : history) os << line << "\n";
    }
    std::filesystem::rename(tmp, path);
}

inline bool read_checkpoint(const std::string& dir, int shard, int total, ShardState& out,
                            std::vector<std::string>& history) {
    auto path = shard_file(dir, shard, total);
    std::ifstream is(path);
    if (!is) return false;
    std::string line, last;
    history.clear();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        history.push_back(line);
        last = line;
    }
    if (last.empty()) return false;
    out = shard_from_json(nlohmann::json::parse(last));
    return true;
}

} // namespace detail

// one shard of the sweep; resumable, checkpointed
inline ShardState run_shard(const SearchTarget& target, int shard, int total,
                            const SearchConfig& cfg,
                            double* t_prefilter = nullptr, double* t_exact = nullptr) {
    ShardState st;
    st.shard = shard;
    st.total = total;
    std::vector<std::string> history;
    if (cfg.resume && !cfg.checkpoint_dir.empty()) {
        ShardState prev;
        if (detail::read_checkpoint(cfg.checkpoint_dir, shard, total, prev, history)) {
            if (prev.done) return prev;
            st = prev;
        }
    }

    const auto& pt = detail::PermTables::get();
    const int L = target.length;

    // two fixed q-points plus their inverses (a211 needs a31 at 1/q)
    const std::array<Cplx, 2>& qpts = detail::prefilter_points();
    std::array<detail::NumTrack, 4> tracks;
    for (int i = 0; i < 2; ++i) {
        tracks[size_t(2 * i)].init(qpts[size_t(i)]);
        tracks[size_t(2 * i + 1)].init(Cplx(1.0, 0.0) / qpts[size_t(i)]);
    }
    // rhs and lhs factor values at the two points, q^{8p}, and the word scale
    // q^{±L} relating trace tracks to the true sector traces
    std::array<Cplx, 2> rhs_v, lhsf_v, q8p_v, wscale_q, wscale_qi;
    for (int i = 0; i < 2; ++i) {
        rhs_v[size_t(i)] = target.rhs.eval(qpts[size_t(i)]);
        lhsf_v[size_t(i)] = target.lhs_factor.eval(qpts[size_t(i)]);
        q8p_v[size_t(i)] = std::pow(qpts[size_t(i)], double(8 * target.p));
        wscale_q[size_t(i)] = tracks[size_t(2 * i)].word_scale(L);
        wscale_qi[size_t(i)] = tracks[size_t(2 * i + 1)].word_scale(L);
    }
    const double parity = (L % 2 == 0) ? 1.0 : -1.0;

    // DFS stacks: products for the 4 tracks and the permutation id per depth
    std::vector<std::array<std::array<Cplx, 9>, 4>> prods(size_t(L) + 1);
    std::vector<uint8_t> perm(size_t(L) + 1, 0);
    for (int t = 0; t < 4; ++t)
        prods[0][size_t(t)] = {Cplx(1), Cplx(0), Cplx(0), Cplx(0), Cplx(1),
                               Cplx(0), Cplx(0), Cplx(0), Cplx(1)};
    {
        std::array<uint8_t, 4> idp = {0, 1, 2, 3};
        (void)idp;
        perm[0] = 0; // identity permutation id (encode({0,1,2,3}) = 0)
    }

    using clock = std::chrono::steady_clock;
    double tp = 0, te = 0;
    uint64_t since_checkpoint = 0;
    bool stopped = false;

    std::vector<uint8_t> digits(size_t(L), 0);
    std::vector<uint64_t> scale(size_t(L) + 1, 1);
    for (int i = L - 1; i >= 0; --i) scale[size_t(i)] = scale[size_t(i) + 1] * 3;

    std::function<bool(int, uint64_t)> rec = [&](int depth, uint64_t prefix) -> bool {
        if (depth == L) {
            if (prefix % uint64_t(total) != uint64_t(shard)) return true;
            if (prefix < st.cursor) return true;
            st.cursor = prefix + 1;
            if (!detail::canonical_cyclic_digits(digits)) return true;
            ++st.canonical_examined;
            ++since_checkpoint;
            if (!pt.is_knot[perm[size_t(depth)]]) return true;
            ++st.knot_candidates;

            auto t0 = clock::now();
            bool float_ok = true;
            for (int i = 0; i < 2 && float_ok; ++i) {
                const auto& Pq = prods[size_t(depth)][size_t(2 * i)];
                const auto& Pqi = prods[size_t(depth)][size_t(2 * i + 1)];
                Cplx a31 = wscale_q[size_t(i)] * (Pq[0] + Pq[4] + Pq[8]);
                Cplx a31_inv = wscale_qi[size_t(i)] * (Pqi[0] + Pqi[4] + Pqi[8]);
                Cplx a211 = parity * a31_inv;
                Cplx lhs = lhsf_v[size_t(i)] * (a31 - q8p_v[size_t(i)] * a211);
                double scale_mag = 1.0 + std::abs(lhs) + std::abs(rhs_v[size_t(i)]);
                if (std::abs(lhs - rhs_v[size_t(i)]) > cfg.float_tol * scale_mag) float_ok = false;
            }
            tp += std::chrono::duration<double>(clock::now() - t0).count();
            if (!float_ok) {
                ++st.float_rejects;
            } else {
                auto t1 = clock::now();
                ++st.exact_checks;
                std::vector<int> ls;
                for (uint8_t x : digits) ls.push_back(int(x) + 1);
                BraidWord w(4, ls);
                if (match_word(w, target) && match_word_via_a22(w, target))
                    st.matches.push_back(ls);
                te += std::chrono::duration<double>(clock::now() - t1).count();
            }
            if (!cfg.checkpoint_dir.empty() && since_checkpoint >= cfg.checkpoint_every) {
                since_checkpoint = 0;
                detail::write_checkpoint(cfg.checkpoint_dir, st, history);
            }
            if (cfg.stop_after_words && st.canonical_examined >= cfg.stop_after_words) {
                stopped = true;
                return false;
            }
            return true;
        }
        uint64_t span = scale[size_t(depth) + 1];
        // prune: remaining letters must reach a 4-cycle with matching parity
        int remaining = L - depth;
        int dist = pt.dist_to_knot[perm[size_t(depth)]];
        if (remaining < dist || ((remaining - dist) % 2) != 0) return true;
        for (uint8_t d = 0; d < 3; ++d) {
            uint64_t lo = prefix * 3 + d;
            if ((lo + 1) * span <= st.cursor) continue; // subtree entirely before the cursor
            digits[size_t(depth)] = d;
            perm[size_t(depth) + 1] = pt.step[perm[size_t(depth)]][d];
            for (int t = 0; t < 4; ++t) {
                prods[size_t(depth) + 1][size_t(t)] = prods[size_t(depth)][size_t(t)];
                detail::NumTrack::apply(prods[size_t(depth) + 1][size_t(t)], tracks[size_t(t)], d);
            }
            if (!rec(depth + 1, lo)) return false;
        }
        return true;
    };
    rec(0, 0);

    st.done = !stopped;
    if (!cfg.checkpoint_dir.empty()) detail::write_checkpoint(cfg.checkpoint_dir, st, history);
    if (t_prefilter) *t_prefilter += tp;
    if (t_exact) *t_exact += te;
    return st;
}

inline SearchReport run_search(int k, int shards, const SearchConfig& cfg = {}, int m = 0) {
    if (shards < 1) throw domain_error("run_search: shards must be positive");
    SearchTarget target = SearchTarget::make(m, k);
    SearchReport rep;
    rep.k = k;
    rep.m = m;
    rep.length = target.length;
    rep.shards = shards;
    rep.total_words = 1;
    for (int i = 0; i < target.length; ++i) rep.total_words *= 3;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<ShardState> states;
    states.resize(size_t(shards));
    std::vector<double> tps(size_t(shards), 0), tes(size_t(shards), 0);
    int nthreads = cfg.threads > 0 ? cfg.threads : int(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, shards));
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= shards) break;
            states[size_t(i)] =
                run_shard(target, i, shards, cfg, &tps[size_t(i)], &tes[size_t(i)]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (int i = 0; i < shards; ++i) {
        const auto& s = states[size_t(i)];
        rep.canonical_examined += s.canonical_examined;
        rep.knot_candidates += s.knot_candidates;
        rep.float_rejects += s.float_rejects;
        rep.exact_checks += s.exact_checks;
        rep.complete = rep.complete && s.done;
        for (auto& mch : s.matches) rep.matches.push_back(mch);
        rep.t_prefilter_s += tps[size_t(i)];
        rep.t_exact_s += tes[size_t(i)];
    }
    std::sort(rep.matches.begin(), rep.matches.end());
    rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.t_enumerate_s = std::max(0.0, rep.elapsed_s - rep.t_prefilter_s - rep.t_exact_s);
    rep.words_per_sec = rep.elapsed_s > 0 ? double(rep.canonical_examined) / rep.elapsed_s : 0;
    rep.dedup_ratio =
        rep.total_words ? double(rep.canonical_examined) / double(rep.total_words) : 0;
    return rep;
}

inline nlohmann::json to_json(const SearchReport& r) {
    return {{"k", r.k},
            {"m", r.m},
            {"length", r.length},
            {"shards", r.shards},
            {"total_words", r.total_words},
            {"canonical_examined", r.canonical_examined},
            {"knot_candidates", r.knot_candidates},
            {"float_rejects", r.float_rejects},
            {"exact_checks", r.exact_checks},
            {"matches", r.matches},
            {"complete", r.complete},
            {"elapsed_s", r.elapsed_s},
            {"words_per_sec", r.words_per_sec},
            {"dedup_ratio", r.dedup_ratio},
            {"stage_timing",
             {{"enumerate_s", r.t_enumerate_s},
              {"prefilter_s", r.t_prefilter_s},
              {"exact_s", r.t_exact_s}}}};
}

} // namespace braidforge
