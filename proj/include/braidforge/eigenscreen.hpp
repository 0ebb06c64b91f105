#pragma once

// Root-of-unity unitarity screening: admissible-k regions, the sector cubic
// from the character coefficients, unit-circle tests over the k-grid, and the
// box enumeration of 3-strand parameterizations.

#include "b3conj.hpp"
#include "hypothesis.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace braidforge {

// ------------------------------------------------------------- k grid -------

struct KGrid {
    double k_min = 0.1, k_max = 150.0, step = 0.1;

    std::vector<double> points() const {
        std::vector<double> ks;
        if (step <= 0) throw domain_error("KGrid: step must be positive");
        for (long i = 0;; ++i) {
            double k = k_min + double(i) * step;
            k = std::round(k * 1e9) / 1e9; // keep 0.1-steps exact-ish
            if (k > k_max + 1e-12) break;
            if (k > 0) ks.push_back(k);
        }
        return ks;
    }
};

// cos(4 pi / k) >= 0 (4 strands) resp. >= -1/2 (3 strands); the non-strict
// boundary is admissible, and the positive grid covers negative k through
// q -> conj(q) symmetry
inline bool admissible_k(double k, int strands) {
    if (k == 0.0) throw domain_error("admissible_k: k must be nonzero");
    double thr = (strands >= 4) ? 0.0 : -0.5;
    if (strands != 3 && strands != 4) throw domain_error("admissible_k: strands must be 3 or 4");
    return std::cos(4.0 * M_PI / k) >= thr - 1e-12;
}

inline std::vector<double> admissible_points(const KGrid& grid, int strands) {
    std::vector<double> out;
    for (double k : grid.points())
        if (admissible_k(k, strands)) out.push_back(k);
    return out;
}

// --------------------------------------------------------- unitarity U ------

struct UnitarityReport {
    double k = 0;
    double deviation = 0; // max |(U U^dagger - 1)_{ij}|
    bool unitary = false;
};

inline UnitarityReport unitarity_U(double k, double tol = 1e-10) {
    Cplx q0 = std::polar(1.0, 2.0 * M_PI / k);
    Cplx two = q0 + 1.0 / q0;
    if (std::abs(two) < 1e-12) throw domain_error("unitarity_U: [2]_q pole (k = 4)");
    Cplx three = 1.0 + q0 * q0 + 1.0 / (q0 * q0);
    Cplx C = 1.0 / two;
    Cplx S = std::sqrt(three) / two;
    // U = [[C, S], [-S, C]]; U U^dagger deviation from the identity
    Cplx d00 = C * std::conj(C) + S * std::conj(S) - 1.0;
    Cplx d01 = -C * std::conj(S) + S * std::conj(C);
    Cplx d10 = -std::conj(C) * S + std::conj(S) * C;
    Cplx d11 = d00;
    double dev = std::max({std::abs(d00), std::abs(d01), std::abs(d10), std::abs(d11)});
    return {k, dev, dev <= tol};
}

// ------------------------------------------------------- cubic solving ------

namespace detail {

inline Cplx horner3(Cplx a2, Cplx a1, Cplx a0, Cplx x) {
    return ((x + a2) * x + a1) * x + a0;
}

// roots of l^3 + a2 l^2 + a1 l + a0 via Cardano with the large-|u| branch,
// then Newton polish
inline std::array<Cplx, 3> cubic_roots(Cplx a2, Cplx a1, Cplx a0) {
    const Cplx third = Cplx(1.0 / 3.0, 0.0);
    Cplx p = a1 - a2 * a2 * third;
    Cplx r = a0 + (2.0 * a2 * a2 * a2 - 9.0 * a2 * a1) / 27.0;
    std::array<Cplx, 3> roots;
    double scale = std::max({std::abs(p), std::abs(r), 1e-300});
    if (scale < 1e-250) {
        roots = {-a2 * third, -a2 * third, -a2 * third};
    } else {
        Cplx disc = std::sqrt(r * r * 0.25 + p * p * p / 27.0);
        Cplx u3a = -r * 0.5 + disc, u3b = -r * 0.5 - disc;
        Cplx u3 = (std::abs(u3a) > std::abs(u3b)) ? u3a : u3b;
        Cplx u = std::pow(u3, third);
        const Cplx w(-0.5, std::sqrt(3.0) / 2.0);
        if (std::abs(u) < 1e-150) {
            roots = {-a2 * third, -a2 * third, -a2 * third};
        } else {
            for (int i = 0; i < 3; ++i) {
                Cplx ui = u * (i == 0 ? Cplx(1.0) : (i == 1 ? w : w * w));
                Cplx t = ui - p / (3.0 * ui);
                roots[size_t(i)] = t - a2 * third;
            }
        }
    }
    for (auto& x : roots)
        for (int it = 0; it < 4; ++it) {
            Cplx f = horner3(a2, a1, a0, x);
            Cplx df = (3.0 * x + 2.0 * a2) * x + a1;
            if (std::abs(df) < 1e-300) break;
            Cplx step = f / df;
            x -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
        }
    // a repeated root only reaches sqrt(eps) through plain Newton; refine the
    // pair as the root of the derivative and recover the simple root from the
    // product of roots
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            double sep = std::abs(roots[size_t(i)] - roots[size_t(j)]);
            double mag = std::max(1.0, std::abs(roots[size_t(i)]));
            if (sep > 1e-5 * mag) continue;
            Cplx z = (roots[size_t(i)] + roots[size_t(j)]) * 0.5;
            for (int it = 0; it < 6; ++it) {
                Cplx df = (3.0 * z + 2.0 * a2) * z + a1;
                Cplx ddf = 6.0 * z + 2.0 * a2;
                if (std::abs(ddf) < 1e-300) break;
                Cplx step = df / ddf;
                z -= step;
                if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
            }
            double mz = std::max(1.0, std::abs(z));
            if (std::abs(horner3(a2, a1, a0, z)) > 1e-12 * mz * mz * mz) continue;
            int k = 3 - i - j;
            Cplx third = (std::abs(z) > 1e-150) ? -a0 / (z * z) : roots[size_t(k)];
            if (std::abs(horner3(a2, a1, a0, third)) <=
                std::abs(horner3(a2, a1, a0, roots[size_t(k)]))) {
                roots[size_t(k)] = third;
            }
            roots[size_t(i)] = z;
            roots[size_t(j)] = z;
        }
    return roots;
}

} // namespace detail

// roots of the sector characteristic polynomial
//   l^3 - aY(q) l^2 + det * aY(1/q) l - det,
// det = (-q)^W for [3,1], q^{-W} for [2,1,1]; the [2,2] quadratic has product
// of roots -1.  Residuals above res_tol throw internal_error (ill-conditioned).
inline std::vector<Cplx> sector_eigenvalues(Cplx aY_at_q, Cplx aY_at_qinv, int W,
                                            const YoungDiagram& sector, Cplx q0,
                                            double res_tol = 1e-10) {
    if (sector == YoungDiagram{2, 2}) {
        Cplx d = std::sqrt(aY_at_q * aY_at_q + 4.0);
        Cplx l1 = (std::abs(aY_at_q + d) >= std::abs(aY_at_q - d)) ? (aY_at_q + d) * 0.5
                                                                   : (aY_at_q - d) * 0.5;
        Cplx l2 = -1.0 / l1; // product is exactly -1
        for (Cplx l : {l1, l2}) {
            double res = std::abs((l - aY_at_q) * l - 1.0);
            if (res > res_tol * std::max(1.0, std::abs(l) * std::abs(l)))
                throw internal_error("sector_eigenvalues: quadratic residual too large");
        }
        return {l1, l2};
    }
    Cplx det;
    if (sector == YoungDiagram{3, 1}) det = std::pow(-q0, double(W));
    else if (sector == YoungDiagram{2, 1, 1}) det = std::pow(q0, double(-W));
    else throw domain_error("sector_eigenvalues: sector must be [3,1], [2,1,1] or [2,2]");
    auto roots = detail::cubic_roots(-aY_at_q, det * aY_at_qinv, -det);
    for (Cplx l : roots) {
        double res = std::abs(detail::horner3(-aY_at_q, det * aY_at_qinv, -det, l));
        double s = std::max(1.0, std::abs(l));
        if (res > res_tol * s * s * s)
            throw internal_error("sector_eigenvalues: cubic residual too large");
    }
    return {roots[0], roots[1], roots[2]};
}

// ------------------------------------------------------------ screening -----

struct ScreenConfig {
    KGrid grid{};
    double tol = 1e-6;      // |lambda| - 1 tolerance
    double res_tol = 1e-10; // root residual tolerance
    bool early_exit = true;
    int threads = 0; // 0 = hardware concurrency
};

struct ScreenReport {
    std::vector<int> box; // (c1, b1, c2, b2) when enumerated from the box
    BraidWord braid{3, {}};
    int writhe = 0;
    int m = 0;
    double max_deviation = 0.0;
    std::vector<double> failed_k;
    std::vector<double> indeterminate_k;
    std::vector<std::pair<double, double>> deviations; // (k, dev) for survivors
    int evaluated = 0;
    bool pass = false;
};

inline ScreenReport screen_braid(const BraidWord& w3, int m, const ScreenConfig& cfg = {}) {
    if (w3.strands != 3) throw domain_error("screen_braid: expected a 3-strand word");
    auto info = closure_info(w3);
    if (info.components != 2)
        throw domain_error("screen_braid: closure must have 2 components, got " +
                           std::to_string(info.components));
    const int W = writhe(w3);
    if (W != 2 * m + 5)
        throw domain_error("screen_braid: writhe must be 2m+5 = " + std::to_string(2 * m + 5));

    ScreenReport rep;
    rep.braid = w3;
    rep.writhe = W;
    rep.m = m;

    LaurentPoly a22 = sector_word_matrix(SectorFamily::B3_21, w3.letters).trace();
    CharCoeffs c = acoef_solve(m, RationalFn{BiLaurent(a22)});
    const RationalFn& a31 = c.a.at({3, 1});

    bool failed = false;
    for (double k : admissible_points(cfg.grid, 4)) {
        Cplx q0 = std::polar(1.0, 2.0 * M_PI / k);
        Cplx v_q, v_qi;
        try {
            v_q = a31.eval(q0);
            v_qi = a31.eval(Cplx(1.0, 0.0) / q0);
        } catch (const domain_error&) {
            rep.indeterminate_k.push_back(k);
            continue;
        }
        std::vector<Cplx> lam;
        try {
            lam = sector_eigenvalues(v_q, v_qi, W, {3, 1}, q0, cfg.res_tol);
        } catch (const internal_error&) {
            rep.indeterminate_k.push_back(k);
            continue;
        }
        ++rep.evaluated;
        double dev = 0;
        for (Cplx l : lam) dev = std::max(dev, std::abs(std::abs(l) - 1.0));
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.deviations.push_back({k, dev});
        if (dev > cfg.tol) {
            rep.failed_k.push_back(k);
            failed = true;
            if (cfg.early_exit) break;
        }
    }
    rep.pass = !failed && rep.evaluated > 0;
    if (!rep.pass) rep.deviations.clear();
    return rep;
}

enum class ScreenDedup { none, conjugacy };

// all (c1,b1;c2,b2) with |entries| <= limit, writhe 2m+5 and a 2-component
// closure, screened in enumeration order; dedup = conjugacy groups survivors
// by B3 conjugacy class (plus reversal) keeping the first representative
inline std::vector<ScreenReport> box_screen(int limit, int m, const ScreenConfig& cfg = {},
                                            ScreenDedup dedup = ScreenDedup::none) {
    if (limit < 1) throw domain_error("box_screen: limit must be positive");
    const int W = 2 * m + 5;
    struct Cand {
        std::array<int, 4> t;
        BraidWord w{3, {}};
    };
    std::vector<Cand> cands;
    auto block = [](int gen, int e) {
        std::vector<int> ls(size_t(std::abs(e)), e >= 0 ? gen : -gen);
        return ls;
    };
    for (int c1 = -limit; c1 <= limit; ++c1)
        for (int b1 = -limit; b1 <= limit; ++b1)
            for (int c2 = -limit; c2 <= limit; ++c2) {
                int b2 = W - c1 - b1 - c2;
                if (std::abs(b2) > limit) continue;
                std::vector<int> ls;
                for (auto& part : {block(1, c1), block(2, b1), block(1, c2), block(2, b2)})
                    ls.insert(ls.end(), part.begin(), part.end());
                BraidWord w(3, std::move(ls));
                if (closure_info(w).components != 2) continue;
                cands.push_back({{c1, b1, c2, b2}, std::move(w)});
            }

    std::vector<ScreenReport> reports(cands.size());
    int nthreads = cfg.threads > 0 ? cfg.threads : int(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, int(cands.size()) > 0 ? int(cands.size()) : 1));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= cands.size()) break;
            reports[i] = screen_braid(cands[i].w, m, cfg);
            reports[i].box.assign(cands[i].t.begin(), cands[i].t.end());
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<ScreenReport> survivors;
    for (auto& r : reports)
        if (r.pass) survivors.push_back(std::move(r));
    if (dedup == ScreenDedup::conjugacy) {
        std::vector<ScreenReport> unique_survivors;
        std::vector<std::string> seen;
        for (auto& r : survivors) {
            std::string key = b3_class_key(r.braid);
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                seen.push_back(key);
                unique_survivors.push_back(std::move(r));
            }
        }
        return unique_survivors;
    }
    return survivors;
}

// -------------------------------------------------------------- output ------

inline nlohmann::json to_json(const ScreenReport& r, bool with_deviations = false) {
    nlohmann::json j{{"box", r.box},
                     {"braid", to_json(r.braid)},
                     {"writhe", r.writhe},
                     {"m", r.m},
                     {"max_deviation", r.max_deviation},
                     {"failed_k", r.failed_k},
                     {"indeterminate_k", r.indeterminate_k},
                     {"evaluated", r.evaluated},
                     {"pass", r.pass}};
    if (with_deviations) {
        nlohmann::json devs = nlohmann::json::array();
        for (auto& [k, d] : r.deviations) devs.push_back({{"k", k}, {"dev", d}});
        j["deviations"] = devs;
    }
    return j;
}

inline std::string screen_csv(const std::vector<ScreenReport>& rs) {
    std::ostringstream os;
    os << "c1,b1,c2,b2,writhe,m,pass,max_deviation,evaluated,first_failed_k\n";
    for (auto& r : rs) {
        for (size_t i = 0; i < 4; ++i) os << (i < r.box.size() ? std::to_string(r.box[i]) : "") << ",";
        os << r.writhe << "," << r.m << "," << (r.pass ? 1 : 0) << "," << r.max_deviation << ","
           << r.evaluated << "," << (r.failed_k.empty() ? "" : std::to_string(r.failed_k.front()))
           << "\n";
    }
    return os.str();
}

} // namespace braidforge
