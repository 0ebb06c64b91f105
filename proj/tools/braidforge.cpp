#include "braidforge/selfcheck.hpp"

#include <iostream>

int main() {
    using namespace braidforge;
    SearchConfig sc;
    sc.threads = 1;
    SearchReport k0 = run_search(0, 1, sc);
    std::cout << "k0 canon=" << k0.canonical_examined << " knots=" << k0.knot_candidates
              << " floatrej=" << k0.float_rejects << " matches=" << k0.matches.size() << "\n";

    auto t0 = std::chrono::steady_clock::now();
    auto corpus = detail::three_route_corpus();
    std::cout << "corpus size=" << corpus.size() << " built in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << "s\n";
    t0 = std::chrono::steady_clock::now();
    size_t i = 0;
    for (auto& w : corpus) {
        BiLaurent h = homfly_char(w);
        if (h.subst_A_qN(2) != jones_direct(w)) { std::cout << "JONES MISMATCH\n"; return 1; }
        if (normalize_alexander_units(h.subst_A_one()) != alexander(w)) {
            std::cout << "ALEX MISMATCH\n";
            return 1;
        }
        if (++i % 1000 == 0)
            std::cout << i << " done, "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                      << "s\n";
    }
    std::cout << "three-route ok over " << corpus.size() << " in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << "s\n";

    // exact match_word timing at k=1 length
    SearchTarget t1 = SearchTarget::make(0, 1);
    uint64_t sampled = 0;
    t0 = std::chrono::steady_clock::now();
    enumerate_positive(t1.length, 0, 1, [&](const std::vector<uint8_t>& d, uint64_t) {
        std::vector<int> ls;
        for (uint8_t x : d) ls.push_back(int(x) + 1);
        BraidWord w(4, std::move(ls));
        if (!closure_info(w).is_knot()) return true;
        ++sampled;
        volatile bool e = match_word(w, t1);
        (void)e;
        return sampled < 2000;
    });
    std::cout << "exact match_word x" << sampled << ": "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << "s\n";
    return 0;
}
