#pragma once

// Schur functions at the topological point p_k = (A^k - A^-k)/(q^k - q^-k),
// via the hook-content product, plus the unknot normalization S*_[1] = 1.

#include "rational.hpp"

#include <vector>

namespace braidforge {

using YoungDiagram = std::vector<int>; // weakly decreasing positive row lengths

inline void validate_diagram(const YoungDiagram& y) {
    for (size_t i = 0; i < y.size(); ++i) {
        if (y[i] <= 0) throw domain_error("Young diagram rows must be positive");
        if (i > 0 && y[i] > y[i - 1]) throw domain_error("Young diagram rows must be weakly decreasing");
    }
}

inline YoungDiagram transpose_diagram(const YoungDiagram& y) {
    validate_diagram(y);
    YoungDiagram t;
    if (y.empty()) return t;
    t.resize(size_t(y[0]), 0);
    for (int r : y)
        for (int i = 0; i < r; ++i) t[size_t(i)]++;
    return t;
}

struct Cell {
    int content; // column - row
    int hook;    // arm + leg + 1
};

inline std::vector<Cell> diagram_cells(const YoungDiagram& y) {
    validate_diagram(y);
    YoungDiagram t = transpose_diagram(y);
    std::vector<Cell> cells;
    for (size_t j = 0; j < y.size(); ++j)
        for (int i = 1; i <= y[j]; ++i) {
            int arm = y[j] - i;
            int leg = t[size_t(i - 1)] - int(j) - 1;
            cells.push_back({i - int(j) - 1, arm + leg + 1});
        }
    return cells;
}

// S_Y = prod_cells {A q^content} / {q^hook}
inline RationalFn schur_special(const YoungDiagram& y) {
    BiLaurent num(1), den(1);
    for (const Cell& c : diagram_cells(y)) {
        num *= BiLaurent::qA_power(c.content, 1) - BiLaurent::qA_power(-c.content, -1);
        den *= BiLaurent(quantum_bracket(c.hook));
    }
    return RationalFn(std::move(num), std::move(den));
}

// S*_Y = S_Y * {q}/{A}; S*_[1] = 1
inline RationalFn schur_normalized(const YoungDiagram& y) {
    RationalFn brace_q{BiLaurent(quantum_bracket(1))};
    RationalFn brace_A{BiLaurent::qA_power(0, 1) - BiLaurent::qA_power(0, -1)};
    return schur_special(y) * brace_q / brace_A;
}

} // namespace braidforge
