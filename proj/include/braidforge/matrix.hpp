#pragma once

// Dense matrices over exact rings.  QMatrix (RationalFn entries) is the public
// face; hot paths use Matrix<LaurentPoly> where products stay fraction-free.

#include "rational.hpp"

#include <vector>

namespace braidforge {

template <class R>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<R> e;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), e(size_t(r) * size_t(c)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    R& at(int i, int j) { return e[size_t(i) * size_t(cols) + size_t(j)]; }
    const R& at(int i, int j) const { return e[size_t(i) * size_t(cols) + size_t(j)]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols != b.rows) throw domain_error("matrix product: shape mismatch");
        Matrix r(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                const R& aik = a.at(i, k);
                if (aik == R()) continue;
                for (int j = 0; j < b.cols; ++j) {
                    const R& bkj = b.at(k, j);
                    if (bkj == R()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw domain_error("matrix sum: shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw domain_error("matrix diff: shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
        return r;
    }

    Matrix scaled(const R& c) const {
        Matrix r = *this;
        for (auto& x : r.e) x *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    R trace() const {
        if (rows != cols) throw domain_error("trace of a non-square matrix");
        R t{};
        for (int i = 0; i < rows; ++i) t += at(i, i);
        return t;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!(at(i, j) == (i == j ? R(1) : R()))) return false;
        return true;
    }
};

// cofactor expansion; fine for the sector sizes that actually occur
template <class R>
R det_laplace(const Matrix<R>& m) {
    if (m.rows != m.cols) throw domain_error("determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return R(1);
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    R acc{};
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == R()) continue;
        Matrix<R> sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        R term = m.at(0, j) * det_laplace(sub);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// fraction-free Bareiss; every division is exact by construction
inline LaurentPoly det_bareiss(Matrix<LaurentPoly> m) {
    if (m.rows != m.cols) throw domain_error("determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return LaurentPoly(1);
    LaurentPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { p = i; break; }
            if (p < 0) return {};
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = divide_exact(t, prev);
            }
        prev = m.at(k, k);
    }
    LaurentPoly d = m.at(n - 1, n - 1);
    return sign == 1 ? d : -d;
}

using QMatrix = Matrix<RationalFn>;
using LMatrix = Matrix<LaurentPoly>;

inline QMatrix to_qmatrix(const LMatrix& m) {
    QMatrix r(m.rows, m.cols);
    for (size_t i = 0; i < m.e.size(); ++i) r.e[i] = RationalFn(m.e[i]);
    return r;
}

inline RationalFn det(const QMatrix& m) {
    bool laurent = true;
    for (auto& x : m.e)
        if (!x.is_polynomial()) { laurent = false; break; }
    if (laurent) {
        LMatrix lm(m.rows, m.cols);
        for (size_t i = 0; i < m.e.size(); ++i) lm.e[i] = m.e[i].num().subst_A_one();
        bool qonly = true;
        for (auto& x : m.e)
            if (!x.num().is_zero() && (x.num().min_a_half() != 0 || x.num().max_a_half() != 0)) qonly = false;
        if (qonly) return RationalFn(det_bareiss(std::move(lm)));
    }
    return det_laplace(m);
}

} // namespace braidforge
