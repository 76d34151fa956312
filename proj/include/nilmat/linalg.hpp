#ifndef NILMAT_LINALG_HPP
#define NILMAT_LINALG_HPP

#include "nilmat/matrix.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace nilmat {

struct singular_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RrefResult {
    Mat mat;
    std::vector<std::size_t> pivot_cols;
};

// Exact Gauss-Jordan. The reduced row-echelon form is unique, so this is
// also the canonical form used for rank and membership tests.
inline RrefResult rref(const Mat& a) {
    Mat m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
        Rational inv = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat& a) { return rref(a).pivot_cols.size(); }

// Basis of {v : Av = 0} as column vectors, one per free column.
inline std::vector<Mat> nullspace(const Mat& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Mat> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Mat v(a.cols(), 1);
        v(free_col, 0) = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v(r.pivot_cols[i], 0) = -r.mat(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free Bareiss elimination. Exact over the rationals and keeps
// intermediate entries small on integer input.
inline Rational det_bareiss(const Mat& a) {
    if (!a.is_square()) throw shape_error("det_bareiss: matrix must be square");
    std::size_t n = a.rows();
    Mat m = a;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline Mat inverse(const Mat& a) {
    if (!a.is_square()) throw shape_error("inverse: matrix must be square");
    std::size_t n = a.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.pivot_cols.size() != n || r.pivot_cols.back() != n - 1)
        throw singular_error("inverse: matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

inline bool is_nilpotent(const Mat& x) {
    if (!x.is_square()) throw shape_error("is_nilpotent: matrix must be square");
    return mat_pow(x, static_cast<unsigned>(x.rows())).is_zero();
}

// Smallest m with X^m = 0; requires X nilpotent.
inline unsigned nilpotency_index(const Mat& x) {
    if (!is_nilpotent(x)) throw std::invalid_argument("nilpotency_index: matrix is not nilpotent");
    Mat p = Mat::identity(x.rows());
    for (unsigned m = 0;; ++m) {
        if (p.is_zero()) return m;
        p = mat_mul(p, x);
    }
}

// Coefficients of det(tE - A) = t^n + c[n-1] t^{n-1} + ... + c[0],
// by the Faddeev-LeVerrier iteration (exact in characteristic zero).
inline std::vector<Rational> char_poly(const Mat& a) {
    if (!a.is_square()) throw shape_error("char_poly: matrix must be square");
    std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Mat m = Mat::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = mat_mul(a, m);
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        c[n - k] = -trace(mat_mul(a, m)) / Rational(k);
    }
    return c;
}

// Represents a linear map M_n -> M_n as an n^2 x n^2 matrix acting on the
// row-major flattening of its argument.
inline Mat matrix_of_linear_map(std::size_t n, const std::function<Mat(const Mat&)>& f) {
    Mat big(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat e(n, n);
            e(i, j) = 1;
            Mat img = f(e);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    big(r * n + s, i * n + j) = img(r, s);
        }
    return big;
}

inline Mat unflatten(const Mat& v, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i * n + j, 0);
    return m;
}

// Decides whether XA - AX = X has a nonzero solution: the operator
// X -> XA - (A+E)X must be singular.
inline bool sylvester_singular(const Mat& a) {
    if (!a.is_square()) throw shape_error("sylvester_singular: matrix must be square");
    std::size_t n = a.rows();
    Mat ape = mat_add(a, Mat::identity(n));
    Mat op = matrix_of_linear_map(n, [&](const Mat& x) {
        return mat_sub(mat_mul(x, a), mat_mul(ape, x));
    });
    return det_bareiss(op) == 0;
}

// Basis of {S : SA = AS}, from the exact nullspace of S -> SA - AS.
inline std::vector<Mat> centralizer_basis(const Mat& a) {
    if (!a.is_square()) throw shape_error("centralizer_basis: matrix must be square");
    std::size_t n = a.rows();
    Mat op = matrix_of_linear_map(n, [&](const Mat& s) {
        return mat_sub(mat_mul(s, a), mat_mul(a, s));
    });
    std::vector<Mat> basis;
    for (const Mat& v : nullspace(op)) basis.push_back(unflatten(v, n));
    return basis;
}

// S X S^{-1}; S must be invertible.
inline Mat conjugate(const Mat& s, const Mat& x) {
    return mat_mul(mat_mul(s, x), inverse(s));
}

// True iff every column of B lies in the column space of A.
inline bool columns_in_span(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw shape_error("columns_in_span: row counts differ");
    Mat joined(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) joined(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) joined(i, a.cols() + j) = b(i, j);
    }
    return rank(joined) == rank(a);
}

inline Mat hstack(const std::vector<Mat>& cols) {
    if (cols.empty()) throw shape_error("hstack: no columns");
    std::size_t n = cols.front().rows();
    std::size_t total = 0;
    for (const auto& c : cols) {
        if (c.rows() != n) throw shape_error("hstack: row counts differ");
        total += c.cols();
    }
    Mat m(n, total);
    std::size_t off = 0;
    for (const auto& c : cols) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) m(i, off + j) = c(i, j);
        off += c.cols();
    }
    return m;
}

}  // namespace nilmat

#endif
