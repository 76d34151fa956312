#ifndef NILMAT_TEST_HELPERS_HPP
#define NILMAT_TEST_HELPERS_HPP

#include "nilmat/linalg.hpp"
#include "nilmat/matrix.hpp"

#include <random>
#include <vector>

namespace nilmat::testing {

// Independent oracles. Everything here is deliberately naive; these
// routines cross-check the library implementations and must not share
// code paths with them.

// Determinant by cofactor expansion along the first row.
inline Rational det_cofactor(const Mat& a) {
    std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        Mat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        Rational term = a(0, j) * det_cofactor(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Resultant of two polynomials (coefficients lowest degree first) via the
// Sylvester matrix, with the cofactor determinant.
inline Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    std::size_t df = f.size() - 1, dg = g.size() - 1;
    std::size_t n = df + dg;
    Mat s(n, n);
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j <= df; ++j) s(i, i + j) = f[df - j];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t j = 0; j <= dg; ++j) s(dg + i, i + j) = g[dg - j];
    return det_cofactor(s);
}

// Exhaustive search for a nonzero solution of XA - AX = X^p with entries
// in {-1, 0, 1}. Practical for n <= 3.
inline bool brute_force_has_nontrivial_solution(const Mat& a, unsigned p) {
    std::size_t n = a.rows();
    std::size_t cells = n * n;
    std::vector<int> digits(cells, 0);
    for (;;) {
        // advance base-3 counter
        std::size_t i = 0;
        while (i < cells && digits[i] == 2) digits[i++] = 0;
        if (i == cells) return false;
        ++digits[i];
        Mat x(n, n);
        bool nonzero = false;
        for (std::size_t c = 0; c < cells; ++c) {
            x(c / n, c % n) = digits[c] - 1;
            if (digits[c] != 1) nonzero = true;
        }
        if (!nonzero) continue;
        if (mat_sub(commutator_xa(x, a), mat_pow(x, p)).is_zero()) return true;
    }
}

inline Rational random_rational(std::mt19937& rng, int bound = 5) {
    std::uniform_int_distribution<int> numd(-bound, bound);
    std::uniform_int_distribution<int> dend(1, bound);
    return Rational(numd(rng), dend(rng));
}

inline Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound = 5) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound);
    return m;
}

// The 3 x 3 mixed-block solution pair (A = diag(J(1), J(2)), p = 2).
inline Mat mixed3_a() {
    return Mat{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}};
}

inline Mat mixed3_x() {
    return Mat{{-1, 0, 1}, {-1, 0, 0}, {-1, 0, 1}};
}

}  // namespace nilmat::testing

#endif
