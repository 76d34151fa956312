#ifndef NILMAT_COEFFS_HPP
#define NILMAT_COEFFS_HPP

#include "nilmat/matrix.hpp"
#include "nilmat/solver.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilmat {

// a_l(k) = prod_{j=0}^{k-1} (l + j(p-1)); a_l(0) = 1.
inline Int a_coeff(unsigned l, unsigned k, unsigned p) {
    if (l < 1 || p < 1) throw std::domain_error("a_coeff: need l >= 1 and p >= 1");
    Int prod = 1;
    for (unsigned j = 0; j < k; ++j) prod *= Int(l) + Int(j) * (Int(p) - 1);
    return prod;
}

// c(l, k, p) by the recurrence
//   c(l,0) = 1, c(l,l) = 0,
//   c(l+1,k) = c(l,k) + [l + (p-1)(k-1)] c(l,k-1).
inline Int c_coeff_rec(unsigned l, unsigned k, unsigned p) {
    if (l < 1 || k > l) throw std::domain_error("c_coeff_rec: need 1 <= l and 0 <= k <= l");
    std::vector<Int> row{1};  // row for l' = 1: c(1,0)=1, c(1,1)=0 implied
    row.push_back(0);
    for (unsigned lp = 1; lp < l; ++lp) {
        std::vector<Int> next(lp + 2);
        next[0] = 1;
        for (unsigned kk = 1; kk <= lp; ++kk)
            next[kk] = row[kk] + (Int(lp) + (Int(p) - 1) * (Int(kk) - 1)) * row[kk - 1];
        next[lp + 1] = 0;
        row = std::move(next);
    }
    return row[k];
}

// The explicit alternating-sum form of c(l, k, p). Returned as a rational
// so a disagreement with the recurrence (which is integral) is visible
// rather than silently truncated.
inline Rational c_coeff_closed(unsigned l, unsigned k, unsigned p) {
    if (l < 1 || k >= l) throw std::domain_error("c_coeff_closed: need 1 <= l and 0 <= k <= l-1");
    if (p < 2) throw std::domain_error("c_coeff_closed: need p >= 2");
    Rational sum = 0;
    for (unsigned r = 1; r <= l - k; ++r) {
        Int prod = 1;
        for (unsigned j = 1; j <= l - 1; ++j)
            prod *= Int(p) * Int(j) + (Int(1) - Int(p)) * Int(r);
        Rational term(prod, factorial(r - 1) * factorial(l - k - r));
        sum += (r % 2 == 1) ? term : -term;
    }
    // prefactor (p-1)^{k-l+1}; the exponent is <= 0 here
    Rational prefactor = 1;
    for (unsigned e = 0; e < l - 1 - k; ++e) prefactor /= Int(p) - 1;
    return prefactor * sum;
}

// p = 2 closed form: binom(l+k-1, 2k) * (2k-1)!!.
inline Int c_coeff_p2(unsigned l, unsigned k) {
    if (l < 1 || k >= l) throw std::domain_error("c_coeff_p2: need 1 <= l and 0 <= k <= l-1");
    Int prod = 1;
    for (unsigned j = 1; j <= k; ++j) prod *= 2 * j - 1;
    return binomial(Int(l) + k - 1, 2 * k) * prod;
}

// The three displayed special values c(l,1), c(l,2), c(l,l-1).
struct SpecialCValues {
    Rational c_l_1, c_l_2, c_l_lm1;
};

inline SpecialCValues special_c_values(unsigned l, unsigned p) {
    if (l < 2) throw std::domain_error("special_c_values: need l >= 2");
    Rational c1 = Rational(Int(l) * (Int(l) - 1), 2);
    Rational c2 =
        Rational(Int(l) * (Int(l) - 1) * (Int(l) - 2) * (3 * Int(l) + 4 * Int(p) - 5), 24);
    Rational clm1 = 1;
    for (unsigned i = 1; i + 1 <= l - 1; ++i) clm1 *= Int(1) + Int(i) * Int(p);
    return {c1, c2, clm1};
}

// Weighted degenerate Stirling numbers S(n, k, lambda | theta):
//   S(n,n) = 1,  S(n,0) = prod_{j=0}^{n-1} (lambda - j theta),
//   S(n+1,k) = (k + lambda - theta n) S(n,k) + S(n,k-1).
inline Rational stirling_weighted_rec(unsigned n, unsigned k, const Rational& lambda,
                                      const Rational& theta) {
    if (k > n) return 0;
    std::vector<Rational> row{1};  // n = 0
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Rational> next(m + 2);
        for (unsigned kk = 0; kk <= m + 1; ++kk) {
            Rational v = 0;
            if (kk <= m) v += (Rational(kk) + lambda - theta * Rational(m)) * row[kk];
            if (kk >= 1 && kk - 1 <= m) v += row[kk - 1];
            next[kk] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

// Companion explicit-sum evaluation of the same numbers.
inline Rational stirling_weighted_explicit(unsigned n, unsigned k, const Rational& lambda,
                                           const Rational& theta) {
    if (k > n) return 0;
    Rational sum = 0;
    for (unsigned r = 0; r <= k; ++r) {
        Rational prod = 1;
        for (unsigned j = 0; j < n; ++j) prod *= lambda + Rational(r) - Rational(j) * theta;
        Rational term = prod / Rational(factorial(r) * factorial(k - r));
        sum += ((k + r) % 2 == 0) ? term : -term;
    }
    return sum;
}

enum class CoeffSource { recurrence, closed_form };

// Triangular table of c(l, k, p) for 1 <= l <= lmax, 0 <= k <= l.
struct CoeffTable {
    unsigned p;
    unsigned lmax;
    CoeffSource source;
    std::vector<std::vector<Int>> values;  // values[l-1][k]

    static CoeffTable generate(unsigned p, unsigned lmax,
                               CoeffSource source = CoeffSource::recurrence) {
        CoeffTable t{p, lmax, source, {}};
        for (unsigned l = 1; l <= lmax; ++l) {
            std::vector<Int> row;
            for (unsigned k = 0; k <= l; ++k) {
                if (source == CoeffSource::recurrence) {
                    row.push_back(c_coeff_rec(l, k, p));
                } else {
                    Rational v = (k == l) ? Rational(0) : c_coeff_closed(l, k, p);
                    if (den(v) != 1)
                        throw std::logic_error("CoeffTable: closed form gave a non-integer");
                    row.push_back(num(v));
                }
            }
            t.values.push_back(std::move(row));
        }
        return t;
    }
};

struct Counterexample {
    unsigned l, k, p;
    Rational expected, got;
};

// Cross-checks the closed form against the recurrence; returns the first
// (minimal in l, then k, then p) disagreement if any.
inline std::optional<Counterexample> crosscheck_closed_form(unsigned lmax, unsigned pmin,
                                                            unsigned pmax) {
    for (unsigned l = 1; l <= lmax; ++l)
        for (unsigned k = 0; k < l; ++k)
            for (unsigned p = pmin; p <= pmax; ++p) {
                Rational rec(c_coeff_rec(l, k, p));
                Rational closed = c_coeff_closed(l, k, p);
                if (rec != closed) return Counterexample{l, k, p, rec, closed};
            }
    return std::nullopt;
}

struct ExpansionReport {
    bool equal;
    std::size_t diff_row = 0, diff_col = 0;  // first differing entry when unequal
    Mat lhs, rhs;
};

namespace detail {

inline ExpansionReport compare(const Mat& lhs, const Mat& rhs) {
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j)) return {false, i, j, lhs, rhs};
    return {true, 0, 0, lhs, rhs};
}

// A generic solution pair (A = J(n), X) with all first-row parameters 1.
inline std::pair<Mat, Mat> generic_pair(unsigned p, std::size_t n) {
    std::vector<Rational> free_vals(n - 1, Rational(1));
    FreeAssignment assign = FreeAssignment::from_list(n, p, free_vals);
    return {jordan_block(n), solve_full_jordan(assign).x};
}

}  // namespace detail

// X^l A^m = sum_k a_l(k) binom(m,k) A^{m-k} X^{l+k(p-1)}, checked as
// exact matrices on a solver-generated solution.
inline ExpansionReport expand_Xl_Am(unsigned l, unsigned m, unsigned p, std::size_t n) {
    auto [a, x] = detail::generic_pair(p, n);
    Mat lhs = mat_mul(mat_pow(x, l), mat_pow(a, m));
    Mat rhs = Mat::zero(n, n);
    for (unsigned k = 0; k <= m; ++k) {
        Rational coef(a_coeff(l, k, p) * binomial(Int(m), k));
        rhs = mat_add(rhs, mat_scale(coef, mat_mul(mat_pow(a, m - k),
                                                   mat_pow(x, l + k * (p - 1)))));
    }
    return detail::compare(lhs, rhs);
}

// A^m X^l = sum_k (-1)^k a_l(k) binom(m,k) X^{l+k(p-1)} A^{m-k}.
inline ExpansionReport expand_Am_Xl(unsigned l, unsigned m, unsigned p, std::size_t n) {
    auto [a, x] = detail::generic_pair(p, n);
    Mat lhs = mat_mul(mat_pow(a, m), mat_pow(x, l));
    Mat rhs = Mat::zero(n, n);
    for (unsigned k = 0; k <= m; ++k) {
        Int c = a_coeff(l, k, p) * binomial(Int(m), k);
        if (k % 2 == 1) c = -c;
        rhs = mat_add(rhs, mat_scale(Rational(c), mat_mul(mat_pow(x, l + k * (p - 1)),
                                                          mat_pow(a, m - k))));
    }
    return detail::compare(lhs, rhs);
}

// The signed coefficients b_j of A^s X^l = sum_j b_j X^{l+j(p-1)} A^{s-j}.
inline Int b_coeff(unsigned p, unsigned l, unsigned s, unsigned j) {
    Int b = a_coeff(l, j, p) * binomial(Int(s), j);
    return (j % 2 == 1) ? -b : b;
}

// (AX)^l = sum_{k=0}^{l-1} c(l,k) A^{l-k} X^{l+k(p-1)}.
inline ExpansionReport expand_AX_l(unsigned l, unsigned p, std::size_t n) {
    auto [a, x] = detail::generic_pair(p, n);
    Mat lhs = mat_pow(mat_mul(a, x), l);
    Mat rhs = Mat::zero(n, n);
    for (unsigned k = 0; k < l; ++k) {
        Rational coef(c_coeff_rec(l, k, p));
        rhs = mat_add(rhs, mat_scale(coef, mat_mul(mat_pow(a, l - k),
                                                   mat_pow(x, l + k * (p - 1)))));
    }
    return detail::compare(lhs, rhs);
}

// Exact Lagrange interpolation; returns coefficients lowest degree first.
inline std::vector<Rational> interpolate_polynomial(const std::vector<Rational>& xs,
                                                    const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolate_polynomial: need matching nonempty points");
    std::size_t n = xs.size();
    std::vector<Rational> coeffs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d] -= xs[j] * basis[d];
                next[d + 1] += basis[d];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            coeffs[d] += ys[i] * basis[d] / denom;
    }
    return coeffs;
}

inline Rational eval_polynomial(const std::vector<Rational>& coeffs, const Rational& t) {
    Rational v = 0;
    for (std::size_t d = coeffs.size(); d-- > 0;) v = v * t + coeffs[d];
    return v;
}

}  // namespace nilmat

#endif
