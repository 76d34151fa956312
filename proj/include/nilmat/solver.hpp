#ifndef NILMAT_SOLVER_HPP
#define NILMAT_SOLVER_HPP

#include "nilmat/linalg.hpp"
#include "nilmat/matrix.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilmat {

struct singular_parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct no_witness_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_normalizable_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// XA - AX - X^p; zero exactly when X solves the equation.
inline Mat residual(const Mat& a, const Mat& x, unsigned p) {
    if (!a.is_square() || !x.is_square() || a.rows() != x.rows())
        throw shape_error("residual: matrices must be square of equal size");
    if (p < 1) throw std::domain_error("residual: p must be >= 1");
    return mat_sub(commutator_xa(x, a), mat_pow(x, p));
}

inline bool is_solution(const Mat& a, const Mat& x, unsigned p) {
    return residual(a, x, p).is_zero();
}

// Values for the free first-row entries x_{1,2}..x_{1,n} of the band
// recursion for A = J(n). For p = 2 the values -1/k (1 <= k <= n-2) of
// x_{1,2} are rejected up front: they are the poles of the entry formulas.
struct FreeAssignment {
    std::size_t n;
    unsigned p;
    std::map<std::size_t, Rational> values;  // index j in 2..n -> x_{1,j}

    FreeAssignment(std::size_t n_, unsigned p_, std::map<std::size_t, Rational> values_)
        : n(n_), p(p_), values(std::move(values_)) {
        if (!(1 < p && p < n))
            throw std::domain_error("FreeAssignment: need 1 < p < n");
        for (std::size_t j = 2; j <= n; ++j)
            if (!values.count(j))
                throw std::invalid_argument("FreeAssignment: missing value for index " +
                                            std::to_string(j));
        if (values.size() != n - 1)
            throw std::invalid_argument("FreeAssignment: stray indices outside 2..n");
        if (p == 2) {
            const Rational& x12 = values.at(2);
            for (std::size_t k = 1; k + 2 <= n; ++k)
                if (Rational(1) + Rational(k) * x12 == 0)
                    throw singular_parameter_error(
                        "FreeAssignment: x_{1,2} = -1/" + std::to_string(k) +
                        " makes the denominator 1 + " + std::to_string(k) +
                        "*x_{1,2} vanish");
        }
    }

    // Convenience: first-row values as a list (x_{1,2}, ..., x_{1,n}).
    static FreeAssignment from_list(std::size_t n, unsigned p,
                                    const std::vector<Rational>& vals) {
        std::map<std::size_t, Rational> m;
        for (std::size_t j = 0; j < vals.size(); ++j) m[j + 2] = vals[j];
        return FreeAssignment(n, p, std::move(m));
    }
};

struct SolutionReport {
    Mat x;
    Mat residual;
    unsigned nilpotency_index;
    bool strictly_upper;

    bool valid() const { return residual.is_zero(); }
};

inline bool is_strictly_upper(const Mat& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j <= i && j < x.cols(); ++j)
            if (x(i, j) != 0) return false;
    return true;
}

// Solves XJ(n) - J(n)X = X^p for the unique strictly upper triangular X
// with the given first row. Entries are filled band by band (increasing
// superdiagonal offset), rows top-down within a band, so every quantity
// on the right-hand side of the defining relation is available when
// needed. For p = 2 the unknown appears once on the right and is solved
// for by dividing by the pivot 1 + x_{i,i+1}, which is guarded.
inline SolutionReport solve_full_jordan(const FreeAssignment& assign) {
    const std::size_t n = assign.n;
    const unsigned p = assign.p;
    Mat x(n, n);
    for (std::size_t j = 2; j <= n; ++j) x(0, j - 1) = assign.values.at(j);

    for (std::size_t band = 1; band + 1 < n; ++band) {
        Mat xp = (p == 2) ? Mat::zero(1, 1) : mat_pow(x, p);
        // entry x_{i+1, i+1+band} from the relation at position (i, i+1+band)
        for (std::size_t i = 1; i + band + 1 <= n; ++i) {
            std::size_t j = i + band + 1;  // 1-based column of the relation
            if (p == 2) {
                Rational rhs = x(i - 1, j - 2);
                for (std::size_t l = i + 2; l <= j - 1; ++l)
                    rhs -= x(i - 1, l - 1) * x(l - 1, j - 1);
                Rational pivot = Rational(1) + x(i - 1, i);
                if (pivot == 0)
                    throw singular_parameter_error(
                        "solve_full_jordan: pivot 1 + " + std::to_string(i) +
                        "*x_{1,2} vanished at row " + std::to_string(i + 1));
                x(i, j - 1) = rhs / pivot;
            } else {
                x(i, j - 1) = x(i - 1, j - 2) - xp(i - 1, j - 1);
            }
        }
    }

    Mat res = residual(jordan_block(n), x, p);
    if (!res.is_zero())
        throw std::logic_error("solve_full_jordan: internal error, nonzero residual");
    return {x, res, nilpotency_index(x), is_strictly_upper(x)};
}

// The bidiagonal solution of XJ(n) - J(n)X = X^2 with superdiagonal
// alpha, alpha/(1+alpha), ..., alpha/(1+(n-2)alpha).
inline Mat x0_special(std::size_t n, const Rational& alpha) {
    if (n < 3) throw std::domain_error("x0_special: need n >= 3");
    Mat x(n, n);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        Rational d = Rational(1) + Rational(k) * alpha;
        if (d == 0)
            throw singular_parameter_error("x0_special: denominator 1 + " +
                                           std::to_string(k) + "*alpha vanished");
        x(k, k + 1) = alpha / d;
    }
    return x;
}

// True iff X = 0 is the only solution: all eigenvalues simple.
inline bool has_only_trivial_solution(const JordanSpec& spec, unsigned p) {
    if (p < 2) throw std::domain_error("has_only_trivial_solution: need p >= 2");
    std::set<Rational> seen;
    for (const auto& b : spec.blocks) {
        if (b.size >= 2) return false;
        if (!seen.insert(b.eigenvalue).second) return false;
    }
    return true;
}

// A nonzero solution whenever some block has size >= 2: the single-corner
// matrix of that block, which commutes with it and squares to zero.
inline Mat nontrivial_witness(const JordanSpec& spec, unsigned p) {
    (void)p;
    std::size_t n = spec.dimension();
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        if (b.size >= 2) {
            Mat x(n, n);
            x(off, off + b.size - 1) = 1;
            return x;
        }
        off += b.size;
    }
    throw no_witness_error("nontrivial_witness: no block of size >= 2");
}

// Conjugator S in the centralizer of J(n) with S X0 S^{-1} = X, where
// X0 = x0_special(n, x_{1,2}). Solves the linear system S X0 = X S over
// the polynomials in J(n); any solution with nonzero constant term is an
// invertible upper triangular Toeplitz matrix.
inline Mat normalize_to_x0(const Mat& x) {
    if (!x.is_square()) throw shape_error("normalize_to_x0: matrix must be square");
    const std::size_t n = x.rows();
    const Mat a = jordan_block(n);
    if (!is_solution(a, x, 2))
        throw precondition_error("normalize_to_x0: X does not solve XJ(n)-J(n)X=X^2");
    const Rational alpha = x(0, 1);
    if (alpha == 0)
        throw not_normalizable_error(
            "normalize_to_x0: x_{1,2} = 0, not conjugate to the special solution");
    const Mat x0 = x0_special(n, alpha);

    // Column k of the system: flatten(A^k X0 - X A^k), unknowns c_0..c_{n-1}.
    Mat sys(n * n, n);
    Mat ak = Mat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        Mat col = mat_sub(mat_mul(ak, x0), mat_mul(x, ak));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) sys(r * n + s, k) = col(r, s);
        ak = mat_mul(ak, a);
    }
    for (const Mat& c : nullspace(sys)) {
        if (c(0, 0) == 0) continue;
        Mat s = Mat::zero(n, n);
        Mat power = Mat::identity(n);
        for (std::size_t k = 0; k < n; ++k) {
            s = mat_add(s, mat_scale(c(k, 0), power));
            power = mat_mul(power, a);
        }
        if (conjugate(s, x0) != x)
            throw std::logic_error("normalize_to_x0: conjugator check failed");
        return s;
    }
    throw std::logic_error("normalize_to_x0: no invertible conjugator found");
}

// Checks X H_lambda <= H_lambda for every generalized eigenspace of A.
inline bool check_generalized_eigenspace_invariance(const JordanSpec& spec, const Mat& x,
                                                    unsigned p) {
    const Mat a = jordan_matrix(spec);
    if (!is_solution(a, x, p))
        throw precondition_error("check_generalized_eigenspace_invariance: X is not a solution");
    const std::size_t n = a.rows();
    std::set<Rational> eigenvalues;
    for (const auto& b : spec.blocks) eigenvalues.insert(b.eigenvalue);
    for (const Rational& lambda : eigenvalues) {
        Mat shifted = mat_sub(a, mat_scale(lambda, Mat::identity(n)));
        std::vector<Mat> basis = nullspace(mat_pow(shifted, static_cast<unsigned>(n)));
        if (basis.empty()) continue;
        Mat h = hstack(basis);
        if (!columns_in_span(h, mat_mul(x, h))) return false;
    }
    return true;
}

// For a spec split into two groups with disjoint spectra: X must be block
// diagonal with each block solving its own equation.
inline bool check_block_split(const JordanSpec& spec, std::size_t first_group_blocks,
                              const Mat& x, unsigned p) {
    if (first_group_blocks == 0 || first_group_blocks >= spec.blocks.size())
        throw precondition_error("check_block_split: split must leave both groups nonempty");
    std::set<Rational> left, right;
    std::size_t n1 = 0;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        if (i < first_group_blocks) {
            left.insert(spec.blocks[i].eigenvalue);
            n1 += spec.blocks[i].size;
        } else {
            right.insert(spec.blocks[i].eigenvalue);
        }
    }
    for (const auto& lam : left)
        if (right.count(lam))
            throw precondition_error("check_block_split: the two groups share an eigenvalue");
    const Mat a = jordan_matrix(spec);
    if (!is_solution(a, x, p))
        throw precondition_error("check_block_split: X is not a solution");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool in_first_row = i < n1, in_first_col = j < n1;
            if (in_first_row != in_first_col && x(i, j) != 0) return false;
        }
    auto block_of = [&](const Mat& m, std::size_t lo, std::size_t size) {
        Mat b(size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) b(i, j) = m(lo + i, lo + j);
        return b;
    };
    if (!is_solution(block_of(a, 0, n1), block_of(x, 0, n1), p)) return false;
    if (!is_solution(block_of(a, n1, n - n1), block_of(x, n1, n - n1), p)) return false;
    return true;
}

// Random small-integer linear combinations of A^i X^k A^j (k >= 1) must
// all be nilpotent when X solves the equation.
inline bool check_power_combination_nilpotency(const Mat& a, const Mat& x, unsigned p, unsigned trials,
                       unsigned terms = 5, unsigned seed = 1) {
    if (!is_solution(a, x, p))
        throw precondition_error("check_power_combination_nilpotency: X is not a solution");
    const std::size_t n = a.rows();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> power_a(0, static_cast<unsigned>(n));
    std::uniform_int_distribution<unsigned> power_x(1, 3);
    for (unsigned t = 0; t < trials; ++t) {
        Mat sum = Mat::zero(n, n);
        for (unsigned q = 0; q < terms; ++q) {
            Mat term = mat_mul(mat_pow(a, power_a(rng)),
                               mat_mul(mat_pow(x, power_x(rng)), mat_pow(a, power_a(rng))));
            sum = mat_add(sum, mat_scale(Rational(coeff(rng)), term));
        }
        if (!is_nilpotent(sum)) return false;
    }
    return true;
}

}  // namespace nilmat

#endif
