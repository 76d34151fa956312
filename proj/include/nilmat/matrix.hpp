#ifndef NILMAT_MATRIX_HPP
#define NILMAT_MATRIX_HPP

#include "nilmat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilmat {

struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense matrix of exact rationals, row-major, immutable by convention:
// every operation returns a fresh value.
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
    }

    Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        if (rows_ == 0) throw shape_error("matrix dimensions must be positive");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw shape_error("matrix dimensions must be positive");
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw shape_error("ragged initializer");
            for (const auto& v : r) entries_.push_back(v);
        }
    }

    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    static Mat identity(std::size_t n) {
        Mat e(n, n);
        for (std::size_t i = 0; i < n; ++i) e(i, i) = 1;
        return e;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : entries_)
            if (v != 0) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

inline Mat mat_add(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("mat_add: shape mismatch");
    Mat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("mat_sub: shape mismatch");
    Mat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

inline Mat mat_scale(const Rational& c, const Mat& a) {
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw shape_error("mat_mul: inner dimensions differ");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline Mat operator+(const Mat& a, const Mat& b) { return mat_add(a, b); }
inline Mat operator-(const Mat& a, const Mat& b) { return mat_sub(a, b); }
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }
inline Mat operator*(const Rational& c, const Mat& a) { return mat_scale(c, a); }

inline Mat mat_pow(const Mat& a, unsigned k) {
    if (!a.is_square()) throw shape_error("mat_pow: matrix must be square");
    Mat r = Mat::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = mat_mul(r, a);
    return r;
}

// XA - AX, the commutator in the sign convention used throughout.
inline Mat commutator_xa(const Mat& x, const Mat& a) {
    if (!x.is_square() || x.rows() != a.rows() || !a.is_square())
        throw shape_error("commutator_xa: matrices must be square of equal size");
    return mat_sub(mat_mul(x, a), mat_mul(a, x));
}

inline Rational trace(const Mat& a) {
    if (!a.is_square()) throw shape_error("trace: matrix must be square");
    Rational t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

// Ordered list of (block size, eigenvalue) pairs describing a matrix in
// canonical block form.
struct JordanSpec {
    struct Block {
        std::size_t size;
        Rational eigenvalue;
    };
    std::vector<Block> blocks;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.size;
        return n;
    }
};

// Single block: eigenvalue on the diagonal, ones on the superdiagonal.
inline Mat jordan_block(std::size_t r, const Rational& lambda = 0) {
    Mat j(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        j(i, i) = lambda;
        if (i + 1 < r) j(i, i + 1) = 1;
    }
    return j;
}

inline Mat jordan_matrix(const JordanSpec& spec) {
    std::size_t n = spec.dimension();
    if (n == 0) throw shape_error("jordan_matrix: empty spec");
    Mat a(n, n);
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        for (std::size_t i = 0; i < b.size; ++i) {
            a(off + i, off + i) = b.eigenvalue;
            if (i + 1 < b.size) a(off + i, off + i + 1) = 1;
        }
        off += b.size;
    }
    return a;
}

}  // namespace nilmat

#endif
