#ifndef NILMAT_RICCATI_HPP
#define NILMAT_RICCATI_HPP

#include "nilmat/linalg.hpp"
#include "nilmat/matrix.hpp"
#include "nilmat/solver.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace nilmat {

struct graph_condition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_selection_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The 2n x 2n companion of the p = 2 equation: [[A, -E], [0, A]].
inline Mat build_T(const Mat& a) {
    if (!a.is_square()) throw shape_error("build_T: matrix must be square");
    std::size_t n = a.rows();
    Mat t(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t(i, j) = a(i, j);
            t(n + i, n + j) = a(i, j);
        }
    for (std::size_t i = 0; i < n; ++i) t(i, n + i) = -1;
    return t;
}

// The graph of X is the column space of [E; X]. It is T-invariant exactly
// when X solves XA - AX = X^2.
inline bool graph_is_invariant(const Mat& a, const Mat& x) {
    if (!a.is_square() || !x.is_square() || a.rows() != x.rows())
        throw shape_error("graph_is_invariant: matrices must be square of equal size");
    std::size_t n = a.rows();
    Mat graph(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            graph(i, j) = (i == j) ? Rational(1) : Rational(0);
            graph(n + i, j) = x(i, j);
        }
    return columns_in_span(graph, mat_mul(build_T(a), graph));
}

// Ordered chains (x_1, ..., x_r) with T x_1 = 0 and T x_k = x_{k-1},
// for eigenvalue 0. Vectors are column matrices.
struct ChainSet {
    Rational eigenvalue;
    std::vector<std::vector<Mat>> chains;

    std::size_t vector_count() const {
        std::size_t c = 0;
        for (const auto& ch : chains) c += ch.size();
        return c;
    }
};

namespace detail {

// Kernel filtration with pluggable candidate tops. Candidates for level k
// are drawn from mix_candidates(kernel basis of T^k); a candidate becomes
// a chain top when it enlarges the span of ker T^{k-1} plus the vectors
// already reachable at level k.
template <typename MixFn>
ChainSet chains_by_filtration(const Mat& t, MixFn&& mix_candidates) {
    const std::size_t m = t.rows();
    if (!mat_pow(t, static_cast<unsigned>(m)).is_zero())
        throw std::domain_error("jordan_chains_nilpotent: matrix is not nilpotent");

    std::vector<std::vector<Mat>> kernels{{}};
    Mat power = Mat::identity(m);
    std::size_t q = 0;
    while (kernels.back().size() < m) {
        power = mat_mul(power, t);
        kernels.push_back(nullspace(power));
        ++q;
    }

    struct Top {
        Mat vec;
        std::size_t level;
    };
    std::vector<Top> tops;
    for (std::size_t k = q; k >= 1; --k) {
        std::vector<Mat> span_cols = kernels[k - 1];
        for (const auto& top : tops) {
            Mat v = top.vec;
            for (std::size_t i = 0; i < top.level - k; ++i) v = mat_mul(t, v);
            span_cols.push_back(v);
        }
        std::size_t current = span_cols.empty() ? 0 : rank(hstack(span_cols));
        for (const Mat& cand : mix_candidates(kernels[k])) {
            std::vector<Mat> trial = span_cols;
            trial.push_back(cand);
            if (rank(hstack(trial)) > current) {
                tops.push_back({cand, k});
                span_cols.push_back(cand);
                ++current;
            }
        }
    }

    std::stable_sort(tops.begin(), tops.end(),
                     [](const Top& a, const Top& b) { return a.level > b.level; });
    ChainSet cs{0, {}};
    for (const auto& top : tops) {
        std::vector<Mat> chain(top.level, top.vec);
        for (std::size_t i = top.level; i-- > 1;) chain[i - 1] = mat_mul(t, chain[i]);
        cs.chains.push_back(std::move(chain));
    }
    return cs;
}

}  // namespace detail

// Full Jordan-chain basis for a nilpotent T via kernel filtration: pick
// chain tops in ker T^k \ ker T^{k-1} from the longest level down, then
// pull each chain down by applying T. Tie-breaking is deterministic
// (nullspace basis order), so the output is stable.
inline ChainSet jordan_chains_nilpotent(const Mat& t) {
    if (!t.is_square()) throw shape_error("jordan_chains_nilpotent: matrix must be square");
    return detail::chains_by_filtration(t, [](const std::vector<Mat>& kernel) {
        return kernel;
    });
}


// Exact verification of the chain equalities and x_1 != 0.
inline bool validate_chains(const Mat& t, const ChainSet& cs) {
    Mat shifted = mat_sub(t, mat_scale(cs.eigenvalue, Mat::identity(t.rows())));
    for (const auto& chain : cs.chains) {
        if (chain.empty()) return false;
        if (chain.front().is_zero()) return false;
        if (!mat_mul(shifted, chain.front()).is_zero()) return false;
        for (std::size_t k = 1; k < chain.size(); ++k)
            if (mat_mul(shifted, chain[k]) != chain[k - 1]) return false;
    }
    return true;
}

// From n selected chain vectors v_i = [y_i; z_i] builds X = Z Y^{-1}.
// The selection must span a T-invariant subspace and the y_i must form a
// basis of K^n.
inline Mat solution_from_chains(const Mat& a, const std::vector<Mat>& vectors) {
    if (!a.is_square()) throw shape_error("solution_from_chains: A must be square");
    const std::size_t n = a.rows();
    if (vectors.size() != n)
        throw invalid_selection_error("solution_from_chains: need exactly n vectors");
    for (const auto& v : vectors)
        if (v.rows() != 2 * n || v.cols() != 1)
            throw invalid_selection_error("solution_from_chains: vectors must lie in K^{2n}");
    Mat v = hstack(vectors);
    Mat t = build_T(a);
    if (!columns_in_span(v, mat_mul(t, v)))
        throw invalid_selection_error(
            "solution_from_chains: selected span is not T-invariant");
    Mat y(n, n), z(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            y(i, j) = v(i, j);
            z(i, j) = v(n + i, j);
        }
    if (rank(y) != n)
        throw graph_condition_error(
            "solution_from_chains: (y_1,...,y_n) does not form a basis");
    Mat x = mat_mul(z, inverse(y));
    if (!is_solution(a, x, 2))
        throw std::logic_error("solution_from_chains: produced X has nonzero residual");
    return x;
}

// All solutions reachable by taking prefix-closed selections of the
// computed chains (a chain prefix spans a T-invariant subspace).
inline void collect_prefix_solutions(const Mat& a, const ChainSet& cs, std::vector<Mat>& out);

inline std::vector<Mat> solutions_from_chain_prefixes(const Mat& a) {
    ChainSet cs = jordan_chains_nilpotent(build_T(a));
    std::vector<Mat> out;
    collect_prefix_solutions(a, cs, out);
    return out;
}

// Random search over chain selections. Prefixes of a fixed chain basis do
// not reach every solution (a selection may need a short chain whose top
// lies outside im T), so instead sample the selections directly: pick a
// partition of n into chain lengths, draw each top as a small random
// combination of a basis of ker T^k, and keep the X of every selection
// that satisfies the graph condition. The deterministic prefix enumeration
// is included as a baseline.
inline std::vector<Mat> solutions_from_sampled_chains(const Mat& a, unsigned rounds,
                                                      unsigned seed = 1) {
    const std::size_t n = a.rows();
    Mat t = build_T(a);
    std::vector<Mat> out;
    collect_prefix_solutions(a, jordan_chains_nilpotent(t), out);

    std::vector<std::vector<Mat>> kernels{{}};
    Mat power = Mat::identity(2 * n);
    while (kernels.back().size() < 2 * n && kernels.size() <= n) {
        power = mat_mul(power, t);
        kernels.push_back(nullspace(power));
    }
    const std::size_t q = kernels.size() - 1;  // longest usable chain length

    std::vector<std::vector<std::size_t>> partitions;
    std::vector<std::size_t> part;
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t left, std::size_t cap) {
        if (left == 0) {
            partitions.push_back(part);
            return;
        }
        for (std::size_t k = std::min(left, cap); k >= 1; --k) {
            part.push_back(k);
            gen(left - k, k);
            part.pop_back();
        }
    };
    gen(n, q);

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (unsigned r = 0; r < rounds; ++r) {
        for (const auto& lengths : partitions) {
            std::vector<Mat> sel;
            for (std::size_t k : lengths) {
                Mat top = Mat::zero(2 * n, 1);
                for (const Mat& b : kernels[k])
                    top = mat_add(top, mat_scale(Rational(coeff(rng)), b));
                std::vector<Mat> chain(k, top);
                for (std::size_t i = k; i-- > 1;) chain[i - 1] = mat_mul(t, chain[i]);
                for (auto& v : chain) sel.push_back(std::move(v));
            }
            try {
                Mat x = solution_from_chains(a, sel);
                if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
            } catch (const graph_condition_error&) {
            } catch (const invalid_selection_error&) {
            }
        }
    }
    return out;
}

inline void collect_prefix_solutions(const Mat& a, const ChainSet& cs, std::vector<Mat>& out) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> prefix(cs.chains.size(), 0);
    auto emit = [&]() {
        std::vector<Mat> sel;
        for (std::size_t c = 0; c < cs.chains.size(); ++c)
            for (std::size_t i = 0; i < prefix[c]; ++i) sel.push_back(cs.chains[c][i]);
        try {
            Mat x = solution_from_chains(a, sel);
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        } catch (const graph_condition_error&) {
        }
    };
    // enumerate prefix length tuples with total n
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t c, std::size_t left) {
        if (c == cs.chains.size()) {
            if (left == 0) emit();
            return;
        }
        std::size_t cap = std::min(left, cs.chains[c].size());
        for (std::size_t take = 0; take <= cap; ++take) {
            prefix[c] = take;
            rec(c + 1, left - take);
        }
        prefix[c] = 0;
    };
    rec(0, n);
}

}  // namespace nilmat

#endif
