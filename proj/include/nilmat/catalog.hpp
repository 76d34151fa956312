#ifndef NILMAT_CATALOG_HPP
#define NILMAT_CATALOG_HPP

#include "nilmat/solver.hpp"

#include <string>
#include <vector>

namespace nilmat::catalog {

// The classified solution families of XA - AX = X^p for
// A = diag(J(2), J(2)), p = 2 and p = 3, up to conjugation with
// invertible elements of the centralizer of A.

inline Mat a_double_j2() {
    return jordan_matrix({{{2, 0}, {2, 0}}});
}

// p = 2 families

inline Mat p2_x1() {
    return Mat{{0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
}

inline Mat p2_x2() {
    return Mat{{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

inline Mat p2_x3(const Rational& alpha) {
    Mat x(4, 4);
    x(0, 2) = 1;
    x(1, 3) = alpha;
    x(2, 3) = Rational(1) - alpha;
    return x;
}

inline Mat p2_x4(const Rational& alpha, const Rational& beta) {
    Mat x(4, 4);
    x(0, 1) = alpha;
    x(2, 3) = beta;
    return x;
}

inline Mat p2_x5(const Rational& alpha) {
    Mat x(4, 4);
    x(0, 1) = alpha;
    x(0, 3) = 1;
    x(2, 3) = alpha;
    return x;
}

// p = 3 families

inline Mat p3_x1(const Rational& alpha, const Rational& beta) {
    if (alpha == 0 || beta == 0)
        throw singular_parameter_error("p3_x1: parameters must be nonzero");
    Mat x(4, 4);
    x(0, 2) = alpha;
    x(1, 3) = beta;
    x(2, 1) = (alpha - beta) / (alpha * beta);
    return x;
}

inline Mat p3_x2(const Rational& alpha) {
    Mat x(4, 4);
    x(0, 1) = alpha;
    x(0, 2) = 1;
    x(1, 3) = 1;
    return x;
}

inline Mat p3_x3(const Rational& alpha, const Rational& beta) {
    Mat x(4, 4);
    x(0, 1) = alpha;
    x(2, 3) = beta;
    return x;
}

inline Mat p3_x4(const Rational& alpha) {
    Mat x(4, 4);
    x(0, 1) = alpha;
    x(0, 3) = 1;
    x(2, 3) = alpha;
    return x;
}

struct CatalogReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// Instantiates every family of the requested exponent at several rational
// parameter values and checks the residual exactly. For p = 3 the family
// with X^3 != 0 is also checked for that property when alpha != beta.
inline CatalogReport verify_catalog_families(unsigned p) {
    if (p != 2 && p != 3)
        throw std::domain_error("verify_catalog_families: catalog covers p = 2 and p = 3");
    const Mat a = a_double_j2();
    CatalogReport report;
    const std::vector<Rational> samples = {Rational(1), Rational(-2), Rational(1, 3),
                                           Rational(5, 2)};
    auto check = [&](const std::string& name, const Mat& x) {
        if (!is_solution(a, x, p)) report.fail(name + ": nonzero residual");
    };
    if (p == 2) {
        check("X1", p2_x1());
        check("X2", p2_x2());
        for (const auto& al : samples) check("X3(" + to_string(al) + ")", p2_x3(al));
        for (const auto& al : samples)
            for (const auto& be : samples)
                check("X4(" + to_string(al) + "," + to_string(be) + ")", p2_x4(al, be));
        check("X4(0,0)", p2_x4(0, 0));
        for (const auto& al : samples) check("X5(" + to_string(al) + ")", p2_x5(al));
    } else {
        for (const auto& al : samples)
            for (const auto& be : samples) {
                std::string tag = "(" + to_string(al) + "," + to_string(be) + ")";
                Mat x1 = p3_x1(al, be);
                check("X1" + tag, x1);
                if (al != be && mat_pow(x1, 3).is_zero())
                    report.fail("X1" + tag + ": expected X^3 != 0");
            }
        for (const auto& al : samples) check("X2(" + to_string(al) + ")", p3_x2(al));
        for (const auto& al : samples)
            for (const auto& be : samples)
                check("X3(" + to_string(al) + "," + to_string(be) + ")", p3_x3(al, be));
        for (const auto& al : samples) check("X4(" + to_string(al) + ")", p3_x4(al));
    }
    return report;
}

}  // namespace nilmat::catalog

#endif
