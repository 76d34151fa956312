#include "nilmat/coeffs.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace nilmat;
using namespace nilmat::testing;

namespace {

// The published triangular table for l = 1..6 as polynomials in p,
// coefficients lowest degree first.
const std::vector<std::vector<std::vector<Int>>> table_polys = {
    {{1}},
    {{1}, {1}},
    {{1}, {3}, {1, 1}},
    {{1}, {6}, {7, 4}, {1, 3, 2}},
    {{1}, {10}, {25, 10}, {15, 25, 10}, {1, 6, 11, 6}},
    {{1}, {15}, {65, 20}, {90, 105, 30}, {31, 101, 106, 36}, {1, 10, 35, 50, 24}},
};

Rational eval_int_poly(const std::vector<Int>& coeffs, unsigned p) {
    Rational v = 0;
    for (std::size_t d = coeffs.size(); d-- > 0;) v = v * Int(p) + coeffs[d];
    return v;
}

}  // namespace

TEST_CASE("a_coeff") {
    CHECK(a_coeff(3, 0, 2) == 1);
    CHECK(a_coeff(3, 1, 7) == 3);
    CHECK(a_coeff(2, 3, 3) == 2 * 4 * 6);
    SECTION("p = 2 reduces to a rising factorial") {
        for (unsigned l = 1; l <= 6; ++l)
            for (unsigned k = 0; k <= 5; ++k)
                CHECK(a_coeff(l, k, 2) == factorial(k) * binomial(Int(l) + k - 1, k));
    }
    CHECK_THROWS_AS(a_coeff(0, 1, 2), std::domain_error);
}

TEST_CASE("c_coeff_rec golden values") {
    for (unsigned p : {2, 3, 5, 11}) {
        CHECK(c_coeff_rec(1, 0, p) == 1);
        CHECK(c_coeff_rec(2, 1, p) == 1);
        CHECK(c_coeff_rec(3, 1, p) == 3);
        CHECK(c_coeff_rec(3, 2, p) == Int(p) + 1);
        CHECK(c_coeff_rec(4, 3, p) == (Int(p) + 1) * (2 * Int(p) + 1));
        CHECK(c_coeff_rec(7, 0, p) == 1);
        CHECK(c_coeff_rec(7, 7, p) == 0);
    }
    CHECK(c_coeff_rec(6, 4, 2) == 945);  // (p+1)(36p^2+70p+31) at p = 2
    CHECK_THROWS_AS(c_coeff_rec(2, 3, 2), std::domain_error);
}

TEST_CASE("published table for l <= 6") {
    SECTION("recurrence table matches every entry at sampled p") {
        for (unsigned p : {2, 3, 5, 7}) {
            CoeffTable t = CoeffTable::generate(p, 6);
            for (unsigned l = 1; l <= 6; ++l) {
                REQUIRE(t.values[l - 1].size() == l + 1);
                CHECK(t.values[l - 1][l] == 0);
                for (unsigned k = 0; k < l; ++k)
                    CHECK(Rational(t.values[l - 1][k]) == eval_int_poly(table_polys[l - 1][k], p));
            }
        }
    }
    SECTION("interpolation recovers the polynomial entries exactly") {
        for (unsigned l = 1; l <= 6; ++l)
            for (unsigned k = 0; k < l; ++k) {
                const auto& expected = table_polys[l - 1][k];
                std::vector<Rational> xs, ys;
                for (unsigned p = 2; p < 2 + expected.size(); ++p) {
                    xs.push_back(Int(p));
                    ys.push_back(Rational(c_coeff_rec(l, k, p)));
                }
                auto coeffs = interpolate_polynomial(xs, ys);
                REQUIRE(coeffs.size() == expected.size());
                for (std::size_t d = 0; d < coeffs.size(); ++d)
                    CHECK(coeffs[d] == Rational(expected[d]));
                // held-out point guards against an accidental low-degree fit
                CHECK(eval_polynomial(coeffs, 13) == Rational(c_coeff_rec(l, k, 13)));
            }
    }
}

TEST_CASE("p = 2 closed form") {
    CHECK(c_coeff_p2(3, 2) == 3);
    CHECK(c_coeff_p2(5, 4) == 105);
    for (unsigned l = 2; l <= 8; ++l) CHECK(c_coeff_p2(l, 1) == Int(l) * (Int(l) - 1) / 2);
    SECTION("agrees with the recurrence for l <= 12") {
        for (unsigned l = 1; l <= 12; ++l)
            for (unsigned k = 0; k < l; ++k) CHECK(c_coeff_p2(l, k) == c_coeff_rec(l, k, 2));
    }
}

TEST_CASE("general closed form vs recurrence") {
    SECTION("full agreement for l <= 10, p in 2..6") {
        auto cx = crosscheck_closed_form(10, 2, 6);
        CHECK(!cx.has_value());
    }
    SECTION("closed form is integral and feeds the table generator") {
        CoeffTable rec = CoeffTable::generate(5, 8, CoeffSource::recurrence);
        CoeffTable closed = CoeffTable::generate(5, 8, CoeffSource::closed_form);
        CHECK(rec.values == closed.values);
        for (unsigned l = 1; l <= 8; ++l)
            for (unsigned k = 0; k < l; ++k)
                for (unsigned p : {2, 3, 5}) CHECK(den(c_coeff_closed(l, k, p)) == 1);
    }
}

TEST_CASE("special value formulas") {
    for (unsigned p : {2, 3, 5, 7}) {
        for (unsigned l = 2; l <= 8; ++l) {
            SpecialCValues sv = special_c_values(l, p);
            CHECK(sv.c_l_1 == Rational(c_coeff_rec(l, 1, p)));
            if (l >= 3) CHECK(sv.c_l_2 == Rational(c_coeff_rec(l, 2, p)));
            CHECK(sv.c_l_lm1 == Rational(c_coeff_rec(l, l - 1, p)));
        }
        CHECK(special_c_values(2, p).c_l_lm1 == 1);  // empty product
        CHECK(special_c_values(4, p).c_l_2 == Rational(4 * Int(p) + 7));
    }
    CHECK(special_c_values(6, 3).c_l_1 == 15);
    CHECK_THROWS_AS(special_c_values(1, 2), std::domain_error);
}

TEST_CASE("weighted degenerate Stirling numbers") {
    SECTION("theta = lambda = 0 gives the classical second kind") {
        // S(4,2) = 7, S(5,2) = 15, S(5,3) = 25
        CHECK(stirling_weighted_rec(4, 2, 0, 0) == 7);
        CHECK(stirling_weighted_rec(5, 2, 0, 0) == 15);
        CHECK(stirling_weighted_rec(5, 3, 0, 0) == 25);
    }
    SECTION("boundary rows") {
        Rational lambda(3, 2), theta(-1, 3);
        for (unsigned n = 1; n <= 6; ++n) {
            CHECK(stirling_weighted_rec(n, n, lambda, theta) == 1);
            Rational prod = 1;
            for (unsigned j = 0; j < n; ++j) prod *= lambda - Rational(j) * theta;
            CHECK(stirling_weighted_rec(n, 0, lambda, theta) == prod);
        }
    }
    SECTION("recurrence equals the explicit sum, random rational parameters") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 5; ++trial) {
            Rational lambda = random_rational(rng, 5);
            Rational theta = random_rational(rng, 5);
            for (unsigned n = 0; n <= 10; ++n)
                for (unsigned k = 0; k <= n; ++k)
                    CHECK(stirling_weighted_rec(n, k, lambda, theta) ==
                          stirling_weighted_explicit(n, k, lambda, theta));
        }
    }
    SECTION("bridge to c(l, l-k): substitution with lambda = 0, theta = p/(p-1)") {
        for (unsigned p : {2, 3, 5}) {
            Rational theta = Rational(Int(p)) / (Int(p) - 1);
            for (unsigned l = 1; l <= 10; ++l)
                for (unsigned k = 0; k <= l; ++k) {
                    Rational scale = 1;
                    for (unsigned e = 0; e < l - k; ++e) scale *= Int(1) - Int(p);
                    CHECK(Rational(c_coeff_rec(l, l - k, p)) ==
                          stirling_weighted_rec(l, k, 0, theta) * scale);
                }
        }
    }
}

TEST_CASE("matrix expansion identities") {
    SECTION("X^l A^m expansion") {
        CHECK(expand_Xl_Am(1, 1, 2, 6).equal);
        CHECK(expand_Xl_Am(2, 3, 2, 8).equal);
        CHECK(expand_Xl_Am(3, 2, 3, 9).equal);
    }
    SECTION("A^m X^l expansion with alternating signs") {
        CHECK(expand_Am_Xl(1, 2, 2, 7).equal);
        CHECK(expand_Am_Xl(2, 2, 3, 8).equal);
    }
    SECTION("b_coeff exposes the signed expansion coefficients") {
        for (unsigned j = 0; j <= 4; ++j) {
            Int expected = a_coeff(3, j, 2) * binomial(Int(4), j);
            if (j % 2 == 1) expected = -expected;
            CHECK(b_coeff(2, 3, 4, j) == expected);
        }
        CHECK(b_coeff(3, 2, 5, 0) == 1);
        CHECK(b_coeff(3, 2, 5, 1) == -10);  // -a_2(1) binom(5,1)
    }
    SECTION("(AX)^l expansion") {
        // l = 2: (AX)^2 = A^2 X^2 + A X^3 at p = 2
        CHECK(c_coeff_rec(2, 0, 2) == 1);
        CHECK(c_coeff_rec(2, 1, 2) == 1);
        CHECK(expand_AX_l(2, 2, 5).equal);
        // l = 4, p = 3: coefficients (1, 6, 19, 28)
        CHECK(c_coeff_rec(4, 0, 3) == 1);
        CHECK(c_coeff_rec(4, 1, 3) == 6);
        CHECK(c_coeff_rec(4, 2, 3) == 19);
        CHECK(c_coeff_rec(4, 3, 3) == 28);
        CHECK(expand_AX_l(4, 3, 9).equal);
    }
}

TEST_CASE("polynomial interpolation utility") {
    std::vector<Rational> xs = {0, 1, 2, 3};
    std::vector<Rational> ys;
    for (const Rational& t : xs) ys.push_back(t * t * t - Rational(1, 2) * t + 7);
    auto coeffs = interpolate_polynomial(xs, ys);
    REQUIRE(coeffs.size() == 4);
    CHECK(coeffs[0] == 7);
    CHECK(coeffs[1] == Rational(-1, 2));
    CHECK(coeffs[2] == 0);
    CHECK(coeffs[3] == 1);
    CHECK(eval_polynomial(coeffs, 10) == Rational(1000) - 5 + 7);
    CHECK_THROWS_AS(interpolate_polynomial({}, {}), std::invalid_argument);
}
