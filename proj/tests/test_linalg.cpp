#include "nilmat/linalg.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace nilmat;
using namespace nilmat::testing;

TEST_CASE("rref and nullspace") {
    SECTION("ker J(3) is spanned by e1") {
        auto basis = nullspace(jordan_block(3));
        REQUIRE(basis.size() == 1);
        Mat e1(3, 1);
        e1(0, 0) = 1;
        CHECK(basis[0] == e1);
    }
    SECTION("identity has trivial kernel") {
        CHECK(nullspace(Mat::identity(4)).empty());
    }
    SECTION("rref is idempotent and kernel vectors are exact") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            Mat a = random_matrix(rng, 4, 6, 3);
            RrefResult r = rref(a);
            CHECK(rref(r.mat).mat == r.mat);
            for (const Mat& v : nullspace(a)) CHECK(mat_mul(a, v).is_zero());
        }
    }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a = random_matrix(rng, 4, 4, 3);
        CHECK(det_bareiss(a) == det_cofactor(a));
    }
    CHECK(det_bareiss(Mat::identity(5)) == 1);
    CHECK(det_bareiss(jordan_block(3)) == 0);
}

TEST_CASE("inverse") {
    Mat a{{2, 1}, {1, 1}};
    CHECK(mat_mul(a, inverse(a)) == Mat::identity(2));
    CHECK_THROWS_AS(inverse(jordan_block(2)), singular_error);
}

TEST_CASE("nilpotency agrees across three routes") {
    // power check, characteristic polynomial t^n, and vanishing power traces
    auto three_routes_agree = [](const Mat& x) {
        std::size_t n = x.rows();
        bool by_power = is_nilpotent(x);
        auto cp = char_poly(x);
        bool by_charpoly = true;
        for (std::size_t i = 0; i < n; ++i)
            if (cp[i] != 0) by_charpoly = false;
        bool by_traces = true;
        for (unsigned k = 1; k <= n; ++k)
            if (trace(mat_pow(x, k)) != 0) by_traces = false;
        CHECK(by_power == by_charpoly);
        CHECK(by_power == by_traces);
        return by_power;
    };
    CHECK(three_routes_agree(jordan_block(4)));
    CHECK(!three_routes_agree(Mat::identity(3)));
    CHECK(three_routes_agree(mixed3_x()));
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) three_routes_agree(random_matrix(rng, 3, 3, 2));
}

TEST_CASE("nilpotency index") {
    CHECK(nilpotency_index(jordan_block(4)) == 4);
    CHECK(nilpotency_index(Mat::zero(3, 3)) == 1);
    CHECK(nilpotency_index(mixed3_x()) == 3);
}

TEST_CASE("sylvester singularity test") {
    SECTION("spot checks") {
        CHECK(sylvester_singular(jordan_matrix({{{1, 0}, {1, 1}}})));
        CHECK(!sylvester_singular(Mat::identity(2)));
        CHECK(sylvester_singular(jordan_matrix({{{1, 0}, {1, 1}, {1, 2}}})));
    }
    SECTION("agrees with the resultant oracle on all diagonal A, n <= 3, entries -2..2") {
        // res(char(A), char(A-E)) = 0 iff A and A-E share an eigenvalue
        auto oracle = [](const Mat& a) {
            Mat shifted = mat_sub(a, Mat::identity(a.rows()));
            return resultant(char_poly(a), char_poly(shifted)) == 0;
        };
        for (int d1 = -2; d1 <= 2; ++d1) {
            Mat a1(1, 1);
            a1(0, 0) = d1;
            CHECK(sylvester_singular(a1) == oracle(a1));
            for (int d2 = -2; d2 <= 2; ++d2) {
                Mat a2(2, 2);
                a2(0, 0) = d1;
                a2(1, 1) = d2;
                CHECK(sylvester_singular(a2) == oracle(a2));
                for (int d3 = -2; d3 <= 2; ++d3) {
                    Mat a3(3, 3);
                    a3(0, 0) = d1;
                    a3(1, 1) = d2;
                    a3(2, 2) = d3;
                    CHECK(sylvester_singular(a3) == oracle(a3));
                }
            }
        }
    }
    SECTION("agrees with the oracle on random full matrices") {
        auto oracle = [](const Mat& a) {
            Mat shifted = mat_sub(a, Mat::identity(a.rows()));
            return resultant(char_poly(a), char_poly(shifted)) == 0;
        };
        std::mt19937 rng(17);
        for (int trial = 0; trial < 15; ++trial) {
            Mat a = random_matrix(rng, 3, 3, 2);
            CHECK(sylvester_singular(a) == oracle(a));
        }
    }
}

TEST_CASE("centralizer basis") {
    SECTION("C(J(n)) is the polynomials in J(n)") {
        for (std::size_t n : {2, 3, 5}) {
            Mat a = jordan_block(n);
            auto basis = centralizer_basis(a);
            REQUIRE(basis.size() == n);
            for (const Mat& s : basis) CHECK(mat_mul(s, a) == mat_mul(a, s));
            // powers of A lie in the computed span
            std::vector<Mat> flat;
            for (const Mat& s : basis) {
                Mat col(n * n, 1);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) col(i * n + j, 0) = s(i, j);
                flat.push_back(col);
            }
            Mat span = hstack(flat);
            for (unsigned k = 0; k < n; ++k) {
                Mat pk = mat_pow(a, k);
                Mat col(n * n, 1);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) col(i * n + j, 0) = pk(i, j);
                CHECK(columns_in_span(span, col));
            }
        }
    }
    SECTION("C(diag(J(2),J(2))) is 8-dimensional") {
        auto basis = centralizer_basis(jordan_matrix({{{2, 0}, {2, 0}}}));
        CHECK(basis.size() == 8);
    }
    SECTION("C(E) is everything") {
        CHECK(centralizer_basis(Mat::identity(3)).size() == 9);
    }
}

TEST_CASE("conjugation") {
    Mat x = mixed3_x();
    CHECK(conjugate(Mat::identity(3), x) == x);
    CHECK(conjugate(mat_scale(2, Mat::identity(3)), x) == x);
    CHECK_THROWS_AS(conjugate(jordan_block(3), x), singular_error);
    SECTION("conjugate(S, X)^p = conjugate(S, X^p)") {
        std::mt19937 rng(23);
        int done = 0;
        while (done < 10) {
            Mat s = random_matrix(rng, 3, 3, 3);
            if (det_bareiss(s) == 0) continue;
            ++done;
            CHECK(mat_pow(conjugate(s, x), 3) == conjugate(s, mat_pow(x, 3)));
        }
    }
}
