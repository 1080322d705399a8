#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eliminant/io.hpp"
#include "eliminant/matrix.hpp"

using namespace eliminant;

static ExactMatrix random_int_matrix(int n, std::mt19937_64& rng, int amp) {
    ExactMatrix M(n, n, CoeffDomain::integers());
    std::uniform_int_distribution<int> d(-amp, amp);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = Coeff(Rat(d(rng)));
    return M;
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        ExactMatrix M = random_int_matrix(n, rng, 9);
        Coeff a = det(M, DetStrategy::Bareiss);
        Coeff b = det(M, DetStrategy::Cofactor);
        CHECK(M.domain()->equal(a, b));
    }
}

TEST_CASE("integer determinants stay integers (no fraction leak)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix M = random_int_matrix(8, rng, 5);
        Coeff d8 = det(M, DetStrategy::Bareiss);
        CHECK(d8.rat().get_den() == 1);
    }
}

TEST_CASE("solve returns the exact rational solution") {
    ExactMatrix M(2, 2, CoeffDomain::integers());
    M.at(0, 0) = Coeff(Rat(2));
    M.at(0, 1) = Coeff(Rat(1));
    M.at(1, 0) = Coeff(Rat(1));
    M.at(1, 1) = Coeff(Rat(3));
    std::vector<Coeff> b{Coeff(Rat(1)), Coeff(Rat(0))};
    auto x = solve(M, b);
    CHECK(x[0].rat() == Rat(3, 5));
    CHECK(x[1].rat() == Rat(-1, 5));
}

TEST_CASE("random_unimodular has determinant one") {
    std::mt19937_64 rng(99);
    for (int amp : {1, 2, 5}) {
        ExactMatrix A = random_unimodular(4, rng, amp);
        CHECK(A.domain()->equal(det(A), A.domain()->one()));
    }
}

TEST_CASE("parameter-entry determinant via interpolation matches bareiss") {
    auto dom = CoeffDomain::polynomial(CoeffDomain::integers(), {"t"});
    ExactMatrix M(3, 3, dom);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ParamPoly p = pp_const(Rat(d(rng)), 1);
            if ((i + j) % 2)
                p = pp_add(p, pp_mul(pp_var(0, 1), pp_const(Rat(d(rng)), 1)));
            M.at(i, j) = Coeff(p);
        }
    Coeff a = det(M, DetStrategy::Bareiss);
    Coeff b = det(M, DetStrategy::Interpolate);
    CHECK(dom->equal(a, b));
}

TEST_CASE("poly_det expands small polynomial matrices") {
    auto R = RingCtx::make({"x", "y"}, CoeffDomain::rationals(),
                           MonomialOrder::grevlex());
    std::vector<std::vector<Poly>> M{
        {parse_poly("x", R), parse_poly("y", R)},
        {parse_poly("y", R), parse_poly("x", R)}};
    CHECK(poly_det(M) == parse_poly("x^2 - y^2", R));
    auto minors = poly_maximal_minors({{parse_poly("x", R), parse_poly("y", R)}});
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == parse_poly("x", R));
}

TEST_CASE("maximal_minors in lexicographic column order") {
    ExactMatrix M(2, 3, CoeffDomain::integers());
    int v = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) M.at(i, j) = Coeff(Rat(v++));
    // columns (0,1), (0,2), (1,2)
    auto m = maximal_minors(M);
    REQUIRE(m.size() == 3);
    CHECK(m[0].rat() == Rat(-3));
    CHECK(m[1].rat() == Rat(-6));
    CHECK(m[2].rat() == Rat(-3));
}
