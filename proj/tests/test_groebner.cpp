#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "eliminant/groebner.hpp"
#include "eliminant/io.hpp"

using namespace eliminant;

static RingPtr qq(std::vector<std::string> vars) {
    return RingCtx::make(std::move(vars), CoeffDomain::rationals(),
                         MonomialOrder::grevlex());
}

TEST_CASE("reduced GB is order-canonical under generator shuffles") {
    auto R = qq({"x", "y", "z"});
    std::vector<Poly> gens{parse_poly("x^2 + y", R), parse_poly("x*y - z", R),
                           parse_poly("y^3 - x*z", R)};
    auto reference = Ideal(R, gens).gb().gens;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(Ideal(R, gens).gb().gens == reference);
    }
}

TEST_CASE("every S-polynomial of a reported GB reduces to zero") {
    auto R = qq({"x", "y", "z"});
    Ideal I(R, {parse_poly("x^2 - y*z", R), parse_poly("x*y^2 - z^2", R),
                parse_poly("y^4 - x*z", R)});
    const auto& G = I.gb();
    for (size_t i = 0; i < G.gens.size(); ++i)
        for (size_t j = i + 1; j < G.gens.size(); ++j) {
            const Poly& f = G.gens[i];
            const Poly& g = G.gens[j];
            Monomial l = f.lm().lcm(g.lm());
            Poly s = Poly::monomial(R, l.div(f.lm()), f.lc()) * g -
                     Poly::monomial(R, l.div(g.lm()), g.lc()) * f;
            CHECK(normal_form(s, G).is_zero());
        }
}

TEST_CASE("S-polynomials reduce to zero on randomized inputs") {
    // stresses the pair-update logic, including elements that become
    // redundant mid-run
    std::mt19937_64 rng(11);
    auto R = qq({"x", "y", "z"});
    std::uniform_int_distribution<int> coeff(-4, 4), nt(2, 5);
    auto rand_poly = [&] {
        Poly p = Poly::zero(R);
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e{static_cast<int>(rng() % 3),
                               static_cast<int>(rng() % 3),
                               static_cast<int>(rng() % 3)};
            p = p + Poly::monomial(R, Monomial::of(e), Coeff(Rat(coeff(rng))));
        }
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Poly> gens{rand_poly(), rand_poly(), rand_poly()};
        GroebnerBasis G = buchberger(R, gens);
        for (size_t i = 0; i < G.gens.size(); ++i)
            for (size_t j = i + 1; j < G.gens.size(); ++j) {
                const Poly& f = G.gens[i];
                const Poly& g = G.gens[j];
                Monomial l = f.lm().lcm(g.lm());
                Poly s = Poly::monomial(R, l.div(f.lm()), f.lc()) * g -
                         Poly::monomial(R, l.div(g.lm()), g.lc()) * f;
                CHECK(normal_form(s, G).is_zero());
            }
    }
}

TEST_CASE("saturation by an ideal is the intersection over its generators") {
    // (x^2) : (x, y)^inf keeps the doubled line; saturating by the product
    // x*y would wrongly discard it
    auto R = qq({"x", "y"});
    Ideal I(R, {parse_poly("x^2", R)});
    Ideal S = saturate(I, Ideal(R, {parse_poly("x", R), parse_poly("y", R)}));
    CHECK(ideal_equal(S, I));
    // intersect agrees with the product-free membership picture
    Ideal A(R, {parse_poly("x", R)});
    Ideal B(R, {parse_poly("y", R)});
    CHECK(ideal_equal(intersect(A, B), Ideal(R, {parse_poly("x*y", R)})));
}

TEST_CASE("normal form is a ring homomorphism modulo the ideal") {
    auto R = qq({"x", "y"});
    Ideal I(R, {parse_poly("x^2 - y", R)});
    Poly a = parse_poly("x^3 + x", R);
    Poly b = parse_poly("x*y - 1", R);
    const auto& G = I.gb();
    CHECK(normal_form(a * b, G) ==
          normal_form(normal_form(a, G) * normal_form(b, G), G));
}

TEST_CASE("eliminate: parabola parametrization") {
    auto R = qq({"t", "x", "y"});
    Ideal I(R, {parse_poly("x - t", R), parse_poly("y - t^2", R)});
    Ideal E = eliminate(I, {0});
    REQUIRE(E.gens().size() == 1);
    // the result lives in the ring without the dropped variable
    auto S = E.ring();
    REQUIRE(S->nvars() == 2);
    CHECK(S->var_name(0) == "x");
    CHECK(ideal_contains(E, parse_poly("y - x^2", S)));
}

TEST_CASE("eliminate with empty drop set is the identity") {
    auto R = qq({"x", "y"});
    Ideal I(R, {parse_poly("x^2 - y", R)});
    CHECK(ideal_equal(eliminate(I, {}), I));
}

TEST_CASE("saturate removes the component at the saturating ideal") {
    auto R = qq({"x", "y", "z"});
    Ideal I(R, {parse_poly("x*y", R), parse_poly("x*z", R)});
    Ideal S = saturate(I, Ideal(R, {parse_poly("x", R)}));
    CHECK(ideal_equal(
        S, Ideal(R, {parse_poly("y", R), parse_poly("z", R)})));
    // saturating by the unit ideal changes nothing
    CHECK(ideal_equal(saturate(I, Ideal(R, {parse_poly("1", R)})), I));
    CHECK(krull_dim(S) >= 0);
}

TEST_CASE("kernel of a ring map: conic parametrization") {
    auto S = qq({"a", "b", "c"});
    auto T = qq({"s", "t"});
    std::vector<Poly> images{parse_poly("s^2", T), parse_poly("s*t", T),
                             parse_poly("t^2", T)};
    Ideal K = kernel(RingMap{S, T, images});
    REQUIRE(K.gens().size() == 1);
    CHECK(ideal_contains(K, parse_poly("b^2 - a*c", S)));
}

TEST_CASE("krull_dim on standard examples") {
    auto R = qq({"x", "y", "z"});
    CHECK(krull_dim(Ideal(R, {parse_poly("x", R), parse_poly("y", R),
                              parse_poly("z", R)})) == 0);
    CHECK(krull_dim(Ideal(R, {parse_poly("x", R)})) == 2);
    CHECK(krull_dim(Ideal(R, {})) == 3);
    // twisted cubic cone in 4 variables has affine dimension 2
    auto R4 = qq({"x0", "x1", "x2", "x3"});
    Ideal C(R4, {parse_poly("x2^2 - x1*x3", R4),
                 parse_poly("x1*x2 - x0*x3", R4),
                 parse_poly("x1^2 - x0*x2", R4)});
    CHECK(krull_dim(C) == 2);
}

TEST_CASE("ideal_equal compares reduced GBs") {
    auto R = qq({"x", "y"});
    Ideal a(R, {parse_poly("x^2 - y", R), parse_poly("x^3 - x*y", R)});
    Ideal b(R, {parse_poly("x^2 - y", R)});
    CHECK(ideal_equal(a, b));
    CHECK_FALSE(ideal_equal(a, Ideal(R, {parse_poly("x^2 + y", R)})));
}

TEST_CASE("GB over a prime field") {
    auto R = RingCtx::make({"x", "y"}, CoeffDomain::prime_field(13),
                           MonomialOrder::grevlex());
    Ideal I(R, {parse_poly("x^2 + y^2 - 1", R), parse_poly("x - y", R)});
    // 2y^2 = 1 mod 13 -> y^2 = 7
    CHECK(ideal_contains(I, parse_poly("y^2 - 7", R)));
}

TEST_CASE("saturation is idempotent") {
    auto R = qq({"x", "y", "z"});
    for (const char* f : {"x*y", "x^2*z", "x*y - z^2"}) {
        Ideal I(R, {parse_poly(f, R), parse_poly("x*z", R)});
        Ideal J(R, {parse_poly("x", R)});
        Ideal S = saturate(I, J);
        CHECK(ideal_equal(saturate(S, J), S));
    }
}
