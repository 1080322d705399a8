#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "eliminant/chow.hpp"
#include "eliminant/io.hpp"
#include "eliminant/resultant.hpp"

using namespace eliminant;

static Ideal twisted_cubic() { return kernel(veronese(1, 3)); }
static Ideal conic() { return kernel(veronese(1, 2)); }

static Poly rename_positional(const Poly& p, const RingPtr& T) {
    std::vector<Poly> imgs;
    for (int i = 0; i < p.ring()->nvars(); ++i)
        imgs.push_back(Poly::variable(T, i));
    return apply_map(RingMap{p.ring(), T, imgs}, p);
}

TEST_CASE("kernel(veronese(1,3)) is the twisted cubic ideal") {
    Ideal C = twisted_cubic();
    auto R = C.ring();
    REQUIRE(R->nvars() == 4);
    Ideal expected(R, {parse_poly("x2^2 - x1*x3", R),
                       parse_poly("x1*x2 - x0*x3", R),
                       parse_poly("x1^2 - x0*x2", R)});
    CHECK(ideal_equal(C, expected));
}

TEST_CASE("plucker ring of G(1,3) carries the single plucker quadric") {
    auto G = plucker_ring(1, 3);
    REQUIRE(G->ring->nvars() == 6);
    // plucker variable order: 01, 02, 12, 03, 13, 23
    CHECK(G->ring->var_name(0) == "x[0,1]");
    CHECK(G->ring->var_name(2) == "x[1,2]");
    CHECK(G->ring->var_name(5) == "x[2,3]");
    REQUIRE(G->relations->gens().size() == 1);
    Poly rel = parse_poly("x[1,2]*x[0,3] - x[0,2]*x[1,3] + x[0,1]*x[2,3]",
                          G->ring);
    CHECK(ideal_contains(*G->relations, rel));
}

TEST_CASE("chow form of the twisted cubic matches the known closed form") {
    auto w = chow_form(twisted_cubic());
    CHECK(w.source_dim == 1);
    CHECK(w.source_degree == 3);
    CHECK(w.ambient == 3);
    auto R = w.element.grass->ring;
    Poly w_tc = parse_poly(
        "x[1,2]^3 - x[0,2]*x[1,2]*x[1,3] + x[0,1]*x[1,3]^2 + x[0,2]^2*x[2,3] "
        "- 2*x[0,1]*x[1,2]*x[2,3] - x[0,1]*x[0,3]*x[2,3]",
        R);
    auto expected = make_plucker_element(w.element.grass, w_tc);
    bool same = plucker_equal(w.element, expected);
    auto negated = make_plucker_element(w.element.grass, -w_tc);
    CHECK((same || plucker_equal(w.element, negated)));
}

TEST_CASE("dualize matches the known closed form and is an involution") {
    auto w = chow_form(twisted_cubic());
    auto wd = dualize(w.element);
    auto R = wd.grass->ring;
    Poly w_dual = parse_poly(
        "x[0,3]^3 - x[0,2]*x[0,3]*x[1,3] + x[0,1]*x[1,3]^2 + x[0,2]^2*x[2,3] "
        "- x[0,1]*x[1,2]*x[2,3] - 2*x[0,1]*x[0,3]*x[2,3]",
        R);
    auto expected = make_plucker_element(wd.grass, w_dual);
    auto negated = make_plucker_element(wd.grass, -w_dual);
    CHECK((plucker_equal(wd, expected) || plucker_equal(wd, negated)));
    CHECK(wd.rep.total_degree() == w.element.rep.total_degree());
    CHECK(plucker_equal(dualize(wd), w.element));
}

TEST_CASE("chow equations recover the variety after saturation") {
    auto w = chow_form(twisted_cubic());
    Ideal ce = chow_equations(w);
    auto R = ce.ring();
    std::vector<Poly> irr;
    for (int i = 0; i < 4; ++i) irr.push_back(Poly::variable(R, i));
    Ideal sat = saturate(ce, Ideal(R, irr));
    Ideal C = twisted_cubic();
    std::vector<Poly> mapped;
    for (const auto& g : C.gens()) mapped.push_back(map_ring(g, R));
    CHECK(ideal_equal(sat, Ideal(R, mapped)));
}

TEST_CASE("hyperplane chow form is the hyperplane itself") {
    // X = V(x0 + 2 x1) in P^2: k = 1, chow form on G(0,2) = P^2
    auto R = RingCtx::make({"x0", "x1", "x2"}, CoeffDomain::rationals(),
                           MonomialOrder::grevlex());
    Ideal H(R, {parse_poly("x0 + 2*x1", R)});
    auto w = chow_form(H);
    CHECK(w.source_degree == 1);
    Poly expected = parse_poly("x[0] + 2*x[1]", w.element.grass->ring);
    CHECK((w.element.rep == expected || w.element.rep == -expected));
}

TEST_CASE("stiefel form is multihomogeneous of row degree d") {
    auto w = chow_form(twisted_cubic());
    Poly st = from_plucker_to_stiefel(dualize(w.element));
    CHECK(st.total_degree() == 6);  // 2 rows x degree 3
    // each monomial uses exactly degree 3 from each row block
    auto T = st.ring();
    for (const auto& [m, c] : st.terms()) {
        int row0 = 0;
        for (int j = 0; j < 4; ++j) row0 += m.e[j];
        CHECK(row0 == 3);
        CHECK(m.deg == 6);
    }
}

TEST_CASE("cayley trick on the twisted cubic") {
    Ideal C = twisted_cubic();
    auto ct = cayley_trick(C);
    CHECK(ct.segre.ring()->nvars() == 8);
    REQUIRE(ct.x_resultant.gens().size() == 1);
    CHECK(ct.x_resultant.gens()[0].total_degree() == 3 * 2);
    // the X-resultant is the stiefel form of the dualized chow form
    Poly st = from_plucker_to_stiefel(dualize(chow_form(C).element));
    Poly xr = rename_positional(ct.x_resultant.gens()[0], st.ring());
    CHECK((st == xr || st == -xr));
}

TEST_CASE("dual variety of the conic is the dual conic") {
    auto R = RingCtx::make({"x0", "x1", "x2"}, CoeffDomain::rationals(),
                           MonomialOrder::grevlex());
    Ideal X(R, {parse_poly("x1^2 - x0*x2", R)});
    Ideal D = dual_variety(X);
    auto Y = D.ring();
    REQUIRE(D.gens().size() == 1);
    CHECK(D.gens()[0] == parse_poly("y1^2 - 4*y0*y2", Y));
}

TEST_CASE("dual variety of a hyperplane is a point") {
    auto R = RingCtx::make({"x0", "x1", "x2"}, CoeffDomain::rationals(),
                           MonomialOrder::grevlex());
    Ideal H(R, {parse_poly("x0", R)});
    Ideal D = dual_variety(H);
    auto Y = D.ring();
    Ideal expected(Y, {Poly::variable(Y, 1), Poly::variable(Y, 2)});
    CHECK(ideal_equal(D, expected));
}

TEST_CASE("prop 1.9: dual of the veronese conic is the binary discriminant") {
    Ideal C = conic();  // v_2(P^1) in P^2, coordinates (a, b, c)
    Ideal D = dual_variety(C);
    REQUIRE(D.gens().size() == 1);
    auto Y = D.ring();
    // discriminant of y0 x^2 + y1 xy + y2 y^2 under coefficient identification
    auto Rz = RingCtx::make({"x", "y"},
                            CoeffDomain::polynomial(CoeffDomain::integers(),
                                                    {"y0", "y1", "y2"}),
                            MonomialOrder::grevlex());
    Poly F = parse_poly("y0*x^2 + y1*x*y + y2*y^2", Rz);
    auto disc = discriminant(F);
    // 4 y0 y2 - y1^2; compare up to sign and scalar with the dual generator
    Poly g = D.gens()[0];
    Poly expected = parse_poly("y1^2 - 4*y0*y2", Y);
    CHECK((g == expected || g == -expected));
    const ParamPoly& dp = disc.value.param();
    ParamPoly want = pp_sub(
        pp_mul(pp_const(Rat(4), 3), pp_mul(pp_var(0, 3), pp_var(2, 3))),
        pp_mul(pp_var(1, 3), pp_var(1, 3)));
    CHECK(pp_equal(dp, want));
}

TEST_CASE("prop 1.11: universal binary-quadric resultant is the stiefel form") {
    auto dom = CoeffDomain::polynomial(CoeffDomain::integers(),
                                       {"a0", "a1", "a2", "b0", "b1", "b2"});
    auto R = RingCtx::make({"x", "y"}, dom, MonomialOrder::grevlex());
    Poly F = parse_poly("a0*x^2 + a1*x*y + a2*y^2", R);
    Poly G = parse_poly("b0*x^2 + b1*x*y + b2*y^2", R);
    auto out = resultant(make_hom_system({F, G}));
    Poly st = from_plucker_to_stiefel(dualize(chow_form(conic()).element));
    CHECK(st.total_degree() == 4);  // (n+1) d^n = 2*2
    // identify x[0,j] -> a_j, x[1,j] -> b_j: terms must agree up to scalar
    auto T = st.ring();
    const ParamPoly& u = out.value.param();
    REQUIRE(u.terms.size() == st.nterms());
    // match term by term after sorting on exponents
    auto key = [](const std::vector<int>& e) { return e; };
    std::map<std::vector<int>, Rat> stm, um;
    for (const auto& [m, c] : st.terms()) stm[key(m.e)] = c.rat();
    for (const auto& [e, c] : u.terms) um[key(e)] = c;
    REQUIRE(stm.size() == um.size());
    // scalar = ratio on the first shared key
    auto it = stm.begin();
    REQUIRE(um.count(it->first));
    Rat scale = um[it->first] / it->second;
    for (const auto& [e, c] : stm) {
        REQUIRE(um.count(e));
        CHECK(um[e] == scale * c);
    }
}

TEST_CASE("chow form degree equals the degree of X on the corpus") {
    CHECK(chow_form(conic()).source_degree == 2);
    CHECK(chow_form(twisted_cubic()).source_degree == 3);
}
