#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eliminant/io.hpp"
#include "eliminant/resultant.hpp"

using namespace eliminant;

static RingPtr zz(std::vector<std::string> vars) {
    return RingCtx::make(std::move(vars), CoeffDomain::integers(),
                         MonomialOrder::grevlex());
}

// random nonzero homogeneous form of degree d, coefficients in [-amp, amp]
static Poly random_form(const RingPtr& R, int d, std::mt19937_64& rng,
                        int amp = 5) {
    std::uniform_int_distribution<int> coeff(-amp, amp);
    const int n = R->nvars();
    std::vector<Poly::Term> terms;
    std::vector<int> e(n, 0);
    auto gen = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            e[pos] = left;
            int c = coeff(rng);
            if (c != 0)
                terms.push_back({Monomial::of(e), Coeff(Rat(c))});
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    for (;;) {
        terms.clear();
        gen(gen, 0, d);
        if (!terms.empty()) break;
    }
    return Poly::from_terms(R, std::move(terms));
}

// Sylvester-matrix resultant of two binary forms of declared degrees (d0, d1)
static Rat sylvester_resultant(const Poly& f, const Poly& g, int d0, int d1) {
    auto coeffs = [&](const Poly& p, int d) {
        std::vector<Rat> c(d + 1, Rat(0));  // c[i] multiplies x^(d-i) y^i
        for (const auto& [m, co] : p.terms()) c[m.e[1]] = co.rat();
        return c;
    };
    auto a = coeffs(f, d0), b = coeffs(g, d1);
    const int n = d0 + d1;
    ExactMatrix S(n, n, CoeffDomain::integers());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S.at(i, j) = Coeff(Rat(0));
    for (int r = 0; r < d1; ++r)
        for (int i = 0; i <= d0; ++i) S.at(r, r + i) = Coeff(a[i]);
    for (int r = 0; r < d0; ++r)
        for (int i = 0; i <= d1; ++i) S.at(d1 + r, r + i) = Coeff(b[i]);
    return det(S).rat();
}

TEST_CASE("the worked three-form example gives 16 with every algorithm") {
    auto R = zz({"x", "y", "z"});
    std::vector<Poly> fs{parse_poly("x^3 + y^2*z", R),
                         parse_poly("x*y + y^2 + x*z + y*z", R),
                         parse_poly("y^4 + z^4", R)};
    auto sys = make_hom_system(fs);
    for (auto alg : {ResultantAlgorithm::Poisson, ResultantAlgorithm::Macaulay,
                     ResultantAlgorithm::Interpolate}) {
        auto out = resultant(sys, alg);
        CHECK(out.value.rat() == Rat(16));
    }
}

TEST_CASE("poisson breakdown of the worked example") {
    auto R = zz({"x", "y", "z"});
    auto sys = make_hom_system({parse_poly("x^3 + y^2*z", R),
                                parse_poly("x*y + y^2 + x*z + y*z", R),
                                parse_poly("y^4 + z^4", R)});
    auto out = poisson_resultant(sys);
    REQUIRE(out.poisson.has_value());
    CHECK(out.poisson->quotient_dim == 6);  // d0*d1 = 3*2
    CHECK(out.poisson->inner_exponent == 4);
    CHECK(out.poisson->inner_resultant.rat() == Rat(1));
    CHECK(out.poisson->mult_det.rat() == Rat(16));
}

TEST_CASE("macaulay matrices of the worked example are 36x36 and 10x10") {
    auto R = zz({"x", "y", "z"});
    auto sys = make_hom_system({parse_poly("x^3 + y^2*z", R),
                                parse_poly("x*y + y^2 + x*z + y*z", R),
                                parse_poly("y^4 + z^4", R)});
    auto M = macaulay_matrices(sys);
    CHECK(M.D.rows() == 36);
    CHECK(M.D.cols() == 36);
    CHECK(M.Dp.rows() == 10);
    CHECK(M.Dp.cols() == 10);
    Rat d = det(M.D).rat(), dp = det(M.Dp).rat();
    CHECK(dp != 0);
    CHECK(d / dp == Rat(16));
}

TEST_CASE("normalization: Res(x0^d0, ..., xn^dn) = 1") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng() % 2);
        std::vector<std::string> vars;
        for (int i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
        auto R = zz(vars);
        std::vector<Poly> fs;
        for (int i = 0; i <= n; ++i)
            fs.push_back(Poly::variable(R, i, 1 + static_cast<int>(rng() % 3)));
        CHECK(resultant(make_hom_system(fs)).value.rat() == Rat(1));
    }
}

TEST_CASE("linear systems reduce to the coefficient determinant") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        auto R = zz({"x", "y", "z"});
        std::vector<Poly> fs;
        ExactMatrix A(3, 3, CoeffDomain::integers());
        std::uniform_int_distribution<int> c(-5, 5);
        for (int i = 0; i < 3; ++i) {
            Poly f = Poly::zero(R);
            for (int j = 0; j < 3; ++j) {
                int v = c(rng);
                A.at(i, j) = Coeff(Rat(v));
                f = f + Poly::from_int(R, v) * Poly::variable(R, j);
            }
            if (f.is_zero()) f = Poly::variable(R, 0), A.at(i, 0) = Coeff(Rat(1));
            fs.push_back(f);
        }
        CHECK(resultant(make_hom_system(fs)).value.rat() == det(A).rat());
    }
}

TEST_CASE("sylvester oracle for n = 1") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto R = zz({"x", "y"});
        int d0 = 1 + static_cast<int>(rng() % 4);
        int d1 = 1 + static_cast<int>(rng() % 4);
        Poly f = random_form(R, d0, rng), g = random_form(R, d1, rng);
        auto out = resultant(make_hom_system({f, g}, {d0, d1}));
        CHECK(out.value.rat() == sylvester_resultant(f, g, d0, d1));
    }
}

TEST_CASE("a common zero forces resultant zero") {
    auto R = zz({"x", "y"});
    // both vanish at (1 : 1)
    auto out = resultant(
        make_hom_system({parse_poly("x^2 - y^2", R), parse_poly("x - y", R)}));
    CHECK(out.value.rat() == Rat(0));
    auto R3 = zz({"x", "y", "z"});
    auto out3 = resultant(make_hom_system({parse_poly("x*y", R3),
                                           parse_poly("x*z", R3),
                                           parse_poly("x^2 - y*z", R3)}));
    CHECK(out3.value.rat() == Rat(0));
}

TEST_CASE("homogeneity in each argument") {
    std::mt19937_64 rng(41);
    auto R = zz({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> d{1 + static_cast<int>(rng() % 2),
                           1 + static_cast<int>(rng() % 2),
                           1 + static_cast<int>(rng() % 3)};
        std::vector<Poly> fs{random_form(R, d[0], rng),
                             random_form(R, d[1], rng),
                             random_form(R, d[2], rng)};
        Rat base = resultant(make_hom_system(fs, d)).value.rat();
        int j = static_cast<int>(rng() % 3);
        auto scaled = fs;
        scaled[j] = Poly::from_int(R, 3) * fs[j];
        long exp = 1;
        for (int i = 0; i < 3; ++i)
            if (i != j) exp *= d[i];
        Rat factor = 1;
        for (long i = 0; i < exp; ++i) factor *= 3;
        CHECK(resultant(make_hom_system(scaled, d)).value.rat() ==
              factor * base);
    }
}

TEST_CASE("symmetry under permutations") {
    std::mt19937_64 rng(51);
    auto R = zz({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> d{1 + static_cast<int>(rng() % 2),
                           1 + static_cast<int>(rng() % 3),
                           1 + static_cast<int>(rng() % 2)};
        std::vector<Poly> fs{random_form(R, d[0], rng),
                             random_form(R, d[1], rng),
                             random_form(R, d[2], rng)};
        Rat base = resultant(make_hom_system(fs, d)).value.rat();
        // swap 0 and 1: an odd permutation
        std::vector<Poly> sw{fs[1], fs[0], fs[2]};
        std::vector<int> dsw{d[1], d[0], d[2]};
        Rat swapped = resultant(make_hom_system(sw, dsw)).value.rat();
        int prod = d[0] * d[1] * d[2];
        CHECK(swapped == (prod % 2 ? -base : base));
    }
}

TEST_CASE("multiplicativity in one argument") {
    std::mt19937_64 rng(61);
    auto R = zz({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        Poly f0 = random_form(R, 2, rng), f1 = random_form(R, 1, rng);
        Poly gp = random_form(R, 1, rng), gpp = random_form(R, 1, rng);
        Rat joint =
            resultant(make_hom_system({f0, f1, gp * gpp}, {2, 1, 2}))
                .value.rat();
        Rat split1 =
            resultant(make_hom_system({f0, f1, gp}, {2, 1, 1})).value.rat();
        Rat split2 =
            resultant(make_hom_system({f0, f1, gpp}, {2, 1, 1})).value.rat();
        CHECK(joint == split1 * split2);
    }
}

TEST_CASE("invariance under unimodular coordinate changes") {
    std::mt19937_64 rng(71);
    auto R = zz({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> d{2, 1, 2};
        std::vector<Poly> fs{random_form(R, d[0], rng),
                             random_form(R, d[1], rng),
                             random_form(R, d[2], rng)};
        Rat base = resultant(make_hom_system(fs, d)).value.rat();
        ExactMatrix A = random_unimodular(3, rng, 2);
        Rat moved =
            resultant(make_hom_system(linear_change(fs, A), d)).value.rat();
        CHECK(moved == base);
    }
}

TEST_CASE("elementary transformations leave the resultant fixed") {
    std::mt19937_64 rng(81);
    auto R = zz({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> d{1, 1, 2};
        std::vector<Poly> fs{random_form(R, 1, rng), random_form(R, 1, rng),
                             random_form(R, 2, rng)};
        Rat base = resultant(make_hom_system(fs, d)).value.rat();
        // F2 += H0 F0 + H1 F1 with deg Hi = 1
        auto moved = fs;
        moved[2] = fs[2] + random_form(R, 1, rng) * fs[0] +
                   random_form(R, 1, rng) * fs[1];
        CHECK(resultant(make_hom_system(moved, d)).value.rat() == base);
    }
}

TEST_CASE("specialization commutes with the resultant") {
    std::mt19937_64 rng(91);
    auto dom = CoeffDomain::polynomial(CoeffDomain::integers(), {"t", "u"});
    auto Rp = RingCtx::make({"x", "y"}, dom, MonomialOrder::grevlex());
    auto Rz = zz({"x", "y"});
    Poly F = parse_poly("t*x^2 + u*x*y + y^2", Rp);
    Poly G = parse_poly("u*x^2 + (t + 1)*y^2", Rp);
    auto param = resultant(make_hom_system({F, G}, {2, 2}));
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rat> pt{Rat(c(rng)), Rat(c(rng))};
        Rat specialized = dom->specialize(param.value, pt).rat();
        Rat direct = resultant(make_hom_system({specialize_params(F, pt, Rz),
                                                specialize_params(G, pt, Rz)},
                                               {2, 2}))
                         .value.rat();
        CHECK(specialized == direct);
    }
}

TEST_CASE("cross-algorithm agreement on random systems") {
    std::mt19937_64 rng(101);
    auto R = zz({"x", "y", "z"});
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> d{2, 2, 1};
        std::vector<Poly> fs{random_form(R, d[0], rng),
                             random_form(R, d[1], rng),
                             random_form(R, d[2], rng)};
        auto sys = make_hom_system(fs, d);
        Rat p = resultant(sys, ResultantAlgorithm::Poisson).value.rat();
        Rat m = resultant(sys, ResultantAlgorithm::Macaulay).value.rat();
        Rat i = resultant(sys, ResultantAlgorithm::Interpolate).value.rat();
        CHECK(p == m);
        CHECK(m == i);
    }
}

TEST_CASE("discriminant of the generic binary quadric is 4ac - b^2 form") {
    auto R = zz({"x", "y"});
    // convention: Dis(F) = c * Res(partials); for (2,1) this gives
    // 4ac - b^2
    Poly F = parse_poly("3*x^2 + 5*x*y + 2*y^2", R);
    CHECK(discriminant(F).value.rat() == Rat(4 * 3 * 2 - 25));
    CHECK(discriminant(parse_poly("x^2 - y^2", R)).value.rat() == Rat(-4));
    // double root -> discriminant zero
    CHECK(discriminant(parse_poly("x^2 + 2*x*y + y^2", R)).value.rat() ==
          Rat(0));
}

TEST_CASE("discriminant over GF(p) via sylvester cross-check") {
    auto R = RingCtx::make({"x", "y"}, CoeffDomain::prime_field(11),
                           MonomialOrder::grevlex());
    Poly f = parse_poly("x^2 + 3*x*y + y^2", R);
    Poly g = parse_poly("2*x + 5*y", R);
    auto out = resultant(make_hom_system({f, g}, {2, 1}));
    // det [[1,3,1],[2,5,0],[0,2,5]] = -11 + ... computed over ZZ then mod 11
    auto Rz = zz({"x", "y"});
    Rat exact = sylvester_resultant(parse_poly("x^2 + 3*x*y + y^2", Rz),
                                    parse_poly("2*x + 5*y", Rz), 2, 1);
    long lifted = exact.get_num().get_si() % 11;
    if (lifted < 0) lifted += 11;
    CHECK(out.value.mod() == static_cast<std::uint64_t>(lifted));
}
