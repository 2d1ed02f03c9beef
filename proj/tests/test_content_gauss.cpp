#include "doctest.h"

#include <random>

#include "quadideal/content.hpp"

using namespace quadideal;

namespace {

OrderPtr zm5() { return OrderSpec::quadratic(-5, OmegaKind::sqrt_d); }

Element el(const OrderPtr& O, long x, long y) { return {O, Rat(x), Rat(y)}; }

Poly random_poly(const OrderPtr& O, std::mt19937_64& rng, long maxdeg, bool rat_only) {
    std::vector<Element> cs;
    long deg = static_cast<long>(rng() % (maxdeg + 1));
    for (long i = 0; i <= deg; ++i) {
        Int xn = Int(rng() % 21) - 10;
        Int yn = rat_only ? Int(0) : Int(rng() % 21) - 10;
        Int d = Int(rng() % 3) + 1;
        cs.emplace_back(O, make_rat(xn, d), make_rat(yn, d));
    }
    return {O, cs};
}

} // namespace

TEST_CASE("content pinned examples") {
    auto O = zm5();
    // content(3X + (1+2w)) = <3, 1+2w> = [3, 2+w]
    Poly f(O, {el(O, 1, 2), el(O, 3, 0)});
    FractionalIdeal c = content(f);
    CHECK(c == FractionalIdeal::from_generators({el(O, 3, 0), el(O, 1, 2)}));
    CHECK(c.lattice().a() == 3);
    CHECK(c.lattice().b() == 2);

    // constant polynomial
    Element a = el(O, 2, 3);
    CHECK(content(Poly::constant(a)) == FractionalIdeal::principal(a));

    // primitive over Q
    auto Z = OrderSpec::integers();
    Poly g(Z, {Element::from_int(Z, 1), Element::from_int(Z, 6), Element::from_int(Z, 4)});
    CHECK(content(g).is_unit_ideal());

    CHECK_THROWS_AS(content(Poly(O)), domain_error);
}

TEST_CASE("poly_valuation pinned examples") {
    auto Z = OrderSpec::integers();
    auto two = primes_above(Z, 2)[0];
    Poly f(Z, {Element::from_int(Z, 1), Element::from_int(Z, 6), Element::from_int(Z, 4)});
    CHECK(poly_valuation(f, two) == Val(0));
    Poly g(Z, {Element::from_int(Z, 4), Element::from_int(Z, 2)});
    CHECK(poly_valuation(g, two) == Val(1));
    CHECK(poly_valuation(Poly(Z), two).is_infinite());

    // v at P3 = <3, 1+w> of 3X + (1+2w) is 0: the 3-part of (1+2w) sits
    // at the conjugate prime
    auto O = zm5();
    auto p3 = primes_above(O, 3);
    IntegralIdeal p3_spec(O, 3, 1, 1); // <3, 1+w>
    const PrimeIdealData& P = p3[0].ideal == p3_spec ? p3[0] : p3[1];
    Poly h(O, {el(O, 1, 2), el(O, 3, 0)});
    CHECK(poly_valuation(h, P) == Val(0));
}

TEST_CASE("ratfunc valuation") {
    auto Z = OrderSpec::integers();
    auto two = primes_above(Z, 2)[0];
    Poly f(Z, {Element::from_int(Z, 4), Element::from_int(Z, 2)});
    Poly g(Z, {Element::from_int(Z, 1), Element::from_int(Z, 1)});

    CHECK(ratfunc_valuation(RatFunc(f, f), two) == Val(0));
    CHECK(ratfunc_valuation(RatFunc(f, g), two) == Val(1));
    CHECK(ratfunc_valuation(RatFunc(Poly(Z), g), two).is_infinite());
    CHECK_THROWS_AS(RatFunc(f, Poly(Z)), domain_error);

    // scaling by a uniformizer adds one
    Element pi = Element::from_int(Z, 2);
    RatFunc h(f, g);
    RatFunc scaled(Poly::constant(pi) * f, g);
    CHECK(ratfunc_valuation(scaled, two).finite() ==
          ratfunc_valuation(h, two).finite() + 1);

    // well-definedness: f/g = fk/gk for any nonzero k
    std::mt19937_64 rng(301);
    auto O = zm5();
    auto p2 = primes_above(O, 2)[0];
    for (int k = 0; k < 100; ++k) {
        Poly a = random_poly(O, rng, 3, false);
        Poly b = random_poly(O, rng, 3, false);
        Poly c = random_poly(O, rng, 2, false);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        CHECK(ratfunc_valuation(RatFunc(a, b), p2) ==
              ratfunc_valuation(RatFunc(a * c, b * c), p2));
        // additivity on K(X)
        Poly ab = a * b;
        CHECK(ratfunc_valuation(RatFunc(ab, c), p2).finite() ==
              ratfunc_valuation(RatFunc(a, c), p2).finite() +
                  poly_valuation(b, p2).finite());
    }
}

TEST_CASE("gauss_mul pinned examples") {
    auto O = zm5();
    FractionalIdeal i = FractionalIdeal::from_generators({el(O, 3, 0), el(O, 1, 2)});
    FractionalIdeal j = FractionalIdeal::from_generators({el(O, 3, 0), el(O, 1, -2)});
    FractionalIdeal three_r = FractionalIdeal::principal(el(O, 3, 0));
    CHECK(gauss_mul(i, j) == three_r);
    CHECK(gauss_mul(i, j) == ideal_mul(i, j));

    // the generator polynomials multiply to 9X^2 + 6X + 21
    Poly f(O, {el(O, 1, 2), el(O, 3, 0)});
    Poly g(O, {el(O, 1, -2), el(O, 3, 0)});
    Poly fg = f * g;
    REQUIRE(fg.degree() == 2);
    CHECK(fg.coeff(0) == el(O, 21, 0));
    CHECK(fg.coeff(1) == el(O, 6, 0));
    CHECK(fg.coeff(2) == el(O, 9, 0));
    CHECK(content(fg) == three_r);

    CHECK(gauss_mul(i, FractionalIdeal::unit(O)) == i);

    auto S = OrderSpec::quadratic(-3, OmegaKind::sqrt_d);
    CHECK_THROWS_AS(
        gauss_mul(FractionalIdeal::unit(S), FractionalIdeal::unit(S)), unsupported_error);
}

TEST_CASE("gauss_mul equals ideal_mul on random ideals") {
    for (long d : {-5L, -14L, 2L}) {
        auto O = OrderSpec::maximal(d);
        std::mt19937_64 rng(307 + d);
        for (int k = 0; k < 100; ++k) {
            std::vector<Element> g1, g2;
            for (int t = 0; t < 2; ++t) {
                g1.emplace_back(O, make_rat(Int(rng() % 41) - 20, Int(rng() % 3) + 1),
                                make_rat(Int(rng() % 41) - 20, Int(rng() % 3) + 1));
                g2.emplace_back(O, make_rat(Int(rng() % 41) - 20, Int(rng() % 3) + 1),
                                make_rat(Int(rng() % 41) - 20, Int(rng() % 3) + 1));
            }
            bool z1 = true, z2 = true;
            for (auto& g : g1) {
                if (!g.is_zero()) z1 = false;
            }
            for (auto& g : g2) {
                if (!g.is_zero()) z2 = false;
            }
            if (z1 || z2) continue;
            FractionalIdeal i = FractionalIdeal::from_generators(g1);
            FractionalIdeal j = FractionalIdeal::from_generators(g2);
            CHECK(gauss_mul(i, j) == ideal_mul(i, j));
        }
    }
}

TEST_CASE("content multiplicativity over Q and Q(sqrt(-5))") {
    for (bool rational : {true, false}) {
        OrderPtr O = rational ? OrderSpec::integers() : zm5();
        std::mt19937_64 rng(rational ? 311 : 313);
        int done = 0;
        while (done < 200) {
            Poly f = random_poly(O, rng, 5, rational);
            Poly g = random_poly(O, rng, 5, rational);
            if (f.is_zero() || g.is_zero()) continue;
            ++done;
            CHECK(content(f * g) == ideal_mul(content(f), content(g)));
        }
    }
}

TEST_CASE("DVR-level valuation law v(fg) = v(f) + v(g)") {
    auto O = zm5();
    std::mt19937_64 rng(317);
    std::vector<PrimeIdealData> pool;
    for (long p : {2L, 3L, 7L}) {
        for (const auto& P : primes_above(O, p)) pool.push_back(P);
    }
    int done = 0;
    while (done < 150) {
        Poly f = random_poly(O, rng, 4, false);
        Poly g = random_poly(O, rng, 4, false);
        if (f.is_zero() || g.is_zero()) continue;
        ++done;
        for (const auto& P : pool) {
            CHECK(poly_valuation(f * g, P).finite() ==
                  poly_valuation(f, P).finite() + poly_valuation(g, P).finite());
            // v_P(f) = v_P(content(f))
            CHECK(poly_valuation(f, P).finite() == ideal_valuation(content(f), P));
        }
    }
}

TEST_CASE("integrality and primitivity") {
    auto O = zm5();
    std::mt19937_64 rng(331);
    int done = 0;
    while (done < 200) {
        Poly f = random_poly(O, rng, 4, false);
        if (f.is_zero()) continue;
        ++done;
        CHECK(f.is_integral() == content(f).is_integral());
    }
    // monic integral polynomials are primitive
    for (int k = 0; k < 100; ++k) {
        std::vector<Element> cs;
        long deg = 1 + static_cast<long>(rng() % 3);
        for (long i = 0; i < deg; ++i) {
            cs.emplace_back(O, Rat(Int(rng() % 21) - 10), Rat(Int(rng() % 21) - 10));
        }
        cs.push_back(Element::one(O));
        Poly f(O, cs);
        CHECK(content(f).is_unit_ideal());
    }
}

TEST_CASE("superadditivity of content") {
    auto O = zm5();
    std::mt19937_64 rng(337);
    int done = 0;
    while (done < 200) {
        Poly f = random_poly(O, rng, 4, false);
        Poly g = random_poly(O, rng, 4, false);
        Poly s = f + g;
        if (f.is_zero() || g.is_zero() || s.is_zero()) continue;
        ++done;
        // content(f) + content(g) divides content(f+g)
        CHECK(divides(ideal_add(content(f), content(g)), content(s)));
    }
}
