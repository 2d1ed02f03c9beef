#include "doctest.h"

#include <random>

#include "quadideal/singular.hpp"

using namespace quadideal;

namespace {

OrderPtr zm3() { return OrderSpec::quadratic(-3, OmegaKind::sqrt_d); }

FractionalIdeal frac(const IntegralIdeal& i) { return FractionalIdeal::from_integral(i); }

IntegralIdeal nz(const OrderPtr& O, long n) {
    return FractionalIdeal::principal(Element::from_int(O, n)).lattice();
}

} // namespace

TEST_CASE("singular primes") {
    CHECK(singular_primes(OrderSpec::maximal(-5)).empty());
    CHECK(singular_primes(OrderSpec::integers()).empty());

    auto O = zm3();
    auto sp = singular_primes(O);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].p == 2);
    CHECK(sp[0].ideal == IntegralIdeal(O, 2, 1, 1));
    CHECK(!is_invertible(frac(sp[0].ideal)));
    CHECK(sp[0].residue_degree == 1);
}

TEST_CASE("all_primes_above dispatches to sublattice enumeration") {
    auto O = zm3();
    // the unique prime above the singular 2
    auto above2 = all_primes_above(O, 2);
    REQUIRE(above2.size() == 1);
    CHECK(above2[0].ideal == IntegralIdeal(O, 2, 1, 1));
    // pR is not prime there: R/2R has nilpotents
    // nonsingular primes go through the minimal polynomial
    auto above3 = all_primes_above(O, 3);
    REQUIRE(above3.size() == 1);
    CHECK(above3[0].ramification == 2);
    CHECK(above3[0].ideal == IntegralIdeal(O, 3, 0, 1));
    auto above7 = all_primes_above(O, 7);
    CHECK(above7.size() == 2);
}

TEST_CASE("is_primary") {
    auto O = OrderSpec::maximal(-5);
    auto p2 = primes_above(O, 2)[0];
    // powers of a prime are primary
    FractionalIdeal p2cubed = ideal_pow(frac(p2.ideal), 3);
    auto pr = is_primary(p2cubed.lattice());
    REQUIRE(pr.has_value());
    CHECK(*pr == p2);

    auto Z = OrderSpec::integers();
    CHECK(!is_primary(nz(Z, 6)).has_value());
    CHECK(is_primary(nz(Z, 8)).has_value());
    CHECK_THROWS_AS(is_primary(IntegralIdeal::unit(Z)), domain_error);

    auto S = zm3();
    auto pr2 = is_primary(nz(S, 2));
    REQUIRE(pr2.has_value());
    CHECK(pr2->ideal == IntegralIdeal(S, 2, 1, 1));
}

TEST_CASE("saturation") {
    auto Z = OrderSpec::integers();
    auto two = primes_above(Z, 2)[0];
    CHECK(saturate(nz(Z, 12), two) == nz(Z, 4));
    // already primary ideals are fixed
    CHECK(saturate(nz(Z, 8), two) == nz(Z, 8));
    auto three = primes_above(Z, 3)[0];
    CHECK(saturate(nz(Z, 12), three) == nz(Z, 3));
    CHECK_THROWS_AS(saturate(nz(Z, 5), two), domain_error);

    auto S = zm3();
    auto m = singular_primes(S)[0];
    CHECK(saturate(nz(S, 6), m) == nz(S, 2));
}

TEST_CASE("primary decomposition of 6R in Z[sqrt(-3)]") {
    auto S = zm3();
    auto comps = primary_decomposition(nz(S, 6));
    REQUIRE(comps.size() == 2);
    FractionalIdeal prod = FractionalIdeal::unit(S);
    for (const auto& c : comps) {
        prod = ideal_mul(prod, frac(c.component));
        auto pr = is_primary(c.component);
        REQUIRE(pr.has_value());
        CHECK(*pr == c.prime);
    }
    CHECK(prod == frac(nz(S, 6)));
    // the 2-component is 2R, the 3-component is 3R
    bool saw2 = false, saw3 = false;
    for (const auto& c : comps) {
        if (c.prime.p == 2) {
            saw2 = true;
            CHECK(c.component == nz(S, 2));
        }
        if (c.prime.p == 3) {
            saw3 = true;
            CHECK(c.component == nz(S, 3));
        }
    }
    CHECK(saw2);
    CHECK(saw3);
}

TEST_CASE("primary decomposition matches factor_ideal in maximal orders") {
    auto O = OrderSpec::maximal(-5);
    auto comps = primary_decomposition(nz(O, 6));
    REQUIRE(comps.size() == 3);
    Factorization f = factor_ideal(frac(nz(O, 6)));
    REQUIRE(f.factors.size() == 3);
    for (const auto& [P, e] : f.factors) {
        FractionalIdeal pw = ideal_pow(frac(P.ideal), static_cast<long>(e.get_si()));
        bool found = false;
        for (const auto& c : comps) {
            if (frac(c.component) == pw && c.prime == P) found = true;
        }
        CHECK(found);
    }
    // prime input decomposes to itself
    auto p2 = primes_above(O, 2)[0];
    auto single = primary_decomposition(p2.ideal);
    REQUIRE(single.size() == 1);
    CHECK(single[0].component == p2.ideal);
}

TEST_CASE("m is non-invertible with m^2 strictly below 2R strictly below m") {
    auto S = zm3();
    auto m = singular_primes(S)[0];
    FractionalIdeal fm = frac(m.ideal);
    FractionalIdeal m2 = ideal_mul(fm, fm);

    CHECK(ideal_mul(fm, ideal_inverse(fm)) == fm);
    CHECK(m2 == ideal_mul(FractionalIdeal::principal(Element::from_int(S, 2)), fm));

    // the component lattice between m^2 and m: witness 2R
    FractionalIdeal two = frac(nz(S, 2));
    CHECK(fm.contains(two));
    CHECK(two.contains(m2));
    CHECK(fm != two);
    CHECK(two != m2);
    // 2R is m-primary but not prime: (1+w)^2 = -2 + 2w is in 2R while 1+w is not
    Element onepw(S, Rat(1), Rat(1));
    CHECK(two.member(onepw * onepw));
    CHECK(!two.member(onepw));
    auto pr = is_primary(nz(S, 2));
    REQUIRE(pr.has_value());
    CHECK(*pr == m);
}

TEST_CASE("decomposition invariants on random ideals") {
    for (auto O : {zm3(), OrderSpec::maximal(-5), OrderSpec::integers()}) {
        std::mt19937_64 rng(401);
        int done = 0;
        while (done < 60) {
            Int xn = Int(rng() % 41) - 20;
            Int yn = O->is_rational() ? Int(0) : Int(rng() % 41) - 20;
            if (xn == 0 && yn == 0) continue;
            Element g(O, Rat(xn), Rat(yn));
            // multiply in a small prime to get interesting components
            FractionalIdeal i = FractionalIdeal::principal(g);
            if (rng() % 2) {
                i = ideal_mul(i, frac(all_primes_above(O, 2)[0].ideal));
            }
            if (i.lattice().is_unit_ideal()) continue;
            ++done;
            IntegralIdeal l = i.lattice();
            auto comps = primary_decomposition(l);
            FractionalIdeal prod = FractionalIdeal::unit(O);
            for (const auto& c : comps) {
                prod = ideal_mul(prod, frac(c.component));
                auto pr = is_primary(c.component);
                REQUIRE(pr.has_value());
                CHECK(*pr == c.prime);
            }
            CHECK(prod == frac(l));
            // re-decomposition is a fixed point
            auto again = primary_decomposition(l);
            REQUIRE(again.size() == comps.size());
            for (std::size_t t = 0; t < comps.size(); ++t) {
                CHECK(again[t].component == comps[t].component);
            }
        }
    }
}

TEST_CASE("products of P-primary ideals are P-primary") {
    auto S = zm3();
    auto m = singular_primes(S)[0];
    std::mt19937_64 rng(409);
    std::vector<IntegralIdeal> primaries = {m.ideal, nz(S, 2),
                                            ideal_mul(frac(m.ideal), frac(m.ideal)).lattice()};
    for (int k = 0; k < 40; ++k) {
        const auto& a = primaries[rng() % primaries.size()];
        const auto& b = primaries[rng() % primaries.size()];
        auto pr = is_primary(ideal_mul(frac(a), frac(b)).lattice());
        REQUIRE(pr.has_value());
        CHECK(*pr == m);
    }
}
