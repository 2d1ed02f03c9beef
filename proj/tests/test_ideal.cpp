#include "doctest.h"

#include <random>

#include "quadideal/ideal.hpp"

using namespace quadideal;

namespace {

OrderPtr zm5() { return OrderSpec::quadratic(-5, OmegaKind::sqrt_d); }
OrderPtr zm3() { return OrderSpec::quadratic(-3, OmegaKind::sqrt_d); }

FractionalIdeal lit(const OrderPtr& O, const std::vector<std::pair<long, long>>& gens) {
    std::vector<Element> es;
    for (auto& [x, y] : gens) es.emplace_back(O, Rat(x), Rat(y));
    return FractionalIdeal::from_generators(es);
}

// Independent oracle: count cosets of the ideal lattice in R by testing
// membership of every vector in [0, M)^2, where M = [R : I] annihilates
// the quotient.
Int coset_count(const IntegralIdeal& i) {
    Int m = i.norm();
    long mm = static_cast<long>(m.get_si());
    long members = 0;
    for (long u = 0; u < mm; ++u) {
        for (long v = 0; v < mm; ++v) {
            if (lattice_contains(i.basis(), {u, v})) ++members;
        }
    }
    // |Z^2 / L| = M^2 / #(L within [0, M)^2)
    return (m * m) / Int(members);
}

FractionalIdeal random_fractional(const OrderPtr& O, std::mt19937_64& rng) {
    std::vector<Element> gens;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t k = 0; k < n; ++k) {
        Int xn = Int(rng() % 41) - 20, yn = Int(rng() % 41) - 20;
        Int d = Int(rng() % 4) + 1;
        gens.emplace_back(O, make_rat(xn, d), make_rat(yn, d));
    }
    bool allzero = true;
    for (auto& g : gens) {
        if (!g.is_zero()) allzero = false;
    }
    if (allzero) gens.emplace_back(O, Rat(1), Rat(0));
    return FractionalIdeal::from_generators(gens);
}

} // namespace

TEST_CASE("ideal_from_generators pinned examples") {
    auto O = zm5();
    // {3, 1+2w} -> lattice 3Z + (2+w)Z
    FractionalIdeal i = lit(O, {{3, 0}, {1, 2}});
    CHECK(i.lattice().a() == 3);
    CHECK(i.lattice().b() == 2);
    CHECK(i.lattice().c() == 1);
    CHECK(i.den() == 1);
    // both generators lie in the lattice, and the index is 3 by coset count
    CHECK(i.member(Element(O, Rat(3), Rat(0))));
    CHECK(i.member(Element(O, Rat(1), Rat(2))));
    CHECK(coset_count(i.lattice()) == 3);

    // {1} -> R
    CHECK(lit(O, {{1, 0}}).is_unit_ideal());

    // {1/2} -> R with den 2
    FractionalIdeal half = FractionalIdeal::principal(Element(O, make_rat(1, 2), Rat(0)));
    CHECK(half.lattice().is_unit_ideal());
    CHECK(half.den() == 2);

    CHECK_THROWS_AS(lit(O, {{0, 0}}), domain_error);
}

TEST_CASE("membership") {
    auto O = zm5();
    FractionalIdeal p2 = lit(O, {{2, 0}, {1, 1}});
    CHECK(p2.member(Element(O, Rat(1), Rat(1))));
    CHECK(!p2.member(Element::one(O)));
    CHECK(p2.member(Element::zero(O)));
}

TEST_CASE("product of conjugate ideals above 3 is 3R") {
    auto O = zm5();
    FractionalIdeal i = lit(O, {{3, 0}, {1, 2}});
    FractionalIdeal j = lit(O, {{3, 0}, {1, -2}});
    FractionalIdeal prod = ideal_mul(i, j);
    CHECK(prod == FractionalIdeal::principal(Element::from_int(O, 3)));
    CHECK(prod.lattice().a() == 3);
    CHECK(prod.lattice().b() == 0);
    CHECK(prod.lattice().c() == 3);
}

TEST_CASE("monoid identity and intersection example") {
    auto O = zm5();
    FractionalIdeal i = lit(O, {{3, 0}, {1, 2}});
    CHECK(ideal_mul(i, FractionalIdeal::unit(O)) == i);

    FractionalIdeal two_r = FractionalIdeal::principal(Element::from_int(O, 2));
    FractionalIdeal p2 = lit(O, {{2, 0}, {1, 1}});
    CHECK(ideal_intersect(two_r, p2) == two_r);
}

TEST_CASE("inverse examples") {
    auto O = zm5();
    // (3R)^{-1} = (1/3)R
    FractionalIdeal three_r = FractionalIdeal::principal(Element::from_int(O, 3));
    FractionalIdeal inv = ideal_inverse(three_r);
    CHECK(inv == FractionalIdeal::principal(Element::from_rat(O, make_rat(1, 3))));
    CHECK(inv.den() == 3);
    CHECK(ideal_inverse(FractionalIdeal::unit(O)) == FractionalIdeal::unit(O));
    CHECK(ideal_mul(three_r, inv).is_unit_ideal());
}

TEST_CASE("the classic non-invertible ideal of Z[sqrt(-3)]") {
    auto O = zm3();
    FractionalIdeal m = lit(O, {{2, 0}, {1, 1}});
    FractionalIdeal minv = ideal_inverse(m);
    CHECK(ideal_mul(m, minv) == m);
    CHECK(!is_invertible(m));

    // multiplier ring is the maximal order (1/2)<2, 1+w>
    FractionalIdeal mult = multiplier_ring(m);
    CHECK(mult.den() == 2);
    CHECK(mult.lattice() == m.lattice());
    CHECK(mult.member(Element(O, make_rat(1, 2), make_rat(1, 2))));
    // it is a ring: closed under squaring of the extra generator
    Element half(O, make_rat(1, 2), make_rat(1, 2));
    CHECK(mult.member(half * half));

    // m^2 = 2m (cancellation failure witness)
    FractionalIdeal m2 = ideal_mul(m, m);
    CHECK(m2 == ideal_mul(FractionalIdeal::principal(Element::from_int(O, 2)), m));
}

TEST_CASE("multiplier ring is R in the maximal order") {
    auto O = zm5();
    CHECK(multiplier_ring(lit(O, {{2, 0}, {1, 1}})) == FractionalIdeal::unit(O));
    CHECK(multiplier_ring(FractionalIdeal::principal(Element(O, Rat(3), Rat(2)))) ==
          FractionalIdeal::unit(O));
}

TEST_CASE("invertibility of principal ideals") {
    auto O = zm5();
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        Int xn = Int(rng() % 21) - 10, yn = Int(rng() % 21) - 10;
        if (xn == 0 && yn == 0) continue;
        FractionalIdeal p = FractionalIdeal::principal(Element(O, Rat(xn), Rat(yn)));
        CHECK(is_invertible(p));
    }
    CHECK(is_invertible(FractionalIdeal::unit(O)));
    CHECK(!is_invertible(lit(zm3(), {{2, 0}, {1, 1}})));
}

TEST_CASE("ideal norms") {
    auto O = zm5();
    CHECK(ideal_norm(lit(O, {{2, 0}, {1, 1}})) == 2);
    CHECK(coset_count(lit(O, {{2, 0}, {1, 1}}).lattice()) == 2);
    CHECK(ideal_norm(FractionalIdeal::unit(O)) == 1);
    CHECK(ideal_norm(FractionalIdeal::principal(Element::from_int(O, 3))) == 9);
}

TEST_CASE("monoid laws on random ideals") {
    for (auto O : {zm5(), zm3(), OrderSpec::maximal(-7)}) {
        std::mt19937_64 rng(17);
        for (int k = 0; k < 120; ++k) {
            FractionalIdeal i = random_fractional(O, rng);
            FractionalIdeal j = random_fractional(O, rng);
            FractionalIdeal l = random_fractional(O, rng);
            CHECK(ideal_mul(i, j) == ideal_mul(j, i));
            CHECK(ideal_mul(ideal_mul(i, j), l) == ideal_mul(i, ideal_mul(j, l)));
            CHECK(ideal_add(i, j) == ideal_add(j, i));
            CHECK(ideal_add(ideal_add(i, j), l) == ideal_add(i, ideal_add(j, l)));
            CHECK(ideal_mul(i, ideal_add(j, l)) ==
                  ideal_add(ideal_mul(i, j), ideal_mul(i, l)));
            // I I^{-1} <= R with equality iff invertible
            FractionalIdeal prod = ideal_mul(i, ideal_inverse(i));
            CHECK(FractionalIdeal::unit(O).contains(prod));
            CHECK(is_invertible(i) == prod.is_unit_ideal());
            // R(I) <= (I I^{-1})^{-1}
            CHECK(ideal_inverse(prod).contains(multiplier_ring(i)));
            // intersection is a lower bound for inclusion
            FractionalIdeal cap = ideal_intersect(i, j);
            CHECK(i.contains(cap));
            CHECK(j.contains(cap));
        }
    }
}

TEST_CASE("norm multiplicativity for invertible ideals") {
    auto O = zm5();
    std::mt19937_64 rng(41);
    for (int k = 0; k < 150; ++k) {
        FractionalIdeal i = random_fractional(O, rng);
        FractionalIdeal j = random_fractional(O, rng);
        CHECK(ideal_norm(ideal_mul(i, j)) == ideal_norm(i) * ideal_norm(j));
    }
}

TEST_CASE("canonical form uniqueness") {
    auto O = zm5();
    std::mt19937_64 rng(43);
    for (int k = 0; k < 100; ++k) {
        FractionalIdeal i = random_fractional(O, rng);
        // canonical invariant: gcd(den, content) = 1
        CHECK(gcd(i.den(), i.lattice().c()) == 1);
        // rebuilding from the stored generators reproduces the same form
        CHECK(FractionalIdeal::from_generators(i.gens()) == i);
    }
}

TEST_CASE("ideals over Z") {
    auto Z = OrderSpec::integers();
    FractionalIdeal six = FractionalIdeal::principal(Element::from_int(Z, 6));
    FractionalIdeal four = FractionalIdeal::principal(Element::from_int(Z, 4));
    CHECK(ideal_add(six, four) == FractionalIdeal::principal(Element::from_int(Z, 2)));
    CHECK(ideal_intersect(six, four) ==
          FractionalIdeal::principal(Element::from_int(Z, 12)));
    CHECK(ideal_mul(six, four) == FractionalIdeal::principal(Element::from_int(Z, 24)));
    CHECK(ideal_inverse(six) ==
          FractionalIdeal::principal(Element::from_rat(Z, make_rat(1, 6))));
    CHECK(is_invertible(six));
    CHECK(ideal_norm(six) == 6);
    CHECK(multiplier_ring(six) == FractionalIdeal::unit(Z));
}

TEST_CASE("mismatched rings are rejected") {
    CHECK_THROWS_AS(ideal_mul(FractionalIdeal::unit(zm5()), FractionalIdeal::unit(zm3())),
                    domain_error);
}
