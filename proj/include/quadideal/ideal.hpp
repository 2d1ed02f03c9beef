#pragma once

#include <vector>

#include "quadideal/element.hpp"
#include "quadideal/lattice.hpp"

namespace quadideal {

/**
 * A nonzero integral ideal of R, stored as the canonical HNF lattice
 * a*Z + (b + c*theta)*Z in the order basis {1, theta}, with a, c > 0,
 * 0 <= b < a, c | a, c | b and ac | N(b + c*theta). The lattice index
 * [R : I] is a*c.
 *
 * For the base ring Z the lattice is a*Z, stored as (a, 0, 1) with
 * norm a.
 */
class IntegralIdeal {
public:
    // Validates the HNF invariants and the module condition.
    IntegralIdeal(OrderPtr order, Int a, Int b, Int c);

    static IntegralIdeal unit(const OrderPtr& order);

    // Whether (a, b, c) satisfies the HNF invariants and is closed under
    // multiplication by theta.
    static bool is_valid_hnf(const OrderPtr& order, const Int& a, const Int& b, const Int& c);

    const OrderPtr& order() const { return order_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    HnfBasis basis() const { return {a_, b_, c_}; }

    Int norm() const;

    // The Z-basis {a, b + c*theta} as field elements.
    Element first_gen() const;
    Element second_gen() const;

    bool contains(const Element& x) const;
    bool contains(const IntegralIdeal& other) const;

    bool is_unit_ideal() const;

    IntegralIdeal conjugate() const;

    bool operator==(const IntegralIdeal& o) const;
    bool operator!=(const IntegralIdeal& o) const { return !(*this == o); }

    // Deterministic representative of x mod this ideal, reduced into the
    // HNF fundamental domain; x must be integral.
    Element reduce(const Element& x) const;

    std::string str() const;

private:
    OrderPtr order_;
    Int a_, b_, c_;
};

/**
 * A nonzero fractional ideal lattice/den, canonicalized so that
 * gcd(den, content(lattice)) = 1 (the content of an HNF ideal lattice
 * is its c entry; a/1 for the base ring Z). Canonical form is unique,
 * so equality is field-by-field.
 */
class FractionalIdeal {
public:
    FractionalIdeal(IntegralIdeal lattice, Int den);

    static FractionalIdeal unit(const OrderPtr& order);
    static FractionalIdeal principal(const Element& x); // x nonzero
    static FractionalIdeal from_integral(IntegralIdeal lattice);
    // Smallest R-submodule of K containing the generators; at least one
    // generator must be nonzero.
    static FractionalIdeal from_generators(const std::vector<Element>& gens);

    const OrderPtr& order() const { return lattice_.order(); }
    const IntegralIdeal& lattice() const { return lattice_; }
    const Int& den() const { return den_; }

    bool is_integral() const { return den_ == 1; }
    bool is_unit_ideal() const;

    // Lattice index as a rational: norm(lattice)/den^2, or a/den over Z.
    Rat norm() const;

    Element first_gen() const;
    Element second_gen() const;
    std::vector<Element> gens() const;

    bool member(const Element& x) const;
    bool contains(const FractionalIdeal& other) const;

    FractionalIdeal conjugate() const;

    bool operator==(const FractionalIdeal& o) const;
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }

    std::string str() const;

private:
    IntegralIdeal lattice_;
    Int den_;
};

FractionalIdeal ideal_add(const FractionalIdeal& i, const FractionalIdeal& j);
FractionalIdeal ideal_mul(const FractionalIdeal& i, const FractionalIdeal& j);
FractionalIdeal ideal_intersect(const FractionalIdeal& i, const FractionalIdeal& j);

// Scale by a nonzero field element.
FractionalIdeal ideal_scale(const Element& x, const FractionalIdeal& i);

// (i : j) = { x in K | x*j <= i }.
FractionalIdeal ideal_colon(const FractionalIdeal& i, const FractionalIdeal& j);

// i^{-1} = (R : i); the product i * i^{-1} equals R exactly when i is
// invertible, and may be a proper ideal in a singular order.
FractionalIdeal ideal_inverse(const FractionalIdeal& i);

// Multiplier ring (i : i); contains R, equals R for every fractional
// ideal of a maximal order.
FractionalIdeal multiplier_ring(const FractionalIdeal& i);

bool is_invertible(const FractionalIdeal& i);

Rat ideal_norm(const FractionalIdeal& i);

FractionalIdeal ideal_pow(const FractionalIdeal& i, long e);

} // namespace quadideal
