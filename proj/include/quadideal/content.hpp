#pragma once

#include "quadideal/poly.hpp"
#include "quadideal/primes.hpp"

namespace quadideal {

// Fractional ideal generated by the coefficients of f (f nonzero).
FractionalIdeal content(const Poly& f);

// Min of the coefficient valuations at P; infinity for the zero polynomial.
Val poly_valuation(const Poly& f, const PrimeIdealData& P);

// v(f/g) = v(f) - v(g); infinity when the numerator is zero.
Val ratfunc_valuation(const RatFunc& h, const PrimeIdealData& P);

// Product via Gauss's lemma: content of the product of the ideals' basis
// polynomials. Requires a Dedekind instance (Z or a maximal order).
FractionalIdeal gauss_mul(const FractionalIdeal& i, const FractionalIdeal& j);

} // namespace quadideal
