#pragma once

#include <optional>

#include "quadideal/approx.hpp"

namespace quadideal {

struct PrimaryComponent {
    PrimeIdealData prime;
    IntegralIdeal component;
};

// Primes above p including singular p, where the minimal-polynomial
// method is invalid and the primes are found by enumerating index-p and
// index-p^2 sublattices closed under multiplication by theta.
std::vector<PrimeIdealData> all_primes_above(const OrderPtr& order, const Int& p);

// The non-invertible primes of the order; empty iff the order is maximal
// (or Z).
std::vector<PrimeIdealData> singular_primes(const OrderPtr& order);

// The distinct primes containing a nonzero integral ideal (finitely
// many; they lie above the rational prime divisors of the norm).
std::vector<PrimeIdealData> primes_containing(const IntegralIdeal& i);

// The unique prime containing I when exactly one exists. I must be a
// proper ideal.
std::optional<PrimeIdealData> is_primary(const IntegralIdeal& i);

// The P-primary component I R_P intersect R, computed by iterated
// quotient (I : s) with s chosen in every other prime containing I but
// not in P. P must contain I.
IntegralIdeal saturate(const IntegralIdeal& i, const PrimeIdealData& P);

// Unique factorization into primary ideals, one per prime containing I;
// the product of the components is exactly I.
std::vector<PrimaryComponent> primary_decomposition(const IntegralIdeal& i);

} // namespace quadideal
