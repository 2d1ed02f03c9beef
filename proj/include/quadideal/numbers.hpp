#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadideal/errors.hpp"

namespace quadideal {

// Exact arbitrary-precision integers and rationals. mpq_class keeps
// gcd(|num|, den) = 1 and den > 0 once canonicalized; make_rat is the
// only constructor used from raw numerator/denominator pairs.
using Int = mpz_class;
using Rat = mpq_class;

struct Egcd {
    Int g; // gcd(a, b) > 0
    Int u; // u*a + v*b = g
    Int v;
};

Egcd egcd(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Exact quotient; b must divide a.
Int divexact(const Int& a, const Int& b);

// Floor division/remainder with remainder in [0, |b|).
Int floordiv(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

bool divides(const Int& d, const Int& a);

Int isqrt(const Int& n);
bool is_square(const Int& n, Int& root);

Int int_pow(const Int& base, unsigned long e);

// Multiplicity of the prime p in a; a must be nonzero.
long valuation_int(const Int& a, const Int& p);

bool is_probable_prime(const Int& n);

// Prime factorization of n >= 1 (trial division + Pollard-Brent rho),
// returned sorted by prime.
std::vector<std::pair<Int, int>> factor_integer(Int n);

Int pow_mod(const Int& base, const Int& exp, const Int& mod);

// Legendre symbol (a/p) for odd prime p.
int legendre(const Int& a, const Int& p);

// Square root of a mod odd prime p, if a is a residue (Tonelli-Shanks).
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

Rat make_rat(const Int& num, const Int& den);
Rat rat_of(const Int& n);

bool is_integer(const Rat& q);

// q must be an integer.
Int to_int(const Rat& q);

long valuation_rat(const Rat& q, const Int& p);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

} // namespace quadideal
