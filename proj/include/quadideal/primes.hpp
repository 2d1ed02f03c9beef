#pragma once

#include <optional>
#include <vector>

#include "quadideal/ideal.hpp"

namespace quadideal {

// Value in Z union {infinity}, with v(0) = infinity.
class Val {
public:
    static Val infinity() { return Val(); }
    Val(Int k) : v_(std::move(k)) {}
    Val(long k) : v_(Int(k)) {}

    bool is_infinite() const { return !v_.has_value(); }
    const Int& finite() const {
        if (!v_) throw domain_error("Val: infinite valuation has no finite value");
        return *v_;
    }

    bool operator==(const Val& o) const { return v_ == o.v_; }
    bool operator!=(const Val& o) const { return v_ != o.v_; }

private:
    Val() = default;
    std::optional<Int> v_;
};

/**
 * A nonzero prime ideal above the rational prime p, with residue degree
 * f = log_p |R/P| and ramification index e. For primes of a Dedekind
 * instance e is the valuation of pR at P; for singular primes (found by
 * the singular-orders module) the pair (e, f) is classification
 * metadata only, since no discrete valuation exists there.
 */
struct PrimeIdealData {
    Int p;
    IntegralIdeal ideal;
    int residue_degree;
    int ramification;

    const OrderPtr& order() const { return ideal.order(); }
    bool is_singular() const { return order()->singular_at(p); }

    bool operator==(const PrimeIdealData& o) const {
        return p == o.p && ideal == o.ideal;
    }
    bool operator!=(const PrimeIdealData& o) const { return !(*this == o); }
};

// The distinct primes above a rational prime p, by factoring the minimal
// polynomial of theta mod p (valid since p does not divide the
// conductor); sum of e_i * f_i is 2. Throws unsupported_error for
// singular p, domain_error if p is not prime.
std::vector<PrimeIdealData> primes_above(const OrderPtr& order, const Int& p);

// v_P(x); x = 0 gives the infinity sentinel. P must not be singular.
Val element_valuation(const Element& x, const PrimeIdealData& P);

// v_P(I) for nonzero I: minimum of the element valuations of the
// canonical generators, shifted by the denominator.
Int ideal_valuation(const FractionalIdeal& i, const PrimeIdealData& P);

struct Factorization {
    // Distinct primes with nonzero exponents, sorted by (p, HNF).
    std::vector<std::pair<PrimeIdealData, Int>> factors;

    bool operator==(const Factorization& o) const;
};

// Unique prime factorization of a nonzero fractional ideal. Throws
// unsupported_error if a singular prime divides the ideal's norm
// (callers should use primary_decomposition there).
Factorization factor_ideal(const FractionalIdeal& i);

// Product of P^e over the factorization.
FractionalIdeal reconstitute(const OrderPtr& order, const Factorization& f);

// "To contain is to divide": divides(i, j) iff j <= i.
bool divides(const FractionalIdeal& i, const FractionalIdeal& j);
FractionalIdeal ideal_gcd(const FractionalIdeal& i, const FractionalIdeal& j);
FractionalIdeal ideal_lcm(const FractionalIdeal& i, const FractionalIdeal& j);

// An element pi with v_P(pi) = 1, nonnegative valuation everywhere else.
Element uniformizer_at(const PrimeIdealData& P);

} // namespace quadideal
