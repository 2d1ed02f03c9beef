#pragma once

#include <utility>
#include <vector>

#include "quadideal/primes.hpp"

namespace quadideal {

struct CongruenceSystem {
    OrderPtr order;
    // x = residue mod modulus, moduli pairwise comaximal.
    std::vector<std::pair<IntegralIdeal, Element>> targets;
};

struct ApproximationSpec {
    struct Constraint {
        PrimeIdealData prime;
        Element target;
        Int min_valuation;
    };
    OrderPtr order;
    std::vector<Constraint> constraints; // primes distinct
};

// x = a mod I, x = b mod J for comaximal I, J, built from a splitting
// e2 + e1 = 1 with e2 in I, e1 in J; the result is reduced mod I*J.
Element crt_pair(const IntegralIdeal& i, const IntegralIdeal& j,
                 const Element& a, const Element& b);

// Solves every congruence simultaneously; result reduced mod the
// product ideal. Throws domain_error naming the offending pair if two
// moduli are not comaximal.
Element crt_system(const CongruenceSystem& sys);

// Approximation theorem: x in K with v_{P_i}(x - x_i) >= n_i and
// v_Q(x) >= 0 at every other prime.
Element approximate(const ApproximationSpec& spec);

// Second approximation theorem: v_{P_i}(x) = n_i exactly, v_Q(x) >= 0
// elsewhere.
Element approximate_exact(const OrderPtr& order,
                          const std::vector<PrimeIdealData>& primes,
                          const std::vector<Int>& exponents);

// Two-generator theorem: (a, b) with aR + bR = I exactly. Requires Z or
// a maximal order (throws unsupported_error otherwise).
std::pair<Element, Element> two_generators(const IntegralIdeal& i);

} // namespace quadideal
