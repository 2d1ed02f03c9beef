#pragma once

#include <optional>

#include "quadideal/primes.hpp"

namespace quadideal {

/**
 * An equivalence class of ideals modulo principal ideals, named by its
 * least-norm (then HNF-lexicographically least) discovered member.
 */
struct IdealClass {
    IntegralIdeal representative;

    bool is_principal_class() const { return representative.is_unit_ideal(); }
};

// Elements z of the lattice with |N(z)| = n, in a deterministic order.
// Finite for Z and imaginary quadratic orders; throws unsupported_error
// for real quadratic orders.
std::vector<Element> elements_of_norm(const IntegralIdeal& lattice, const Int& n);

// A generator g with gR = I, if I is principal. Imaginary quadratic
// orders and Z only.
std::optional<Element> is_principal(const IntegralIdeal& i);

// Equivalence modulo principal ideals: aI = bJ for nonzero a, b in R,
// decided by searching (J : I) for a scaling witness x with xI = J.
bool equivalent(const IntegralIdeal& i, const IntegralIdeal& j);

// All integral ideals of norm exactly n / norm at most bound, sorted by
// (norm, a, b, c).
std::vector<IntegralIdeal> ideals_of_norm(const OrderPtr& order, const Int& n);
std::vector<IntegralIdeal> ideals_up_to_norm(const OrderPtr& order, const Int& bound);

// Classes represented by integral ideals of norm <= norm_bound,
// deduplicated by equivalent(); the class of R comes first.
std::vector<IdealClass> class_monoid(const OrderPtr& order, const Int& norm_bound);

// J with I*J principal; I must be invertible. Returns conj(I) (verified
// at runtime), falling back to the power-cycle route.
IntegralIdeal principal_complement(const IntegralIdeal& i);

} // namespace quadideal
