#pragma once

#include <memory>
#include <string>

#include "quadideal/numbers.hpp"

namespace quadideal {

enum class RingKind { integers, quadratic };
enum class OmegaKind { sqrt_d, half_trace };

/**
 * The ambient ring R and its fraction field K.
 *
 * For RingKind::quadratic, K = Q(sqrt(d)) with d squarefree, d != 0, 1.
 * The coordinate generator is w = sqrt(d) (OmegaKind::sqrt_d) or
 * w = (1+sqrt(d))/2 (OmegaKind::half_trace, admissible only when
 * d = 1 mod 4). The ring itself is R = Z + (conductor*w)Z = Z[theta]
 * with theta = conductor*w; elements are written in w-coordinates,
 * ideal lattices in {1, theta}-coordinates.
 *
 * For RingKind::integers, R = Z and K = Q; the quadratic part is inert.
 */
class OrderSpec {
public:
    static std::shared_ptr<const OrderSpec> integers();
    static std::shared_ptr<const OrderSpec> quadratic(const Int& d, OmegaKind omega,
                                                      const Int& conductor = 1);
    // Maximal order of Q(sqrt(d)): half_trace when d = 1 mod 4, else sqrt_d.
    static std::shared_ptr<const OrderSpec> maximal(const Int& d);

    RingKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == RingKind::integers; }
    const Int& d() const { return d_; }
    OmegaKind omega_kind() const { return omega_; }
    const Int& conductor() const { return conductor_; }

    // Minimal polynomial of w is X^2 - omega_trace*X + omega_norm.
    const Int& omega_trace() const { return omega_trace_; }
    const Int& omega_norm() const { return omega_norm_; }

    // Minimal polynomial of theta = conductor*w.
    const Int& theta_trace() const { return theta_trace_; }
    const Int& theta_norm() const { return theta_norm_; }

    // disc(R) = theta_trace^2 - 4*theta_norm (1 for Z).
    const Int& discriminant() const { return disc_; }

    // Fundamental discriminant of K and the index [O_K : R].
    const Int& fundamental_discriminant() const { return fund_disc_; }
    const Int& true_conductor() const { return true_conductor_; }

    bool is_maximal() const { return true_conductor_ == 1; }
    bool is_imaginary() const { return kind_ == RingKind::quadratic && d_ < 0; }

    // Whether the rational prime p is singular for R (p divides [O_K : R]).
    bool singular_at(const Int& p) const;

    bool operator==(const OrderSpec& other) const;
    bool operator!=(const OrderSpec& other) const { return !(*this == other); }

    std::string description() const;

private:
    OrderSpec() = default;

    RingKind kind_ = RingKind::integers;
    Int d_ = 0;
    OmegaKind omega_ = OmegaKind::sqrt_d;
    Int conductor_ = 1;
    Int omega_trace_ = 0, omega_norm_ = 0;
    Int theta_trace_ = 0, theta_norm_ = 0;
    Int disc_ = 1;
    Int fund_disc_ = 1;
    Int true_conductor_ = 1;
};

using OrderPtr = std::shared_ptr<const OrderSpec>;

// Throws domain_error unless both orders describe the same ring.
void require_same_order(const OrderPtr& a, const OrderPtr& b, const char* what);

} // namespace quadideal
