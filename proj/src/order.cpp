#include "quadideal/order.hpp"

namespace quadideal {

namespace {

bool squarefree(const Int& d) {
    Int a = abs(d);
    if (a == 0) return false;
    for (auto& [p, e] : factor_integer(a)) {
        (void)p;
        if (e >= 2) return false;
    }
    return true;
}

} // namespace

OrderPtr OrderSpec::integers() {
    auto o = std::shared_ptr<OrderSpec>(new OrderSpec());
    o->kind_ = RingKind::integers;
    return o;
}

OrderPtr OrderSpec::quadratic(const Int& d, OmegaKind omega, const Int& conductor) {
    if (d == 0 || d == 1) throw domain_error("OrderSpec: d must not be 0 or 1");
    if (!squarefree(d)) throw domain_error("OrderSpec: d must be squarefree");
    if (conductor < 1) throw domain_error("OrderSpec: conductor must be >= 1");
    if (omega == OmegaKind::half_trace && mod_floor(d, 4) != 1) {
        throw domain_error("OrderSpec: half_trace requires d = 1 mod 4");
    }
    auto o = std::shared_ptr<OrderSpec>(new OrderSpec());
    o->kind_ = RingKind::quadratic;
    o->d_ = d;
    o->omega_ = omega;
    o->conductor_ = conductor;
    if (omega == OmegaKind::sqrt_d) {
        o->omega_trace_ = 0;
        o->omega_norm_ = -d;
    } else {
        o->omega_trace_ = 1;
        o->omega_norm_ = divexact(1 - d, 4);
    }
    o->theta_trace_ = conductor * o->omega_trace_;
    o->theta_norm_ = conductor * conductor * o->omega_norm_;
    o->disc_ = o->theta_trace_ * o->theta_trace_ - 4 * o->theta_norm_;
    o->fund_disc_ = (mod_floor(d, 4) == 1) ? d : 4 * d;
    // disc = true_conductor^2 * fund_disc
    Int f2 = divexact(o->disc_, o->fund_disc_);
    o->true_conductor_ = isqrt(f2);
    return o;
}

OrderPtr OrderSpec::maximal(const Int& d) {
    return quadratic(d, mod_floor(d, 4) == 1 ? OmegaKind::half_trace : OmegaKind::sqrt_d, 1);
}

bool OrderSpec::singular_at(const Int& p) const {
    if (kind_ == RingKind::integers) return false;
    return divides(p, true_conductor_);
}

bool OrderSpec::operator==(const OrderSpec& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == RingKind::integers) return true;
    return d_ == other.d_ && omega_ == other.omega_ && conductor_ == other.conductor_;
}

std::string OrderSpec::description() const {
    if (kind_ == RingKind::integers) return "Z";
    std::string gen = omega_ == OmegaKind::sqrt_d
                          ? "sqrt(" + to_string(d_) + ")"
                          : "(1+sqrt(" + to_string(d_) + "))/2";
    if (conductor_ == 1) return "Z[" + gen + "]";
    return "Z[" + to_string(conductor_) + "*" + gen + "]";
}

void require_same_order(const OrderPtr& a, const OrderPtr& b, const char* what) {
    if (!(*a == *b)) {
        throw domain_error(std::string(what) + ": operands belong to different rings");
    }
}

} // namespace quadideal
