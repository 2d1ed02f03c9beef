#include "quadideal/element.hpp"

namespace quadideal {

Element::Element(OrderPtr order, Rat x, Rat y)
    : order_(std::move(order)), x_(std::move(x)), y_(std::move(y)) {
    if (order_->is_rational() && y_ != 0) {
        throw domain_error("Element: base ring Z has no irrational part");
    }
}

Element Element::from_theta(const OrderPtr& order, const Rat& u, const Rat& v) {
    if (order->is_rational()) return {order, u, Rat(0)};
    return {order, u, v * Rat(order->conductor())};
}

Rat Element::theta_v() const {
    if (order_->is_rational()) return Rat(0);
    return y_ / Rat(order_->conductor());
}

Element Element::operator+(const Element& o) const {
    require_same_order(order_, o.order_, "Element::operator+");
    return {order_, x_ + o.x_, y_ + o.y_};
}

Element Element::operator-(const Element& o) const {
    require_same_order(order_, o.order_, "Element::operator-");
    return {order_, x_ - o.x_, y_ - o.y_};
}

Element Element::operator*(const Element& o) const {
    require_same_order(order_, o.order_, "Element::operator*");
    // (x1 + y1 w)(x2 + y2 w) with w^2 = t*w - n.
    const Rat t(order_->omega_trace());
    const Rat n(order_->omega_norm());
    Rat yy = y_ * o.y_;
    return {order_, x_ * o.x_ - n * yy, x_ * o.y_ + y_ * o.x_ + t * yy};
}

Element Element::inverse() const {
    if (is_zero()) throw domain_error("Element::inverse: zero element");
    // 1/z = conj(z) / norm(z); norm is nonzero for nonzero z since d is
    // not a square.
    Rat nm = norm();
    Element c = conjugate();
    return {order_, c.x_ / nm, c.y_ / nm};
}

Element Element::operator/(const Element& o) const {
    return *this * o.inverse();
}

Element Element::pow(long e) const {
    Element base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    Element acc = Element::one(order_);
    while (k > 0) {
        if (k & 1ul) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Element::operator==(const Element& o) const {
    require_same_order(order_, o.order_, "Element::operator==");
    return x_ == o.x_ && y_ == o.y_;
}

Element Element::conjugate() const {
    // conj(x + y w) = (x + t y) - y w.
    const Rat t(order_->omega_trace());
    return {order_, x_ + t * y_, -y_};
}

Rat Element::norm() const {
    const Rat t(order_->omega_trace());
    const Rat n(order_->omega_norm());
    return x_ * x_ + t * x_ * y_ + n * y_ * y_;
}

Rat Element::trace() const {
    const Rat t(order_->omega_trace());
    return 2 * x_ + t * y_;
}

bool Element::is_integral() const {
    if (order_->is_rational()) return is_integer(x_);
    return is_integer(x_) && is_integer(theta_v());
}

std::string Element::str() const {
    if (y_ == 0) return to_string(x_);
    std::string ypart = to_string(Int(abs(y_.get_num()))) +
                        (y_.get_den() == 1 ? "" : "/" + to_string(Int(y_.get_den()))) + "w";
    std::string sign = y_ < 0 ? "-" : "";
    if (x_ == 0) return sign + ypart;
    return to_string(x_) + (y_ < 0 ? "-" : "+") + ypart;
}

Element operator*(const Int& n, const Element& e) {
    return Element(e.order(), Rat(n) * e.x(), Rat(n) * e.y());
}

} // namespace quadideal
