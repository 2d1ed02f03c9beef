#pragma once

#include <string>

#include "quadideal/order.hpp"

namespace quadideal {

/**
 * An element x + y*w of the fraction field K, with exact rational
 * coordinates. For the base ring Z the y coordinate is identically zero.
 * All operations are pure; elements of different rings never mix.
 */
class Element {
public:
    Element(OrderPtr order, Rat x, Rat y);

    static Element zero(const OrderPtr& order) { return {order, Rat(0), Rat(0)}; }
    static Element one(const OrderPtr& order) { return {order, Rat(1), Rat(0)}; }
    static Element omega(const OrderPtr& order) { return {order, Rat(0), Rat(1)}; }
    static Element from_int(const OrderPtr& order, const Int& n) {
        return {order, Rat(n), Rat(0)};
    }
    static Element from_rat(const OrderPtr& order, const Rat& q) {
        return {order, q, Rat(0)};
    }
    // From {1, theta}-coordinates (theta = conductor * w).
    static Element from_theta(const OrderPtr& order, const Rat& u, const Rat& v);

    const OrderPtr& order() const { return order_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    // Coordinates w.r.t. the order basis {1, theta}: (x, y / conductor).
    Rat theta_u() const { return x_; }
    Rat theta_v() const;

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    Element operator-() const { return {order_, -x_, -y_}; }
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const; // o nonzero
    Element inverse() const;                   // nonzero
    Element pow(long e) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element conjugate() const;
    Rat norm() const;  // this * conjugate(this)
    Rat trace() const; // this + conjugate(this)

    // True iff the element lies in the order R, i.e. its {1, theta}
    // coordinates are integers.
    bool is_integral() const;

    std::string str() const;

private:
    OrderPtr order_;
    Rat x_, y_;
};

Element operator*(const Int& n, const Element& e);

} // namespace quadideal
