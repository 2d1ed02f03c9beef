#pragma once

#include <vector>

#include "quadideal/element.hpp"

namespace quadideal {

/**
 * Dense polynomial over K, low-to-high coefficients, trailing zeros
 * stripped (the zero polynomial has no coefficients).
 */
class Poly {
public:
    explicit Poly(OrderPtr order) : order_(std::move(order)) {}
    Poly(OrderPtr order, std::vector<Element> coeffs);

    static Poly constant(const Element& a);

    const OrderPtr& order() const { return order_; }
    const std::vector<Element>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Element coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Element::zero(order_);
    }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // True iff every coefficient lies in R.
    bool is_integral() const;
    bool is_monic() const;

private:
    OrderPtr order_;
    std::vector<Element> coeffs_;
};

// f/g in K(X); stored unreduced, valuations are representative-independent.
struct RatFunc {
    Poly num;
    Poly den; // nonzero

    RatFunc(Poly n, Poly d);
};

} // namespace quadideal
