#include "quadideal/poly.hpp"

namespace quadideal {

Poly::Poly(OrderPtr order, std::vector<Element> coeffs)
    : order_(std::move(order)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        require_same_order(order_, c.order(), "Poly");
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Element& a) {
    return {a.order(), {a}};
}

Poly Poly::operator+(const Poly& o) const {
    require_same_order(order_, o.order_, "Poly::operator+");
    std::vector<Element> out;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) + o.coeff(i));
    return {order_, std::move(out)};
}

Poly Poly::operator-(const Poly& o) const {
    require_same_order(order_, o.order_, "Poly::operator-");
    std::vector<Element> out;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) - o.coeff(i));
    return {order_, std::move(out)};
}

Poly Poly::operator*(const Poly& o) const {
    require_same_order(order_, o.order_, "Poly::operator*");
    if (is_zero() || o.is_zero()) return Poly(order_);
    std::vector<Element> out(coeffs_.size() + o.coeffs_.size() - 1, Element::zero(order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return {order_, std::move(out)};
}

bool Poly::operator==(const Poly& o) const {
    require_same_order(order_, o.order_, "Poly::operator==");
    return coeffs_ == o.coeffs_;
}

bool Poly::is_integral() const {
    for (const auto& c : coeffs_) {
        if (!c.is_integral()) return false;
    }
    return true;
}

bool Poly::is_monic() const {
    return !is_zero() && coeffs_.back() == Element::one(order_);
}

RatFunc::RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    require_same_order(num.order(), den.order(), "RatFunc");
    if (den.is_zero()) throw domain_error("RatFunc: zero denominator");
}

} // namespace quadideal
