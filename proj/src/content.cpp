#include "quadideal/content.hpp"

namespace quadideal {

FractionalIdeal content(const Poly& f) {
    if (f.is_zero()) throw domain_error("content: zero polynomial");
    return FractionalIdeal::from_generators(f.coeffs());
}

Val poly_valuation(const Poly& f, const PrimeIdealData& P) {
    if (f.is_zero()) return Val::infinity();
    bool have = false;
    Int best = 0;
    for (const auto& c : f.coeffs()) {
        Val v = element_valuation(c, P);
        if (v.is_infinite()) continue;
        if (!have || v.finite() < best) {
            best = v.finite();
            have = true;
        }
    }
    return Val(best);
}

Val ratfunc_valuation(const RatFunc& h, const PrimeIdealData& P) {
    if (h.num.is_zero()) return Val::infinity();
    Val vn = poly_valuation(h.num, P);
    Val vd = poly_valuation(h.den, P);
    return Val(vn.finite() - vd.finite());
}

FractionalIdeal gauss_mul(const FractionalIdeal& i, const FractionalIdeal& j) {
    require_same_order(i.order(), j.order(), "gauss_mul");
    const OrderPtr& order = i.order();
    if (!order->is_rational() && !order->is_maximal()) {
        throw unsupported_error("gauss_mul: Gauss's lemma needs a Dedekind instance");
    }
    // Basis polynomial of the canonical generators: g1 + g2 X.
    Poly f(order, {i.first_gen(), i.second_gen()});
    Poly g(order, {j.first_gen(), j.second_gen()});
    return content(f * g);
}

} // namespace quadideal
