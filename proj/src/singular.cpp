#include "quadideal/singular.hpp"

#include <algorithm>

namespace quadideal {

namespace {

// Sublattice enumeration for p dividing the conductor. There is no
// valuation at such p, so primes are recognized directly: an index-p
// sublattice closed under theta is maximal, and an index-p^2 one is
// prime iff it is contained in no index-p ideal.
std::vector<PrimeIdealData> enumerate_singular_primes_above(const OrderPtr& order,
                                                            const Int& p) {
    std::vector<IntegralIdeal> index_p;
    for (Int b = 0; b < p; ++b) {
        if (IntegralIdeal::is_valid_hnf(order, p, b, 1)) index_p.emplace_back(order, p, b, 1);
    }
    std::vector<PrimeIdealData> out;
    int e_guess = index_p.size() == 1 ? 2 : 1;
    for (const auto& l : index_p) {
        out.push_back({p, l, 1, e_guess});
    }
    // index-p^2 candidates: (p^2, b, 1) and pR = (p, 0, p)
    std::vector<IntegralIdeal> index_p2;
    for (Int b = 0; b < p * p; ++b) {
        if (IntegralIdeal::is_valid_hnf(order, p * p, b, 1)) {
            index_p2.emplace_back(order, p * p, b, 1);
        }
    }
    index_p2.emplace_back(order, p, 0, p);
    for (const auto& l : index_p2) {
        bool below_maximal = false;
        for (const auto& m : index_p) {
            if (m.contains(l)) {
                below_maximal = true;
                break;
            }
        }
        if (!below_maximal) out.push_back({p, l, 2, 1});
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdealData& x, const PrimeIdealData& y) {
        if (x.ideal.a() != y.ideal.a()) return x.ideal.a() < y.ideal.a();
        return x.ideal.b() < y.ideal.b();
    });
    return out;
}

} // namespace

std::vector<PrimeIdealData> all_primes_above(const OrderPtr& order, const Int& p) {
    if (order->singular_at(p)) return enumerate_singular_primes_above(order, p);
    return primes_above(order, p);
}

std::vector<PrimeIdealData> singular_primes(const OrderPtr& order) {
    std::vector<PrimeIdealData> out;
    if (order->is_rational()) return out;
    for (auto& [p, e] : factor_integer(order->true_conductor())) {
        (void)e;
        for (const PrimeIdealData& P : all_primes_above(order, p)) {
            if (!is_invertible(FractionalIdeal::from_integral(P.ideal))) {
                out.push_back(P);
            }
        }
    }
    return out;
}

std::vector<PrimeIdealData> primes_containing(const IntegralIdeal& i) {
    std::vector<PrimeIdealData> out;
    if (i.is_unit_ideal()) return out;
    for (auto& [p, e] : factor_integer(i.norm())) {
        (void)e;
        for (const PrimeIdealData& P : all_primes_above(i.order(), p)) {
            if (P.ideal.contains(i)) out.push_back(P);
        }
    }
    return out;
}

std::optional<PrimeIdealData> is_primary(const IntegralIdeal& i) {
    if (i.is_unit_ideal()) throw domain_error("is_primary: the unit ideal is not primary");
    auto ps = primes_containing(i);
    if (ps.size() == 1) return ps.front();
    return std::nullopt;
}

IntegralIdeal saturate(const IntegralIdeal& i, const PrimeIdealData& P) {
    require_same_order(i.order(), P.order(), "saturate");
    if (!P.ideal.contains(i)) {
        throw domain_error("saturate: the prime does not contain the ideal");
    }
    std::vector<PrimeIdealData> others;
    for (const auto& q : primes_containing(i)) {
        if (q != P) others.push_back(q);
    }
    if (others.empty()) return i;

    // s = 1 mod P and s = 0 mod every other prime containing i.
    CongruenceSystem sys;
    sys.order = i.order();
    sys.targets.emplace_back(P.ideal, Element::one(i.order()));
    for (const auto& q : others) {
        sys.targets.emplace_back(q.ideal, Element::zero(i.order()));
    }
    Element s = crt_system(sys);

    FractionalIdeal r = FractionalIdeal::unit(i.order());
    FractionalIdeal cur = FractionalIdeal::from_integral(i);
    FractionalIdeal sR = FractionalIdeal::principal(s);
    for (;;) {
        FractionalIdeal next = ideal_intersect(ideal_colon(cur, sR), r);
        if (next == cur) break;
        cur = next;
    }
    if (!cur.is_integral()) throw domain_error("saturate: internal error");
    return cur.lattice();
}

std::vector<PrimaryComponent> primary_decomposition(const IntegralIdeal& i) {
    std::vector<PrimaryComponent> out;
    for (const auto& P : primes_containing(i)) {
        out.push_back({P, saturate(i, P)});
    }
    return out;
}

} // namespace quadideal
