#include "quadideal/approx.hpp"

#include <algorithm>

namespace quadideal {

namespace {

// 1 = e2 + e1 with e2 in i, e1 in j, from the transform rows of the HNF
// of the combined lattices.
std::pair<Element, Element> split_unity(const IntegralIdeal& i, const IntegralIdeal& j) {
    const OrderPtr& order = i.order();
    if (order->is_rational()) {
        Egcd e = egcd(i.a(), j.a());
        if (e.g != 1) throw domain_error("crt: moduli are not comaximal");
        Element e2 = Element::from_int(order, e.u * i.a());
        Element e1 = Element::from_int(order, e.v * j.a());
        return {e2, e1};
    }
    std::vector<Vec2> vectors = {
        {i.a(), 0}, {i.b(), i.c()}, {j.a(), 0}, {j.b(), j.c()}};
    HnfTransform t = hnf_with_transform(vectors);
    if (!(t.basis.a == 1 && t.basis.c == 1)) {
        throw domain_error("crt: moduli are not comaximal");
    }
    // (1, 0) = (a, 0) itself since a = 1 and b in [0, 1) forces b = 0.
    auto part = [&](std::size_t k0, const IntegralIdeal& l) {
        Element g1 = l.first_gen(), g2 = l.second_gen();
        return t.row_a[k0] * g1 + t.row_a[k0 + 1] * g2;
    };
    return {part(0, i), part(2, j)};
}

bool comaximal(const IntegralIdeal& i, const IntegralIdeal& j) {
    FractionalIdeal s = ideal_add(FractionalIdeal::from_integral(i),
                                  FractionalIdeal::from_integral(j));
    return s.is_unit_ideal();
}

IntegralIdeal integral_mul(const IntegralIdeal& i, const IntegralIdeal& j) {
    FractionalIdeal p = ideal_mul(FractionalIdeal::from_integral(i),
                                  FractionalIdeal::from_integral(j));
    return p.lattice();
}

IntegralIdeal integral_pow(const IntegralIdeal& p, const Int& e) {
    FractionalIdeal acc = ideal_pow(FractionalIdeal::from_integral(p),
                                    static_cast<long>(e.get_si()));
    return acc.lattice();
}

} // namespace

Element crt_pair(const IntegralIdeal& i, const IntegralIdeal& j,
                 const Element& a, const Element& b) {
    require_same_order(i.order(), j.order(), "crt_pair");
    auto [e2, e1] = split_unity(i, j);
    Element x = a * e1 + b * e2;
    return integral_mul(i, j).reduce(x);
}

Element crt_system(const CongruenceSystem& sys) {
    if (sys.targets.empty()) return Element::zero(sys.order);
    for (std::size_t i = 0; i < sys.targets.size(); ++i) {
        require_same_order(sys.order, sys.targets[i].first.order(), "crt_system");
        for (std::size_t j = i + 1; j < sys.targets.size(); ++j) {
            if (!comaximal(sys.targets[i].first, sys.targets[j].first)) {
                throw domain_error("crt_system: moduli " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are not comaximal");
            }
        }
    }
    IntegralIdeal mod = sys.targets.front().first;
    Element x = mod.reduce(sys.targets.front().second);
    for (std::size_t k = 1; k < sys.targets.size(); ++k) {
        x = crt_pair(mod, sys.targets[k].first, x, sys.targets[k].second);
        mod = integral_mul(mod, sys.targets[k].first);
    }
    return x;
}

Element approximate(const ApproximationSpec& spec) {
    for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.constraints.size(); ++j) {
            if (spec.constraints[i].prime == spec.constraints[j].prime) {
                throw domain_error("approximate: duplicate primes in constraint list");
            }
        }
    }
    if (spec.constraints.empty()) return Element::zero(spec.order);
    const OrderPtr& order = spec.order;

    // Common denominator d in Z, so every target becomes integral.
    Int d = 1;
    for (const auto& c : spec.constraints) {
        d = lcm(d, c.target.theta_u().get_den());
        d = lcm(d, c.target.theta_v().get_den());
    }
    Element de = Element::from_int(order, d);

    CongruenceSystem sys;
    sys.order = order;
    for (const auto& c : spec.constraints) {
        Int m = c.min_valuation;
        if (d > 1) m += Int(c.prime.ramification) * valuation_int(d, c.prime.p);
        if (m <= 0) continue; // already satisfied by any y in R
        sys.targets.emplace_back(integral_pow(c.prime.ideal, m), de * c.target);
    }
    // Keep v_Q(y/d) >= 0 at the other primes dividing d.
    if (d > 1) {
        for (auto& [p, e] : factor_integer(d)) {
            for (const PrimeIdealData& q : primes_above(order, p)) {
                bool constrained = false;
                for (const auto& c : spec.constraints) {
                    if (c.prime == q) {
                        constrained = true;
                        break;
                    }
                }
                if (constrained) continue;
                Int m = Int(q.ramification) * Int(e);
                sys.targets.emplace_back(integral_pow(q.ideal, m), Element::zero(order));
            }
        }
    }

    Element y = sys.targets.empty() ? Element::zero(order) : crt_system(sys);
    Element x = y / de;

    // The construction is self-checking.
    for (const auto& c : spec.constraints) {
        Val v = element_valuation(x - c.target, c.prime);
        if (!v.is_infinite() && v.finite() < c.min_valuation) {
            throw domain_error("approximate: postcondition failed");
        }
    }
    return x;
}

Element approximate_exact(const OrderPtr& order,
                          const std::vector<PrimeIdealData>& primes,
                          const std::vector<Int>& exponents) {
    if (primes.size() != exponents.size()) {
        throw domain_error("approximate_exact: mismatched lengths");
    }
    if (primes.empty()) return Element::one(order);
    ApproximationSpec spec;
    spec.order = order;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Element pi = uniformizer_at(primes[i]);
        Element target = pi.pow(static_cast<long>(exponents[i].get_si()));
        spec.constraints.push_back({primes[i], target, exponents[i] + 1});
    }
    Element x = approximate(spec);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Val v = element_valuation(x, primes[i]);
        if (v.is_infinite() || v.finite() != exponents[i]) {
            throw domain_error("approximate_exact: postcondition failed");
        }
    }
    return x;
}

std::pair<Element, Element> two_generators(const IntegralIdeal& i) {
    const OrderPtr& order = i.order();
    if (order->is_rational()) {
        Element g = Element::from_int(order, i.a());
        return {g, g};
    }
    if (!order->is_maximal()) {
        throw unsupported_error("two_generators: needs a Dedekind instance (maximal order)");
    }
    Factorization f = factor_ideal(FractionalIdeal::from_integral(i));
    if (f.factors.empty()) {
        Element one = Element::one(order);
        return {one, one};
    }
    std::vector<PrimeIdealData> ps;
    std::vector<Int> es;
    for (const auto& [P, e] : f.factors) {
        ps.push_back(P);
        es.push_back(e);
    }
    Element a = approximate_exact(order, ps, es);

    // b matches I's valuations at every prime dividing aR.
    Factorization fa = factor_ideal(FractionalIdeal::principal(a));
    std::vector<PrimeIdealData> qs;
    std::vector<Int> bs;
    for (const auto& [Q, e] : fa.factors) {
        (void)e;
        qs.push_back(Q);
        bs.push_back(ideal_valuation(FractionalIdeal::from_integral(i), Q));
    }
    Element b = qs.empty() ? Element::one(order) : approximate_exact(order, qs, bs);
    return {a, b};
}

} // namespace quadideal
