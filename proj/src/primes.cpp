#include "quadideal/primes.hpp"

#include <algorithm>

namespace quadideal {

namespace {

// Root of X^2 - tX + n mod p encoded in the prime's HNF entry b: the
// ideal is (p, b + theta) with b = -r mod p.
Int root_of(const PrimeIdealData& P) {
    return mod_floor(-P.ideal.b(), P.p);
}

// Hensel lift of a simple root r0 of q(X) = X^2 - tX + n to a root mod
// p^prec (q'(r0) invertible mod p).
Int lift_root(const OrderPtr& order, const Int& p, Int r, long prec) {
    const Int& t = order->theta_trace();
    const Int& n = order->theta_norm();
    long have = 1;
    while (have < prec) {
        have = std::min(2 * have, prec);
        Int next = int_pow(p, static_cast<unsigned long>(have));
        Int q = r * r - t * r + n;
        Int dq = 2 * r - t;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), dq.get_mpz_t(), next.get_mpz_t()) == 0) {
            throw domain_error("lift_root: derivative not invertible");
        }
        r = mod_floor(r - q * inv, next);
    }
    return r;
}

// v_P(u + v*theta) for integer coordinates, not both zero.
Int integral_valuation(const Int& u, const Int& v, const PrimeIdealData& P) {
    const Int& p = P.p;
    auto vp = [&p](const Int& z) { return Int(valuation_int(z, p)); };

    if (P.residue_degree == 2) {
        // inert: p^k R has coordinates divisible by p^k
        if (u == 0) return vp(v);
        if (v == 0) return vp(u);
        return std::min(vp(u), vp(v));
    }

    const OrderPtr& order = P.order();
    if (P.ramification == 2) {
        // ramified: strip rational content, then P-membership decides the
        // odd part (v_P(z') is 0 or 1 because P^2 = pR)
        Int s = (u == 0) ? vp(v) : (v == 0) ? vp(u) : std::min(vp(u), vp(v));
        Int ps = int_pow(p, s.get_ui());
        Int u1 = divexact(u, ps), v1 = divexact(v, ps);
        Int r = root_of(P);
        bool in_p = divides(p, u1 + v1 * r);
        return 2 * s + (in_p ? 1 : 0);
    }

    // split: evaluate against the p-adic root with enough precision
    const Int& t = order->theta_trace();
    const Int& n = order->theta_norm();
    Int nrm = abs(u * u + t * u * v + n * v * v);
    long bound = valuation_int(nrm, p);
    if (bound == 0) return Int(0); // z is in P only if p divides N(z)
    Int lifted = lift_root(order, p, root_of(P), bound + 1);
    Int w = u + v * lifted;
    return vp(w);
}

} // namespace

std::vector<PrimeIdealData> primes_above(const OrderPtr& order, const Int& p) {
    if (p < 2 || !is_probable_prime(p)) {
        throw domain_error("primes_above: " + to_string(p) + " is not a prime");
    }
    if (order->is_rational()) {
        return {{p, IntegralIdeal(order, p, 0, 1), 1, 1}};
    }
    if (order->singular_at(p)) {
        throw unsupported_error("primes_above: " + to_string(p) +
                                " is a singular prime of " + order->description());
    }
    const Int& t = order->theta_trace();
    const Int& n = order->theta_norm();

    auto prime_at_root = [&](const Int& r, int e) {
        return PrimeIdealData{p, IntegralIdeal(order, p, mod_floor(-r, p), 1), 1, e};
    };
    auto inert = [&]() {
        return PrimeIdealData{p, IntegralIdeal(order, p, 0, p), 2, 1};
    };

    std::vector<PrimeIdealData> out;
    if (p == 2) {
        if (divides(2, t)) {
            out.push_back(prime_at_root(mod_floor(n, 2), 2));
        } else if (divides(2, n)) {
            out.push_back(prime_at_root(0, 1));
            out.push_back(prime_at_root(1, 1));
        } else {
            out.push_back(inert());
        }
    } else {
        Int disc = t * t - 4 * n;
        int ls = divides(p, disc) ? 0 : legendre(disc, p);
        if (ls == 0) {
            Int inv2 = mod_floor((p + 1) / 2 * t, p); // t/2 mod p
            out.push_back(prime_at_root(inv2, 2));
        } else if (ls == 1) {
            Int s = *sqrt_mod(disc, p);
            Int half = (p + 1) / 2;
            out.push_back(prime_at_root(mod_floor((t + s) * half, p), 1));
            out.push_back(prime_at_root(mod_floor((t - s) * half, p), 1));
        } else {
            out.push_back(inert());
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdealData& x, const PrimeIdealData& y) {
        return x.ideal.b() < y.ideal.b();
    });
    return out;
}

Val element_valuation(const Element& x, const PrimeIdealData& P) {
    require_same_order(x.order(), P.order(), "element_valuation");
    if (x.is_zero()) return Val::infinity();
    if (P.is_singular()) {
        throw unsupported_error("element_valuation: no discrete valuation at a singular prime");
    }
    if (x.order()->is_rational()) {
        return Val(Int(valuation_rat(x.x(), P.p)));
    }
    Rat u = x.theta_u(), v = x.theta_v();
    Int d = lcm(u.get_den(), v.get_den());
    Int zu = to_int(Rat(d) * u), zv = to_int(Rat(d) * v);
    Int val = integral_valuation(zu, zv, P);
    if (d > 1) val -= Int(P.ramification) * valuation_int(d, P.p);
    return Val(val);
}

Int ideal_valuation(const FractionalIdeal& i, const PrimeIdealData& P) {
    require_same_order(i.order(), P.order(), "ideal_valuation");
    if (P.is_singular()) {
        throw unsupported_error("ideal_valuation: no discrete valuation at a singular prime");
    }
    if (i.order()->is_rational()) {
        long v = valuation_int(i.lattice().a(), P.p);
        if (i.den() > 1) v -= valuation_int(i.den(), P.p);
        return Int(v);
    }
    const IntegralIdeal& l = i.lattice();
    Int va = integral_valuation(l.a(), 0, P);
    Int vb = integral_valuation(l.b(), l.c(), P);
    Int val = std::min(va, vb);
    if (i.den() > 1) val -= Int(P.ramification) * valuation_int(i.den(), P.p);
    return val;
}

bool Factorization::operator==(const Factorization& o) const {
    return factors == o.factors;
}

Factorization factor_ideal(const FractionalIdeal& i) {
    const OrderPtr& order = i.order();
    std::vector<Int> ps;
    for (auto& [p, e] : factor_integer(i.lattice().norm())) {
        (void)e;
        ps.push_back(p);
    }
    for (auto& [p, e] : factor_integer(i.den())) {
        (void)e;
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    }
    std::sort(ps.begin(), ps.end());

    Factorization out;
    for (const Int& p : ps) {
        if (order->singular_at(p)) {
            throw unsupported_error("factor_ideal: singular prime " + to_string(p) +
                                    "; use primary_decomposition instead");
        }
        for (const PrimeIdealData& P : primes_above(order, p)) {
            Int k = ideal_valuation(i, P);
            if (k != 0) out.factors.emplace_back(P, k);
        }
    }
    return out;
}

FractionalIdeal reconstitute(const OrderPtr& order, const Factorization& f) {
    FractionalIdeal acc = FractionalIdeal::unit(order);
    for (const auto& [P, e] : f.factors) {
        acc = ideal_mul(acc, ideal_pow(FractionalIdeal::from_integral(P.ideal),
                                       static_cast<long>(e.get_si())));
    }
    return acc;
}

bool divides(const FractionalIdeal& i, const FractionalIdeal& j) {
    return i.contains(j);
}

FractionalIdeal ideal_gcd(const FractionalIdeal& i, const FractionalIdeal& j) {
    return ideal_add(i, j);
}

FractionalIdeal ideal_lcm(const FractionalIdeal& i, const FractionalIdeal& j) {
    return ideal_intersect(i, j);
}

Element uniformizer_at(const PrimeIdealData& P) {
    if (P.is_singular()) {
        throw unsupported_error("uniformizer_at: singular prime has no uniformizer");
    }
    const OrderPtr& order = P.order();
    Element g2 = P.ideal.second_gen();
    Element pe = Element::from_int(order, P.p);
    for (const Element& cand : {g2, pe, g2 + pe}) {
        Val v = element_valuation(cand, P);
        if (!v.is_infinite() && v.finite() == 1) return cand;
    }
    throw domain_error("uniformizer_at: no uniformizer found");
}

} // namespace quadideal
