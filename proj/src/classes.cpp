#include "quadideal/classes.hpp"

#include <algorithm>

namespace quadideal {

namespace {

void require_enumerable(const OrderPtr& order, const char* what) {
    if (!order->is_rational() && !order->is_imaginary()) {
        throw unsupported_error(std::string(what) +
                                ": norm-form enumeration needs Z or an imaginary quadratic order");
    }
}

} // namespace

std::vector<Element> elements_of_norm(const IntegralIdeal& lattice, const Int& n) {
    const OrderPtr& order = lattice.order();
    require_enumerable(order, "elements_of_norm");
    std::vector<Element> out;
    if (n <= 0) return out;
    if (order->is_rational()) {
        if (divides(lattice.a(), n)) {
            out.push_back(Element::from_int(order, n));
            out.push_back(Element::from_int(order, -n));
        }
        return out;
    }
    const Int& t = order->theta_trace();
    const Int& nn = order->theta_norm();
    Int disc_abs = 4 * nn - t * t; // positive for imaginary quadratic
    // N(u + v*theta) = (u + vt/2)^2 + v^2 |disc|/4 = n bounds v.
    Int vmax = isqrt(4 * n / disc_abs);
    auto push_candidates = [&](const Int& v) {
        // u^2 + t*v*u + (nn*v^2 - n) = 0
        Int du = t * t * v * v - 4 * (nn * v * v - n);
        Int s;
        if (!is_square(du, s)) return;
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            Int num = -t * v + (sign == 0 ? s : -s);
            if (!divides(2, num)) continue;
            Int u = divexact(num, 2);
            if (lattice_contains(lattice.basis(), {u, v})) {
                out.push_back(Element::from_theta(order, Rat(u), Rat(v)));
            }
        }
    };
    for (Int v = 0; v <= vmax; ++v) {
        push_candidates(v);
        if (v != 0) push_candidates(-v);
    }
    return out;
}

std::optional<Element> is_principal(const IntegralIdeal& i) {
    require_enumerable(i.order(), "is_principal");
    if (i.order()->is_rational()) return Element::from_int(i.order(), i.a());
    Int n = i.norm();
    for (const Element& z : elements_of_norm(i, n)) {
        // z in I with |N(z)| = [R : I] forces zR = I.
        if (FractionalIdeal::principal(z) == FractionalIdeal::from_integral(i)) return z;
    }
    return std::nullopt;
}

bool equivalent(const IntegralIdeal& i, const IntegralIdeal& j) {
    require_same_order(i.order(), j.order(), "equivalent");
    require_enumerable(i.order(), "equivalent");
    if (i.order()->is_rational()) return true;
    FractionalIdeal fi = FractionalIdeal::from_integral(i);
    FractionalIdeal fj = FractionalIdeal::from_integral(j);
    // Any witness x with xI = J lies in (J : I) and has |N(x)| = N(J)/N(I).
    FractionalIdeal q = ideal_colon(fj, fi);
    Rat target = make_rat(j.norm() * q.den() * q.den(), i.norm());
    if (!is_integer(target)) return false;
    for (const Element& z : elements_of_norm(q.lattice(), to_int(target))) {
        Element x(i.order(), z.x() / Rat(q.den()), z.y() / Rat(q.den()));
        if (ideal_scale(x, fi) == fj) return true;
    }
    return false;
}

std::vector<IntegralIdeal> ideals_of_norm(const OrderPtr& order, const Int& n) {
    std::vector<IntegralIdeal> out;
    if (n < 1) return out;
    if (order->is_rational()) {
        out.emplace_back(order, n, 0, 1);
        return out;
    }
    // norm = a*c with c | a, i.e. c^2 | n; b multiples of c below a.
    for (Int c = 1; c * c <= n; ++c) {
        if (!divides(c * c, n)) continue;
        Int a = divexact(n, c);
        if (!divides(c, a)) continue;
        for (Int b = 0; b < a; b += c) {
            if (IntegralIdeal::is_valid_hnf(order, a, b, c)) out.emplace_back(order, a, b, c);
        }
    }
    std::sort(out.begin(), out.end(), [](const IntegralIdeal& x, const IntegralIdeal& y) {
        if (x.a() != y.a()) return x.a() < y.a();
        if (x.b() != y.b()) return x.b() < y.b();
        return x.c() < y.c();
    });
    return out;
}

std::vector<IntegralIdeal> ideals_up_to_norm(const OrderPtr& order, const Int& bound) {
    std::vector<IntegralIdeal> out;
    for (Int n = 1; n <= bound; ++n) {
        for (auto& i : ideals_of_norm(order, n)) out.push_back(std::move(i));
    }
    return out;
}

std::vector<IdealClass> class_monoid(const OrderPtr& order, const Int& norm_bound) {
    if (norm_bound < 1) throw domain_error("class_monoid: norm bound must be >= 1");
    require_enumerable(order, "class_monoid");
    std::vector<IdealClass> classes;
    for (const IntegralIdeal& i : ideals_up_to_norm(order, norm_bound)) {
        bool known = false;
        for (const IdealClass& c : classes) {
            if (equivalent(c.representative, i)) {
                known = true;
                break;
            }
        }
        if (!known) classes.push_back({i});
    }
    return classes;
}

IntegralIdeal principal_complement(const IntegralIdeal& i) {
    require_enumerable(i.order(), "principal_complement");
    FractionalIdeal fi = FractionalIdeal::from_integral(i);
    if (!is_invertible(fi)) {
        throw domain_error("principal_complement: ideal is not invertible");
    }
    IntegralIdeal conj = i.conjugate();
    if (is_principal(ideal_mul(fi, FractionalIdeal::from_integral(conj)).lattice())) {
        return conj;
    }
    // Power-cycle fallback: the invertible classes form a finite group,
    // so some power of I is principal.
    FractionalIdeal acc = fi;
    for (int k = 2; k <= 64; ++k) {
        acc = ideal_mul(acc, fi);
        if (acc.is_integral() && is_principal(acc.lattice())) {
            return ideal_pow(fi, k - 1).lattice();
        }
    }
    throw domain_error("principal_complement: no principal power found");
}

} // namespace quadideal
