#include "quadideal/ideal.hpp"

#include <algorithm>

namespace quadideal {

namespace {

// Denominator-clearing scale for a list of theta-coordinate rationals.
Int common_denominator(const std::vector<Rat>& qs) {
    Int d = 1;
    for (const auto& q : qs) d = lcm(d, q.get_den());
    return d;
}

} // namespace

bool IntegralIdeal::is_valid_hnf(const OrderPtr& order, const Int& a, const Int& b,
                                 const Int& c) {
    if (order->is_rational()) return a > 0 && b == 0 && c == 1;
    if (a <= 0 || c <= 0 || b < 0 || b >= a) return false;
    if (!divides(c, a) || !divides(c, b)) return false;
    const Int& t = order->theta_trace();
    const Int& n = order->theta_norm();
    Int second_norm = b * b + t * b * c + n * c * c;
    return divides(a * c, second_norm);
}

IntegralIdeal::IntegralIdeal(OrderPtr order, Int a, Int b, Int c)
    : order_(std::move(order)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!is_valid_hnf(order_, a_, b_, c_)) {
        throw domain_error("IntegralIdeal: not a canonical ideal lattice of " +
                           order_->description());
    }
}

IntegralIdeal IntegralIdeal::unit(const OrderPtr& order) {
    return {order, 1, 0, 1};
}

Int IntegralIdeal::norm() const {
    return order_->is_rational() ? a_ : a_ * c_;
}

Element IntegralIdeal::first_gen() const {
    return Element::from_int(order_, a_);
}

Element IntegralIdeal::second_gen() const {
    if (order_->is_rational()) return first_gen();
    return Element::from_theta(order_, Rat(b_), Rat(c_));
}

bool IntegralIdeal::contains(const Element& x) const {
    require_same_order(order_, x.order(), "IntegralIdeal::contains");
    Rat u = x.theta_u(), v = x.theta_v();
    if (!is_integer(u) || !is_integer(v)) return false;
    if (order_->is_rational()) return divides(a_, to_int(u));
    return lattice_contains(basis(), {to_int(u), to_int(v)});
}

bool IntegralIdeal::contains(const IntegralIdeal& other) const {
    return contains(other.first_gen()) && contains(other.second_gen());
}

bool IntegralIdeal::is_unit_ideal() const {
    return a_ == 1 && (order_->is_rational() || c_ == 1);
}

IntegralIdeal IntegralIdeal::conjugate() const {
    if (order_->is_rational()) return *this;
    const Int& t = order_->theta_trace();
    // conj(b + c*theta) = (b + c*t) - c*theta
    HnfBasis h = hnf_reduce({{a_, 0}, {b_ + c_ * t, -c_}});
    return {order_, h.a, h.b, h.c};
}

bool IntegralIdeal::operator==(const IntegralIdeal& o) const {
    require_same_order(order_, o.order_, "IntegralIdeal::operator==");
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

Element IntegralIdeal::reduce(const Element& x) const {
    require_same_order(order_, x.order(), "IntegralIdeal::reduce");
    if (!x.is_integral()) throw domain_error("IntegralIdeal::reduce: element not in R");
    Int u = to_int(x.theta_u());
    if (order_->is_rational()) {
        return Element::from_int(order_, mod_floor(u, a_));
    }
    Int v = to_int(x.theta_v());
    Int t = floordiv(v, c_);
    u -= t * b_;
    v -= t * c_;
    u = mod_floor(u, a_);
    return Element::from_theta(order_, Rat(u), Rat(v));
}

std::string IntegralIdeal::str() const {
    return FractionalIdeal::from_integral(*this).str();
}

FractionalIdeal::FractionalIdeal(IntegralIdeal lattice, Int den)
    : lattice_(std::move(lattice)), den_(std::move(den)) {
    if (den_ < 1) throw domain_error("FractionalIdeal: denominator must be positive");
    // content of the lattice: c in the quadratic case, a over Z
    const bool rational = order()->is_rational();
    Int content = rational ? lattice_.a() : lattice_.c();
    Int g = gcd(den_, content);
    if (g > 1) {
        if (rational) {
            lattice_ = IntegralIdeal(order(), divexact(lattice_.a(), g), 0, 1);
        } else {
            lattice_ = IntegralIdeal(order(), divexact(lattice_.a(), g),
                                     divexact(lattice_.b(), g), divexact(lattice_.c(), g));
        }
        den_ = divexact(den_, g);
    }
}

FractionalIdeal FractionalIdeal::unit(const OrderPtr& order) {
    return {IntegralIdeal::unit(order), 1};
}

FractionalIdeal FractionalIdeal::from_integral(IntegralIdeal lattice) {
    return {std::move(lattice), 1};
}

FractionalIdeal FractionalIdeal::principal(const Element& x) {
    return from_generators({x});
}

FractionalIdeal FractionalIdeal::from_generators(const std::vector<Element>& gens) {
    if (gens.empty()) throw domain_error("from_generators: empty generator list");
    const OrderPtr& order = gens.front().order();
    std::vector<Element> nz;
    for (const auto& g : gens) {
        require_same_order(order, g.order(), "from_generators");
        if (!g.is_zero()) nz.push_back(g);
    }
    if (nz.empty()) {
        throw domain_error("from_generators: the zero module is not a fractional ideal");
    }

    std::vector<Rat> coords;
    for (const auto& g : nz) {
        coords.push_back(g.theta_u());
        coords.push_back(g.theta_v());
    }
    Int den = common_denominator(coords);

    if (order->is_rational()) {
        Int a = 0;
        for (const auto& g : nz) a = gcd(a, to_int(Rat(den) * g.theta_u()));
        return {IntegralIdeal(order, abs(a), 0, 1), den};
    }

    const Int& t = order->theta_trace();
    const Int& n = order->theta_norm();
    std::vector<Vec2> vectors;
    vectors.reserve(2 * nz.size());
    for (const auto& g : nz) {
        Int u = to_int(Rat(den) * g.theta_u());
        Int v = to_int(Rat(den) * g.theta_v());
        vectors.push_back({u, v});
        // theta * (u + v*theta) = -v*n + (u + v*t)*theta
        vectors.push_back({-v * n, u + v * t});
    }
    HnfBasis h = hnf_reduce(vectors);
    return {IntegralIdeal(order, h.a, h.b, h.c), den};
}

bool FractionalIdeal::is_unit_ideal() const {
    return den_ == 1 && lattice_.is_unit_ideal();
}

Rat FractionalIdeal::norm() const {
    if (order()->is_rational()) return make_rat(lattice_.a(), den_);
    return make_rat(lattice_.norm(), den_ * den_);
}

Element FractionalIdeal::first_gen() const {
    return Element::from_rat(order(), make_rat(lattice_.a(), den_));
}

Element FractionalIdeal::second_gen() const {
    if (order()->is_rational()) return first_gen();
    return Element::from_theta(order(), make_rat(lattice_.b(), den_),
                               make_rat(lattice_.c(), den_));
}

std::vector<Element> FractionalIdeal::gens() const {
    return {first_gen(), second_gen()};
}

bool FractionalIdeal::member(const Element& x) const {
    require_same_order(order(), x.order(), "FractionalIdeal::member");
    Rat u = Rat(den_) * x.theta_u();
    Rat v = Rat(den_) * x.theta_v();
    if (!is_integer(u) || !is_integer(v)) return false;
    if (order()->is_rational()) return divides(lattice_.a(), to_int(u));
    return lattice_contains(lattice_.basis(), {to_int(u), to_int(v)});
}

bool FractionalIdeal::contains(const FractionalIdeal& other) const {
    return member(other.first_gen()) && member(other.second_gen());
}

FractionalIdeal FractionalIdeal::conjugate() const {
    return {lattice_.conjugate(), den_};
}

bool FractionalIdeal::operator==(const FractionalIdeal& o) const {
    return den_ == o.den_ && lattice_ == o.lattice_;
}

FractionalIdeal ideal_add(const FractionalIdeal& i, const FractionalIdeal& j) {
    require_same_order(i.order(), j.order(), "ideal_add");
    const OrderPtr& order = i.order();
    Int den = lcm(i.den(), j.den());
    Int si = divexact(den, i.den()), sj = divexact(den, j.den());
    if (order->is_rational()) {
        Int a = gcd(i.lattice().a() * si, j.lattice().a() * sj);
        return {IntegralIdeal(order, a, 0, 1), den};
    }
    auto scaled = [](const IntegralIdeal& l, const Int& s) {
        return std::vector<Vec2>{{l.a() * s, 0}, {l.b() * s, l.c() * s}};
    };
    std::vector<Vec2> vectors = scaled(i.lattice(), si);
    for (auto& v : scaled(j.lattice(), sj)) vectors.push_back(v);
    HnfBasis h = hnf_reduce(vectors);
    return {IntegralIdeal(order, h.a, h.b, h.c), den};
}

FractionalIdeal ideal_mul(const FractionalIdeal& i, const FractionalIdeal& j) {
    require_same_order(i.order(), j.order(), "ideal_mul");
    const OrderPtr& order = i.order();
    Int den = i.den() * j.den();
    if (order->is_rational()) {
        return {IntegralIdeal(order, i.lattice().a() * j.lattice().a(), 0, 1), den};
    }
    const Int& t = order->theta_trace();
    const Int& n = order->theta_norm();
    const Int &a1 = i.lattice().a(), &b1 = i.lattice().b(), &c1 = i.lattice().c();
    const Int &a2 = j.lattice().a(), &b2 = j.lattice().b(), &c2 = j.lattice().c();
    // Pairwise products of the Z-bases; theta-multiples are already in the
    // span because each factor is a module.
    std::vector<Vec2> vectors = {
        {a1 * a2, 0},
        {a1 * b2, a1 * c2},
        {a2 * b1, a2 * c1},
        {b1 * b2 - c1 * c2 * n, b1 * c2 + b2 * c1 + c1 * c2 * t},
    };
    HnfBasis h = hnf_reduce(vectors);
    return {IntegralIdeal(order, h.a, h.b, h.c), den};
}

FractionalIdeal ideal_intersect(const FractionalIdeal& i, const FractionalIdeal& j) {
    require_same_order(i.order(), j.order(), "ideal_intersect");
    const OrderPtr& order = i.order();
    Int den = lcm(i.den(), j.den());
    Int si = divexact(den, i.den()), sj = divexact(den, j.den());
    if (order->is_rational()) {
        Int a = lcm(i.lattice().a() * si, j.lattice().a() * sj);
        return {IntegralIdeal(order, a, 0, 1), den};
    }
    HnfBasis l1 = {i.lattice().a() * si, i.lattice().b() * si, i.lattice().c() * si};
    HnfBasis l2 = {j.lattice().a() * sj, j.lattice().b() * sj, j.lattice().c() * sj};
    HnfBasis h = lattice_intersect(l1, l2);
    return {IntegralIdeal(order, h.a, h.b, h.c), den};
}

FractionalIdeal ideal_scale(const Element& x, const FractionalIdeal& i) {
    if (x.is_zero()) throw domain_error("ideal_scale: zero scalar");
    std::vector<Element> gens;
    for (const auto& g : i.gens()) gens.push_back(x * g);
    return FractionalIdeal::from_generators(gens);
}

FractionalIdeal ideal_colon(const FractionalIdeal& i, const FractionalIdeal& j) {
    require_same_order(i.order(), j.order(), "ideal_colon");
    // { x | x*j <= i } = intersection over the Z-basis g of j of i*(1/g).
    Element g1 = j.first_gen(), g2 = j.second_gen();
    FractionalIdeal q1 = ideal_scale(g1.inverse(), i);
    if (g2 == g1) return q1;
    return ideal_intersect(q1, ideal_scale(g2.inverse(), i));
}

FractionalIdeal ideal_inverse(const FractionalIdeal& i) {
    return ideal_colon(FractionalIdeal::unit(i.order()), i);
}

FractionalIdeal multiplier_ring(const FractionalIdeal& i) {
    return ideal_colon(i, i);
}

bool is_invertible(const FractionalIdeal& i) {
    return ideal_mul(i, ideal_inverse(i)).is_unit_ideal();
}

Rat ideal_norm(const FractionalIdeal& i) {
    return i.norm();
}

FractionalIdeal ideal_pow(const FractionalIdeal& i, long e) {
    FractionalIdeal base = e < 0 ? ideal_inverse(i) : i;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    FractionalIdeal acc = FractionalIdeal::unit(i.order());
    while (k > 0) {
        if (k & 1ul) acc = ideal_mul(acc, base);
        base = ideal_mul(base, base);
        k >>= 1;
    }
    return acc;
}

std::string FractionalIdeal::str() const {
    std::string s = "[" + to_string(lattice_.a());
    if (!order()->is_rational()) {
        Int cw = lattice_.c() * order()->conductor();
        s += ", " + to_string(lattice_.b()) + "+" + to_string(cw) + "w";
    }
    s += "] den " + to_string(den_);
    return s;
}

} // namespace quadideal
