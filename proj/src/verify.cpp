#include "quadideal/verify.hpp"

#include <algorithm>
#include <functional>

namespace quadideal {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

long rnd_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

InstanceProfile default_profile(const OrderPtr& order, std::uint64_t seed) {
    InstanceProfile p;
    p.order = order;
    p.seed = seed;
    for (long q : {2L, 3L, 5L, 7L}) {
        for (const PrimeIdealData& P : all_primes_above(order, q)) {
            p.prime_pool.push_back(P);
        }
    }
    return p;
}

Element random_element(const InstanceProfile& profile, std::mt19937_64& rng,
                       bool allow_denominator) {
    const long h = profile.limits.max_height;
    for (;;) {
        Int xn = rnd_range(rng, -h, h);
        Int yn = profile.order->is_rational() ? 0 : rnd_range(rng, -h, h);
        Int d = allow_denominator ? rnd_range(rng, 1, 6) : 1;
        if (xn == 0 && yn == 0) continue;
        return {profile.order, make_rat(xn, d), make_rat(yn, d)};
    }
}

FractionalIdeal random_ideal(const InstanceProfile& profile, std::mt19937_64& rng) {
    if (profile.prime_pool.empty()) throw domain_error("random_ideal: empty prime pool");
    FractionalIdeal acc = FractionalIdeal::principal(random_element(profile, rng, true));
    const int picks = static_cast<int>(rnd_range(rng, 0, 2));
    for (int k = 0; k < picks; ++k) {
        const auto& P = profile.prime_pool[rng() % profile.prime_pool.size()];
        long e = rnd_range(rng, -profile.limits.max_exponent, profile.limits.max_exponent);
        if (e == 0) continue;
        acc = ideal_mul(acc, ideal_pow(FractionalIdeal::from_integral(P.ideal), e));
    }
    return acc;
}

IntegralIdeal random_integral_ideal(const InstanceProfile& profile, std::mt19937_64& rng) {
    for (;;) {
        Element g = random_element(profile, rng, false);
        FractionalIdeal acc = FractionalIdeal::principal(g);
        const int picks = static_cast<int>(rnd_range(rng, 0, 2));
        for (int k = 0; k < picks; ++k) {
            const auto& P = profile.prime_pool[rng() % profile.prime_pool.size()];
            long e = rnd_range(rng, 0, profile.limits.max_exponent);
            acc = ideal_mul(acc, ideal_pow(FractionalIdeal::from_integral(P.ideal), e));
        }
        if (acc.is_integral()) return acc.lattice();
    }
}

FractionalIdeal random_ideal(const InstanceProfile& profile) {
    std::mt19937_64 rng(profile.seed);
    return random_ideal(profile, rng);
}

std::string ideal_literal(const FractionalIdeal& i) {
    return "<" + i.first_gen().str() + ", " + i.second_gen().str() + ">";
}

std::string ideal_literal(const IntegralIdeal& i) {
    return ideal_literal(FractionalIdeal::from_integral(i));
}

namespace {

// Per-case harness: a case passes iff every law checked in it holds.
class Runner {
public:
    Runner(SuiteReport& report, const InstanceProfile& profile)
        : report_(report), profile_(profile) {}

    void run_cases(int cases, const std::function<void(int, std::mt19937_64&)>& body) {
        std::mt19937_64 rng(profile_.seed ^ fnv1a(report_.suite));
        for (int k = 0; k < cases; ++k) {
            case_failed_ = false;
            case_skipped_ = false;
            body(k, rng);
            report_.cases += 1;
            if (case_failed_) {
                report_.failed += 1;
            } else if (case_skipped_) {
                report_.skipped += 1;
            } else {
                report_.passed += 1;
            }
        }
    }

    void check(int case_index, bool ok, const std::string& law,
               const std::function<std::string()>& witness) {
        if (ok) return;
        case_failed_ = true;
        if (std::find(report_.failed_laws.begin(), report_.failed_laws.end(), law) ==
            report_.failed_laws.end()) {
            report_.failed_laws.push_back(law);
        }
        if (report_.failures.empty()) {
            report_.failures.push_back({case_index, law, witness()});
        }
    }

    void skip() { case_skipped_ = true; }

    const InstanceProfile& profile() const { return profile_; }

private:
    SuiteReport& report_;
    const InstanceProfile& profile_;
    bool case_failed_ = false;
    bool case_skipped_ = false;
};

std::vector<PrimeIdealData> invertible_pool(const InstanceProfile& p) {
    std::vector<PrimeIdealData> out;
    for (const auto& P : p.prime_pool) {
        if (!P.is_singular()) out.push_back(P);
    }
    return out;
}

// Random target in K whose denominator avoids the singular primes, so
// that the approximation machinery stays within its hypotheses.
Element random_target(const InstanceProfile& prof, std::mt19937_64& rng) {
    for (;;) {
        Element x = random_element(prof, rng, true);
        Int d = lcm(x.x().get_den(), x.y().get_den());
        if (prof.order->is_rational() || gcd(d, prof.order->true_conductor()) == 1) return x;
    }
}

// Deterministic menu of small ideals: pool primes and small principal
// ideals. The canonical singular-order witnesses appear among the
// structured cases of each suite.
std::vector<FractionalIdeal> ideal_menu(const InstanceProfile& p) {
    std::vector<FractionalIdeal> menu;
    const OrderPtr& order = p.order;
    for (const auto& P : p.prime_pool) {
        menu.push_back(FractionalIdeal::from_integral(P.ideal));
    }
    for (long n : {2L, 3L, 4L}) {
        menu.push_back(FractionalIdeal::principal(Element::from_int(order, n)));
    }
    return menu;
}

FractionalIdeal pick(const std::vector<FractionalIdeal>& menu, std::size_t k) {
    return menu[k % menu.size()];
}

bool is_dedekind(const OrderPtr& order) {
    return order->is_rational() || order->is_maximal();
}

Val val_of(const Element& x, const PrimeIdealData& P) { return element_valuation(x, P); }

// ---- suites ------------------------------------------------------------

void suite_valuation_laws(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto pool = invertible_pool(prof);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        Element x = random_element(prof, rng, true);
        Element y = random_element(prof, rng, true);
        auto wit = [&] { return "x=" + x.str() + ", y=" + y.str(); };
        for (const auto& P : pool) {
            Val vx = val_of(x, P), vy = val_of(y, P);
            Val vxy = val_of(x * y, P);
            r.check(k, vxy.finite() == vx.finite() + vy.finite(), "v(xy) = v(x) + v(y)", wit);
            Element s = x + y;
            Val vs = val_of(s, P);
            Int lo = std::min(vx.finite(), vy.finite());
            r.check(k, vs.is_infinite() || vs.finite() >= lo, "v(x+y) >= min(v(x), v(y))", wit);
            if (vx.finite() != vy.finite()) {
                r.check(k, !vs.is_infinite() && vs.finite() == lo,
                        "v(x+y) = min when v(x) != v(y)", wit);
            }
            r.check(k, val_of(Element::one(prof.order), P).finite() == 0, "v(1) = 0", wit);
            r.check(k, val_of(Element::zero(prof.order), P).is_infinite(), "v(0) = infinity",
                    wit);
            // a in P iff v(a) > 0, for integral a
            if (x.is_integral()) {
                bool in_p = P.ideal.contains(x);
                r.check(k, in_p == (vx.finite() > 0), "v(a) > 0 iff a in P", wit);
            }
        }
    });
}

void suite_monoid_laws(Runner& r, int cases) {
    const auto& prof = r.profile();
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        FractionalIdeal i = random_ideal(prof, rng);
        FractionalIdeal j = random_ideal(prof, rng);
        FractionalIdeal l = random_ideal(prof, rng);
        FractionalIdeal unit = FractionalIdeal::unit(prof.order);
        auto wit = [&] {
            return "I=" + ideal_literal(i) + ", J=" + ideal_literal(j) + ", K=" + ideal_literal(l);
        };
        r.check(k, ideal_mul(i, j) == ideal_mul(j, i), "IJ = JI", wit);
        r.check(k, ideal_mul(ideal_mul(i, j), l) == ideal_mul(i, ideal_mul(j, l)),
                "(IJ)K = I(JK)", wit);
        r.check(k, ideal_mul(i, unit) == i, "IR = I", wit);
        r.check(k, ideal_add(i, j) == ideal_add(j, i), "I+J = J+I", wit);
        r.check(k, ideal_add(ideal_add(i, j), l) == ideal_add(i, ideal_add(j, l)),
                "(I+J)+K = I+(J+K)", wit);
        r.check(k, ideal_mul(i, ideal_add(j, l)) == ideal_add(ideal_mul(i, j), ideal_mul(i, l)),
                "I(J+K) = IJ + IK", wit);
        // monotonicity with I <= I' = I + K
        FractionalIdeal isup = ideal_add(i, l);
        r.check(k, ideal_add(isup, j).contains(ideal_add(i, j)), "monotone sum", wit);
        r.check(k, ideal_mul(isup, j).contains(ideal_mul(i, j)), "monotone product", wit);
        r.check(k, ideal_intersect(isup, j).contains(ideal_intersect(i, j)),
                "monotone intersection", wit);
        FractionalIdeal inv = ideal_inverse(i);
        r.check(k, unit.contains(ideal_mul(i, inv)), "I * I^{-1} <= R", wit);
        FractionalIdeal mult = multiplier_ring(i);
        r.check(k, mult.member(Element::one(prof.order)), "R <= R(I)", wit);
        r.check(k, ideal_inverse(ideal_mul(i, inv)).contains(mult), "R(I) <= (I I^{-1})^{-1}",
                wit);
    });
}

void suite_invertibility(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto menu = ideal_menu(prof);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        FractionalIdeal i = static_cast<std::size_t>(k) < menu.size()
                                ? pick(menu, static_cast<std::size_t>(k))
                                : random_ideal(prof, rng);
        auto wit = [&] { return "I=" + ideal_literal(i); };
        r.check(k, is_invertible(i), "I * I^{-1} = R", wit);
        r.check(k, multiplier_ring(i) == FractionalIdeal::unit(prof.order), "R(I) = R", wit);
    });
}

void suite_factorization(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto menu = ideal_menu(prof);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        FractionalIdeal i = static_cast<std::size_t>(k) < menu.size()
                                ? pick(menu, static_cast<std::size_t>(k))
                                : random_ideal(prof, rng);
        auto wit = [&] { return "I=" + ideal_literal(i); };
        try {
            Factorization f = factor_ideal(i);
            r.check(k, reconstitute(prof.order, f) == i, "product of P^{v_P(I)} = I", wit);
            for (const auto& [P, e] : f.factors) {
                r.check(k, ideal_valuation(i, P) == e, "exponent = v_P(I)", wit);
            }
        } catch (const unsupported_error&) {
            r.check(k, false, "prime factorization exists", wit);
        }
    });
}

void suite_divisibility(Runner& r, int cases) {
    const auto& prof = r.profile();
    // structured containment pairs: (P, p^2 R) hits the canonical
    // singular-order witness
    std::vector<std::pair<FractionalIdeal, FractionalIdeal>> structured;
    for (const auto& P : prof.prime_pool) {
        structured.emplace_back(
            FractionalIdeal::from_integral(P.ideal),
            FractionalIdeal::principal(Element::from_int(prof.order, P.p * P.p)));
    }
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        FractionalIdeal i = FractionalIdeal::unit(prof.order);
        FractionalIdeal j = i;
        if (static_cast<std::size_t>(k) < structured.size()) {
            i = structured[static_cast<std::size_t>(k)].first;
            j = structured[static_cast<std::size_t>(k)].second;
        } else if (k % 2 == 0) {
            i = random_ideal(prof, rng);
            j = ideal_mul(i, FractionalIdeal::from_integral(random_integral_ideal(prof, rng)));
        } else {
            i = random_ideal(prof, rng);
            j = ideal_intersect(i, random_ideal(prof, rng));
        }
        auto wit = [&] { return "I=" + ideal_literal(i) + ", J=" + ideal_literal(j); };
        r.check(k, divides(i, j), "J <= I", wit);
        // to contain is to divide: exhibit integral C with IC = J
        FractionalIdeal c = ideal_mul(ideal_inverse(i), j);
        bool have_quotient = c.is_integral() && ideal_mul(i, c) == j;
        if (!have_quotient) {
            // certify absence by enumeration: any C with IC = J satisfies
            // J <= C, so its norm is at most norm(J)
            Rat nj = j.norm();
            if (i.is_integral() && j.is_integral() && is_integer(nj) && to_int(nj) <= 400) {
                for (Int n = 1; n <= to_int(nj) && !have_quotient; ++n) {
                    for (const auto& cand : ideals_of_norm(prof.order, n)) {
                        if (ideal_mul(i, FractionalIdeal::from_integral(cand)) == j) {
                            have_quotient = true;
                            break;
                        }
                    }
                }
                r.check(k, have_quotient, "to contain is to divide", wit);
            } else {
                r.skip();
            }
        }
        if (is_dedekind(prof.order)) {
            r.check(k, ideal_mul(ideal_add(i, j), ideal_intersect(i, j)) == ideal_mul(i, j),
                    "(I+J)(I and J) = IJ", wit);
        } else {
            r.check(k, ideal_mul(i, j).contains(ideal_mul(ideal_add(i, j), ideal_intersect(i, j))),
                    "(I+J)(I and J) <= IJ", wit);
        }
    });
}

void suite_cancellation(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto menu = ideal_menu(prof);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        std::size_t m = menu.size();
        FractionalIdeal i = static_cast<std::size_t>(k) < m * m
                                ? pick(menu, static_cast<std::size_t>(k) / m)
                                : random_ideal(prof, rng);
        FractionalIdeal j = static_cast<std::size_t>(k) < m * m
                                ? pick(menu, static_cast<std::size_t>(k) % m)
                                : random_ideal(prof, rng);
        auto wit = [&] {
            return "I=" + ideal_literal(i) + ", J=" + ideal_literal(j) +
                   ", (IJ:I)=" + ideal_literal(ideal_colon(ideal_mul(i, j), i));
        };
        // (IJ : I) = J' always satisfies I J' = I J; J' != J witnesses a
        // cancellation failure
        r.check(k, ideal_colon(ideal_mul(i, j), i) == j, "(IJ : I) = J", wit);
    });
}

void suite_modular_law(Runner& r, int cases) {
    const auto& prof = r.profile();
    const bool full = is_dedekind(prof.order);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        FractionalIdeal i1 = random_ideal(prof, rng);
        FractionalIdeal i2 = random_ideal(prof, rng);
        FractionalIdeal j = random_ideal(prof, rng);
        auto wit = [&] {
            return "I1=" + ideal_literal(i1) + ", I2=" + ideal_literal(i2) +
                   ", J=" + ideal_literal(j);
        };
        FractionalIdeal lhs1 = ideal_intersect(ideal_add(i1, i2), j);
        FractionalIdeal rhs1 = ideal_add(ideal_intersect(i1, j), ideal_intersect(i2, j));
        r.check(k, lhs1.contains(rhs1), "(I1+I2) and J >= (I1 and J)+(I2 and J)", wit);
        if (full) r.check(k, lhs1 == rhs1, "(I1+I2) and J = (I1 and J)+(I2 and J)", wit);

        FractionalIdeal lhs2 = ideal_add(ideal_intersect(i1, i2), j);
        FractionalIdeal rhs2 = ideal_intersect(ideal_add(i1, j), ideal_add(i2, j));
        r.check(k, rhs2.contains(lhs2), "(I1 and I2)+J <= (I1+J) and (I2+J)", wit);
        if (full) r.check(k, lhs2 == rhs2, "(I1 and I2)+J = (I1+J) and (I2+J)", wit);

        FractionalIdeal lhs3 = ideal_mul(ideal_intersect(i1, i2), j);
        FractionalIdeal rhs3 = ideal_intersect(ideal_mul(i1, j), ideal_mul(i2, j));
        r.check(k, rhs3.contains(lhs3), "(I1 and I2)J <= I1J and I2J", wit);
        if (full) r.check(k, lhs3 == rhs3, "(I1 and I2)J = I1J and I2J", wit);
    });
}

void suite_crt_approx(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto pool = prof.prime_pool;
    auto inv_pool = invertible_pool(prof);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        if (pool.size() >= 2) {
            std::size_t ia = rng() % pool.size();
            std::size_t ib = rng() % pool.size();
            if (ib == ia) ib = (ia + 1) % pool.size();
            long e1 = rnd_range(rng, 1, 3), e2 = rnd_range(rng, 1, 3);
            IntegralIdeal m1 =
                ideal_pow(FractionalIdeal::from_integral(pool[ia].ideal), e1).lattice();
            IntegralIdeal m2 =
                ideal_pow(FractionalIdeal::from_integral(pool[ib].ideal), e2).lattice();
            Element a = random_element(prof, rng, false);
            Element b = random_element(prof, rng, false);
            auto wit = [&] {
                return "I=" + ideal_literal(m1) + ", J=" + ideal_literal(m2) + ", a=" + a.str() +
                       ", b=" + b.str();
            };
            Element x = crt_pair(m1, m2, a, b);
            r.check(k, m1.contains(x - a), "x = a mod I", wit);
            r.check(k, m2.contains(x - b), "x = b mod J", wit);
            FractionalIdeal f1 = FractionalIdeal::from_integral(m1);
            FractionalIdeal f2 = FractionalIdeal::from_integral(m2);
            r.check(k, ideal_mul(f1, f2) == ideal_intersect(f1, f2),
                    "IJ = I and J for comaximal I, J", wit);
        }
        if (!inv_pool.empty()) {
            // approximation postconditions at invertible primes
            std::size_t n = 1 + rng() % std::min<std::size_t>(2, inv_pool.size());
            ApproximationSpec spec;
            spec.order = prof.order;
            std::vector<PrimeIdealData> ps;
            std::vector<Int> es;
            for (std::size_t t = 0; t < n; ++t) {
                const auto& P = inv_pool[(rng() + t) % inv_pool.size()];
                bool dup = false;
                for (const auto& c : spec.constraints) {
                    if (c.prime == P) dup = true;
                }
                if (dup) continue;
                spec.constraints.push_back(
                    {P, random_target(prof, rng), Int(rnd_range(rng, -2, 3))});
                ps.push_back(P);
                es.push_back(Int(rnd_range(rng, 0, 3)));
            }
            auto wit = [&] { return std::string("approximation spec, case only"); };
            Element x = approximate(spec); // self-checking
            for (const auto& c : spec.constraints) {
                Val v = element_valuation(x - c.target, c.prime);
                r.check(k, v.is_infinite() || v.finite() >= c.min_valuation,
                        "v_P(x - x_i) >= n_i", wit);
            }
            Element y = approximate_exact(prof.order, ps, es); // self-checking
            for (std::size_t t = 0; t < ps.size(); ++t) {
                Val v = element_valuation(y, ps[t]);
                r.check(k, !v.is_infinite() && v.finite() == es[t], "v_P(x) = n_i exactly", wit);
            }
        }
        if (is_dedekind(prof.order)) {
            IntegralIdeal i = random_integral_ideal(prof, rng);
            auto wit = [&] { return "I=" + ideal_literal(i); };
            auto [a, b] = two_generators(i);
            r.check(k,
                    FractionalIdeal::from_generators({a, b}) ==
                        FractionalIdeal::from_integral(i),
                    "aR + bR = I", wit);
        }
    });
}

void suite_gauss(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto inv_pool = invertible_pool(prof);
    const bool full = is_dedekind(prof.order);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        long df = rnd_range(rng, 0, 3), dg = rnd_range(rng, 0, 3);
        std::vector<Element> fc, gc;
        for (long t = 0; t <= df; ++t) fc.push_back(random_element(prof, rng, true));
        for (long t = 0; t <= dg; ++t) gc.push_back(random_element(prof, rng, true));
        Poly f(prof.order, fc), g(prof.order, gc);
        if (f.is_zero() || g.is_zero()) {
            r.skip();
            return;
        }
        auto wit = [&] {
            return "content(f)=" + ideal_literal(content(f)) +
                   ", content(g)=" + ideal_literal(content(g));
        };
        FractionalIdeal cf = content(f), cg = content(g), cfg = content(f * g);
        r.check(k, ideal_mul(cf, cg).contains(cfg), "content(fg) <= content(f)content(g)", wit);
        for (const auto& P : inv_pool) {
            r.check(k,
                    poly_valuation(f * g, P).finite() ==
                        poly_valuation(f, P).finite() + poly_valuation(g, P).finite(),
                    "v(fg) = v(f) + v(g)", wit);
        }
        // f in R[X] iff content integral; monic integral implies primitive
        r.check(k, f.is_integral() == content(f).is_integral(),
                "f in R[X] iff content(f) integral", wit);
        Poly monic = Poly(prof.order, {random_element(prof, rng, false),
                                       Element::one(prof.order)});
        if (monic.is_integral()) {
            r.check(k, content(monic).is_unit_ideal(), "monic integral is primitive", wit);
        }
        Poly sum = f + g;
        if (!sum.is_zero()) {
            r.check(k, ideal_add(cf, cg).contains(content(sum)),
                    "content(f)+content(g) divides content(f+g)", wit);
        }
        if (full) {
            r.check(k, cfg == ideal_mul(cf, cg), "content(fg) = content(f)content(g)", wit);
            FractionalIdeal i = random_ideal(prof, rng);
            FractionalIdeal j = random_ideal(prof, rng);
            r.check(k, gauss_mul(i, j) == ideal_mul(i, j), "gauss_mul = ideal_mul", wit);
        }
    });
}

void suite_primary(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto menu = ideal_menu(prof);
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        FractionalIdeal cand = static_cast<std::size_t>(k) < menu.size()
                                   ? pick(menu, static_cast<std::size_t>(k))
                                   : FractionalIdeal::from_integral(
                                         random_integral_ideal(prof, rng));
        if (!cand.is_integral() || cand.is_unit_ideal()) {
            r.skip();
            return;
        }
        IntegralIdeal i = cand.lattice();
        auto wit = [&] { return "I=" + ideal_literal(i); };
        auto comps = primary_decomposition(i);
        FractionalIdeal prod = FractionalIdeal::unit(prof.order);
        for (const auto& c : comps) {
            prod = ideal_mul(prod, FractionalIdeal::from_integral(c.component));
            auto p = is_primary(c.component);
            r.check(k, p.has_value() && *p == c.prime, "component is P-primary", wit);
        }
        r.check(k, prod == FractionalIdeal::from_integral(i), "product of components = I", wit);
        // fixed point under re-decomposition
        auto again = primary_decomposition(i);
        bool same = again.size() == comps.size();
        for (std::size_t t = 0; same && t < comps.size(); ++t) {
            same = again[t].component == comps[t].component;
        }
        r.check(k, same, "decomposition is unique", wit);
        // products of P-primary ideals are P-primary
        if (!comps.empty()) {
            const auto& c0 = comps.front();
            FractionalIdeal sq = ideal_mul(FractionalIdeal::from_integral(c0.component),
                                           FractionalIdeal::from_integral(c0.component));
            auto p = is_primary(sq.lattice());
            r.check(k, p.has_value() && *p == c0.prime, "P-primary times P-primary is P-primary",
                    wit);
        }
        if (is_dedekind(prof.order)) {
            Factorization f = factor_ideal(FractionalIdeal::from_integral(i));
            r.check(k, f.factors.size() == comps.size(),
                    "components match prime powers in Dedekind instances", wit);
            for (const auto& [P, e] : f.factors) {
                FractionalIdeal pw = ideal_pow(FractionalIdeal::from_integral(P.ideal),
                                               static_cast<long>(e.get_si()));
                bool found = false;
                for (const auto& c : comps) {
                    if (FractionalIdeal::from_integral(c.component) == pw) found = true;
                }
                r.check(k, found, "component equals P^{v_P(I)}", wit);
            }
        }
    });
}

void suite_class_monoid(Runner& r, int cases) {
    const auto& prof = r.profile();
    auto sample = ideals_up_to_norm(prof.order, 20);
    if (sample.empty()) return;
    r.run_cases(cases, [&](int k, std::mt19937_64& rng) {
        const IntegralIdeal& a = sample[rng() % sample.size()];
        const IntegralIdeal& b = sample[rng() % sample.size()];
        const IntegralIdeal& c = sample[rng() % sample.size()];
        auto wit = [&] {
            return "I=" + ideal_literal(a) + ", J=" + ideal_literal(b) +
                   ", K=" + ideal_literal(c);
        };
        r.check(k, equivalent(a, a), "I ~ I", wit);
        bool ab = equivalent(a, b);
        r.check(k, ab == equivalent(b, a), "I ~ J iff J ~ I", wit);
        if (ab && equivalent(b, c)) {
            r.check(k, equivalent(a, c), "transitivity", wit);
        }
        if (ab) {
            IntegralIdeal ac = ideal_mul(FractionalIdeal::from_integral(a),
                                         FractionalIdeal::from_integral(c))
                                   .lattice();
            IntegralIdeal bc = ideal_mul(FractionalIdeal::from_integral(b),
                                         FractionalIdeal::from_integral(c))
                                   .lattice();
            r.check(k, equivalent(ac, bc), "I1 ~ I2 implies I1 J ~ I2 J", wit);
        }
        if (is_dedekind(prof.order)) {
            IntegralIdeal j = principal_complement(a);
            r.check(k,
                    is_principal(ideal_mul(FractionalIdeal::from_integral(a),
                                           FractionalIdeal::from_integral(j))
                                     .lattice())
                        .has_value(),
                    "every class has a principal complement", wit);
        }
    });
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "valuation-laws", "monoid-laws",  "invertibility", "factorization",
        "divisibility",   "cancellation", "modular-law",   "crt-approx",
        "gauss",          "primary",      "class-monoid",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, const InstanceProfile& profile, int cases) {
    if (profile.prime_pool.empty()) throw domain_error("run_suite: empty prime pool");
    SuiteReport report;
    report.suite = name;
    report.ring = profile.order->description();
    Runner r(report, profile);
    if (name == "valuation-laws") {
        suite_valuation_laws(r, cases);
    } else if (name == "monoid-laws") {
        suite_monoid_laws(r, cases);
    } else if (name == "invertibility") {
        suite_invertibility(r, cases);
    } else if (name == "factorization") {
        suite_factorization(r, cases);
    } else if (name == "divisibility") {
        suite_divisibility(r, cases);
    } else if (name == "cancellation") {
        suite_cancellation(r, cases);
    } else if (name == "modular-law") {
        suite_modular_law(r, cases);
    } else if (name == "crt-approx") {
        suite_crt_approx(r, cases);
    } else if (name == "gauss") {
        suite_gauss(r, cases);
    } else if (name == "primary") {
        suite_primary(r, cases);
    } else if (name == "class-monoid") {
        suite_class_monoid(r, cases);
    } else {
        throw domain_error("run_suite: unknown suite '" + name + "'");
    }
    return report;
}

} // namespace quadideal
