#include "quadideal/numbers.hpp"

#include <algorithm>
#include <map>

namespace quadideal {

Egcd egcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) {
        throw domain_error("egcd: gcd(0, 0) is undefined");
    }
    Egcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floordiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long valuation_int(const Int& a, const Int& p) {
    if (a == 0) throw domain_error("valuation_int: zero input");
    Int rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// Pollard-Brent rho with deterministic parameters.
Int rho_factor(const Int& n) {
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1;
        Int ys = y;
        const long m = 128;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = mod_floor(y * y + c, n);
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = mod_floor(y * y + c, n);
                    q = mod_floor(q * (x > y ? x - y : y - x), n);
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = mod_floor(ys * ys + c, n);
                d = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(divexact(n, d), out);
}

} // namespace

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n < 1) throw domain_error("factor_integer: input must be >= 1");
    std::map<Int, int> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (divides(p, n)) {
            acc[Int(p)] += 1;
            n = divexact(n, Int(p));
        }
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p) {
    Int a0 = mod_floor(a, p);
    if (a0 == 0) return Int(0);
    if (legendre(a0, p) != 1) return std::nullopt;
    if (mod_floor(p, 4) == 3) {
        return pow_mod(a0, (p + 1) / 4, p);
    }
    // Tonelli-Shanks
    Int q = p - 1;
    long s = 0;
    while (divides(2, q)) {
        q = divexact(q, 2);
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m = s;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(a0, q, p);
    Int r = pow_mod(a0, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = mod_floor(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = mod_floor(b * b, p);
        m = i;
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        r = mod_floor(r * b, p);
    }
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_of(const Int& n) { return Rat(n); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
    if (!is_integer(q)) throw domain_error("to_int: not an integer");
    return q.get_num();
}

long valuation_rat(const Rat& q, const Int& p) {
    if (q == 0) throw domain_error("valuation_rat: zero input");
    long v = valuation_int(q.get_num(), p);
    if (v != 0) return v;
    return -valuation_int(q.get_den(), p);
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace quadideal
