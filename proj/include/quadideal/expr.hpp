#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quadideal/ideal.hpp"
#include "quadideal/primes.hpp"

namespace quadideal {

/**
 * Ideal expression AST. Grammar, loosest binding first:
 *
 *   expr     := inter ('+' inter)*
 *   inter    := prod ('&' prod)*
 *   prod     := power ('*' power)*
 *   power    := atom ('^' ['-'] digits)*
 *   atom     := '<' elem (',' elem)* '>' | fn '(' expr (',' expr)* ')' | '(' expr ')'
 *   fn       := 'inv' | 'gcd' | 'lcm' | 'conj'
 *   elem     := eterm (('+'|'-') eterm)*
 *   eterm    := efact ('*' efact)*
 *   efact    := ['-'] (rational ['w'] | 'w' | '(' elem ')')
 *   rational := digits ['/' digits]
 *
 * so '+' is ideal sum, '&' intersection, '*' product and '^' integer
 * power (negative exponents via the inverse).
 */
struct ElemNode {
    enum class Kind { number, omega, add, sub, mul, neg };
    Kind kind;
    Rat value; // number
    std::vector<ElemNode> args;
};

struct Expr {
    enum class Kind { literal, add, intersect, mul, pow, inv, gcd, lcm, conj };
    Kind kind;
    std::vector<Expr> args;
    std::vector<ElemNode> elems; // literal
    long exponent = 0;           // pow
};

// Throws parse_error (with byte offset) on malformed input.
Expr parse(const std::string& input);

Element eval_element(const ElemNode& node, const OrderPtr& order);

FractionalIdeal eval(const Expr& e, const OrderPtr& order);

// Convenience: parse then eval.
FractionalIdeal eval_expression(const std::string& input, const OrderPtr& order);

} // namespace quadideal
