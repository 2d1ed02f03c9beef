#include "quadideal/expr.hpp"

#include <cctype>

namespace quadideal {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Expr parse_all() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }

    Expr parse_expr() {
        Expr e = parse_inter();
        while (accept('+')) {
            Expr rhs = parse_inter();
            Expr node{Expr::Kind::add, {}, {}, 0};
            node.args.push_back(std::move(e));
            node.args.push_back(std::move(rhs));
            e = std::move(node);
        }
        return e;
    }

    Expr parse_inter() {
        Expr e = parse_prod();
        while (accept('&')) {
            Expr rhs = parse_prod();
            Expr node{Expr::Kind::intersect, {}, {}, 0};
            node.args.push_back(std::move(e));
            node.args.push_back(std::move(rhs));
            e = std::move(node);
        }
        return e;
    }

    Expr parse_prod() {
        Expr e = parse_power();
        while (accept('*')) {
            Expr rhs = parse_power();
            Expr node{Expr::Kind::mul, {}, {}, 0};
            node.args.push_back(std::move(e));
            node.args.push_back(std::move(rhs));
            e = std::move(node);
        }
        return e;
    }

    Expr parse_power() {
        Expr e = parse_atom();
        while (accept('^')) {
            bool neg = accept('-');
            Int k = parse_digits("exponent");
            Expr node{Expr::Kind::pow, {}, {}, 0};
            node.exponent = static_cast<long>(k.get_si()) * (neg ? -1 : 1);
            node.args.push_back(std::move(e));
            e = std::move(node);
        }
        return e;
    }

    Expr parse_atom() {
        skip_ws();
        if (accept('<')) {
            Expr node{Expr::Kind::literal, {}, {}, 0};
            if (peek('>')) fail("empty generator list");
            node.elems.push_back(parse_elem());
            while (accept(',')) node.elems.push_back(parse_elem());
            expect('>', "to close ideal literal");
            return node;
        }
        if (accept('(')) {
            Expr e = parse_expr();
            expect(')', "to close group");
            return e;
        }
        std::string name = parse_name();
        Expr::Kind kind;
        std::size_t arity;
        if (name == "inv") {
            kind = Expr::Kind::inv;
            arity = 1;
        } else if (name == "conj") {
            kind = Expr::Kind::conj;
            arity = 1;
        } else if (name == "gcd") {
            kind = Expr::Kind::gcd;
            arity = 2;
        } else if (name == "lcm") {
            kind = Expr::Kind::lcm;
            arity = 2;
        } else {
            fail(name.empty() ? "expected ideal literal, function, or group"
                              : "unknown function '" + name + "'");
        }
        expect('(', "after function name");
        Expr node{kind, {}, {}, 0};
        node.args.push_back(parse_expr());
        for (std::size_t i = 1; i < arity; ++i) {
            expect(',', "between function arguments");
            node.args.push_back(parse_expr());
        }
        expect(')', "to close function call");
        return node;
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Int parse_digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return Int(s_.substr(start, pos_ - start));
    }

    ElemNode parse_elem() {
        ElemNode e = parse_eterm();
        for (;;) {
            if (accept('+')) {
                ElemNode n{ElemNode::Kind::add, Rat(0), {}};
                n.args.push_back(std::move(e));
                n.args.push_back(parse_eterm());
                e = std::move(n);
            } else if (accept('-')) {
                ElemNode n{ElemNode::Kind::sub, Rat(0), {}};
                n.args.push_back(std::move(e));
                n.args.push_back(parse_eterm());
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ElemNode parse_eterm() {
        ElemNode e = parse_efact();
        while (accept('*')) {
            ElemNode n{ElemNode::Kind::mul, Rat(0), {}};
            n.args.push_back(std::move(e));
            n.args.push_back(parse_efact());
            e = std::move(n);
        }
        return e;
    }

    ElemNode parse_efact() {
        skip_ws();
        if (accept('-')) {
            ElemNode n{ElemNode::Kind::neg, Rat(0), {}};
            n.args.push_back(parse_efact());
            return n;
        }
        if (accept('(')) {
            ElemNode e = parse_elem();
            expect(')', "to close element group");
            return e;
        }
        if (pos_ < s_.size() && s_[pos_] == 'w') {
            ++pos_;
            return {ElemNode::Kind::omega, Rat(0), {}};
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            fail("expected element");
        }
        Int num = parse_digits("number");
        Int den = 1;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            den = parse_digits("denominator");
            if (den == 0) fail("zero denominator");
        }
        ElemNode n{ElemNode::Kind::number, make_rat(num, den), {}};
        // juxtaposed coefficient: "2w" or "3/2w"
        if (pos_ < s_.size() && s_[pos_] == 'w') {
            ++pos_;
            ElemNode prod{ElemNode::Kind::mul, Rat(0), {}};
            prod.args.push_back(std::move(n));
            prod.args.push_back({ElemNode::Kind::omega, Rat(0), {}});
            return prod;
        }
        return n;
    }
};

} // namespace

Expr parse(const std::string& input) {
    return Parser(input).parse_all();
}

Element eval_element(const ElemNode& node, const OrderPtr& order) {
    switch (node.kind) {
    case ElemNode::Kind::number:
        return Element::from_rat(order, node.value);
    case ElemNode::Kind::omega:
        if (order->is_rational()) {
            throw domain_error("eval: 'w' is not an element of Q");
        }
        return Element::omega(order);
    case ElemNode::Kind::add:
        return eval_element(node.args[0], order) + eval_element(node.args[1], order);
    case ElemNode::Kind::sub:
        return eval_element(node.args[0], order) - eval_element(node.args[1], order);
    case ElemNode::Kind::mul:
        return eval_element(node.args[0], order) * eval_element(node.args[1], order);
    case ElemNode::Kind::neg:
        return -eval_element(node.args[0], order);
    }
    throw domain_error("eval: bad element node");
}

FractionalIdeal eval(const Expr& e, const OrderPtr& order) {
    switch (e.kind) {
    case Expr::Kind::literal: {
        std::vector<Element> gens;
        gens.reserve(e.elems.size());
        for (const auto& n : e.elems) gens.push_back(eval_element(n, order));
        return FractionalIdeal::from_generators(gens);
    }
    case Expr::Kind::add:
        return ideal_add(eval(e.args[0], order), eval(e.args[1], order));
    case Expr::Kind::intersect:
        return ideal_intersect(eval(e.args[0], order), eval(e.args[1], order));
    case Expr::Kind::mul:
        return ideal_mul(eval(e.args[0], order), eval(e.args[1], order));
    case Expr::Kind::pow:
        return ideal_pow(eval(e.args[0], order), e.exponent);
    case Expr::Kind::inv:
        return ideal_inverse(eval(e.args[0], order));
    case Expr::Kind::gcd:
        return ideal_gcd(eval(e.args[0], order), eval(e.args[1], order));
    case Expr::Kind::lcm:
        return ideal_lcm(eval(e.args[0], order), eval(e.args[1], order));
    case Expr::Kind::conj:
        return eval(e.args[0], order).conjugate();
    }
    throw domain_error("eval: bad expression node");
}

FractionalIdeal eval_expression(const std::string& input, const OrderPtr& order) {
    return eval(parse(input), order);
}

} // namespace quadideal
