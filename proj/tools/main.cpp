// quadideal: exact fractional-ideal arithmetic in quadratic orders and Z.
//
// Subcommands: eval, factor, valuation, crt, approx, two-gen, primary,
// classes, suite. Exit codes: 0 success, 1 parse error, 2 domain error,
// 3 unsupported operation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadideal/expr.hpp"
#include "quadideal/verify.hpp"

using json = nlohmann::ordered_json;
using namespace quadideal;

namespace {

struct GlobalOpts {
    std::string ring;
    long conductor = 1;
    bool json_out = false;
    std::uint64_t seed = 0;
    std::string config;
};

OrderPtr make_order(const GlobalOpts& g) {
    if (g.ring == "Z" || g.ring == "z") {
        if (g.conductor != 1) throw domain_error("--conductor is meaningless for Z");
        return OrderSpec::integers();
    }
    std::string spec = g.ring;
    if (spec.rfind("d=", 0) == 0) spec = spec.substr(2);
    bool half = false;
    if (!spec.empty() && spec.back() == 'h') {
        half = true;
        spec.pop_back();
    }
    Int d;
    try {
        d = Int(spec);
    } catch (const std::invalid_argument&) {
        throw domain_error("--ring expects d=<int>, d=<int>h, or Z");
    }
    return OrderSpec::quadratic(d, half ? OmegaKind::half_trace : OmegaKind::sqrt_d,
                                g.conductor);
}

json ring_json(const OrderPtr& o) {
    json j;
    if (o->is_rational()) {
        j["kind"] = "Z";
        return j;
    }
    j["kind"] = "quadratic";
    j["d"] = static_cast<long>(o->d().get_si());
    j["omega"] = o->omega_kind() == OmegaKind::sqrt_d ? "sqrt_d" : "half_trace";
    j["conductor"] = static_cast<long>(o->conductor().get_si());
    j["discriminant"] = static_cast<long>(o->discriminant().get_si());
    return j;
}

json ideal_json(const FractionalIdeal& i) {
    json j;
    j["a"] = to_string(i.lattice().a());
    if (!i.order()->is_rational()) {
        j["b"] = to_string(i.lattice().b());
        j["c"] = to_string(Int(i.lattice().c() * i.order()->conductor()));
    }
    j["den"] = to_string(i.den());
    return j;
}

std::string gen_str(const PrimeIdealData& p) {
    if (p.order()->is_rational()) return to_string(p.ideal.a());
    Int cw = p.ideal.c() * p.order()->conductor();
    return to_string(p.ideal.b()) + "+" + to_string(cw) + "w";
}

std::string factorization_str(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
        if (k) out += " * ";
        out += "(" + to_string(f.factors[k].first.p) + ", " + gen_str(f.factors[k].first) +
               ")^" + to_string(f.factors[k].second);
    }
    return out;
}

json factorization_json(const OrderPtr& o, const Factorization& f) {
    json j;
    j["ring"] = ring_json(o);
    j["factors"] = json::array();
    for (const auto& [p, e] : f.factors) {
        json row;
        row["p"] = static_cast<long>(p.p.get_si());
        row["gen"] = gen_str(p);
        row["e"] = static_cast<long>(e.get_si());
        j["factors"].push_back(row);
    }
    return j;
}

// Prime selector "p" or "p.i": the i-th prime above p in canonical order.
PrimeIdealData select_prime(const OrderPtr& o, const std::string& spec) {
    std::string ps = spec;
    std::size_t idx = 0;
    auto dot = spec.find('.');
    if (dot != std::string::npos) {
        ps = spec.substr(0, dot);
        idx = std::stoul(spec.substr(dot + 1));
    }
    Int p;
    try {
        p = Int(ps);
    } catch (const std::invalid_argument&) {
        throw domain_error("bad prime selector '" + spec + "' (want p or p.i)");
    }
    auto above = primes_above(o, p);
    if (idx >= above.size()) {
        throw domain_error("prime selector index out of range: only " +
                           std::to_string(above.size()) + " prime(s) above " + to_string(p));
    }
    return above[idx];
}

void print_ideal(const GlobalOpts& g, const OrderPtr& o, const FractionalIdeal& i) {
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["ideal"] = ideal_json(i);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << i.str() << "\n";
    }
}

int cmd_eval(const GlobalOpts& g, const std::string& expr) {
    OrderPtr o = make_order(g);
    print_ideal(g, o, eval_expression(expr, o));
    return 0;
}

int cmd_factor(const GlobalOpts& g, const std::string& expr) {
    OrderPtr o = make_order(g);
    Factorization f = factor_ideal(eval_expression(expr, o));
    if (g.json_out) {
        std::cout << factorization_json(o, f).dump() << "\n";
    } else {
        std::cout << factorization_str(f) << "\n";
    }
    return 0;
}

int cmd_valuation(const GlobalOpts& g, const std::string& expr, const std::string& prime) {
    OrderPtr o = make_order(g);
    FractionalIdeal i = eval_expression(expr, o);
    Int p(prime);
    auto above = primes_above(o, p);
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["valuations"] = json::array();
        for (const auto& P : above) {
            json row;
            row["p"] = static_cast<long>(P.p.get_si());
            row["gen"] = gen_str(P);
            row["e"] = P.ramification;
            row["f"] = P.residue_degree;
            row["v"] = static_cast<long>(ideal_valuation(i, P).get_si());
            j["valuations"].push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& P : above) {
            std::cout << "v at (" << to_string(P.p) << ", " << gen_str(P)
                      << ") [e=" << P.ramification << " f=" << P.residue_degree
                      << "]: " << to_string(ideal_valuation(i, P)) << "\n";
        }
    }
    return 0;
}

int cmd_crt(const GlobalOpts& g, const std::vector<std::string>& args) {
    if (args.size() % 2 != 0) {
        throw domain_error("crt expects pairs: <ideal-expr> <element> ...");
    }
    OrderPtr o = make_order(g);
    CongruenceSystem sys;
    sys.order = o;
    for (std::size_t k = 0; k < args.size(); k += 2) {
        FractionalIdeal mod = eval_expression(args[k], o);
        if (!mod.is_integral()) throw domain_error("crt: moduli must be integral ideals");
        Expr elem = parse("<" + args[k + 1] + ">");
        sys.targets.emplace_back(mod.lattice(), eval_element(elem.elems[0], o));
    }
    Element x = crt_system(sys);
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["element"] = x.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << x.str() << "\n";
    }
    return 0;
}

int cmd_approx(const GlobalOpts& g, const std::vector<std::string>& args, bool exact) {
    OrderPtr o = make_order(g);
    Element x = Element::zero(o);
    if (exact) {
        if (args.size() % 2 != 0) {
            throw domain_error("approx --exact expects pairs: <prime> <exponent> ...");
        }
        std::vector<PrimeIdealData> ps;
        std::vector<Int> es;
        for (std::size_t k = 0; k < args.size(); k += 2) {
            ps.push_back(select_prime(o, args[k]));
            es.push_back(Int(args[k + 1]));
        }
        x = approximate_exact(o, ps, es);
    } else {
        if (args.size() % 3 != 0) {
            throw domain_error("approx expects triples: <prime> <target> <min-valuation> ...");
        }
        ApproximationSpec spec;
        spec.order = o;
        for (std::size_t k = 0; k < args.size(); k += 3) {
            PrimeIdealData P = select_prime(o, args[k]);
            Expr elem = parse("<" + args[k + 1] + ">");
            spec.constraints.push_back({P, eval_element(elem.elems[0], o), Int(args[k + 2])});
        }
        x = approximate(spec);
    }
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["element"] = x.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << x.str() << "\n";
    }
    return 0;
}

int cmd_two_gen(const GlobalOpts& g, const std::string& expr) {
    OrderPtr o = make_order(g);
    FractionalIdeal i = eval_expression(expr, o);
    if (!i.is_integral()) throw domain_error("two-gen expects an integral ideal");
    auto [a, b] = two_generators(i.lattice());
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["generators"] = {a.str(), b.str()};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << a.str() << ", " << b.str() << "\n";
    }
    return 0;
}

int cmd_primary(const GlobalOpts& g, const std::string& expr) {
    OrderPtr o = make_order(g);
    FractionalIdeal i = eval_expression(expr, o);
    if (!i.is_integral()) throw domain_error("primary expects an integral ideal");
    auto comps = primary_decomposition(i.lattice());
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["components"] = json::array();
        for (const auto& c : comps) {
            json row;
            row["p"] = static_cast<long>(c.prime.p.get_si());
            row["prime_gen"] = gen_str(c.prime);
            row["component"] = ideal_json(FractionalIdeal::from_integral(c.component));
            j["components"].push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : comps) {
            std::cout << "(" << to_string(c.prime.p) << ", " << gen_str(c.prime)
                      << ")-primary: " << c.component.str() << "\n";
        }
        if (comps.empty()) std::cout << "unit ideal: no primary components\n";
    }
    return 0;
}

int cmd_classes(const GlobalOpts& g, long bound) {
    OrderPtr o = make_order(g);
    auto classes = class_monoid(o, bound);
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["norm_bound"] = bound;
        j["count"] = classes.size();
        j["classes"] = json::array();
        for (const auto& c : classes) {
            json row;
            row["representative"] = ideal_json(FractionalIdeal::from_integral(c.representative));
            row["principal"] = c.is_principal_class();
            row["invertible"] = is_invertible(FractionalIdeal::from_integral(c.representative));
            j["classes"].push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << classes.size() << " class(es) at norm bound " << bound << "\n";
        for (const auto& c : classes) {
            std::cout << "  " << c.representative.str()
                      << (c.is_principal_class() ? " (principal class)" : "")
                      << (is_invertible(FractionalIdeal::from_integral(c.representative))
                              ? ""
                              : " (non-invertible)")
                      << "\n";
        }
    }
    return 0;
}

InstanceProfile profile_from_config(const GlobalOpts& g, const OrderPtr& o, int& cases) {
    InstanceProfile prof = default_profile(o, g.seed);
    if (g.config.empty()) return prof;
    std::ifstream in(g.config);
    if (!in) throw domain_error("cannot open config file " + g.config);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw domain_error("config: expected key=value, got '" + line + "'");
        }
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "seed") {
            prof.seed = std::stoull(value);
        } else if (key == "cases") {
            cases = std::stoi(value);
        } else if (key == "max_exponent") {
            prof.limits.max_exponent = std::stoi(value);
        } else if (key == "max_height") {
            prof.limits.max_height = std::stol(value);
        } else if (key == "primes") {
            prof.prime_pool.clear();
            std::stringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                for (const auto& P : all_primes_above(o, Int(tok))) {
                    prof.prime_pool.push_back(P);
                }
            }
        } else {
            throw domain_error("config: unknown key '" + key + "'");
        }
    }
    return prof;
}

int cmd_suite(const GlobalOpts& g, const std::string& name, int cases) {
    OrderPtr o = make_order(g);
    InstanceProfile prof = profile_from_config(g, o, cases);
    SuiteReport r = run_suite(name, prof, cases);
    if (g.json_out) {
        json j;
        j["ring"] = ring_json(o);
        j["suite"] = r.suite;
        j["cases"] = r.cases;
        j["passed"] = r.passed;
        j["failed"] = r.failed;
        j["skipped"] = r.skipped;
        j["failed_laws"] = r.failed_laws;
        j["result"] = r.ok() ? "PASS" : "FAIL";
        if (!r.failures.empty()) {
            json w;
            w["case"] = r.failures[0].case_index;
            w["law"] = r.failures[0].law;
            w["witness"] = r.failures[0].witness;
            j["first_counterexample"] = w;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "suite " << r.suite << " on " << r.ring << ": cases=" << r.cases
                  << " passed=" << r.passed << " failed=" << r.failed
                  << " skipped=" << r.skipped << "\n";
        for (const auto& law : r.failed_laws) {
            std::cout << "  failed law: " << law << "\n";
        }
        if (!r.failures.empty()) {
            std::cout << "  first counterexample (case " << r.failures[0].case_index
                      << "): " << r.failures[0].witness << "\n";
        }
        std::cout << "result: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fractional-ideal arithmetic in quadratic orders and Z"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--ring", g.ring, "ring selector: d=<int>, d=<int>h (half-trace), or Z")
        ->required();
    app.add_option("--conductor", g.conductor, "order conductor (default 1)");
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--config", g.config, "key=value config file for suite profiles");

    std::string expr, prime_str, suite_name;
    std::vector<std::string> rest;
    long bound = 30;
    int cases = 200;
    bool exact = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an ideal expression");
    eval_cmd->add_option("expr", expr)->required();

    auto* factor_cmd = app.add_subcommand("factor", "prime factorization of an ideal");
    factor_cmd->add_option("expr", expr)->required();

    auto* val_cmd = app.add_subcommand("valuation", "valuations at the primes above p");
    val_cmd->add_option("expr", expr)->required();
    val_cmd->add_option("-p,--prime", prime_str)->required();

    auto* crt_cmd = app.add_subcommand("crt", "solve a congruence system");
    crt_cmd->add_option("pairs", rest, "modulus expr and residue element, repeated");

    auto* approx_cmd = app.add_subcommand("approx", "approximation theorem witnesses");
    approx_cmd->add_option("constraints", rest,
                           "prime target min-valuation triples (pairs with --exact)");
    approx_cmd->add_flag("--exact", exact, "exact valuations (second approximation theorem)");

    auto* twogen_cmd = app.add_subcommand("two-gen", "two-generator presentation");
    twogen_cmd->add_option("expr", expr)->required();

    auto* primary_cmd = app.add_subcommand("primary", "primary decomposition");
    primary_cmd->add_option("expr", expr)->required();

    auto* classes_cmd = app.add_subcommand("classes", "class monoid enumeration");
    classes_cmd->add_option("--bound", bound, "norm bound (default 30)");

    auto* suite_cmd = app.add_subcommand("suite", "run a verifier law suite");
    suite_cmd->add_option("name", suite_name)->required();
    suite_cmd->add_option("--cases", cases, "cases to run (default 200)");

    // global flags are accepted after the subcommand too
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return cmd_eval(g, expr);
        if (factor_cmd->parsed()) return cmd_factor(g, expr);
        if (val_cmd->parsed()) return cmd_valuation(g, expr, prime_str);
        if (crt_cmd->parsed()) return cmd_crt(g, rest);
        if (approx_cmd->parsed()) return cmd_approx(g, rest, exact);
        if (twogen_cmd->parsed()) return cmd_two_gen(g, expr);
        if (primary_cmd->parsed()) return cmd_primary(g, expr);
        if (classes_cmd->parsed()) return cmd_classes(g, bound);
        if (suite_cmd->parsed()) return cmd_suite(g, suite_name, cases);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
