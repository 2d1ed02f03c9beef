// Python bindings for the quadideal core: orders, elements, ideals,
// primes, factorization, CRT/approximation, primary decomposition, the
// class monoid, the law-suite verifier, and the expression evaluator.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadideal/expr.hpp"
#include "quadideal/verify.hpp"

namespace py = pybind11;
using namespace quadideal;

namespace {

// GMP values cross the boundary as exact Python ints and Fractions via
// their decimal strings, so no precision is lost.
py::object to_py_int(const Int& n) {
    return py::module_::import("builtins").attr("int")(n.get_str());
}

py::object to_py_rat(const Rat& q) {
    auto fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(q.get_num().get_str())
        .attr("__truediv__")(fractions.attr("Fraction")(q.get_den().get_str()));
}

Int int_from_py(const py::object& o) {
    return Int(py::str(o).cast<std::string>());
}

Rat rat_from_py(const py::object& o) {
    if (py::hasattr(o, "numerator") && py::hasattr(o, "denominator")) {
        return make_rat(int_from_py(o.attr("numerator")), int_from_py(o.attr("denominator")));
    }
    return Rat(int_from_py(o));
}

py::object val_to_py(const Val& v) {
    if (v.is_infinite()) return py::none();
    return to_py_int(v.finite());
}

// OrderSpec is immutable; exposing it through a non-const holder is safe.
std::shared_ptr<OrderSpec> unconst(const OrderPtr& p) {
    return std::const_pointer_cast<OrderSpec>(p);
}

} // namespace

PYBIND11_MODULE(quadideal, m) {
    m.doc() = "exact fractional-ideal arithmetic in quadratic orders and Z";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_NotImplementedError);

    py::enum_<OmegaKind>(m, "OmegaKind")
        .value("sqrt_d", OmegaKind::sqrt_d)
        .value("half_trace", OmegaKind::half_trace);

    py::class_<OrderSpec, std::shared_ptr<OrderSpec>>(m, "Order")
        .def_static("integers", [] { return unconst(OrderSpec::integers()); })
        .def_static(
            "quadratic",
            [](const py::object& d, OmegaKind omega, const py::object& conductor) {
                return unconst(
                    OrderSpec::quadratic(int_from_py(d), omega, int_from_py(conductor)));
            },
            py::arg("d"), py::arg("omega") = OmegaKind::sqrt_d, py::arg("conductor") = py::int_(1))
        .def_static("maximal",
                    [](const py::object& d) { return unconst(OrderSpec::maximal(int_from_py(d))); })
        .def_property_readonly("d", [](const OrderSpec& o) { return to_py_int(o.d()); })
        .def_property_readonly("conductor",
                               [](const OrderSpec& o) { return to_py_int(o.conductor()); })
        .def_property_readonly("discriminant",
                               [](const OrderSpec& o) { return to_py_int(o.discriminant()); })
        .def_property_readonly("true_conductor",
                               [](const OrderSpec& o) { return to_py_int(o.true_conductor()); })
        .def_property_readonly("is_maximal", &OrderSpec::is_maximal)
        .def_property_readonly("is_rational", &OrderSpec::is_rational)
        .def("singular_at",
             [](const OrderSpec& o, const py::object& p) { return o.singular_at(int_from_py(p)); })
        .def("__eq__", [](const OrderSpec& a, const OrderSpec& b) { return a == b; })
        .def("__repr__", [](const OrderSpec& o) { return "Order(" + o.description() + ")"; });

    py::class_<Element>(m, "Element")
        .def(py::init([](const OrderPtr& order, const py::object& x, const py::object& y) {
                 return Element(order, rat_from_py(x), rat_from_py(y));
             }),
             py::arg("order"), py::arg("x"), py::arg("y") = py::int_(0))
        .def_static("omega", &Element::omega)
        .def_property_readonly("x", [](const Element& e) { return to_py_rat(e.x()); })
        .def_property_readonly("y", [](const Element& e) { return to_py_rat(e.y()); })
        .def_property_readonly("order", [](const Element& e) { return unconst(e.order()); })
        .def("conjugate", &Element::conjugate)
        .def("norm", [](const Element& e) { return to_py_rat(e.norm()); })
        .def("trace", [](const Element& e) { return to_py_rat(e.trace()); })
        .def("is_integral", &Element::is_integral)
        .def("is_zero", &Element::is_zero)
        .def("inverse", &Element::inverse)
        .def("__pow__", [](const Element& e, long k) { return e.pow(k); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const Element& e) { return e.str(); })
        .def("__str__", &Element::str);

    py::class_<IntegralIdeal>(m, "IntegralIdeal")
        .def(py::init([](const OrderPtr& order, const py::object& a, const py::object& b,
                         const py::object& c) {
                 return IntegralIdeal(order, int_from_py(a), int_from_py(b), int_from_py(c));
             }),
             py::arg("order"), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_property_readonly("a", [](const IntegralIdeal& i) { return to_py_int(i.a()); })
        .def_property_readonly("b", [](const IntegralIdeal& i) { return to_py_int(i.b()); })
        .def_property_readonly("c", [](const IntegralIdeal& i) { return to_py_int(i.c()); })
        .def_property_readonly("order",
                               [](const IntegralIdeal& i) { return unconst(i.order()); })
        .def("norm", [](const IntegralIdeal& i) { return to_py_int(i.norm()); })
        .def("contains", py::overload_cast<const Element&>(&IntegralIdeal::contains, py::const_))
        .def("conjugate", &IntegralIdeal::conjugate)
        .def("reduce", &IntegralIdeal::reduce)
        .def(py::self == py::self)
        .def("__repr__", [](const IntegralIdeal& i) { return i.str(); });

    py::class_<FractionalIdeal>(m, "FractionalIdeal")
        .def_static("unit", &FractionalIdeal::unit)
        .def_static("principal", &FractionalIdeal::principal)
        .def_static("from_integral", &FractionalIdeal::from_integral)
        .def_static("from_generators", &FractionalIdeal::from_generators)
        .def_property_readonly("lattice", &FractionalIdeal::lattice)
        .def_property_readonly("den",
                               [](const FractionalIdeal& i) { return to_py_int(i.den()); })
        .def_property_readonly("order",
                               [](const FractionalIdeal& i) { return unconst(i.order()); })
        .def("norm", [](const FractionalIdeal& i) { return to_py_rat(i.norm()); })
        .def("is_integral", &FractionalIdeal::is_integral)
        .def("is_unit_ideal", &FractionalIdeal::is_unit_ideal)
        .def("member", &FractionalIdeal::member)
        .def("contains", &FractionalIdeal::contains)
        .def("conjugate", &FractionalIdeal::conjugate)
        .def("gens", &FractionalIdeal::gens)
        .def("inverse", [](const FractionalIdeal& i) { return ideal_inverse(i); })
        .def("__mul__",
             [](const FractionalIdeal& i, const FractionalIdeal& j) { return ideal_mul(i, j); })
        .def("__add__",
             [](const FractionalIdeal& i, const FractionalIdeal& j) { return ideal_add(i, j); })
        .def("__and__",
             [](const FractionalIdeal& i, const FractionalIdeal& j) {
                 return ideal_intersect(i, j);
             })
        .def("__pow__", [](const FractionalIdeal& i, long k) { return ideal_pow(i, k); })
        .def(py::self == py::self)
        .def("__repr__", [](const FractionalIdeal& i) { return i.str(); });

    py::class_<PrimeIdealData>(m, "PrimeIdeal")
        .def_property_readonly("p", [](const PrimeIdealData& P) { return to_py_int(P.p); })
        .def_readonly("ideal", &PrimeIdealData::ideal)
        .def_readonly("residue_degree", &PrimeIdealData::residue_degree)
        .def_readonly("ramification", &PrimeIdealData::ramification)
        .def("is_singular", &PrimeIdealData::is_singular)
        .def(py::self == py::self)
        .def("__repr__", [](const PrimeIdealData& P) {
            return "PrimeIdeal(p=" + to_string(P.p) + ", " + P.ideal.str() +
                   ", e=" + std::to_string(P.ramification) +
                   ", f=" + std::to_string(P.residue_degree) + ")";
        });

    py::class_<Factorization>(m, "Factorization")
        .def_property_readonly("factors",
                               [](const Factorization& f) {
                                   py::list out;
                                   for (const auto& [P, e] : f.factors) {
                                       out.append(py::make_tuple(P, to_py_int(e)));
                                   }
                                   return out;
                               })
        .def(py::self == py::self)
        .def("__len__", [](const Factorization& f) { return f.factors.size(); });

    py::class_<PrimaryComponent>(m, "PrimaryComponent")
        .def_readonly("prime", &PrimaryComponent::prime)
        .def_readonly("component", &PrimaryComponent::component);

    py::class_<IdealClass>(m, "IdealClass")
        .def_readonly("representative", &IdealClass::representative)
        .def("is_principal_class", &IdealClass::is_principal_class);

    m.def("primes_above",
          [](const OrderPtr& o, const py::object& p) { return primes_above(o, int_from_py(p)); });
    m.def("all_primes_above", [](const OrderPtr& o, const py::object& p) {
        return all_primes_above(o, int_from_py(p));
    });
    m.def("element_valuation", [](const Element& x, const PrimeIdealData& P) {
        return val_to_py(element_valuation(x, P));
    });
    m.def("ideal_valuation", [](const FractionalIdeal& i, const PrimeIdealData& P) {
        return to_py_int(ideal_valuation(i, P));
    });
    m.def("factor_ideal", &factor_ideal);
    m.def("reconstitute", &reconstitute);
    m.def("divides",
          [](const FractionalIdeal& i, const FractionalIdeal& j) { return divides(i, j); });
    m.def("ideal_gcd", &ideal_gcd);
    m.def("ideal_lcm", &ideal_lcm);
    m.def("ideal_inverse", &ideal_inverse);
    m.def("multiplier_ring", &multiplier_ring);
    m.def("is_invertible", &is_invertible);
    m.def("uniformizer_at", &uniformizer_at);

    m.def("crt_pair", &crt_pair);
    m.def("crt_system",
          [](const OrderPtr& o, const std::vector<std::pair<IntegralIdeal, Element>>& targets) {
              CongruenceSystem sys;
              sys.order = o;
              sys.targets = targets;
              return crt_system(sys);
          });
    m.def("approximate",
          [](const OrderPtr& o,
             const std::vector<std::tuple<PrimeIdealData, Element, long>>& constraints) {
              ApproximationSpec spec;
              spec.order = o;
              for (const auto& [P, x, n] : constraints) {
                  spec.constraints.push_back({P, x, Int(n)});
              }
              return approximate(spec);
          });
    m.def("approximate_exact",
          [](const OrderPtr& o, const std::vector<PrimeIdealData>& ps,
             const std::vector<long>& es) {
              std::vector<Int> ee(es.begin(), es.end());
              return approximate_exact(o, ps, ee);
          });
    m.def("two_generators", &two_generators);

    m.def("singular_primes", &singular_primes);
    m.def("is_primary", &is_primary);
    m.def("saturate", &saturate);
    m.def("primary_decomposition", &primary_decomposition);

    m.def("is_principal", &is_principal);
    m.def("equivalent", &equivalent);
    m.def("class_monoid",
          [](const OrderPtr& o, long bound) { return class_monoid(o, Int(bound)); });
    m.def("principal_complement", &principal_complement);
    m.def("ideals_up_to_norm",
          [](const OrderPtr& o, long bound) { return ideals_up_to_norm(o, Int(bound)); });

    m.def("evaluate", &eval_expression, py::arg("expression"), py::arg("order"));
    m.def("ideal_literal", [](const FractionalIdeal& i) { return ideal_literal(i); });

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("suite", &SuiteReport::suite)
        .def_readonly("ring", &SuiteReport::ring)
        .def_readonly("cases", &SuiteReport::cases)
        .def_readonly("passed", &SuiteReport::passed)
        .def_readonly("failed", &SuiteReport::failed)
        .def_readonly("skipped", &SuiteReport::skipped)
        .def_readonly("failed_laws", &SuiteReport::failed_laws)
        .def("ok", &SuiteReport::ok)
        .def_property_readonly("first_counterexample", [](const SuiteReport& r) -> py::object {
            if (r.failures.empty()) return py::none();
            py::dict d;
            d["case"] = r.failures[0].case_index;
            d["law"] = r.failures[0].law;
            d["witness"] = r.failures[0].witness;
            return d;
        });

    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, const OrderPtr& o, int cases, std::uint64_t seed) {
            return run_suite(name, default_profile(o, seed), cases);
        },
        py::arg("name"), py::arg("order"), py::arg("cases") = 100, py::arg("seed") = 0);
}
