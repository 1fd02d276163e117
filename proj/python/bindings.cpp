#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "flatcyclo/flatcyclo.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace flatcyclo;

// Python int <-> mpz_class, through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        const std::string s = py::str(src);
        return value.set_str(s, 10) == 0;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using PyTerm = std::pair<BigInt, int>;

std::vector<PyTerm> to_py(const SparsePoly& p) {
    std::vector<PyTerm> out;
    out.reserve(p.size());
    for (const Term& t : p) out.emplace_back(t.exponent, t.coeff);
    return out;
}

BlockIndex to_index(const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>& i) {
    return {std::get<0>(i), std::get<1>(i), std::get<2>(i), std::get<3>(i)};
}

std::pair<BigInt, BigInt> to_py(const Fraction& f) { return {f.num, f.den}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Explicit ternary cyclotomic polynomials Phi_{p1 p2 p3} for p2 = 1 mod p1, p3 = 1 mod p1 p2";

    static py::exception<Error> error(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    // number theory
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("mod_inverse", &mod_inverse, py::arg("a"), py::arg("m"));
    m.def("quo", &quo, py::arg("a"), py::arg("b"));
    m.def("mobius", [](const BigInt& n) { return mobius(FactoredInt::factor(n)); }, py::arg("n"));
    m.def("totient", [](const BigInt& n) { return totient(FactoredInt::factor(n)); }, py::arg("n"));

    // oracle
    m.def(
        "cyclotomic_dense",
        [](const BigInt& n, std::size_t budget) { return cyclotomic_dense(FactoredInt::factor(n), budget).coeffs(); },
        py::arg("n"), py::arg("budget") = kDefaultDenseBudget,
        "Coefficients of Phi_n (index = exponent), computed by exact division.");
    m.def(
        "cofactor_psi",
        [](const BigInt& p1, const BigInt& p2) { return cofactor_psi(p1, p2).coeffs(); }, py::arg("p1"), py::arg("p2"));

    // closed forms
    py::enum_<Branch>(m, "Branch").value("LOW", Branch::Low).value("HIGH", Branch::High);

    py::class_<PrimeTriple>(m, "PrimeTriple")
        .def(py::init<BigInt, BigInt, BigInt>(), py::arg("p1"), py::arg("p2"), py::arg("p3"))
        .def_property_readonly("p1", &PrimeTriple::p1)
        .def_property_readonly("p2", &PrimeTriple::p2)
        .def_property_readonly("p3", &PrimeTriple::p3)
        .def_property_readonly("q2", &PrimeTriple::q2)
        .def_property_readonly("q3", &PrimeTriple::q3)
        .def_property_readonly("product", &PrimeTriple::product)
        .def_property_readonly("totient", &PrimeTriple::totient)
        .def_property_readonly("radices",
                               [](const PrimeTriple& t) {
                                   const Radices& r = t.radices();
                                   return py::make_tuple(r.rho1, r.rho2, r.rho3, r.rho4);
                               })
        .def_property_readonly("enumerable", &PrimeTriple::enumerable)
        .def("__eq__", [](const PrimeTriple& a, const PrimeTriple& b) { return a == b; })
        .def("__repr__", [](const PrimeTriple& t) {
            return "PrimeTriple(" + to_decimal(t.p1()) + ", " + to_decimal(t.p2()) + ", " + to_decimal(t.p3()) + ")";
        });

    m.def(
        "binary_terms_general", [](const BigInt& p1, const BigInt& p2) { return to_py(binary_terms_general(BinaryPair(p1, p2))); },
        py::arg("p1"), py::arg("p2"));
    m.def(
        "binary_terms_ordered", [](const BigInt& p1, const BigInt& p2) { return to_py(binary_terms_ordered(p1, p2)); },
        py::arg("p1"), py::arg("p2"));
    m.def(
        "block_g",
        [](std::uint64_t i1, std::uint64_t i2, Branch b, const PrimeTriple& t) { return to_py(block_g(i1, i2, b, t)); },
        py::arg("i1"), py::arg("i2"), py::arg("branch"), py::arg("triple"));
    m.def(
        "block_f", [](const PrimeTriple& t, const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>& i) {
            return to_py(block_f(to_index(i), t));
        },
        py::arg("triple"), py::arg("index"));
    m.def(
        "block_f_oracle",
        [](const PrimeTriple& t, const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>& i) {
            return to_py(block_f_oracle(to_index(i), t));
        },
        py::arg("triple"), py::arg("index"));
    m.def("coefficient_at", &coefficient_at, py::arg("triple"), py::arg("e"));
    m.def("count_distinct_blocks", &count_distinct_blocks, py::arg("triple"));

    py::class_<TernaryTermStream>(m, "TermStream")
        .def(py::init<PrimeTriple>(), py::arg("triple"))
        .def("__iter__", [](TernaryTermStream& s) -> TernaryTermStream& { return s; })
        .def("__next__",
             [](TernaryTermStream& s) {
                 auto t = s.next();
                 if (!t) throw py::stop_iteration();
                 return PyTerm(t->exponent, t->coeff);
             })
        .def_property_readonly("emitted", &TernaryTermStream::emitted);
    m.def(
        "terms", [](const PrimeTriple& t) { return TernaryTermStream(t); }, py::arg("triple"),
        "Lazy ascending iterator of (exponent, coeff) pairs.");

    // analytics
    m.def("hw_ternary", &hw_ternary, py::arg("triple"));
    m.def("hw_binary", [](const BigInt& p1, const BigInt& p2) { return hw_binary(BinaryPair(p1, p2)); }, py::arg("p1"),
          py::arg("p2"));
    m.def(
        "density",
        [](const PrimeTriple& t) {
            const Density d = density(t);
            return py::make_tuple(to_py(d.exact), to_py(d.asymptote));
        },
        py::arg("triple"), "((hw, phi), (2, 3 p2)) as unreduced numerator/denominator pairs.");
    m.def("block_hw", &block_hw, py::arg("i1"), py::arg("branch"), py::arg("p1"));
    m.def("distinct_block_count", &distinct_block_count, py::arg("triple"));
    m.def("degree", &degree, py::arg("triple"));

    // search
    m.def(
        "next_p2", [](const BigInt& p1, std::uint64_t cap) { return next_p2(p1, SearchOptions{cap}); }, py::arg("p1"),
        py::arg("max_candidates") = SearchOptions{}.max_candidates);
    m.def(
        "next_p3",
        [](const BigInt& p1, const BigInt& p2, std::uint64_t cap) { return next_p3(p1, p2, SearchOptions{cap}); },
        py::arg("p1"), py::arg("p2"), py::arg("max_candidates") = SearchOptions{}.max_candidates);
    m.def("enumerate_triples", &enumerate_triples, py::arg("bound"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
