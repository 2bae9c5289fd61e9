#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "traceid/error.hpp"
#include "traceid/identities.hpp"
#include "traceid/polymatrix.hpp"
#include "traceid/verify.hpp"

namespace py = pybind11;
using namespace traceid;

namespace {

// Reports cross the boundary as plain dicts.
py::object as_dict(const VerificationReport& r) {
  return py::module_::import("json").attr("loads")(r.to_json().dump());
}

Generator parse_generator(const std::string& s) {
  if (s == "sl2z") return Generator::SL2Z;
  if (s == "gaussian") return Generator::Gaussian;
  throw py::value_error("generator must be 'sl2z' or 'gaussian'");
}

py::dict matrices(const IdentityMatrices& m) {
  py::dict d;
  d["A"] = m.a;
  d["B"] = m.b;
  d["C"] = m.c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks of SL(2) trace determinant identities";

  py::register_exception<Error>(m, "TraceidError");

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<long>(), py::arg("value") = 0)
      .def_static("parse", &Polynomial::parse)
      .def_static("a", &Polynomial::a)
      .def_static("lam", &Polynomial::lambda)
      .def_static("beta", &Polynomial::beta)
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree", &Polynomial::total_degree)
      .def("__len__", &Polynomial::size)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("__eq__", [](const Polynomial& x, const Polynomial& y) { return x == y; })
      .def("__add__", [](const Polynomial& x, const Polynomial& y) { return x + y; })
      .def("__sub__", [](const Polynomial& x, const Polynomial& y) { return x - y; })
      .def("__mul__", [](const Polynomial& x, const Polynomial& y) { return x * y; })
      .def("__neg__", [](const Polynomial& x) { return -x; })
      .def("__pow__", [](const Polynomial& x, unsigned k) { return x.pow(k); })
      .def("__hash__", [](const Polynomial& p) { return py::hash(py::str(p.to_string())); });

  py::class_<PolyMatrix>(m, "PolyMatrix")
      .def_static("parse", &PolyMatrix::parse)
      .def_property_readonly("row_labels", &PolyMatrix::row_labels)
      .def_property_readonly("col_labels", &PolyMatrix::col_labels)
      .def("__getitem__", [](const PolyMatrix& x, std::pair<int, int> rc) { return x(rc.first, rc.second); })
      .def("__str__", &PolyMatrix::to_string)
      .def("__eq__", [](const PolyMatrix& x, const PolyMatrix& y) { return x == y; });

  m.def("generic_matrix", &generic_matrix);
  m.def("generic_skew_matrix", &generic_skew_matrix);
  m.def("det", [](const PolyMatrix& x) { return det_dp(x); });
  m.def("det_oracle", [](const PolyMatrix& x) { return det_perm_oracle(x); });
  m.def("pfaffian", [](const PolyMatrix& x) { return pfaffian(x); });
  m.def("pfaffian_split", [](const PolyMatrix& x) { return pfaffian_split(x); });

  m.def("build_thm1", [](int n) { return matrices(build_thm1(n)); });
  m.def("build_thm3", [](int n) { return matrices(build_thm3(n)); });

  m.def("verify", [](const std::string& which, int n) {
    const auto id = identity_from_string(which);
    if (!id) throw py::value_error("unknown identity: " + which);
    return as_dict(*id == IdentityId::Thm1 ? verify_thm1(n) : verify_thm3_family(n, *id));
  }, py::arg("identity"), py::arg("n"));
  m.def("verify_magnus", [](int n, int trials, std::uint64_t seed, const std::string& gen, bool consistent) {
    return as_dict(verify_magnus_numeric(n, trials, seed, parse_generator(gen),
                                         consistent ? MagnusForm::SignConsistent : MagnusForm::AsPrinted));
  }, py::arg("n"), py::arg("trials") = 100, py::arg("seed") = 1, py::arg("generator") = "sl2z",
     py::arg("consistent") = false);
  m.def("verify_magnus_original", [](int trials, std::uint64_t seed, const std::string& gen) {
    return as_dict(verify_magnus_original(trials, seed, parse_generator(gen)));
  }, py::arg("trials") = 100, py::arg("seed") = 1, py::arg("generator") = "sl2z");
  m.def("verify_thm2", [](int n, int trials, std::uint64_t seed, bool exhaustive, const std::string& gen) {
    return as_dict(verify_thm2(n, trials, seed, exhaustive ? EpsMode::Exhaustive : EpsMode::Random,
                               parse_generator(gen)));
  }, py::arg("n"), py::arg("trials") = 100, py::arg("seed") = 1, py::arg("exhaustive") = false,
     py::arg("generator") = "sl2z");
  m.def("verify_trace_relation", [](int trials, std::uint64_t seed, const std::string& gen) {
    return as_dict(verify_trace_relation(trials, seed, parse_generator(gen)));
  }, py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("generator") = "sl2z");
}
