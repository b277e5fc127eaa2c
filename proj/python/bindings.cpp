#include "qschubert/partial.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"
#include "qschubert/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace qschubert;

namespace {

py::object to_py_int(const Integer& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Permutation perm(const std::vector<int>& images) { return Permutation(images); }

std::vector<Permutation> perms(const std::vector<std::vector<int>>& list) {
  std::vector<Permutation> out;
  for (const auto& w : list) out.emplace_back(w);
  return out;
}

py::tuple to_tuple(std::span<const int> s) {
  py::tuple t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = s[i];
  return t;
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum Schubert calculus on complete and partial flag manifolds";

  py::register_exception<ExpansionError>(m, "ExpansionError", PyExc_ArithmeticError);

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__pow__", &Polynomial::pow)
      .def("is_zero", &Polynomial::is_zero)
      .def("to_json", [](const Polynomial& p) { return json_to_py(to_json(p)); })
      .def_static("from_json",
                  [](const py::object& o) {
                    const std::string text = py::str(py::module_::import("json").attr("dumps")(o));
                    return polynomial_from_json(nlohmann::json::parse(text));
                  })
      .def_static("x", [](int i) { return Polynomial(Variable::x(i)); })
      .def_static("q", [](int i) { return Polynomial(Variable::q(i)); })
      .def_static("g", [](int i, int j) { return Polynomial(Variable::g(i, j)); })
      .def_static("constant", [](long long c) { return Polynomial(Integer(c)); });

  py::class_<QuantumClass>(m, "QuantumClass")
      .def("__str__", &QuantumClass::to_string)
      .def("__repr__", [](const QuantumClass& c) { return "QuantumClass(" + c.to_string() + ")"; })
      .def("__eq__", [](const QuantumClass& a, const QuantumClass& b) { return a == b; })
      .def_property_readonly("n", &QuantumClass::n)
      .def_property_readonly("q_count", &QuantumClass::q_count)
      .def("is_zero", &QuantumClass::is_zero)
      .def("coefficient",
           [](const QuantumClass& c, const std::vector<int>& d, const std::vector<int>& w) {
             return to_py_int(c.coefficient(MultiDegree(d), Permutation(w)));
           })
      .def("terms",
           [](const QuantumClass& c) {
             py::dict out;
             for (const auto& [key, coeff] : c.terms())
               out[py::make_tuple(to_tuple(key.first.entries()), to_tuple(key.second.images()))] = to_py_int(coeff);
             return out;
           },
           "Mapping (d, w) -> coefficient.")
      .def("to_json", [](const QuantumClass& c) { return json_to_py(to_json(c)); });

  m.def("schubert_poly", [](const std::vector<int>& w) { return schubert_poly(perm(w)); });
  m.def("quantum_schubert", [](const std::vector<int>& w) { return quantum_schubert(perm(w)); });
  m.def("universal_schubert", [](const std::vector<int>& w) { return universal_schubert_g(perm(w)); });
  m.def("universal_schubert_c", [](const std::vector<int>& w) { return universal_schubert_c(perm(w)); });
  m.def("quantum_e", &quantum_e, py::arg("k"), py::arg("l"));
  m.def("path_poly", &path_poly, py::arg("k"), py::arg("l"));
  m.def("relations", &relations, py::arg("n"));
  m.def("divided_difference", &divided_difference, py::arg("p"), py::arg("i"));
  m.def("specialize_quantum", &specialize_quantum);
  m.def("specialize_classical", &specialize_classical);

  m.def("expand",
        [](int n, const Polynomial& p) {
          py::gil_scoped_release release;
          return quantum_ring(n).expand_in_quantum_basis(p);
        },
        py::arg("n"), py::arg("p"), "Expansion of p(x, q) in the quantum Schubert basis of QH*(F(n)).");
  m.def("quantum_product",
        [](const std::vector<int>& u, const std::vector<int>& v) {
          const Permutation a = perm(u), b = perm(v);
          py::gil_scoped_release release;
          return quantum_ring(a.size()).quantum_product(a, b);
        });
  m.def("quantum_product_multi",
        [](const std::vector<std::vector<int>>& ws) {
          const auto list = perms(ws);
          if (list.empty()) throw std::invalid_argument("quantum_product_multi: empty sequence");
          py::gil_scoped_release release;
          return quantum_ring(list.front().size()).quantum_product_multi(list);
        });
  m.def("classical_product",
        [](const std::vector<int>& u, const std::vector<int>& v) {
          const Permutation a = perm(u), b = perm(v);
          py::gil_scoped_release release;
          return quantum_ring(a.size()).classical_product(a, b);
        });
  m.def(
      "gromov_witten",
      [](const std::vector<std::vector<int>>& ws, const std::vector<int>& w, const std::vector<int>& d) {
        const auto list = perms(ws);
        const Permutation c = perm(w);
        Integer value;
        {
          py::gil_scoped_release release;
          value = quantum_ring(c.size()).gromov_witten(list, c, MultiDegree(d));
        }
        return to_py_int(value);
      },
      py::arg("insertions"), py::arg("w"), py::arg("d"));

  m.def("partial_quantum_schubert", [](const std::vector<int>& w, const std::string& shape) {
    return partial_quantum_schubert(perm(w), FlagShape::parse(shape));
  });
  m.def("partial_relations", [](const std::string& shape) { return partial_relations(FlagShape::parse(shape)); });
  m.def("partial_basis", [](const std::string& shape) {
    std::vector<std::vector<int>> out;
    for (const auto& w : sn_elements(FlagShape::parse(shape))) out.emplace_back(w.images().begin(), w.images().end());
    return out;
  });
  m.def("partial_quantum_product",
        [](const std::vector<int>& u, const std::vector<int>& v, const std::string& shape) {
          const FlagShape s = FlagShape::parse(shape);
          const Permutation a = perm(u), b = perm(v);
          py::gil_scoped_release release;
          return partial_quantum_product(a, b, s);
        });
  m.def(
      "partial_gw",
      [](const std::vector<std::vector<int>>& ws, const std::vector<int>& w, const std::vector<int>& d,
         const std::string& shape) {
        const FlagShape s = FlagShape::parse(shape);
        const auto list = perms(ws);
        const Permutation c = perm(w);
        Integer value;
        {
          py::gil_scoped_release release;
          value = partial_gw(list, c, MultiDegree(d), s);
        }
        return to_py_int(value);
      },
      py::arg("insertions"), py::arg("w"), py::arg("d"), py::arg("shape"));

  m.def("suite_names", &verify::suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> n, std::optional<std::string> shape, std::uint64_t seed,
         int samples) {
        verify::SuiteOptions o;
        o.n = n;
        if (shape) o.shape = FlagShape::parse(*shape);
        o.seed = seed;
        o.samples = samples;
        std::vector<verify::PropertyResult> results;
        {
          py::gil_scoped_release release;
          results = verify::run_suite(suite, o);
        }
        py::list out;
        for (const auto& r : results)
          out.append(py::dict(py::arg("property") = r.property, py::arg("cases") = r.cases,
                              py::arg("passed") = r.passed, py::arg("counterexample") = r.counterexample));
        return out;
      },
      py::arg("suite"), py::arg("n") = py::none(), py::arg("shape") = py::none(), py::arg("seed") = 1,
      py::arg("samples") = 100);
}
