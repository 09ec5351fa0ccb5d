#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bctkit/families.hpp"
#include "bctkit/gf2n.hpp"
#include "bctkit/sbox.hpp"
#include "bctkit/tables.hpp"
#include "bctkit/verify.hpp"
#include "bctkit/walsh.hpp"

namespace py = pybind11;
using namespace bctkit;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  return py::module_::import("fractions")
      .attr("Fraction")(to_py(boost::multiprecision::numerator(v)),
                        to_py(boost::multiprecision::denominator(v)));
}

py::array_t<std::uint32_t> to_array(const KTable& t) {
  py::array_t<std::uint32_t> out({t.size(), t.size()});
  std::copy(t.counts().begin(), t.counts().end(), out.mutable_data());
  return out;
}

SBox sbox_from(const Field& field, const std::vector<Element>& table) {
  return SBox(field, table);
}

py::dict report(const ClaimReport& r) {
  py::dict d;
  d["claim_id"] = r.claim_id;
  d["description"] = r.description;
  d["expected"] = r.expected;
  d["computed"] = r.computed ? py::object(py::int_(*r.computed)) : py::object(py::none());
  d["status"] = to_string(r.status);
  d["runtime_ms"] = r.runtime_ms;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boomerang connectivity and difference distribution tables over GF(2^n).";

  py::register_exception<std::length_error>(m, "SizeLimitError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def(py::init<int, std::uint32_t>(), py::arg("n"), py::arg("reduction"))
      .def_property_readonly("n", &Field::n)
      .def_property_readonly("reduction", &Field::reduction)
      .def_property_readonly("size", &Field::size)
      .def("mul", &Field::mul)
      .def("pow", &Field::pow)
      .def("inv", &Field::inv)
      .def("trace", &Field::trace)
      .def("order", &Field::order)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__str__", &Field::to_string)
      .def("__repr__", [](const Field& f) { return "Field('" + f.to_string() + "')"; });
  m.def("make_field", &make_field, py::arg("n"));
  m.def("parse_field", &parse_field, py::arg("text"));
  m.def("default_irreducible", &default_irreducible, py::arg("n"));

  py::class_<SBox>(m, "SBox")
      .def(py::init(&sbox_from), py::arg("field"), py::arg("table"))
      .def_property_readonly("field", &SBox::field)
      .def_property_readonly("n", &SBox::n)
      .def_property_readonly("table", [](const SBox& f) {
        return std::vector<Element>(f.table().begin(), f.table().end());
      })
      .def("__call__", [](const SBox& f, Element x) {
        if (!f.field().contains(x)) throw py::index_error("element out of range");
        return f(x);
      })
      .def("__len__", &SBox::size)
      .def("__eq__", [](const SBox& a, const SBox& b) { return a == b; })
      .def_static("identity", &SBox::identity);
  m.def("from_monomial", &from_monomial, py::arg("field"), py::arg("d"));
  m.def("is_permutation", &is_permutation);
  m.def("inverse", &inverse_table);
  m.def("compose", &compose);

  m.def("ddt", [](const SBox& f, unsigned threads) { return to_array(ddt(f, threads)); },
        py::arg("f"), py::arg("threads") = 0);
  m.def(
      "bct",
      [](const SBox& f, const std::string& algo, unsigned threads) {
        return to_array(bct(f, parse_bct_algorithm(algo), threads));
      },
      py::arg("f"), py::arg("algo") = "fast", py::arg("threads") = 0);
  m.def("bct_row", &bct_row, py::arg("f"), py::arg("a"));
  m.def(
      "uniformity",
      [](const SBox& f, unsigned threads) {
        const UniformityReport r = boomerang_uniformity(f, threads);
        py::dict d;
        d["differential_uniformity"] = r.differential_uniformity;
        d["boomerang_uniformity"] = r.boomerang_uniformity;
        d["ddt_argmax"] = py::make_tuple(r.ddt_argmax.a, r.ddt_argmax.b);
        d["bct_argmax"] = py::make_tuple(r.bct_argmax.a, r.bct_argmax.b);
        d["algorithm"] = r.algorithm;
        return d;
      },
      py::arg("f"), py::arg("threads") = 0);
  m.def(
      "monomial_uniformity",
      [](const Field& field, std::uint64_t d) {
        return monomial_boomerang_uniformity(field, d).boomerang_uniformity;
      },
      py::arg("field"), py::arg("d"));

  m.def(
      "walsh",
      [](const SBox& f, unsigned threads) {
        const WalshSpectrum w = walsh_spectrum(f, threads);
        py::array_t<std::int32_t> out({w.size(), w.size()});
        auto view = out.mutable_unchecked<2>();
        for (Element u = 0; u < w.size(); ++u)
          for (Element v = 0; v < w.size(); ++v) view(u, v) = w.at(u, v);
        return out;
      },
      py::arg("f"), py::arg("threads") = 0);
  m.def(
      "moment",
      [](const SBox& f, unsigned j, const std::string& method) {
        if (method == "direct") return to_py(bct_moment_direct(f, j));
        if (method == "walsh") return to_py(bct_moment_walsh(f, j));
        throw std::invalid_argument("method must be 'direct' or 'walsh'");
      },
      py::arg("f"), py::arg("j"), py::arg("method") = "direct");
  m.def("two_uniform_certificate", [](const SBox& f) {
    const TwoUniformCertificate c = two_uniform_certificate(f);
    py::dict d;
    d["lhs"] = to_py(c.lhs);
    d["rhs"] = to_py(c.rhs);
    d["gap"] = to_py(c.gap);
    return d;
  });
  m.def(
      "delta_certificate",
      [](const SBox& f, unsigned delta) {
        const auto c =
            delta_uniform_certificate(f, CertificatePolynomial::vanishing_product(delta, f.n()));
        py::dict d;
        d["delta"] = c.delta;
        d["value"] = to_py(c.value);
        d["is_zero"] = c.is_zero;
        return d;
      },
      py::arg("f"), py::arg("delta"));

  m.def(
      "family",
      [](const std::string& spec, std::optional<Field> field) {
        return parse_family_spec(spec, field).sbox;
      },
      py::arg("spec"), py::arg("field") = py::none());
  m.def("family_names", &family_names);
  m.def("zieve_gammas", &zieve_gamma_candidates, py::arg("field"));

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.claim_id);
    return ids;
  });
  m.def(
      "reproduce",
      [](const std::string& claim_id, double budget_s) {
        ClaimReport r;
        {
          py::gil_scoped_release release;
          r = reproduce(claim_id, std::chrono::milliseconds(static_cast<std::int64_t>(budget_s * 1000)));
        }
        return report(r);
      },
      py::arg("claim_id"), py::arg("budget_s") = 600.0);
}
