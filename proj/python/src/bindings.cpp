#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rspin/abelian.hpp"
#include "rspin/classes.hpp"
#include "rspin/expression.hpp"
#include "rspin/report.hpp"
#include "rspin/topology.hpp"
#include "rspin/twists.hpp"

namespace py = pybind11;

// Python ints cross the boundary as decimal strings, so nothing is ever
// narrowed to a machine word.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using rspin::Int;
using rspin::abelian::FgAbGroup;
using rspin::classes::ModuliContext;

ModuliContext make_context(const Int& r, const Int& g, std::optional<int> eps, bool force) {
  return rspin::report::make_context({r, g, eps, force});
}

rspin::classes::FormalClass parse(const ModuliContext& ctx, const std::string& text) {
  return rspin::expression::parse(text, ctx.r());
}

rspin::abelian::IntMatrix to_matrix(const std::vector<std::vector<Int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return rspin::abelian::IntMatrix::from_rows(rows, cols);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact second cohomology of r-Spin moduli spaces";

  auto base = py::register_exception<rspin::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<rspin::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<rspin::RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<rspin::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<FgAbGroup>(m, "Group")
      .def_property_readonly("free_rank", &FgAbGroup::free_rank)
      .def_property_readonly("invariant_factors", &FgAbGroup::invariant_factors)
      .def("is_finite", &FgAbGroup::is_finite)
      .def("torsion", &FgAbGroup::torsion)
      .def("__eq__", [](const FgAbGroup& a, const FgAbGroup& b) { return a == b; })
      .def("__str__", &FgAbGroup::to_string)
      .def("__repr__", [](const FgAbGroup& g) { return "Group(" + g.to_string() + ")"; });

  m.def("group_from_presentation",
        [](std::size_t generators, const std::vector<std::vector<Int>>& relations) {
          auto rel = to_matrix(relations);
          if (relations.empty()) rel = rspin::abelian::IntMatrix(0, generators);
          return rspin::abelian::group_from_presentation(generators, rel);
        },
        py::arg("generators"), py::arg("relations"));
  m.def("smith_normal_form",
        [](const std::vector<std::vector<Int>>& rows) {
          const auto f = rspin::abelian::smith_normal_form(to_matrix(rows));
          return py::make_tuple(f.S.to_rows(), f.U.to_rows(), f.V.to_rows());
        },
        "Return (S, U, V) with U * A * V = S.");

  m.def("u_r", &rspin::classes::u_r, py::arg("r"));
  m.def("torsion_order", &rspin::classes::torsion_order, py::arg("r"));
  m.def("pi2_multiplier", &rspin::topology::pi2_multiplier, py::arg("r"));

  py::class_<ModuliContext>(m, "Context")
      .def(py::init(&make_context), py::arg("r"), py::arg("g"), py::arg("eps") = py::none(),
           py::arg("force") = false)
      .def_property_readonly("r", &ModuliContext::r)
      .def_property_readonly("g", &ModuliContext::g)
      .def_property_readonly("eps", &ModuliContext::eps)
      .def_property_readonly("chi", &ModuliContext::chi)
      .def_property_readonly("u_r", &ModuliContext::u_r)
      .def_property_readonly("torsion_order", &ModuliContext::torsion_order)
      .def_property_readonly("nonempty", &ModuliContext::nonempty)
      .def("__repr__", [](const ModuliContext& c) { return "Context(" + c.describe() + ")"; });

  m.def("h1", &rspin::topology::h1_moduli, py::arg("ctx"));
  m.def("h2", &rspin::topology::h2_moduli, py::arg("ctx"));
  m.def("h1_theta", &rspin::twists::h1_theta, py::arg("ctx"));
  m.def("free_coordinate",
        [](const ModuliContext& c, const std::string& x) {
          return rspin::classes::free_coordinate(c, parse(c, x));
        },
        py::arg("ctx"), py::arg("expression"));
  m.def("phi",
        [](const ModuliContext& c, const std::string& x) {
          return rspin::classes::phi_value(c, parse(c, x));
        },
        py::arg("ctx"), py::arg("expression"));
  m.def("canonical_coords",
        [](const ModuliContext& c, const std::string& x) {
          const auto k = rspin::classes::canonical_coords(c, parse(c, x));
          return py::make_tuple(k.d, k.tau);
        },
        py::arg("ctx"), py::arg("expression"), "Return (d, tau).");
  m.def("rational_multiple_of_lambda",
        [](const ModuliContext& c, const std::string& x) {
          const auto q = rspin::classes::rational_multiple_of_lambda(c, parse(c, x));
          return py::make_tuple(Int(q.get_num()), Int(q.get_den()));
        },
        py::arg("ctx"), py::arg("expression"), "Return (numerator, denominator).");
  m.def("normalize",
        [](const ModuliContext& c, const std::string& x) {
          return rspin::expression::format_class(parse(c, x), c.r());
        },
        py::arg("ctx"), py::arg("expression"));
  m.def("torsion_generator",
        [](const ModuliContext& c) {
          return rspin::expression::format_class(rspin::classes::torsion_generator(c), c.r());
        },
        py::arg("ctx"));
  m.def("presentation",
        [](const ModuliContext& c) {
          const auto p =
              rspin::classes::presentation(c, rspin::classes::preferred_generators(c));
          return rspin::expression::format_presentation(p, c.r());
        },
        py::arg("ctx"));
  m.def("twist_shift",
        [](const ModuliContext& c, const std::string& x, std::optional<int> arf, const Int& beta) {
          if (c.r_even() && !arf) arf = c.eps();
          return rspin::twists::twist_shift({c, arf, beta}, parse(c, x));
        },
        py::arg("ctx"), py::arg("expression"), py::arg("arf") = py::none(),
        py::arg("beta") = 1);

  // Full reports as JSON text; the Python package decodes them.
  auto query = [](const Int& r, const Int& g, std::optional<int> eps, bool force) {
    return rspin::report::Query{r, g, eps, force};
  };
  m.def("_report_json",
        [query](const Int& r, const Int& g, std::optional<int> eps, bool force) {
          return rspin::report::build_report(query(r, g, eps, force)).dump();
        },
        py::arg("r"), py::arg("g"), py::arg("eps") = py::none(), py::arg("force") = false);
  m.def("_theta_json",
        [query](const Int& r, const Int& g, std::optional<int> eps, bool force) {
          return rspin::report::build_theta(query(r, g, eps, force)).dump();
        },
        py::arg("r"), py::arg("g"), py::arg("eps") = py::none(), py::arg("force") = false);
  m.def("_table_json",
        [](const Int& r_min, const Int& r_max) {
          return rspin::report::build_table(r_min, r_max).dump();
        },
        py::arg("r_min"), py::arg("r_max"));
  m.def("render_text",
        [](const std::string& document) {
          return rspin::report::render_text(rspin::report::json::parse(document));
        },
        py::arg("document"));
}
