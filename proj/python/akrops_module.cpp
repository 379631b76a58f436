#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "akr/akr.hpp"
#include "akr/asymptotics.hpp"
#include "akr/bernstein.hpp"
#include "akr/catalog.hpp"
#include "akr/errors.hpp"
#include "akr/tensor.hpp"
#include "akr/verification.hpp"

namespace py = pybind11;

namespace {

// Either a catalog name or a Python callable.
using Fn1 = std::variant<std::string, std::function<double(double)>>;
using Fn2 = std::variant<std::string, std::function<double(double, double)>>;

akr::Function1D to_function(const Fn1& f) {
  if (const auto* name = std::get_if<std::string>(&f)) return akr::lookup(*name).function1d();
  return {std::get<1>(f), {}, {}};
}

akr::Function2D to_function(const Fn2& f) {
  if (const auto* name = std::get_if<std::string>(&f)) return akr::lookup(*name).function2d();
  akr::Function2D out;
  out.eval = std::get<1>(f);
  return out;
}

akr::TensorPath path_of(bool double_sum) {
  return double_sum ? akr::TensorPath::double_sum : akr::TensorPath::automatic;
}

py::dict to_dict(const akr::ExtrapolationResult& r) {
  py::dict d;
  d["limit_estimate"] = r.limit_estimate;
  d["rate_estimate"] = r.rate_estimate ? py::cast(*r.rate_estimate) : py::none();
  d["residual_tail"] = r.residual_tail;
  d["monotone_tail"] = r.monotone_tail;
  return d;
}

}  // namespace

PYBIND11_MODULE(akrops, m) {
  m.doc() = "Bernstein and AKR operators on [0,1] and [0,1]^2";

  static py::exception<akr::CapabilityError> capability(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const akr::LookupError& e) {
      PyErr_SetString(PyExc_LookupError, e.what());
    } catch (const akr::CapabilityError& e) {
      capability(e.what());
    }
  });

  m.def("basis_weight",
        [](int n, int k, double x) { return akr::basis_weight(akr::BasisContext(n), k, x); },
        py::arg("n"), py::arg("k"), py::arg("x"));
  m.def("bernstein_apply",
        [](const Fn1& f, int n, double x) { return akr::bernstein_apply(to_function(f), n, x); },
        py::arg("f"), py::arg("n"), py::arg("x"));
  m.def("akr_apply",
        [](const Fn1& f, int n, int j, double x) { return akr::akr_apply(to_function(f), n, j, x); },
        py::arg("f"), py::arg("n"), py::arg("j"), py::arg("x"));
  m.def("akr_node", &akr::akr_node, py::arg("n"), py::arg("k"), py::arg("j"));
  m.def(
      "nodes",
      [](int n, int j) {
        const auto table = akr::build_node_table(n, j);
        return std::vector<double>(table.nodes().begin(), table.nodes().end());
      },
      py::arg("n"), py::arg("j") = 2);
  m.def("remainder_R", &akr::remainder_R, py::arg("n"), py::arg("k"));
  m.def("fixed_point_error", &akr::fixed_point_error, py::arg("n"), py::arg("j"),
        py::arg("grid_size") = 101);

  m.def(
      "tensor_bernstein_apply",
      [](const Fn2& f, int n, double x, double y, bool double_sum) {
        return akr::tensor_bernstein_apply(to_function(f), n, {x, y}, path_of(double_sum));
      },
      py::arg("f"), py::arg("n"), py::arg("x"), py::arg("y"), py::arg("double_sum") = false);
  m.def(
      "tensor_akr_apply",
      [](const Fn2& f, int n, int j, double x, double y, bool double_sum) {
        return akr::tensor_akr_apply(to_function(f), n, j, {x, y}, path_of(double_sum));
      },
      py::arg("f"), py::arg("n"), py::arg("j"), py::arg("x"), py::arg("y"),
      py::arg("double_sum") = false);
  m.def(
      "tensor_akr_minus_bernstein",
      [](const Fn2& f, int n, int j, double x, double y, bool double_sum) {
        return akr::tensor_akr_minus_bernstein(to_function(f), n, j, {x, y}, path_of(double_sum));
      },
      py::arg("f"), py::arg("n"), py::arg("j"), py::arg("x"), py::arg("y"),
      py::arg("double_sum") = false);

  m.def("lemma_sum", &akr::lemma_sum, py::arg("n"), py::arg("x"));
  m.def(
      "voronovskaja_rhs_2d",
      [](const std::string& fn, double x, double y) {
        return akr::voronovskaja_rhs_2d(akr::lookup(fn).function2d(), {x, y});
      },
      py::arg("fn"), py::arg("x"), py::arg("y"));
  m.def(
      "classical_rhs_2d",
      [](const std::string& fn, double x, double y) {
        return akr::classical_rhs_2d(akr::lookup(fn).function2d(), {x, y});
      },
      py::arg("fn"), py::arg("x"), py::arg("y"));
  m.def(
      "drift_2d",
      [](const std::string& fn, double x, double y) {
        return akr::drift_2d(akr::lookup(fn).function2d(), {x, y});
      },
      py::arg("fn"), py::arg("x"), py::arg("y"));
  m.def(
      "decomposition",
      [](const Fn2& fn, int n, double x, double y) {
        const akr::Function2D f = to_function(fn);
        const akr::Decomposition d = akr::decomposition(f, n, {x, y});
        py::dict out;
        out["n"] = d.n;
        out["e_term"] = d.e_term;
        out["f_term"] = d.f_term;
        out["g_residual"] = d.g_residual;
        out["total"] = d.total;
        const auto bound = akr::g_residual_bound(f, n);
        out["g_bound"] = bound ? py::cast(*bound) : py::none();
        return out;
      },
      py::arg("fn"), py::arg("n"), py::arg("x"), py::arg("y"));

  m.def(
      "residual_series",
      [](const std::string& kind_tag, const std::string& fn, const std::vector<double>& point,
         int n0, int doublings, int j) {
        const auto kind = akr::parse_operator_kind(kind_tag);
        const akr::Schedule schedule{n0, doublings};
        akr::ConvergenceSeries s;
        {
          py::gil_scoped_release release;
          if (kind == akr::OperatorKind::lemma_sum) {
            if (point.size() != 1) throw akr::DomainError("lemma-sum needs one coordinate");
            s = akr::lemma_series(point[0], schedule);
          } else if (akr::is_two_dimensional(kind)) {
            if (point.size() != 2) throw akr::DomainError("2D kinds need two coordinates");
            s = akr::residual_series(kind, akr::lookup(fn).function2d(), {point[0], point[1]},
                                     schedule, {j});
          } else {
            if (point.size() != 1) throw akr::DomainError("1D kinds need one coordinate");
            s = akr::residual_series(kind, akr::lookup(fn).function1d(), point[0], schedule, {j});
          }
        }
        std::vector<std::pair<int, double>> rows;
        for (const auto& e : s.entries) rows.emplace_back(e.n, e.value);
        return rows;
      },
      py::arg("kind"), py::arg("fn"), py::arg("point"), py::arg("n0") = 64,
      py::arg("doublings") = 7, py::arg("j") = 2);
  m.def(
      "extrapolate", [](const std::vector<double>& values) { return to_dict(akr::extrapolate(values)); },
      py::arg("values"));

  m.def("catalog_names", &akr::catalog_names);
  m.def(
      "evaluate",
      [](const std::string& fn, const std::vector<double>& point) {
        const akr::CatalogEntry entry = akr::lookup(fn);
        if (static_cast<int>(point.size()) != entry.arity) {
          throw akr::DomainError(fn + " takes " + std::to_string(entry.arity) + " coordinate(s)");
        }
        return entry.arity == 1 ? entry.function1d()(point[0])
                                : entry.function2d()(point[0], point[1]);
      },
      py::arg("fn"), py::arg("point"));

  m.def("run_verification_suite", [] {
    std::vector<akr::CriterionResult> results;
    {
      py::gil_scoped_release release;
      results = akr::run_verification_suite();
    }
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  });
}
