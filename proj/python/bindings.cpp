#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sfab/cli.hpp"
#include "sfab/hecke.hpp"
#include "sfab/plancherel.hpp"
#include "sfab/spherical.hpp"

namespace py = pybind11;
using namespace sfab;

namespace {

std::map<int, mpq_class> to_q(const std::map<int, std::string>& q) {
  std::map<int, mpq_class> out;
  for (const auto& [k, v] : q) out[k] = parse_rational(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Context>(m, "Context")
      .def(py::init([](const std::string& type, int rank, const std::map<int, std::string>& q) {
             return std::make_unique<Context>(type, rank, to_q(q));
           }),
           py::arg("type"), py::arg("rank"), py::arg("q"))
      .def_property_readonly("name", [](const Context& c) { return c.rs().name(); })
      .def_property_readonly("rank", [](const Context& c) { return c.rs().rank(); })
      .def_property_readonly("exceptional", [](const Context& c) { return c.ps().mode() == Mode::Exceptional; })
      .def_property_readonly("warnings", [](const Context& c) { return c.ps().warnings(); });

  m.def(
      "n_lambda",
      [](const Context& c, const std::vector<int>& l) {
        return eval_exact(n_lambda(c, Coweight::from(l)), c.ps().class_q()).str();
      },
      py::arg("ctx"), py::arg("lam"), "Exact vertex count N_lambda as a decimal string.");

  m.def(
      "spherical",
      [](const Context& c, const std::vector<int>& l, const std::vector<std::complex<double>>& u) {
        py::gil_scoped_release release;
        return macdonald_eval(c, Coweight::from(l), u);
      },
      py::arg("ctx"), py::arg("lam"), py::arg("u"));

  m.def(
      "norm_at_one", [](const Context& c, const std::vector<int>& l) { return norm_at_one(c, Coweight::from(l)).value; },
      py::arg("ctx"), py::arg("lam"));

  m.def(
      "structure_constants",
      [](const Context& c, const std::vector<int>& l, const std::vector<int>& mu) {
        py::dict out;
        const auto z = c.ps().z_values();
        for (const auto& [nu, a] : structure_constants(c, Coweight::from(l), Coweight::from(mu)).a)
          out[py::tuple(py::cast(nu.to_vector()))] = a.value(z);
        return out;
      },
      py::arg("ctx"), py::arg("lam"), py::arg("mu"));

  m.def(
      "orthogonality_residual",
      [](const Context& c, int max_height, int grid) {
        py::gil_scoped_release release;
        return orthogonality(c, dominant_up_to_height(c.rs().rank(), max_height), grid).max_residual;
      },
      py::arg("ctx"), py::arg("max_height"), py::arg("grid"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"sfab"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line tool in-process; returns (exit code, stdout, stderr).");
}
