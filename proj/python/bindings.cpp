#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "digrev/batch.hpp"
#include "digrev/connectivity.hpp"
#include "digrev/dichromatic.hpp"
#include "digrev/errors.hpp"
#include "digrev/io.hpp"
#include "digrev/reversion.hpp"

namespace py = pybind11;
using namespace digrev;

namespace {

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cli::run(args, in, out, err);
  }
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_digrev, m) {
  m.doc() = "Directed cycle reversion toolkit (JSON in, JSON out)";

  py::register_exception<Error>(m, "DigrevError", PyExc_ValueError);

  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "",
        "Run the command-line front end; returns (exit_code, stdout, stderr).");

  m.def("chi", [](const std::string& graph) {
    const Digraph d = io::parse_digraph(graph);
    const ChiResult r = chi(d);
    return py::make_tuple(r.chi, io::to_json(d, r.coloring).dump());
  }, py::arg("graph_json"));

  m.def("edge_connectivity", [](const std::string& graph, const std::string& u, const std::string& v) {
    const Digraph d = io::parse_digraph(graph);
    return lambda(d, d.vertex(u), d.vertex(v));
  }, py::arg("graph_json"), py::arg("u"), py::arg("v"));

  m.def("reach", [](const std::string& graph, const std::string& target) -> py::object {
    const Digraph d = io::parse_digraph(graph);
    const auto seq = reachable(d, io::parse_digraph(target));
    if (!seq) return py::none();
    return py::str(io::to_json(*seq).dump());
  }, py::arg("graph_json"), py::arg("target_json"));

  m.def("reduce", [](const std::string& graph) {
    const Digraph d = io::parse_digraph(graph);
    const ReduceResult r = charbit_reduce(d, identity_order(d));
    return py::make_tuple(io::to_json(r.sequence).dump(), io::to_json(r.final).dump());
  }, py::arg("graph_json"));

  m.def("suite_names", &suite_names);
}
