#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>

#include "transvec/commands.hpp"
#include "transvec/fixtures.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_transvec, m) {
    m.doc() = "transvection orbit calculator for bilinear forms over F2";

    py::register_exception<transvec::Error>(m, "Error");

    m.def("fixture_names", &transvec::fixture_names, "names of the built-in documents");
    m.def("fixture", &transvec::fixture_document, py::arg("name"),
          "text of one built-in document");

    m.def(
        "run",
        [](const std::string& command, const std::string& input, const std::string& vector,
           const std::string& domain, const std::string& method, const std::string& level,
           bool oracle, bool json) {
            transvec::CommandOptions opts;
            opts.input = input;
            opts.vector = vector;
            opts.domain = domain;
            opts.method = method;
            opts.level = level;
            opts.oracle = oracle;
            opts.json = json;
            std::ostringstream out, err;
            int rc = transvec::run_command(command, opts, out, err);
            return std::make_tuple(rc, out.str(), err.str());
        },
        py::arg("command"), py::arg("input") = "", py::arg("vector") = "",
        py::arg("domain") = "span", py::arg("method") = "brute", py::arg("level") = "quick",
        py::arg("oracle") = false, py::arg("json") = false,
        "run one command; returns (exit_code, stdout, stderr)");
}
