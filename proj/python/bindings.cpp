#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iep/driver.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const iep::Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

iep::Int from_py(const py::int_& v) {
    return iep::Int(py::str(static_cast<py::object>(v)).cast<std::string>());
}

py::list septuple_list(const std::vector<iep::Septuple>& septs) {
    py::list out;
    for (const auto& s : septs) {
        py::list row;
        for (const iep::Int& v : s.as_array()) row.append(to_py(v));
        out.append(row);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact solver for the isogenous embedding problem";

    m.def(
        "enumerate_septuples",
        [](py::int_ A, py::int_ B, py::int_ C) {
            return septuple_list(iep::enumerate_septuples(from_py(A), from_py(B), from_py(C)));
        },
        py::arg("A"), py::arg("B"), py::arg("C"),
        "all [x, d/n, a, c/n, b, gamma, n] tuples for the cubic t^3 - At^2 + Bt - C");

    m.def(
        "maximal_order",
        [](py::int_ p) {
            const iep::MaximalOrder R = iep::build_maximal_order(from_py(p));
            py::dict d;
            d["p"] = to_py(R.params.p);
            d["q"] = to_py(R.params.q);
            py::list rows;
            for (const auto& row : R.M) {
                py::list r;
                for (const auto& e : row) r.append(iep::rat_to_string(e));
                rows.append(r);
            }
            d["basis"] = rows;
            d["disc"] = to_py(iep::order_disc(R));
            return d;
        },
        py::arg("p"), "a maximal order of B_{p,oo} with its verified discriminant");

    m.def(
        "achievable_residues",
        [](py::int_ p) {
            const iep::Int P = from_py(p);
            const iep::MaximalOrder R = iep::build_maximal_order(P);
            const auto a = iep::achievable_norms(R, P, /*sweep_limit=*/1 << 14);
            py::list out;
            for (uint64_t r : a.residue_list()) out.append(py::int_(r));
            return out;
        },
        py::arg("p"), "residues mod p attained by the norm on trace-zero order elements");

    m.def(
        "norm_elements",
        [](py::int_ p, py::int_ N) {
            const iep::MaximalOrder R = iep::build_maximal_order(from_py(p));
            py::list out;
            for (const auto& y : iep::elements_with_norm_trace0(R, from_py(N))) {
                py::list c;
                c.append(iep::rat_to_string(y.u));
                c.append(iep::rat_to_string(y.v));
                c.append(iep::rat_to_string(y.w));
                c.append(iep::rat_to_string(y.t));
                out.append(c);
            }
            return out;
        },
        py::arg("p"), py::arg("N"),
        "all trace-zero elements of the maximal order with reduced norm N");

    m.def(
        "run_json",
        [](const std::string& config_text) {
            const iep::RunConfig cfg = iep::parse_config_json(config_text);
            const iep::SolutionReport rep = iep::run(cfg);
            return iep::serialize_report(rep, cfg, "json");
        },
        py::arg("config_json"), "run the main algorithm; returns the JSON report");

    py::register_exception<iep::config_error>(m, "ConfigError");
    py::register_exception<iep::internal_error>(m, "InternalError");
}
