#include "deltarig/factor.hpp"
#include "deltarig/invariants.hpp"
#include "deltarig/json_io.hpp"
#include "deltarig/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace deltarig;

namespace {

py::object int_to_py(const Int& v) {
    // round-trip through the decimal string keeps arbitrary precision
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict terms_dict(const BiPoly& p) {
    py::dict out;
    for (const auto& [exps, c] : p.terms())
        out[py::make_tuple(exps.first, exps.second)] = int_to_py(c);
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::list fails;
    for (const auto& f : r.failures) {
        py::dict one;
        one["instance"] = f.instance;
        one["property"] = f.property;
        one["witness"] = f.witness;
        fails.append(one);
    }
    py::dict out;
    out["instances"] = r.instance_count;
    out["failures"] = fails;
    out["seconds"] = r.seconds;
    out["seed"] = r.seed;
    return out;
}

py::dict profile_dict(const TutteProfile& p) {
    py::dict sizes;
    for (const auto& [size, count] : p.feasible_size_counts)
        sizes[py::int_(size)] = int_to_py(count);
    py::dict out;
    out["elements"] = p.n_elements;
    out["sigma2"] = p.sigma2;
    out["width"] = p.width;
    out["feasible_size_counts"] = sizes;
    out["even"] = p.is_even;
    out["matroid"] = p.is_matroid;
    return out;
}

}  // namespace

PYBIND11_MODULE(_deltarig, m) {
    m.doc() = "Delta-matroid Tutte polynomials, ribbon-graph polynomials, and exact "
              "bivariate factorization over the integers";

    py::class_<BiPoly>(m, "BiPoly")
        .def_static("parse", &BiPoly::parse, py::arg("text"))
        .def("__str__", &BiPoly::to_string)
        .def("__repr__", [](const BiPoly& p) { return "BiPoly(\"" + p.to_string() + "\")"; })
        .def("__eq__", [](const BiPoly& a, const BiPoly& b) { return a == b; })
        .def("__mul__", [](const BiPoly& a, const BiPoly& b) { return a * b; })
        .def("terms", &terms_dict)
        .def("eval", [](const BiPoly& p, long long x, long long y) {
            return int_to_py(p.eval(Int(x), Int(y)));
        });

    py::class_<DeltaMatroid>(m, "DeltaMatroid")
        .def_static("from_json", &dm_from_json, py::arg("text"))
        .def("to_json", &dm_to_json)
        .def("__repr__", &DeltaMatroid::describe)
        .def("size", &DeltaMatroid::size)
        .def("ground", &DeltaMatroid::ground)
        .def("width", &DeltaMatroid::width)
        .def("is_even", &DeltaMatroid::is_even)
        .def("is_matroid", &DeltaMatroid::is_matroid)
        .def("is_connected", [](const DeltaMatroid& d) { return d.is_connected(); })
        .def("dual", &DeltaMatroid::dual)
        .def("twist", [](const DeltaMatroid& d, const std::vector<std::string>& labels) {
            return d.twist(d.mask_of(labels));
        })
        .def_static("direct_sum", &DeltaMatroid::direct_sum)
        .def("tutte", [](const DeltaMatroid& d) { return tutte_subset_sum(d); })
        .def("beta", [](const DeltaMatroid& d) { return int_to_py(beta(d)); })
        .def("is_series_parallel", [](const DeltaMatroid& d) { return is_series_parallel(d); });

    py::class_<RibbonGraph>(m, "RibbonGraph")
        .def_static("from_json", &rg_from_json, py::arg("text"))
        .def("to_json", &rg_to_json)
        .def("num_vertices", &RibbonGraph::num_vertices)
        .def("num_edges", &RibbonGraph::num_edges)
        .def("orientable", &RibbonGraph::orientable)
        .def("delta_matroid", &RibbonGraph::delta_matroid)
        .def("poly", [](const RibbonGraph& g) { return ribbon_polynomial(g); })
        .def("metrics", [](const RibbonGraph& g) {
            const auto m2 = g.metrics(g.full_edge_mask());
            py::dict out;
            out["components"] = m2.components;
            out["rank"] = m2.rank;
            out["boundary"] = m2.boundary;
            out["euler_genus"] = m2.euler_genus;
            out["sigma2"] = m2.sigma2;
            return out;
        })
        .def_static("disjoint_union", &RibbonGraph::disjoint_union)
        .def_static("join", &RibbonGraph::join, py::arg("a"), py::arg("v1"), py::arg("pos1"),
                    py::arg("b"), py::arg("v2"), py::arg("pos2"));

    m.def("factor", [](const std::string& text) {
        const auto f = factor_bivariate(BiPoly::parse(text));
        py::list factors;
        for (const auto& [p, mult] : f.factors) factors.append(py::make_tuple(p, mult));
        return py::make_tuple(int_to_py(f.content), factors);
    });
    m.def("is_irreducible",
          [](const std::string& text) { return is_irreducible(BiPoly::parse(text)); });
    m.def("profile", [](const std::string& text) {
        return profile_dict(profile_from_polynomial(BiPoly::parse(text)));
    });
    m.def("verify_theorem",
          [](int max_n, std::uint64_t seed, bool sampled) {
              return report_dict(verify_theorem(max_n, seed, sampled, false));
          },
          py::arg("max_n") = 4, py::arg("seed") = 0x5eed5eedULL, py::arg("sampled") = true);
    m.def("verify_ribbon",
          [](int max_edges) { return report_dict(verify_ribbon(max_edges)); },
          py::arg("max_edges") = 3);
}
