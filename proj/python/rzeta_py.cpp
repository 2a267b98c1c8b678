#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rzeta/jobspec.hpp"
#include "rzeta/oracles.hpp"
#include "rzeta/zeta.hpp"

namespace py = pybind11;
using namespace rzeta;

namespace {

py::object big(const mpz_class& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object rnumber_to_py(const RNumber& r) {
    if (!r.is_finite()) return py::cast(std::numeric_limits<double>::infinity());
    return big(r.value());
}

py::list poly_to_py(const PolyZ& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(big(c));
    if (p.is_zero()) out.append(0);
    return out;
}

MatZ matz_from_py(const std::vector<std::vector<long long>>& rows) {
    return MatZ::from_rows(rows);
}

MatF2 matf2_from_py(const std::vector<std::vector<int>>& rows) {
    return MatF2::from_rows(rows);
}

VecF2 vecf2_from_py(const std::vector<int>& bits) { return VecF2::from_bits(bits); }

py::dict combo_to_py(const BasisCombo& combo) {
    py::dict out;
    for (const auto& [i, c] : combo.coeffs()) out[py::int_(i)] = py::int_(c);
    return out;
}

struct PyInstance {
    ValidatedAut aut;

    static PyInstance make(std::size_t n, std::size_t holonomy_rank,
                           const std::vector<std::vector<long long>>& D,
                           const std::vector<long long>& d) {
        AffineAut a;
        a.D = matz_from_py(D);
        for (long long x : d) a.d.push_back(mpz_class(static_cast<long>(x)));
        return PyInstance{validate({n, holonomy_rank}, a)};
    }

    py::object rnumber(std::uint64_t m) const { return rnumber_to_py(reidemeister_number(aut, m)); }

    py::list rnumbers(std::uint64_t kmax) const {
        py::list out;
        for (const auto& r : reidemeister_sequence(aut, kmax)) out.append(rnumber_to_py(r));
        return out;
    }

    py::tuple exists() const {
        ZetaExistence ze = zeta_exists(aut);
        return py::make_tuple(ze.exists, ze.reason);
    }

    py::dict zeta() const {
        PipelineResult res = full_pipeline(aut);
        py::dict out;
        out["numerator"] = poly_to_py(res.fn.numerator);
        out["denominator"] = poly_to_py(res.fn.denominator);
        out["radius"] = res.r.value;
        out["radius_error"] = res.r.error_bound;
        out["degree_bound"] = res.fn.degree_bound_used;
        out["certified"] = res.fn.certified;
        out["second_factor_c"] = combo_to_py(res.second_combo);
        py::list rs;
        for (const auto& r : res.rnumbers) rs.append(big(r));
        out["rnumbers"] = rs;
        py::list series;
        for (const auto& e : res.series) {
            if (e.get_den() != 1) throw std::logic_error("non-integer series coefficient");
            series.append(big(e.get_num()));
        }
        out["series"] = series;
        return out;
    }
};

}  // namespace

PYBIND11_MODULE(_rzeta, m) {
    m.doc() = "Reidemeister numbers and zeta functions of crystallographic groups "
              "with diagonal Z_2 holonomy";

    py::register_exception<zeta_undefined>(m, "ZetaUndefined", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const validation_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PyInstance>(m, "Instance")
        .def(py::init(&PyInstance::make), py::arg("n"), py::arg("holonomy_rank"), py::arg("D"),
             py::arg("d"),
             "Validated automorphism of the group <Z^n, (0, -I_k (+) I_{n-k})>")
        .def("reidemeister_number", &PyInstance::rnumber, py::arg("m"),
             "R(phi^m); float('inf') when infinite")
        .def("reidemeister_numbers", &PyInstance::rnumbers, py::arg("kmax"))
        .def("zeta_exists", &PyInstance::exists, "(exists, reason)")
        .def("zeta", &PyInstance::zeta,
             "certified closed form: numerator/denominator coefficients, radius, "
             "series and Reidemeister numbers");

    m.def(
        "count_solutions",
        [](const std::vector<std::vector<int>>& a, const std::vector<int>& b) {
            return count_solutions(matf2_from_py(a), vecf2_from_py(b));
        },
        py::arg("A"), py::arg("b"), "number of solutions of A x = b over the two-element field");

    m.def(
        "decompose",
        [](const std::vector<std::vector<int>>& d, const std::vector<int>& dv) {
            return combo_to_py(decompose(matf2_from_py(d), vecf2_from_py(dv)));
        },
        py::arg("D"), py::arg("d"),
        "coefficients c_i with O(I - D^k, [sum D^i] d) = sum_i c_i a^i_k");

    m.def(
        "solution_sequence",
        [](const std::vector<std::vector<int>>& d, const std::vector<int>& dv, std::size_t horizon) {
            return solution_sequence(matf2_from_py(d), vecf2_from_py(dv), horizon).v;
        },
        py::arg("D"), py::arg("d"), py::arg("horizon"));

    m.def(
        "verify_random",
        [](std::size_t count, std::uint64_t seed, std::size_t dim) {
            py::list out;
            for (const auto& rep : run_random_verification(seed, count, dim)) {
                py::dict r;
                r["check"] = rep.check;
                r["instances"] = rep.instances;
                r["failures"] = rep.failures;
                r["wall_ms"] = rep.wall_ms;
                out.append(r);
            }
            return out;
        },
        py::arg("count") = 50, py::arg("seed") = 1, py::arg("dim") = 6);
}
