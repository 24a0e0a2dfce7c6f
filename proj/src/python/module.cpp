#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sornum/demos.hpp"
#include "sornum/ieee.hpp"

#include <memory>
#include <string>

namespace py = pybind11;
using namespace sornum;

namespace {

Rational to_rational(const py::object& v) {
    if (py::isinstance<py::str>(v)) {
        std::string s = v.cast<std::string>();
        if (s.find('/') != std::string::npos) {
            Rational r(s);
            r.canonicalize();
            return r;
        }
        return rational_from_decimal(s);
    }
    if (py::isinstance<py::int_>(v)) {
        Rational r(py::str(v).cast<std::string>());  // arbitrary precision via str()
        r.canonicalize();
        return r;
    }
    return rational_from_double(v.cast<double>());
}

RStar to_rstar(const py::object& v) {
    if (py::isinstance<py::str>(v) && v.cast<std::string>() == "inf") return RStar::inf();
    return RStar(to_rational(v));
}

}  // namespace

PYBIND11_MODULE(_sornum, m) {
    m.doc() = "table-driven Unum/SORN arithmetic";

    py::class_<Sorn>(m, "Sorn")
        .def("__len__", &Sorn::size)
        .def("count", &Sorn::count)
        .def("test", &Sorn::test, py::arg("i"))
        .def("set_bits", &Sorn::set_bits)
        .def("is_empty", &Sorn::none)
        .def("is_full", &Sorn::all)
        .def("__eq__", [](const Sorn& a, const Sorn& b) { return a == b; })
        .def("__ne__", [](const Sorn& a, const Sorn& b) { return a != b; });

    py::class_<Runtime, std::shared_ptr<Runtime>> rt(m, "Runtime");
    rt.def_static(
          "generate",
          [](unsigned bits, unsigned sig_digits) {
              return std::make_shared<Runtime>(machine_env(bits, sig_digits),
                                               generate_machine(bits, sig_digits));
          },
          py::arg("bits"), py::arg("sig_digits"))
        .def_static("load",
                    [](const std::string& path) {
                        return std::make_shared<Runtime>(Runtime::load(path));
                    },
                    py::arg("path"))
        .def("save",
             [](const Runtime& r, const std::string& path) { save_tables(r.tables(), path); },
             py::arg("path"))
        .def_property_readonly("n_unums", [](const Runtime& r) { return r.env().size(); })
        .def_property_readonly("lattice",
                               [](const Runtime& r) {
                                   std::vector<std::string> out;
                                   for (const Rational& p : r.env().lattice().points)
                                       out.push_back(decimal_string(p));
                                   return out;
                               })
        .def_property("strict_empty", &Runtime::strict_empty, &Runtime::set_strict_empty)
        .def("empty", &Runtime::uemp)
        .def("full", &Runtime::uset)
        .def("singleton",
             [](const Runtime& r, const py::object& v) {
                 return r.blur(Flake::singleton(to_rstar(v)));
             },
             py::arg("value"), "SORN of the Unum containing the value")
        .def("open_interval",
             [](const Runtime& r, const py::object& lo, const py::object& hi) {
                 return r.blur(Flake::interval(to_rstar(lo), to_rstar(hi)));
             },
             py::arg("lo"), py::arg("hi"))
        .def("interval",
             [](const Runtime& r, const py::object& lo, const py::object& hi) {
                 return r.uinterval(to_rational(lo), to_rational(hi));
             },
             py::arg("lo"), py::arg("hi"), "SORN covering the closed interval [lo, hi]")
        .def("index_of",
             [](const Runtime& r, const py::object& v) { return r.env().index_of(to_rstar(v)); },
             py::arg("value"))
        .def("add",
             [](const Runtime& r, const Sorn& a, const Sorn& b, bool dep) {
                 return r.uadd(a, b, dep ? Dep::dependent : Dep::independent);
             },
             py::arg("a"), py::arg("b"), py::arg("dependent") = false)
        .def("sub",
             [](const Runtime& r, const Sorn& a, const Sorn& b, bool dep) {
                 return r.usub(a, b, dep ? Dep::dependent : Dep::independent);
             },
             py::arg("a"), py::arg("b"), py::arg("dependent") = false)
        .def("mul",
             [](const Runtime& r, const Sorn& a, const Sorn& b, bool dep) {
                 return r.umul(a, b, dep ? Dep::dependent : Dep::independent);
             },
             py::arg("a"), py::arg("b"), py::arg("dependent") = false)
        .def("div",
             [](const Runtime& r, const Sorn& a, const Sorn& b, bool dep) {
                 return r.udiv(a, b, dep ? Dep::dependent : Dep::independent);
             },
             py::arg("a"), py::arg("b"), py::arg("dependent") = false)
        .def("neg", &Runtime::uneg, py::arg("a"))
        .def("inv", &Runtime::uinv, py::arg("a"))
        .def("abs", &Runtime::uabs, py::arg("a"))
        .def("log", &Runtime::ulog, py::arg("a"))
        .def("intersect", &Runtime::ucut, py::arg("a"), py::arg("b"))
        .def("union", &Runtime::uuni, py::arg("a"), py::arg("b"))
        .def("equal", &Runtime::uequ, py::arg("a"), py::arg("b"))
        .def("superset", &Runtime::usup, py::arg("a"), py::arg("b"))
        .def("out", &Runtime::uout, py::arg("a"))
        .def("runs", &Runtime::runs, py::arg("a"))
        .def("hull", [](const Runtime& r, const Sorn& a) {
            Hull h = r.hull(a);
            py::dict d;
            d["is_empty"] = h.is_empty;
            d["is_full"] = h.is_full;
            if (!h.is_empty && !h.is_full) {
                d["lo"] = h.lo.is_inf() ? std::string("inf") : decimal_string(h.lo.value());
                d["lo_open"] = h.lo_open;
                d["hi"] = h.hi.is_inf() ? std::string("inf") : decimal_string(h.hi.value());
                d["hi_open"] = h.hi_open;
            }
            return d;
        });

    m.def("table_size_bits", &table_size_bits, py::arg("bits"));
    m.def("lattice_size_from_bits", &lattice_size_from_bits, py::arg("bits"));

    py::class_<FloatFormat>(m, "FloatFormat")
        .def(py::init<unsigned, unsigned>(), py::arg("mantissa_bits"), py::arg("exponent_bits"));
    m.attr("binary16") = kBinary16;
    m.attr("binary32") = kBinary32;
    m.attr("binary64") = kBinary64;
    m.def("round_nearest_even", [](const FloatFormat& f, const py::object& x) {
        RoundResult r = round_nearest_even(f, to_rational(x));
        py::dict d;
        d["overflow"] = r.overflow;
        if (r.overflow)
            d["sign"] = r.sign;
        else
            d["value"] = decimal_string(r.value);
        return d;
    });
    m.def("round_up", [](const FloatFormat& f, const py::object& x) {
        return decimal_string(round_up(f, to_rational(x)));
    });
    m.def("round_down", [](const FloatFormat& f, const py::object& x) {
        return decimal_string(round_down(f, to_rational(x)));
    });
}
