#include "comppoly/combinatorics.hpp"
#include "comppoly/report_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace comppoly;

namespace {

Rational rat(const std::string& s) { return Rational::from_string(s); }

FamilySpec spec_from(const std::string& family, const py::dict& params, unsigned l) {
    auto fam = family_from_name(family);
    if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
    FamilySpec spec;
    spec.family = *fam;
    spec.l = l;
    for (const auto& item : params) {
        std::string key = py::cast<std::string>(item.first);
        Rational value = rat(py::cast<std::string>(item.second));
        if (key == "c")
            spec.c = value;
        else if (key == "a")
            spec.a = value;
        else if (key == "b")
            spec.b = value;
        else if (key == "N")
            spec.N = value;
        else
            throw std::invalid_argument("unknown parameter '" + key + "'");
    }
    spec.validate();
    return spec;
}

Route route_from(const std::string& name) {
    auto r = route_from_name(name);
    if (!r) throw std::invalid_argument("unknown route '" + name + "'");
    return *r;
}

std::vector<std::string> poly_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const Rational& c : p.coeffs()) out.push_back(c.str());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact complementary-polynomial kernels";

    m.def("gen_binom",
          [](const std::string& alpha, unsigned k) { return gen_binom(rat(alpha), k).str(); },
          py::arg("alpha"), py::arg("k"));
    m.def("pochhammer",
          [](const std::string& alpha, unsigned k) { return pochhammer(rat(alpha), k).str(); },
          py::arg("alpha"), py::arg("k"));
    m.def("double_fact", [](long n) { return double_fact(n).get_str(); }, py::arg("n"));

    m.def("cp",
          [](const std::string& family, const py::dict& params, unsigned l, unsigned nu,
             const std::string& route) {
              return poly_strings(cp(spec_from(family, params, l), nu, route_from(route)));
          },
          py::arg("family"), py::arg("params"), py::arg("l"), py::arg("nu"),
          py::arg("route") = "genfunc",
          "Ascending coefficient strings of the complementary polynomial");
    m.def("cp_eval",
          [](const std::string& family, const py::dict& params, unsigned l, unsigned nu,
             const std::string& x, const std::string& route) {
              return cp(spec_from(family, params, l), nu, route_from(route)).eval(rat(x)).str();
          },
          py::arg("family"), py::arg("params"), py::arg("l"), py::arg("nu"), py::arg("x"),
          py::arg("route") = "genfunc");

    m.def("legendre_norm",
          [](unsigned l, unsigned m2) { return legendre_norm(l, m2).str(); }, py::arg("l"),
          py::arg("m"));
    m.def("kummer_poly",
          [](unsigned nu, const std::string& c) { return poly_strings(kummer_poly(nu, rat(c))); },
          py::arg("nu"), py::arg("c"));
    m.def("gauss_poly",
          [](unsigned nu, const std::string& b, const std::string& c) {
              return poly_strings(gauss_poly(nu, rat(b), rat(c)));
          },
          py::arg("nu"), py::arg("b"), py::arg("c"));

    m.def("classical_limit_drift",
          [](const std::string& family, unsigned n, const std::vector<std::string>& Ns) {
              auto fam = family_from_name(family);
              if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
              std::vector<Rational> values;
              for (const auto& s : Ns) values.push_back(rat(s));
              std::vector<std::pair<std::string, std::string>> out;
              for (const auto& [N, dev] : classical_limit_drift(*fam, n, values))
                  out.emplace_back(N.str(), dev.str());
              return out;
          },
          py::arg("family"), py::arg("n"), py::arg("N_values"));

    m.def("run_suite_json",
          [](const std::vector<std::string>& ids, const std::string& grid) {
              SuiteResult r = run_suite(ids, GridConfig::by_name(grid));
              return py::make_tuple(r.all_assert_pass, checks_to_json(r));
          },
          py::arg("ids") = std::vector<std::string>{}, py::arg("grid") = "default",
          "Returns (all_assert_pass, report_json)");
    m.def("check_ids", [] {
        std::vector<std::string> ids;
        for (const auto& info : check_catalog()) ids.push_back(info.id);
        return ids;
    });

    m.def("probe_translation",
          [](unsigned l, const std::string& h, const std::string& x, unsigned terms) {
              TranslationProbe tp = probe_translation(l, rat(h), rat(x), terms);
              py::dict d;
              d["l"] = tp.l;
              d["terms"] = tp.terms;
              d["h"] = tp.h.str();
              d["x"] = tp.x.str();
              d["lhs"] = tp.lhs.str();
              d["rhs_partial"] = tp.rhs.str();
              d["residual"] = tp.residual.str();
              return d;
          },
          py::arg("l"), py::arg("h"), py::arg("x"), py::arg("terms"));
}
