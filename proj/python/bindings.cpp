#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include <nlohmann/json.hpp>

#include "jmult/analysis.hpp"
#include "jmult/io.hpp"

namespace py = pybind11;
using namespace jmult;

namespace {

std::shared_ptr<PowerCache>& globalCache() {
  static auto cache = std::make_shared<PowerCache>();
  return cache;
}

FitConfig makeConfig(int margin, int maxOrigin, int jobs) {
  FitConfig cfg;
  cfg.margin = margin;
  cfg.maxOrigin = maxOrigin;
  cfg.jobs = jobs;
  return cfg;
}

// Reports cross the boundary as the same JSON documents the CLI prints;
// python's json module parses arbitrary-precision integers exactly.
py::object jsonToPy(const nlohmann::json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(py::str(j.dump()));
}

Monomial monomialFrom(const std::vector<Exponent>& exps) { return Monomial(exps); }

}  // namespace

PYBIND11_MODULE(_jmult, m) {
  m.doc() = "Exact generalized Hilbert coefficients, j-multiplicity and first coefficient "
            "ideals of monomial ideals";

  py::register_exception<Error>(m, "JmultError");

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init([](std::vector<std::string> vars, std::vector<std::vector<Exponent>> gens) {
             std::vector<Monomial> ms;
             ms.reserve(gens.size());
             for (auto& e : gens) ms.emplace_back(std::move(e));
             return MonomialIdeal(std::move(vars), std::move(ms));
           }),
           py::arg("vars"), py::arg("gens"))
      .def_static("parse",
                  [](const std::string& text) { return parseIdealText(text).ideal; },
                  py::arg("text"), "Parse the text ideal format (vars: header + generators)")
      .def_property_readonly("vars", &MonomialIdeal::vars)
      .def_property_readonly("gens",
                             [](const MonomialIdeal& I) {
                               std::vector<std::vector<Exponent>> out;
                               out.reserve(I.gens().size());
                               for (const Monomial& g : I.gens()) out.push_back(g.exponents());
                               return out;
                             })
      .def_property_readonly("is_zero", &MonomialIdeal::isZero)
      .def_property_readonly("is_unit", &MonomialIdeal::isUnit)
      .def_property_readonly("max_gen_degree", &MonomialIdeal::maxGenDegree)
      .def("contains",
           [](const MonomialIdeal& I, const std::vector<Exponent>& e) {
             return I.contains(monomialFrom(e));
           },
           py::arg("exponents"))
      .def("contains_ideal", &MonomialIdeal::containsIdeal, py::arg("other"))
      .def("sum", [](const MonomialIdeal& K, const MonomialIdeal& L) { return idealSum(K, L); })
      .def("product",
           [](const MonomialIdeal& K, const MonomialIdeal& L) { return idealProduct(K, L); })
      .def("power",
           [](const MonomialIdeal& K, int n) { return globalCache()->power(K, n); },
           py::arg("n"))
      .def("colon",
           [](const MonomialIdeal& K, const std::vector<Exponent>& e) {
             return colonByMonomial(K, monomialFrom(e));
           },
           py::arg("exponents"))
      .def("to_text", &formatIdealText)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& I) { return "Ideal" + I.str(); });

  m.def("coefficients",
        [](const MonomialIdeal& I, int margin, int maxOrigin, int jobs) {
          return jsonToPy(coefficientReportToJson(
              generalizedCoefficients(I, makeConfig(margin, maxOrigin, jobs), globalCache())));
        },
        py::arg("ideal"), py::arg("margin") = 2, py::arg("max_origin") = 12, py::arg("jobs") = 0,
        "Generalized Hilbert coefficients report: d, j, c, jmult, ell, fit");

  m.def("classical_coefficients",
        [](const MonomialIdeal& I, int margin, int maxOrigin, int jobs) {
          return jsonToPy(classicalToJson(
              classicalCoefficients(I, makeConfig(margin, maxOrigin, jobs), globalCache())));
        },
        py::arg("ideal"), py::arg("margin") = 2, py::arg("max_origin") = 12, py::arg("jobs") = 0,
        "Classical Hilbert coefficients e_0..e_d of an m-primary ideal");

  m.def("minimal_primes",
        [](const MonomialIdeal& I) {
          std::vector<std::vector<std::string>> out;
          for (const MonomialPrime& p : minimalPrimes(I)) {
            std::vector<std::string> names;
            for (int t : p.support) names.push_back(I.vars()[static_cast<size_t>(t)]);
            out.push_back(std::move(names));
          }
          return out;
        },
        py::arg("ideal"));

  m.def("height", [](const MonomialIdeal& I) { return height(I); }, py::arg("ideal"));

  m.def("localize",
        [](const MonomialIdeal& I, const std::vector<std::string>& names) {
          std::vector<int> support;
          for (const std::string& name : names) {
            auto it = std::find(I.vars().begin(), I.vars().end(), name);
            if (it == I.vars().end()) {
              throw Error(Errc::InvalidArgument, "unknown variable '" + name + "'");
            }
            support.push_back(static_cast<int>(it - I.vars().begin()));
          }
          std::sort(support.begin(), support.end());
          support.erase(std::unique(support.begin(), support.end()), support.end());
          return localize(I, MonomialPrime{support});
        },
        py::arg("ideal"), py::arg("prime_vars"));

  m.def("integral_closure", [](const MonomialIdeal& I) { return integralClosureGens(I); },
        py::arg("ideal"));

  m.def("is_reduction",
        [](const MonomialIdeal& J, const MonomialIdeal& I, int nmax) {
          return jsonToPy(reductionToJson(isReduction(J, I, nmax, globalCache())));
        },
        py::arg("J"), py::arg("I"), py::arg("nmax") = 8);

  m.def("fci_contains",
        [](const MonomialIdeal& I, const MonomialIdeal& J, int margin, int maxOrigin, int jobs) {
          return fciContains(I, J, makeConfig(margin, maxOrigin, jobs), globalCache());
        },
        py::arg("I"), py::arg("J"), py::arg("margin") = 2, py::arg("max_origin") = 12,
        py::arg("jobs") = 0, "True iff J is contained in the first coefficient ideal of I");

  m.def("first_coefficient_ideal",
        [](const MonomialIdeal& I, long dbound, int margin, int maxOrigin, int jobs) {
          FciResult r = firstCoefficientIdeal(I, dbound, makeConfig(margin, maxOrigin, jobs),
                                              globalCache());
          py::dict out = jsonToPy(fciResultToJson(r, I.vars()));
          out["ideal"] = r.fci;
          return out;
        },
        py::arg("ideal"), py::arg("dbound") = -1, py::arg("margin") = 2,
        py::arg("max_origin") = 12, py::arg("jobs") = 0);

  m.def("compare_localized",
        [](const MonomialIdeal& I, const MonomialIdeal& J, bool allPrimes, int margin,
           int maxOrigin, int jobs) {
          return jsonToPy(comparisonToJson(
              compareLocalized(I, J, makeConfig(margin, maxOrigin, jobs), globalCache(),
                               allPrimes),
              I.vars()));
        },
        py::arg("I"), py::arg("J"), py::arg("all_primes") = true, py::arg("margin") = 2,
        py::arg("max_origin") = 12, py::arg("jobs") = 0);

  m.def("cq_cross_check",
        [](const MonomialIdeal& I, int margin, int maxOrigin, int jobs) {
          CqCheck c = cqCrossCheck(I, makeConfig(margin, maxOrigin, jobs), globalCache());
          nlohmann::json j{{"q", c.q},
                           {"from_table", bigIntToJson(c.fromTable)},
                           {"from_formula", bigIntToJson(c.fromFormula)}};
          return jsonToPy(j);
        },
        py::arg("ideal"), py::arg("margin") = 2, py::arg("max_origin") = 12, py::arg("jobs") = 0);

  m.def("table",
        [](const MonomialIdeal& I, int imax, int jmax, const std::string& kind, int jobs) {
          if (I.isZero()) throw Error(Errc::InvalidArgument, "table needs a nonzero ideal");
          TSource src(I, globalCache());
          BigradedTable t = tableFromSource(
              src, kind == "h10" ? TableKind::H10 : TableKind::H11, imax, jmax,
              /*parallel=*/true, jobs);
          return jsonToPy(tableToJson(t));
        },
        py::arg("ideal"), py::arg("imax") = 8, py::arg("jmax") = 8, py::arg("kind") = "h11",
        py::arg("jobs") = 0);

  m.def("dimension_of_n",
        [](const MonomialIdeal& I, const MonomialIdeal& J, int margin, int maxOrigin, int jobs) {
          DimNResult r = dimensionOfN(I, J, makeConfig(margin, maxOrigin, jobs), globalCache());
          nlohmann::json j{{"dim", r.dim}, {"n_zero", r.nZero}};
          return jsonToPy(j);
        },
        py::arg("I"), py::arg("J"), py::arg("margin") = 2, py::arg("max_origin") = 12,
        py::arg("jobs") = 0);

  m.def("cache_stats", []() {
    nlohmann::json j{{"entries", globalCache()->entries()},
                     {"bytes", globalCache()->memoryBytes()}};
    return jsonToPy(j);
  });
  m.def("clear_cache", []() { globalCache()->clear(); });

  m.attr("__version__") = "0.1.0";
}
