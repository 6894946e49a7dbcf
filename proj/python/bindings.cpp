#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mockhyp/catalog.hpp"
#include "mockhyp/cli.hpp"
#include "mockhyp/frobenius.hpp"
#include "mockhyp/geometry.hpp"
#include "mockhyp/io.hpp"
#include "mockhyp/kloop.hpp"

namespace py = pybind11;
using namespace mockhyp;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string report_text(const AxiomReport& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite involution geometries, K-loops and Frobenius extensions";

  static py::exception<Error> error(m, "MockhypError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("from_table",
                  [](const std::vector<std::vector<Elem>>& t) { return FiniteGroup::from_cayley_table(t); })
      .def_static("from_permutations", [](std::size_t degree, const std::vector<Perm>& gens) {
        return FiniteGroup::from_permutation_generators(degree, gens);
      })
      .def("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("label", &FiniteGroup::label)
      .def("table", &FiniteGroup::table)
      .def("involutions", [](const FiniteGroup& g) { return involutions(g); })
      .def("involution_classes", [](const FiniteGroup& g) { return involution_classes(g); })
      .def("__len__", &FiniteGroup::order);

  m.def("catalog", [](const std::string& name) {
    CatalogEntry e = catalog_entry(name);
    return py::make_tuple(e.group, e.complement);
  }, py::arg("name"), "(group, complement or None) for a catalog name");
  m.def("default_corpus", &default_corpus);

  m.def("verify_mhrs", [](const FiniteGroup& g, const ElemSet& q) {
    return report_text(verify_mhrs(g, q));
  });
  m.def("lemma_battery", [](const FiniteGroup& g, const ElemSet& q) {
    return report_text(lemma_battery(complete_geometry(g, q)));
  });
  m.def("splitting_suite", [](const FiniteGroup& g, const ElemSet& q) {
    return report_text(splitting_suite(complete_geometry(g, q)));
  });
  m.def("lines", [](const FiniteGroup& g, const ElemSet& q) { return complete_geometry(g, q).lines(); });

  m.def("kloop_table", [](const FiniteGroup& g, const ElemSet& carrier) {
    return KLoop::from_twisted(g, carrier).table();
  });
  m.def("verify_kloop", [](const std::vector<std::vector<Pos>>& table) {
    return report_text(verify_kloop_axioms(KLoop::from_table(table)));
  });

  m.def("extend_frobenius", [](std::uint32_t p, std::uint32_t d) {
    const Extension ext = extend_degenerate(frobenius_semidirect(p, d));
    py::dict out;
    out["group_order"] = ext.product.group().order();
    out["Q"] = ext.geometry.q();
    out["lines"] = ext.geometry.lines();
    out["report"] = report_text(verify_frobenius_mhrs(ext));
    return out;
  });

  m.def("permutation_characteristic", [](const std::string& name) {
    return permutation_characteristic(ActionGroup(catalog_entry(name).group));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit code, stdout, stderr) of one command line");
}
