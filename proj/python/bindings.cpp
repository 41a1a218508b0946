#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hopfind/document.hpp"
#include "hopfind/error.hpp"
#include "hopfind/filtration.hpp"
#include "hopfind/indicators.hpp"
#include "hopfind/oracle.hpp"

namespace py = pybind11;
using namespace hopfind;

namespace {

using Rows = std::vector<std::vector<Residue>>;

Rows rows_of(const FieldMatrix& m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r].assign(m.row(r).begin(), m.row(r).end());
  return out;
}

// The identity is the unique e with e*x = x for all x; validate_group checks the rest.
GroupTable group_from_table(const std::vector<std::vector<std::size_t>>& table) {
  GroupTable g;
  g.order = table.size();
  g.table = table;
  for (std::size_t e = 0; e < g.order; ++e) {
    bool left_identity = table[e].size() == g.order;
    for (std::size_t x = 0; left_identity && x < g.order; ++x) left_identity = table[e][x] == x;
    if (left_identity) {
      g.identity = e;
      break;
    }
  }
  validate_group(g);
  return g;
}

py::dict profile_dict(const StructureProfile& s) {
  py::dict d;
  d["dim"] = s.dim;
  d["radical_dim"] = s.radical_dim;
  d["coradical_dim"] = s.coradical_dim;
  d["local"] = s.local;
  d["connected"] = s.connected;
  d["dual_chevalley"] = s.dual_chevalley;
  d["chevalley"] = s.chevalley;
  d["local_dual_chevalley"] = s.local_dual_chevalley;
  d["connected_chevalley"] = s.connected_chevalley;
  return d;
}

py::tuple graded_tuple(const GradedHopfAlgebra& g) { return py::make_tuple(g.base, g.degrees); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hopf algebra computations over GF(p).";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<GroupTable>(m, "Group")
      .def(py::init(&group_from_table), py::arg("table"))
      .def_readonly("order", &GroupTable::order)
      .def_readonly("identity", &GroupTable::identity)
      .def_readonly("table", &GroupTable::table)
      .def("element_order", &GroupTable::element_order)
      .def("__repr__", [](const GroupTable& g) { return "<Group of order " + std::to_string(g.order) + ">"; });
  m.def("cyclic_group", &cyclic_group, py::arg("n"));
  m.def("direct_product", &direct_product);
  m.def("load_group", [](const std::filesystem::path& path) { return group_from_json(read_json_file(path)); });

  py::class_<HopfAlgebraData>(m, "HopfAlgebra")
      .def_property_readonly("dim", [](const HopfAlgebraData& h) { return h.dim; })
      .def_property_readonly("p", [](const HopfAlgebraData& h) { return h.field.modulus(); })
      .def_readonly("labels", &HopfAlgebraData::labels)
      .def_property_readonly("antipode", [](const HopfAlgebraData& h) { return rows_of(h.antipode); })
      .def("to_json", [](const HopfAlgebraData& h) { return format_document(algebra_to_json(h)); })
      .def("same_structure", &same_structure)
      .def("__eq__", [](const HopfAlgebraData& a, const HopfAlgebraData& b) { return a == b; })
      .def("__repr__", [](const HopfAlgebraData& h) {
        return "<HopfAlgebra dim " + std::to_string(h.dim) + " over GF(" + std::to_string(h.field.modulus()) + ")>";
      });

  m.def("from_json", [](const std::string& text) { return algebra_from_json(parse_json(text)).algebra; },
        py::arg("text"));
  m.def(
      "build",
      [](const std::string& text, const std::filesystem::path& base_dir) {
        return build_algebra(parse_json(text), base_dir).algebra;
      },
      py::arg("document"), py::arg("base_dir") = std::filesystem::path("."),
      "Algebra or constructor document given as JSON text.");
  m.def("load", [](const std::filesystem::path& path) { return load_algebra(path).algebra; }, py::arg("path"));

  m.def("group_algebra", &group_algebra, py::arg("group"), py::arg("p"));
  m.def("function_algebra", &function_algebra, py::arg("group"), py::arg("p"));
  m.def("h_delta", &h_delta, py::arg("p"), py::arg("delta"));
  m.def(
      "restricted_enveloping",
      [](std::uint64_t p, std::size_t dim,
         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>>& bracket,
         const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& pmap) {
        const RestrictedLieData lie = make_lie_data(p, dim, bracket, pmap);
        validate_lie(lie);
        return restricted_enveloping(lie);
      },
      py::arg("p"), py::arg("dim"), py::arg("bracket") = py::list(), py::arg("pmap") = py::list(),
      "u(g) for [e_i, e_j] = sum c e_k given as (i, j, k, c) with i < j, and e_i^[p] as (i, k, c).");

  m.def("dual", &dual);
  m.def("tensor", &hopfind::tensor);
  m.def("opposite", &opposite);
  m.def("co_opposite", &co_opposite);
  m.def("validate", [](const HopfAlgebraData& h) {
    std::vector<std::string> axioms;
    for (const auto& f : validate(h).failures) axioms.push_back(f.axiom);
    return axioms;
  });

  m.def("indicator", &indicator, py::arg("h"), py::arg("n"));
  m.def(
      "indicator_sequence",
      [](const HopfAlgebraData& h, std::int64_t lo, std::int64_t hi, unsigned threads) {
        return indicator_sequence(h, lo, hi, threads).values;
      },
      py::arg("h"), py::arg("lo"), py::arg("hi"), py::arg("threads") = 1);
  m.def(
      "indicator_min_poly", [](const HopfAlgebraData& h) { return indicator_min_poly(h).coeffs(); },
      "Coefficients, constant term first.");
  m.def("indicator_period", [](const HopfAlgebraData& h) { return sequence_period(indicator_min_poly(h)); });
  m.def(
      "check_p_pertinent",
      [](const std::vector<Residue>& values, std::int64_t offset, std::uint64_t p, std::uint64_t q) {
        return check_p_pertinent(LRSequence{PrimeField(q), offset, values, std::nullopt, std::nullopt}, p);
      },
      py::arg("values"), py::arg("offset"), py::arg("p"), py::arg("q"),
      "Whether values, indexed from offset and read in GF(q), match the p-pertinent sequence.");
  m.def("is_p_pertinent", [](const HopfAlgebraData& h) {
    const std::uint64_t p = h.field.modulus();
    const std::int64_t r = default_window_radius(p);
    return check_p_pertinent(indicator_sequence(h, -r, r), p);
  });
  m.def("trace_antipode_power", &trace_antipode_power, py::arg("h"), py::arg("n"));
  m.def("binomial_profile", [](std::uint64_t p, std::int64_t n_hi) { return binomial_profile(p, n_hi).values; });

  m.def("jacobson_radical", [](const HopfAlgebraData& h) { return rows_of(jacobson_radical(h).basis()); });
  m.def("coradical_dims", [](const HopfAlgebraData& h) { return coradical_filtration(h).dims(); });
  m.def("jadic_dims", [](const HopfAlgebraData& h) { return jadic_filtration(h).dims(); });
  m.def("graded_from_coradical", [](const HopfAlgebraData& h) { return graded_tuple(graded_from_coradical(h)); },
        "(gr_C H, degrees)");
  m.def("graded_from_jadic", [](const HopfAlgebraData& h) { return graded_tuple(graded_from_jadic(h)); },
        "(gr_J H, degrees)");
  m.def("structure_profile", [](const HopfAlgebraData& h) { return profile_dict(structure_profile(h)); });

  m.def("group_indicator_count", &group_indicator_count, py::arg("group"), py::arg("n"), py::arg("p"));
  m.def("radical_enumeration", [](const HopfAlgebraData& h) { return rows_of(radical_enumeration(h).basis()); });
  m.def(
      "sweedler_bruteforce",
      [](const HopfAlgebraData& h, const std::vector<Residue>& v, std::int64_t k) { return sweedler_bruteforce(h, v, k); },
      py::arg("h"), py::arg("v"), py::arg("m"));
}
