#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brickforge/errors.hpp"
#include "brickforge/report_io.hpp"
#include "brickforge/search.hpp"
#include "brickforge/tables.hpp"

namespace py = pybind11;
using namespace brickforge;

namespace pybind11::detail {

// Nat <-> Python int, via exact decimal strings (Python ints are unbounded;
// Nat rejects anything at or above 2^127).
template <>
struct type_caster<Nat> {
  PYBIND11_TYPE_CASTER(Nat, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    try {
      value = parse_nat(std::string(py::str(src)));
    } catch (const std::exception&) {
      return false;  // negative or >= 2^127
    }
    return true;
  }

  static handle cast(Nat n, return_value_policy, handle) {
    return PyLong_FromString(to_string(n).c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

py::tuple triple_tuple(const PythTriple& t) { return py::make_tuple(t.u, t.v, t.w); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Euler brick construction, verification and bounded search";

  py::register_exception<NonCanonicalizable>(m, "NonCanonicalizable", PyExc_ValueError);
  py::register_exception<HypothesisNotMet>(m, "HypothesisNotMet", PyExc_ValueError);
  py::register_exception<DegenerateEdge>(m, "DegenerateEdge", PyExc_ValueError);
  py::register_exception<CorruptCheckpoint>(m, "CorruptCheckpoint", PyExc_ValueError);
  py::register_exception<BoundMismatch>(m, "BoundMismatch", PyExc_ValueError);

  py::class_<PythTriple>(m, "PythTriple")
      .def(py::init([](Nat p, Nat q, Nat r) { return make_triple(p, q, r); }))
      .def_readonly("u", &PythTriple::u)
      .def_readonly("v", &PythTriple::v)
      .def_readonly("w", &PythTriple::w)
      .def("__eq__", [](const PythTriple& a, const PythTriple& b) { return a == b; })
      .def("__iter__",
           [](const PythTriple& t) {
             return py::iter(triple_tuple(t));
           })
      .def("__repr__", [](const PythTriple& t) {
        return "PythTriple(" + to_string(t.u) + ", " + to_string(t.v) + ", " + to_string(t.w) +
               ")";
      });

  py::class_<LegPair>(m, "LegPair")
      .def(py::init([](Nat u0, Nat v0) { return make_leg_pair(u0, v0); }))
      .def_readonly("u0", &LegPair::u0)
      .def_readonly("v0", &LegPair::v0)
      .def_readonly("t0", &LegPair::t0)
      .def("__repr__", [](const LegPair& p) {
        return "LegPair(" + to_string(p.u0) + ", " + to_string(p.v0) + ")";
      });

  py::class_<Brick>(m, "Brick")
      .def_readonly("a", &Brick::a)
      .def_readonly("b", &Brick::b)
      .def_readonly("c", &Brick::c)
      .def_readonly("d", &Brick::d)
      .def_readonly("e", &Brick::e)
      .def_readonly("f", &Brick::f)
      .def_property_readonly("edges",
                             [](const Brick& b) { return py::make_tuple(b.a, b.b, b.c); })
      .def_property_readonly("diagonals",
                             [](const Brick& b) { return py::make_tuple(b.d, b.e, b.f); })
      .def("__eq__", [](const Brick& a, const Brick& b) { return a == b; })
      .def("__repr__", [](const Brick& b) {
        return "Brick(" + to_string(b.a) + ", " + to_string(b.b) + ", " + to_string(b.c) + ")";
      });

  py::class_<BrickReport>(m, "BrickReport")
      .def_property_readonly("edges",
                             [](const BrickReport& r) {
                               return py::make_tuple(r.edges[0], r.edges[1], r.edges[2]);
                             })
      .def_property_readonly("diagonals",
                             [](const BrickReport& r) -> py::object {
                               if (!r.diagonals) return py::none();
                               return py::make_tuple((*r.diagonals)[0], (*r.diagonals)[1],
                                                     (*r.diagonals)[2]);
                             })
      .def_readonly("is_euler", &BrickReport::is_euler)
      .def_readonly("is_primitive", &BrickReport::is_primitive)
      .def_property_readonly("space_diagonal",
                             [](const BrickReport& r) -> py::object {
                               if (!r.space_diagonal) return py::none();
                               return py::cast(*r.space_diagonal);
                             })
      .def("__repr__", [](const BrickReport& r) {
        return std::string("BrickReport(is_euler=") + (r.is_euler ? "True" : "False") + ")";
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("k1", &Decomposition::k1)
      .def_readonly("k2", &Decomposition::k2)
      .def_readonly("k3", &Decomposition::k3)
      .def_readonly("t1", &Decomposition::t1)
      .def_readonly("t2", &Decomposition::t2)
      .def_readonly("t3", &Decomposition::t3);

  py::class_<PerfectCuboid>(m, "PerfectCuboid")
      .def_readonly("a", &PerfectCuboid::a)
      .def_readonly("b", &PerfectCuboid::b)
      .def_readonly("c", &PerfectCuboid::c)
      .def_readonly("d", &PerfectCuboid::d)
      .def_readonly("e", &PerfectCuboid::e)
      .def_readonly("f", &PerfectCuboid::f)
      .def_readonly("g", &PerfectCuboid::g);

  py::enum_<ScanKind>(m, "ScanKind")
      .value("conjecture1", ScanKind::conjecture1)
      .value("conjecture2", ScanKind::conjecture2)
      .value("problem1", ScanKind::problem1)
      .value("problem2", ScanKind::problem2)
      .value("problem3", ScanKind::problem3)
      .value("corollary1", ScanKind::corollary1)
      .value("corollary2", ScanKind::corollary2)
      .value("theorem1", ScanKind::theorem1)
      .value("theorem2", ScanKind::theorem2)
      .value("theorem3", ScanKind::theorem3);

  py::class_<ScanHit>(m, "ScanHit")
      .def_readonly("legs", &ScanHit::legs)
      .def_readonly("first", &ScanHit::first)
      .def_readonly("second", &ScanHit::second)
      .def_readonly("brick", &ScanHit::brick)
      .def_readonly("cuboid", &ScanHit::cuboid)
      .def_readonly("roots", &ScanHit::roots)
      .def_readonly("product_holds", &ScanHit::product_holds);

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("kind", &ScanReport::kind)
      .def_readonly("w_bound", &ScanReport::w_bound)
      .def_readonly("leg_bound", &ScanReport::leg_bound)
      .def_readonly("pairs_examined", &ScanReport::pairs_examined)
      .def_readonly("hits", &ScanReport::hits)
      .def_readonly("elapsed_seconds", &ScanReport::elapsed_seconds)
      .def("violations", &ScanReport::violations)
      .def("to_jsonl", [](const ScanReport& r) { return report_to_jsonl(r); })
      .def("to_csv", [](const ScanReport& r) { return report_to_csv(r); });

  // arith
  m.def("isqrt", &isqrt, py::arg("n"));
  m.def("perfect_square", &perfect_square, py::arg("n"));
  m.def("gcd", &gcd, py::arg("a"), py::arg("b"));
  m.def("gcd3", &gcd3, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("v2", &v2, py::arg("n"));

  // triples
  m.def("make_triple", &make_triple, py::arg("p"), py::arg("q"), py::arg("r"));
  m.def("euclid", &euclid, py::arg("m"), py::arg("n"));
  m.def("enumerate_primitive", &enumerate_primitive, py::arg("w_max"));
  m.def("scale", &scale, py::arg("t"), py::arg("k"));
  m.def("make_leg_pair", &make_leg_pair, py::arg("u0"), py::arg("v0"));

  // bricks
  m.def("verify_brick", &verify_brick, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("try_brick", &try_brick, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("normalize", &normalize, py::arg("brick"));
  m.def("derived_brick", &derived_brick, py::arg("brick"));
  m.def("decompose", &decompose, py::arg("brick"));

  // constructors
  m.def("theorem1", &theorem1, py::arg("p"), py::arg("t1"), py::arg("t2"));
  m.def("theorem2", &theorem2, py::arg("p"), py::arg("t1"), py::arg("t2"));
  m.def("theorem3", &theorem3, py::arg("p"), py::arg("t1"), py::arg("t2"));
  m.def("corollary1", &corollary1, py::arg("t1"), py::arg("t2"));
  m.def("corollary2", &corollary2, py::arg("t1"), py::arg("t2"));
  m.def("lift_pair", &lift_pair, py::arg("t0"));
  m.def("sounderson", &sounderson, py::arg("t0"));
  m.def("perfect_from_counterexample", &perfect_from_counterexample, py::arg("txyz"),
        py::arg("tuvw"));
  m.def("perfect_from_parts", &perfect_from_parts, py::arg("x"), py::arg("y"), py::arg("z"),
        py::arg("u"), py::arg("v"), py::arg("w"));

  // search
  auto with_workers = [](unsigned workers) {
    ScanOptions opts;
    opts.workers = workers;
    return opts;
  };
  m.def(
      "scan_corollary",
      [with_workers](ScanKind kind, Nat w_bound, unsigned workers) {
        return scan_corollary(kind, w_bound, with_workers(workers));
      },
      py::arg("kind"), py::arg("w_bound"), py::arg("workers") = 1);
  m.def(
      "scan_theorem",
      [with_workers](ScanKind kind, Nat w_bound, Nat leg_bound, unsigned workers) {
        return scan_theorem(kind, w_bound, leg_bound, with_workers(workers));
      },
      py::arg("kind"), py::arg("w_bound"), py::arg("leg_bound"), py::arg("workers") = 1);
  m.def(
      "scan_conjecture1",
      [with_workers](Nat w_bound, unsigned workers) {
        return scan_conjecture1(w_bound, with_workers(workers));
      },
      py::arg("w_bound"), py::arg("workers") = 1);
  m.def(
      "scan_conjecture2",
      [with_workers](Nat w_bound, unsigned workers) {
        return scan_conjecture2(w_bound, with_workers(workers));
      },
      py::arg("w_bound"), py::arg("workers") = 1);
  m.def(
      "scan_problem",
      [with_workers](ScanKind kind, Nat w_bound, Nat leg_bound, unsigned workers) {
        return scan_problem(kind, w_bound, leg_bound, with_workers(workers));
      },
      py::arg("kind"), py::arg("w_bound"), py::arg("leg_bound"), py::arg("workers") = 1);
  m.def("max_safe_w_bound", &max_safe_w_bound, py::arg("kind"),
        py::arg("leg_bound") = std::nullopt);

  // tables
  py::enum_<TableId>(m, "TableId")
      .value("T1", TableId::T1)
      .value("T2", TableId::T2)
      .value("T3", TableId::T3)
      .value("T4", TableId::T4)
      .value("T5", TableId::T5)
      .value("T6", TableId::T6);

  py::class_<CellDiff>(m, "CellDiff")
      .def_readonly("row", &CellDiff::row)
      .def_readonly("column", &CellDiff::column)
      .def_readonly("printed", &CellDiff::printed)
      .def_readonly("computed", &CellDiff::computed);

  py::class_<TableReproduction>(m, "TableReproduction")
      .def_readonly("id", &TableReproduction::id)
      .def_readonly("columns", &TableReproduction::columns)
      .def_readonly("diffs", &TableReproduction::diffs);

  m.def("reproduce_table", &reproduce_table, py::arg("id"));
  m.def("reproduce_all_tables", &reproduce_all_tables);
}
