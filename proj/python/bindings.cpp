#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "planarlat/format.hpp"
#include "planarlat/generate.hpp"
#include "planarlat/ladders.hpp"
#include "planarlat/quotient.hpp"
#include "planarlat/planarity.hpp"

namespace py = pybind11;
namespace pl = planarlat;

namespace {

py::object fraction(const pl::Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

py::tuple point(const pl::Point& p) {
  return py::make_tuple(fraction(p.x), fraction(p.y));
}

pl::Rational rational(py::handle h) {
  auto r = pl::parse_rational(py::str(h).cast<std::string>());
  if (!r) throw py::value_error("not an exact rational: " + py::str(h).cast<std::string>());
  return *r;
}

using NamePairs = std::vector<std::pair<std::string, std::string>>;

NamePairs named(const pl::Lattice& l, const std::vector<pl::ElementPair>& pairs) {
  NamePairs out;
  for (auto [a, b] : pairs) out.emplace_back(l.name(a), l.name(b));
  return out;
}

pl::StrictRelation relation(const pl::Lattice& l, const NamePairs& pairs) {
  pl::StrictRelation r(l.size());
  for (const auto& [a, b] : pairs) {
    auto x = l.find(a), y = l.find(b);
    if (!x || !y) throw py::key_error("unknown element in " + a + "<" + b);
    r.insert(*x, *y);
  }
  return r.transitive_closure();
}

pl::Diagram diagram(const pl::Lattice& l, const py::dict& pos) {
  std::vector<pl::Point> pts(l.size());
  std::vector<bool> seen(l.size(), false);
  for (auto [k, v] : pos) {
    auto e = l.find(k.cast<std::string>());
    if (!e) throw py::key_error(k.cast<std::string>());
    auto xy = v.cast<py::sequence>();
    if (xy.size() != 2) throw py::value_error("positions are (x, y) pairs");
    pts[*e] = pl::Point{rational(xy[0]), rational(xy[1])};
    seen[*e] = true;
  }
  for (pl::Element e = 0; e < l.size(); ++e)
    if (!seen[e]) throw py::key_error("no position for " + l.name(e));
  return pl::Diagram(l, std::move(pts));
}

py::dict positions(const pl::Diagram& d) {
  py::dict out;
  for (pl::Element e = 0; e < d.size(); ++e) out[py::str(d.lattice().name(e))] = point(d.pos(e));
  return out;
}

py::dict certificate(const pl::Lattice& l, const pl::PlanarityCertificate& c) {
  py::dict out;
  out["planar"] = c.planar;
  if (c.lambda) out["lambda"] = named(l, c.lambda->transitive_reduction().pairs());
  if (c.diagram) out["positions"] = positions(*c.diagram);
  out["failure_core"] = named(l, c.failure_core);
  return out;
}

pl::CongruenceKind kind_of(const std::string& s) {
  if (s == "join") return pl::CongruenceKind::join;
  if (s == "meet") return pl::CongruenceKind::meet;
  if (s == "lattice") return pl::CongruenceKind::lattice;
  throw py::value_error("kind is join, meet or lattice");
}

}  // namespace

PYBIND11_MODULE(planarlat, m) {
  m.doc() = "Planar lattices: planarity decision, canonical layouts, left-right order.";

  auto base = py::register_exception<pl::Error>(m, "Error");
  py::register_exception<pl::NotALattice>(m, "NotALattice", base);
  py::register_exception<pl::NotPlanar>(m, "NotPlanar", base);
  py::register_exception<pl::NotComplementary>(m, "NotComplementary", base);
  py::register_exception<pl::NotCompatible>(m, "NotCompatible", base);
  py::register_exception<pl::InvalidBlocks>(m, "InvalidBlocks", base);
  py::register_exception<pl::ParseError>(m, "ParseError", base);
  py::register_exception<pl::InternalDefect>(m, "InternalDefect");

  py::class_<pl::Lattice>(m, "Lattice")
      .def(py::init([](std::vector<std::string> names, const NamePairs& covers) {
             return pl::make_lattice(std::move(names), std::span<const std::pair<std::string, std::string>>(covers));
           }),
           py::arg("elements"), py::arg("covers"))
      .def_static("parse", [](const std::string& text) { return pl::parse(text).lattice; })
      .def("__len__", &pl::Lattice::size)
      .def_property_readonly("elements", &pl::Lattice::names)
      .def_property_readonly("covers", [](const pl::Lattice& l) { return named(l, l.covers()); })
      .def_property_readonly("bottom", [](const pl::Lattice& l) { return l.name(l.bottom()); })
      .def_property_readonly("top", [](const pl::Lattice& l) { return l.name(l.top()); })
      .def("lt", [](const pl::Lattice& l, const std::string& a, const std::string& b) {
        auto x = l.find(a), y = l.find(b);
        if (!x || !y) throw py::key_error("unknown element");
        return l.lt(*x, *y);
      })
      .def("join", [](const pl::Lattice& l, const std::string& a, const std::string& b) {
        auto x = l.find(a), y = l.find(b);
        if (!x || !y) throw py::key_error("unknown element");
        return l.name(l.join(*x, *y));
      })
      .def("meet", [](const pl::Lattice& l, const std::string& a, const std::string& b) {
        auto x = l.find(a), y = l.find(b);
        if (!x || !y) throw py::key_error("unknown element");
        return l.name(l.meet(*x, *y));
      })
      .def("__eq__", [](const pl::Lattice& a, const pl::Lattice& b) { return a == b; })
      .def("to_text", [](const pl::Lattice& l) { return pl::serialize_text(pl::document_of(l)); })
      .def("__repr__", [](const pl::Lattice& l) {
        return "<Lattice with " + std::to_string(l.size()) + " elements>";
      });

  m.def("decide_planarity",
        [](const pl::Lattice& l) { return certificate(l, pl::decide_planarity(l)); },
        py::arg("lattice"),
        "Dict with 'planar', and 'lambda' plus 'positions' or a 'failure_core'.");

  m.def("canon",
        [](const pl::Lattice& l, const NamePairs& lambda) {
          return positions(pl::canon(pl::OrientedLattice(l, relation(l, lambda))));
        },
        py::arg("lattice"), py::arg("lambda_pairs"),
        "Canonical coordinates as Fractions.");

  m.def("lr_order",
        [](const pl::Lattice& l, const py::dict& pos) {
          const pl::PlanarDiagram d(diagram(l, pos));
          return named(l, pl::lr_order(d).pairs());
        },
        py::arg("lattice"), py::arg("positions"));

  m.def("is_well_drawn",
        [](const pl::Lattice& l, const py::dict& pos) {
          return pl::is_well_drawn(pl::PlanarDiagram(diagram(l, pos)));
        },
        py::arg("lattice"), py::arg("positions"));

  m.def("parallel_order",
        [](const pl::Lattice& l, const py::dict& pos) {
          const pl::PlanarDiagram d(diagram(l, pos));
          return named(l, pl::parallel_order(d).pairs());
        },
        py::arg("lattice"), py::arg("positions"));

  m.def("quotient",
        [](const pl::Lattice& l, const std::string& blocks, const std::string& kind) {
          const auto c = pl::parse_blocks(l, blocks, kind_of(kind));
          const auto q = pl::quotient_lattice(l, c);
          return py::make_tuple(q.lattice, certificate(q.lattice, pl::quotient_planarity(l, c)));
        },
        py::arg("lattice"), py::arg("blocks"), py::arg("kind") = "join",
        "(quotient lattice, planarity certificate of the quotient).");

  m.def("render_svg",
        [](const pl::Lattice& l, const py::dict& pos, bool labels) {
          pl::SvgOptions o;
          o.labels = labels;
          return pl::render_svg(diagram(l, pos), o);
        },
        py::arg("lattice"), py::arg("positions"), py::arg("labels") = true);

  m.def("random_oriented",
        [](std::uint64_t seed, std::size_t size) {
          std::mt19937_64 rng(seed);
          const auto o = pl::random_oriented_lattice(rng, size);
          return py::make_tuple(o.lattice(), named(o.lattice(), o.lambda().transitive_reduction().pairs()));
        },
        py::arg("seed"), py::arg("max_size"),
        "(lattice, lambda cover pairs) of a random planar lattice.");
}
