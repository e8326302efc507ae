#include "planarlat/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "planarlat/planarity.hpp"

namespace planarlat {

OrientedLattice::OrientedLattice(Lattice lattice, StrictRelation lambda)
    : lattice_(std::move(lattice)), lambda_(std::move(lambda)) {
  if (!is_complementary(lattice_, lambda_))
    throw NotComplementary("relation is not complementary to the order");
}

OrientedLattice orientation_of(const PlanarDiagram& d) {
  return OrientedLattice(d.lattice(), lr_order(d));
}

ImbalanceProfile imbalance(const OrientedLattice& o) {
  const std::size_t n = o.size();
  ImbalanceProfile ip;
  ip.lo_lt.assign(n, 0);
  ip.hi_lt.assign(n, 0);
  ip.lo_lambda.assign(n, 0);
  ip.hi_lambda.assign(n, 0);
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) {
      if (o.lattice().lt(q, p)) ++ip.lo_lt[p];
      if (o.lattice().lt(p, q)) ++ip.hi_lt[p];
      if (o.lambda()(q, p)) ++ip.lo_lambda[p];
      if (o.lambda()(p, q)) ++ip.hi_lambda[p];
    }
  return ip;
}

Diagram canon(const OrientedLattice& o) {
  const ImbalanceProfile ip = imbalance(o);
  std::vector<Point> pos;
  std::set<Point> seen;
  for (Element p = 0; p < o.size(); ++p) {
    Point pt{Rational(ip.imbal_lambda(p)), Rational(ip.imbal_lt(p))};
    if (!seen.insert(pt).second)
      throw InternalDefect("canonical placement is not injective");
    pos.push_back(pt);
  }
  Diagram d(o.lattice(), std::move(pos));
  for (Element p = 0; p < d.size(); ++p)
    for (Element q = 0; q < d.size(); ++q)
      if (p != q && o.lattice().lt(p, q) != slanted_leq(d.pos(p), d.pos(q)))
        throw InternalDefect("canonical placement does not reproduce <");
  if (validate_diagram(d) || !check_planarity(d).planar)
    throw InternalDefect("canonical placement is not a planar diagram");
  return d;
}

bool is_canonical(const PlanarDiagram& d) {
  const ImbalanceProfile ip = imbalance(orientation_of(d));
  for (Element p = 0; p < d.size(); ++p) {
    const Point want{Rational(ip.imbal_lambda(p)), Rational(ip.imbal_lt(p))};
    if (d.pos(p) != want) return false;
  }
  return true;
}

namespace {

using Segment = std::pair<Point, Point>;

std::pair<std::set<Point>, std::set<Segment>> picture(const Diagram& d) {
  std::set<Point> pts(d.positions().begin(), d.positions().end());
  std::set<Segment> segs;
  for (auto [a, b] : d.lattice().covers()) segs.emplace(d.pos(a), d.pos(b));
  return {pts, segs};
}

}  // namespace

bool canonical_unique(const OrientedLattice& o1, const OrientedLattice& o2) {
  if (o1.size() != o2.size()) return false;
  return picture(canon(o1)) == picture(canon(o2));
}

bool respects_x_order(const Diagram& d, const StrictRelation& lambda) {
  for (auto [p, q] : lambda.pairs())
    if (!(d.pos(p).x < d.pos(q).x)) return false;
  return true;
}

bool is_well_drawn(const PlanarDiagram& d) {
  return respects_x_order(d.diagram(), lr_order(d));
}

const char* to_string(SubVerdict v) {
  switch (v) {
    case SubVerdict::holds:
      return "holds";
    case SubVerdict::fails:
      return "fails";
    case SubVerdict::skipped:
      return "skipped";
  }
  return "?";
}

std::vector<std::vector<Element>> sublattices(const Lattice& l) {
  const std::size_t n = l.size();
  if (n > 20) throw Error("sublattice enumeration limited to 20 elements");
  std::vector<std::vector<Element>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool closed = true;
    for (Element a = 0; closed && a < n; ++a) {
      if (!(mask >> a & 1)) continue;
      for (Element b = a + 1; closed && b < n; ++b) {
        if (!(mask >> b & 1)) continue;
        closed = (mask >> l.meet(a, b) & 1) && (mask >> l.join(a, b) & 1);
      }
    }
    if (!closed) continue;
    std::vector<Element> s;
    for (Element a = 0; a < n; ++a)
      if (mask >> a & 1) s.push_back(a);
    out.push_back(std::move(s));
  }
  return out;
}

SubResult has_sub_property(const PlanarDiagram& d, std::size_t cap) {
  SubResult res;
  if (d.size() > cap) return res;
  const Lattice& l = d.lattice();
  for (const auto& s : sublattices(l)) {
    std::vector<Point> pts;
    for (Element e : s) pts.push_back(d.pos(e));
    Diagram sd(as_lattice(induced_poset(l.poset(), s)), std::move(pts));
    if (validate_diagram(sd) || !check_planarity(sd).planar) {
      res.verdict = SubVerdict::fails;
      res.failing = s;
      return res;
    }
  }
  res.verdict = SubVerdict::holds;
  return res;
}

}  // namespace planarlat
