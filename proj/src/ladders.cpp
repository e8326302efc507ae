#include "planarlat/ladders.hpp"

#include <algorithm>

namespace planarlat {

const char* to_string(LadderKind k) {
  switch (k) {
    case LadderKind::cell:
      return "cell";
    case LadderKind::ladder:
      return "ladder";
    case LadderKind::e_ladder:
      return "e-ladder";
    case LadderKind::not_e_ladder:
      return "not-e-ladder";
  }
  return "?";
}

const char* to_string(LadderDirection d) {
  switch (d) {
    case LadderDirection::leftward:
      return "leftward";
    case LadderDirection::rightward:
      return "rightward";
    case LadderDirection::both:
      return "both";
    case LadderDirection::none:
      return "none";
  }
  return "?";
}

namespace {

bool contains(const std::vector<Element>& v, Element e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

// The region between rm(p) and lm(q) without checking which side q is on.
LocalRegion raw_region(const PlanarDiagram& d, Element p, Element q) {
  const Lattice& l = d.lattice();
  LocalRegion r;
  r.p = p;
  r.q = q;
  r.bottom = l.meet(p, q);
  r.top = l.join(p, q);
  const MaxChain right_of_p = rm(d, p);
  const MaxChain left_of_q = lm(d, q);
  const PathFunction fr = path_function(d.diagram(), right_of_p);
  const PathFunction fl = path_function(d.diagram(), left_of_q);
  for (Element z = 0; z < d.size(); ++z) {
    if (!l.leq(r.bottom, z) || !l.leq(z, r.top)) continue;
    const Point& pt = d.pos(z);
    const Rational lo = fr(pt.y), hi = fl(pt.y);
    if (pt.x < lo || pt.x > hi) continue;
    r.members.push_back(z);
    if (lo < pt.x && pt.x < hi) r.interior.push_back(z);
  }
  for (Element z : right_of_p.elements)
    if (contains(r.members, z)) r.left_boundary.push_back(z);
  for (Element z : left_of_q.elements)
    if (contains(r.members, z)) r.right_boundary.push_back(z);
  return r;
}

// Members match S2 x Sn under the labelling bottom=(0,0), first[j]=(0,j+1),
// second[j]=(1,j), top=(1,n-1).
bool is_two_by_n(const Lattice& l, const LocalRegion& r,
                 const std::vector<Element>& first,
                 const std::vector<Element>& second) {
  const std::size_t a = first.size();
  if (a < 1 || second.size() != a) return false;
  if (r.members.size() != 2 * (a + 1)) return false;
  std::vector<std::pair<Element, std::pair<std::size_t, std::size_t>>> label;
  label.push_back({r.bottom, {0, 0}});
  label.push_back({r.top, {1, a}});
  for (std::size_t j = 0; j < a; ++j) {
    label.push_back({first[j], {0, j + 1}});
    label.push_back({second[j], {1, j}});
  }
  for (const auto& [x, cx] : label)
    for (const auto& [y, cy] : label) {
      const bool product_lt =
          cx != cy && cx.first <= cy.first && cx.second <= cy.second;
      if (product_lt != l.lt(x, y)) return false;
    }
  return true;
}

}  // namespace

LocalRegion local_region(const PlanarDiagram& d, Element p, Element q) {
  const Lattice& l = d.lattice();
  if (l.comparable(p, q)) throw NotIncomparable(p, q);
  if (pf_compare(d, q, rm(d, p)) != Side::right) throw WrongSide(p, q);
  return raw_region(d, p, q);
}

ELadderClass classify_e_ladder(const PlanarDiagram& d, const LocalRegion& r) {
  const Lattice& l = d.lattice();
  const ELadderClass fail{};
  const auto& left = r.left_boundary;
  const auto& right = r.right_boundary;

  // Empty interior: the region is two chains meeting only at its ends.
  if (left.size() < 2 || right.size() < 2) return fail;
  if (left.front() != r.bottom || left.back() != r.top) return fail;
  if (right.front() != r.bottom || right.back() != r.top) return fail;
  if (!contains(left, r.p) || !contains(right, r.q)) return fail;
  for (Element z : left)
    if (z != r.bottom && z != r.top && contains(right, z)) return fail;
  if (left.size() + right.size() - 2 != r.members.size()) return fail;
  for (Element z : r.members)
    if (!contains(left, z) && !contains(right, z)) return fail;

  const std::vector<Element> inner_left(left.begin() + 1, left.end() - 1);
  const std::vector<Element> inner_right(right.begin() + 1, right.end() - 1);

  std::vector<Rung> up_rungs, down_rungs;  // left < right, left > right
  for (Element a : inner_left)
    for (Element b : inner_right) {
      if (l.covers(a, b)) up_rungs.push_back({a, b});
      if (l.covers(b, a)) down_rungs.push_back({a, b});
    }

  ELadderClass out;
  if (up_rungs.empty() && down_rungs.empty()) {
    out.kind = LadderKind::cell;
    out.direction = LadderDirection::both;
    return out;
  }
  if (!up_rungs.empty() && !down_rungs.empty()) return fail;

  const bool upward = !up_rungs.empty();
  out.rungs = upward ? up_rungs : down_rungs;
  for (const Rung& g : out.rungs) {
    const bool placed = upward ? (l.lt(g.left, r.p) && l.lt(r.q, g.right))
                               : (l.lt(r.p, g.left) && l.lt(g.right, r.q));
    if (!placed) return fail;
  }

  auto index_in = [](const std::vector<Element>& v, Element e) {
    return std::find(v.begin(), v.end(), e) - v.begin();
  };
  std::sort(out.rungs.begin(), out.rungs.end(),
            [&](const Rung& a, const Rung& b) {
              return index_in(inner_left, a.left) < index_in(inner_left, b.left);
            });
  for (std::size_t i = 1; i < out.rungs.size(); ++i) {
    if (index_in(inner_left, out.rungs[i - 1].left) >=
        index_in(inner_left, out.rungs[i].left))
      return fail;
    if (index_in(inner_right, out.rungs[i - 1].right) >=
        index_in(inner_right, out.rungs[i].right))
      return fail;
  }

  // A rung climbing from the left boundary to the right one has positive
  // slant in the convention where the left boundary is drawn on the left.
  out.direction =
      upward ? LadderDirection::leftward : LadderDirection::rightward;
  const bool ladder = upward ? is_two_by_n(l, r, inner_left, inner_right)
                             : is_two_by_n(l, r, inner_right, inner_left);
  out.kind = ladder ? LadderKind::ladder : LadderKind::e_ladder;
  return out;
}

LrCoverEvidence lr_cover_conditions(const PlanarDiagram& d,
                                    const StrictRelation& lr, Element p,
                                    Element q) {
  const Lattice& l = d.lattice();
  LrCoverEvidence ev;
  if (l.comparable(p, q)) return ev;

  ev.covering = lr(p, q);
  for (Element z = 0; ev.covering && z < d.size(); ++z)
    if (lr(p, z) && lr(z, q)) ev.covering = false;

  const LocalRegion region = raw_region(d, p, q);
  ev.empty_interior =
      pf_compare(d, p, lm(d, q)) == Side::left && region.interior.empty();
  ev.e_ladder = classify_e_ladder(d, region).is_e_ladder();
  return ev;
}

bool lr_cover(const PlanarDiagram& d, const StrictRelation& lr, Element p,
              Element q) {
  if (d.lattice().comparable(p, q) || !lr(p, q)) return false;
  for (Element z = 0; z < d.size(); ++z)
    if (lr(p, z) && lr(z, q)) return false;
  return true;
}

bool lr_cover(const PlanarDiagram& d, Element p, Element q) {
  return lr_cover(d, lr_order(d), p, q);
}

StrictRelation e_ladder_relation(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  StrictRelation out(d.size());
  for (Element p = 0; p < d.size(); ++p)
    for (Element q = 0; q < d.size(); ++q) {
      if (l.comparable(p, q)) continue;
      if (classify_e_ladder(d, raw_region(d, p, q)).is_e_ladder())
        out.insert(p, q);
    }
  return out;
}

StrictRelation parallel_order(const PlanarDiagram& d) {
  return e_ladder_relation(d).transitive_closure();
}

bool well_drawn_via_ladders(const PlanarDiagram& d) {
  for (auto [p, q] : e_ladder_relation(d).pairs())
    if (!(d.pos(p).x < d.pos(q).x)) return false;
  return true;
}

}  // namespace planarlat
