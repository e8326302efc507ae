#include "planarlat/leftright.hpp"

#include <algorithm>

namespace planarlat {

bool MaxChain::contains(Element e) const {
  return std::find(elements.begin(), elements.end(), e) != elements.end();
}

PathFunction::PathFunction(
    std::vector<std::pair<Rational, Rational>> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) throw Error("path function needs a breakpoint");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1].first < breakpoints_[i].first))
      throw Error("path function heights must increase strictly");
}

Rational PathFunction::operator()(const Rational& y) const {
  if (y < lower() || y > upper())
    throw OutOfDomain("height " + to_string(y) + " outside [" +
                      to_string(lower()) + ", " + to_string(upper()) + "]");
  auto it = std::lower_bound(
      breakpoints_.begin(), breakpoints_.end(), y,
      [](const auto& bp, const Rational& v) { return bp.first < v; });
  if (it->first == y) return it->second;
  const auto& [y1, x1] = *(it - 1);
  const auto& [y2, x2] = *it;
  return x1 + (x2 - x1) * (y - y1) / (y2 - y1);
}

PathFunction path_function(const Diagram& d, const MaxChain& c) {
  std::vector<std::pair<Rational, Rational>> bps;
  bps.reserve(c.elements.size());
  for (Element e : c.elements) bps.emplace_back(d.pos(e).y, d.pos(e).x);
  return PathFunction(std::move(bps));
}

Rational eval_path(const PathFunction& f, const Rational& y) { return f(y); }

std::vector<MaxChain> maximal_chains(const PlanarDiagram& d) {
  std::vector<MaxChain> out;
  std::vector<Element> path{d.lattice().bottom()};
  // Explicit stack of (element, index of next upper cover to try).
  std::vector<std::size_t> next{0};
  while (!path.empty()) {
    Element top = path.back();
    const auto& ups = d.upper_covers(top);
    if (ups.empty()) {
      out.push_back(MaxChain{path});
      path.pop_back();
      next.pop_back();
      continue;
    }
    if (next.back() == ups.size()) {
      path.pop_back();
      next.pop_back();
      continue;
    }
    path.push_back(ups[next.back()++]);
    next.push_back(0);
  }
  return out;
}

bool chain_leq(const PlanarDiagram& d, const MaxChain& c1,
               const MaxChain& c2) {
  const PathFunction f1 = path_function(d.diagram(), c1);
  const PathFunction f2 = path_function(d.diagram(), c2);
  for (const Rational& y : d.sample_levels())
    if (f1(y) > f2(y)) return false;
  return true;
}

namespace {

// Elements of c1 and c2 lying on the pointwise min (or max) of their paths.
// Planarity guarantees the two paths only meet at shared elements, so these
// elements form a maximal chain.
MaxChain patch(const PlanarDiagram& d, const MaxChain& c1, const MaxChain& c2,
               bool take_min) {
  const PathFunction f1 = path_function(d.diagram(), c1);
  const PathFunction f2 = path_function(d.diagram(), c2);
  auto keep = [&](Element e, const PathFunction& other) {
    const Point& p = d.pos(e);
    return take_min ? p.x <= other(p.y) : p.x >= other(p.y);
  };
  std::vector<Element> out;
  for (Element e : c1.elements)
    if (keep(e, f2)) out.push_back(e);
  for (Element e : c2.elements)
    if (keep(e, f1)) out.push_back(e);
  std::sort(out.begin(), out.end(), [&](Element a, Element b) {
    return d.pos(a).y < d.pos(b).y || (d.pos(a).y == d.pos(b).y && a < b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());

  const Lattice& l = d.lattice();
  bool ok = !out.empty() && out.front() == l.bottom() && out.back() == l.top();
  for (std::size_t i = 1; ok && i < out.size(); ++i)
    ok = l.covers(out[i - 1], out[i]);
  if (!ok) throw InternalDefect("patched path is not a maximal chain");
  return MaxChain{std::move(out)};
}

MaxChain extreme_chain(const PlanarDiagram& d, Element p, bool leftmost) {
  const Lattice& l = d.lattice();
  auto pick = [leftmost](const std::vector<Element>& v) {
    return leftmost ? v.front() : v.back();
  };
  std::vector<Element> chain;
  for (Element cur = p; cur != l.bottom();) {
    cur = pick(d.lower_covers(cur));
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  chain.push_back(p);
  for (Element cur = p; cur != l.top();) {
    cur = pick(d.upper_covers(cur));
    chain.push_back(cur);
  }
  return MaxChain{std::move(chain)};
}

}  // namespace

MaxChain chain_min(const PlanarDiagram& d, const MaxChain& c1,
                   const MaxChain& c2) {
  return patch(d, c1, c2, true);
}

MaxChain chain_max(const PlanarDiagram& d, const MaxChain& c1,
                   const MaxChain& c2) {
  return patch(d, c1, c2, false);
}

// Greedy walks: two paths leaving a common element cannot cross, so taking
// the leftmost (rightmost) cover at every step yields the pointwise minimum
// (maximum) among chains through p.
MaxChain lm(const PlanarDiagram& d, Element p) {
  return extreme_chain(d, p, true);
}

MaxChain rm(const PlanarDiagram& d, Element p) {
  return extreme_chain(d, p, false);
}

Side pf_compare(const PlanarDiagram& d, Element p, const MaxChain& c) {
  const Point& pt = d.pos(p);
  const Rational x = path_function(d.diagram(), c)(pt.y);
  if (pt.x < x) return Side::left;
  if (pt.x > x) return Side::right;
  return Side::on;
}

RegionPartition partition_at(const PlanarDiagram& d, Element p) {
  const PathFunction fl = path_function(d.diagram(), lm(d, p));
  const PathFunction fr = path_function(d.diagram(), rm(d, p));
  RegionPartition out;
  for (Element q = 0; q < d.size(); ++q) {
    const Point& pt = d.pos(q);
    if (pt.x < fl(pt.y))
      out.left.push_back(q);
    else if (pt.x > fr(pt.y))
      out.right.push_back(q);
    else
      out.mid.push_back(q);
  }
  return out;
}

StrictRelation lr_order(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  StrictRelation out(d.size());
  for (Element p = 0; p < d.size(); ++p) {
    const PathFunction fr = path_function(d.diagram(), rm(d, p));
    for (Element q = 0; q < d.size(); ++q) {
      if (l.comparable(p, q)) continue;
      const Point& pt = d.pos(q);
      if (pt.x > fr(pt.y)) out.insert(p, q);
    }
  }
  return out;
}

bool kelly_rival_left(const PlanarDiagram& d, Element a, Element b) {
  const Lattice& l = d.lattice();
  if (l.comparable(a, b)) throw NotIncomparable(a, b);
  const Element m = l.meet(a, b);
  const auto& ups = d.upper_covers(m);
  std::optional<bool> verdict;
  for (std::size_t i = 0; i < ups.size(); ++i) {
    if (!l.leq(ups[i], a)) continue;
    for (std::size_t j = 0; j < ups.size(); ++j) {
      if (!l.leq(ups[j], b)) continue;
      const bool left = i < j;
      if (verdict && *verdict != left)
        throw InternalDefect("angular order at the meet is inconsistent");
      verdict = left;
    }
  }
  if (!verdict) throw InternalDefect("meet has no covers below the pair");
  return *verdict;
}

}  // namespace planarlat
