#include "planarlat/geometry.hpp"

#include <algorithm>
#include <set>

namespace planarlat {

namespace {

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int orientation(const Point& a, const Point& b, const Point& c) {
  return sign(cross(b - a, c - a));
}

// p is assumed collinear with ab.
bool within_box(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace

Point operator+(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y};
}

Point operator-(const Point& a, const Point& b) {
  return {a.x - b.x, a.y - b.y};
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

Diagram::Diagram(Lattice lattice, std::vector<Point> pos)
    : lattice_(std::move(lattice)), pos_(std::move(pos)) {
  if (pos_.size() != lattice_.size())
    throw Error("diagram: expected " + std::to_string(lattice_.size()) +
                " positions, got " + std::to_string(pos_.size()));
  std::set<Point> seen;
  for (Element e = 0; e < pos_.size(); ++e)
    if (!seen.insert(pos_[e]).second)
      throw Error("diagram: element " + lattice_.name(e) +
                  " shares its position " + to_string(pos_[e]) +
                  " with another element");
}

std::string describe(const Diagram& d, const DiagramViolation& v) {
  const Lattice& l = d.lattice();
  if (auto* y = std::get_if<YIsotoneViolation>(&v))
    return "cover " + l.name(y->cover.first) + " < " + l.name(y->cover.second) +
           " does not go up";
  const auto& i = std::get<InterferenceViolation>(v);
  return "element " + l.name(i.point) + " lies on the segment of cover " +
         l.name(i.cover.first) + " < " + l.name(i.cover.second);
}

std::optional<DiagramViolation> validate_diagram(const Diagram& d) {
  for (const auto& cover : d.lattice().covers()) {
    const Point& p = d.pos(cover.first);
    const Point& q = d.pos(cover.second);
    if (!(p.y < q.y)) return YIsotoneViolation{cover};
    for (Element r = 0; r < d.size(); ++r) {
      if (r == cover.first || r == cover.second) continue;
      const Point& s = d.pos(r);
      if (orientation(p, q, s) == 0 && within_box(p, q, s))
        return InterferenceViolation{cover, r};
    }
  }
  return std::nullopt;
}

std::optional<Point> improper_contact(const Point& a, const Point& b,
                                      const Point& c, const Point& d) {
  auto shared = [&](const Point& p) {
    return (p == a || p == b) && (p == c || p == d);
  };
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: intersect the two ranges along the common line.
    Point lo1 = std::min(a, b), hi1 = std::max(a, b);
    Point lo2 = std::min(c, d), hi2 = std::max(c, d);
    Point lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (hi < lo) return std::nullopt;
    if (lo == hi) {
      if (shared(lo)) return std::nullopt;
      return lo;
    }
    return Point{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
  }

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    const Rational t = cross(c - a, d - c) / cross(b - a, d - c);
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  }

  if (o1 == 0 && within_box(a, b, c) && !shared(c)) return c;
  if (o2 == 0 && within_box(a, b, d) && !shared(d)) return d;
  if (o3 == 0 && within_box(c, d, a) && !shared(a)) return a;
  if (o4 == 0 && within_box(c, d, b) && !shared(b)) return b;
  return std::nullopt;
}

PlanarityReport check_planarity(const Diagram& d) {
  const auto& covers = d.lattice().covers();
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      auto contact =
          improper_contact(d.pos(covers[i].first), d.pos(covers[i].second),
                           d.pos(covers[j].first), d.pos(covers[j].second));
      if (contact)
        return PlanarityReport{false, Crossing{covers[i], covers[j], *contact}};
    }
  return PlanarityReport{true, std::nullopt};
}

PlanarDiagram::PlanarDiagram(Diagram d) : d_(std::move(d)) {
  if (auto v = validate_diagram(d_)) throw NotPlanar(describe(d_, *v));
  auto report = check_planarity(d_);
  if (!report.planar) {
    const auto& w = *report.witness;
    const Lattice& l = d_.lattice();
    throw NotPlanar("covers " + l.name(w.first.first) + " < " +
                    l.name(w.first.second) + " and " + l.name(w.second.first) +
                    " < " + l.name(w.second.second) + " meet at " +
                    to_string(w.at));
  }

  const Lattice& l = d_.lattice();
  const std::size_t n = l.size();
  upper_.resize(n);
  lower_.resize(n);
  for (Element e = 0; e < n; ++e) {
    const Point& o = d_.pos(e);
    // Horizontal drift per unit of height along the edge; smaller is further
    // left.
    auto up_slope = [&](Element u) {
      return (d_.pos(u).x - o.x) / (d_.pos(u).y - o.y);
    };
    auto down_slope = [&](Element u) {
      return (d_.pos(u).x - o.x) / (o.y - d_.pos(u).y);
    };
    upper_[e] = l.upper_covers(e);
    std::sort(upper_[e].begin(), upper_[e].end(),
              [&](Element a, Element b) { return up_slope(a) < up_slope(b); });
    lower_[e] = l.lower_covers(e);
    std::sort(lower_[e].begin(), lower_[e].end(), [&](Element a, Element b) {
      return down_slope(a) < down_slope(b);
    });
  }

  std::vector<Rational> ys;
  for (Element e = 0; e < n; ++e) ys.push_back(d_.pos(e).y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (i > 0) levels_.push_back((ys[i - 1] + ys[i]) / 2);
    levels_.push_back(ys[i]);
  }
}

Diagram mirror(const Diagram& d) {
  std::vector<Point> pos;
  for (const Point& p : d.positions()) pos.push_back({-p.x, p.y});
  return Diagram(d.lattice(), std::move(pos));
}

bool product_leq(const Point& p, const Point& q) {
  return p != q && p.x <= q.x && p.y <= q.y;
}

bool slanted_leq(const Point& p, const Point& q) {
  return p != q && abs(q.x - p.x) <= q.y - p.y;
}

bool slanted_lr(const Point& p, const Point& q) {
  return p != q && abs(q.y - p.y) < q.x - p.x;
}

bool fourth_quadrant_lt(const Point& p, const Point& q) {
  return q.x > p.x && q.y < p.y;
}

Point alpha(const Point& p) { return {p.x + p.y, p.y - p.x}; }

Point beta(const Point& p) { return {(p.x - p.y) / 2, (p.x + p.y) / 2}; }

Diagram lattice_from_slanted_points(std::span<const Point> pts,
                                    std::vector<std::string> names) {
  const std::size_t n = pts.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<ElementPair> pairs;
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (slanted_leq(pts[i], pts[j])) pairs.emplace_back(i, j);
  Lattice l = as_lattice(build_poset(n, pairs, std::move(names)));
  return Diagram(std::move(l), std::vector<Point>(pts.begin(), pts.end()));
}

}  // namespace planarlat
