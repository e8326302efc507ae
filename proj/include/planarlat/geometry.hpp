#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "planarlat/lattice.hpp"

namespace planarlat {

// Exact coordinates. Canonical layouts are integral and hand-written
// diagrams use small fractions, so 64-bit numerators suffice.
using Rational = boost::rational<std::int64_t>;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic by (x, y); only used for deterministic sorting.
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

std::string to_string(const Rational& r);
std::string to_string(const Point& p);

/// A lattice whose elements carry distinct points of the plane.
class Diagram {
 public:
  Diagram() = default;
  // Throws Error if the position count is wrong or two elements share a point.
  Diagram(Lattice lattice, std::vector<Point> pos);

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  const Point& pos(Element e) const { return pos_.at(e); }
  const std::vector<Point>& positions() const noexcept { return pos_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Lattice lattice_;
  std::vector<Point> pos_;
};

struct YIsotoneViolation {
  ElementPair cover;
};

struct InterferenceViolation {
  ElementPair cover;
  Element point;
};

using DiagramViolation = std::variant<YIsotoneViolation, InterferenceViolation>;

std::string describe(const Diagram& d, const DiagramViolation& v);

// Checks covers in lexicographic order; for each cover, y-isotone first and
// then noninterference. Returns the first violation found.
std::optional<DiagramViolation> validate_diagram(const Diagram& d);

struct Crossing {
  ElementPair first;
  ElementPair second;
  Point at;
};

struct PlanarityReport {
  bool planar = true;
  std::optional<Crossing> witness;
};

// Every pair of distinct covering segments may meet only in a shared
// endpoint. The witness is the first offending pair in cover order.
PlanarityReport check_planarity(const Diagram& d);

// A point where closed segments ab and cd touch other than at an endpoint
// they share, if any.
std::optional<Point> improper_contact(const Point& a, const Point& b,
                                      const Point& c, const Point& d);

/// Diagram certified to be y-isotone, noninterfering and planar. Caches the
/// left-to-right order of the covers at every element.
class PlanarDiagram {
 public:
  // Throws NotPlanar describing the first defect.
  explicit PlanarDiagram(Diagram d);

  const Diagram& diagram() const noexcept { return d_; }
  const Lattice& lattice() const noexcept { return d_.lattice(); }
  std::size_t size() const noexcept { return d_.size(); }
  const Point& pos(Element e) const { return d_.pos(e); }

  // Upper covers of e, leftmost first.
  const std::vector<Element>& upper_covers(Element e) const {
    return upper_.at(e);
  }
  // Lower covers of e, leftmost first.
  const std::vector<Element>& lower_covers(Element e) const {
    return lower_.at(e);
  }

  // Distinct element heights in increasing order, interleaved with the
  // midpoints between consecutive heights.
  const std::vector<Rational>& sample_levels() const noexcept {
    return levels_;
  }

 private:
  Diagram d_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<Rational> levels_;
};

// The diagram reflected in the y-axis.
Diagram mirror(const Diagram& d);

// Closed first-quadrant order, strict form.
bool product_leq(const Point& p, const Point& q);
// q - p within 45 degrees of the positive y-axis, boundary included.
bool slanted_leq(const Point& p, const Point& q);
// q - p strictly within 45 degrees of the positive x-axis.
bool slanted_lr(const Point& p, const Point& q);
// Open fourth-quadrant order: q - p has x > 0 and y < 0.
bool fourth_quadrant_lt(const Point& p, const Point& q);

Point alpha(const Point& p);
Point beta(const Point& p);

// Orders distinct points by slanted_leq. Throws NotALattice when the
// resulting order is not a lattice.
Diagram lattice_from_slanted_points(std::span<const Point> pts,
                                    std::vector<std::string> names = {});

}  // namespace planarlat
