#pragma once

#include <vector>

#include "planarlat/geometry.hpp"

namespace planarlat {

/// Maximal chain of a diagram, listed from bottom to top.
struct MaxChain {
  std::vector<Element> elements;

  bool contains(Element e) const;
  friend bool operator==(const MaxChain&, const MaxChain&) = default;
  friend auto operator<=>(const MaxChain&, const MaxChain&) = default;
};

/// The polyline x = f(y) traced by a maximal chain.
class PathFunction {
 public:
  // Breakpoints as (y, x) pairs with y strictly increasing.
  explicit PathFunction(std::vector<std::pair<Rational, Rational>> breakpoints);

  const std::vector<std::pair<Rational, Rational>>& breakpoints() const {
    return breakpoints_;
  }
  Rational lower() const { return breakpoints_.front().first; }
  Rational upper() const { return breakpoints_.back().first; }

  // Throws OutOfDomain outside [lower(), upper()].
  Rational operator()(const Rational& y) const;

 private:
  std::vector<std::pair<Rational, Rational>> breakpoints_;
};

PathFunction path_function(const Diagram& d, const MaxChain& c);
Rational eval_path(const PathFunction& f, const Rational& y);

// All maximal chains, in the order a left-first depth-first walk from the
// bottom discovers them.
std::vector<MaxChain> maximal_chains(const PlanarDiagram& d);

// f_c1 <= f_c2 pointwise.
bool chain_leq(const PlanarDiagram& d, const MaxChain& c1, const MaxChain& c2);
MaxChain chain_min(const PlanarDiagram& d, const MaxChain& c1,
                   const MaxChain& c2);
MaxChain chain_max(const PlanarDiagram& d, const MaxChain& c1,
                   const MaxChain& c2);

// Leftmost and rightmost maximal chains through p.
MaxChain lm(const PlanarDiagram& d, Element p);
MaxChain rm(const PlanarDiagram& d, Element p);

enum class Side { left, on, right };

// Position of p relative to the path of c at height p.y.
Side pf_compare(const PlanarDiagram& d, Element p, const MaxChain& c);

struct RegionPartition {
  std::vector<Element> left;
  std::vector<Element> mid;
  std::vector<Element> right;
};

// left: strictly left of lm(p); right: strictly right of rm(p); mid: the rest.
RegionPartition partition_at(const PlanarDiagram& d, Element p);

// p lr q iff p, q incomparable and q lies strictly right of rm(p).
StrictRelation lr_order(const PlanarDiagram& d);

// Kelly-Rival comparison: a is left of b when, at their meet, some upper
// cover below a precedes some upper cover below b in the angular order.
// Throws NotIncomparable for comparable a, b.
bool kelly_rival_left(const PlanarDiagram& d, Element a, Element b);

}  // namespace planarlat
