#pragma once

#include <vector>

#include "planarlat/leftright.hpp"

namespace planarlat {

/// A lattice together with a complementary order.
class OrientedLattice {
 public:
  OrientedLattice() = default;
  // Throws NotComplementary.
  OrientedLattice(Lattice lattice, StrictRelation lambda);

  const Lattice& lattice() const noexcept { return lattice_; }
  const StrictRelation& lambda() const noexcept { return lambda_; }
  std::size_t size() const noexcept { return lattice_.size(); }

  friend bool operator==(const OrientedLattice&,
                         const OrientedLattice&) = default;

 private:
  Lattice lattice_;
  StrictRelation lambda_;
};

// The orientation a planar diagram induces through its left-right order.
OrientedLattice orientation_of(const PlanarDiagram& d);

/// Per-element counts below and above for the lattice order and for lambda.
struct ImbalanceProfile {
  std::vector<int> lo_lt, hi_lt;
  std::vector<int> lo_lambda, hi_lambda;

  int imbal_lt(Element e) const { return lo_lt[e] - hi_lt[e]; }
  int imbal_lambda(Element e) const { return lo_lambda[e] - hi_lambda[e]; }
};

ImbalanceProfile imbalance(const OrientedLattice& o);

// Places every element at (imbal_lambda, imbal_lt). Throws InternalDefect if
// the placement is not an injective planar slanted diagram of o.
Diagram canon(const OrientedLattice& o);

// Canon computed from the diagram's own left-right order is the identity.
bool is_canonical(const PlanarDiagram& d);

// Same point set and same covering segments after canon.
bool canonical_unique(const OrientedLattice& o1, const OrientedLattice& o2);

// p left-right q implies p.x < q.x.
bool is_well_drawn(const PlanarDiagram& d);
// lambda(p, q) implies p.x < q.x.
bool respects_x_order(const Diagram& d, const StrictRelation& lambda);

enum class SubVerdict { holds, fails, skipped };
const char* to_string(SubVerdict v);

struct SubResult {
  SubVerdict verdict = SubVerdict::skipped;
  std::vector<Element> failing;  // a sublattice whose reconnection breaks
};

// Every sublattice, drawn with the original points and its own covers, is a
// planar diagram. Skipped above `cap` elements.
SubResult has_sub_property(const PlanarDiagram& d, std::size_t cap = 12);

// Enumerates the subsets closed under meet and join, as sorted id lists,
// in increasing bitmask order.
std::vector<std::vector<Element>> sublattices(const Lattice& l);

}  // namespace planarlat
