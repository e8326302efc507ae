#pragma once

#include <optional>
#include <vector>

#include "planarlat/leftright.hpp"

namespace planarlat {

/// Spanning tree of the covering graph rooted at the bottom element.
struct SpanningTree {
  Element root = 0;
  std::vector<std::optional<Element>> parent;  // empty for the root
  std::vector<std::vector<Element>> children;  // left to right

  // (parent, child) pairs ordered by child id.
  std::vector<ElementPair> edges() const;
};

using Traversal = LinearOrder;

// Keeps only the rightmost lower cover of every element.
SpanningTree build_tur(const PlanarDiagram& d);
// build_tur of the mirrored diagram, children listed left to right in the
// mirror.
SpanningTree build_tul(const PlanarDiagram& d);

// Preorder of a tree visiting children in their stored order.
Traversal depth_first(const SpanningTree& t);

Traversal ur_traversal(const PlanarDiagram& d);
Traversal ul_traversal(const PlanarDiagram& d);

// Pairs ordered the same way by both sequences. Throws MismatchedCarrier
// unless both are permutations of the same element set.
StrictRelation recover_order(const Traversal& t1, const Traversal& t2);

}  // namespace planarlat
