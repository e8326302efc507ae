#include "planarlat/traversal.hpp"

#include <algorithm>

namespace planarlat {

std::vector<ElementPair> SpanningTree::edges() const {
  std::vector<ElementPair> out;
  for (Element e = 0; e < parent.size(); ++e)
    if (parent[e]) out.emplace_back(*parent[e], e);
  return out;
}

SpanningTree build_tur(const PlanarDiagram& d) {
  const std::size_t n = d.size();
  SpanningTree t;
  t.root = d.lattice().bottom();
  t.parent.assign(n, std::nullopt);
  t.children.assign(n, {});
  for (Element e = 0; e < n; ++e)
    if (e != t.root) t.parent[e] = d.lower_covers(e).back();
  for (Element e = 0; e < n; ++e)
    for (Element u : d.upper_covers(e))
      if (t.parent[u] == e) t.children[e].push_back(u);
  return t;
}

SpanningTree build_tul(const PlanarDiagram& d) {
  return build_tur(PlanarDiagram(mirror(d.diagram())));
}

Traversal depth_first(const SpanningTree& t) {
  Traversal out;
  std::vector<Element> stack{t.root};
  while (!stack.empty()) {
    const Element e = stack.back();
    stack.pop_back();
    out.sequence.push_back(e);
    const auto& kids = t.children.at(e);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  if (out.sequence.size() != t.parent.size())
    throw InternalDefect("spanning tree does not reach every element");
  return out;
}

Traversal ur_traversal(const PlanarDiagram& d) {
  return depth_first(build_tur(d));
}

Traversal ul_traversal(const PlanarDiagram& d) {
  return depth_first(build_tul(d));
}

StrictRelation recover_order(const Traversal& t1, const Traversal& t2) {
  const std::size_t n = t1.size();
  auto is_permutation = [n](const Traversal& t) {
    std::vector<char> seen(n, 0);
    for (Element e : t.sequence) {
      if (e >= n || seen[e]) return false;
      seen[e] = 1;
    }
    return true;
  };
  if (t2.size() != n || !is_permutation(t1) || !is_permutation(t2))
    throw MismatchedCarrier("traversals do not list the same elements");
  return t1.relation() & t2.relation();
}

}  // namespace planarlat
