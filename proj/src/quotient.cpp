#include "planarlat/quotient.hpp"

#include <algorithm>
#include <sstream>

namespace planarlat {

const char* to_string(CongruenceKind k) {
  switch (k) {
    case CongruenceKind::join:
      return "join";
    case CongruenceKind::meet:
      return "meet";
    case CongruenceKind::lattice:
      return "lattice";
  }
  return "?";
}

CongruenceBlocks normalized(CongruenceBlocks c) {
  for (auto& b : c.blocks) std::sort(b.begin(), b.end());
  std::sort(c.blocks.begin(), c.blocks.end());
  return c;
}

namespace {

std::vector<std::size_t> block_index(const Lattice& l,
                                     const CongruenceBlocks& c) {
  std::vector<std::size_t> idx(l.size(), c.blocks.size());
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    if (c.blocks[i].empty()) throw InvalidBlocks("empty block");
    for (Element e : c.blocks[i]) {
      if (e >= l.size()) throw InvalidBlocks("block element out of range");
      if (idx[e] != c.blocks.size())
        throw InvalidBlocks("element " + l.name(e) + " in two blocks");
      idx[e] = i;
    }
  }
  for (Element e = 0; e < l.size(); ++e)
    if (idx[e] == c.blocks.size())
      throw InvalidBlocks("element " + l.name(e) + " in no block");
  return idx;
}

template <class Op>
void check_compatible(const Lattice& l, const std::vector<std::size_t>& idx,
                      Op op) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (idx[x] != idx[y]) continue;
      for (Element z = 0; z < n; ++z)
        if (idx[op(x, z)] != idx[op(y, z)]) throw NotCompatible(x, y, z);
    }
}

}  // namespace

void validate_congruence(const Lattice& l, const CongruenceBlocks& c) {
  const auto idx = block_index(l, c);
  auto join = [&](Element a, Element b) { return l.join(a, b); };
  auto meet = [&](Element a, Element b) { return l.meet(a, b); };
  if (c.kind != CongruenceKind::meet) check_compatible(l, idx, join);
  if (c.kind != CongruenceKind::join) check_compatible(l, idx, meet);
}

Quotient quotient_lattice(const Lattice& l, const CongruenceBlocks& c) {
  validate_congruence(l, c);
  const CongruenceBlocks nc = normalized(c);
  const bool by_bottom = nc.kind == CongruenceKind::meet;
  const std::size_t k = nc.blocks.size();

  Quotient q;
  q.block_of = block_index(l, nc);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& b = nc.blocks[i];
    auto rep = std::find_if(b.begin(), b.end(), [&](Element r) {
      return std::all_of(b.begin(), b.end(), [&](Element e) {
        return by_bottom ? l.leq(r, e) : l.leq(e, r);
      });
    });
    if (rep == b.end()) throw BlockHasNoTop(i);
    q.representative.push_back(*rep);
    if (b.size() == 1) {
      names.push_back(l.name(b.front()));
    } else {
      std::string s = "[";
      for (std::size_t j = 0; j < b.size(); ++j)
        s += (j ? "," : "") + l.name(b[j]);
      names.push_back(s + "]");
    }
  }
  StrictRelation rel(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (l.lt(q.representative[i], q.representative[j])) rel.insert(i, j);
  q.lattice = as_lattice(Poset(std::move(names), std::move(rel)));

  // The quotient map respects the congruence's operation, and the
  // representatives are closed under the other one.
  const bool joins = nc.kind != CongruenceKind::meet;
  const bool meets = nc.kind != CongruenceKind::join;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Element a = q.representative[i], b = q.representative[j];
      bool ok = by_bottom
                    ? l.join(a, b) == q.representative[q.lattice.join(i, j)]
                    : l.meet(a, b) == q.representative[q.lattice.meet(i, j)];
      if (joins) ok = ok && q.block_of[l.join(a, b)] == q.lattice.join(i, j);
      if (meets) ok = ok && q.block_of[l.meet(a, b)] == q.lattice.meet(i, j);
      if (!ok) throw InternalDefect("quotient map is not a homomorphism");
    }
  return q;
}

Quotient meet_quotient_via_dual(const Lattice& l, const CongruenceBlocks& c) {
  CongruenceBlocks dc = c;
  dc.kind = c.kind == CongruenceKind::meet ? CongruenceKind::join
                                           : CongruenceKind::meet;
  if (c.kind == CongruenceKind::lattice) dc.kind = CongruenceKind::lattice;
  Quotient q = quotient_lattice(dual(l), dc);
  q.lattice = dual(q.lattice);
  return q;
}

PlanarityCertificate quotient_planarity(const Lattice& l,
                                        const CongruenceBlocks& c) {
  const auto lambda = find_complementary(l);
  if (!lambda) throw NotPlanar("lattice is not planar");
  const Quotient q = quotient_lattice(l, c);
  const StrictRelation restricted =
      restrict_complementary(l, *lambda, q.lattice, q.representative);
  return certify_planar(q.lattice, restricted);
}

CongruenceBlocks parse_blocks(const Lattice& l, const std::string& spec,
                              CongruenceKind kind) {
  CongruenceBlocks c;
  c.kind = kind;
  std::vector<char> used(l.size(), 0);
  std::istringstream blocks(spec);
  std::string block;
  while (std::getline(blocks, block, ';')) {
    std::vector<Element> members;
    std::istringstream items(block);
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
      const auto e = l.find(item);
      if (!e) throw InvalidBlocks("unknown element '" + item + "'");
      if (used[*e]) throw InvalidBlocks("element " + item + " in two blocks");
      used[*e] = 1;
      members.push_back(*e);
    }
    if (!members.empty()) c.blocks.push_back(std::move(members));
  }
  for (Element e = 0; e < l.size(); ++e)
    if (!used[e]) c.blocks.push_back({e});
  return normalized(std::move(c));
}

}  // namespace planarlat
