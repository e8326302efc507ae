#include "planarlat/generate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "planarlat/planarity.hpp"

namespace planarlat {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Cuts of the order i < j iff i < j and perm[i] < perm[j]: all intersections
// of principal down-sets, with the full set as the empty intersection.
Lattice completion(const std::vector<std::size_t>& perm) {
  const std::size_t k = perm.size();
  const std::uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
  std::set<std::uint64_t> cuts{full};
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t down = 0;
    for (std::size_t j = 0; j <= i; ++j)
      if (perm[j] <= perm[i]) down |= 1ULL << j;
    std::vector<std::uint64_t> fresh;
    for (std::uint64_t c : cuts) fresh.push_back(c & down);
    cuts.insert(fresh.begin(), fresh.end());
  }
  std::vector<std::uint64_t> els(cuts.begin(), cuts.end());
  std::sort(els.begin(), els.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  const std::size_t n = els.size();
  std::vector<std::string> names;
  StrictRelation rel(n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back("e" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (els[a] & ~els[b]) == 0) rel.insert(a, b);
  }
  return as_lattice(Poset(std::move(names), std::move(rel)));
}

struct UnionFind {
  std::vector<std::size_t> up;
  explicit UnionFind(std::size_t n) : up(n) {
    std::iota(up.begin(), up.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

template <class Op>
CongruenceBlocks random_congruence(const Lattice& l, std::mt19937_64& rng,
                                   Op op, CongruenceKind kind) {
  const std::size_t n = l.size();
  UnionFind uf(n);
  const auto& comparable = l.less().pairs();
  if (!comparable.empty()) {
    const std::size_t merges = draw(rng, 1, 2);
    for (std::size_t m = 0; m < merges; ++m) {
      auto [a, b] = comparable[draw(rng, 0, comparable.size() - 1)];
      uf.unite(a, b);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (Element z = 0; z < n; ++z)
          changed |= uf.unite(op(x, z), op(y, z));
      }
  }
  CongruenceBlocks c;
  c.kind = kind;
  std::vector<std::vector<Element>> by_root(n);
  for (Element e = 0; e < n; ++e) by_root[uf.find(e)].push_back(e);
  for (auto& b : by_root)
    if (!b.empty()) c.blocks.push_back(std::move(b));
  return normalized(std::move(c));
}

}  // namespace

Lattice random_planar_lattice(std::mt19937_64& rng, std::size_t max_size) {
  if (max_size < 1) throw Error("max_size must be positive");
  if (max_size < 3) {
    // Chains are the only lattices this small.
    std::vector<std::string> names;
    std::vector<ElementPair> pairs;
    for (std::size_t i = 0; i < max_size; ++i) {
      names.push_back("e" + std::to_string(i));
      if (i) pairs.emplace_back(i - 1, i);
    }
    return make_lattice(std::move(names), pairs);
  }
  const std::size_t hi = std::min<std::size_t>(max_size - 2, 62);
  for (;;) {
    std::vector<std::size_t> perm(draw(rng, 1, hi));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Lattice l = completion(perm);
    if (l.size() <= max_size) return l;
  }
}

OrientedLattice random_oriented_lattice(std::mt19937_64& rng,
                                        std::size_t max_size) {
  Lattice l = random_planar_lattice(rng, max_size);
  auto lambda = find_complementary(l, rng);
  if (!lambda) throw InternalDefect("generated lattice is not planar");
  return OrientedLattice(std::move(l), std::move(*lambda));
}

PlanarDiagram random_diagram(const OrientedLattice& o, std::mt19937_64& rng) {
  const auto [t1, t2] = total_orders(o.lattice(), o.lambda());
  const ChainEmbedding emb = embed_two_chains(o.lattice(), t1, t2);
  const std::size_t n = o.size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::int64_t> u(n), v(n);
    std::int64_t su = 0, sv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = su += static_cast<std::int64_t>(draw(rng, 1, 4));
      v[i] = sv += static_cast<std::int64_t>(draw(rng, 1, 4));
    }
    std::vector<Point> pos;
    for (auto [r1, r2] : emb.ranks)
      pos.push_back(Point{Rational(u[r1] - v[r2]), Rational(u[r1] + v[r2])});
    Diagram d(o.lattice(), std::move(pos));
    if (validate_diagram(d) || !check_planarity(d).planar) continue;
    PlanarDiagram pd(std::move(d));
    if (lr_order(pd) == o.lambda()) return pd;
  }
  return PlanarDiagram(build_planar_diagram(o.lattice(), emb));
}

CongruenceBlocks random_join_congruence(const Lattice& l,
                                        std::mt19937_64& rng) {
  return random_congruence(
      l, rng, [&](Element a, Element b) { return l.join(a, b); },
      CongruenceKind::join);
}

CongruenceBlocks random_meet_congruence(const Lattice& l,
                                        std::mt19937_64& rng) {
  return random_congruence(
      l, rng, [&](Element a, Element b) { return l.meet(a, b); },
      CongruenceKind::meet);
}

}  // namespace planarlat
