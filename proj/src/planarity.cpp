#include "planarlat/planarity.hpp"

#include <deque>

#include "planarlat/leftright.hpp"

namespace planarlat {

bool is_complementary(const Lattice& l, const StrictRelation& lambda) {
  const std::size_t n = l.size();
  if (lambda.size() != n || !lambda.is_strict_order()) return false;
  for (Element p = 0; p < n; ++p)
    for (Element q = p + 1; q < n; ++q) {
      const int hits = int(l.lt(p, q)) + int(l.lt(q, p)) + int(lambda(p, q)) +
                       int(lambda(q, p));
      if (hits != 1) return false;
    }
  return true;
}

namespace {

// Transitive orientation of the incomparability graph by depth-first search
// with propagation of the two forced moves:
//   a -> b and c comparable to b (c != b, c incomparable to a) forces a -> c;
//   a -> b -> c forces a -> c, and fails if a and c are comparable.
class OrientationSearch {
 public:
  OrientationSearch(const Lattice& l, std::mt19937_64* rng)
      : n_(l.size()), edge_(incomparability(l)), rng_(rng) {}

  std::optional<StrictRelation> run() {
    State s(n_ * n_, 0);
    if (!solve(s)) return std::nullopt;
    StrictRelation out(n_);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (s[a * n_ + b]) out.insert(a, b);
    return out;
  }

 private:
  using State = std::vector<unsigned char>;

  bool orient(State& s, Element a, Element b,
              std::deque<ElementPair>& queue) const {
    if (s[a * n_ + b]) return true;
    if (s[b * n_ + a]) return false;
    s[a * n_ + b] = 1;
    queue.emplace_back(a, b);
    return true;
  }

  bool propagate(State& s, std::deque<ElementPair>& queue) const {
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (Element c = 0; c < n_; ++c) {
        if (c == a || c == b) continue;
        if (edge_(a, c) && !edge_(b, c) && !orient(s, a, c, queue))
          return false;
        if (edge_(c, b) && !edge_(a, c) && !orient(s, c, b, queue))
          return false;
        if (s[b * n_ + c] && (!edge_(a, c) || !orient(s, a, c, queue)))
          return false;
        if (s[c * n_ + a] && (!edge_(c, b) || !orient(s, c, b, queue)))
          return false;
      }
    }
    return true;
  }

  bool solve(State& s) const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b) {
        if (!edge_(a, b) || s[a * n_ + b] || s[b * n_ + a]) continue;
        ElementPair first{a, b}, second{b, a};
        if (rng_ && std::bernoulli_distribution(0.5)(*rng_))
          std::swap(first, second);
        for (auto [x, y] : {first, second}) {
          State trial = s;
          std::deque<ElementPair> queue;
          if (orient(trial, x, y, queue) && propagate(trial, queue) &&
              solve(trial)) {
            s = std::move(trial);
            return true;
          }
        }
        return false;
      }
    return true;
  }

  std::size_t n_;
  StrictRelation edge_;
  std::mt19937_64* rng_;
};

}  // namespace

std::optional<StrictRelation> find_complementary(const Lattice& l) {
  return OrientationSearch(l, nullptr).run();
}

std::optional<StrictRelation> find_complementary(const Lattice& l,
                                                 std::mt19937_64& rng) {
  return OrientationSearch(l, &rng).run();
}

std::vector<ElementPair> forcing_conflict(const Lattice& l) {
  const std::size_t n = l.size();
  const StrictRelation edge = incomparability(l);
  std::vector<char> seen(n * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (!edge(a, b) || seen[a * n + b]) continue;
      // Breadth-first search over one forcing class.
      std::vector<std::optional<std::size_t>> parent(n * n);
      std::deque<std::size_t> queue{a * n + b};
      seen[a * n + b] = 1;
      auto visit = [&](std::size_t from, Element x, Element y) {
        const std::size_t id = x * n + y;
        if (seen[id]) return;
        seen[id] = 1;
        parent[id] = from;
        queue.push_back(id);
      };
      while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const Element x = cur / n, y = cur % n;
        for (Element c = 0; c < n; ++c) {
          if (c != y && c != x && edge(x, c) && !edge(y, c)) visit(cur, x, c);
          if (c != x && c != y && edge(c, y) && !edge(x, c)) visit(cur, c, y);
        }
      }
      if (!seen[b * n + a]) continue;
      std::vector<ElementPair> chain;
      for (std::optional<std::size_t> id = b * n + a; id; id = parent[*id])
        chain.emplace_back(*id / n, *id % n);
      return {chain.rbegin(), chain.rend()};
    }
  return {};
}

std::pair<LinearOrder, LinearOrder> total_orders(const Lattice& l,
                                                 const StrictRelation& lambda) {
  if (!is_complementary(l, lambda))
    throw NotComplementary("relation is not complementary to the order");
  return {sort_by_total_order(l.less() | lambda),
          sort_by_total_order(l.less() | lambda.dual())};
}

ChainEmbedding embed_two_chains(const Lattice& l, const LinearOrder& t1,
                                const LinearOrder& t2) {
  const std::size_t n = l.size();
  if (t1.size() != n || t2.size() != n)
    throw NotAnIntersection("orders have the wrong number of elements");
  const auto r1 = t1.rank(), r2 = t2.rank();
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) {
      if (p == q) continue;
      if (l.lt(p, q) != (r1[p] < r1[q] && r2[p] < r2[q]))
        throw NotAnIntersection("orders do not intersect to the lattice order");
    }
  ChainEmbedding emb;
  for (Element p = 0; p < n; ++p) emb.ranks.emplace_back(r1[p], r2[p]);
  return emb;
}

Diagram build_planar_diagram(const Lattice& l, const ChainEmbedding& emb) {
  std::vector<Point> pos;
  for (auto [a, b] : emb.ranks) {
    const auto x = static_cast<std::int64_t>(a);
    const auto y = static_cast<std::int64_t>(b);
    pos.push_back(beta(Point{Rational(2 * x), Rational(2 * y)}));
  }
  Diagram d(l, std::move(pos));
  for (Element p = 0; p < d.size(); ++p)
    for (Element q = 0; q < d.size(); ++q)
      if (l.lt(p, q) != slanted_leq(d.pos(p), d.pos(q)))
        throw InternalDefect("slanted placement does not reproduce the order");
  if (validate_diagram(d) || !check_planarity(d).planar)
    throw InternalDefect("slanted placement is not a planar diagram");
  return d;
}

PlanarityCertificate certify_planar(const Lattice& l,
                                    const StrictRelation& lambda) {
  auto [t1, t2] = total_orders(l, lambda);
  Diagram d = build_planar_diagram(l, embed_two_chains(l, t1, t2));
  if (lr_order(PlanarDiagram(d)) != lambda)
    throw InternalDefect("diagram left-right order differs from the witness");
  PlanarityCertificate cert;
  cert.planar = true;
  cert.lambda = lambda;
  cert.diagram = std::move(d);
  return cert;
}

PlanarityCertificate decide_planarity(const Lattice& l) {
  if (auto lambda = find_complementary(l)) return certify_planar(l, *lambda);
  PlanarityCertificate cert;
  cert.failure_core = forcing_conflict(l);
  if (cert.failure_core.empty())
    throw InternalDefect("no complementary order yet forcing is consistent");
  return cert;
}

StrictRelation restrict_complementary(const Lattice& l,
                                      const StrictRelation& lambda,
                                      const Lattice& k,
                                      std::span<const Element> embedding) {
  if (embedding.size() != k.size())
    throw NotAnEmbedding("embedding has the wrong number of elements");
  for (Element p = 0; p < k.size(); ++p) {
    if (embedding[p] >= l.size())
      throw NotAnEmbedding("embedding target out of range");
    for (Element q = 0; q < k.size(); ++q) {
      if (p == q) continue;
      if (embedding[p] == embedding[q])
        throw NotAnEmbedding("embedding is not injective");
      if (k.lt(p, q) != l.lt(embedding[p], embedding[q]))
        throw NotAnEmbedding("map does not reflect the order");
    }
  }
  if (!is_complementary(l, lambda))
    throw NotComplementary("relation is not complementary to the order");
  StrictRelation out(k.size());
  for (Element p = 0; p < k.size(); ++p)
    for (Element q = 0; q < k.size(); ++q)
      if (!k.comparable(p, q) && lambda(embedding[p], embedding[q]))
        out.insert(p, q);
  return out;
}

}  // namespace planarlat
