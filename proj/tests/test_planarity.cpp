#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planarlat/generate.hpp"
#include "planarlat/leftright.hpp"
#include "planarlat/planarity.hpp"

#include <algorithm>

using namespace planarlat;
using fixtures::id;

namespace {

std::vector<Element> seq(const Lattice& l,
                         std::initializer_list<const char*> names) {
  std::vector<Element> v;
  for (const char* n : names) v.push_back(id(l, n));
  return v;
}

// Lexicographic rank of an orientation: pairs (a, b), a < b, in order, with
// a -> b counting as 0.
std::vector<bool> orientation_code(const Lattice& l, const StrictRelation& r) {
  std::vector<bool> code;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a + 1; b < l.size(); ++b)
      if (!l.comparable(a, b)) code.push_back(r(b, a));
  return code;
}

}  // namespace

TEST_CASE("find_complementary on fixtures") {
  const Lattice m3 = fixtures::m3();
  const auto lambda = find_complementary(m3);
  REQUIRE(lambda);
  CHECK(*lambda ==
        fixtures::relation(m3, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  CHECK_FALSE(find_complementary(fixtures::b3()));
  const auto c = find_complementary(fixtures::chain(4));
  REQUIRE(c);
  CHECK(c->count() == 0);
}

TEST_CASE("find_complementary is the least orientation found by exhaustion") {
  for (const Lattice& l : {fixtures::m3(), fixtures::n5(), fixtures::b3(),
                           fixtures::b3_minus_coatom(), fixtures::chain(3)}) {
    auto all = oracles::all_complementary_orders(l);
    const auto found = find_complementary(l);
    CHECK(found.has_value() == !all.empty());
    if (all.empty()) continue;
    std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
      return orientation_code(l, x) < orientation_code(l, y);
    });
    CHECK(*found == all.front());
    CHECK(is_complementary(l, *found));
    CHECK(is_complementary(l, found->dual()));
  }
}

TEST_CASE("randomized search still returns complementary orders") {
  std::mt19937_64 rng(3);
  const Lattice m3 = fixtures::m3();
  int distinct = 0;
  std::vector<StrictRelation> seen;
  for (int i = 0; i < 30; ++i) {
    const auto lambda = find_complementary(m3, rng);
    REQUIRE(lambda);
    CHECK(is_complementary(m3, *lambda));
    if (std::find(seen.begin(), seen.end(), *lambda) == seen.end()) {
      seen.push_back(*lambda);
      ++distinct;
    }
  }
  CHECK(distinct == 6);
}

TEST_CASE("failure core of B3 is a contradictory forcing chain") {
  const Lattice b3 = fixtures::b3();
  const auto core = forcing_conflict(b3);
  REQUIRE(core.size() >= 2);
  CHECK(core.front().first == core.back().second);
  CHECK(core.front().second == core.back().first);
  // Each step keeps one end and swaps the other for an element comparable to
  // the dropped one.
  for (std::size_t i = 0; i < core.size(); ++i) {
    auto [a, b] = core[i];
    CHECK_FALSE(b3.comparable(a, b));
    if (i == 0) continue;
    auto [x, y] = core[i - 1];
    const bool keep_tail = a == x && b3.comparable(b, y) && b != y;
    const bool keep_head = b == y && b3.comparable(a, x) && a != x;
    CHECK((keep_tail || keep_head));
  }
  CHECK(forcing_conflict(fixtures::m3()).empty());
  CHECK(forcing_conflict(fixtures::n5()).empty());
}

TEST_CASE("total_orders") {
  const Lattice m3 = fixtures::m3();
  const auto lam = fixtures::relation(m3, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  const auto [t1, t2] = total_orders(m3, lam);
  CHECK(t1.sequence == seq(m3, {"0", "a", "b", "c", "1"}));
  CHECK(t2.sequence == seq(m3, {"0", "c", "b", "a", "1"}));
  CHECK((t1.relation() & t2.relation()) == m3.less());

  const Lattice n5 = fixtures::n5();
  const auto [u1, u2] =
      total_orders(n5, fixtures::relation(n5, {{"a", "b"}, {"a", "c"}}));
  CHECK(u1.sequence == seq(n5, {"0", "a", "b", "c", "1"}));
  CHECK(u2.sequence == seq(n5, {"0", "b", "c", "a", "1"}));

  const auto [c1, c2] = total_orders(fixtures::chain(3), StrictRelation(3));
  CHECK(c1 == c2);
  CHECK_THROWS_AS(total_orders(m3, fixtures::relation(m3, {{"a", "b"}})),
                  NotComplementary);
}

TEST_CASE("embed_two_chains") {
  const Lattice m3 = fixtures::m3();
  const auto lam = fixtures::relation(m3, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  const auto [t1, t2] = total_orders(m3, lam);
  const auto emb = embed_two_chains(m3, t1, t2);
  using R = std::pair<std::size_t, std::size_t>;
  CHECK(emb.ranks[id(m3, "a")] == R{1, 3});
  CHECK(emb.ranks[id(m3, "b")] == R{2, 2});
  CHECK(emb.ranks[id(m3, "c")] == R{3, 1});
  for (Element p = 0; p < 5; ++p)
    for (Element q = 0; q < 5; ++q)
      if (p != q)
        CHECK(m3.lt(p, q) == (emb.ranks[p].first < emb.ranks[q].first &&
                              emb.ranks[p].second < emb.ranks[q].second));
  const Lattice c3 = fixtures::chain(3);
  const auto [s1, s2] = total_orders(c3, StrictRelation(3));
  const auto ce = embed_two_chains(c3, s1, s2);
  for (Element i = 0; i < 3; ++i) CHECK(ce.ranks[i] == R{i, i});
  CHECK_THROWS_AS(embed_two_chains(m3, t1, t1), NotAnIntersection);
}

TEST_CASE("build_planar_diagram") {
  for (const Lattice& l : {fixtures::m3(), fixtures::n5(), fixtures::chain(4)}) {
    const auto lambda = find_complementary(l);
    REQUIRE(lambda);
    const auto [t1, t2] = total_orders(l, *lambda);
    const Diagram d = build_planar_diagram(l, embed_two_chains(l, t1, t2));
    CHECK(d.size() == l.size());
    CHECK_FALSE(validate_diagram(d));
    CHECK(oracles::planar_by_oracle(d));
    for (Element p = 0; p < l.size(); ++p)
      for (Element q = 0; q < l.size(); ++q)
        if (p != q) CHECK(l.lt(p, q) == slanted_leq(d.pos(p), d.pos(q)));
  }
  const Lattice c = fixtures::chain(4);
  const auto [t1, t2] = total_orders(c, StrictRelation(4));
  const Diagram d = build_planar_diagram(c, embed_two_chains(c, t1, t2));
  for (Element p = 0; p < 4; ++p) CHECK(d.pos(p).x == Rational(0));
}

TEST_CASE("decide_planarity") {
  const auto m3 = decide_planarity(fixtures::m3());
  CHECK(m3.planar);
  REQUIRE(m3.lambda);
  REQUIRE(m3.diagram);
  CHECK(lr_order(PlanarDiagram(*m3.diagram)) == *m3.lambda);
  const auto b3 = decide_planarity(fixtures::b3());
  CHECK_FALSE(b3.planar);
  CHECK_FALSE(b3.failure_core.empty());
  CHECK_FALSE(b3.lambda);
  const Lattice seven = fixtures::b3_minus_coatom();
  const auto cut = decide_planarity(seven);
  CHECK(cut.planar == !oracles::all_complementary_orders(seven).empty());
  CHECK(cut.planar);
}

TEST_CASE("restrict_complementary") {
  const Lattice m3 = fixtures::m3();
  const auto lam = *find_complementary(m3);
  const Lattice c3 = fixtures::chain(3);
  const std::vector<Element> into_chain{id(m3, "0"), id(m3, "a"), id(m3, "1")};
  CHECK(restrict_complementary(m3, lam, c3, into_chain).count() == 0);

  const Lattice square = fixtures::lattice(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
  const std::vector<Element> into_m3{id(m3, "0"), id(m3, "c"), id(m3, "a"),
                                     id(m3, "1")};
  const auto r = restrict_complementary(m3, lam, square, into_m3);
  CHECK(r == fixtures::relation(square, {{"y", "x"}}));
  CHECK(is_complementary(square, r));

  const std::vector<Element> bad{id(m3, "0"), id(m3, "a"), id(m3, "a")};
  CHECK_THROWS_AS(restrict_complementary(m3, lam, c3, bad), NotAnEmbedding);
  const std::vector<Element> flat{id(m3, "a"), id(m3, "b"), id(m3, "1")};
  CHECK_THROWS_AS(restrict_complementary(m3, lam, c3, flat), NotAnEmbedding);
}

TEST_CASE("restrict_complementary: N5 inside generated lattices") {
  std::mt19937_64 rng(17);
  const Lattice n5 = fixtures::n5();
  int hits = 0;
  for (int i = 0; i < 200 && hits < 5; ++i) {
    const Lattice l = random_planar_lattice(rng, 8);
    if (l.size() < 8) continue;
    const auto lam = find_complementary(l);
    REQUIRE(lam);
    // Look for an order embedding of N5 by brute force.
    std::vector<Element> img(5);
    bool found = false;
    for (Element a = 0; a < l.size() && !found; ++a)
      for (Element b = 0; b < l.size() && !found; ++b)
        for (Element c = 0; c < l.size() && !found; ++c) {
          img = {l.bottom(), a, b, c, l.top()};
          bool ok = true;
          for (Element p = 0; p < 5 && ok; ++p)
            for (Element q = 0; q < 5 && ok; ++q)
              if (p != q && (img[p] == img[q] || n5.lt(p, q) != l.lt(img[p], img[q])))
                ok = false;
          found = ok;
        }
    if (!found) continue;
    ++hits;
    CHECK(is_complementary(n5, restrict_complementary(l, *lam, n5, img)));
  }
  CHECK(hits > 0);
}
