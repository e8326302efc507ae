#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planarlat/geometry.hpp"

#include <random>
#include <set>

using namespace planarlat;
using fixtures::id;
using fixtures::pt;

TEST_CASE("validate_diagram accepts M3_CANON") {
  CHECK_FALSE(validate_diagram(fixtures::m3_canon()));
}

TEST_CASE("validate_diagram reports a cover going down") {
  const Diagram m = fixtures::m3_canon();
  auto pos = m.positions();
  pos[id(m.lattice(), "1")] = pt(0, -5);
  const auto v = validate_diagram(Diagram(m.lattice(), pos));
  REQUIRE(v);
  CHECK(std::holds_alternative<YIsotoneViolation>(*v));
}

TEST_CASE("validate_diagram reports an interfering point") {
  const Diagram d(fixtures::chain(3), {pt(0, 0), pt(0, 2), pt(0, 1)});
  const auto v = validate_diagram(d);
  REQUIRE(v);
  REQUIRE(std::holds_alternative<InterferenceViolation>(*v));
  const auto iv = std::get<InterferenceViolation>(*v);
  CHECK(iv.cover == ElementPair{0, 1});
  CHECK(iv.point == 2);
  CHECK_FALSE(describe(d, *v).empty());
}

TEST_CASE("Diagram rejects shared points and wrong sizes") {
  CHECK_THROWS_AS(Diagram(fixtures::chain(2), {pt(0, 0), pt(0, 0)}), Error);
  CHECK_THROWS_AS(Diagram(fixtures::chain(2), {pt(0, 0)}), Error);
}

TEST_CASE("check_planarity on fixtures") {
  CHECK(check_planarity(fixtures::m3_canon()).planar);
  CHECK(check_planarity(fixtures::n5_canon()).planar);
  CHECK(oracles::planar_by_oracle(fixtures::m3_canon()));
}

TEST_CASE("check_planarity finds a crossing with its point") {
  // N5 with the long edge a-1 crossing b-c.
  const Lattice n5 = fixtures::n5();
  const Diagram d = fixtures::place(n5, {{"0", pt(0, 0)},
                                         {"a", pt(-1, 1)},
                                         {"b", pt(-3, 2)},
                                         {"c", pt(2, 3)},
                                         {"1", pt(0, 5)}});
  CHECK_FALSE(validate_diagram(d));
  const auto r = check_planarity(d);
  CHECK_FALSE(r.planar);
  REQUIRE(r.witness);
  CHECK_FALSE(oracles::planar_by_oracle(d));
}

// Every placement of B3 with one row per rank and x in 0..4.
TEST_CASE("B3 has no planar placement on a 5x4 grid") {
  const Lattice b3 = fixtures::b3();
  const std::vector<std::string> atoms{"a", "b", "c"},
      coatoms{"ab", "ac", "bc"};
  int tried = 0, planar = 0;
  for (int x0 = 0; x0 < 5; ++x0)
    for (int x1 = 0; x1 < 5; ++x1)
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          for (int c = 0; c < 5; ++c) {
            if (a == b || b == c || a == c) continue;
            for (int p = 0; p < 5; ++p)
              for (int q = 0; q < 5; ++q)
                for (int r = 0; r < 5; ++r) {
                  if (p == q || q == r || p == r) continue;
                  const Diagram d = fixtures::place(
                      b3, {{"0", pt(x0, 0)},
                           {"a", pt(a, 1)},
                           {"b", pt(b, 1)},
                           {"c", pt(c, 1)},
                           {"ab", pt(p, 2)},
                           {"ac", pt(q, 2)},
                           {"bc", pt(r, 2)},
                           {"1", pt(x1, 3)}});
                  if (validate_diagram(d)) continue;
                  ++tried;
                  if (check_planarity(d).planar) ++planar;
                }
          }
  CHECK(tried > 0);
  CHECK(planar == 0);
}

TEST_CASE("improper_contact basics") {
  CHECK(improper_contact(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)) == pt(1, 1));
  CHECK_FALSE(improper_contact(pt(0, 0), pt(1, 1), pt(1, 1), pt(2, 3)));
  CHECK(improper_contact(pt(0, 0), pt(0, 2), pt(0, 1), pt(0, 3)));
  CHECK(improper_contact(pt(0, 0), pt(2, 2), pt(1, 1), pt(3, 0)));
}

TEST_CASE("point orders") {
  CHECK(product_leq(pt(0, 0), pt(1, 1)));
  CHECK_FALSE(product_leq(pt(0, 0), pt(-1, 2)));
  CHECK_FALSE(product_leq(pt(0, 0), pt(0, 0)));
  CHECK(slanted_leq(pt(0, 0), pt(1, 2)));
  CHECK(slanted_leq(pt(0, 0), pt(1, 1)));
  CHECK_FALSE(slanted_leq(pt(0, 0), pt(2, 1)));
  CHECK(slanted_lr(pt(0, 0), pt(2, 1)));
  CHECK_FALSE(slanted_lr(pt(0, 0), pt(1, 1)));
  CHECK_FALSE(slanted_lr(pt(0, 0), pt(-2, 0)));
}

TEST_CASE("alpha and beta") {
  CHECK(alpha(pt(1, 0)) == pt(1, -1));
  CHECK(beta(alpha(pt(3, 7))) == pt(3, 7));
  CHECK(beta(pt(1, 0)) == pt(1, 2, 1, 2));
}

TEST_CASE("random rational samples: alpha carries the slanted orders") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  for (int i = 0; i < 2000; ++i) {
    const Point p = pt(num(rng), den(rng), num(rng), den(rng));
    const Point q = pt(num(rng), den(rng), num(rng), den(rng));
    CHECK(slanted_leq(p, q) == product_leq(alpha(p), alpha(q)));
    CHECK(slanted_lr(p, q) == fourth_quadrant_lt(alpha(p), alpha(q)));
    if (p != q) {
      const int hits = int(slanted_leq(p, q)) + int(slanted_leq(q, p)) +
                       int(slanted_lr(p, q)) + int(slanted_lr(q, p));
      CHECK(hits == 1);
    }
    CHECK(beta(alpha(p)) == p);
  }
}

TEST_CASE("lattice_from_slanted_points") {
  const Diagram m = fixtures::m3_canon();
  const Diagram d = lattice_from_slanted_points(m.positions());
  CHECK(d.size() == 5);
  CHECK(d.lattice().less().count() == 7);
  CHECK(d.lattice().covers().size() == 6);
  CHECK(check_planarity(d).planar);

  const std::vector<Point> one{pt(0, 0)};
  CHECK(lattice_from_slanted_points(one).size() == 1);

  // (0,0) < (1,1) < (2,2), (1,1) < (0,2); (2,0) is below (1,1) only via
  // nothing: (0,0) and (2,0) have no common lower bound.
  const std::vector<Point> five{pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2),
                                pt(1, 1)};
  std::vector<std::string> names(5);
  StrictRelation rel(5);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b)
      if (a != b && slanted_leq(five[a], five[b])) rel.insert(a, b);
  const bool lattice = oracles::brute_is_lattice(Poset(names, rel));
  CHECK_FALSE(lattice);
  CHECK_THROWS_AS(lattice_from_slanted_points(five), NotALattice);
}

TEST_CASE("slanted diagrams are planar with segments inside intervals") {
  // Random grid points closed under componentwise min and max form a
  // sublattice of the product order; beta turns them into slanted points.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coord(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::pair<long, long>> grid;
    for (int i = 0; i < 4; ++i) grid.emplace(coord(rng), coord(rng));
    for (bool grew = true; grew;) {
      grew = false;
      const auto now = grid;
      for (auto [a, b] : now)
        for (auto [c, e] : now) {
          grew |= grid.emplace(std::min(a, c), std::min(b, e)).second;
          grew |= grid.emplace(std::max(a, c), std::max(b, e)).second;
        }
    }
    std::vector<Point> pts;
    for (auto [a, b] : grid) pts.push_back(beta(pt(a, b)));
    const Diagram d = lattice_from_slanted_points(pts);
    CHECK_FALSE(validate_diagram(d));
    CHECK(oracles::planar_by_oracle(d));
    CHECK(check_planarity(d).planar);
  }
}

TEST_CASE("PlanarDiagram orders covers left to right") {
  const PlanarDiagram d(fixtures::m3_canon());
  const Lattice& l = d.lattice();
  CHECK(d.upper_covers(id(l, "0")) ==
        std::vector<Element>{id(l, "a"), id(l, "b"), id(l, "c")});
  CHECK(d.lower_covers(id(l, "1")) ==
        std::vector<Element>{id(l, "a"), id(l, "b"), id(l, "c")});
  CHECK_THROWS_AS(
      PlanarDiagram(Diagram(fixtures::chain(3), {pt(0, 0), pt(0, 2), pt(0, 1)})),
      NotPlanar);
}

TEST_CASE("mirror negates x") {
  const Diagram m = mirror(fixtures::n5_canon());
  CHECK(m.pos(1) == pt(2, 0));
  CHECK(m.lattice() == fixtures::n5());
}
