#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planarlat/lattice.hpp"

using namespace planarlat;
using fixtures::id;

TEST_CASE("build_poset closes a chain") {
  const std::vector<ElementPair> pairs{{0, 1}, {1, 2}};
  const Poset p = build_poset(3, pairs);
  CHECK(p.lt(0, 2));
  CHECK(p.less().count() == 3);
  CHECK(p.name(2) == "2");
}

TEST_CASE("build_poset rejects a two-cycle") {
  const std::vector<ElementPair> pairs{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(build_poset(2, pairs), CycleDetected);
}

TEST_CASE("build_poset of the M3 covers has 7 strict pairs") {
  const Lattice m3 = fixtures::m3();
  StrictRelation covers(m3.size());
  for (auto [a, b] : m3.covers()) covers.insert(a, b);
  CHECK(oracles::closure_by_powers(covers) == m3.less());
  CHECK(m3.less().count() == 7);
}

TEST_CASE("as_lattice on M3") {
  const Lattice l = fixtures::m3();
  CHECK(l.join(id(l, "a"), id(l, "b")) == id(l, "1"));
  CHECK(l.meet(id(l, "a"), id(l, "b")) == id(l, "0"));
  CHECK(l.bottom() == id(l, "0"));
  CHECK(l.top() == id(l, "1"));
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      CHECK(l.join(a, b) == *oracles::brute_join(l.poset(), a, b));
      CHECK(l.meet(a, b) == *oracles::brute_meet(l.poset(), a, b));
    }
}

TEST_CASE("M3 without its top is not a lattice") {
  const std::vector<std::pair<std::string, std::string>> covers{
      {"0", "a"}, {"0", "b"}, {"0", "c"}};
  try {
    make_lattice({"0", "a", "b", "c"}, covers);
    FAIL("expected NotALattice");
  } catch (const NotALattice& e) {
    REQUIRE(e.witness);
    CHECK(*e.witness == ElementPair{1, 2});
  }
}

TEST_CASE("empty order is not a lattice") {
  CHECK_THROWS_AS(as_lattice(Poset({}, StrictRelation(0))), NotALattice);
}

TEST_CASE("chain meet and join are min and max") {
  const Lattice l = fixtures::chain(4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) {
      CHECK(l.meet(a, b) == std::min(a, b));
      CHECK(l.join(a, b) == std::max(a, b));
    }
}

TEST_CASE("covers_of") {
  CHECK(covers_of(fixtures::chain(3)) ==
        std::vector<ElementPair>{{0, 1}, {1, 2}});
  CHECK(covers_of(fixtures::m3()).size() == 6);
  const Lattice b3 = fixtures::b3();
  CHECK(covers_of(b3).size() == 12);
  CHECK(covers_of(b3) == oracles::reduction(b3.less()));
}

TEST_CASE("incomparability graphs") {
  CHECK(incomparability(fixtures::chain(5)).count() == 0);
  const Lattice m3 = fixtures::m3();
  const StrictRelation g = incomparability(m3);
  CHECK(g.is_symmetric());
  CHECK(g.is_irreflexive());
  CHECK(g.count() == 6);  // triangle, both directions
  CHECK(g(id(m3, "a"), id(m3, "c")));
  const Lattice n5 = fixtures::n5();
  const StrictRelation h = incomparability(n5);
  CHECK(h.count() == 4);
  CHECK(h(id(n5, "a"), id(n5, "b")));
  CHECK(h(id(n5, "a"), id(n5, "c")));
}

TEST_CASE("lattice invariants on B3 and N5") {
  for (const Lattice& l : {fixtures::b3(), fixtures::n5(), fixtures::m3()}) {
    StrictRelation cov(l.size());
    for (auto [a, b] : l.covers()) cov.insert(a, b);
    CHECK(cov.transitive_closure() == l.less());
    const std::size_t n = l.size();
    CHECK(incomparability(l).count() / 2 ==
          n * (n - 1) / 2 - l.less().count());
    for (Element p = 0; p < n; ++p)
      for (Element q = 0; q < n; ++q) {
        CHECK(l.join(p, l.meet(p, q)) == p);
        CHECK(l.meet(p, l.join(p, q)) == p);
        CHECK(l.join(p, q) == l.join(q, p));
        for (Element r = 0; r < n; ++r)
          CHECK(l.join(p, l.join(q, r)) == l.join(l.join(p, q), r));
      }
  }
}

TEST_CASE("dual swaps order, meet and join") {
  const Lattice l = fixtures::n5();
  const Lattice d = dual(l);
  CHECK(d.less() == l.less().dual());
  CHECK(d.bottom() == l.top());
  CHECK(d.join(id(l, "a"), id(l, "b")) == l.meet(id(l, "a"), id(l, "b")));
}

TEST_CASE("StrictRelation helpers") {
  StrictRelation r(3);
  r.insert(0, 1);
  r.insert(1, 2);
  CHECK_FALSE(r.is_transitive());
  const StrictRelation c = r.transitive_closure();
  CHECK(c.is_strict_order());
  CHECK(c.is_total());
  CHECK(c.transitive_reduction() == r);
  CHECK(c.pairs() == std::vector<ElementPair>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(sort_by_total_order(c).sequence == std::vector<Element>{0, 1, 2});
  CHECK_THROWS_AS(sort_by_total_order(r), Error);
}

TEST_CASE("LinearOrder rank and relation") {
  LinearOrder t{{2, 0, 1}};
  CHECK(t.rank() == std::vector<std::size_t>{1, 2, 0});
  CHECK(t.relation()(2, 1));
  CHECK_FALSE(t.relation()(1, 2));
}

TEST_CASE("induced_poset relabels in the given order") {
  const Lattice l = fixtures::n5();
  const std::vector<Element> keep{id(l, "1"), id(l, "0"), id(l, "c")};
  const Poset p = induced_poset(l.poset(), keep);
  CHECK(p.names() == std::vector<std::string>{"1", "0", "c"});
  CHECK(p.lt(1, 0));
  CHECK(p.lt(2, 0));
  CHECK(p.lt(1, 2));
}
