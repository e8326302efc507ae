#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planarlat/generate.hpp"

using namespace planarlat;

TEST_CASE("generation is deterministic per seed") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    const OrientedLattice x = random_oriented_lattice(a, 14);
    const OrientedLattice y = random_oriented_lattice(b, 14);
    CHECK(x == y);
    CHECK(random_diagram(x, a).diagram() == random_diagram(y, b).diagram());
  }
}

TEST_CASE("tiny sizes give chains") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 2}) {
    const Lattice l = random_planar_lattice(rng, n);
    CHECK(l.size() == n);
    CHECK(incomparability(l).count() == 0);
  }
  CHECK_THROWS_AS(random_planar_lattice(rng, 0), Error);
}

TEST_CASE("random planar lattices are lattices of dimension at most two") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 80; ++i) {
    const Lattice l = random_planar_lattice(rng, 12);
    CHECK(l.size() <= 12);
    CHECK(oracles::brute_is_lattice(l.poset()));
    CHECK(oracles::two_realizer(l.less()).has_value());
  }
}

TEST_CASE("random diagrams realize their orientation") {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 60; ++i) {
    const OrientedLattice o = random_oriented_lattice(rng, 15);
    const PlanarDiagram d = random_diagram(o, rng);
    CHECK(oracles::planar_by_oracle(d.diagram()));
    CHECK(oracles::lr_by_definition(d.diagram()) == o.lambda());
  }
}

TEST_CASE("random congruences are closed") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Lattice l = random_planar_lattice(rng, 12);
    const auto j = random_join_congruence(l, rng);
    CHECK(j.kind == CongruenceKind::join);
    CHECK_NOTHROW(validate_congruence(l, j));
    const auto m = random_meet_congruence(l, rng);
    CHECK(m.kind == CongruenceKind::meet);
    CHECK_NOTHROW(validate_congruence(l, m));
    if (l.size() > 1) CHECK(j.blocks.size() < l.size());
  }
}
