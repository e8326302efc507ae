#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planarlat/canonical.hpp"

namespace fixtures {

using planarlat::Diagram;
using planarlat::Element;
using planarlat::Lattice;
using planarlat::PlanarDiagram;
using planarlat::Point;
using planarlat::StrictRelation;

Lattice lattice(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& covers);

// Element id by name; throws if absent.
Element id(const Lattice& l, const std::string& name);

// Pairs by name -> relation on l.
StrictRelation relation(
    const Lattice& l,
    const std::vector<std::pair<std::string, std::string>>& pairs);

Point pt(long x, long y);
Point pt(long xn, long xd, long yn, long yd);

// Positions given by name.
Diagram place(const Lattice& l,
              const std::vector<std::pair<std::string, Point>>& where);

Lattice chain(std::size_t n);  // 0 < 1 < ... < n-1
Lattice m3();                  // 0 < a, b, c < 1
Lattice n5();                  // 0 < a < 1, 0 < b < c < 1
Lattice b3();                  // 0, a, b, c, ab, ac, bc, 1
Lattice b3_minus_coatom();     // b3 without bc

Diagram m3_canon();
Diagram n5_canon();
Diagram chain_diagram(std::size_t n);  // (0, 2i - (n-1))

// S2 x S3 drawn in slanted coordinates: x0 < x1 < x2 below y0 < y1 < y2
// with xi < yi.
Diagram grid_2x3();

// Three chains from 0 to 1: l1 < l2, u < t < v, r1 < r2 < r3. Oriented
// left chain, middle chain, right chain.
planarlat::OrientedLattice three_chains();

// N5 drawn planar but with a left of c in the left-right order and to its
// right in x.
Diagram n5_badly_drawn();

}  // namespace fixtures
