#pragma once

#include <vector>

#include "planarlat/leftright.hpp"

namespace planarlat {

/// Elements of [p meet q, p join q] lying between rm(p) and lm(q).
struct LocalRegion {
  Element p = 0;
  Element q = 0;
  Element bottom = 0;  // p meet q
  Element top = 0;     // p join q
  std::vector<Element> members;
  std::vector<Element> left_boundary;   // members on rm(p), ascending
  std::vector<Element> right_boundary;  // members on lm(q), ascending
  std::vector<Element> interior;        // strictly between the two paths
};

enum class LadderKind { cell, ladder, e_ladder, not_e_ladder };
enum class LadderDirection { leftward, rightward, both, none };

const char* to_string(LadderKind k);
const char* to_string(LadderDirection d);

/// A cover joining the two boundaries; `left` lies on the left boundary.
struct Rung {
  Element left;
  Element right;
  friend bool operator==(const Rung&, const Rung&) = default;
};

struct ELadderClass {
  LadderKind kind = LadderKind::not_e_ladder;
  std::vector<Rung> rungs;  // sequenced bottom to top
  LadderDirection direction = LadderDirection::none;

  bool is_e_ladder() const { return kind != LadderKind::not_e_ladder; }
};

// Throws NotIncomparable, or WrongSide when q is to the left of p.
LocalRegion local_region(const PlanarDiagram& d, Element p, Element q);

// Structural classification; never consults the left-right order.
ELadderClass classify_e_ladder(const PlanarDiagram& d, const LocalRegion& r);

/// The three characterizations of an immediate left-right neighbour,
/// each computed on its own.
struct LrCoverEvidence {
  bool covering = false;        // p lr q with nothing lr-between
  bool empty_interior = false;  // p left of q and Int(p, q) empty
  bool e_ladder = false;        // LR(p, q) is an e-ladder from p to q
};

// `lr` must be lr_order(d).
LrCoverEvidence lr_cover_conditions(const PlanarDiagram& d,
                                    const StrictRelation& lr, Element p,
                                    Element q);

// p is immediately to the left of q. False for comparable pairs.
bool lr_cover(const PlanarDiagram& d, Element p, Element q);
bool lr_cover(const PlanarDiagram& d, const StrictRelation& lr, Element p,
              Element q);

// Pairs (p, q) joined by an e-ladder from p to q.
StrictRelation e_ladder_relation(const PlanarDiagram& d);

// Transitive closure of e_ladder_relation.
StrictRelation parallel_order(const PlanarDiagram& d);

// p.x < q.x for every pair joined by an e-ladder.
bool well_drawn_via_ladders(const PlanarDiagram& d);

}  // namespace planarlat
