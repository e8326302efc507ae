#pragma once

#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "planarlat/geometry.hpp"

namespace planarlat {

/// Outcome of a planarity decision.
///
/// A planar verdict carries a complementary order and a diagram built from
/// it whose own left-right order equals that complementary order. A
/// non-planar verdict carries a chain of forced orientations of
/// incomparable pairs that starts at some a -> b and ends at b -> a.
struct PlanarityCertificate {
  bool planar = false;
  std::optional<StrictRelation> lambda;
  std::optional<Diagram> diagram;
  std::vector<ElementPair> failure_core;
};

// Exactly one of p < q, q < p, p lambda q, q lambda p holds for distinct p, q,
// and lambda is a strict order.
bool is_complementary(const Lattice& l, const StrictRelation& lambda);

// Lexicographically least complementary order: incomparable pairs (a, b)
// with a < b are decided in lexicographic order, preferring a lambda b.
std::optional<StrictRelation> find_complementary(const Lattice& l);
// Same search with the preferred orientation of every branch drawn from rng.
std::optional<StrictRelation> find_complementary(const Lattice& l,
                                                 std::mt19937_64& rng);

// A contradictory orientation-forcing chain of the incomparability graph, or
// an empty vector when every forcing class is consistent.
std::vector<ElementPair> forcing_conflict(const Lattice& l);

// (< union lambda, < union dual(lambda)). Throws NotComplementary.
std::pair<LinearOrder, LinearOrder> total_orders(const Lattice& l,
                                                 const StrictRelation& lambda);

/// Position of every element in each of two chains.
struct ChainEmbedding {
  std::vector<std::pair<std::size_t, std::size_t>> ranks;
};

// Throws NotAnIntersection unless the two orders intersect to the lattice
// order.
ChainEmbedding embed_two_chains(const Lattice& l, const LinearOrder& t1,
                                const LinearOrder& t2);

// Places p at beta(2 * rank1, 2 * rank2) = (rank1 - rank2, rank1 + rank2).
Diagram build_planar_diagram(const Lattice& l, const ChainEmbedding& emb);

// Runs the pipeline for a given complementary order.
PlanarityCertificate certify_planar(const Lattice& l,
                                    const StrictRelation& lambda);

PlanarityCertificate decide_planarity(const Lattice& l);

// Pulls lambda back along an order embedding of k into l.
// Throws NotAnEmbedding or NotComplementary.
StrictRelation restrict_complementary(const Lattice& l,
                                      const StrictRelation& lambda,
                                      const Lattice& k,
                                      std::span<const Element> embedding);

}  // namespace planarlat
