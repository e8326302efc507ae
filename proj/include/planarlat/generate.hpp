#pragma once

#include <random>

#include "planarlat/canonical.hpp"
#include "planarlat/quotient.hpp"

namespace planarlat {

// Completion by cuts of a random two-dimensional order on k points, k drawn
// from [1, max_size - 2]; redrawn until it has at most max_size elements.
// Elements are named e0, e1, ... in order of (cut size, cut bitmask).
Lattice random_planar_lattice(std::mt19937_64& rng, std::size_t max_size);

// A random planar lattice with a randomly chosen complementary order.
OrientedLattice random_oriented_lattice(std::mt19937_64& rng,
                                        std::size_t max_size);

// A planar diagram of o whose left-right order is o.lambda(), placed with
// random gaps between consecutive positions of the two total orders.
PlanarDiagram random_diagram(const OrientedLattice& o, std::mt19937_64& rng);

// Merges a random comparable pair (or two) and closes under the chosen
// operation until stable.
CongruenceBlocks random_join_congruence(const Lattice& l,
                                        std::mt19937_64& rng);
CongruenceBlocks random_meet_congruence(const Lattice& l,
                                        std::mt19937_64& rng);

}  // namespace planarlat
