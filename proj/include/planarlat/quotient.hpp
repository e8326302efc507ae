#pragma once

#include <string>
#include <vector>

#include "planarlat/planarity.hpp"

namespace planarlat {

enum class CongruenceKind { join, meet, lattice };

const char* to_string(CongruenceKind k);

/// A partition of the elements declared compatible with join, meet or both.
struct CongruenceBlocks {
  std::vector<std::vector<Element>> blocks;
  CongruenceKind kind = CongruenceKind::join;
};

// Throws InvalidBlocks unless the blocks partition the elements, and
// NotCompatible naming the lexicographically first (x, y, z) with x, y in
// one block, x < y as ids, and x op z, y op z in different blocks.
void validate_congruence(const Lattice& l, const CongruenceBlocks& c);

// Blocks with members sorted and blocks ordered by their least member.
CongruenceBlocks normalized(CongruenceBlocks c);

/// Quotient lattice and the block representatives it is ordered by.
struct Quotient {
  Lattice lattice;                    // element i is block i
  std::vector<Element> representative;  // top (bottom for meet) of block i
  std::vector<std::size_t> block_of;    // block index of each element of l
};

// Validates c, then orders the normalized blocks by their representatives.
// Throws BlockHasNoTop when a block lacks its representative.
Quotient quotient_lattice(const Lattice& l, const CongruenceBlocks& c);

// Meet quotient computed as dual(join quotient of dual(l)).
Quotient meet_quotient_via_dual(const Lattice& l, const CongruenceBlocks& c);

// Certificate for the quotient, with a complementary order pulled back from
// one of l through the representatives. Throws NotPlanar when l is not
// planar.
PlanarityCertificate quotient_planarity(const Lattice& l,
                                        const CongruenceBlocks& c);

// "b,c;d,e" with element names; unlisted elements become singletons.
CongruenceBlocks parse_blocks(const Lattice& l, const std::string& spec,
                              CongruenceKind kind);

}  // namespace planarlat
