#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planarlat/canonical.hpp"
#include "planarlat/traversal.hpp"

namespace planarlat {

/// Contents of a lattice file: the lattice plus optional positions and an
/// optional complementary order.
struct LatticeDocument {
  Lattice lattice;
  std::optional<std::vector<Point>> positions;
  std::optional<StrictRelation> lambda;

  // Throw Error when the optional part is missing.
  Diagram diagram() const;
  OrientedLattice oriented() const;

  friend bool operator==(const LatticeDocument&,
                         const LatticeDocument&) = default;
};

LatticeDocument document_of(const Lattice& l);
LatticeDocument document_of(const Diagram& d);
LatticeDocument document_of(const OrientedLattice& o);

// Keyword-line format:
//   elements: 0 a b 1
//   covers: 0<a<1 0<b<1
//   pos: a -1 0        (name x y, integers or p/q)
//   lambda: a<b
// '#' starts a comment. Without an elements line, names are taken in order
// of first appearance.
LatticeDocument parse_text(std::string_view text);
LatticeDocument parse_json(std::string_view text);
// JSON when the first non-blank character is '{'.
LatticeDocument parse(std::string_view text);

std::string serialize_text(const LatticeDocument& doc);
std::string serialize_json(const LatticeDocument& doc);

// By extension: .json is JSON, anything else is sniffed.
LatticeDocument load_file(const std::string& path);

// Integer or p/q with optional leading minus; no decimals.
std::optional<Rational> parse_rational(std::string_view s);

struct SvgOptions {
  double margin = 10;
  double scale = 40;
  double radius = 4;
  bool labels = true;
  std::vector<ElementPair> bold;  // covers drawn with a heavy stroke
};

// Deterministic SVG 1.1 picture; model y grows upward, SVG y downward.
std::string render_svg(const Diagram& d, const SvgOptions& options = {});

std::string render_dot(const SpanningTree& t, const Lattice& l);

}  // namespace planarlat
