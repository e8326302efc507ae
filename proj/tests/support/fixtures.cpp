#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

using namespace planarlat;

Lattice lattice(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& covers) {
  return make_lattice(std::move(names), covers);
}

Element id(const Lattice& l, const std::string& name) {
  auto e = l.find(name);
  if (!e) throw std::invalid_argument("no element " + name);
  return *e;
}

StrictRelation relation(
    const Lattice& l,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  StrictRelation r(l.size());
  for (const auto& [a, b] : pairs) r.insert(id(l, a), id(l, b));
  return r;
}

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

Point pt(long xn, long xd, long yn, long yd) {
  return Point{Rational(xn, xd), Rational(yn, yd)};
}

Diagram place(const Lattice& l,
              const std::vector<std::pair<std::string, Point>>& where) {
  std::vector<Point> pos(l.size());
  for (const auto& [name, p] : where) pos[id(l, name)] = p;
  return Diagram(l, std::move(pos));
}

Lattice chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return lattice(names, covers);
}

Lattice m3() {
  return lattice({"0", "a", "b", "c", "1"}, {{"0", "a"},
                                             {"0", "b"},
                                             {"0", "c"},
                                             {"a", "1"},
                                             {"b", "1"},
                                             {"c", "1"}});
}

Lattice n5() {
  return lattice({"0", "a", "b", "c", "1"},
                 {{"0", "a"}, {"a", "1"}, {"0", "b"}, {"b", "c"}, {"c", "1"}});
}

Lattice b3() {
  return lattice({"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                 {{"0", "a"},
                  {"0", "b"},
                  {"0", "c"},
                  {"a", "ab"},
                  {"b", "ab"},
                  {"a", "ac"},
                  {"c", "ac"},
                  {"b", "bc"},
                  {"c", "bc"},
                  {"ab", "1"},
                  {"ac", "1"},
                  {"bc", "1"}});
}

Lattice b3_minus_coatom() {
  return lattice({"0", "a", "b", "c", "ab", "ac", "1"},
                 {{"0", "a"},
                  {"0", "b"},
                  {"0", "c"},
                  {"a", "ab"},
                  {"b", "ab"},
                  {"a", "ac"},
                  {"c", "ac"},
                  {"ab", "1"},
                  {"ac", "1"}});
}

Diagram m3_canon() {
  return place(m3(), {{"0", pt(0, -4)},
                      {"a", pt(-2, 0)},
                      {"b", pt(0, 0)},
                      {"c", pt(2, 0)},
                      {"1", pt(0, 4)}});
}

Diagram n5_canon() {
  return place(n5(), {{"0", pt(0, -4)},
                      {"a", pt(-2, 0)},
                      {"b", pt(1, -1)},
                      {"c", pt(1, 1)},
                      {"1", pt(0, 4)}});
}

Diagram chain_diagram(std::size_t n) {
  const Lattice l = chain(n);
  std::vector<Point> pos;
  for (std::size_t i = 0; i < n; ++i)
    pos.push_back(pt(0, 2 * static_cast<long>(i) - static_cast<long>(n) + 1));
  return Diagram(l, pos);
}

Diagram grid_2x3() {
  const Lattice l = lattice({"x0", "x1", "x2", "y0", "y1", "y2"},
                            {{"x0", "x1"},
                             {"x1", "x2"},
                             {"y0", "y1"},
                             {"y1", "y2"},
                             {"x0", "y0"},
                             {"x1", "y1"},
                             {"x2", "y2"}});
  // (i, j) in S2 x S3 drawn at beta(2i + ..): x-chain goes up-left, the
  // y-chain is shifted right.
  return place(l, {{"x0", pt(0, 0)},
                   {"x1", pt(-1, 1)},
                   {"x2", pt(-2, 2)},
                   {"y0", pt(1, 1)},
                   {"y1", pt(0, 2)},
                   {"y2", pt(-1, 3)}});
}

OrientedLattice three_chains() {
  const Lattice l = lattice({"0", "l1", "l2", "u", "t", "v", "r1", "r2", "r3",
                             "1"},
                            {{"0", "l1"},
                             {"l1", "l2"},
                             {"l2", "1"},
                             {"0", "u"},
                             {"u", "t"},
                             {"t", "v"},
                             {"v", "1"},
                             {"0", "r1"},
                             {"r1", "r2"},
                             {"r2", "r3"},
                             {"r3", "1"}});
  const std::vector<std::string> left{"l1", "l2"}, mid{"u", "t", "v"},
      right{"r1", "r2", "r3"};
  StrictRelation lambda(l.size());
  for (const auto& a : left)
    for (const auto& b : mid) lambda.insert(id(l, a), id(l, b));
  for (const auto& a : left)
    for (const auto& b : right) lambda.insert(id(l, a), id(l, b));
  for (const auto& a : mid)
    for (const auto& b : right) lambda.insert(id(l, a), id(l, b));
  return OrientedLattice(l, lambda);
}

Diagram n5_badly_drawn() {
  return place(n5(), {{"0", pt(0, 0)},
                      {"a", pt(-1, 1)},
                      {"b", pt(3, 2)},
                      {"c", pt(-5, 1, 7, 2)},
                      {"1", pt(-10, 4)}});
}

}  // namespace fixtures
