// Command-line front end. Exit codes: 0 success or planar, 1 not planar or a
// property violated, 2 bad input or usage, 3 internal defect.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planarlat/canonical.hpp"
#include "planarlat/format.hpp"
#include "planarlat/generate.hpp"
#include "planarlat/ladders.hpp"
#include "planarlat/quotient.hpp"
#include "planarlat/traversal.hpp"
#include "planarlat/planarity.hpp"

namespace pl = planarlat;
using ojson = nlohmann::ordered_json;

namespace {

bool g_json = false;

std::string pair_text(const pl::Lattice& l, pl::ElementPair p,
                      const char* sep = "<") {
  return l.name(p.first) + sep + l.name(p.second);
}

ojson pair_json(const pl::Lattice& l, pl::ElementPair p) {
  return ojson::array({l.name(p.first), l.name(p.second)});
}

// Integers stay numbers; fractions become "p/q" strings.
ojson rational_json(const pl::Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return pl::to_string(r);
}

ojson names_json(const pl::Lattice& l, const std::vector<pl::Element>& v) {
  ojson a = ojson::array();
  for (auto e : v) a.push_back(l.name(e));
  return a;
}

std::string names_text(const pl::Lattice& l, const std::vector<pl::Element>& v) {
  std::string s;
  for (auto e : v) s += (s.empty() ? "" : " ") + l.name(e);
  return s.empty() ? "-" : s;
}

void emit(const ojson& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pl::Error("cannot write " + path);
  out << body;
}

// The lambda in the file, else the least complementary order.
std::optional<pl::OrientedLattice> orientation(const pl::LatticeDocument& doc) {
  if (doc.lambda) return doc.oriented();
  auto lambda = pl::find_complementary(doc.lattice);
  if (!lambda) return std::nullopt;
  return pl::OrientedLattice(doc.lattice, *lambda);
}

// The file's own positions, else the canonical layout.
std::optional<pl::Diagram> diagram_of(const pl::LatticeDocument& doc) {
  if (doc.positions) return doc.diagram();
  auto o = orientation(doc);
  if (!o) return std::nullopt;
  return pl::canon(*o);
}

int not_planar_input() {
  emit(ojson{{"planar", false}},
       "not planar: no complementary order, so no planar layout\n");
  return 1;
}

int cmd_check(const std::string& path) {
  const auto doc = pl::load_file(path);
  const auto& l = doc.lattice;
  ojson j{{"lattice", true},
          {"elements", l.size()},
          {"covers", l.covers().size()},
          {"bottom", l.name(l.bottom())},
          {"top", l.name(l.top())}};
  std::ostringstream t;
  t << "lattice: " << l.size() << " elements, " << l.covers().size()
    << " covers, bottom " << l.name(l.bottom()) << ", top " << l.name(l.top())
    << '\n';
  emit(j, t.str());
  return 0;
}

int cmd_planar(const std::string& path) {
  const auto doc = pl::load_file(path);
  const auto& l = doc.lattice;
  const auto cert = pl::decide_planarity(l);
  ojson j{{"planar", cert.planar}};
  std::ostringstream t;
  if (cert.planar) {
    ojson lam = ojson::array();
    t << "planar\nlambda:";
    for (auto p : cert.lambda->transitive_reduction().pairs()) {
      lam.push_back(pair_json(l, p));
      t << ' ' << pair_text(l, p);
    }
    j["lambda"] = lam;
    t << "\npos:";
    ojson pos = ojson::object();
    for (pl::Element e = 0; e < l.size(); ++e) {
      const auto& pt = cert.diagram->pos(e);
      pos[l.name(e)] = {rational_json(pt.x), rational_json(pt.y)};
      t << ' ' << l.name(e) << ' ' << pl::to_string(pt.x) << ' '
        << pl::to_string(pt.y);
    }
    j["pos"] = pos;
    t << '\n';
  } else {
    ojson core = ojson::array();
    t << "not planar\nfailure core (each orientation forces the next):";
    for (auto p : cert.failure_core) {
      core.push_back(pair_json(l, p));
      t << ' ' << pair_text(l, p, "->");
    }
    j["failure_core"] = core;
    t << '\n';
  }
  emit(j, t.str());
  return cert.planar ? 0 : 1;
}

int cmd_layout(const std::string& path, const std::string& svg) {
  const auto doc = pl::load_file(path);
  const auto o = orientation(doc);
  if (!o) return not_planar_input();
  const pl::Diagram d = pl::canon(*o);
  pl::LatticeDocument out{d.lattice(), d.positions(), o->lambda()};
  if (g_json)
    std::cout << pl::serialize_json(out);
  else
    std::cout << pl::serialize_text(out);
  if (!svg.empty()) write_file(svg, pl::render_svg(d));
  return 0;
}

int cmd_analyze(const std::string& path) {
  const auto doc = pl::load_file(path);
  const auto dg = diagram_of(doc);
  if (!dg) return not_planar_input();
  const auto& l = dg->lattice();
  if (auto v = pl::validate_diagram(*dg)) {
    emit(ojson{{"diagram", false}, {"violation", pl::describe(*dg, *v)}},
         "invalid diagram: " + pl::describe(*dg, *v) + "\n");
    return 1;
  }
  if (auto r = pl::check_planarity(*dg); !r.planar) {
    const auto& c = *r.witness;
    std::string msg = "covers " + pair_text(l, c.first) + " and " +
                      pair_text(l, c.second) + " meet at " +
                      pl::to_string(c.at);
    emit(ojson{{"diagram", true}, {"planar", false}, {"crossing", msg}},
         "not a planar diagram: " + msg + "\n");
    return 1;
  }
  const pl::PlanarDiagram pd(*dg);
  const auto lr = pl::lr_order(pd);
  const bool well = pl::is_well_drawn(pd);
  const bool canonical = pl::is_canonical(pd);
  const auto sub = pl::has_sub_property(pd);

  ojson j{{"diagram", true}, {"planar", true}};
  std::ostringstream t;
  t << "planar diagram\nleft-right:";
  ojson lrj = ojson::array();
  for (auto p : lr.pairs()) {
    lrj.push_back(pair_json(l, p));
    t << ' ' << pair_text(l, p);
  }
  t << '\n';
  j["left_right"] = lrj;
  ojson parts = ojson::object();
  for (pl::Element e = 0; e < l.size(); ++e) {
    const auto part = pl::partition_at(pd, e);
    parts[l.name(e)] = {{"left", names_json(l, part.left)},
                        {"mid", names_json(l, part.mid)},
                        {"right", names_json(l, part.right)}};
    t << "  " << l.name(e) << ": left " << names_text(l, part.left)
      << " | mid " << names_text(l, part.mid) << " | right "
      << names_text(l, part.right) << '\n';
  }
  j["partitions"] = parts;
  j["well_drawn"] = well;
  j["canonical"] = canonical;
  j["sub"] = pl::to_string(sub.verdict);
  t << "well drawn: " << (well ? "yes" : "no") << '\n'
    << "canonical: " << (canonical ? "yes" : "no") << '\n'
    << "(Sub): " << pl::to_string(sub.verdict);
  if (sub.verdict == pl::SubVerdict::fails) {
    j["sub_failure"] = names_json(l, sub.failing);
    t << " (sublattice " << names_text(l, sub.failing) << ")";
  }
  t << '\n';
  emit(j, t.str());
  return (well && sub.verdict != pl::SubVerdict::fails) ? 0 : 1;
}

int cmd_ladders(const std::string& path) {
  const auto doc = pl::load_file(path);
  const auto dg = diagram_of(doc);
  if (!dg) return not_planar_input();
  const pl::PlanarDiagram pd(*dg);
  const auto& l = pd.lattice();
  const auto lr = pl::lr_order(pd);
  std::map<std::string, int> census;
  ojson covers = ojson::array();
  std::ostringstream t;
  t << "immediate left-right neighbours:\n";
  for (auto [p, q] : lr.pairs()) {
    const auto cls = pl::classify_e_ladder(pd, pl::local_region(pd, p, q));
    ++census[pl::to_string(cls.kind)];
    if (!pl::lr_cover(pd, lr, p, q)) continue;
    ojson rungs = ojson::array();
    std::string rt;
    for (const auto& r : cls.rungs) {
      rungs.push_back({l.name(r.left), l.name(r.right)});
      rt += " " + l.name(r.left) + "-" + l.name(r.right);
    }
    covers.push_back({{"left", l.name(p)},
                      {"right", l.name(q)},
                      {"kind", pl::to_string(cls.kind)},
                      {"direction", pl::to_string(cls.direction)},
                      {"rungs", rungs}});
    t << "  " << l.name(p) << " -> " << l.name(q) << ": "
      << pl::to_string(cls.kind) << ", " << pl::to_string(cls.direction)
      << (rt.empty() ? "" : ", rungs" + rt) << '\n';
  }
  t << "census over left-right pairs:";
  ojson cj = ojson::object();
  for (const auto& [k, v] : census) {
    cj[k] = v;
    t << ' ' << k << '=' << v;
  }
  t << '\n';
  const bool same = pl::parallel_order(pd) == lr;
  t << "ladder closure equals left-right order: " << (same ? "yes" : "no")
    << '\n';
  emit(ojson{{"covers", covers}, {"census", cj}, {"closure_matches", same}},
       t.str());
  return same ? 0 : 1;
}

int cmd_traverse(const std::string& path, bool up_left,
                 const std::string& dot) {
  const auto doc = pl::load_file(path);
  const auto dg = diagram_of(doc);
  if (!dg) return not_planar_input();
  const pl::PlanarDiagram pd(*dg);
  const auto& l = pd.lattice();
  const auto tree = up_left ? pl::build_tul(pd) : pl::build_tur(pd);
  const auto seq = pl::depth_first(tree);
  emit(ojson{{"tree", up_left ? "up-left" : "up-right"},
             {"order", names_json(l, seq.sequence)}},
       std::string(up_left ? "up-left" : "up-right") + ": " +
           names_text(l, seq.sequence) + "\n");
  if (!dot.empty()) write_file(dot, pl::render_dot(tree, l));
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& blocks,
                 const std::string& kind_name) {
  const auto doc = pl::load_file(path);
  const auto& l = doc.lattice;
  pl::CongruenceKind kind = pl::CongruenceKind::join;
  if (kind_name == "meet") kind = pl::CongruenceKind::meet;
  if (kind_name == "lattice") kind = pl::CongruenceKind::lattice;
  const auto c = pl::parse_blocks(l, blocks, kind);
  if (!pl::find_complementary(l)) return not_planar_input();
  const auto q = pl::quotient_lattice(l, c);
  const auto cert = pl::quotient_planarity(l, c);
  pl::LatticeDocument out{q.lattice, cert.diagram->positions(), cert.lambda};
  if (g_json) {
    ojson j{{"planar", cert.planar},
            {"quotient", ojson::parse(pl::serialize_json(out))}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (cert.planar ? "quotient is planar\n" : "quotient is not planar\n")
              << pl::serialize_text(out);
  }
  return cert.planar ? 0 : 1;
}

int cmd_generate(std::uint64_t seed, std::size_t size) {
  std::mt19937_64 rng(seed);
  const auto o = pl::random_oriented_lattice(rng, size);
  const pl::Diagram d = pl::canon(o);
  pl::LatticeDocument out{d.lattice(), d.positions(), o.lambda()};
  std::cout << (g_json ? pl::serialize_json(out) : pl::serialize_text(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar lattice toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, svg, dot, blocks, kind = "join";
  bool up_right = false, up_left = false;
  std::uint64_t seed = 1;
  std::size_t size = 12;

  auto* check = app.add_subcommand("check", "Validate a lattice file");
  check->add_option("file", file)->required();
  auto* planar = app.add_subcommand("planar", "Decide planarity");
  planar->add_option("file", file)->required();
  auto* layout = app.add_subcommand("layout", "Canonical coordinates");
  layout->add_option("file", file)->required();
  layout->add_option("--svg", svg, "Write an SVG picture");
  auto* analyze = app.add_subcommand("analyze", "Inspect a diagram");
  analyze->add_option("file", file)->required();
  auto* ladders = app.add_subcommand("ladders", "Local regions and e-ladders");
  ladders->add_option("file", file)->required();
  auto* traverse = app.add_subcommand("traverse", "Spanning tree traversal");
  traverse->add_option("file", file)->required();
  auto* ur = traverse->add_flag("--up-right", up_right);
  auto* ul = traverse->add_flag("--up-left", up_left);
  ur->excludes(ul);
  traverse->add_option("--dot", dot, "Write the tree as DOT");
  auto* quotient = app.add_subcommand("quotient", "Quotient by a congruence");
  quotient->add_option("file", file)->required();
  quotient->add_option("--blocks", blocks, "Blocks such as \"b,c;d,e\"")
      ->required();
  quotient->add_option("--kind", kind)
      ->check(CLI::IsMember({"join", "meet", "lattice"}));
  auto* generate = app.add_subcommand("generate", "Random oriented lattice");
  generate->add_option("--seed", seed);
  generate->add_option("--size", size)->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  g_json = format == "json";

  try {
    if (*check) return cmd_check(file);
    if (*planar) return cmd_planar(file);
    if (*layout) return cmd_layout(file, svg);
    if (*analyze) return cmd_analyze(file);
    if (*ladders) return cmd_ladders(file);
    if (*traverse) return cmd_traverse(file, up_left, dot);
    if (*quotient) return cmd_quotient(file, blocks, kind);
    if (*generate) return cmd_generate(seed, size);
  } catch (const pl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pl::InternalDefect& e) {
    std::cerr << "internal defect: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
