#include "planarlat/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace planarlat {

Diagram LatticeDocument::diagram() const {
  if (!positions) throw Error("document has no positions");
  return Diagram(lattice, *positions);
}

OrientedLattice LatticeDocument::oriented() const {
  if (!lambda) throw Error("document has no lambda");
  return OrientedLattice(lattice, *lambda);
}

LatticeDocument document_of(const Lattice& l) { return {l, {}, {}}; }

LatticeDocument document_of(const Diagram& d) {
  return {d.lattice(), d.positions(), {}};
}

LatticeDocument document_of(const OrientedLattice& o) {
  return {o.lattice(), {}, o.lambda()};
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto integer = [](std::string_view t) -> std::optional<std::int64_t> {
    if (t.empty()) return std::nullopt;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
    return v;
  };
  if (s.starts_with('+')) return std::nullopt;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto v = integer(s);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  auto num = integer(s.substr(0, slash));
  auto den_text = s.substr(slash + 1);
  if (den_text.starts_with('-')) return std::nullopt;
  auto den = integer(den_text);
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start)
      out.push_back({std::string(line.substr(start, i - start)),
                     offset + start + 1});
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '<' ||
           c == '#' || c == ':';
  });
}

struct PendingPair {
  std::string lower, upper;
  std::size_t line, column;
};

struct PendingPos {
  std::string name, x, y;
  std::size_t line, column;
};

// Shared by both readers once names and pairs are collected.
LatticeDocument assemble(
    std::vector<std::string> names, bool names_given,
    const std::vector<PendingPair>& covers,
    const std::optional<std::vector<PendingPair>>& lambda,
    const std::optional<std::vector<PendingPos>>& positions,
    std::size_t pos_line) {
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  auto lookup = [&](const std::string& name, std::size_t line,
                    std::size_t column) -> Element {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (names_given)
      throw ParseError(line, column, "unknown element '" + name + "'");
    names.push_back(name);
    index[name] = names.size() - 1;
    return names.size() - 1;
  };

  auto resolve = [&](const PendingPair& p) {
    const Element lower = lookup(p.lower, p.line, p.column);
    return ElementPair{lower, lookup(p.upper, p.line, p.column)};
  };
  std::vector<ElementPair> pairs;
  for (const auto& p : covers) pairs.push_back(resolve(p));
  std::vector<ElementPair> lambda_pairs;
  if (lambda)
    for (const auto& p : *lambda) lambda_pairs.push_back(resolve(p));
  std::vector<std::optional<Point>> pts;
  if (positions) {
    pts.resize(names.size());
    for (const auto& p : *positions) {
      const auto it = index.find(p.name);
      if (it == index.end())
        throw ParseError(p.line, p.column, "unknown element '" + p.name + "'");
      if (pts[it->second])
        throw ParseError(p.line, p.column, "duplicate position for " + p.name);
      auto x = parse_rational(p.x), y = parse_rational(p.y);
      if (!x || !y)
        throw ParseError(p.line, p.column,
                         "bad coordinate for " + p.name + ": " + p.x + " " +
                             p.y);
      pts[it->second] = Point{*x, *y};
    }
  }

  LatticeDocument doc;
  doc.lattice = as_lattice(build_poset(names.size(), pairs, names));
  if (positions) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i >= pts.size() || !pts[i])
        throw ParseError(pos_line, 1, "no position for " + names[i]);
      out.push_back(*pts[i]);
    }
    doc.positions = out;
    Diagram(doc.lattice, out);  // rejects shared points
  }
  if (lambda) {
    StrictRelation rel(names.size());
    for (auto [a, b] : lambda_pairs) rel.insert(a, b);
    doc.lambda = rel.transitive_closure();
    OrientedLattice(doc.lattice, *doc.lambda);  // rejects non-complements
  }
  return doc;
}

void read_chains(const std::vector<Token>& tokens, std::size_t line,
                 std::vector<PendingPair>& out) {
  for (const Token& t : tokens) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
      const auto lt = t.text.find('<', start);
      parts.push_back(t.text.substr(start, lt - start));
      if (lt == std::string::npos) break;
      start = lt + 1;
    }
    if (parts.size() < 2)
      throw ParseError(line, t.column, "expected a<b, got '" + t.text + "'");
    for (const auto& p : parts)
      if (!valid_name(p))
        throw ParseError(line, t.column, "bad element name in '" + t.text + "'");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      out.push_back({parts[i], parts[i + 1], line, t.column});
  }
}

}  // namespace

LatticeDocument parse_text(std::string_view text) {
  std::vector<std::string> names;
  bool names_given = false;
  std::vector<PendingPair> covers;
  std::optional<std::vector<PendingPair>> lambda;
  std::optional<std::vector<PendingPos>> positions;
  std::size_t pos_line = 0;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const auto colon = line.find(':');
    const auto lead = line.find_first_not_of(" \t");
    if (colon == std::string_view::npos)
      throw ParseError(line_no, lead + 1, "expected 'keyword:'");
    std::string keyword(line.substr(lead, colon - lead));
    while (!keyword.empty() && std::isspace(static_cast<unsigned char>(keyword.back())))
      keyword.pop_back();
    const auto tokens = split(line.substr(colon + 1), colon + 1);

    if (keyword == "elements") {
      names_given = true;
      for (const Token& t : tokens) {
        if (!valid_name(t.text))
          throw ParseError(line_no, t.column, "bad element name '" + t.text + "'");
        if (std::find(names.begin(), names.end(), t.text) != names.end())
          throw ParseError(line_no, t.column, "duplicate element '" + t.text + "'");
        names.push_back(t.text);
      }
    } else if (keyword == "covers") {
      read_chains(tokens, line_no, covers);
    } else if (keyword == "lambda") {
      if (!lambda) lambda.emplace();
      read_chains(tokens, line_no, *lambda);
    } else if (keyword == "pos") {
      if (!positions) {
        positions.emplace();
        pos_line = line_no;
      }
      if (tokens.size() % 3 != 0)
        throw ParseError(line_no, colon + 2, "pos expects name x y triples");
      for (std::size_t i = 0; i < tokens.size(); i += 3)
        positions->push_back({tokens[i].text, tokens[i + 1].text,
                              tokens[i + 2].text, line_no, tokens[i].column});
    } else {
      throw ParseError(line_no, lead + 1, "unknown keyword '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (!names_given && covers.empty())
    throw ParseError(line_no ? line_no : 1, 1, "no elements");
  return assemble(std::move(names), names_given, covers, lambda, positions,
                  pos_line);
}

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string coordinate_text(const nlohmann::json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_string()) return j.get<std::string>();
  return "?";
}

}  // namespace

LatticeDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    throw ParseError(line, col, "invalid JSON");
  }
  // Structural errors inside valid JSON carry no source position.
  auto fail = [](const std::string& msg) -> ParseError {
    return ParseError(0, 0, msg);
  };
  if (!j.is_object()) throw fail("expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "elements" && it.key() != "covers" && it.key() != "pos" &&
        it.key() != "lambda")
      throw fail("unknown field '" + it.key() + "'");

  auto pairs_of = [&](const nlohmann::json& arr, const char* field) {
    std::vector<PendingPair> out;
    if (!arr.is_array()) throw fail(std::string(field) + " must be an array");
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
          !p[1].is_string())
        throw fail(std::string(field) + " entries must be [lower, upper]");
      out.push_back({p[0].get<std::string>(), p[1].get<std::string>(), 0, 0});
    }
    return out;
  };

  std::vector<std::string> names;
  const bool names_given = j.contains("elements");
  if (names_given) {
    if (!j["elements"].is_array()) throw fail("elements must be an array");
    for (const auto& e : j["elements"]) {
      if (!e.is_string() || !valid_name(e.get<std::string>()))
        throw fail("bad element name");
      if (std::find(names.begin(), names.end(), e.get<std::string>()) !=
          names.end())
        throw fail("duplicate element '" + e.get<std::string>() + "'");
      names.push_back(e.get<std::string>());
    }
  }
  std::vector<PendingPair> covers;
  if (j.contains("covers")) covers = pairs_of(j["covers"], "covers");
  std::optional<std::vector<PendingPair>> lambda;
  if (j.contains("lambda")) lambda = pairs_of(j["lambda"], "lambda");
  std::optional<std::vector<PendingPos>> positions;
  if (j.contains("pos")) {
    const auto& pos = j["pos"];
    if (!pos.is_object()) throw fail("pos must be an object");
    positions.emplace();
    for (auto it = pos.begin(); it != pos.end(); ++it) {
      if (!it->is_array() || it->size() != 2)
        throw fail("pos entries must be [x, y]");
      positions->push_back({it.key(), coordinate_text((*it)[0]),
                            coordinate_text((*it)[1]), 0, 0});
    }
  }
  if (!names_given && covers.empty()) throw fail("no elements");
  return assemble(std::move(names), names_given, covers, lambda, positions, 0);
}

LatticeDocument parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_json(text);
  return parse_text(text);
}

namespace {

void check_names(const Lattice& l) {
  for (const auto& n : l.names())
    if (!valid_name(n)) throw Error("element name '" + n + "' cannot be written");
}

}  // namespace

std::string serialize_text(const LatticeDocument& doc) {
  const Lattice& l = doc.lattice;
  check_names(l);
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : l.names()) out << ' ' << n;
  out << '\n';
  if (!l.covers().empty()) {
    out << "covers:";
    for (auto [a, b] : l.covers()) out << ' ' << l.name(a) << '<' << l.name(b);
    out << '\n';
  }
  if (doc.positions)
    for (Element e = 0; e < l.size(); ++e)
      out << "pos: " << l.name(e) << ' ' << to_string((*doc.positions)[e].x)
          << ' ' << to_string((*doc.positions)[e].y) << '\n';
  if (doc.lambda) {
    out << "lambda:";
    for (auto [a, b] : doc.lambda->transitive_reduction().pairs())
      out << ' ' << l.name(a) << '<' << l.name(b);
    out << '\n';
  }
  return out.str();
}

std::string serialize_json(const LatticeDocument& doc) {
  const Lattice& l = doc.lattice;
  check_names(l);
  auto coordinate = [](const Rational& r) -> nlohmann::json {
    if (r.denominator() == 1) return r.numerator();
    return to_string(r);
  };
  nlohmann::ordered_json j;
  j["elements"] = l.names();
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : l.covers()) j["covers"].push_back({l.name(a), l.name(b)});
  if (doc.positions) {
    nlohmann::ordered_json pos = nlohmann::ordered_json::object();
    for (Element e = 0; e < l.size(); ++e)
      pos[l.name(e)] = {coordinate((*doc.positions)[e].x),
                        coordinate((*doc.positions)[e].y)};
    j["pos"] = pos;
  }
  if (doc.lambda) {
    j["lambda"] = nlohmann::json::array();
    for (auto [a, b] : doc.lambda->transitive_reduction().pairs())
      j["lambda"].push_back({l.name(a), l.name(b)});
  }
  return j.dump(2) + "\n";
}

LatticeDocument load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.ends_with(".json")) return parse_json(buf.str());
  return parse(buf.str());
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  std::string t = s.str();
  while (t.back() == '0') t.pop_back();
  if (t.back() == '.') t.pop_back();
  return t == "-0" ? "0" : t;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Diagram& d, const SvgOptions& o) {
  const auto& pts = d.positions();
  Rational minx = pts.front().x, maxx = minx, miny = pts.front().y, maxy = miny;
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  auto sx = [&](const Rational& x) {
    return boost::rational_cast<double>(x - minx) * o.scale + o.margin;
  };
  auto sy = [&](const Rational& y) {
    return boost::rational_cast<double>(maxy - y) * o.scale + o.margin;
  };
  const double width = boost::rational_cast<double>(maxx - minx) * o.scale +
                       2 * o.margin;
  const double height = boost::rational_cast<double>(maxy - miny) * o.scale +
                        2 * o.margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
      << num(width) << ' ' << num(height) << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (auto [a, b] : d.lattice().covers()) {
    const bool bold = std::find(o.bold.begin(), o.bold.end(),
                                ElementPair{a, b}) != o.bold.end();
    out << "<line x1=\"" << num(sx(d.pos(a).x)) << "\" y1=\""
        << num(sy(d.pos(a).y)) << "\" x2=\"" << num(sx(d.pos(b).x))
        << "\" y2=\"" << num(sy(d.pos(b).y)) << '"'
        << (bold ? " stroke-width=\"3\"" : "") << "/>\n";
  }
  out << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
  for (Element e = 0; e < d.size(); ++e)
    out << "<circle cx=\"" << num(sx(d.pos(e).x)) << "\" cy=\""
        << num(sy(d.pos(e).y)) << "\" r=\"" << num(o.radius) << "\"/>\n";
  out << "</g>\n";
  if (o.labels) {
    out << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
    for (Element e = 0; e < d.size(); ++e)
      out << "<text x=\"" << num(sx(d.pos(e).x) + o.radius + 2) << "\" y=\""
          << num(sy(d.pos(e).y) - o.radius) << "\">"
          << escape_xml(d.lattice().name(e)) << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const SpanningTree& t, const Lattice& l) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph tree {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element e = 0; e < l.size(); ++e) out << "  " << quote(l.name(e)) << ";\n";
  for (auto [a, b] : t.edges())
    out << "  " << quote(l.name(a)) << " -> " << quote(l.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace planarlat
