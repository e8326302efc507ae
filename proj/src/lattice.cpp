#include "planarlat/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace planarlat {

std::size_t StrictRelation::count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), static_cast<unsigned char>(1)));
}

std::vector<ElementPair> StrictRelation::pairs() const {
  std::vector<ElementPair> out;
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool StrictRelation::is_irreflexive() const {
  for (Element a = 0; a < n_; ++a)
    if (contains(a, a)) return false;
  return true;
}

bool StrictRelation::is_antisymmetric() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (contains(a, b) && contains(b, a)) return false;
  return true;
}

bool StrictRelation::is_transitive() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      if (!contains(a, b)) continue;
      for (Element c = 0; c < n_; ++c)
        if (contains(b, c) && !contains(a, c)) return false;
    }
  return true;
}

bool StrictRelation::is_symmetric() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (contains(a, b) != contains(b, a)) return false;
  return true;
}

bool StrictRelation::is_total() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (!contains(a, b) && !contains(b, a)) return false;
  return true;
}

StrictRelation StrictRelation::dual() const {
  StrictRelation out(n_);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (contains(a, b)) out.insert(b, a);
  return out;
}

StrictRelation StrictRelation::transitive_closure() const {
  StrictRelation out = *this;
  // Warshall
  for (Element k = 0; k < n_; ++k)
    for (Element a = 0; a < n_; ++a) {
      if (!out.contains(a, k)) continue;
      for (Element b = 0; b < n_; ++b)
        if (out.contains(k, b)) out.insert(a, b);
    }
  return out;
}

StrictRelation StrictRelation::transitive_reduction() const {
  StrictRelation out = *this;
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      if (!contains(a, b)) continue;
      for (Element c = 0; c < n_; ++c)
        if (contains(a, c) && contains(c, b)) {
          out.erase(a, b);
          break;
        }
    }
  return out;
}

StrictRelation& StrictRelation::operator|=(const StrictRelation& other) {
  if (other.n_ != n_) throw Error("relation size mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

StrictRelation& StrictRelation::operator&=(const StrictRelation& other) {
  if (other.n_ != n_) throw Error("relation size mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

StrictRelation operator|(StrictRelation a, const StrictRelation& b) {
  return a |= b;
}

StrictRelation operator&(StrictRelation a, const StrictRelation& b) {
  return a &= b;
}

Poset::Poset(std::vector<std::string> names, StrictRelation less)
    : names_(std::move(names)), less_(std::move(less)) {
  if (less_.size() != names_.size())
    throw Error("poset: label count does not match relation size");
  for (Element a = 0; a < size(); ++a)
    if (less_(a, a)) throw CycleDetected(a);
  if (!less_.is_transitive()) throw Error("poset: relation is not transitive");
}

std::optional<Element> Poset::find(std::string_view name) const {
  for (Element e = 0; e < names_.size(); ++e)
    if (names_[e] == name) return e;
  return std::nullopt;
}

Poset build_poset(std::size_t n, std::span<const ElementPair> pairs,
                  std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw Error("build_poset: wrong number of labels");
  StrictRelation rel(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error("build_poset: element out of range");
    rel.insert(a, b);
  }
  rel = rel.transitive_closure();
  for (Element a = 0; a < n; ++a)
    if (rel(a, a)) throw CycleDetected(a);
  return Poset(std::move(names), std::move(rel));
}

namespace {

// Least element of `candidates` under `leq`, if one exists. The least one
// has the largest rank.
template <typename Leq>
std::optional<Element> least_of(const std::vector<Element>& candidates,
                                const std::vector<std::size_t>& rank,
                                Leq leq) {
  if (candidates.empty()) return std::nullopt;
  Element best = candidates.front();
  for (Element c : candidates)
    if (rank[c] > rank[best]) best = c;
  for (Element c : candidates)
    if (!leq(best, c)) return std::nullopt;
  return best;
}

}  // namespace

Lattice as_lattice(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw NotALattice("the empty order is not a lattice");

  // Up-set and down-set sizes give a cheap candidate for least/greatest bound.
  std::vector<std::size_t> above(n, 0), below(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p.lt(a, b)) {
        ++above[a];
        ++below[b];
      }

  Lattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  std::vector<Element> ub, lb;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      ub.clear();
      lb.clear();
      for (Element c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c)) ub.push_back(c);
        if (p.leq(c, a) && p.leq(c, b)) lb.push_back(c);
      }
      auto j = least_of(ub, above,
                        [&](Element x, Element y) { return p.leq(x, y); });
      if (!j)
        throw NotALattice("elements " + p.name(a) + " and " + p.name(b) +
                              " have no least upper bound",
                          ElementPair{a, b});
      auto m = least_of(lb, below,
                        [&](Element x, Element y) { return p.leq(y, x); });
      if (!m)
        throw NotALattice("elements " + p.name(a) + " and " + p.name(b) +
                              " have no greatest lower bound",
                          ElementPair{a, b});
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
    }
  }

  l.bottom_ = 0;
  l.top_ = 0;
  for (Element e = 1; e < n; ++e) {
    l.bottom_ = l.meet_[l.bottom_ * n + e];
    l.top_ = l.join_[l.top_ * n + e];
  }

  l.cover_rel_ = p.less().transitive_reduction();
  l.covers_ = l.cover_rel_.pairs();
  l.upper_.assign(n, {});
  l.lower_.assign(n, {});
  for (auto [a, b] : l.covers_) {
    l.upper_[a].push_back(b);
    l.lower_[b].push_back(a);
  }
  l.poset_ = std::move(p);
  return l;
}

bool Lattice::covers(Element lower, Element upper) const {
  return cover_rel_(lower, upper);
}

Lattice make_lattice(std::vector<std::string> names,
                     std::span<const ElementPair> pairs) {
  const std::size_t n = names.size();
  return as_lattice(build_poset(n, pairs, std::move(names)));
}

Lattice make_lattice(
    std::vector<std::string> names,
    std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<ElementPair> ids;
  auto id = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw Error("unknown element '" + s + "'");
    return static_cast<Element>(it - names.begin());
  };
  for (const auto& [a, b] : pairs) ids.emplace_back(id(a), id(b));
  return make_lattice(std::move(names), ids);
}

const std::vector<ElementPair>& covers_of(const Lattice& l) {
  return l.covers();
}

StrictRelation incomparability(const Lattice& l) {
  StrictRelation g(l.size());
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (!l.comparable(a, b)) g.insert(a, b);
  return g;
}

Lattice dual(const Lattice& l) {
  return as_lattice(Poset(l.names(), l.less().dual()));
}

Poset induced_poset(const Poset& p, std::span<const Element> elements) {
  std::vector<std::string> names;
  StrictRelation rel(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(p.name(elements[i]));
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (p.lt(elements[i], elements[j])) rel.insert(i, j);
  }
  return Poset(std::move(names), std::move(rel));
}

std::vector<std::size_t> LinearOrder::rank() const {
  std::vector<std::size_t> r(sequence.size(), 0);
  for (std::size_t i = 0; i < sequence.size(); ++i) r.at(sequence[i]) = i;
  return r;
}

StrictRelation LinearOrder::relation() const {
  StrictRelation rel(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      rel.insert(sequence[i], sequence[j]);
  return rel;
}

LinearOrder sort_by_total_order(const StrictRelation& total) {
  if (!total.is_strict_order() || !total.is_total())
    throw Error("relation is not a total strict order");
  const std::size_t n = total.size();
  LinearOrder out;
  out.sequence.assign(n, 0);
  for (Element e = 0; e < n; ++e) {
    std::size_t preds = 0;
    for (Element f = 0; f < n; ++f)
      if (total(f, e)) ++preds;
    out.sequence[preds] = e;
  }
  return out;
}

}  // namespace planarlat
