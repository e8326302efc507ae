#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planarlat/errors.hpp"

namespace planarlat {

/// Dense boolean relation on the elements 0..n-1.
///
/// Used for strict orders (the lattice order, the left-right order, total
/// orders) as well as for symmetric graphs such as incomparability.
class StrictRelation {
 public:
  StrictRelation() = default;
  explicit StrictRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool contains(Element a, Element b) const { return bits_[a * n_ + b] != 0; }
  bool operator()(Element a, Element b) const { return contains(a, b); }

  void insert(Element a, Element b) { bits_[a * n_ + b] = 1; }
  void erase(Element a, Element b) { bits_[a * n_ + b] = 0; }

  // Number of pairs in the relation.
  std::size_t count() const;
  // Pairs in lexicographic order.
  std::vector<ElementPair> pairs() const;

  bool is_irreflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_symmetric() const;
  bool is_strict_order() const {
    return is_irreflexive() && is_transitive();
  }
  // Every two distinct elements related one way or the other.
  bool is_total() const;

  StrictRelation dual() const;
  StrictRelation transitive_closure() const;
  // Transitive reduction of a strict order (its covering pairs).
  StrictRelation transitive_reduction() const;

  StrictRelation& operator|=(const StrictRelation& other);
  StrictRelation& operator&=(const StrictRelation& other);

  friend bool operator==(const StrictRelation&,
                         const StrictRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> bits_;
};

StrictRelation operator|(StrictRelation a, const StrictRelation& b);
StrictRelation operator&(StrictRelation a, const StrictRelation& b);

/// Finite strict partial order with element labels.
class Poset {
 public:
  Poset() = default;
  // Throws CycleDetected unless `less` is irreflexive and transitive.
  Poset(std::vector<std::string> names, StrictRelation less);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> find(std::string_view name) const;

  const StrictRelation& less() const noexcept { return less_; }
  bool lt(Element a, Element b) const { return less_(a, b); }
  bool leq(Element a, Element b) const { return a == b || less_(a, b); }
  bool comparable(Element a, Element b) const {
    return a == b || less_(a, b) || less_(b, a);
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> names_;
  StrictRelation less_;
};

// Transitive closure of `pairs` on n elements. Names default to "0".."n-1".
// Throws CycleDetected when the closure is not irreflexive.
Poset build_poset(std::size_t n, std::span<const ElementPair> pairs,
                  std::vector<std::string> names = {});

/// Finite lattice: a poset with meet and join tables and its covering pairs.
class Lattice {
 public:
  Lattice() = default;

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::vector<std::string>& names() const noexcept {
    return poset_.names();
  }
  const std::string& name(Element e) const { return poset_.name(e); }
  std::optional<Element> find(std::string_view name) const {
    return poset_.find(name);
  }

  const StrictRelation& less() const noexcept { return poset_.less(); }
  bool lt(Element a, Element b) const { return poset_.lt(a, b); }
  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  bool comparable(Element a, Element b) const {
    return poset_.comparable(a, b);
  }

  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  // Covering pairs (lower, upper) in lexicographic order.
  const std::vector<ElementPair>& covers() const noexcept { return covers_; }
  bool covers(Element lower, Element upper) const;
  const std::vector<Element>& upper_covers(Element e) const {
    return upper_.at(e);
  }
  const std::vector<Element>& lower_covers(Element e) const {
    return lower_.at(e);
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.poset_ == b.poset_;
  }

 private:
  friend Lattice as_lattice(Poset p);

  Poset poset_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<ElementPair> covers_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  StrictRelation cover_rel_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Fills the meet/join tables. Throws NotALattice naming the lexicographically
// first pair without a unique least upper or greatest lower bound.
Lattice as_lattice(Poset p);

// Convenience: as_lattice(build_poset(names.size(), pairs, names)).
Lattice make_lattice(std::vector<std::string> names,
                     std::span<const ElementPair> pairs);
// Same, with pairs given by element name.
Lattice make_lattice(
    std::vector<std::string> names,
    std::span<const std::pair<std::string, std::string>> pairs);

const std::vector<ElementPair>& covers_of(const Lattice& l);

// Symmetric graph: (a, b) present iff a and b are incomparable.
StrictRelation incomparability(const Lattice& l);

// The order-dual lattice on the same element ids.
Lattice dual(const Lattice& l);

// Sub-poset induced by `elements`, relabelled 0..k-1 in the given order.
Poset induced_poset(const Poset& p, std::span<const Element> elements);

/// A permutation of the elements read as a total order (first is least).
struct LinearOrder {
  std::vector<Element> sequence;

  std::size_t size() const noexcept { return sequence.size(); }
  // rank()[e] is the position of e in the sequence.
  std::vector<std::size_t> rank() const;
  StrictRelation relation() const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
};

// Lists the elements in increasing order of a total strict order.
// Throws Error if `total` is not a total strict order.
LinearOrder sort_by_total_order(const StrictRelation& total);

}  // namespace planarlat
