#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandloid/caps.hpp"
#include "quandloid/error.hpp"

namespace quandloid {

using Element = int;
using Table = std::vector<std::vector<Element>>;

/// A bijection of {0, ..., k-1}; image()[i] is where i goes.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(InvalidArgument) unless `image` is a bijection.
  explicit Permutation(std::vector<Element> image);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }
  Element operator()(Element x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<Element>& image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Cycle notation with 0-based points, e.g. "(0 2 1)"; "id" for the identity.
  std::string cycles() const;

  /// (f * g)(x) = f(g(x)).
  friend Permutation operator*(const Permutation& f, const Permutation& g);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> image_;
};

/// A finite permutation group stored as its full, sorted element list.
class GroupOfPermutations {
 public:
  /// Closure of `generators` under composition; always contains the identity.
  static GroupOfPermutations generated_by(std::size_t degree, std::span<const Permutation> generators);

  /// Takes an element list already known to be a group (sorted and deduplicated here).
  static GroupOfPermutations from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const GroupOfPermutations& other) const;

  /// Orbits of the natural action, each sorted, listed by least element.
  std::vector<std::vector<Element>> orbits() const;

  /// Elements fixing `x`.
  GroupOfPermutations stabilizer(Element x) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// A validated quandle operation table, table[x][y] = x ◁ y.
/// Only obtainable through validate_table or the named constructors, so every
/// instance satisfies idempotence, right invertibility and right
/// self-distributivity.
class FiniteQuandle {
 public:
  std::size_t size() const noexcept { return size_; }

  Element op(Element x, Element y) const noexcept { return ops_[index(x, y)]; }
  Element inv_op(Element x, Element y) const noexcept { return inverse_ops_[index(x, y)]; }

  /// Right translation β_y as a permutation (column y of the table).
  Permutation right_translation(Element y) const;

  Table table() const;
  /// Row-major flattened table; equal quandles have equal flat tables.
  const std::vector<Element>& flat() const noexcept { return ops_; }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.size_ == b.size_ && a.ops_ == b.ops_;
  }
  friend auto operator<=>(const FiniteQuandle& a, const FiniteQuandle& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.ops_ <=> b.ops_;
  }

 private:
  friend FiniteQuandle validate_table(std::size_t size, const Table& table);
  FiniteQuandle(std::size_t size, std::vector<Element> ops);

  std::size_t index(Element x, Element y) const noexcept {
    return static_cast<std::size_t>(x) * size_ + static_cast<std::size_t>(y);
  }

  std::size_t size_ = 0;
  std::vector<Element> ops_;
  std::vector<Element> inverse_ops_;
};

/// Checks the three quandle axioms and returns the quandle. Errors, in check
/// order: InvalidArgument (shape), OutOfRangeEntry(x,y), IdempotenceViolation(x),
/// ColumnNotBijective(y), DistributivityViolation(x,y,z).
FiniteQuandle validate_table(std::size_t size, const Table& table);

/// x ◁ y, range-checked (Error OutOfRange).
Element quandle_op(const FiniteQuandle& q, Element x, Element y);
/// The unique z with z ◁ y = x, range-checked.
Element quandle_inv_op(const FiniteQuandle& q, Element x, Element y);

FiniteQuandle make_trivial(std::size_t n);
/// x ◁ y = 2y - x (mod n).
FiniteQuandle make_dihedral(std::size_t n);
/// Three-element quandle with β_0 = (1 2), β_1 = β_2 = id.
FiniteQuandle make_v3();
/// Regular tetrahedron quandle: β_0 = (1 2 3), β_1 = (0 3 2), β_2 = (0 1 3), β_3 = (0 2 1).
FiniteQuandle make_tetrahedron();

/// The quandle with table'[f(x)][f(y)] = f(table[x][y]).
FiniteQuandle relabel(const FiniteQuandle& q, const Permutation& f);

bool is_homomorphism(const FiniteQuandle& from, const FiniteQuandle& to, const Permutation& f);

GroupOfPermutations automorphism_group(const FiniteQuandle& q, const Caps& caps = {});
GroupOfPermutations inner_group(const FiniteQuandle& q);

/// Orbits of Inn(q) on q, listed by least element.
std::vector<std::vector<Element>> algebraic_components(const FiniteQuandle& q);

bool is_faithful(const FiniteQuandle& q);
bool is_connected(const FiniteQuandle& q);
bool is_homogeneous(const FiniteQuandle& q, const Caps& caps = {});
bool is_trivial(const FiniteQuandle& q);
/// Every β_x acts on X \ {x} as a single (k-1)-cycle.
bool is_cyclic_type(const FiniteQuandle& q);

/// Lexicographically least isomorphism a -> b, if one exists.
std::optional<Permutation> are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);

/// Lexicographically least table among all relabelings of q.
FiniteQuandle canonical_form(const FiniteQuandle& q);

/// One quandle per isomorphism class of order n, each in canonical form,
/// sorted by flat table. Throws SizeCapExceeded when n > caps.census_order.
std::vector<FiniteQuandle> enumerate_quandles(std::size_t n, const Caps& caps = {});

}  // namespace quandloid
