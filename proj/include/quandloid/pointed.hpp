#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quandloid/quandle.hpp"

namespace quandloid {

using BigInt = boost::multiprecision::cpp_int;
using Tuple = std::vector<Element>;

/// A quandle together with an ordered tuple of basepoints (repetitions allowed).
class PointedQuandle {
 public:
  /// Throws OutOfRange if a basepoint is not an element of `quandle`.
  PointedQuandle(FiniteQuandle quandle, Tuple basepoints);

  const FiniteQuandle& quandle() const noexcept { return quandle_; }
  const Tuple& basepoints() const noexcept { return basepoints_; }
  std::size_t arity() const noexcept { return basepoints_.size(); }

 private:
  FiniteQuandle quandle_;
  Tuple basepoints_;
};

/// Positions grouped by equal value: blocks of 0-based indices, each sorted,
/// listed by first index.
struct EqualityPattern {
  std::vector<std::vector<std::size_t>> blocks;
  friend bool operator==(const EqualityPattern&, const EqualityPattern&) = default;
};

/// Size of the underlying set in partition_count; nullopt means unbounded.
using Cardinality = std::optional<std::size_t>;
inline constexpr Cardinality kUnbounded = std::nullopt;

/// Lexicographically least isomorphism f of the underlying quandles with
/// f(a_i) = b_i for every basepoint. ArityMismatch if the basepoint counts or
/// the quandle sizes differ.
std::optional<Permutation> pointed_isomorphic(const PointedQuandle& a, const PointedQuandle& b);

/// Lexicographically least representative of every orbit of X^n under the
/// diagonal action of Aut(X), in ascending order. Its length is d_n(X).
std::vector<Tuple> orbit_classes(const FiniteQuandle& q, std::size_t n, const Caps& caps = {});

/// d_n(X) by the orbit-counting lemma: mean of |Fix(g)|^n over g in Aut(X).
BigInt d_n_burnside(const FiniteQuandle& q, std::size_t n, const Caps& caps = {});

/// d_{m,n,k}: S_k-classes of (m+n)-tuples whose first m entries are fixed and
/// distinct. Throws PartitionBoundViolation when m > k.
BigInt partition_count(std::size_t m, std::size_t n, Cardinality k);

EqualityPattern equality_pattern(const Tuple& t);
/// Same S_k-orbit, i.e. same equality pattern. LengthMismatch on unequal lengths.
bool sk_equivalent(const Tuple& a, const Tuple& b);

/// d_n(X) = d_{0,n,|X|}.
bool is_n_homogeneous(const FiniteQuandle& q, std::size_t n, const Caps& caps = {});

/// Uniformity decided through (|X|-1)-homogeneity.
bool is_uniform_by_homogeneity(const FiniteQuandle& q, const Caps& caps = {});
/// Uniformity decided through |Aut(X)| = |X|!.
bool is_uniform_by_group_order(const FiniteQuandle& q, const Caps& caps = {});
/// Both routes; throws std::logic_error if they ever disagree.
bool is_uniform(const FiniteQuandle& q, const Caps& caps = {});

/// The diagonal Inn(X)-action on X^2 has exactly two orbits.
bool is_two_point_homogeneous(const FiniteQuandle& q);

/// Aut(X)_x acts transitively on X \ {x}.
bool stabilizer_transitive(const FiniteQuandle& q, Element x, const Caps& caps = {});

}  // namespace quandloid
