#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandloid/pointed.hpp"
#include "quandloid/presentation.hpp"
#include "quandloid/quandle.hpp"

namespace quandloid {

using Count = std::uint64_t;
using Pins = std::map<Token, Element>;

/// A homomorphism from a presented quandle: values[i] colors generators[i].
struct Coloring {
  std::vector<Token> generators;
  std::vector<Element> values;

  Element at(const Token& g) const;
  std::map<Token, Element> as_map() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Left-nested evaluation. UnassignedGenerator if a token has no value.
Element evaluate_word(const QuandleWord& w, const std::map<Token, Element>& assignment, const FiniteQuandle& q);

/// All colorings satisfying every relation and pin, in lexicographic order of
/// the value vector. Errors: UnknownPinnedGenerator, PinOutOfRange.
std::vector<Coloring> enumerate_colorings(const QuandlePresentation& p, const FiniteQuandle& q, const Pins& pins = {});

/// Streams the same colorings as enumerate_colorings without storing them.
void for_each_coloring(const QuandlePresentation& p, const FiniteQuandle& q, const Pins& pins,
                       const std::function<void(const std::vector<Element>&)>& visit);

/// Number of colorings (basepoints ignored). CountOverflow past 2^64 - 1.
Count counting_invariant(const QuandlePresentation& p, const FiniteQuandle& q);

/// Colorings sending the i-th basepoint generator to the i-th basepoint.
/// ArityMismatch if the basepoint counts differ. Zero is an ordinary result.
Count pointed_counting_invariant(const QuandlePresentation& p, const PointedQuandle& target);

struct CountingMatrix {
  FiniteQuandle target;
  std::vector<std::vector<Count>> entries;  // entries[i][j]: leg -> i, head -> j

  Count trace() const;
  Count sum() const;
  bool is_identity() const;
  friend bool operator==(const CountingMatrix&, const CountingMatrix&) = default;
};

/// One unpinned enumeration bucketed by (leg color, head color).
/// ArityMismatch unless p has exactly two basepoints.
CountingMatrix counting_matrix(const QuandlePresentation& p, const FiniteQuandle& q);
/// Entry-by-entry definition via pointed_counting_invariant.
CountingMatrix counting_matrix_per_entry(const QuandlePresentation& p, const FiniteQuandle& q);

/// Structural checks on a counting matrix. Optional checks are absent when
/// they do not apply (or the automorphism group is beyond the caps).
struct MatrixReport {
  Count trace = 0;
  Count sum = 0;
  bool entries_nonnegative = true;
  bool diagonal_positive = true;
  bool is_identity = false;
  bool only_trivial_colorings = false;
  std::optional<bool> homogeneous_diagonal_equal;
  std::optional<bool> two_homogeneous_off_diagonal_equal;
  bool component_diagonal_equal = true;
  std::optional<Count> closure_count;              // link-type only: the trace
  std::optional<bool> faithful_off_diagonal_zero;  // link-type and faithful only
  std::vector<std::string> violations;
};

MatrixReport matrix_report(const CountingMatrix& m, bool link_type, const Caps& caps = {});

/// pointed_counting_invariant against each target, in order.
std::vector<Count> pointed_profile(const QuandlePresentation& p, const std::vector<PointedQuandle>& targets);

/// Every census quandle of order <= max_order with every P_2 orbit
/// representative as basepoints.
std::vector<PointedQuandle> default_profile_battery(std::size_t max_order = 4, const Caps& caps = {});

}  // namespace quandloid
