#pragma once

#include <cstddef>
#include <string_view>

namespace quandloid {

/// Size limits for the exhaustive computations. Defaults keep every call
/// interactive; the hard limits bound what a configuration may request.
struct Caps {
  std::size_t group_order = 8;    // max |X| for automorphism-group work
  std::size_t census_order = 5;   // max order for enumerate_quandles
  std::size_t pointed_arity = 4;  // max n for orbit_classes

  static constexpr std::size_t kHardGroupOrder = 10;
  static constexpr std::size_t kHardCensusOrder = 5;
  static constexpr std::size_t kHardPointedArity = 8;

  /// Parses "group=9,census=4,arity=5" (any subset, any order) on top of the
  /// defaults. Throws Error(InvalidArgument) on unknown keys, bad numbers or
  /// values beyond the hard limits.
  static Caps parse(std::string_view spec);

  /// Caps from the QUANDLOID_CAPS environment variable, or the defaults.
  static Caps from_environment();
};

}  // namespace quandloid
