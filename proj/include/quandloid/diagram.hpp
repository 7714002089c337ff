#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quandloid/presentation.hpp"

namespace quandloid {

enum class Role { Over, Under };
enum class ComponentKind { Open, Closed };
enum class End { Leg, Head };

struct Passage {
  Token crossing;
  Role role = Role::Over;
  int sign = 1;
  friend bool operator==(const Passage&, const Passage&) = default;
};

/// Open components are read leg -> head.
struct Component {
  ComponentKind kind = ComponentKind::Open;
  std::vector<Passage> passages;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Extended Gauss code of a linkoid diagram. Every crossing id occurs exactly
/// twice, once over and once under, with one sign.
class LinkoidDiagram {
 public:
  LinkoidDiagram() = default;
  /// Validates; errors CrossingParity(id, count), RoleConflict(id), SignConflict(id).
  explicit LinkoidDiagram(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t open_count() const noexcept;
  std::vector<Token> crossing_ids() const;

  friend bool operator==(const LinkoidDiagram&, const LinkoidDiagram&) = default;

 private:
  std::vector<Component> components_;
};

/// One `open:` or `closed:` line per component, tokens <id><O|U><+|->.
/// Blank lines and '#' comments are ignored.
LinkoidDiagram parse_diagram(std::string_view text);
std::string render_diagram(const LinkoidDiagram& d);

/// Maximal run of a component between under-passages (and endpoints).
struct Arc {
  Token id;  // "c<component>a<ordinal>"
  std::size_t component = 0;
  std::size_t ordinal = 0;
  std::vector<std::size_t> over_passages;  // passage indices within the component
  bool carries_leg = false;
  bool carries_head = false;
};

struct UnderCrossing {
  Token crossing;
  int sign = 1;
  std::size_t in_arc = 0;    // indices into ArcLayout::arcs
  std::size_t out_arc = 0;
  std::size_t over_arc = 0;
};

struct ArcLayout {
  std::vector<Arc> arcs;
  /// Crossings in the order their under-passages are traversed.
  std::vector<UnderCrossing> crossings;
  std::size_t arc_index(const Token& id) const;
};

ArcLayout derive_arcs(const LinkoidDiagram& d);

/// One generator per arc, one relation out = in ◁^sign over per crossing
/// (ordered by traversal of the under-passages), basepoints
/// (leg arc, head arc) for each open component in order.
QuandlePresentation fundamental_presentation(const LinkoidDiagram& d);

/// Forbidden under-move at an open component's end: the end strand passes
/// under `over_arc` with `sign`. Errors: NotOpenComponent, UnknownArc.
LinkoidDiagram apply_omega_minus(const LinkoidDiagram& d, std::size_t component, End end,
                                 const Token& over_arc, int sign);

/// R1 kink inserted at passage gap `position` (0..#passages) of `component`.
LinkoidDiagram apply_r1(const LinkoidDiagram& d, std::size_t component, std::size_t position, int sign,
                        bool over_first);

/// R2: strand A (component_a at gap pos_a) passes over strand B twice; the two
/// new crossings have signs first_sign and -first_sign. Gaps refer to the
/// input diagram, also when both strands lie on one component.
LinkoidDiagram apply_r2(const LinkoidDiagram& d, std::size_t component_a, std::size_t pos_a,
                        std::size_t component_b, std::size_t pos_b, int first_sign);

}  // namespace quandloid
