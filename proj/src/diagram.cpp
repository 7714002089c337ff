#include "quandloid/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quandloid {

namespace {

struct CrossingTally {
  int count = 0;
  int overs = 0;
  int unders = 0;
  int sign = 0;
  bool sign_conflict = false;
};

}  // namespace

LinkoidDiagram::LinkoidDiagram(std::vector<Component> components) : components_(std::move(components)) {
  std::map<Token, CrossingTally> tally;
  std::vector<Token> order;
  for (const auto& c : components_) {
    for (const auto& p : c.passages) {
      if (p.sign != 1 && p.sign != -1) throw Error(ErrorCode::InvalidArgument, "crossing sign must be +1 or -1", {}, p.crossing);
      auto [it, inserted] = tally.try_emplace(p.crossing);
      if (inserted) order.push_back(p.crossing);
      auto& t = it->second;
      ++t.count;
      (p.role == Role::Over ? t.overs : t.unders)++;
      if (t.sign != 0 && t.sign != p.sign) t.sign_conflict = true;
      t.sign = p.sign;
    }
  }
  for (const auto& id : order) {
    const auto& t = tally[id];
    if (t.count != 2) {
      throw Error(ErrorCode::CrossingParity, "crossing " + id + " occurs " + std::to_string(t.count) + " times",
                  {t.count}, id);
    }
    if (t.overs != 1) throw Error(ErrorCode::RoleConflict, "crossing " + id + " needs one over and one under passage", {}, id);
    if (t.sign_conflict) throw Error(ErrorCode::SignConflict, "crossing " + id + " has conflicting signs", {}, id);
  }
}

std::size_t LinkoidDiagram::open_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(components_.begin(), components_.end(),
                                                [](const Component& c) { return c.kind == ComponentKind::Open; }));
}

std::vector<Token> LinkoidDiagram::crossing_ids() const {
  std::vector<Token> ids;
  for (const auto& c : components_) {
    for (const auto& p : c.passages) {
      if (std::find(ids.begin(), ids.end(), p.crossing) == ids.end()) ids.push_back(p.crossing);
    }
  }
  return ids;
}

// ---------------------------------------------------------------------------
// text format

LinkoidDiagram parse_diagram(std::string_view text) {
  std::vector<Component> components;
  std::size_t line_no = 0;
  auto fail = [&](std::size_t col, const std::string& what) -> void {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ", col " + std::to_string(col) + ": " + what,
                {std::int64_t(line_no), std::int64_t(col)});
  };
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    skip();
    if (pos == line.size()) continue;

    Component component;
    auto colon = line.find(':', pos);
    if (colon == std::string_view::npos) fail(pos + 1, "expected 'open:' or 'closed:'");
    auto kind = line.substr(pos, colon - pos);
    while (!kind.empty() && std::isspace(static_cast<unsigned char>(kind.back()))) kind.remove_suffix(1);
    if (kind == "open") {
      component.kind = ComponentKind::Open;
    } else if (kind == "closed") {
      component.kind = ComponentKind::Closed;
    } else {
      fail(pos + 1, "expected 'open:' or 'closed:'");
    }
    pos = colon + 1;
    while (true) {
      skip();
      if (pos == line.size()) break;
      auto start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      auto token = line.substr(start, pos - start);
      if (token.size() < 3) fail(start + 1, "passage must look like <id><O|U><+|->");
      const char sign = token.back();
      const char role = token[token.size() - 2];
      auto id = token.substr(0, token.size() - 2);
      if (sign != '+' && sign != '-') fail(start + token.size(), "expected '+' or '-'");
      if (role != 'O' && role != 'U') fail(start + token.size() - 1, "expected 'O' or 'U'");
      for (std::size_t i = 0; i < id.size(); ++i) {
        if (!std::isalnum(static_cast<unsigned char>(id[i]))) fail(start + i + 1, "crossing ids are alphanumeric");
      }
      component.passages.push_back({Token(id), role == 'O' ? Role::Over : Role::Under, sign == '+' ? 1 : -1});
    }
    components.push_back(std::move(component));
  }
  return LinkoidDiagram(std::move(components));
}

std::string render_diagram(const LinkoidDiagram& d) {
  std::ostringstream out;
  for (const auto& c : d.components()) {
    out << (c.kind == ComponentKind::Open ? "open:" : "closed:");
    for (const auto& p : c.passages) {
      out << ' ' << p.crossing << (p.role == Role::Over ? 'O' : 'U') << (p.sign > 0 ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// arcs and presentation

namespace {

std::vector<std::size_t> under_positions(const Component& c) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < c.passages.size(); ++i) {
    if (c.passages[i].role == Role::Under) positions.push_back(i);
  }
  return positions;
}

std::size_t arc_count(const Component& c, std::size_t unders) {
  if (c.kind == ComponentKind::Open) return unders + 1;
  return std::max<std::size_t>(unders, 1);
}

Token arc_name(std::size_t component, std::size_t ordinal) {
  return "c" + std::to_string(component) + "a" + std::to_string(ordinal);
}

}  // namespace

std::size_t ArcLayout::arc_index(const Token& id) const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].id == id) return i;
  }
  throw Error(ErrorCode::UnknownArc, "unknown arc " + id, {}, id);
}

ArcLayout derive_arcs(const LinkoidDiagram& d) {
  ArcLayout layout;
  std::vector<std::size_t> first_arc;  // per component
  std::map<Token, std::size_t> over_arc_of;

  for (std::size_t ci = 0; ci < d.components().size(); ++ci) {
    const auto& c = d.components()[ci];
    const auto unders = under_positions(c).size();
    const auto count = arc_count(c, unders);
    first_arc.push_back(layout.arcs.size());
    for (std::size_t j = 0; j < count; ++j) {
      Arc arc;
      arc.id = arc_name(ci, j);
      arc.component = ci;
      arc.ordinal = j;
      arc.carries_leg = c.kind == ComponentKind::Open && j == 0;
      arc.carries_head = c.kind == ComponentKind::Open && j + 1 == count;
      layout.arcs.push_back(std::move(arc));
    }
    std::size_t seen_unders = 0;
    for (std::size_t pi = 0; pi < c.passages.size(); ++pi) {
      const auto& p = c.passages[pi];
      if (p.role == Role::Under) {
        ++seen_unders;
        continue;
      }
      auto& arc = layout.arcs[first_arc[ci] + seen_unders % count];
      arc.over_passages.push_back(pi);
      over_arc_of[p.crossing] = first_arc[ci] + seen_unders % count;
    }
  }

  for (std::size_t ci = 0; ci < d.components().size(); ++ci) {
    const auto& c = d.components()[ci];
    const auto count = arc_count(c, under_positions(c).size());
    std::size_t seen_unders = 0;
    for (const auto& p : c.passages) {
      if (p.role != Role::Under) continue;
      UnderCrossing x;
      x.crossing = p.crossing;
      x.sign = p.sign;
      x.in_arc = first_arc[ci] + seen_unders % count;
      x.out_arc = first_arc[ci] + (seen_unders + 1) % count;
      x.over_arc = over_arc_of.at(p.crossing);
      layout.crossings.push_back(std::move(x));
      ++seen_unders;
    }
  }
  return layout;
}

QuandlePresentation fundamental_presentation(const LinkoidDiagram& d) {
  const auto layout = derive_arcs(d);
  QuandlePresentation p;
  for (const auto& arc : layout.arcs) p.generators.push_back(arc.id);
  for (const auto& x : layout.crossings) {
    p.relations.push_back({QuandleWord::generator(layout.arcs[x.out_arc].id),
                           QuandleWord{layout.arcs[x.in_arc].id, {{layout.arcs[x.over_arc].id, x.sign}}}});
  }
  for (const auto& arc : layout.arcs) {
    if (arc.carries_leg) p.basepoints.push_back(arc.id);
    if (arc.carries_head) p.basepoints.push_back(arc.id);
  }
  return p;
}

// ---------------------------------------------------------------------------
// moves

namespace {

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
}

void check_component(const LinkoidDiagram& d, std::size_t component) {
  if (component >= d.components().size()) {
    throw Error(ErrorCode::InvalidPosition, "no component " + std::to_string(component), {std::int64_t(component)});
  }
}

void check_gap(const LinkoidDiagram& d, std::size_t component, std::size_t position) {
  check_component(d, component);
  const auto limit = d.components()[component].passages.size();
  if (position > limit) {
    throw Error(ErrorCode::InvalidPosition,
                "gap " + std::to_string(position) + " outside component " + std::to_string(component),
                {std::int64_t(component), std::int64_t(position)});
  }
}

// passage index just past the end of an arc's span
std::size_t arc_end(const Component& c, std::size_t ordinal) {
  const auto unders = under_positions(c);
  return ordinal < unders.size() ? unders[ordinal] : c.passages.size();
}

}  // namespace

LinkoidDiagram apply_omega_minus(const LinkoidDiagram& d, std::size_t component, End end, const Token& over_arc,
                                 int sign) {
  check_sign(sign);
  check_component(d, component);
  if (d.components()[component].kind != ComponentKind::Open) {
    throw Error(ErrorCode::NotOpenComponent, "component " + std::to_string(component) + " is closed",
                {std::int64_t(component)});
  }
  const auto layout = derive_arcs(d);
  const auto& arc = layout.arcs[layout.arc_index(over_arc)];

  auto components = d.components();
  const Token id = fresh_token(d.crossing_ids(), "om");
  auto& host = components[arc.component].passages;
  host.insert(host.begin() + static_cast<std::ptrdiff_t>(arc_end(d.components()[arc.component], arc.ordinal)),
              Passage{id, Role::Over, sign});
  auto& mover = components[component].passages;
  if (end == End::Head) {
    mover.push_back({id, Role::Under, sign});
  } else {
    mover.insert(mover.begin(), Passage{id, Role::Under, sign});
  }
  return LinkoidDiagram(std::move(components));
}

LinkoidDiagram apply_r1(const LinkoidDiagram& d, std::size_t component, std::size_t position, int sign,
                        bool over_first) {
  check_sign(sign);
  check_gap(d, component, position);
  auto components = d.components();
  const Token id = fresh_token(d.crossing_ids(), "r");
  Passage over{id, Role::Over, sign};
  Passage under{id, Role::Under, sign};
  auto& passages = components[component].passages;
  auto at = passages.begin() + static_cast<std::ptrdiff_t>(position);
  if (over_first) {
    passages.insert(at, {over, under});
  } else {
    passages.insert(at, {under, over});
  }
  return LinkoidDiagram(std::move(components));
}

LinkoidDiagram apply_r2(const LinkoidDiagram& d, std::size_t component_a, std::size_t pos_a,
                        std::size_t component_b, std::size_t pos_b, int first_sign) {
  check_sign(first_sign);
  check_gap(d, component_a, pos_a);
  check_gap(d, component_b, pos_b);
  auto taken = d.crossing_ids();
  const Token x = fresh_token(taken, "r");
  taken.push_back(x);
  const Token y = fresh_token(taken, "r");

  const std::vector<Passage> overs{{x, Role::Over, first_sign}, {y, Role::Over, -first_sign}};
  const std::vector<Passage> unders{{x, Role::Under, first_sign}, {y, Role::Under, -first_sign}};
  auto components = d.components();
  auto insert = [&](std::size_t ci, std::size_t pos, const std::vector<Passage>& ps) {
    auto& passages = components[ci].passages;
    passages.insert(passages.begin() + static_cast<std::ptrdiff_t>(pos), ps.begin(), ps.end());
  };
  // later gap first so the earlier gap index stays valid
  if (component_a == component_b && pos_b > pos_a) {
    insert(component_b, pos_b, unders);
    insert(component_a, pos_a, overs);
  } else {
    insert(component_a, pos_a, overs);
    insert(component_b, pos_b, unders);
  }
  return LinkoidDiagram(std::move(components));
}

}  // namespace quandloid
