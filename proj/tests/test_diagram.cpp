#include "doctest.h"

#include <random>

#include "quandloid/coloring.hpp"
#include "quandloid/diagram.hpp"
#include "support.hpp"

using namespace quandloid;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a quandloid::Error");
  return ErrorCode::IoError;
}

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a quandloid::Error");
  return Error(ErrorCode::IoError, "");
}

std::size_t unders_on(const Component& c) {
  return static_cast<std::size_t>(
      std::count_if(c.passages.begin(), c.passages.end(), [](const Passage& p) { return p.role == Role::Under; }));
}

const std::vector<FiniteQuandle>& targets() {
  static const std::vector<FiniteQuandle> t{make_dihedral(3), make_v3(), make_tetrahedron(), make_trivial(2)};
  return t;
}

}  // namespace

TEST_CASE("parse_diagram") {
  const auto trefoil = support::load_diagram("trefoil.txt");
  REQUIRE(trefoil.components().size() == 1);
  CHECK(trefoil.components()[0].kind == ComponentKind::Closed);
  CHECK(trefoil.crossing_ids() == std::vector<Token>{"1", "2", "3"});
  CHECK(trefoil.open_count() == 0);

  const auto trivial = parse_diagram("open: ");
  REQUIRE(trivial.components().size() == 1);
  CHECK(trivial.components()[0].passages.empty());
  CHECK(trivial.open_count() == 1);

  const auto l = support::load_diagram("l.txt");
  CHECK(l.components()[0].passages[1] == Passage{"1", Role::Under, -1});

  auto parity = error_of([] { parse_diagram("open: 1U+"); });
  CHECK(parity.code() == ErrorCode::CrossingParity);
  CHECK(parity.subject() == "1");
  CHECK(parity.witness() == std::vector<std::int64_t>{1});
  CHECK(code_of([] { parse_diagram("open: 1U+ 1U+"); }) == ErrorCode::RoleConflict);
  CHECK(code_of([] { parse_diagram("open: 1U+ 1O-"); }) == ErrorCode::SignConflict);
  CHECK(code_of([] { parse_diagram("open: 1U+ 1O+ 1O+"); }) == ErrorCode::CrossingParity);
  CHECK(error_of([] { parse_diagram("open: 1O+\nclosed: 1X+"); }).witness() == std::vector<std::int64_t>{2, 10});
  CHECK(error_of([] { parse_diagram("open: 1O+ 1U*"); }).witness() == std::vector<std::int64_t>{1, 13});
  CHECK(error_of([] { parse_diagram("  loop: 1O+ 1U+"); }).witness() == std::vector<std::int64_t>{1, 3});
  CHECK(code_of([] { parse_diagram("open: x-y U+"); }) == ErrorCode::SyntaxError);
  CHECK(parse_diagram("# comment\n\nopen: a7O+ a7U+  # kink\n").components().size() == 1);
}

TEST_CASE("render round trip") {
  for (const auto* name : {"trefoil.txt", "k1.txt", "k2.txt", "l.txt", "trivial_knotoid.txt"}) {
    const auto d = support::load_diagram(name);
    CHECK(parse_diagram(render_diagram(d)) == d);
  }
  CHECK(render_diagram(support::load_diagram("l.txt")) == "open: 2O+ 1U- 3O+\nclosed: 1O- 2U+ 3U+\n");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = support::random_diagram(rng, static_cast<std::size_t>(trial % 7));
    CHECK(parse_diagram(render_diagram(d)) == d);
  }
}

TEST_CASE("derive_arcs") {
  const auto trefoil = derive_arcs(support::load_diagram("trefoil.txt"));
  CHECK(trefoil.arcs.size() == 3);
  CHECK(trefoil.crossings.size() == 3);

  const auto trivial = derive_arcs(parse_diagram("open:"));
  REQUIRE(trivial.arcs.size() == 1);
  CHECK(trivial.arcs[0].carries_leg);
  CHECK(trivial.arcs[0].carries_head);

  const auto two_unders = derive_arcs(parse_diagram("open: 1U+ 2O+ 2U+ 3O- 1O+\nclosed: 3U-"));
  CHECK(std::count_if(two_unders.arcs.begin(), two_unders.arcs.end(), [](const Arc& a) { return a.component == 0; }) == 3);

  const auto circle = derive_arcs(parse_diagram("open: 1U+\nclosed: 1O+"));
  CHECK(circle.arcs.size() == 3);
  CHECK(circle.arcs[2].id == "c1a0");
  CHECK(circle.arcs[2].over_passages == std::vector<std::size_t>{0});
  CHECK(circle.crossings[0].over_arc == 2);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = support::random_diagram(rng, static_cast<std::size_t>(trial % 7));
    const auto layout = derive_arcs(d);
    std::size_t expected = 0;
    for (std::size_t ci = 0; ci < d.components().size(); ++ci) {
      const auto& c = d.components()[ci];
      const auto per = c.kind == ComponentKind::Open ? unders_on(c) + 1 : std::max<std::size_t>(unders_on(c), 1);
      CHECK(std::count_if(layout.arcs.begin(), layout.arcs.end(), [&](const Arc& a) { return a.component == ci; }) ==
            static_cast<std::ptrdiff_t>(per));
      expected += per;
    }
    CHECK(layout.arcs.size() == expected);
    // every over-passage is annotated exactly once
    std::size_t overs = 0;
    for (const auto& a : layout.arcs) overs += a.over_passages.size();
    CHECK(overs == d.crossing_ids().size());
  }
}

TEST_CASE("fundamental_presentation") {
  const auto trefoil = fundamental_presentation(support::load_diagram("trefoil.txt"));
  CHECK(trefoil.generators.size() == 3);
  CHECK(trefoil.relations.size() == 3);
  CHECK(trefoil.basepoints.empty());
  CHECK(counting_invariant(trefoil, make_dihedral(3)) == 9);
  for (const auto& r : trefoil.relations) {
    CHECK(r.lhs.is_generator());
    CHECK(r.rhs.tail.size() == 1);
  }

  const auto trivial = fundamental_presentation(parse_diagram("open:"));
  CHECK(trivial == parse_presentation("gens: c0a0\nbase: c0a0 c0a0"));
  for (const auto& q : targets()) CHECK(counting_invariant(trivial, q) == q.size());

  CHECK(fundamental_presentation(support::load_diagram("k1.txt")) ==
        parse_presentation("gens: c0a0 c0a1 c0a2 c0a3\n"
                           "rel: c0a1 = c0a0*c0a2\nrel: c0a2 = c0a1*c0a0\nrel: c0a3 = c0a2*c0a1\n"
                           "base: c0a0 c0a3"));
  CHECK(fundamental_presentation(support::load_diagram("l.txt")) ==
        parse_presentation("gens: c0a0 c0a1 c1a0 c1a1\n"
                           "rel: c0a1 = c0a0/c1a0\nrel: c1a1 = c1a0*c0a0\nrel: c1a0 = c1a1*c0a1\n"
                           "base: c0a0 c0a1"));

  SUBCASE("component correspondence") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      const auto d = support::random_diagram(rng, static_cast<std::size_t>(trial % 7));
      const auto p = fundamental_presentation(d);
      CHECK(presentation_components(p).size() == d.components().size());
      CHECK(p.relations.size() == d.crossing_ids().size());
      CHECK(p.basepoints.size() == 2 * d.open_count());
    }
    CHECK(presentation_components(fundamental_presentation(support::load_diagram("l.txt"))).size() == 2);
  }
}

TEST_CASE("diagram fixtures agree with the printed presentations") {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"k1.txt", "k1.pres"}, {"k2.txt", "k2.pres"}, {"l.txt", "l.pres"}};
  for (const auto& [diagram, pres] : pairs) {
    const auto from_code = fundamental_presentation(support::load_diagram(diagram));
    const auto printed = support::load_presentation(pres);
    for (const auto& q : support::census_up_to(4)) {
      CHECK(counting_matrix(from_code, q).entries == counting_matrix(printed, q).entries);
    }
  }
}

TEST_CASE("apply_omega_minus") {
  const auto k2 = support::load_diagram("k2.txt");
  const auto moved = apply_omega_minus(k2, 0, End::Head, "c0a1", 1);
  const auto p = fundamental_presentation(moved);
  CHECK(p.generators.size() == 4);
  CHECK(p.relations.size() == 3);
  // renamed a b c d -> c0a0 c0a1 c0a2 c0a3, this is the K1 presentation
  CHECK(p == fundamental_presentation(support::load_diagram("k1.txt")));
  CHECK(render_diagram(moved) == "open: 2O+ 1U+ om1O+ 2U+ 1O+ om1U+\n");

  const auto trivial = parse_diagram("open:");
  for (int sign : {1, -1}) {
    const auto head = fundamental_presentation(apply_omega_minus(trivial, 0, End::Head, "c0a0", sign));
    CHECK(head.relations == std::vector<Relation>{{QuandleWord::generator("c0a1"), QuandleWord{"c0a0", {{"c0a0", sign}}}}});
    const auto leg = fundamental_presentation(apply_omega_minus(trivial, 0, End::Leg, "c0a0", sign));
    CHECK(leg.relations == std::vector<Relation>{{QuandleWord::generator("c0a1"), QuandleWord{"c0a0", {{"c0a1", sign}}}}});
    for (const auto& q : targets()) {
      CHECK(counting_invariant(head, q) == q.size());
      CHECK(counting_invariant(leg, q) == q.size());
    }
  }

  CHECK(code_of([] { apply_omega_minus(support::load_diagram("l.txt"), 1, End::Head, "c0a0", 1); }) ==
        ErrorCode::NotOpenComponent);
  CHECK(code_of([&] { apply_omega_minus(k2, 0, End::Head, "c3a0", 1); }) == ErrorCode::UnknownArc);

  SUBCASE("shape of the new presentation") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      const auto d = support::random_diagram(rng, static_cast<std::size_t>(trial % 6));
      const auto before = fundamental_presentation(d);
      const auto layout = derive_arcs(d);
      const auto& over = layout.arcs[std::uniform_int_distribution<std::size_t>(0, layout.arcs.size() - 1)(rng)].id;
      const auto end = trial % 2 ? End::Head : End::Leg;
      const auto after = fundamental_presentation(apply_omega_minus(d, 0, end, over, trial % 3 ? 1 : -1));
      CHECK(after.generators.size() == before.generators.size() + 1);
      CHECK(after.relations.size() == before.relations.size() + 1);
      for (const auto& q : targets()) CHECK(counting_invariant(after, q) == counting_invariant(before, q));
    }
  }
}

TEST_CASE("Reidemeister insertions") {
  const auto trivial = parse_diagram("open:");
  for (int sign : {1, -1}) {
    for (bool over_first : {true, false}) {
      const auto kink = apply_r1(trivial, 0, 0, sign, over_first);
      CHECK(kink.crossing_ids() == std::vector<Token>{"r1"});
      auto p = fundamental_presentation(kink);
      p.basepoints.clear();
      CHECK(tietze_eliminate(p).generators.size() == 1);
      CHECK(tietze_eliminate(p).relations.empty());
      for (const auto& q : targets()) CHECK(counting_invariant(p, q) == q.size());
    }
  }
  CHECK(code_of([&] { apply_r1(trivial, 0, 1, 1, true); }) == ErrorCode::InvalidPosition);
  CHECK(code_of([&] { apply_r1(trivial, 1, 0, 1, true); }) == ErrorCode::InvalidPosition);
  CHECK(code_of([&] { apply_r2(trivial, 0, 0, 0, 2, 1); }) == ErrorCode::InvalidPosition);

  const auto r2 = apply_r2(support::load_diagram("k2.txt"), 0, 1, 0, 3, 1);
  CHECK(render_diagram(r2) == "open: 2O+ r1O+ r2O- 1U+ 2U+ r1U+ r2U- 1O+\n");

  SUBCASE("matrices of fixtures are unchanged") {
    std::mt19937 rng(31);
    const auto& census = support::census_up_to(3);
    for (int trial = 0; trial < 60; ++trial) {
      const auto* name = std::vector<const char*>{"k1.txt", "k2.txt", "l.txt"}[static_cast<std::size_t>(trial % 3)];
      const auto d = support::load_diagram(name);
      const auto ci = std::uniform_int_distribution<std::size_t>(0, d.components().size() - 1)(rng);
      const auto gap = [&](std::size_t c) {
        return std::uniform_int_distribution<std::size_t>(0, d.components()[c].passages.size())(rng);
      };
      LinkoidDiagram moved;
      if (trial % 2) {
        moved = apply_r1(d, ci, gap(ci), trial % 4 == 1 ? 1 : -1, trial % 3 == 0);
      } else {
        const auto cj = std::uniform_int_distribution<std::size_t>(0, d.components().size() - 1)(rng);
        moved = apply_r2(d, ci, gap(ci), cj, gap(cj), trial % 4 == 0 ? 1 : -1);
      }
      const auto before = fundamental_presentation(d);
      const auto after = fundamental_presentation(moved);
      for (const auto& q : census) CHECK(counting_matrix(after, q) == counting_matrix(before, q));
      for (const auto& q : targets()) CHECK(counting_invariant(tietze_eliminate(after), q) == counting_invariant(before, q));
    }
  }
}
