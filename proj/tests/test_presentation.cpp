#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "quandloid/coloring.hpp"
#include "quandloid/presentation.hpp"
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

std::vector<std::int64_t> witness_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.witness();
  }
  return {};
}

const std::vector<FiniteQuandle>& small_targets() {
  static const std::vector<FiniteQuandle> targets{make_dihedral(3), make_trivial(3), make_v3(), make_tetrahedron(),
                                                  make_dihedral(5)};
  return targets;
}

QuandlePresentation random_presentation(std::mt19937& rng, std::size_t gens, std::size_t rels, std::size_t max_tail) {
  QuandlePresentation p;
  for (std::size_t i = 0; i < gens; ++i) p.generators.push_back("g" + std::to_string(i));
  auto pick = [&] { return p.generators[std::uniform_int_distribution<std::size_t>(0, gens - 1)(rng)]; };
  auto word = [&] {
    QuandleWord w{pick(), {}};
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_tail)(rng);
    for (std::size_t i = 0; i < len; ++i) w.tail.push_back({pick(), std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    return w;
  };
  for (std::size_t i = 0; i < rels; ++i) {
    // mostly the diagram shape: bare generator = word
    p.relations.push_back({std::uniform_int_distribution<int>(0, 3)(rng) ? QuandleWord::generator(pick()) : word(), word()});
  }
  return p;
}

}  // namespace

TEST_CASE("presentation text round trip") {
  const auto k1 = support::load_presentation("k1.pres");
  CHECK(k1.generators == std::vector<Token>{"a", "b", "c", "d"});
  REQUIRE(k1.relations.size() == 3);
  CHECK(k1.relations[2] == Relation{QuandleWord::generator("d"), parse_word("c*b")});
  CHECK(k1.basepoints == std::vector<Token>{"a", "d"});
  CHECK(parse_presentation(render_presentation(k1)) == k1);

  const auto text = "gens: x y z\nrel: x/y*z = y   # comment\n\nbase: z x\n";
  const auto p = parse_presentation(text);
  CHECK(render_presentation(p) == "gens: x y z\nrel: x/y*z = y\nbase: z x\n");
  CHECK(render_word(p.relations[0].lhs) == "x/y*z");
  CHECK(p.relations[0].lhs.tail == std::vector<WordStep>{{"y", -1}, {"z", 1}});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = random_presentation(rng, 4, 3, 3);
    q.basepoints = {q.generators[1], q.generators[0]};
    CHECK(parse_presentation(render_presentation(q)) == q);
  }
}

TEST_CASE("presentation syntax errors carry line and column") {
  CHECK(code_of([] { parse_presentation("gens: a\nrel: a = (a*a)\n"); }) == ErrorCode::SyntaxError);
  CHECK(witness_of([] { parse_presentation("gens: a\nrel: a = (a*a)\n"); }) == std::vector<std::int64_t>{2, 10});
  CHECK(witness_of([] { parse_presentation("gens: a\nrel: a a\n"); }) == std::vector<std::int64_t>{2, 8});
  CHECK(code_of([] { parse_presentation("gen: a\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("gens: a\nrel: a = b\n"); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([] { parse_presentation("gens: a a\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_presentation("gens: a\nbase: q\n"); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([] { parse_word("a*"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("presentation_components") {
  using Blocks = std::vector<std::vector<Token>>;
  CHECK(presentation_components(support::load_presentation("k1.pres")) == Blocks{{"a", "b", "c", "d"}});
  CHECK(presentation_components(parse_presentation("gens: x y")) == Blocks{{"x"}, {"y"}});
  CHECK(presentation_components(support::load_presentation("l.pres")) == Blocks{{"a", "b"}, {"c", "d"}});
  // operator position does not merge
  CHECK(presentation_components(parse_presentation("gens: x y\nrel: x = x*y")) == Blocks{{"x"}, {"y"}});
}

TEST_CASE("act_by_word expands conjugation") {
  CHECK(act_by_word(1, parse_word("b")) == std::vector<WordStep>{{"b", 1}});
  CHECK(act_by_word(1, parse_word("a*c")) == std::vector<WordStep>{{"c", -1}, {"a", 1}, {"c", 1}});
  CHECK(act_by_word(-1, parse_word("a*c/d")) ==
        std::vector<WordStep>{{"d", 1}, {"c", -1}, {"a", -1}, {"c", 1}, {"d", -1}});
  // x ◁ (y ◁ z) evaluated both ways in every target
  for (const auto& q : small_targets()) {
    const auto k = static_cast<Element>(q.size());
    for (Element x = 0; x < k; ++x)
      for (Element y = 0; y < k; ++y)
        for (Element z = 0; z < k; ++z) {
          std::map<Token, Element> a{{"x", x}, {"y", y}, {"z", z}};
          QuandleWord expanded{"x", act_by_word(-1, parse_word("y*z"))};
          CHECK(evaluate_word(expanded, a, q) == q.inv_op(x, q.op(y, z)));
        }
  }
}

TEST_CASE("tietze_eliminate") {
  auto k1 = support::load_presentation("k1.pres");
  CHECK(tietze_eliminate(k1) == k1);  // d is a basepoint, b and c would lengthen
  k1.basepoints.clear();
  CHECK(tietze_eliminate(k1) == parse_presentation("gens: a b c\nrel: b = a*c\nrel: c = b*a\n"));

  CHECK(tietze_eliminate(parse_presentation("gens: x y\nrel: y = x")) == parse_presentation("gens: x"));
  CHECK(tietze_eliminate(parse_presentation("gens: x y\nrel: y = x\nbase: y")) ==
        parse_presentation("gens: y\nbase: y"));
  // h = u * h peels to h = u, which then eliminates
  CHECK(tietze_eliminate(parse_presentation("gens: g h\nrel: h = g*h")) == parse_presentation("gens: g"));

  TietzeOptions full;
  full.max_growth = std::nullopt;
  CHECK(tietze_eliminate(k1, full).generators.size() == 2);

  SUBCASE("counts are preserved in both modes") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
      auto p = random_presentation(rng, 1 + trial % 5, trial % 4, 3);
      if (trial % 3 == 0) p.basepoints = {p.generators[0]};
      for (const auto& options : {TietzeOptions{}, full}) {
        const auto reduced = tietze_eliminate(p, options);
        CHECK(reduced.generators.size() <= p.generators.size());
        for (const auto& b : p.basepoints) CHECK(reduced.index_of(b).has_value());
        for (const auto& q : small_targets()) {
          CHECK(counting_invariant(reduced, q) == counting_invariant(p, q));
          if (!p.basepoints.empty()) {
            for (Element v = 0; v < static_cast<Element>(q.size()); ++v) {
              CHECK(pointed_counting_invariant(reduced, PointedQuandle(q, {v})) ==
                    pointed_counting_invariant(p, PointedQuandle(q, {v})));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("add_closure_relation") {
  const auto k2 = support::load_presentation("k2.pres");
  const auto closed = add_closure_relation(k2, parse_shortcut("b+"));
  CHECK(closed.basepoints.empty());
  CHECK(closed.relations.back() == Relation{parse_word("c*b"), parse_word("a")});
  CHECK(counting_invariant(closed, make_dihedral(3)) == 9);

  const auto link_type = add_closure_relation(k2, {});
  CHECK(link_type.relations.back() == Relation{parse_word("c"), parse_word("a")});

  CHECK(code_of([&] { add_closure_relation(k2, parse_shortcut("q+")); }) == ErrorCode::UnknownArc);
  CHECK(code_of([] { add_closure_relation(parse_presentation("gens: a"), {}); }) == ErrorCode::ArityMismatch);
  CHECK(parse_shortcut("b+ c-, a+") == std::vector<WordStep>{{"b", 1}, {"c", -1}, {"a", 1}});
  CHECK(code_of([] { parse_shortcut("b"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("presentation-level forbidden move") {
  const auto k2 = support::load_presentation("k2.pres");
  const auto moved = omega_minus_presentation(k2, 1, "b", 1);
  CHECK(moved.generators.back() == "om1");
  CHECK(moved.relations.back() == Relation{parse_word("om1"), parse_word("c*b")});
  CHECK(moved.basepoints == std::vector<Token>{"a", "om1"});
  // same shape as K1 up to the name of d
  auto k1 = support::load_presentation("k1.pres");
  for (const auto& q : small_targets()) {
    CHECK(counting_matrix(moved, q) == counting_matrix(k1, q));
    CHECK(counting_invariant(moved, q) == counting_invariant(k2, q));
  }
  const auto at_leg = omega_minus_presentation(k2, 0, "c", -1);
  CHECK(at_leg.relations.back() == Relation{parse_word("a"), parse_word("om1/c")});
  CHECK(at_leg.basepoints.front() == "om1");
  CHECK(code_of([&] { omega_minus_presentation(k2, 2, "b", 1); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([&] { omega_minus_presentation(k2, 0, "z", 1); }) == ErrorCode::UnknownArc);
  CHECK(fresh_token({"om1", "om2"}, "om") == "om3");
}
