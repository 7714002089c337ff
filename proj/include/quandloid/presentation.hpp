#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandloid/error.hpp"

namespace quandloid {

using Token = std::string;

struct WordStep {
  Token generator;
  int exponent = 1;  // +1 for ◁, -1 for ◁⁻¹
  friend bool operator==(const WordStep&, const WordStep&) = default;
};

/// Left-nested word ((base ◁^e1 g1) ◁^e2 g2) ...
struct QuandleWord {
  Token base;
  std::vector<WordStep> tail;

  static QuandleWord generator(Token g) { return QuandleWord{std::move(g), {}}; }
  bool is_generator() const noexcept { return tail.empty(); }
  bool mentions(const Token& g) const;
  std::size_t length() const noexcept { return 1 + tail.size(); }
  friend bool operator==(const QuandleWord&, const QuandleWord&) = default;
};

struct Relation {
  QuandleWord lhs;
  QuandleWord rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Generators, relations lhs = rhs, and an ordered basepoint list
/// (leg, head per open component for diagram-derived presentations).
struct QuandlePresentation {
  std::vector<Token> generators;
  std::vector<Relation> relations;
  std::vector<Token> basepoints;

  /// UnknownGenerator if a relation or basepoint uses an undeclared token;
  /// InvalidArgument on duplicate generators.
  void validate() const;
  std::optional<std::size_t> index_of(const Token& g) const;

  friend bool operator==(const QuandlePresentation&, const QuandlePresentation&) = default;
};

/// "gens: a b c" / "rel: b = a*c" / "base: a c"; '#' starts a comment.
/// Words are a base token followed by *g or /g segments, no parentheses.
QuandlePresentation parse_presentation(std::string_view text);
std::string render_presentation(const QuandlePresentation& p);

QuandleWord parse_word(std::string_view text);
std::string render_word(const QuandleWord& w);

/// Blocks of generators linked by lhs-base = rhs-base in some relation.
/// Operator-position generators do not merge. Blocks follow generator order.
std::vector<std::vector<Token>> presentation_components(const QuandlePresentation& p);

struct TietzeOptions {
  /// Maximum growth (in word letters) any single relation may suffer from a
  /// substitution. 0 keeps the presentation from lengthening; nullopt
  /// eliminates every eligible generator.
  std::optional<std::size_t> max_growth = 0;
};

/// Repeatedly removes a non-basepoint generator g defined by a relation
/// g = w (or w = g) with g not in w, substituting w for g elsewhere. A
/// relation h = u ◁^e h is first rewritten to h = u.
QuandlePresentation tietze_eliminate(const QuandlePresentation& p, const TietzeOptions& options = {});

/// Word for x ◁^exponent w, expanded to left-nested form using
/// β_{y ◁^e z} = β_z^e β_y β_z^{-e}, with adjacent inverse steps cancelled.
std::vector<WordStep> act_by_word(int exponent, const QuandleWord& w);

/// Closes a presentation with basepoints (l, h) along a shortcut: adds
/// ((h ◁^e1 c1) ◁^e2 c2) ... = l and clears the basepoints.
QuandlePresentation add_closure_relation(const QuandlePresentation& p, const std::vector<WordStep>& shortcut);

/// Parses "b+ c-" into shortcut steps.
std::vector<WordStep> parse_shortcut(std::string_view text);

/// Presentation-level forbidden under-move. The endpoint at basepoint
/// `basepoint_index` passes under `over` and a fresh generator c becomes the
/// new endpoint: c = h ◁^sign over at a head (odd index), l = c ◁^sign over
/// at a leg (even index).
QuandlePresentation omega_minus_presentation(const QuandlePresentation& p, std::size_t basepoint_index,
                                             const Token& over, int sign);

/// First token of the form <prefix><n>, n = 1, 2, ..., not in `taken`.
Token fresh_token(const std::vector<Token>& taken, std::string_view prefix);

}  // namespace quandloid
