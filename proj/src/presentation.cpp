#include "quandloid/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace quandloid {

bool QuandleWord::mentions(const Token& g) const {
  return base == g || std::any_of(tail.begin(), tail.end(), [&](const WordStep& s) { return s.generator == g; });
}

std::optional<std::size_t> QuandlePresentation::index_of(const Token& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

void QuandlePresentation::validate() const {
  std::set<Token> declared;
  for (const auto& g : generators) {
    if (!declared.insert(g).second) throw Error(ErrorCode::InvalidArgument, "duplicate generator " + g, {}, g);
  }
  auto require = [&](const Token& g) {
    if (!declared.count(g)) throw Error(ErrorCode::UnknownGenerator, "undeclared generator " + g, {}, g);
  };
  for (const auto& r : relations) {
    for (const auto* w : {&r.lhs, &r.rhs}) {
      require(w->base);
      for (const auto& s : w->tail) {
        require(s.generator);
        if (s.exponent != 1 && s.exponent != -1) throw Error(ErrorCode::InvalidArgument, "exponent must be +1 or -1");
      }
    }
  }
  for (const auto& b : basepoints) require(b);
}

// ---------------------------------------------------------------------------
// text format

namespace {

bool is_token_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col_offset = 0;  // column of text[0] within the source line, 1-based minus one

  [[noreturn]] void fail(const std::string& what) const {
    const auto col = col_offset + pos + 1;
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what,
                {std::int64_t(line), std::int64_t(col)});
  }
  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  Token token() {
    skip_space();
    auto start = pos;
    while (pos < text.size() && is_token_char(text[pos])) ++pos;
    if (start == pos) fail("expected a generator name");
    return Token(text.substr(start, pos - start));
  }
  QuandleWord word() {
    QuandleWord w;
    w.base = token();
    while (true) {
      skip_space();
      if (pos >= text.size() || (text[pos] != '*' && text[pos] != '/')) break;
      int e = text[pos] == '*' ? 1 : -1;
      ++pos;
      w.tail.push_back({token(), e});
    }
    return w;
  }
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

QuandleWord parse_word(std::string_view text) {
  Cursor c{text};
  auto w = c.word();
  if (!c.done()) c.fail("unexpected character in word");
  return w;
}

std::string render_word(const QuandleWord& w) {
  std::string out = w.base;
  for (const auto& s : w.tail) {
    out += s.exponent > 0 ? '*' : '/';
    out += s.generator;
  }
  return out;
}

QuandlePresentation parse_presentation(std::string_view text) {
  QuandlePresentation p;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto line = strip_comment(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Cursor c{line, 0, line_no, 0};
    if (c.done()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) c.fail("expected 'gens:', 'rel:' or 'base:'");
    std::string key;
    for (char ch : line.substr(0, colon)) {
      if (ch != ' ' && ch != '\t') key += ch;
    }
    Cursor body{line.substr(colon + 1), 0, line_no, colon + 1};
    if (key == "gens") {
      while (!body.done()) p.generators.push_back(body.token());
    } else if (key == "base") {
      while (!body.done()) p.basepoints.push_back(body.token());
    } else if (key == "rel") {
      Relation r;
      r.lhs = body.word();
      body.skip_space();
      if (body.pos >= body.text.size() || body.text[body.pos] != '=') body.fail("expected '='");
      ++body.pos;
      r.rhs = body.word();
      if (!body.done()) body.fail("unexpected trailing characters");
      p.relations.push_back(std::move(r));
    } else {
      c.fail("unknown key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

std::string render_presentation(const QuandlePresentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relations) out << "rel: " << render_word(r.lhs) << " = " << render_word(r.rhs) << '\n';
  if (!p.basepoints.empty()) {
    out << "base:";
    for (const auto& b : p.basepoints) out << ' ' << b;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// components

std::vector<std::vector<Token>> presentation_components(const QuandlePresentation& p) {
  const auto n = p.generators.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : p.relations) {
    auto a = p.index_of(r.lhs.base);
    auto b = p.index_of(r.rhs.base);
    if (!a || !b) throw Error(ErrorCode::UnknownGenerator, "relation uses an undeclared generator");
    auto ra = find(*a), rb = find(*b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<Token>> blocks;
  std::vector<std::size_t> block_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto root = find(i);
    if (block_of_root[root] == n) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(p.generators[i]);
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Tietze elimination

namespace {

// base ◁^e base = base, and x ◁^e g ◁^-e g = x
void simplify(QuandleWord& w) {
  std::vector<WordStep> reduced;
  for (auto& s : w.tail) {
    if (!reduced.empty() && reduced.back().generator == s.generator && reduced.back().exponent == -s.exponent) {
      reduced.pop_back();
      continue;
    }
    if (reduced.empty() && s.generator == w.base) continue;
    reduced.push_back(std::move(s));
  }
  w.tail = std::move(reduced);
}

QuandleWord substitute(const QuandleWord& word, const Token& g, const QuandleWord& w) {
  QuandleWord out;
  if (word.base == g) {
    out.base = w.base;
    out.tail = w.tail;
  } else {
    out.base = word.base;
  }
  for (const auto& s : word.tail) {
    if (s.generator == g) {
      auto expanded = act_by_word(s.exponent, w);
      out.tail.insert(out.tail.end(), expanded.begin(), expanded.end());
    } else {
      out.tail.push_back(s);
    }
  }
  simplify(out);
  return out;
}

std::size_t relation_length(const Relation& r) { return r.lhs.length() + r.rhs.length(); }

// h = u ◁^e h  =>  h = u, since h ◁^-e h = h
bool peel_self_action(Relation& r) {
  bool changed = false;
  for (int side = 0; side < 2; ++side) {
    auto& bare = side == 0 ? r.lhs : r.rhs;
    auto& other = side == 0 ? r.rhs : r.lhs;
    while (bare.is_generator() && !other.tail.empty() && other.tail.back().generator == bare.base) {
      other.tail.pop_back();
      changed = true;
    }
  }
  return changed;
}

void normalize(QuandlePresentation& p) {
  for (auto& r : p.relations) {
    simplify(r.lhs);
    simplify(r.rhs);
    peel_self_action(r);
  }
  std::erase_if(p.relations, [](const Relation& r) { return r.lhs == r.rhs; });
}

}  // namespace

std::vector<WordStep> act_by_word(int exponent, const QuandleWord& w) {
  std::vector<WordStep> steps;
  for (auto it = w.tail.rbegin(); it != w.tail.rend(); ++it) steps.push_back({it->generator, -it->exponent});
  steps.push_back({w.base, exponent});
  steps.insert(steps.end(), w.tail.begin(), w.tail.end());
  // cancel adjacent inverse pairs
  std::vector<WordStep> reduced;
  for (auto& s : steps) {
    if (!reduced.empty() && reduced.back().generator == s.generator && reduced.back().exponent == -s.exponent) {
      reduced.pop_back();
    } else {
      reduced.push_back(std::move(s));
    }
  }
  return reduced;
}

QuandlePresentation tietze_eliminate(const QuandlePresentation& input, const TietzeOptions& options) {
  input.validate();
  QuandlePresentation p = input;
  const std::set<Token> pinned(p.basepoints.begin(), p.basepoints.end());

  while (true) {
    normalize(p);
    bool eliminated = false;
    for (std::size_t i = 0; i < p.relations.size() && !eliminated; ++i) {
      for (int side = 0; side < 2 && !eliminated; ++side) {
        const auto& r = p.relations[i];
        const auto& bare = side == 0 ? r.lhs : r.rhs;
        const auto& definition = side == 0 ? r.rhs : r.lhs;
        if (!bare.is_generator()) continue;
        const Token g = bare.base;
        if (pinned.count(g) || definition.mentions(g)) continue;

        std::vector<Relation> rewritten;
        bool acceptable = true;
        for (std::size_t j = 0; j < p.relations.size(); ++j) {
          if (j == i) continue;
          Relation next{substitute(p.relations[j].lhs, g, definition), substitute(p.relations[j].rhs, g, definition)};
          const auto before = relation_length(p.relations[j]);
          const auto after = relation_length(next);
          if (options.max_growth && after > before + *options.max_growth) {
            acceptable = false;
            break;
          }
          rewritten.push_back(std::move(next));
        }
        if (!acceptable) continue;
        p.relations = std::move(rewritten);
        std::erase(p.generators, g);
        eliminated = true;
      }
    }
    if (!eliminated) break;
  }
  return p;
}

// ---------------------------------------------------------------------------
// closure and presentation-level moves

QuandlePresentation add_closure_relation(const QuandlePresentation& p, const std::vector<WordStep>& shortcut) {
  p.validate();
  if (p.basepoints.size() != 2) {
    throw Error(ErrorCode::ArityMismatch, "closure needs a presentation with exactly two basepoints (leg, head)",
                {std::int64_t(p.basepoints.size())});
  }
  for (const auto& s : shortcut) {
    if (!p.index_of(s.generator)) throw Error(ErrorCode::UnknownArc, "shortcut arc " + s.generator + " not in presentation", {}, s.generator);
    if (s.exponent != 1 && s.exponent != -1) throw Error(ErrorCode::InvalidArgument, "shortcut sign must be + or -");
  }
  QuandlePresentation out = p;
  out.relations.push_back({QuandleWord{p.basepoints[1], shortcut}, QuandleWord::generator(p.basepoints[0])});
  out.basepoints.clear();
  return out;
}

std::vector<WordStep> parse_shortcut(std::string_view text) {
  std::vector<WordStep> steps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',') {
      ++pos;
      continue;
    }
    auto start = pos;
    while (pos < text.size() && is_token_char(text[pos])) ++pos;
    if (start == pos || pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) {
      throw Error(ErrorCode::SyntaxError, "shortcut steps look like 'b+' or 'c-'",
                  {1, std::int64_t(std::min(pos, text.size()) + 1)});
    }
    steps.push_back({Token(text.substr(start, pos - start)), text[pos] == '+' ? 1 : -1});
    ++pos;
  }
  return steps;
}

Token fresh_token(const std::vector<Token>& taken, std::string_view prefix) {
  for (std::size_t n = 1;; ++n) {
    Token candidate = std::string(prefix) + std::to_string(n);
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
  }
}

QuandlePresentation omega_minus_presentation(const QuandlePresentation& p, std::size_t basepoint_index,
                                             const Token& over, int sign) {
  p.validate();
  if (basepoint_index >= p.basepoints.size()) {
    throw Error(ErrorCode::ArityMismatch, "no basepoint at index " + std::to_string(basepoint_index),
                {std::int64_t(basepoint_index)});
  }
  if (!p.index_of(over)) throw Error(ErrorCode::UnknownArc, "unknown arc " + over, {}, over);
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");

  QuandlePresentation out = p;
  const Token endpoint = p.basepoints[basepoint_index];
  const Token fresh = fresh_token(p.generators, "om");
  out.generators.push_back(fresh);
  if (basepoint_index % 2 == 1) {
    out.relations.push_back({QuandleWord::generator(fresh), QuandleWord{endpoint, {{over, sign}}}});
  } else {
    out.relations.push_back({QuandleWord::generator(endpoint), QuandleWord{fresh, {{over, sign}}}});
  }
  out.basepoints[basepoint_index] = fresh;
  return out;
}

}  // namespace quandloid
