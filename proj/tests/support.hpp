#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quandloid/coloring.hpp"
#include "quandloid/diagram.hpp"
#include "quandloid/json_io.hpp"
#include "quandloid/presentation.hpp"
#include "quandloid/quandle.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) { return std::string(QUANDLOID_FIXTURES) + "/" + name; }

inline quandloid::QuandlePresentation load_presentation(const std::string& name) {
  return quandloid::parse_presentation(quandloid::read_file(fixture_path(name)));
}

inline quandloid::LinkoidDiagram load_diagram(const std::string& name) {
  return quandloid::parse_diagram(quandloid::read_file(fixture_path(name)));
}

inline oracle::Table to_table(const quandloid::FiniteQuandle& q) { return q.table(); }

inline oracle::Presentation to_oracle(const quandloid::QuandlePresentation& p) {
  oracle::Presentation out;
  out.generators = static_cast<int>(p.generators.size());
  auto convert = [&](const quandloid::QuandleWord& w) {
    oracle::Word o;
    o.base = static_cast<int>(*p.index_of(w.base));
    for (const auto& s : w.tail) o.steps.emplace_back(static_cast<int>(*p.index_of(s.generator)), s.exponent);
    return o;
  };
  for (const auto& r : p.relations) out.relations.emplace_back(convert(r.lhs), convert(r.rhs));
  return out;
}

/// Census quandles of orders 1..max_order (cached per process).
inline const std::vector<quandloid::FiniteQuandle>& census_up_to(std::size_t max_order) {
  static std::vector<std::vector<quandloid::FiniteQuandle>> cache;
  while (cache.size() < max_order) {
    cache.push_back(cache.empty() ? std::vector<quandloid::FiniteQuandle>{} : cache.back());
    for (auto& q : quandloid::enumerate_quandles(cache.size())) cache.back().push_back(std::move(q));
  }
  return cache[max_order - 1];
}

/// Random extended Gauss code: one open component first, then up to two more
/// components (open or closed), `crossings` crossings spread among them.
inline quandloid::LinkoidDiagram random_diagram(std::mt19937& rng, std::size_t crossings) {
  using namespace quandloid;
  std::vector<Passage> passages;
  for (std::size_t i = 0; i < crossings; ++i) {
    const int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    passages.push_back({"x" + std::to_string(i), Role::Over, sign});
    passages.push_back({"x" + std::to_string(i), Role::Under, sign});
  }
  std::shuffle(passages.begin(), passages.end(), rng);
  const auto extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  std::vector<Component> components(1 + extra);
  for (std::size_t i = 1; i < components.size(); ++i) {
    components[i].kind = std::uniform_int_distribution<int>(0, 1)(rng) ? ComponentKind::Open : ComponentKind::Closed;
  }
  for (auto& p : passages) {
    components[std::uniform_int_distribution<std::size_t>(0, components.size() - 1)(rng)].passages.push_back(p);
  }
  return LinkoidDiagram(std::move(components));
}

/// Same, but with exactly one open component (a 1-linkoid).
inline quandloid::LinkoidDiagram random_one_linkoid(std::mt19937& rng, std::size_t crossings) {
  using namespace quandloid;
  auto d = random_diagram(rng, crossings);
  auto components = d.components();
  for (std::size_t i = 1; i < components.size(); ++i) components[i].kind = ComponentKind::Closed;
  return LinkoidDiagram(std::move(components));
}

}  // namespace support
