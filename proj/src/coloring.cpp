#include "quandloid/coloring.hpp"

#include <algorithm>

namespace quandloid {

Element Coloring::at(const Token& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  if (it == generators.end()) throw Error(ErrorCode::UnknownGenerator, "no generator " + g, {}, g);
  return values[static_cast<std::size_t>(it - generators.begin())];
}

std::map<Token, Element> Coloring::as_map() const {
  std::map<Token, Element> m;
  for (std::size_t i = 0; i < generators.size(); ++i) m[generators[i]] = values[i];
  return m;
}

Element evaluate_word(const QuandleWord& w, const std::map<Token, Element>& assignment, const FiniteQuandle& q) {
  auto lookup = [&](const Token& g) {
    auto it = assignment.find(g);
    if (it == assignment.end()) throw Error(ErrorCode::UnassignedGenerator, "generator " + g + " has no color", {}, g);
    return quandle_op(q, it->second, it->second);  // range check; idempotent
  };
  Element value = lookup(w.base);
  for (const auto& s : w.tail) {
    const auto by = lookup(s.generator);
    value = s.exponent > 0 ? q.op(value, by) : q.inv_op(value, by);
  }
  return value;
}

namespace {

struct CompiledWord {
  std::size_t base;
  std::vector<std::pair<std::size_t, int>> steps;
};

struct CompiledRelation {
  CompiledWord lhs;
  CompiledWord rhs;
};

class ColoringSearch {
 public:
  ColoringSearch(const QuandlePresentation& p, const FiniteQuandle& q) : q_(q) {
    p.validate();
    auto compile = [&](const QuandleWord& w) {
      CompiledWord c{*p.index_of(w.base), {}};
      for (const auto& s : w.tail) c.steps.emplace_back(*p.index_of(s.generator), s.exponent);
      return c;
    };
    for (const auto& r : p.relations) relations_.push_back({compile(r.lhs), compile(r.rhs)});
  }

  void run(std::vector<Element> values, const std::function<void(const std::vector<Element>&)>& visit) {
    if (propagate(values)) recurse(values, visit);
  }

 private:
  static constexpr Element kFree = -1;

  std::optional<Element> evaluate(const CompiledWord& w, const std::vector<Element>& values) const {
    Element v = values[w.base];
    if (v == kFree) return std::nullopt;
    for (auto [g, e] : w.steps) {
      if (values[g] == kFree) return std::nullopt;
      v = e > 0 ? q_.op(v, values[g]) : q_.inv_op(v, values[g]);
    }
    return v;
  }

  // base value that makes w evaluate to `target`, if every step is colored
  std::optional<Element> solve_base(const CompiledWord& w, Element target, const std::vector<Element>& values) const {
    Element v = target;
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
      const auto by = values[it->first];
      if (by == kFree) return std::nullopt;
      v = it->second > 0 ? q_.inv_op(v, by) : q_.op(v, by);
    }
    return v;
  }

  bool propagate(std::vector<Element>& values) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : relations_) {
        auto left = evaluate(r.lhs, values);
        auto right = evaluate(r.rhs, values);
        if (left && right) {
          if (*left != *right) return false;
          continue;
        }
        if (!left && !right) continue;
        const auto& open = left ? r.rhs : r.lhs;
        if (values[open.base] != kFree) continue;
        if (auto base = solve_base(open, left ? *left : *right, values)) {
          values[open.base] = *base;
          changed = true;
        }
      }
    }
    return true;
  }

  void recurse(std::vector<Element>& values, const std::function<void(const std::vector<Element>&)>& visit) const {
    auto next = std::find(values.begin(), values.end(), kFree);
    if (next == values.end()) {
      visit(values);
      return;
    }
    const auto index = static_cast<std::size_t>(next - values.begin());
    for (std::size_t v = 0; v < q_.size(); ++v) {
      auto trial = values;
      trial[index] = static_cast<Element>(v);
      if (propagate(trial)) recurse(trial, visit);
    }
  }

  const FiniteQuandle& q_;
  std::vector<CompiledRelation> relations_;
};

std::vector<Element> pinned_start(const QuandlePresentation& p, const FiniteQuandle& q, const Pins& pins) {
  std::vector<Element> values(p.generators.size(), -1);
  for (const auto& [g, v] : pins) {
    auto index = p.index_of(g);
    if (!index) throw Error(ErrorCode::UnknownPinnedGenerator, "pinned generator " + g + " not in presentation", {}, g);
    if (v < 0 || static_cast<std::size_t>(v) >= q.size()) {
      throw Error(ErrorCode::PinOutOfRange, "pin " + g + " -> " + std::to_string(v) + " outside quandle", {v}, g);
    }
    values[*index] = v;
  }
  return values;
}

void checked_add(Count& c, Count v) {
  if (__builtin_add_overflow(c, v, &c)) throw Error(ErrorCode::CountOverflow, "coloring count overflow");
}

void checked_increment(Count& c) { checked_add(c, 1); }

// Generators mentioned by no relation and not pinned multiply the count by
// |Q| each; counting them apart keeps the search small and lets the product
// overflow visibly.
Count count_colorings(const QuandlePresentation& p, const FiniteQuandle& q, const Pins& pins) {
  QuandlePresentation core = p;
  core.basepoints.clear();
  std::size_t free = 0;
  std::erase_if(core.generators, [&](const Token& g) {
    if (pins.count(g)) return false;
    for (const auto& r : p.relations) {
      if (r.lhs.mentions(g) || r.rhs.mentions(g)) return false;
    }
    ++free;
    return true;
  });
  Count count = 0;
  for_each_coloring(core, q, pins, [&](const std::vector<Element>&) { checked_increment(count); });
  for (std::size_t i = 0; i < free; ++i) {
    if (__builtin_mul_overflow(count, Count{q.size()}, &count)) {
      throw Error(ErrorCode::CountOverflow, "coloring count overflow");
    }
  }
  return count;
}

}  // namespace

void for_each_coloring(const QuandlePresentation& p, const FiniteQuandle& q, const Pins& pins,
                       const std::function<void(const std::vector<Element>&)>& visit) {
  ColoringSearch search(p, q);
  search.run(pinned_start(p, q, pins), visit);
}

std::vector<Coloring> enumerate_colorings(const QuandlePresentation& p, const FiniteQuandle& q, const Pins& pins) {
  std::vector<Coloring> result;
  for_each_coloring(p, q, pins, [&](const std::vector<Element>& values) {
    result.push_back({p.generators, values});
  });
  return result;
}

Count counting_invariant(const QuandlePresentation& p, const FiniteQuandle& q) {
  p.validate();
  return count_colorings(p, q, {});
}

Count pointed_counting_invariant(const QuandlePresentation& p, const PointedQuandle& target) {
  if (p.basepoints.size() != target.arity()) {
    throw Error(ErrorCode::ArityMismatch, "presentation has " + std::to_string(p.basepoints.size()) +
                                              " basepoints, target has " + std::to_string(target.arity()),
                {std::int64_t(p.basepoints.size()), std::int64_t(target.arity())});
  }
  Pins pins;
  for (std::size_t i = 0; i < target.arity(); ++i) {
    auto [it, inserted] = pins.emplace(p.basepoints[i], target.basepoints()[i]);
    // one arc carrying two basepoints cannot take two colors
    if (!inserted && it->second != target.basepoints()[i]) return 0;
  }
  p.validate();
  return count_colorings(p, target.quandle(), pins);
}

// ---------------------------------------------------------------------------
// counting matrix

Count CountingMatrix::trace() const {
  Count t = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) checked_add(t, entries[i][i]);
  return t;
}

Count CountingMatrix::sum() const {
  Count s = 0;
  for (const auto& row : entries) {
    for (auto v : row) checked_add(s, v);
  }
  return s;
}

bool CountingMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (entries[i][j] != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

namespace {

void require_two_basepoints(const QuandlePresentation& p) {
  if (p.basepoints.size() != 2) {
    throw Error(ErrorCode::ArityMismatch, "counting matrix needs exactly two basepoints (leg, head)",
                {std::int64_t(p.basepoints.size())});
  }
}

}  // namespace

CountingMatrix counting_matrix(const QuandlePresentation& p, const FiniteQuandle& q) {
  require_two_basepoints(p);
  const auto leg = *p.index_of(p.basepoints[0]);
  const auto head = *p.index_of(p.basepoints[1]);
  CountingMatrix m{q, std::vector<std::vector<Count>>(q.size(), std::vector<Count>(q.size(), 0))};
  for_each_coloring(p, q, {}, [&](const std::vector<Element>& values) {
    checked_increment(m.entries[static_cast<std::size_t>(values[leg])][static_cast<std::size_t>(values[head])]);
  });
  return m;
}

CountingMatrix counting_matrix_per_entry(const QuandlePresentation& p, const FiniteQuandle& q) {
  require_two_basepoints(p);
  CountingMatrix m{q, std::vector<std::vector<Count>>(q.size(), std::vector<Count>(q.size(), 0))};
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      m.entries[i][j] =
          pointed_counting_invariant(p, PointedQuandle(q, {static_cast<Element>(i), static_cast<Element>(j)}));
    }
  }
  return m;
}

MatrixReport matrix_report(const CountingMatrix& m, bool link_type, const Caps& caps) {
  MatrixReport report;
  const auto& q = m.target;
  const auto k = q.size();
  const auto& e = m.entries;
  report.trace = m.trace();
  report.sum = m.sum();
  report.is_identity = m.is_identity();
  // constant colorings always exist, so "only trivial" means exactly k colorings
  report.only_trivial_colorings = report.sum == k;

  for (std::size_t i = 0; i < k; ++i) {
    if (e[i][i] < 1) report.diagonal_positive = false;
  }
  if (!report.diagonal_positive) report.violations.push_back("diagonal entry below 1");
  if (report.is_identity != report.only_trivial_colorings) {
    report.violations.push_back("identity matrix does not match trivial-colorability");
  }

  std::optional<GroupOfPermutations> aut;
  try {
    aut = automorphism_group(q, caps);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::SizeCapExceeded) throw;
  }
  if (aut && aut->orbits().size() == 1) {
    bool equal = true;
    for (std::size_t i = 1; i < k; ++i) equal = equal && e[i][i] == e[0][0];
    report.homogeneous_diagonal_equal = equal;
    if (!equal) report.violations.push_back("homogeneous target but diagonal entries differ");
  }
  if (aut && k >= 2 && is_n_homogeneous(q, 2, caps)) {
    bool equal = true;
    const auto reference = e[0][1];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j) equal = equal && e[i][j] == reference;
      }
    }
    report.two_homogeneous_off_diagonal_equal = equal;
    if (!equal) report.violations.push_back("2-homogeneous target but off-diagonal entries differ");
  }
  for (const auto& block : algebraic_components(q)) {
    for (auto x : block) {
      const auto first = static_cast<std::size_t>(block.front());
      if (e[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] != e[first][first]) {
        report.component_diagonal_equal = false;
      }
    }
  }
  if (!report.component_diagonal_equal) {
    report.violations.push_back("diagonal differs within an algebraic component");
  }
  if (link_type) {
    report.closure_count = report.trace;
    if (is_faithful(q)) {
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i != j) zero = zero && e[i][j] == 0;
        }
      }
      report.faithful_off_diagonal_zero = zero;
      if (!zero) report.violations.push_back("link-type with faithful target but off-diagonal entries nonzero");
    }
  }
  return report;
}

std::vector<Count> pointed_profile(const QuandlePresentation& p, const std::vector<PointedQuandle>& targets) {
  std::vector<Count> profile;
  profile.reserve(targets.size());
  for (const auto& t : targets) profile.push_back(pointed_counting_invariant(p, t));
  return profile;
}

std::vector<PointedQuandle> default_profile_battery(std::size_t max_order, const Caps& caps) {
  std::vector<PointedQuandle> battery;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (const auto& q : enumerate_quandles(n, caps)) {
      for (auto& pair : orbit_classes(q, 2, caps)) battery.emplace_back(q, std::move(pair));
    }
  }
  return battery;
}

}  // namespace quandloid
