#include "quandloid/quandle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "detail/hom_search.hpp"

namespace quandloid {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (auto v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidArgument, "permutation image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> image(degree);
  for (std::size_t i = 0; i < degree; ++i) image[i] = static_cast<Element>(i);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Element>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<Element>(i);
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == static_cast<Element>(start)) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = static_cast<std::size_t>(image_[x]);
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "id" : s;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  std::vector<Element> image(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) image[i] = f(g(static_cast<Element>(i)));
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

// ---------------------------------------------------------------------------
// GroupOfPermutations

GroupOfPermutations GroupOfPermutations::generated_by(std::size_t degree,
                                                      std::span<const Permutation> generators) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    auto current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      auto next = g * current;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  GroupOfPermutations group;
  group.degree_ = degree;
  group.elements_.assign(seen.begin(), seen.end());
  return group;
}

GroupOfPermutations GroupOfPermutations::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  GroupOfPermutations group;
  group.degree_ = degree;
  group.elements_ = std::move(elements);
  return group;
}

bool GroupOfPermutations::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool GroupOfPermutations::is_subgroup_of(const GroupOfPermutations& other) const {
  return degree_ == other.degree_ &&
         std::all_of(elements_.begin(), elements_.end(), [&](const auto& p) { return other.contains(p); });
}

std::vector<std::vector<Element>> GroupOfPermutations::orbits() const {
  std::vector<std::vector<Element>> result;
  std::vector<char> seen(degree_, 0);
  for (std::size_t x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit;
    for (const auto& g : elements_) {
      auto y = static_cast<std::size_t>(g(static_cast<Element>(x)));
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(static_cast<Element>(y));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

GroupOfPermutations GroupOfPermutations::stabilizer(Element x) const {
  GroupOfPermutations group;
  group.degree_ = degree_;
  for (const auto& g : elements_) {
    if (g(x) == x) group.elements_.push_back(g);
  }
  return group;
}

// ---------------------------------------------------------------------------
// FiniteQuandle

FiniteQuandle::FiniteQuandle(std::size_t size, std::vector<Element> ops)
    : size_(size), ops_(std::move(ops)), inverse_ops_(size * size) {
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      inverse_ops_[static_cast<std::size_t>(ops_[x * size_ + y]) * size_ + y] = static_cast<Element>(x);
    }
  }
}

Permutation FiniteQuandle::right_translation(Element y) const {
  std::vector<Element> image(size_);
  for (std::size_t x = 0; x < size_; ++x) image[x] = op(static_cast<Element>(x), y);
  return Permutation(std::move(image));
}

Table FiniteQuandle::table() const {
  Table t(size_, std::vector<Element>(size_));
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) t[x][y] = ops_[x * size_ + y];
  }
  return t;
}

FiniteQuandle validate_table(std::size_t size, const Table& table) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "quandle size must be positive");
  if (table.size() != size) {
    throw Error(ErrorCode::InvalidArgument, "table has " + std::to_string(table.size()) + " rows, expected " +
                                                std::to_string(size));
  }
  const auto k = static_cast<Element>(size);
  std::vector<Element> ops;
  ops.reserve(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    if (table[x].size() != size) {
      throw Error(ErrorCode::InvalidArgument, "table row " + std::to_string(x) + " has wrong length");
    }
    for (std::size_t y = 0; y < size; ++y) {
      const auto v = table[x][y];
      if (v < 0 || v >= k) {
        throw Error(ErrorCode::OutOfRangeEntry, "table entry out of range", {std::int64_t(x), std::int64_t(y)});
      }
      ops.push_back(v);
    }
  }
  auto at = [&](Element x, Element y) { return ops[static_cast<std::size_t>(x * k + y)]; };

  for (Element x = 0; x < k; ++x) {
    if (at(x, x) != x) throw Error(ErrorCode::IdempotenceViolation, "x ◁ x != x", {x});
  }
  for (Element y = 0; y < k; ++y) {
    std::vector<char> hit(size, 0);
    for (Element x = 0; x < k; ++x) {
      auto& h = hit[static_cast<std::size_t>(at(x, y))];
      if (h) throw Error(ErrorCode::ColumnNotBijective, "column is not a bijection", {y});
      h = 1;
    }
  }
  for (Element x = 0; x < k; ++x) {
    for (Element y = 0; y < k; ++y) {
      for (Element z = 0; z < k; ++z) {
        if (at(at(x, y), z) != at(at(x, z), at(y, z))) {
          throw Error(ErrorCode::DistributivityViolation, "(x◁y)◁z != (x◁z)◁(y◁z)", {x, y, z});
        }
      }
    }
  }
  return FiniteQuandle(size, std::move(ops));
}

namespace {

void check_element(const FiniteQuandle& q, Element x) {
  if (x < 0 || static_cast<std::size_t>(x) >= q.size()) {
    throw Error(ErrorCode::OutOfRange, "element " + std::to_string(x) + " outside quandle of size " +
                                           std::to_string(q.size()), {x});
  }
}

FiniteQuandle from_columns(const std::vector<Permutation>& columns) {
  const auto k = columns.size();
  Table t(k, std::vector<Element>(k));
  for (std::size_t y = 0; y < k; ++y) {
    for (std::size_t x = 0; x < k; ++x) t[x][y] = columns[y](static_cast<Element>(x));
  }
  return validate_table(k, t);
}

}  // namespace

Element quandle_op(const FiniteQuandle& q, Element x, Element y) {
  check_element(q, x);
  check_element(q, y);
  return q.op(x, y);
}

Element quandle_inv_op(const FiniteQuandle& q, Element x, Element y) {
  check_element(q, x);
  check_element(q, y);
  return q.inv_op(x, y);
}

FiniteQuandle make_trivial(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "trivial quandle needs n >= 1");
  Table t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) std::fill(t[x].begin(), t[x].end(), static_cast<Element>(x));
  return validate_table(n, t);
}

FiniteQuandle make_dihedral(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dihedral quandle needs n >= 1");
  const auto m = static_cast<long long>(n);
  Table t(n, std::vector<Element>(n));
  for (long long x = 0; x < m; ++x) {
    for (long long y = 0; y < m; ++y) t[x][y] = static_cast<Element>(((2 * y - x) % m + m) % m);
  }
  return validate_table(n, t);
}

FiniteQuandle make_v3() {
  return from_columns({Permutation({0, 2, 1}), Permutation({0, 1, 2}), Permutation({0, 1, 2})});
}

FiniteQuandle make_tetrahedron() {
  // columns: (1 2 3), (0 3 2), (0 1 3), (0 2 1)
  return from_columns({Permutation({0, 2, 3, 1}), Permutation({3, 1, 0, 2}), Permutation({1, 3, 2, 0}),
                       Permutation({2, 0, 1, 3})});
}

FiniteQuandle relabel(const FiniteQuandle& q, const Permutation& f) {
  const auto k = q.size();
  Table t(k, std::vector<Element>(k));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      t[static_cast<std::size_t>(f(static_cast<Element>(x)))][static_cast<std::size_t>(f(static_cast<Element>(y)))] =
          f(q.op(static_cast<Element>(x), static_cast<Element>(y)));
    }
  }
  return validate_table(k, t);
}

bool is_homomorphism(const FiniteQuandle& from, const FiniteQuandle& to, const Permutation& f) {
  if (f.degree() != from.size() || from.size() != to.size()) return false;
  const auto k = static_cast<Element>(from.size());
  for (Element x = 0; x < k; ++x) {
    for (Element y = 0; y < k; ++y) {
      if (f(from.op(x, y)) != to.op(f(x), f(y))) return false;
    }
  }
  return true;
}

GroupOfPermutations automorphism_group(const FiniteQuandle& q, const Caps& caps) {
  if (q.size() > caps.group_order) {
    throw Error(ErrorCode::SizeCapExceeded,
                "automorphism group of a quandle of size " + std::to_string(q.size()) + " exceeds cap " +
                    std::to_string(caps.group_order),
                {std::int64_t(q.size()), std::int64_t(caps.group_order)});
  }
  std::vector<Permutation> found;
  detail::search_isomorphisms(q, q, {}, [&](Permutation p) {
    found.push_back(std::move(p));
    return true;
  });
  return GroupOfPermutations::from_elements(q.size(), std::move(found));
}

GroupOfPermutations inner_group(const FiniteQuandle& q) {
  std::vector<Permutation> generators;
  for (std::size_t y = 0; y < q.size(); ++y) generators.push_back(q.right_translation(static_cast<Element>(y)));
  return GroupOfPermutations::generated_by(q.size(), generators);
}

std::vector<std::vector<Element>> algebraic_components(const FiniteQuandle& q) {
  // union of β_y-orbits; closure under the generators suffices for Inn orbits
  const auto k = q.size();
  std::vector<std::vector<Element>> blocks;
  std::vector<char> seen(k, 0);
  for (std::size_t start = 0; start < k; ++start) {
    if (seen[start]) continue;
    std::vector<Element> block{static_cast<Element>(start)};
    seen[start] = 1;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t y = 0; y < k; ++y) {
        for (Element next : {q.op(block[i], static_cast<Element>(y)), q.inv_op(block[i], static_cast<Element>(y))}) {
          if (!seen[static_cast<std::size_t>(next)]) {
            seen[static_cast<std::size_t>(next)] = 1;
            block.push_back(next);
          }
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_faithful(const FiniteQuandle& q) {
  std::set<Permutation> columns;
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (!columns.insert(q.right_translation(static_cast<Element>(y))).second) return false;
  }
  return true;
}

bool is_connected(const FiniteQuandle& q) { return algebraic_components(q).size() == 1; }

bool is_homogeneous(const FiniteQuandle& q, const Caps& caps) {
  return automorphism_group(q, caps).orbits().size() == 1;
}

bool is_trivial(const FiniteQuandle& q) {
  const auto k = static_cast<Element>(q.size());
  for (Element x = 0; x < k; ++x) {
    for (Element y = 0; y < k; ++y) {
      if (q.op(x, y) != x) return false;
    }
  }
  return true;
}

bool is_cyclic_type(const FiniteQuandle& q) {
  const auto k = q.size();
  for (std::size_t x = 0; x < k; ++x) {
    if (k < 2) break;
    const auto pivot = static_cast<Element>(x);
    const Element start = x == 0 ? 1 : 0;
    Element y = start;
    std::size_t length = 0;
    do {
      y = q.op(y, pivot);
      ++length;
    } while (y != start && length <= k);
    if (length != k - 1) return false;
  }
  return true;
}

std::optional<Permutation> are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
  std::optional<Permutation> witness;
  detail::search_isomorphisms(a, b, {}, [&](Permutation p) {
    witness = std::move(p);
    return false;
  });
  return witness;
}

}  // namespace quandloid
