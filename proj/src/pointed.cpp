#include "quandloid/pointed.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "detail/hom_search.hpp"

namespace quandloid {

PointedQuandle::PointedQuandle(FiniteQuandle quandle, Tuple basepoints)
    : quandle_(std::move(quandle)), basepoints_(std::move(basepoints)) {
  for (auto b : basepoints_) {
    if (b < 0 || static_cast<std::size_t>(b) >= quandle_.size()) {
      throw Error(ErrorCode::OutOfRange, "basepoint " + std::to_string(b) + " outside quandle", {b});
    }
  }
}

std::optional<Permutation> pointed_isomorphic(const PointedQuandle& a, const PointedQuandle& b) {
  if (a.arity() != b.arity() || a.quandle().size() != b.quandle().size()) {
    throw Error(ErrorCode::ArityMismatch, "pointed quandles differ in arity or size",
                {std::int64_t(a.arity()), std::int64_t(b.arity())});
  }
  std::vector<Element> fixed(a.quandle().size(), -1);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto& slot = fixed[static_cast<std::size_t>(a.basepoints()[i])];
    if (slot >= 0 && slot != b.basepoints()[i]) return std::nullopt;
    slot = b.basepoints()[i];
  }
  std::optional<Permutation> witness;
  detail::search_isomorphisms(a.quandle(), b.quandle(), fixed, [&](Permutation p) {
    witness = std::move(p);
    return false;
  });
  return witness;
}

namespace {

void check_arity(std::size_t n, const Caps& caps) {
  if (n > caps.pointed_arity) {
    throw Error(ErrorCode::SizeCapExceeded,
                "pointed arity " + std::to_string(n) + " exceeds cap " + std::to_string(caps.pointed_arity),
                {std::int64_t(n), std::int64_t(caps.pointed_arity)});
  }
}

// Advances t through X^n in lexicographic order; false after the last tuple.
bool next_tuple(Tuple& t, std::size_t k) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (static_cast<std::size_t>(++t[i]) < k) return true;
    t[i] = 0;
  }
  return false;
}

std::size_t tuple_index(const Tuple& t, std::size_t k) {
  std::size_t index = 0;
  for (auto v : t) index = index * k + static_cast<std::size_t>(v);
  return index;
}

}  // namespace

std::vector<Tuple> orbit_classes(const FiniteQuandle& q, std::size_t n, const Caps& caps) {
  check_arity(n, caps);
  const auto group = automorphism_group(q, caps);
  const auto k = q.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;

  std::vector<char> seen(total, 0);
  std::vector<Tuple> representatives;
  Tuple t(n, 0);
  do {
    if (seen[tuple_index(t, k)]) continue;
    // scanning in lexicographic order makes the first member the least one
    representatives.push_back(t);
    for (const auto& g : group.elements()) {
      Tuple image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = g(t[i]);
      seen[tuple_index(image, k)] = 1;
    }
  } while (next_tuple(t, k));
  return representatives;
}

BigInt d_n_burnside(const FiniteQuandle& q, std::size_t n, const Caps& caps) {
  const auto group = automorphism_group(q, caps);
  BigInt total = 0;
  for (const auto& g : group.elements()) {
    unsigned long fixed = 0;
    for (std::size_t x = 0; x < q.size(); ++x) {
      if (g(static_cast<Element>(x)) == static_cast<Element>(x)) ++fixed;
    }
    total += boost::multiprecision::pow(BigInt(fixed), static_cast<unsigned>(n));
  }
  return total / group.order();
}

BigInt partition_count(std::size_t m, std::size_t n, Cardinality k) {
  if (k && m > *k) {
    throw Error(ErrorCode::PartitionBoundViolation,
                "d_{m,n,k} needs m <= k (m=" + std::to_string(m) + ", k=" + std::to_string(*k) + ")",
                {std::int64_t(m), std::int64_t(n), std::int64_t(*k)});
  }
  std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  auto rec = [&](auto&& self, std::size_t mm, std::size_t nn) -> BigInt {
    if (nn == 0) return 1;
    auto key = std::make_pair(mm, nn);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt value = BigInt(mm) * self(self, mm, nn - 1);
    if (!k || mm < *k) value += self(self, mm + 1, nn - 1);
    memo.emplace(key, value);
    return value;
  };
  return rec(rec, m, n);
}

EqualityPattern equality_pattern(const Tuple& t) {
  EqualityPattern pattern;
  std::map<Element, std::size_t> block_of;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto [it, inserted] = block_of.emplace(t[i], pattern.blocks.size());
    if (inserted) pattern.blocks.emplace_back();
    pattern.blocks[it->second].push_back(i);
  }
  return pattern;
}

bool sk_equivalent(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "tuples differ in length",
                {std::int64_t(a.size()), std::int64_t(b.size())});
  }
  return equality_pattern(a) == equality_pattern(b);
}

bool is_n_homogeneous(const FiniteQuandle& q, std::size_t n, const Caps& caps) {
  return d_n_burnside(q, n, caps) == partition_count(0, n, q.size());
}

bool is_uniform_by_homogeneity(const FiniteQuandle& q, const Caps& caps) {
  return is_n_homogeneous(q, q.size() - 1, caps);
}

bool is_uniform_by_group_order(const FiniteQuandle& q, const Caps& caps) {
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= q.size(); ++i) factorial *= i;
  return automorphism_group(q, caps).order() == factorial;
}

bool is_uniform(const FiniteQuandle& q, const Caps& caps) {
  const bool by_homogeneity = is_uniform_by_homogeneity(q, caps);
  if (by_homogeneity != is_uniform_by_group_order(q, caps)) {
    throw std::logic_error("uniformity routes disagree");
  }
  return by_homogeneity;
}

bool is_two_point_homogeneous(const FiniteQuandle& q) {
  const auto inner = inner_group(q);
  const auto k = q.size();
  std::set<std::pair<Element, Element>> seen;
  std::size_t orbits = 0;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      auto pair = std::make_pair(static_cast<Element>(x), static_cast<Element>(y));
      if (seen.count(pair)) continue;
      ++orbits;
      for (const auto& g : inner.elements()) seen.emplace(g(pair.first), g(pair.second));
    }
  }
  return orbits == 2;
}

bool stabilizer_transitive(const FiniteQuandle& q, Element x, const Caps& caps) {
  if (x < 0 || static_cast<std::size_t>(x) >= q.size()) {
    throw Error(ErrorCode::OutOfRange, "element outside quandle", {x});
  }
  const auto stabilizer = automorphism_group(q, caps).stabilizer(x);
  // X \ {x} is one orbit iff the orbit count is 2 (or X = {x})
  return stabilizer.orbits().size() <= 2;
}

}  // namespace quandloid
