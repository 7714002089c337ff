#include <algorithm>
#include <numeric>
#include <set>

#include "quandloid/quandle.hpp"

namespace quandloid {

namespace {

std::vector<Element> relabeled_flat(const std::vector<Element>& flat, std::size_t k,
                                    const std::vector<Element>& f) {
  std::vector<Element> out(flat.size());
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      out[static_cast<std::size_t>(f[x]) * k + static_cast<std::size_t>(f[y])] = f[static_cast<std::size_t>(flat[x * k + y])];
    }
  }
  return out;
}

std::vector<Element> canonical_flat(const std::vector<Element>& flat, std::size_t k) {
  std::vector<Element> f(k);
  std::iota(f.begin(), f.end(), 0);
  auto best = flat;
  do {
    auto candidate = relabeled_flat(flat, k, f);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(f.begin(), f.end()));
  return best;
}

Table unflatten(const std::vector<Element>& flat, std::size_t k) {
  Table t(k, std::vector<Element>(k));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) t[x][y] = flat[x * k + y];
  }
  return t;
}

// Column-by-column search: column y is a permutation fixing y; after each
// column, every distributivity triple whose columns are all known is checked.
class ColumnSearch {
 public:
  explicit ColumnSearch(std::size_t k) : k_(k), column_(k), choices_(k) {
    std::vector<Element> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (std::size_t y = 0; y < k; ++y) {
        if (p[y] == static_cast<Element>(y)) choices_[y].push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::set<std::vector<Element>> run() {
    recurse(0);
    return std::move(found_);
  }

 private:
  Element op(std::size_t x, std::size_t y) const { return column_[y][x]; }

  bool consistent(std::size_t assigned) const {
    for (std::size_t y = 0; y < assigned; ++y) {
      for (std::size_t z = 0; z < assigned; ++z) {
        const auto yz = static_cast<std::size_t>(op(y, z));
        if (yz >= assigned) continue;
        if (y != assigned - 1 && z != assigned - 1 && yz != assigned - 1) continue;
        for (std::size_t x = 0; x < k_; ++x) {
          const auto xy = static_cast<std::size_t>(op(x, y));
          const auto xz = static_cast<std::size_t>(op(x, z));
          if (op(xy, z) != op(xz, yz)) return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t y) {
    if (y == k_) {
      std::vector<Element> flat(k_ * k_);
      for (std::size_t x = 0; x < k_; ++x) {
        for (std::size_t c = 0; c < k_; ++c) flat[x * k_ + c] = op(x, c);
      }
      found_.insert(canonical_flat(flat, k_));
      return;
    }
    for (const auto& choice : choices_[y]) {
      column_[y] = choice;
      if (consistent(y + 1)) recurse(y + 1);
    }
  }

  std::size_t k_;
  std::vector<std::vector<Element>> column_;
  std::vector<std::vector<std::vector<Element>>> choices_;
  std::set<std::vector<Element>> found_;
};

}  // namespace

FiniteQuandle canonical_form(const FiniteQuandle& q) {
  return validate_table(q.size(), unflatten(canonical_flat(q.flat(), q.size()), q.size()));
}

std::vector<FiniteQuandle> enumerate_quandles(std::size_t n, const Caps& caps) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "census order must be at least 1");
  if (n > caps.census_order) {
    throw Error(ErrorCode::SizeCapExceeded,
                "census order " + std::to_string(n) + " exceeds cap " + std::to_string(caps.census_order),
                {std::int64_t(n), std::int64_t(caps.census_order)});
  }
  std::vector<FiniteQuandle> result;
  for (const auto& flat : ColumnSearch(n).run()) result.push_back(validate_table(n, unflatten(flat, n)));
  return result;
}

}  // namespace quandloid
