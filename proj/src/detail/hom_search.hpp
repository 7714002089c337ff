#pragma once

#include <cstddef>
#include <vector>

#include "quandloid/quandle.hpp"

namespace quandloid::detail {

/// Depth-first search for bijective homomorphisms a -> b (sizes equal),
/// assigning images of 0, 1, ... in ascending order so the first hit is the
/// lexicographically least. `fixed[x] >= 0` forces f(x) = fixed[x].
/// `visit` returns false to stop the search.
template <typename Visit>
void search_isomorphisms(const FiniteQuandle& a, const FiniteQuandle& b,
                         const std::vector<Element>& fixed, Visit&& visit) {
  const std::size_t k = a.size();
  if (b.size() != k) return;
  std::vector<Element> image(k, -1);
  std::vector<char> used(k, 0);

  // forced images must be injective
  {
    std::vector<char> seen(k, 0);
    for (auto v : fixed) {
      if (v < 0) continue;
      if (seen[static_cast<std::size_t>(v)]) return;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  // every product among assigned elements involving x must be preserved
  auto consistent = [&](Element x) {
    for (std::size_t i = 0; i < k; ++i) {
      if (image[i] < 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (image[j] < 0) continue;
        const auto u = static_cast<Element>(i);
        const auto w = static_cast<Element>(j);
        const Element prod = a.op(u, w);
        if (u != x && w != x && prod != x) continue;
        const Element fp = image[static_cast<std::size_t>(prod)];
        if (fp >= 0 && fp != b.op(image[i], image[j])) return false;
      }
    }
    return true;
  };

  bool stop = false;
  auto recurse = [&](auto&& self, std::size_t x) -> void {
    if (stop) return;
    if (x == k) {
      if (!visit(Permutation(image))) stop = true;
      return;
    }
    const Element forced = x < fixed.size() ? fixed[x] : -1;
    for (std::size_t v = 0; v < k && !stop; ++v) {
      if (used[v]) continue;
      if (forced >= 0 && static_cast<Element>(v) != forced) continue;
      // keep forced targets free for the elements that need them
      if (forced < 0 && !fixed.empty()) {
        bool reserved = false;
        for (std::size_t j = x + 1; j < fixed.size(); ++j) {
          if (fixed[j] == static_cast<Element>(v)) reserved = true;
        }
        if (reserved) continue;
      }
      image[x] = static_cast<Element>(v);
      used[v] = 1;
      if (consistent(static_cast<Element>(x))) self(self, x + 1);
      image[x] = -1;
      used[v] = 0;
    }
  };
  recurse(recurse, 0);
}

}  // namespace quandloid::detail
