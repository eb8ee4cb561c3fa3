#pragma once

// Test-only reference implementations. These deliberately avoid the library's
// checkers so they can be used to cross-validate them.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "sdlkit/core.hpp"

namespace sdlkit::oracle {

using Table = std::vector<std::vector<Element>>;

inline Table rows_of(const BinaryOpTable& t) {
  Table r(t.size(), std::vector<Element>(t.size()));
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) r[x][y] = t(x, y);
  return r;
}

/// Associativity evaluated with z outermost and the right-nested side first;
/// collects every failing triple and returns the smallest.
inline std::optional<std::array<Element, 3>> first_non_associative(const Table& t) {
  std::optional<std::array<Element, 3>> best;
  const std::size_t n = t.size();
  for (Element z = n; z-- > 0;)
    for (Element y = n; y-- > 0;)
      for (Element x = n; x-- > 0;) {
        const Element right = t[x][t[y][z]];
        const Element left = t[t[x][y]][z];
        if (left != right) {
          std::array<Element, 3> w{x, y, z};
          if (!best || w < *best) best = w;
        }
      }
  return best;
}

/// First (x, y, z) in lexicographic order violating either distributive law,
/// plus which law ("left"/"right"), by direct enumeration.
struct DistributivityFailure {
  std::array<Element, 3> triple;
  bool left;
};

inline std::optional<DistributivityFailure> first_distributivity_failure(const Table& add,
                                                                         const Table& mul) {
  const std::size_t n = add.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]) return DistributivityFailure{{x, y, z}, true};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]) return DistributivityFailure{{x, y, z}, false};
  return std::nullopt;
}

inline bool is_semiring(const Table& add, const Table& mul) {
  return !first_non_associative(add) && !first_non_associative(mul) &&
         !first_distributivity_failure(add, mul);
}

/// Clifford via the completely-regular characterization: every x has some y
/// with x = xyx and xy = yx, and idempotents commute with everything.
inline bool is_clifford_completely_regular(const Table& t) {
  const std::size_t n = t.size();
  if (first_non_associative(t)) return false;
  for (Element x = 0; x < n; ++x) {
    bool regular = false;
    for (Element y = 0; y < n && !regular; ++y)
      regular = t[t[x][y]][x] == x && t[x][y] == t[y][x];
    if (!regular) return false;
  }
  for (Element e = 0; e < n; ++e) {
    if (t[e][e] != e) continue;
    for (Element x = 0; x < n; ++x)
      if (t[e][x] != t[x][e]) return false;
  }
  return true;
}

/// Calls `visit` on every associative table of size n, found by filling cells
/// in row-major order and pruning on any fully determined triple.
inline void for_each_associative_table(std::size_t n, const std::function<void(const Table&)>& visit,
                                       std::mt19937* shuffle = nullptr, std::size_t* budget = nullptr) {
  constexpr Element kUnset = static_cast<Element>(-1);
  Table t(n, std::vector<Element>(n, kUnset));
  auto consistent = [&]() {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Element xy = t[x][y];
        if (xy == kUnset) continue;
        for (Element z = 0; z < n; ++z) {
          const Element yz = t[y][z];
          if (yz == kUnset) continue;
          const Element l = t[xy][z], r = t[x][yz];
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    return true;
  };
  std::function<bool(std::size_t)> fill = [&](std::size_t cell) -> bool {
    if (budget && *budget == 0) return false;
    if (cell == n * n) {
      visit(t);
      if (budget) --*budget;
      return true;
    }
    std::vector<Element> values(n);
    for (Element v = 0; v < n; ++v) values[v] = v;
    if (shuffle) std::shuffle(values.begin(), values.end(), *shuffle);
    for (Element v : values) {
      t[cell / n][cell % n] = v;
      if (consistent()) fill(cell + 1);
      if (budget && *budget == 0) break;
    }
    t[cell / n][cell % n] = kUnset;
    return true;
  };
  fill(0);
}

/// A random associative table of size n: random-order depth-first search that
/// stops at the first complete table.
inline Table random_associative_table(std::size_t n, std::mt19937& rng) {
  Table found;
  std::size_t budget = 1;
  for_each_associative_table(n, [&](const Table& t) { found = t; }, &rng, &budget);
  return found;
}

}  // namespace sdlkit::oracle
