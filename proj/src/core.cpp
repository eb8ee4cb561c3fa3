#include "sdlkit/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdlkit {

std::string describe(const Verdict& v) {
  if (v.holds) return "ok";
  std::ostringstream os;
  os << v.reason;
  if (!v.witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
  }
  return os.str();
}

BinaryOpTable::BinaryOpTable(std::size_t n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw std::invalid_argument("operation table must have at least one element");
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("operation table must have size*size entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= n_) {
      std::ostringstream os;
      os << "table entry (" << i / n_ << "," << i % n_ << ") = " << entries_[i]
         << " is out of range for size " << n_;
      throw std::invalid_argument(os.str());
    }
  }
}

BinaryOpTable BinaryOpTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("operation table rows must have length size");
    e.insert(e.end(), r.begin(), r.end());
  }
  return BinaryOpTable(n, std::move(e));
}

BinaryOpTable BinaryOpTable::transposed() const {
  return from_function(n_, [this](Element x, Element y) { return (*this)(y, x); });
}

std::optional<BinaryOpTable> BinaryOpTable::restrict_to(std::span<const Element> subset) const {
  if (subset.empty()) return std::nullopt;
  std::vector<std::size_t> position(n_, n_);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n_) throw std::invalid_argument("subset element out of range");
    position[subset[i]] = i;
  }
  const std::size_t m = subset.size();
  std::vector<Element> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Element p = position[(*this)(subset[i], subset[j])];
      if (p == n_) return std::nullopt;
      e[i * m + j] = p;
    }
  }
  return BinaryOpTable(m, std::move(e));
}

Verdict check_associative(const BinaryOpTable& op) {
  const std::size_t n = op.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = op(x, y);
      for (Element z = 0; z < n; ++z)
        if (op(xy, z) != op(x, op(y, z))) return Verdict::fail("not associative", {x, y, z});
    }
  return Verdict::ok();
}

Verdict check_commutative(const BinaryOpTable& op) {
  for (Element x = 0; x < op.size(); ++x)
    for (Element y = 0; y < op.size(); ++y)
      if (op(x, y) != op(y, x)) return Verdict::fail("not commutative", {x, y});
  return Verdict::ok();
}

Verdict check_idempotent(const BinaryOpTable& op) {
  for (Element x = 0; x < op.size(); ++x)
    if (op(x, x) != x) return Verdict::fail("not idempotent", {x});
  return Verdict::ok();
}

GroupCheck check_group(const BinaryOpTable& op) {
  if (auto v = check_associative(op); !v) return {std::nullopt, v};
  const std::size_t n = op.size();
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool is_identity = true;
    for (Element x = 0; x < n && is_identity; ++x)
      is_identity = op(e, x) == x && op(x, e) == x;
    if (is_identity) identity = e;
  }
  if (!identity) return {std::nullopt, Verdict::fail("no identity")};
  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (op(x, y) == *identity && op(y, x) == *identity) {
        inverse[x] = y;
        found = true;
      }
    }
    if (!found) return {std::nullopt, Verdict::fail("element without inverse", {x})};
  }
  return {FiniteGroup(op, *identity, std::move(inverse)), Verdict::ok()};
}

FiniteGroup FiniteGroup::from_table(BinaryOpTable op) {
  auto result = check_group(op);
  if (!result.group) throw std::invalid_argument("not a group: " + describe(result.verdict));
  return std::move(*result.group);
}

Verdict check_distributive_lattice(const BinaryOpTable& join, const BinaryOpTable& meet) {
  if (join.size() != meet.size())
    throw std::invalid_argument("join and meet tables have different sizes");
  const std::size_t n = join.size();

  auto prefixed = [](const char* name, Verdict v) {
    v.reason = std::string(name) + " " + v.reason;
    return v;
  };
  if (auto v = check_associative(join); !v) return prefixed("join", v);
  if (auto v = check_associative(meet); !v) return prefixed("meet", v);
  if (auto v = check_commutative(join); !v) return prefixed("join", v);
  if (auto v = check_commutative(meet); !v) return prefixed("meet", v);
  if (auto v = check_idempotent(join); !v) return prefixed("join", v);
  if (auto v = check_idempotent(meet); !v) return prefixed("meet", v);

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a)
        return Verdict::fail("absorption violated", {a, b});
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          return Verdict::fail("distributivity violated", {a, b, c});
      }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if ((meet(a, b) == b) != (join(a, b) == a))
        return Verdict::fail("join and meet orders disagree", {a, b});
  return Verdict::ok();
}

FiniteDistributiveLattice FiniteDistributiveLattice::from_tables(BinaryOpTable join,
                                                                 BinaryOpTable meet) {
  if (auto v = check_distributive_lattice(join, meet); !v)
    throw std::invalid_argument("not a distributive lattice: " + describe(v));
  return FiniteDistributiveLattice(std::move(join), std::move(meet));
}

Element FiniteDistributiveLattice::bottom() const {
  Element b = 0;
  for (Element a = 1; a < size(); ++a) b = meet(b, a);
  return b;
}

Element FiniteDistributiveLattice::top() const {
  Element t = 0;
  for (Element a = 1; a < size(); ++a) t = join(t, a);
  return t;
}

std::vector<std::pair<Element, Element>> partial_order(const FiniteDistributiveLattice& lattice) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element lower = 0; lower < lattice.size(); ++lower)
    for (Element upper = 0; upper < lattice.size(); ++upper)
      if (lattice.meet(upper, lower) == lower) pairs.emplace_back(lower, upper);
  return pairs;
}

std::vector<std::pair<Element, Element>> partial_order_from_join(
    const FiniteDistributiveLattice& lattice) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element lower = 0; lower < lattice.size(); ++lower)
    for (Element upper = 0; upper < lattice.size(); ++upper)
      if (lattice.join(upper, lower) == upper) pairs.emplace_back(lower, upper);
  return pairs;
}

std::vector<std::size_t> height_function(const FiniteDistributiveLattice& lattice) {
  const std::size_t n = lattice.size();
  // Process elements by the size of their down-set; every strict predecessor
  // has a strictly smaller down-set.
  std::vector<std::size_t> downset(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (lattice.leq(b, a)) ++downset[a];
  std::vector<Element> order(n);
  for (Element a = 0; a < n; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return downset[a] < downset[b]; });

  std::vector<std::size_t> height(n, 0);
  for (Element a : order)
    for (Element b = 0; b < n; ++b)
      if (b != a && lattice.leq(b, a)) height[a] = std::max(height[a], height[b] + 1);
  return height;
}

HomMap::HomMap(std::size_t target_size, std::vector<Element> map)
    : target_size_(target_size), map_(std::move(map)) {
  for (Element y : map_)
    if (y >= target_size_) throw std::invalid_argument("map entry out of range of target");
}

HomMap HomMap::identity(std::size_t n) {
  std::vector<Element> m(n);
  for (Element x = 0; x < n; ++x) m[x] = x;
  return HomMap(n, std::move(m));
}

bool HomMap::is_bijective() const {
  if (source_size() != target_size_) return false;
  std::vector<bool> hit(target_size_, false);
  for (Element y : map_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::optional<HomMap> HomMap::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<Element> inv(target_size_);
  for (Element x = 0; x < map_.size(); ++x) inv[map_[x]] = x;
  return HomMap(source_size(), std::move(inv));
}

HomMap HomMap::then(const HomMap& next) const {
  if (next.source_size() != target_size_)
    throw std::invalid_argument("cannot compose maps with mismatched carriers");
  std::vector<Element> m(map_.size());
  for (Element x = 0; x < map_.size(); ++x) m[x] = next(map_[x]);
  return HomMap(next.target_size(), std::move(m));
}

Verdict is_homomorphism(const HomMap& f, const BinaryOpTable& src, const BinaryOpTable& dst) {
  if (f.source_size() != src.size() || f.target_size() != dst.size())
    throw std::invalid_argument("map sizes do not match the operation tables");
  for (Element x = 0; x < src.size(); ++x)
    for (Element y = 0; y < src.size(); ++y)
      if (f(src(x, y)) != dst(f(x), f(y))) return Verdict::fail("not a homomorphism", {x, y});
  return Verdict::ok();
}

Verdict is_semiring_homomorphism(const HomMap& f, const BinaryOpTable& src_add,
                                 const BinaryOpTable& src_mul, const BinaryOpTable& dst_add,
                                 const BinaryOpTable& dst_mul) {
  if (auto v = is_homomorphism(f, src_add, dst_add); !v) {
    v.reason = "addition: " + v.reason;
    return v;
  }
  if (auto v = is_homomorphism(f, src_mul, dst_mul); !v) {
    v.reason = "multiplication: " + v.reason;
    return v;
  }
  return Verdict::ok();
}

}  // namespace sdlkit
