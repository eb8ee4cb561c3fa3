#include "sdlkit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sdlkit/analyze.hpp"

namespace sdlkit {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be at least 1");
  return FiniteGroup::from_table(
      BinaryOpTable::from_function(n, [n](Element x, Element y) { return (x + y) % n; }));
}

std::vector<std::vector<Element>> symmetric_group_3_permutations() {
  std::vector<Element> p{0, 1, 2};
  std::vector<std::vector<Element>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

FiniteGroup symmetric_group_3() {
  const auto perms = symmetric_group_3_permutations();
  auto index_of = [&](const std::vector<Element>& p) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  return FiniteGroup::from_table(BinaryOpTable::from_function(6, [&](Element a, Element b) {
    std::vector<Element> c(3);
    for (Element i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    return index_of(c);
  }));
}

FiniteGroup klein_four() {
  return FiniteGroup::from_table(
      BinaryOpTable::from_function(4, [](Element x, Element y) { return x ^ y; }));
}

FiniteDistributiveLattice chain_lattice(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain length must be at least 1");
  return FiniteDistributiveLattice::from_tables(
      BinaryOpTable::from_function(n, [](Element a, Element b) { return std::max(a, b); }),
      BinaryOpTable::from_function(n, [](Element a, Element b) { return std::min(a, b); }));
}

FiniteDistributiveLattice boolean_lattice(std::size_t k) {
  if (k > 4) throw std::invalid_argument("boolean lattice rank must be at most 4");
  const std::size_t n = std::size_t{1} << k;
  return FiniteDistributiveLattice::from_tables(
      BinaryOpTable::from_function(n, [](Element a, Element b) { return a | b; }),
      BinaryOpTable::from_function(n, [](Element a, Element b) { return a & b; }));
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

FiniteDistributiveLattice divisor_lattice(std::size_t n) {
  if (n == 0) throw std::invalid_argument("divisor lattice needs n >= 1");
  const auto d = divisors(n);
  if (d.size() > 16) throw std::invalid_argument("divisor lattice limited to 16 divisors");
  auto index_of = [&](std::size_t v) {
    return static_cast<Element>(std::lower_bound(d.begin(), d.end(), v) - d.begin());
  };
  return FiniteDistributiveLattice::from_tables(
      BinaryOpTable::from_function(d.size(),
                                   [&](Element a, Element b) { return index_of(std::lcm(d[a], d[b])); }),
      BinaryOpTable::from_function(d.size(),
                                   [&](Element a, Element b) { return index_of(std::gcd(d[a], d[b])); }));
}

std::pair<BinaryOpTable, BinaryOpTable> diamond_m3_tables() {
  auto join = BinaryOpTable::from_function(5, [](Element a, Element b) -> Element {
    if (a == b || b == 0) return a;
    if (a == 0) return b;
    return 4;
  });
  auto meet = BinaryOpTable::from_function(5, [](Element a, Element b) -> Element {
    if (a == b || b == 4) return a;
    if (a == 4) return b;
    return 0;
  });
  return {std::move(join), std::move(meet)};
}

HomMap conjugation(const FiniteGroup& group, Element g) {
  std::vector<Element> m(group.order());
  for (Element x = 0; x < m.size(); ++x) m[x] = group(group(g, x), group.inverse()[g]);
  return HomMap(group.order(), std::move(m));
}

HomMap cyclic_multiplier(std::size_t n, std::size_t k) {
  std::vector<Element> m(n);
  for (Element x = 0; x < n; ++x) m[x] = (k * x) % n;
  return HomMap(n, std::move(m));
}

HomMap map_power(const HomMap& f, std::size_t power) {
  HomMap result = HomMap::identity(f.source_size());
  for (std::size_t i = 0; i < power; ++i) result = result.then(f);
  return result;
}

FamilyInstance constant_family(const FiniteDistributiveLattice& lattice, const FiniteGroup& group) {
  IsoFamily phi;
  for (const auto& [lower, upper] : partial_order(lattice))
    phi.set(upper, lower, HomMap::identity(group.order()));
  return {GroupComponentFamily(lattice, std::vector<FiniteGroup>(lattice.size(), group)),
          std::move(phi)};
}

FamilyInstance twisted_family(const FiniteDistributiveLattice& lattice, const FiniteGroup& group,
                              const HomMap& automorphism) {
  if (!automorphism.is_bijective() || automorphism.source_size() != group.order() ||
      !is_homomorphism(automorphism, group.op(), group.op()))
    throw std::invalid_argument("twisting map is not an automorphism of the group");
  const auto height = height_function(lattice);
  IsoFamily phi;
  for (const auto& [lower, upper] : partial_order(lattice))
    phi.set(upper, lower, map_power(automorphism, height[upper] - height[lower]));
  FamilyInstance out{GroupComponentFamily(lattice, std::vector<FiniteGroup>(lattice.size(), group)),
                     std::move(phi)};
  if (auto report = validate_iso_family(out.family, out.phi); !report.ok())
    throw std::logic_error("twisted family failed validation: " + report.summary());
  return out;
}

FamilyInstance sdl2_violating_family() {
  const auto z3 = cyclic_group(3);
  const HomMap doubling = cyclic_multiplier(3, 2);
  IsoFamily phi;
  for (Element a = 0; a < 3; ++a) phi.set(a, a, HomMap::identity(3));
  phi.set(1, 0, doubling);
  phi.set(2, 1, doubling);
  phi.set(2, 0, doubling);
  return {GroupComponentFamily(chain_lattice(3), {z3, z3, z3}), std::move(phi)};
}

std::optional<SemiringTable> search_lattice_of_group_semirings(
    const FiniteDistributiveLattice& lattice, const std::vector<FiniteGroup>& groups) {
  std::vector<Label> labels;
  std::vector<Element> offset;
  for (Element a = 0; a < groups.size(); ++a) {
    offset.push_back(labels.size());
    for (Element g = 0; g < groups[a].order(); ++g) labels.push_back({a, g});
  }
  const std::size_t n = labels.size();

  struct Cell {
    std::vector<Element>* table;
    std::size_t index;
    Element first;
    std::size_t count;
  };
  std::vector<Element> add(n * n), mul(n * n);
  std::vector<Cell> free;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto [a, gx] = labels[x];
      const auto [b, gy] = labels[y];
      if (a == b) {
        mul[x * n + y] = offset[a] + groups[a](gx, gy);
        add[x * n + y] = x;
        continue;
      }
      const Element m = lattice.meet(a, b), j = lattice.join(a, b);
      mul[x * n + y] = offset[m];
      add[x * n + y] = offset[j];
      free.push_back({&mul, x * n + y, offset[m], groups[m].order()});
      free.push_back({&add, x * n + y, offset[j], groups[j].order()});
    }

  while (true) {
    BinaryOpTable add_table(n, add), mul_table(n, mul);
    if (check_semiring(add_table, mul_table))
      return SemiringTable{std::move(add_table), std::move(mul_table), labels};
    std::size_t i = free.size();
    while (i > 0) {
      Cell& c = free[i - 1];
      Element& v = (*c.table)[c.index];
      if (v + 1 < c.first + c.count) {
        ++v;
        break;
      }
      v = c.first;
      --i;
    }
    if (i == 0) return std::nullopt;
  }
}

SemiringTable non_strong_counterexample() {
  // Z_2 below the trivial group admits no semiring at all: with y in G_0 and
  // z on top, x(y+z) = xy + xz forces x·e_1 = xy for every y. Try that
  // placement first anyway, then the trivial group below Z_2.
  const auto lattice = chain_lattice(2);
  const auto z1 = cyclic_group(1);
  const auto z2 = cyclic_group(2);
  for (const auto& groups : {std::vector<FiniteGroup>{z2, z1}, std::vector<FiniteGroup>{z1, z2}})
    if (auto found = search_lattice_of_group_semirings(lattice, groups)) return std::move(*found);
  throw std::logic_error("no distributive lattice of Z_2 and the trivial group semiring exists");
}

std::string InstanceSpec::name() const {
  std::ostringstream os;
  switch (lattice) {
    case LatticeKind::Chain: os << "chain" << lattice_param; break;
    case LatticeKind::Boolean: os << "boolean" << lattice_param; break;
    case LatticeKind::Divisor: os << "divisor" << lattice_param; break;
  }
  os << "_";
  switch (group) {
    case GroupKind::Cyclic: os << "z" << group_param; break;
    case GroupKind::Klein: os << "klein"; break;
    case GroupKind::Symmetric3: os << "s3"; break;
  }
  os << (recipe == Recipe::Identity ? "_identity" : "_twisted");
  if (flavor == AddFlavor::RightZero) os << "_right";
  return os.str();
}

FiniteDistributiveLattice make_lattice(LatticeKind kind, std::size_t param) {
  switch (kind) {
    case LatticeKind::Chain: return chain_lattice(param);
    case LatticeKind::Boolean: return boolean_lattice(param);
    case LatticeKind::Divisor: return divisor_lattice(param);
  }
  throw std::invalid_argument("unknown lattice kind");
}

FiniteGroup make_group(GroupKind kind, std::size_t param) {
  switch (kind) {
    case GroupKind::Cyclic: return cyclic_group(param);
    case GroupKind::Klein: return klein_four();
    case GroupKind::Symmetric3: return symmetric_group_3();
  }
  throw std::invalid_argument("unknown group kind");
}

HomMap default_automorphism(GroupKind kind, std::size_t param) {
  switch (kind) {
    case GroupKind::Cyclic: return cyclic_multiplier(param, param - 1);
    case GroupKind::Klein: return HomMap(4, {0, 2, 1, 3});
    case GroupKind::Symmetric3: {
      // Conjugation by the transposition swapping 0 and 1.
      const auto perms = symmetric_group_3_permutations();
      const auto t = std::find(perms.begin(), perms.end(), std::vector<Element>{1, 0, 2});
      return conjugation(symmetric_group_3(), static_cast<Element>(t - perms.begin()));
    }
  }
  throw std::invalid_argument("unknown group kind");
}

FamilyInstance make_instance(const InstanceSpec& spec) {
  const auto lattice = make_lattice(spec.lattice, spec.lattice_param);
  const auto group = make_group(spec.group, spec.group_param);
  if (spec.recipe == Recipe::Identity) return constant_family(lattice, group);
  return twisted_family(lattice, group, default_automorphism(spec.group, spec.group_param));
}

std::vector<InstanceSpec> acceptance_corpus() {
  const std::vector<std::pair<LatticeKind, std::size_t>> lattices{
      {LatticeKind::Chain, 1},   {LatticeKind::Chain, 2},   {LatticeKind::Chain, 3},
      {LatticeKind::Chain, 4},   {LatticeKind::Boolean, 1}, {LatticeKind::Boolean, 2},
      {LatticeKind::Divisor, 12}};
  const std::vector<std::pair<GroupKind, std::size_t>> groups{
      {GroupKind::Cyclic, 1}, {GroupKind::Cyclic, 2}, {GroupKind::Cyclic, 3},
      {GroupKind::Cyclic, 4}, {GroupKind::Klein, 4},  {GroupKind::Symmetric3, 6}};
  std::vector<InstanceSpec> corpus;
  for (const auto& [lk, lp] : lattices)
    for (const auto& [gk, gp] : groups)
      for (Recipe r : {Recipe::Identity, Recipe::Twisted})
        corpus.push_back({lk, lp, gk, gp, r, AddFlavor::LeftZero});
  return corpus;
}

}  // namespace sdlkit
