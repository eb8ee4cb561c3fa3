#pragma once

// Deterministic factories for small groups, lattices, connecting families and
// the positive/negative test instances.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdlkit/core.hpp"
#include "sdlkit/group_semiring.hpp"
#include "sdlkit/sdl.hpp"

namespace sdlkit {

/// Z_n under addition mod n. Throws std::invalid_argument for n = 0.
FiniteGroup cyclic_group(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order, (p·q)(i) = p(q(i)).
FiniteGroup symmetric_group_3();
/// Z_2 × Z_2 as 2-bit masks under xor.
FiniteGroup klein_four();

/// The permutations underlying symmetric_group_3, element by element.
std::vector<std::vector<Element>> symmetric_group_3_permutations();

/// {0 < 1 < … < n-1}.
FiniteDistributiveLattice chain_lattice(std::size_t n);
/// Subsets of a k-set as bitmasks, k ≤ 4.
FiniteDistributiveLattice boolean_lattice(std::size_t k);
/// Divisors of n in ascending order under lcm/gcd; at most 16 divisors.
FiniteDistributiveLattice divisor_lattice(std::size_t n);
std::vector<std::size_t> divisors(std::size_t n);
/// The diamond M3 as raw tables (0 bottom, 1..3 atoms, 4 top); not distributive.
std::pair<BinaryOpTable, BinaryOpTable> diamond_m3_tables();

/// x ↦ g x g⁻¹.
HomMap conjugation(const FiniteGroup& group, Element g);
/// x ↦ k·x on Z_n.
HomMap cyclic_multiplier(std::size_t n, std::size_t k);
/// f composed with itself `power` times (identity for 0).
HomMap map_power(const HomMap& f, std::size_t power);

struct FamilyInstance {
  GroupComponentFamily family;
  IsoFamily phi;
};

/// All components equal to `group`, every φ the identity.
FamilyInstance constant_family(const FiniteDistributiveLattice& lattice, const FiniteGroup& group);

inline FamilyInstance build_free_product_example(const FiniteDistributiveLattice& lattice,
                                                 const FiniteGroup& group) {
  return constant_family(lattice, group);
}

/// φ_{α,β} = a^(h(α) − h(β)) with h the height function. Throws
/// std::invalid_argument if `a` is not an automorphism of `group`.
FamilyInstance twisted_family(const FiniteDistributiveLattice& lattice, const FiniteGroup& group,
                              const HomMap& automorphism);

/// Three-element chain over Z_3 with φ_{2,1} = φ_{1,0} = φ_{2,0} = (x ↦ 2x).
/// The composite along the chain is the identity, so SDL2 fails at (2,1,0).
FamilyInstance sdl2_violating_family();

/// First semiring (in odometer order over the cross-component cells) on the
/// disjoint union of `groups` in which every component is its left-zero group
/// semiring and sums/products land in the join/meet component. Cells inside
/// a component are fixed; each cross-component cell ranges over its target
/// component.
std::optional<SemiringTable> search_lattice_of_group_semirings(
    const FiniteDistributiveLattice& lattice, const std::vector<FiniteGroup>& groups);

/// A distributive lattice of two group semirings over the 2-chain that is not
/// strong: the trivial group below Z_2. (Z_2 below the trivial group admits
/// no such semiring; the search tries that placement first.)
SemiringTable non_strong_counterexample();

enum class LatticeKind { Chain, Boolean, Divisor };
enum class GroupKind { Cyclic, Klein, Symmetric3 };
enum class Recipe { Identity, Twisted };

/// Declarative description of a generated family.
struct InstanceSpec {
  LatticeKind lattice = LatticeKind::Chain;
  std::size_t lattice_param = 1;
  GroupKind group = GroupKind::Cyclic;
  std::size_t group_param = 1;
  Recipe recipe = Recipe::Identity;
  AddFlavor flavor = AddFlavor::LeftZero;

  std::string name() const;
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

FiniteDistributiveLattice make_lattice(LatticeKind kind, std::size_t param);
FiniteGroup make_group(GroupKind kind, std::size_t param);
/// Automorphism used by the twisted recipe: x ↦ -x on Z_n, conjugation by a
/// transposition on S_3, and swapping two generators on the Klein group.
HomMap default_automorphism(GroupKind kind, std::size_t param);

FamilyInstance make_instance(const InstanceSpec& spec);

/// Chains 1..4, Boolean lattices 1..2 and the divisors of 12 crossed with
/// Z_1..Z_4, the Klein group and S_3, under both recipes.
std::vector<InstanceSpec> acceptance_corpus();

}  // namespace sdlkit
