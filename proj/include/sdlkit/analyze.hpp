#pragma once

// Decomposition and classification of arbitrary finite semirings.

#include <map>
#include <optional>
#include <vector>

#include "sdlkit/core.hpp"
#include "sdlkit/group_semiring.hpp"
#include "sdlkit/sdl.hpp"

namespace sdlkit {

/// Both associativities and both distributive laws, in that order; the
/// witness is the first failing triple. Throws std::invalid_argument on a
/// carrier size mismatch.
Verdict check_semiring(const BinaryOpTable& add, const BinaryOpTable& mul);

/// {x : x·x = x}, ascending.
std::vector<Element> multiplicative_idempotents(const BinaryOpTable& mul);

/// E(S) with the restricted operations, add as join and mul as meet. Lattice
/// index i corresponds to carrier element `elements[i]`.
struct IdempotentLattice {
  std::vector<Element> elements;
  std::optional<FiniteDistributiveLattice> lattice;
  Verdict verdict;
};

IdempotentLattice idempotent_subsemiring(const BinaryOpTable& add, const BinaryOpTable& mul,
                                         const std::vector<Element>& idempotents);

/// Partition of the carrier into Green's H-classes; class ids follow the
/// smallest member. Computed with principal ideals in S¹.
std::vector<std::vector<Element>> h_classes(const BinaryOpTable& mul);

/// Completely regular (every H-class holds an idempotent) with central
/// idempotents. Fails with "not associative" if the precondition is broken.
Verdict is_clifford(const BinaryOpTable& mul);

/// x+x = x and x+y+z = x+z+y.
Verdict is_left_normal_band(const BinaryOpTable& add);
/// x+x = x and x+y+z = y+x+z.
Verdict is_right_normal_band(const BinaryOpTable& add);
/// x+x = x and x+y+z+w = x+z+y+w.
Verdict is_normal_band(const BinaryOpTable& add);
/// Left or right normal band depending on the flavor.
Verdict is_flavored_normal_band(const BinaryOpTable& add, AddFlavor flavor);

/// The maximal subgroups of a Clifford semigroup. Component i is the H-class
/// of `idempotents[i]` (ascending); members are ascending, so `position`
/// gives an element's index inside its group.
struct ComponentDecomposition {
  std::vector<Element> idempotents;
  std::vector<std::vector<Element>> members;
  std::vector<Element> component_of;
  std::vector<Element> position;

  std::map<Element, std::vector<Element>> as_map() const;
};

/// Throws std::invalid_argument unless is_clifford(mul) holds.
ComponentDecomposition decompose_components(const BinaryOpTable& mul);

/// x·y lands in the component of e_x·e_y and x+y in the component of
/// e_x+e_y, for the E(S) lattice indexing of `components`.
Verdict check_decomposition_closure(const BinaryOpTable& add, const BinaryOpTable& mul,
                                    const ComponentDecomposition& components,
                                    const FiniteDistributiveLattice& e_lattice);

struct Recovery {
  /// Restricted multiplication on each component, when every component is a
  /// group.
  std::vector<FiniteGroup> groups;
  /// φ_{α,β}(x) = x·e_β and ψ_{β,α}(y) = y+e_α, in component-local indices.
  IsoFamily phi;
  IsoFamily psi;
  /// True iff S is a strong distributive lattice of the group semirings.
  Verdict verdict;
};

Recovery recover_connecting_maps(const SemiringTable& s, const ComponentDecomposition& components,
                                 const FiniteDistributiveLattice& e_lattice,
                                 AddFlavor flavor = AddFlavor::LeftZero);

/// Isomorphisms G_α → G_β for every ordered pair, via ψ_{α,α+β} then
/// φ_{α+β,β}. The verdict fails if some composite is not a group isomorphism.
struct ComponentIsomorphisms {
  IsoFamily maps;
  Verdict verdict;
};

ComponentIsomorphisms component_isomorphisms(const FiniteDistributiveLattice& e_lattice,
                                             const Recovery& recovery);

/// Join- and meet-preserving bijection a → b, by backtracking.
std::optional<std::vector<Element>> lattice_isomorphism(const FiniteDistributiveLattice& a,
                                                        const FiniteDistributiveLattice& b);

/// Fields left empty were not evaluated because an earlier stage failed.
struct AnalysisReport {
  AddFlavor flavor = AddFlavor::LeftZero;
  Verdict is_semiring;
  std::optional<std::vector<Element>> idempotents;
  std::optional<Verdict> is_clifford_mul;
  std::optional<Verdict> is_normal_band_add;
  std::optional<Verdict> is_plain_normal_band_add;
  std::optional<ComponentDecomposition> components;
  std::optional<IdempotentLattice> idempotent_lattice;
  std::optional<Verdict> component_closure;
  std::optional<Recovery> recovery;
  std::optional<bool> is_strong_sdl_of_group_semirings;
};

AnalysisReport full_analysis(const BinaryOpTable& add, const BinaryOpTable& mul,
                             AddFlavor flavor = AddFlavor::LeftZero);

/// The six statements about a strong distributive lattice of group semirings,
/// checked on a labelled construction against the family it was built from.
struct ConnectingTheoremReport {
  Verdict idempotents;          // (i)
  Verdict addition_degenerate;  // (ii)
  Verdict maps_are_translations;  // (iii)
  Verdict phi_composes;         // (iv)
  Verdict mutually_inverse;     // (v)
  Verdict compatibility;        // (vi)

  bool all() const;
};

ConnectingTheoremReport check_connecting_theorem(const SemiringTable& s,
                                                 const GroupComponentFamily& family,
                                                 const IsoFamily& phi,
                                                 AddFlavor flavor = AddFlavor::LeftZero);

/// Build, analyze, and compare what analysis recovers with the input:
/// lattice (through α ↦ e_α), component orders, and φ, ψ pointwise.
Verdict verify_round_trip(const GroupComponentFamily& family, const IsoFamily& phi,
                          AddFlavor flavor = AddFlavor::LeftZero);

}  // namespace sdlkit
