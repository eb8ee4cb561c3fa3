#pragma once

// Strong distributive lattices of group semirings: connecting-isomorphism
// families and the explicit construction of the union semiring.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdlkit/core.hpp"
#include "sdlkit/group_semiring.hpp"

namespace sdlkit {

/// One finite group per lattice element.
class GroupComponentFamily {
 public:
  GroupComponentFamily(FiniteDistributiveLattice lattice, std::vector<FiniteGroup> components);

  const FiniteDistributiveLattice& lattice() const { return lattice_; }
  const std::vector<FiniteGroup>& components() const { return components_; }
  const FiniteGroup& component(Element alpha) const { return components_[alpha]; }
  /// Σ_α |G_α|.
  std::size_t total_order() const;

 private:
  FiniteDistributiveLattice lattice_;
  std::vector<FiniteGroup> components_;
};

/// Maps between components keyed by (from, to) lattice elements. For the
/// downward family φ the keys are (α, β) with β ≤ α; for the upward family ψ
/// they are (β, α).
class IsoFamily {
 public:
  using Key = std::pair<Element, Element>;

  void set(Element from, Element to, HomMap map);
  bool contains(Element from, Element to) const;
  /// Throws std::out_of_range for a missing key.
  const HomMap& at(Element from, Element to) const;
  const std::map<Key, HomMap>& maps() const { return maps_; }
  std::size_t size() const { return maps_.size(); }

  friend bool operator==(const IsoFamily&, const IsoFamily&) = default;

 private:
  std::map<Key, HomMap> maps_;
};

struct IsoViolation {
  enum class Kind { MissingKey, UnexpectedKey, NotHomomorphism, NotBijective, Sdl1, Sdl2 };
  Kind kind;
  /// (α, β) or (α, β, γ) for SDL2.
  std::vector<Element> where;
  /// The element at which the violation shows, when there is one.
  std::optional<Element> element;
  std::string message;
};

const char* to_string(IsoViolation::Kind kind);

struct IsoValidationReport {
  std::vector<IsoViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every φ_{α,β} (β ≤ α) for presence, homomorphism, bijectivity,
/// SDL1 (φ_{α,α} = id) and SDL2 (φ_{α,β} then φ_{β,γ} equals φ_{α,γ}).
/// Throws std::invalid_argument when a map's sizes disagree with the
/// component orders.
IsoValidationReport validate_iso_family(const GroupComponentFamily& family, const IsoFamily& phi);

/// ψ_{β,α} = φ_{α,β}⁻¹ for every key. Throws std::invalid_argument if some
/// map is not bijective.
IsoFamily derive_psi(const IsoFamily& phi);

/// ψ_{α,α} = id, and ψ_{γ,β} then ψ_{β,α} equals ψ_{γ,α} for γ ≤ β ≤ α.
Verdict check_psi_family(const FiniteDistributiveLattice& lattice, const IsoFamily& psi);

/// For all α, β, γ, δ with α+β ≤ δ and γ ≤ αβ: φ_{α,γ} then ψ_{γ,β} equals
/// ψ_{α,δ} then φ_{δ,β}, pointwise on G_α. Witness (α, β, γ, δ, x).
Verdict check_compatibility(const FiniteDistributiveLattice& lattice, const IsoFamily& phi,
                            const IsoFamily& psi);
Verdict check_compatibility(const GroupComponentFamily& family, const IsoFamily& phi);

/// The special case γ = αβ with α+β ≤ δ.
Verdict check_clause_iii(const FiniteDistributiveLattice& lattice, const IsoFamily& phi,
                         const IsoFamily& psi);

/// Position of an element of the union: lattice element and group element.
struct Label {
  Element component;
  Element element;
  friend bool operator==(const Label&, const Label&) = default;
};

struct SemiringTable {
  BinaryOpTable add;
  BinaryOpTable mul;
  std::optional<std::vector<Label>> labeling;

  std::size_t size() const { return add.size(); }
  friend bool operator==(const SemiringTable&, const SemiringTable&) = default;
};

struct BuildOptions {
  bool self_check = true;
  AddFlavor flavor = AddFlavor::LeftZero;
};

class BuildError : public std::runtime_error {
 public:
  explicit BuildError(const std::string& what, IsoValidationReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  const IsoValidationReport& report() const { return report_; }

 private:
  IsoValidationReport report_;
};

/// First carrier index of each component; components are laid out in
/// lattice-element order.
std::vector<Element> component_offsets(const GroupComponentFamily& family);

/// The union ⋃ G_α with
///   x·y = φ_{α,αβ}(x) · φ_{β,αβ}(y)   in G_{αβ}
///   x+y = ψ_{α,α+β}(x)                 in G_{α+β}   (LeftZero)
/// and x+y = ψ_{β,α+β}(y) for RightZero. Throws BuildError if φ fails
/// validation, or if the self-check finds the output is not a semiring.
SemiringTable build_strong_sdl(const GroupComponentFamily& family, const IsoFamily& phi,
                               const BuildOptions& options = {});

/// Component closure: label(xy).α = αβ and label(x+y).α = α+β for all pairs.
Verdict check_component_closure(const SemiringTable& s, const FiniteDistributiveLattice& lattice);

}  // namespace sdlkit
