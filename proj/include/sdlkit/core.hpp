#pragma once

// Finite binary operations given by Cayley tables over dense element indices,
// plus exhaustive checkers for the usual axioms.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdlkit {

using Element = std::size_t;

/// Outcome of an exhaustive check. `witness` holds the lexicographically
/// first counterexample (elements, or lattice indices plus an element) when
/// the check fails.
struct Verdict {
  bool holds = true;
  std::string reason;
  std::vector<Element> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why, std::vector<Element> where = {}) {
    return {false, std::move(why), std::move(where)};
  }
  explicit operator bool() const { return holds; }
};

std::string describe(const Verdict& v);

/// n×n operation table, row-major. Entries are validated on construction;
/// an out-of-range entry throws std::invalid_argument.
class BinaryOpTable {
 public:
  BinaryOpTable(std::size_t n, std::vector<Element> entries);

  static BinaryOpTable from_rows(const std::vector<std::vector<Element>>& rows);

  template <class F>
  static BinaryOpTable from_function(std::size_t n, F&& f) {
    std::vector<Element> e(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) e[x * n + y] = f(x, y);
    return BinaryOpTable(n, std::move(e));
  }

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return entries_[x * n_ + y]; }
  std::span<const Element> row(Element x) const {
    return {entries_.data() + x * n_, n_};
  }
  const std::vector<Element>& entries() const { return entries_; }

  /// Table of (x, y) ↦ (y, x) evaluation, i.e. the opposite operation.
  BinaryOpTable transposed() const;

  /// Restriction to `subset` (re-indexed by position in `subset`). Returns
  /// nullopt if the subset is not closed under the operation.
  std::optional<BinaryOpTable> restrict_to(std::span<const Element> subset) const;

  friend bool operator==(const BinaryOpTable&, const BinaryOpTable&) = default;

 private:
  std::size_t n_;
  std::vector<Element> entries_;
};

Verdict check_associative(const BinaryOpTable& op);
Verdict check_commutative(const BinaryOpTable& op);
Verdict check_idempotent(const BinaryOpTable& op);

struct GroupCheck;
class FiniteGroup;
GroupCheck check_group(const BinaryOpTable& op);

class FiniteGroup {
 public:
  const BinaryOpTable& op() const { return op_; }
  Element identity() const { return identity_; }
  const std::vector<Element>& inverse() const { return inverse_; }
  std::size_t order() const { return op_.size(); }
  Element operator()(Element x, Element y) const { return op_(x, y); }

  /// Throws std::invalid_argument if `op` is not a group.
  static FiniteGroup from_table(BinaryOpTable op);

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  friend GroupCheck check_group(const BinaryOpTable& op);
  FiniteGroup(BinaryOpTable op, Element identity, std::vector<Element> inverse)
      : op_(std::move(op)), identity_(identity), inverse_(std::move(inverse)) {}

  BinaryOpTable op_;
  Element identity_;
  std::vector<Element> inverse_;
};

struct GroupCheck {
  std::optional<FiniteGroup> group;
  Verdict verdict;
};

/// Locates the identity and inverses. Failure reasons: "not associative",
/// "no identity", "element without inverse".
GroupCheck check_group(const BinaryOpTable& op);

/// Join (+) and meet (·) over a shared carrier. Construct through
/// `from_tables`, which runs check_distributive_lattice.
class FiniteDistributiveLattice {
 public:
  static FiniteDistributiveLattice from_tables(BinaryOpTable join, BinaryOpTable meet);

  std::size_t size() const { return join_.size(); }
  const BinaryOpTable& join() const { return join_; }
  const BinaryOpTable& meet() const { return meet_; }
  Element join(Element a, Element b) const { return join_(a, b); }
  Element meet(Element a, Element b) const { return meet_(a, b); }

  /// lower ≤ upper, i.e. meet(upper, lower) == lower.
  bool leq(Element lower, Element upper) const { return meet_(upper, lower) == lower; }

  Element bottom() const;
  Element top() const;

  friend bool operator==(const FiniteDistributiveLattice&,
                         const FiniteDistributiveLattice&) = default;

 private:
  FiniteDistributiveLattice(BinaryOpTable join, BinaryOpTable meet)
      : join_(std::move(join)), meet_(std::move(meet)) {}

  BinaryOpTable join_;
  BinaryOpTable meet_;
};

/// Throws std::invalid_argument on carrier size mismatch; otherwise reports
/// the first violated lattice law.
Verdict check_distributive_lattice(const BinaryOpTable& join, const BinaryOpTable& meet);

/// Pairs (β, α) with β ≤ α, sorted. Derived from the meet.
std::vector<std::pair<Element, Element>> partial_order(const FiniteDistributiveLattice& lattice);

/// Same relation derived from the join (β ≤ α iff α + β = α).
std::vector<std::pair<Element, Element>> partial_order_from_join(
    const FiniteDistributiveLattice& lattice);

/// Length of the longest chain from the bottom element to each element.
std::vector<std::size_t> height_function(const FiniteDistributiveLattice& lattice);

/// A total map between finite carriers.
class HomMap {
 public:
  HomMap(std::size_t target_size, std::vector<Element> map);

  static HomMap identity(std::size_t n);

  std::size_t source_size() const { return map_.size(); }
  std::size_t target_size() const { return target_size_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  bool is_bijective() const;
  /// Two-sided inverse; nullopt unless bijective.
  std::optional<HomMap> inverse() const;
  /// x ↦ next(this(x)): apply *this first.
  HomMap then(const HomMap& next) const;

  friend bool operator==(const HomMap&, const HomMap&) = default;

 private:
  std::size_t target_size_;
  std::vector<Element> map_;
};

/// f(xy) = f(x)f(y) for all pairs; witness is the first failing (x, y).
/// Throws std::invalid_argument on size mismatch.
Verdict is_homomorphism(const HomMap& f, const BinaryOpTable& src, const BinaryOpTable& dst);

Verdict is_semiring_homomorphism(const HomMap& f, const BinaryOpTable& src_add,
                                 const BinaryOpTable& src_mul, const BinaryOpTable& dst_add,
                                 const BinaryOpTable& dst_mul);

}  // namespace sdlkit
