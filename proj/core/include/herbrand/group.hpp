#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace herbrand {

using Elem = std::uint32_t;

/// Finite group with elements 0 .. order()-1; element 0 is always the
/// identity. Immutable and cheap to copy (shared implementation).
///
/// Small groups are stored as a full Cayley table. Direct powers and
/// subgroups of large groups are implicit so that induced groups such as
/// S_3^8 (1.7M elements) stay usable.
class FiniteGroup {
 public:
  struct Impl;

  FiniteGroup();  // trivial group

  /// Validates closure, associativity, identity and inverses; the identity is
  /// relabelled to 0. Throws ErrorCode::invalid_structure.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::string name = "G");
  /// Group of permutations of {0..n-1} (images listed), closed under composition.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators, std::string name);

  static FiniteGroup cyclic(std::uint32_t n);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();

  /// base^k with componentwise multiplication; element index is the mixed
  /// radix encoding sum c_i |base|^i.
  static FiniteGroup power(const FiniteGroup& base, std::size_t k);
  /// Subgroup of `parent` given by parent indices (must contain the identity
  /// and be closed). Subgroup element i corresponds to sorted elements[i].
  static FiniteGroup subgroup_of(const FiniteGroup& parent, std::vector<Elem> elements, std::string name);

  /// Same group with the same element indices, stored as a Cayley table.
  FiniteGroup materialized() const;
  bool is_table() const;

  std::size_t order() const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  static constexpr Elem identity() { return 0; }
  const std::string& name() const;
  std::string label(Elem a) const;

  /// Deterministic generating set (greedy over increasing indices).
  const std::vector<Elem>& generators() const;
  bool is_abelian() const;
  Elem pow(Elem a, std::int64_t k) const;
  std::uint32_t element_order(Elem a) const;

  /// For power groups: the factor and the coordinates of an element.
  bool is_power() const;
  const FiniteGroup& power_base() const;
  std::size_t power_rank() const;
  void decode(Elem a, std::span<Elem> coords) const;
  Elem encode(std::span<const Elem> coords) const;
  Elem coordinate(Elem a, std::size_t i) const;

  /// For subgroups created with subgroup_of: parent index of element a, and
  /// the inverse lookup (returns npos if not a member).
  bool is_subgroup() const;
  Elem to_parent(Elem a) const;
  Elem from_parent(Elem parent_elem) const;
  static constexpr Elem npos = 0xffffffffu;

 private:
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Smallest subgroup containing `gens`, as sorted element indices.
std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens);
/// Deterministic generators of the subgroup whose elements are listed.
std::vector<Elem> generators_of(const FiniteGroup& g, std::span<const Elem> elements);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements);
bool is_normal(const FiniteGroup& g, std::span<const Elem> elements);
/// Every subgroup, ordered by size then lexicographically.
std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g);

/// A subgroup of a small group materialised as its own table group.
struct Subgroup {
  FiniteGroup group;
  std::vector<Elem> embedding;  // subgroup index -> parent index
};
Subgroup make_subgroup(const FiniteGroup& parent, std::span<const Elem> elements, std::string name);

/// g / N for a normal subgroup N of a small group.
struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;  // g index -> quotient index
  std::vector<Elem> section;     // quotient index -> lowest g index in the coset
};
Quotient make_quotient(const FiniteGroup& g, std::span<const Elem> normal_subgroup);

/// A finite group A with an action of a finite group g by automorphisms.
class GGroup {
 public:
  using Action = std::function<Elem(Elem x, Elem a)>;

  /// `act(x, a)` is x.a. Checks the action axioms: exhaustively over A when
  /// |g| |A| is small, on generators otherwise.
  GGroup(FiniteGroup acting, FiniteGroup coefficients, Action act);

  static GGroup trivial_action(FiniteGroup acting, FiniteGroup coefficients);
  /// x acts as `involution` when sign[x] = 1 and trivially otherwise.
  static GGroup twisted_by_sign(FiniteGroup acting, FiniteGroup coefficients,
                                std::vector<int> sign, std::vector<Elem> involution);

  const FiniteGroup& acting() const { return acting_; }
  const FiniteGroup& coefficients() const { return coeff_; }
  Elem act(Elem x, Elem a) const { return act_(x, a); }
  const Action& action() const { return act_; }

 private:
  FiniteGroup acting_;
  FiniteGroup coeff_;
  Action act_;
};

/// The automorphism x -> x^{-1} of an abelian group, or conjugation by an
/// element for a non-abelian one.
std::vector<Elem> inversion_map(const FiniteGroup& a);
std::vector<Elem> conjugation_map(const FiniteGroup& a, Elem by);

/// A homomorphism g -> Z/2 with kernel the lowest index-2 subgroup, if any.
std::optional<std::vector<int>> sign_character(const FiniteGroup& g);

}  // namespace herbrand
