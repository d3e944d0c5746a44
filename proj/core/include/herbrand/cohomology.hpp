#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "herbrand/group.hpp"

namespace herbrand {

/// A 1-cochain g -> A, stored as its value at every element of g.
using Cocycle = std::vector<Elem>;

struct H1Options {
  /// Upper bound on candidate values tried, summed over all generator
  /// levels of the search (one scan of A per surviving orbit representative).
  std::uint64_t budget = 10'000'000;
};

/// H^1(g, A) for a finite g-group A: one canonical representative per
/// cohomology class, sorted lexicographically by their values. Class 0 is
/// always the class of the unit cocycle.
class H1PointedSet {
 public:
  struct Data;

  std::size_t size() const;
  const std::vector<Cocycle>& classes() const;
  std::size_t distinguished() const { return 0; }
  /// |Z^1(g, A)|, the number of cocycles.
  std::uint64_t cocycle_count() const;
  const GGroup& module() const;

  /// Index of the class containing `c`. Throws ErrorCode::invalid_structure
  /// if `c` is not a cocycle.
  std::size_t classify(const Cocycle& c) const;

 private:
  friend H1PointedSet enumerate_h1(const GGroup& m, const H1Options& options);
  explicit H1PointedSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Enumerates H^1 by assigning cocycle values generator by generator,
/// keeping one orbit representative (the smallest) under the stabiliser of
/// the values chosen so far. Throws ErrorCode::budget_exceeded.
H1PointedSet enumerate_h1(const GGroup& m, const H1Options& options = {});

/// alpha(xy) = alpha(x) (x . alpha(y)) for all x, y.
bool is_cocycle(const GGroup& m, const Cocycle& c);
/// x -> a^{-1} c(x) (x . a), a cocycle cohomologous to c.
Cocycle twist(const GGroup& m, const Cocycle& c, Elem a);

/// Ind_h^g A: h-equivariant maps f: g -> A, f(hx) = h.f(x), with g acting by
/// (y.f)(x) = f(xy). An element is stored by its values on the right coset
/// representatives of h in g (lowest index in each coset h x).
struct InducedGroup {
  GGroup base;
  GGroup module;
  std::vector<Elem> coset_reps;
  std::vector<std::uint32_t> coset_of;  // g element -> coset index
  std::vector<Elem> h_part;             // x = h_part[x] * coset_reps[coset_of[x]] (subgroup index)

  /// f(x) in A.
  Elem evaluate(Elem f, Elem x) const;
};

/// `m` must be a g-group for h.group (the subgroup as a group in its own right).
InducedGroup induce(const FiniteGroup& g, const Subgroup& h, const GGroup& m);

/// A^N for N a subgroup of the acting group (listed by acting-group indices).
FiniteGroup fixed_points(const GGroup& m, std::span<const Elem> subgroup);

/// A^N with the induced action of g/N.
GGroup quotient_module(const GGroup& m, const Quotient& q, const FiniteGroup& fixed);

struct CheckResult {
  bool passed = false;
  std::size_t lhs_size = 0;
  std::size_t rhs_size = 0;
  std::string detail;  // counterexample or failing condition when !passed
  explicit operator bool() const { return passed; }
};

struct CheckOptions {
  H1Options h1;
  /// Coefficient groups up to this order get an exhaustive well-definedness
  /// check over whole cohomology classes; larger ones use generator twists
  /// plus a seeded random walk.
  std::size_t exhaustive_limit = 4096;
  std::uint64_t seed = 0;
};

/// H^1(g, Ind_h^g A) -> H^1(h, A), [alpha] -> [s -> alpha(s)(1)], is a
/// well-defined bijection of pointed sets.
CheckResult shapiro_check(const FiniteGroup& g, const Subgroup& h, const GGroup& m,
                          const CheckOptions& options = {});

/// Inflation H^1(g/u, A^u) -> H^1(g, A) is injective on classes.
CheckResult inflation_injectivity_check(const FiniteGroup& g, std::span<const Elem> normal_subgroup,
                                        const GGroup& m, const CheckOptions& options = {});

/// (Ind_H^J M)^A ~ Ind_{H/B}^{J/A} M^B with B = H n A, through f -> (xA -> f(x)),
/// checked element by element including J/A-equivariance.
CheckResult submodule_lemma_check(const FiniteGroup& j, const Subgroup& h, std::span<const Elem> normal_subgroup,
                                  const GGroup& m, const CheckOptions& options = {});

/// H^1(g/N, (A*)^N) ~ H^1(h/(h n N), A^{h n N}) with A* = Ind_h^g A, plus
/// injectivity of h/(h n N) -> g/N.
CheckResult refined_shapiro_check(const FiniteGroup& g, const Subgroup& h, std::span<const Elem> normal_subgroup,
                                  const GGroup& m, const CheckOptions& options = {});

}  // namespace herbrand
