#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pact/algebra.hpp"
#include "pact/groupoid.hpp"
#include "pact/linmap.hpp"
#include "pact/report.hpp"
#include "pact/semigroup.hpp"

namespace pact {

/// A family (A_g, alpha_g) indexed by the arrows of an ordered groupoid:
/// ideals of the carrier and maps alpha_g : A_{g^-1} -> A_g.
struct POAction {
  std::shared_ptr<const OrderedGroupoid> groupoid;
  std::shared_ptr<const Algebra> carrier;
  std::vector<Subspace> ideals;
  std::vector<LinMap> maps;

  /// Checks shapes only: one ideal and map per arrow, map g runs from the
  /// ideal of g^-1 to the ideal of g. Axioms are checked by validate_po_action.
  POAction(std::shared_ptr<const OrderedGroupoid> g, std::shared_ptr<const Algebra> a, std::vector<Subspace> ideals,
           std::vector<LinMap> maps);

  std::size_t size() const { return ideals.size(); }
  const Subspace& ideal(Arrow g) const { return ideals.at(g); }
  const LinMap& map(Arrow g) const { return maps.at(g); }
  const OrderedGroupoid& G() const { return *groupoid; }
  const Algebra& A() const { return *carrier; }
};

/// Builds an action from ideals only, with identity maps on objects and
/// alpha_g given by `maps` for the remaining arrows.
POAction make_action(std::shared_ptr<const OrderedGroupoid> g, std::shared_ptr<const Algebra> a,
                     std::vector<Subspace> ideals, std::vector<std::optional<LinMap>> maps);

/// Ideal chains, isomorphisms, (P1)-(P3), (PO) and the derived identities
/// alpha_g^{-1} = alpha_{g^{-1}}, alpha_g(A_{g^-1} cap A_h) = A_g cap A_{gh}.
Report validate_po_action(const POAction& a);

/// Identity of each A_g when it is a central idempotent of the carrier.
std::vector<std::optional<Vector>> units(const POAction& a);
bool is_preunital(const POAction& a);
bool is_unital(const POAction& a);
/// First arrow whose ideal is not generated by a central idempotent.
std::optional<Arrow> first_non_unital(const POAction& a);
bool is_global(const POAction& a);
/// A_{(e|g)} = A_e cap A_g for every object e <= r(g).
bool is_strong(const POAction& a);
/// Report of the strength equalities with witnesses (clause PO is not used).
std::optional<std::string> strength_witness(const POAction& a);
/// First pair of objects e, f with A_{e ^ f} != A_e cap A_f, if any. (PS)
/// implies these equalities; strength alone does not.
std::optional<std::string> meet_intersection_witness(const POAction& a);
/// alpha_g o alpha_h = alpha_{g*h} o Id_{A_{h^-1}} as partial maps.
bool satisfies_ps(const POAction& a);
Report check_ps(const POAction& a);

/// An action together with the embedding of its carrier into a larger ring.
struct RestrictedAction {
  POAction action;
  /// From the carrier's full space into the ambient ring.
  LinMap inclusion;
};

/// A_e = A cap B_e, A_g = A_{r(g)} cap beta_g(A_{d(g)}). The carrier of the
/// result is A with coordinates in A's canonical basis.
/// Throws NotGlobal, NotAnIdeal.
RestrictedAction standard_restriction(const POAction& beta, const Subspace& ideal);

/// family[e] for objects e (entries for other arrows are ignored).
/// Throws NotGlobal, NotContained; with `strict` also NotAnIdeal and
/// NotMonotone. Lenient mode only needs family[e] inside B_e and a
/// multiplicatively closed sum.
RestrictedAction general_restriction(const POAction& beta, const std::vector<Subspace>& family, bool strict = true);

/// Per-object ring isomorphisms phi_e : A_e -> C_e (entries for non-objects empty).
struct EquivalenceWitness {
  std::vector<std::optional<LinMap>> maps;
};

/// Throws GroupoidMismatch when the groupoids differ.
Report verify_equivalence(const POAction& a, const POAction& c, const EquivalenceWitness& w);
EquivalenceWitness identity_witness(const POAction& a);
EquivalenceWitness inverse_witness(const POAction& a, const EquivalenceWitness& w);
/// w2 after w1.
EquivalenceWitness compose_witnesses(const POAction& a, const EquivalenceWitness& w1, const EquivalenceWitness& w2);

struct EquivalenceSearch {
  enum class Outcome { Found, DisprovedByInvariant, NoneInStrategyClass };
  Outcome outcome;
  std::optional<EquivalenceWitness> witness;
  std::string reason;
  std::uint64_t nodes = 0;
};

std::string to_string(EquivalenceSearch::Outcome o);

/// Dimension invariants first; then bijections between primitive
/// idempotents of split commutative object ideals; otherwise exhaustive
/// matrices when p^(d^2) fits in the budget. Throws BudgetExceeded.
EquivalenceSearch search_equivalence(const POAction& a, const POAction& c, std::uint64_t budget = 1'000'000);

/// Primitive orthogonal idempotents summing to the identity of `sub`, when
/// sub is a commutative ring isomorphic to F_p^k. Empty vector for sub = 0.
std::optional<std::vector<Vector>> primitive_idempotents(const Algebra& alg, const Subspace& sub);

/// Same action over the relabeled groupoid (arrow g becomes perm[g]).
POAction relabel(const POAction& a, const std::vector<Arrow>& perm);

/// Partial action (A_s, alpha_s) of an inverse semigroup.
struct InvSgpAction {
  std::shared_ptr<const InverseSemigroup> semigroup;
  std::shared_ptr<const Algebra> carrier;
  std::vector<Subspace> ideals;
  std::vector<LinMap> maps;

  InvSgpAction(std::shared_ptr<const InverseSemigroup> s, std::shared_ptr<const Algebra> a, std::vector<Subspace> ideals,
               std::vector<LinMap> maps);

  const InverseSemigroup& S() const { return *semigroup; }
  const Algebra& A() const { return *carrier; }
};

/// Ideal chains, isomorphisms, (P1'), (P2'), (P3').
Report validate_inv_sgp_action(const InvSgpAction& a);
bool is_preunital(const InvSgpAction& a);
bool is_unital(const InvSgpAction& a);
std::optional<Element> first_non_unital(const InvSgpAction& a);
bool is_global(const InvSgpAction& a);

/// s -> alpha_s as a map into I(A).
PartialBijectionPremorphism induced_premorphism(const InvSgpAction& a);

/// Same data over the groupoid of the semigroup. Throws NotPreunital;
/// throws TheoremViolation if the result is not a strong P.O. action.
POAction semigroup_action_to_groupoid_action(const InvSgpAction& a);
/// Throws GroupoidMismatch, NotGlobal.
InvSgpAction groupoid_action_to_semigroup_action(const POAction& a, std::shared_ptr<const InverseSemigroup> s);
/// As above without the globality requirement.
InvSgpAction transport_partial_action(const POAction& a, std::shared_ptr<const InverseSemigroup> s);

/// Structural equality of groupoids (names ignored).
bool same_groupoid(const OrderedGroupoid& g, const OrderedGroupoid& h);

}  // namespace pact
