#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pact/action.hpp"

namespace pact {

/// A global action together with embeddings phi_e : A_e -> B_e of the
/// object ideals of a partial action.
struct Globalization {
  POAction base;
  POAction global;
  /// Indexed by arrow; set for objects only.
  std::vector<std::optional<LinMap>> embeddings;
  bool minimal = false;

  /// Function ring F = A^|G| (blocks in arrow order) and the data of the
  /// construction. Empty for externally supplied globalizations.
  std::shared_ptr<const Algebra> ambient;
  std::optional<LinMap> inclusion;
  std::vector<Subspace> supports;
  std::vector<LinMap> gamma;
  /// Embeddings written into F.
  std::vector<std::optional<LinMap>> ambient_embeddings;

  /// Result of verify_globalization at construction time.
  Report report;
};

/// Function-ring construction with supports {h : r(h) <= r(g)}.
/// Throws InvalidStructure, NotUnital.
Globalization build_globalization(const POAction& a);

/// Construction with supports {h : g^-1 * h exists} and the pseudoproduct
/// shift. Throws InvalidStructure, NotUnital, NotStrong, NotPseudoassociative.
Globalization build_minimal_globalization(const POAction& a);

/// Wraps a user-supplied global action and embeddings; runs verify_globalization.
Globalization external_globalization(POAction base, POAction global, std::vector<std::optional<LinMap>> embeddings,
                                     bool minimal = false);

/// phi_e = inclusion of the restricted carrier, for an action obtained by
/// restricting `beta`.
std::vector<std::optional<LinMap>> inclusion_embeddings(const RestrictedAction& r, const POAction& beta);

/// Globality of beta, embeddings, conditions (i)-(iv), (iv') when minimal, and
/// equivalence of the restriction of beta to {phi_e(A_e)} with the base.
Report verify_globalization(const Globalization& g);

struct InvSgpGlobalization {
  InvSgpAction global;
  /// Indexed by element; set for idempotents only.
  std::vector<std::optional<LinMap>> embeddings;
  Globalization groupoid_level;
  Report report;
};

/// Transport to the groupoid, minimal globalization, transport back.
/// Throws NotPreunital, NotUnital.
InvSgpGlobalization globalize_inverse_semigroup_action(const InvSgpAction& a);

/// Global action, embeddings and conditions (i)-(iv) for inverse semigroups.
Report verify_inv_sgp_globalization(const InvSgpAction& base, const InvSgpAction& global,
                                    const std::vector<std::optional<LinMap>>& embeddings);

}  // namespace pact
