#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pact/action.hpp"
#include "pact/algebra.hpp"
#include "pact/globalization.hpp"
#include "pact/report.hpp"

namespace pact {

/// Ideals A_x of one carrier indexed by labels x (arrows or semigroup
/// elements), with the rule for (a delta_x)(b delta_y).
struct GradedSystem {
  std::shared_ptr<const Algebra> carrier;
  std::vector<Subspace> pieces;
  std::vector<std::string> names;
  /// Label and carrier element of the product; nullopt when xy is undefined.
  std::function<std::optional<std::pair<std::size_t, Vector>>(std::size_t, const Vector&, std::size_t, const Vector&)>
      product;
  /// Strict pairs (x, y) with x < y, used for N.
  std::vector<std::pair<std::size_t, std::size_t>> order;
};

struct SkewRing {
  GradedSystem system;
  Algebra algebra;
  /// grading[i] is the label of basis vector i.
  std::vector<std::size_t> grading;
  /// First basis index of each piece.
  std::vector<std::size_t> offset;

  std::size_t dim() const { return algebra.dim(); }
  /// a delta_x for a in A_x (carrier coordinates). Throws NotContained.
  Vector element(std::size_t x, const Vector& a) const;
  /// Label of the first nonzero coordinate, if the element is homogeneous.
  std::optional<std::size_t> degree(const Vector& v) const;
};

/// Builds the skew ring from the displayed product rule. Records (does not
/// throw) associativity failures.
SkewRing build_skew(const GradedSystem& s);
/// A ⋉ G for a P.O. action. Throws InvalidStructure when a is not valid.
SkewRing build_skew(const POAction& a);
GradedSystem graded_system(const POAction& a);
GradedSystem graded_system(const InvSgpAction& a);

/// Associator scan on all basis triples.
Report check_skew_associative(const SkewRing& s);
/// Every product of basis vectors of degrees x, y has degree xy or is zero.
bool check_grading(const SkewRing& s);

struct OrderedSkewRing {
  SkewRing skew;
  Subspace n_ideal;
  Quotient quotient;

  const Algebra& algebra() const { return quotient.algebra; }
  std::size_t dim() const { return quotient.algebra.dim(); }
  /// Image of a delta_x in the quotient.
  Vector element(std::size_t x, const Vector& a) const;
};

/// N = ideal generated by a delta_x - a delta_y for x < y, a in a basis of
/// A_x; quotient by N. Throws NotAssociative.
OrderedSkewRing build_ordered_skew(SkewRing s);

/// Image of sum_e 1_e delta_e. Throws NotPreunital.
Vector skew_unit(const OrderedSkewRing& o, const POAction& a);
bool is_two_sided_identity(const Algebra& alg, const Vector& u);

/// A ⋉ S = L / N for a unital inverse semigroup action. Throws
/// InvalidStructure, NotUnital.
OrderedSkewRing build_inv_sgp_skew(const InvSgpAction& a);
/// Join of the commuting idempotents 1_e delta_e over E(S), i.e. the
/// inclusion-exclusion sum; the plain sum is not an identity once
/// comparable idempotents are identified. Throws NotPreunital.
Vector skew_unit(const OrderedSkewRing& o, const InvSgpAction& a);

struct MoritaReport {
  OrderedSkewRing R;
  OrderedSkewRing T;
  /// 1_R inside T.
  Vector one_R;
  /// Image of R in T.
  Subspace r_image;
  Subspace t_one_r;
  Subspace one_r_t;
  Subspace one_r_t_one_r;
  Subspace t_one_r_t;
  Report report;
};

/// R = A ⋉^o G, T = B ⋉^o G with A identified with its image in B.
/// Throws NotUnital, NotAGlobalization.
MoritaReport morita_context(const POAction& a, const Globalization& g);
/// Same for an inverse semigroup action and its globalization.
MoritaReport morita_context(const InvSgpAction& a, const InvSgpGlobalization& g);

/// span{xy : x in u, y in v} inside alg.
Subspace product_span(const Algebra& alg, const Subspace& u, const Subspace& v);

}  // namespace pact
