#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pact/groupoid.hpp"
#include "pact/linmap.hpp"
#include "pact/report.hpp"

namespace pact {

using Element = std::size_t;

/// Raw multiplication table; mult[s * n + t] = st.
struct SemigroupData {
  std::vector<std::string> names;
  std::vector<Element> mult;

  std::size_t size() const { return names.size(); }
  Element index(std::string_view name) const;
};

class InverseSemigroup {
 public:
  /// Derives inverses, idempotents and the natural order, then validates.
  explicit InverseSemigroup(SemigroupData data);
  /// Throws InvalidStructure when validation fails.
  static InverseSemigroup validated(SemigroupData data);

  const SemigroupData& data() const { return data_; }
  std::size_t size() const { return data_.size(); }
  const std::string& name(Element s) const { return data_.names.at(s); }
  Element index(std::string_view name) const { return data_.index(name); }
  Element mul(Element s, Element t) const { return data_.mult.at(s * size() + t); }
  /// kNoArrow when s has no unique inverse.
  Element inv(Element s) const { return inv_.at(s); }
  bool is_idempotent(Element s) const { return mul(s, s) == s; }
  const std::vector<Element>& idempotents() const { return idempotents_; }
  /// s <= t iff s = te for some idempotent e.
  bool leq(Element s, Element t) const { return leq_[s * size() + t] != 0; }

  const Report& validation() const { return report_; }
  bool valid() const { return report_.ok(); }
  void require_valid() const;

  friend bool operator==(const InverseSemigroup& a, const InverseSemigroup& b) {
    return a.data_.names == b.data_.names && a.data_.mult == b.data_.mult;
  }

 private:
  SemigroupData data_;
  std::vector<Element> inv_;
  std::vector<Element> idempotents_;
  std::vector<std::uint8_t> leq_;
  Report report_;
};

Report validate_inverse_semigroup(const InverseSemigroup& s);
bool natural_order(const InverseSemigroup& s, Element a, Element b);

/// Arrows = elements, objects = idempotents, st composable iff s^{-1}s = tt^{-1},
/// order = natural order. Element indices are preserved.
OrderedGroupoid esn_to_groupoid(const InverseSemigroup& s);
/// Product = pseudoproduct. Throws NotInductive.
InverseSemigroup esn_to_semigroup(const OrderedGroupoid& g);

/// A map between inverse semigroups, element index to element index.
struct SemigroupPremorphism {
  const InverseSemigroup* source;
  const InverseSemigroup* target;
  std::vector<Element> map;
};

/// A map between inductive groupoids, arrow index to arrow index.
struct GroupoidPremorphism {
  const OrderedGroupoid* source;
  const OrderedGroupoid* target;
  std::vector<Arrow> map;
};

/// A map from an inverse semigroup into I(A): each element goes to a partial
/// linear bijection of A (domain subspace onto codomain subspace).
struct PartialBijectionPremorphism {
  const InverseSemigroup* source;
  std::vector<LinMap> map;
};

/// (i) psi(s)psi(t) <= psi(st), (ii) psi(s)^{-1} = psi(s^{-1}), (iii) order.
Report verify_premorphism(const SemigroupPremorphism& p);
/// (i)-(iii) for inductive groupoids plus the two diagnostic identities
/// d(psi(g)) <= psi(d(g)) and r(psi(e|g)) = psi(e) ^ r(psi(g)).
Report verify_premorphism(const GroupoidPremorphism& p);
/// (i)-(iii) with composition of partial maps and "is a restriction of" as order.
Report verify_premorphism(const PartialBijectionPremorphism& p);

/// Composition in I(A): g first, then f.
LinMap compose_partial_bijections(const LinMap& f, const LinMap& g);
/// Inverse of a partial bijection onto its image.
LinMap invert_partial_bijection(const LinMap& f);

}  // namespace pact
