#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pact {

/// Fixed set of checkable clauses. Reports are keyed by these labels only.
enum class Clause {
  Associativity,
  Unit,
  Category,
  Inverses,
  PartialOrder,
  OG1,
  OG2,
  OG3,
  OG3Star,
  SemigroupAssociativity,
  UniqueInverses,
  CommutingIdempotents,
  PremorphismI,
  PremorphismII,
  PremorphismIII,
  PremorphismDomain,
  PremorphismRange,
  IdealChain,
  Isomorphism,
  P1,
  P2,
  P3,
  PO,
  InverseMaps,
  ImageIntersection,
  P1Prime,
  P2Prime,
  P3Prime,
  Global,
  Embeddings,
  Def35i,
  Def35ii,
  Def35iii,
  Def35iv,
  Def35ivPrime,
  RestrictionEquivalence,
  EquivalenceI,
  EquivalenceII,
  PS,
  Def58i,
  Def58ii,
  Def58iii,
  Def58iv,
  Prop51i,
  Prop51ii,
  Prop51iii,
  Prop51iv,
  ContextI,
  ContextII,
  Surjective,
  Idempotent,
  UnitalModules,
  SkewUnit,
};

/// Label used in reports, e.g. "(P2)" or "Def3.5(iii)".
std::string_view label(Clause clause);

struct Violation {
  Clause clause;
  std::string detail;
};

/// Outcome of a verification: which clauses were examined and every
/// violation found, with the witnessing data in `detail`.
class Report {
 public:
  void check(Clause clause);
  void fail(Clause clause, std::string detail);
  /// Records `clause` as checked and, if `holds` is false, as violated.
  void expect(Clause clause, bool holds, const std::string& detail);
  void merge(const Report& other);

  bool ok() const { return violations_.empty(); }
  bool checked(Clause clause) const;
  bool passed(Clause clause) const;
  const std::vector<Clause>& clauses() const { return checked_; }
  const std::vector<Violation>& violations() const { return violations_; }
  /// Violations recorded against `clause`.
  std::vector<std::string> failures(Clause clause) const;

  std::string summary() const;

 private:
  std::vector<Clause> checked_;
  std::vector<Violation> violations_;
};

}  // namespace pact
