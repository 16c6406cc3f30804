#include "pact/report.hpp"

#include <algorithm>
#include <sstream>

namespace pact {

std::string_view label(Clause clause) {
  switch (clause) {
    case Clause::Associativity: return "associativity";
    case Clause::Unit: return "unit";
    case Clause::Category: return "category";
    case Clause::Inverses: return "inverses";
    case Clause::PartialOrder: return "partial-order";
    case Clause::OG1: return "(OG1)";
    case Clause::OG2: return "(OG2)";
    case Clause::OG3: return "(OG3)";
    case Clause::OG3Star: return "(OG3*)";
    case Clause::SemigroupAssociativity: return "semigroup-associativity";
    case Clause::UniqueInverses: return "unique-inverses";
    case Clause::CommutingIdempotents: return "commuting-idempotents";
    case Clause::PremorphismI: return "premorphism(i)";
    case Clause::PremorphismII: return "premorphism(ii)";
    case Clause::PremorphismIII: return "premorphism(iii)";
    case Clause::PremorphismDomain: return "premorphism-domain";
    case Clause::PremorphismRange: return "premorphism-range";
    case Clause::IdealChain: return "ideal-chain";
    case Clause::Isomorphism: return "isomorphism";
    case Clause::P1: return "(P1)";
    case Clause::P2: return "(P2)";
    case Clause::P3: return "(P3)";
    case Clause::PO: return "(PO)";
    case Clause::InverseMaps: return "inverse-maps";
    case Clause::ImageIntersection: return "image-intersection";
    case Clause::P1Prime: return "(P1')";
    case Clause::P2Prime: return "(P2')";
    case Clause::P3Prime: return "(P3')";
    case Clause::Global: return "global";
    case Clause::Embeddings: return "embeddings";
    case Clause::Def35i: return "Def3.5(i)";
    case Clause::Def35ii: return "Def3.5(ii)";
    case Clause::Def35iii: return "Def3.5(iii)";
    case Clause::Def35iv: return "Def3.5(iv)";
    case Clause::Def35ivPrime: return "(iv')";
    case Clause::RestrictionEquivalence: return "restriction-equivalence";
    case Clause::EquivalenceI: return "equivalence(i)";
    case Clause::EquivalenceII: return "equivalence(ii)";
    case Clause::PS: return "(PS)";
    case Clause::Def58i: return "Def5.8(i)";
    case Clause::Def58ii: return "Def5.8(ii)";
    case Clause::Def58iii: return "Def5.8(iii)";
    case Clause::Def58iv: return "Def5.8(iv)";
    case Clause::Prop51i: return "Prop5.1(i)";
    case Clause::Prop51ii: return "Prop5.1(ii)";
    case Clause::Prop51iii: return "Prop5.1(iii)";
    case Clause::Prop51iv: return "Prop5.1(iv)";
    case Clause::ContextI: return "context(i)";
    case Clause::ContextII: return "context(ii)";
    case Clause::Surjective: return "surjective-pairings";
    case Clause::Idempotent: return "idempotent-rings";
    case Clause::UnitalModules: return "unital-modules";
    case Clause::SkewUnit: return "skew-unit";
  }
  return "?";
}

void Report::check(Clause clause) {
  if (std::find(checked_.begin(), checked_.end(), clause) == checked_.end()) checked_.push_back(clause);
}

void Report::fail(Clause clause, std::string detail) {
  check(clause);
  violations_.push_back({clause, std::move(detail)});
}

void Report::expect(Clause clause, bool holds, const std::string& detail) {
  if (holds) {
    check(clause);
  } else {
    fail(clause, detail);
  }
}

void Report::merge(const Report& other) {
  for (Clause c : other.checked_) check(c);
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool Report::checked(Clause clause) const {
  return std::find(checked_.begin(), checked_.end(), clause) != checked_.end();
}

bool Report::passed(Clause clause) const {
  if (!checked(clause)) return false;
  return std::none_of(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.clause == clause; });
}

std::vector<std::string> Report::failures(Clause clause) const {
  std::vector<std::string> out;
  for (const auto& v : violations_) {
    if (v.clause == clause) out.push_back(v.detail);
  }
  return out;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (Clause c : checked_) {
    os << label(c) << ": " << (passed(c) ? "pass" : "FAIL") << '\n';
  }
  for (const auto& v : violations_) os << "  " << label(v.clause) << " " << v.detail << '\n';
  return os.str();
}

}  // namespace pact
