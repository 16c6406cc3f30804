#include "pact/semigroup.hpp"

#include <algorithm>

#include "pact/error.hpp"

namespace pact {

Element SemigroupData::index(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::UnresolvedReference, "unknown element '" + std::string(name) + "'", std::string(name));
  return static_cast<Element>(it - names.begin());
}

InverseSemigroup::InverseSemigroup(SemigroupData data) : data_(std::move(data)) {
  const std::size_t n = size();
  if (data_.mult.size() != n * n) throw Error(ErrorCode::InvalidStructure, "multiplication table must be n x n");
  for (auto x : data_.mult) {
    if (x >= n) throw Error(ErrorCode::InvalidStructure, "multiplication result out of range");
  }
  inv_.assign(n, kNoArrow);
  for (Element s = 0; s < n; ++s) {
    std::size_t count = 0;
    for (Element t = 0; t < n; ++t) {
      if (mul(mul(s, t), s) == s && mul(mul(t, s), t) == t) {
        inv_[s] = t;
        ++count;
      }
    }
    if (count != 1) inv_[s] = kNoArrow;
    if (is_idempotent(s)) idempotents_.push_back(s);
  }
  leq_.assign(n * n, 0);
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      leq_[s * n + t] = std::any_of(idempotents_.begin(), idempotents_.end(), [&](Element e) { return mul(t, e) == s; });
    }
  }
  report_ = validate_inverse_semigroup(*this);
}

InverseSemigroup InverseSemigroup::validated(SemigroupData data) {
  InverseSemigroup s(std::move(data));
  s.require_valid();
  return s;
}

void InverseSemigroup::require_valid() const {
  if (!report_.ok()) throw Error(ErrorCode::InvalidStructure, "inverse semigroup fails validation: " + report_.summary());
}

Report validate_inverse_semigroup(const InverseSemigroup& S) {
  Report r;
  const std::size_t n = S.size();
  r.check(Clause::SemigroupAssociativity);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c))) {
          r.fail(Clause::SemigroupAssociativity, "(" + S.name(a) + S.name(b) + ")" + S.name(c) + " != " + S.name(a) + "(" + S.name(b) + S.name(c) + ")");
        }
      }
    }
  }
  r.check(Clause::UniqueInverses);
  for (Element s = 0; s < n; ++s) {
    if (S.inv(s) == kNoArrow) r.fail(Clause::UniqueInverses, S.name(s) + " has no unique inverse");
  }
  r.check(Clause::CommutingIdempotents);
  for (Element e : S.idempotents()) {
    for (Element f : S.idempotents()) {
      if (e < f && S.mul(e, f) != S.mul(f, e)) r.fail(Clause::CommutingIdempotents, S.name(e) + S.name(f) + " != " + S.name(f) + S.name(e));
    }
  }
  return r;
}

bool natural_order(const InverseSemigroup& s, Element a, Element b) { return s.leq(a, b); }

OrderedGroupoid esn_to_groupoid(const InverseSemigroup& S) {
  S.require_valid();
  const std::size_t n = S.size();
  GroupoidData d;
  d.names = S.data().names;
  d.is_object.resize(n);
  d.inv.resize(n);
  d.comp.assign(n * n, kNoArrow);
  for (Element s = 0; s < n; ++s) {
    d.is_object[s] = S.is_idempotent(s);
    d.inv[s] = S.inv(s);
  }
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      if (S.mul(S.inv(s), s) == S.mul(t, S.inv(t))) d.comp[s * n + t] = S.mul(s, t);
      if (s != t && S.leq(s, t)) d.order.emplace_back(s, t);
    }
  }
  OrderedGroupoid g(std::move(d));
  if (!g.valid() || !g.is_inductive()) {
    throw Error(ErrorCode::TheoremViolation, "groupoid of an inverse semigroup is not inductive: " + g.validation().summary());
  }
  return g;
}

InverseSemigroup esn_to_semigroup(const OrderedGroupoid& G) {
  G.require_valid();
  if (!G.is_inductive()) throw Error(ErrorCode::NotInductive, "objects do not form a meet semilattice");
  const std::size_t n = G.size();
  SemigroupData d;
  d.names = G.data().names;
  d.mult.resize(n * n);
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) d.mult[g * n + h] = *G.pseudoproduct(g, h);
  }
  InverseSemigroup s(std::move(d));
  if (!s.valid()) throw Error(ErrorCode::TheoremViolation, "pseudoproduct is not an inverse semigroup: " + s.validation().summary());
  return s;
}

Report verify_premorphism(const SemigroupPremorphism& p) {
  const auto& S = *p.source;
  const auto& T = *p.target;
  Report r;
  const std::size_t n = S.size();
  if (p.map.size() != n) throw Error(ErrorCode::DimensionMismatch, "premorphism needs one image per element");
  const auto& m = p.map;
  r.check(Clause::PremorphismI);
  r.check(Clause::PremorphismII);
  r.check(Clause::PremorphismIII);
  for (Element s = 0; s < n; ++s) {
    if (T.inv(m[s]) != m[S.inv(s)]) r.fail(Clause::PremorphismII, "psi(" + S.name(s) + ")^-1 != psi(" + S.name(s) + "^-1)");
    for (Element t = 0; t < n; ++t) {
      if (!T.leq(T.mul(m[s], m[t]), m[S.mul(s, t)])) {
        r.fail(Clause::PremorphismI, "psi(" + S.name(s) + ")psi(" + S.name(t) + ") not below psi(" + S.name(s) + S.name(t) + ")");
      }
      if (S.leq(s, t) && !T.leq(m[s], m[t])) r.fail(Clause::PremorphismIII, "order not preserved at " + S.name(s) + " <= " + S.name(t));
    }
  }
  return r;
}

Report verify_premorphism(const GroupoidPremorphism& p) {
  const auto& G = *p.source;
  const auto& H = *p.target;
  Report r;
  const std::size_t n = G.size();
  if (p.map.size() != n) throw Error(ErrorCode::DimensionMismatch, "premorphism needs one image per arrow");
  const auto& m = p.map;
  for (auto c : {Clause::PremorphismI, Clause::PremorphismII, Clause::PremorphismIII, Clause::PremorphismDomain, Clause::PremorphismRange}) r.check(c);
  for (Arrow g = 0; g < n; ++g) {
    if (H.inv(m[g]) != m[G.inv(g)]) r.fail(Clause::PremorphismII, "psi(" + G.name(g) + ")^-1 != psi(" + G.name(g) + "^-1)");
    if (!H.leq(H.dom(m[g]), m[G.dom(g)])) r.fail(Clause::PremorphismDomain, "d(psi(" + G.name(g) + ")) not below psi(d(" + G.name(g) + "))");
    for (Arrow h = 0; h < n; ++h) {
      if (const auto gh = G.comp(g, h)) {
        const auto pp = H.pseudoproduct(m[g], m[h]);
        if (!pp || !H.leq(*pp, m[*gh])) {
          r.fail(Clause::PremorphismI, "psi(" + G.name(g) + ")*psi(" + G.name(h) + ") not below psi(" + G.name(*gh) + ")");
        }
      }
      if (G.leq(g, h) && !H.leq(m[g], m[h])) r.fail(Clause::PremorphismIII, "order not preserved at " + G.name(g) + " <= " + G.name(h));
    }
    for (Arrow e : G.objects()) {
      if (!G.leq(e, G.ran(g))) continue;
      const Arrow eg = G.corestriction(e, g);
      const auto mt = H.meet(m[e], H.ran(m[g]));
      if (!mt || H.ran(m[eg]) != *mt) {
        r.fail(Clause::PremorphismRange, "r(psi(" + G.name(e) + "|" + G.name(g) + ")) != psi(" + G.name(e) + ") ^ r(psi(" + G.name(g) + "))");
      }
    }
  }
  return r;
}

LinMap compose_partial_bijections(const LinMap& f, const LinMap& g) {
  const LinMap fg = compose_partial(f, g);
  return LinMap(fg.domain(), fg.image(), fg.images());
}

LinMap invert_partial_bijection(const LinMap& f) {
  return LinMap(f.domain(), f.image(), f.images()).inverse();
}

Report verify_premorphism(const PartialBijectionPremorphism& p) {
  const auto& S = *p.source;
  Report r;
  const std::size_t n = S.size();
  if (p.map.size() != n) throw Error(ErrorCode::DimensionMismatch, "premorphism needs one image per element");
  const auto& m = p.map;
  r.check(Clause::PremorphismI);
  r.check(Clause::PremorphismII);
  r.check(Clause::PremorphismIII);
  for (Element s = 0; s < n; ++s) {
    if (!m[s].is_injective()) {
      r.fail(Clause::PremorphismII, "psi(" + S.name(s) + ") is not injective");
      continue;
    }
    if (!same_partial_map(invert_partial_bijection(m[s]), m[S.inv(s)])) {
      r.fail(Clause::PremorphismII, "psi(" + S.name(s) + ")^-1 != psi(" + S.name(s) + "^-1)");
    }
    for (Element t = 0; t < n; ++t) {
      if (!is_restriction_of(compose_partial(m[s], m[t]), m[S.mul(s, t)])) {
        r.fail(Clause::PremorphismI, "psi(" + S.name(s) + ")psi(" + S.name(t) + ") is not a restriction of psi(" + S.name(S.mul(s, t)) + ")");
      }
      if (S.leq(s, t) && !is_restriction_of(m[s], m[t])) r.fail(Clause::PremorphismIII, "order not preserved at " + S.name(s) + " <= " + S.name(t));
    }
  }
  return r;
}

}  // namespace pact
