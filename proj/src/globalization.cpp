#include "pact/globalization.hpp"

#include <functional>

#include "pact/error.hpp"

namespace pact {

namespace {

struct Scheme {
  // h lies in the support of F_g
  std::function<bool(Arrow, Arrow)> in_support;
  // gamma_g(f) at h reads f at this arrow
  std::function<Arrow(Arrow, Arrow)> source;
  // phi_e(a) is nonzero at h only if this holds
  std::function<bool(Arrow, Arrow)> embed_at;
  // gamma_h(phi_{d(h)}(A_{d(h)})) generates B_g
  std::function<bool(Arrow, Arrow)> generates;
  bool minimal;
};

Vector block_of(const Vector& f, Arrow h, std::size_t d) {
  return Vector(f.begin() + static_cast<long>(h * d), f.begin() + static_cast<long>((h + 1) * d));
}

void set_block(Vector& f, Arrow h, const Vector& x) { std::copy(x.begin(), x.end(), f.begin() + static_cast<long>(h * x.size())); }

Subspace image_under(const LinMap& m, const Subspace& s) { return m.image_of(s); }

Globalization construct(const POAction& a, const Scheme& scheme) {
  const auto& G = a.G();
  const auto& A = a.A();
  const std::size_t n = G.size();
  const std::size_t d = A.dim();
  const auto& p = A.modulus();
  const auto unit = units(a);

  auto F = std::make_shared<const Algebra>(product_ring(A, n));
  std::vector<Subspace> supports;
  for (Arrow g = 0; g < n; ++g) {
    std::vector<std::size_t> idx;
    for (Arrow h = 0; h < n; ++h) {
      if (!scheme.in_support(g, h)) continue;
      for (std::size_t i = 0; i < d; ++i) idx.push_back(h * d + i);
    }
    supports.push_back(Subspace::coordinates(p, n * d, idx));
  }
  std::vector<LinMap> gamma;
  for (Arrow g = 0; g < n; ++g) {
    gamma.push_back(LinMap::from_function(supports[G.inv(g)], supports[g], [&](const Vector& f) {
      Vector out(n * d, 0);
      for (Arrow h = 0; h < n; ++h) {
        if (scheme.in_support(g, h)) set_block(out, h, block_of(f, scheme.source(g, h), d));
      }
      return out;
    }));
  }
  std::vector<std::optional<LinMap>> phi(n);
  for (Arrow e : G.objects()) {
    phi[e] = LinMap::from_function(a.ideal(e), supports[e], [&](const Vector& x) {
      Vector out(n * d, 0);
      for (Arrow h = 0; h < n; ++h) {
        if (scheme.embed_at(e, h)) set_block(out, h, a.map(G.inv(h)).apply(A.mul(x, *unit[h])));
      }
      return out;
    });
  }
  // B_g depends on r(g) only
  std::vector<std::optional<Subspace>> by_object(n);
  for (Arrow e : G.objects()) {
    std::vector<Subspace> parts;
    for (Arrow h = 0; h < n; ++h) {
      if (scheme.generates(e, h)) parts.push_back(image_under(gamma[h], phi[G.dom(h)]->image()));
    }
    by_object[e] = subring_closure(*F, parts);
  }
  std::vector<Subspace> object_parts;
  for (Arrow e : G.objects()) object_parts.push_back(*by_object[e]);
  const Subspace b_space = subring_closure(*F, object_parts);
  auto sub = subalgebra(*F, b_space);
  auto B = std::make_shared<const Algebra>(sub.algebra);
  auto coords = [&](const Vector& v) { return *b_space.coordinates_of(v); };

  std::vector<Subspace> ideals;
  for (Arrow g = 0; g < n; ++g) {
    Subspace local(p, b_space.dim());
    for (const auto& v : by_object[G.ran(g)]->basis()) local.insert(coords(v));
    ideals.push_back(std::move(local));
  }
  std::vector<LinMap> maps;
  for (Arrow g = 0; g < n; ++g) {
    maps.push_back(LinMap::from_function(ideals[G.inv(g)], ideals[g],
                                         [&](const Vector& v) { return coords(gamma[g].apply(b_space.combine(v))); }));
  }
  std::vector<std::optional<LinMap>> embeddings(n);
  for (Arrow e : G.objects()) {
    embeddings[e] = LinMap::from_function(a.ideal(e), ideals[e], [&](const Vector& x) { return coords(phi[e]->apply(x)); });
  }
  Globalization out{a,
                    POAction(a.groupoid, B, std::move(ideals), std::move(maps)),
                    std::move(embeddings),
                    scheme.minimal,
                    F,
                    sub.inclusion,
                    std::move(supports),
                    std::move(gamma),
                    std::move(phi),
                    {}};
  out.report = verify_globalization(out);
  if (scheme.minimal) out.report.merge(check_ps(out.global));
  return out;
}

void require_unital(const POAction& a) {
  const auto r = validate_po_action(a);
  if (!r.ok()) throw Error(ErrorCode::InvalidStructure, "globalization of an invalid action: " + r.summary());
  if (const auto g = first_non_unital(a)) {
    throw Error(ErrorCode::NotUnital, "A_" + a.G().name(*g) + " has no central idempotent identity", a.G().name(*g));
  }
}

}  // namespace

Globalization build_globalization(const POAction& a) {
  require_unital(a);
  const auto& G = a.G();
  Scheme s;
  s.in_support = [&G](Arrow g, Arrow h) { return G.leq(G.ran(h), G.ran(g)); };
  s.source = [&G](Arrow g, Arrow h) { return *G.comp(G.restriction(G.inv(g), G.ran(h)), h); };
  s.embed_at = [&G](Arrow e, Arrow h) { return G.ran(h) == e; };
  s.generates = s.in_support;
  s.minimal = false;
  return construct(a, s);
}

Globalization build_minimal_globalization(const POAction& a) {
  require_unital(a);
  const auto& G = a.G();
  if (const auto why = strength_witness(a)) throw Error(ErrorCode::NotStrong, "action is not strong: " + *why);
  if (!G.is_pseudoassociative()) throw Error(ErrorCode::NotPseudoassociative, "groupoid is not pseudoassociative");
  Scheme s;
  s.in_support = [&G](Arrow g, Arrow h) { return G.pseudoproduct(G.inv(g), h).has_value(); };
  s.source = [&G](Arrow g, Arrow h) { return *G.pseudoproduct(G.inv(g), h); };
  s.embed_at = [&G](Arrow e, Arrow h) { return G.pseudoproduct(e, h).has_value(); };
  s.generates = [&G](Arrow g, Arrow h) { return G.ran(h) == G.ran(g); };
  s.minimal = true;
  try {
    return construct(a, s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotContained) throw;
    const auto meet = meet_intersection_witness(a);
    throw Error(ErrorCode::TheoremViolation,
                std::string("minimal construction does not close on a strong action (") + e.what() + ")" + (meet ? "; " + *meet : ""));
  }
}

Globalization external_globalization(POAction base, POAction global, std::vector<std::optional<LinMap>> embeddings, bool minimal) {
  Globalization out{std::move(base), std::move(global), std::move(embeddings), minimal, nullptr, std::nullopt, {}, {}, {}, {}};
  out.report = verify_globalization(out);
  return out;
}

std::vector<std::optional<LinMap>> inclusion_embeddings(const RestrictedAction& r, const POAction& beta) {
  const auto& a = r.action;
  std::vector<std::optional<LinMap>> out(a.size());
  for (Arrow e : a.G().objects()) {
    out[e] = LinMap::from_function(a.ideal(e), beta.ideal(e), [&](const Vector& x) { return r.inclusion.apply(x); });
  }
  return out;
}

Report verify_globalization(const Globalization& g) {
  const auto& a = g.base;
  const auto& b = g.global;
  const auto& G = a.G();
  Report r;
  r.check(Clause::Global);
  if (!same_groupoid(G, b.G())) {
    r.fail(Clause::Global, "global action is over a different groupoid");
    return r;
  }
  const auto vr = validate_po_action(b);
  if (!vr.ok()) r.fail(Clause::Global, "global action fails validation: " + vr.summary());
  if (!is_global(b)) r.fail(Clause::Global, "B_g != B_r(g) for some arrow");

  r.check(Clause::Embeddings);
  bool usable = g.embeddings.size() == G.size();
  for (Arrow e : G.objects()) {
    if (!usable) break;
    const auto& phi = g.embeddings[e];
    if (!phi || !(phi->domain() == a.ideal(e)) || !(phi->codomain() == b.ideal(e))) {
      r.fail(Clause::Embeddings, "phi_" + G.name(e) + " does not run from A_e to B_e");
      usable = false;
    } else if (!phi->is_injective() || !is_multiplicative(*phi, a.A(), b.A())) {
      r.fail(Clause::Embeddings, "phi_" + G.name(e) + " is not an injective ring homomorphism");
    }
  }
  if (!usable) return r;
  auto phi = [&](Arrow e) -> const LinMap& { return *g.embeddings[e]; };
  std::vector<std::optional<Subspace>> img(G.size());
  for (Arrow e : G.objects()) img[e] = phi(e).image();

  r.check(Clause::Def35i);
  for (Arrow e : G.objects()) {
    if (!is_ideal(b.A(), *img[e], b.ideal(e))) r.fail(Clause::Def35i, "phi_" + G.name(e) + "(A_e) is not an ideal of B_e");
  }
  r.check(Clause::Def35ii);
  r.check(Clause::Def35iii);
  for (Arrow x = 0; x < G.size(); ++x) {
    const Arrow rg = G.ran(x), dg = G.dom(x);
    const auto lhs = phi(rg).image_of(a.ideal(x));
    const auto rhs = intersect(*img[rg], b.map(x).image_of(*img[dg]));
    if (!(lhs == rhs)) r.fail(Clause::Def35ii, "phi_r(g)(A_" + G.name(x) + ") != phi(A_r(g)) cap beta_g(phi(A_d(g)))");
    for (const auto& v : a.ideal(G.inv(x)).basis()) {
      if (b.map(x).apply(phi(dg).apply(v)) != phi(rg).apply(a.map(x).apply(v))) {
        r.fail(Clause::Def35iii, "beta_" + G.name(x) + " phi_d != phi_r alpha_" + G.name(x) + " on " + to_string(v));
        break;
      }
    }
  }
  auto generated = [&](Arrow x, bool equal_range) {
    Subspace s = b.A().zero_space();
    for (Arrow h = 0; h < G.size(); ++h) {
      const bool take = equal_range ? G.ran(h) == G.ran(x) : G.leq(G.ran(h), G.ran(x));
      if (take) s = sum(s, b.map(h).image_of(*img[G.dom(h)]));
    }
    return s;
  };
  r.check(Clause::Def35iv);
  for (Arrow x = 0; x < G.size(); ++x) {
    if (!(b.ideal(x) == generated(x, false))) r.fail(Clause::Def35iv, "B_" + G.name(x) + " != sum over r(h) <= r(g)");
  }
  if (g.minimal) {
    r.check(Clause::Def35ivPrime);
    for (Arrow x = 0; x < G.size(); ++x) {
      if (!(b.ideal(x) == generated(x, true))) r.fail(Clause::Def35ivPrime, "B_" + G.name(x) + " != sum over r(h) = r(g)");
    }
  }

  r.check(Clause::RestrictionEquivalence);
  if (vr.ok() && is_global(b)) {
    try {
      std::vector<Subspace> family(G.size(), b.A().zero_space());
      for (Arrow e : G.objects()) family[e] = *img[e];
      const auto res = general_restriction(b, family, false);
      const Subspace carrier = res.inclusion.image();
      EquivalenceWitness w;
      w.maps.resize(G.size());
      for (Arrow e : G.objects()) {
        w.maps[e] = LinMap::from_function(a.ideal(e), res.action.ideal(e),
                                          [&](const Vector& v) { return *carrier.coordinates_of(phi(e).apply(v)); });
      }
      const auto er = verify_equivalence(a, res.action, w);
      for (const auto& v : er.violations()) r.fail(Clause::RestrictionEquivalence, std::string(label(v.clause)) + ": " + v.detail);
    } catch (const Error& e) {
      r.fail(Clause::RestrictionEquivalence, e.what());
    }
  } else {
    r.fail(Clause::RestrictionEquivalence, "not checked: beta is not a valid global action");
  }
  return r;
}

Report verify_inv_sgp_globalization(const InvSgpAction& base, const InvSgpAction& global,
                                    const std::vector<std::optional<LinMap>>& embeddings) {
  const auto& S = base.S();
  Report r;
  r.check(Clause::Global);
  if (!(S == global.S())) {
    r.fail(Clause::Global, "global action is over a different semigroup");
    return r;
  }
  const auto vr = validate_inv_sgp_action(global);
  if (!vr.ok()) r.fail(Clause::Global, "global action fails validation: " + vr.summary());
  if (!is_global(global)) r.fail(Clause::Global, "B_s != B_ss^-1 for some s");
  r.check(Clause::Embeddings);
  for (Element e : S.idempotents()) {
    const auto& phi = embeddings.size() == S.size() ? embeddings[e] : std::nullopt;
    if (!phi || !(phi->domain() == base.ideals[e]) || !(phi->codomain() == global.ideals[e]) || !phi->is_injective() ||
        !is_multiplicative(*phi, base.A(), global.A())) {
      r.fail(Clause::Embeddings, "phi_" + S.name(e) + " is not a monomorphism A_e -> B_e");
      return r;
    }
  }
  auto phi = [&](Element e) -> const LinMap& { return *embeddings[e]; };
  auto left = [&](Element s) { return S.mul(s, S.inv(s)); };
  auto right = [&](Element s) { return S.mul(S.inv(s), s); };
  r.check(Clause::Def58i);
  for (Element e : S.idempotents()) {
    if (!is_ideal(global.A(), phi(e).image(), global.ideals[e])) r.fail(Clause::Def58i, "phi_" + S.name(e) + "(A_e) is not an ideal of B_e");
  }
  r.check(Clause::Def58ii);
  r.check(Clause::Def58iii);
  r.check(Clause::Def58iv);
  for (Element s = 0; s < S.size(); ++s) {
    const auto& pl = phi(left(s));
    const auto& pr = phi(right(s));
    const auto lhs = pl.image_of(base.ideals[s]);
    const auto rhs = intersect(pl.image(), global.maps[s].image_of(pr.image()));
    if (!(lhs == rhs)) r.fail(Clause::Def58ii, "condition (ii) fails at " + S.name(s));
    for (const auto& v : base.ideals[S.inv(s)].basis()) {
      if (global.maps[s].apply(pr.apply(v)) != pl.apply(base.maps[s].apply(v))) {
        r.fail(Clause::Def58iii, "condition (iii) fails at " + S.name(s) + " on " + to_string(v));
        break;
      }
    }
    Subspace total = global.A().zero_space();
    for (Element t = 0; t < S.size(); ++t) {
      if (left(t) == left(s)) total = sum(total, global.maps[t].image_of(phi(right(t)).image()));
    }
    if (!(total == global.ideals[s])) r.fail(Clause::Def58iv, "B_" + S.name(s) + " != sum over tt^-1 = ss^-1");
  }
  return r;
}

InvSgpGlobalization globalize_inverse_semigroup_action(const InvSgpAction& a) {
  const auto omega = semigroup_action_to_groupoid_action(a);
  if (const auto g = first_non_unital(omega)) {
    throw Error(ErrorCode::NotUnital, "A_" + omega.G().name(*g) + " has no central idempotent identity", omega.G().name(*g));
  }
  auto eta = build_minimal_globalization(omega);
  auto beta = groupoid_action_to_semigroup_action(eta.global, a.semigroup);
  auto embeddings = eta.embeddings;
  auto report = verify_inv_sgp_globalization(a, beta, embeddings);
  return InvSgpGlobalization{std::move(beta), std::move(embeddings), std::move(eta), std::move(report)};
}

}  // namespace pact
