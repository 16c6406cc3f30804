#include "pact/action.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pact/error.hpp"

namespace pact {

namespace {

void check_shapes(std::size_t n, const Algebra& alg, const std::vector<Subspace>& ideals, const std::vector<LinMap>& maps,
                  const std::function<Arrow(Arrow)>& inv, const std::function<std::string(Arrow)>& name) {
  if (ideals.size() != n || maps.size() != n) throw Error(ErrorCode::InvalidStructure, "need one ideal and one map per arrow");
  for (Arrow g = 0; g < n; ++g) {
    if (ideals[g].ambient_dim() != alg.dim() || !(ideals[g].modulus() == alg.modulus())) {
      throw Error(ErrorCode::AmbientMismatch, "ideal of " + name(g) + " does not live in the carrier", name(g));
    }
  }
  for (Arrow g = 0; g < n; ++g) {
    if (!(maps[g].domain() == ideals[inv(g)]) || !(maps[g].codomain() == ideals[g])) {
      throw Error(ErrorCode::InvalidStructure, "map of " + name(g) + " must run from the ideal of its inverse to its own ideal", name(g));
    }
  }
}

std::optional<Vector> central_unit(const Algebra& alg, const Subspace& sub) {
  try {
    const auto id = identity_of(alg, sub);
    if (id && id->central && id->idempotent) return id->element;
  } catch (const Error&) {
  }
  return std::nullopt;
}

// Subspace x of the ambient, rewritten in the coordinates of `frame`.
Subspace to_frame(const Subspace& frame, const Subspace& x) {
  Subspace out(frame.modulus(), frame.dim());
  for (const auto& v : x.basis()) {
    const auto c = frame.coordinates_of(v);
    if (!c) throw Error(ErrorCode::NotContained, "subspace leaves the restriction carrier");
    out.insert(*c);
  }
  return out;
}

RestrictedAction restrict_impl(const POAction& beta, const std::vector<Subspace>& family, const Subspace& carrier_space) {
  const auto& G = beta.G();
  const auto& B = beta.A();
  const std::size_t n = G.size();
  auto sub = subalgebra(B, carrier_space);
  auto carrier = std::make_shared<const Algebra>(sub.algebra);
  std::vector<Subspace> ambient_ideals(n, B.zero_space());
  for (Arrow g = 0; g < n; ++g) {
    const Arrow d = G.dom(g), r = G.ran(g);
    ambient_ideals[g] = intersect(family[r], beta.map(g).image_of(family[d]));
  }
  std::vector<Subspace> ideals;
  for (Arrow g = 0; g < n; ++g) ideals.push_back(to_frame(carrier_space, ambient_ideals[g]));
  std::vector<LinMap> maps;
  for (Arrow g = 0; g < n; ++g) {
    maps.push_back(LinMap::from_function(ideals[G.inv(g)], ideals[g], [&](const Vector& u) {
      return *carrier_space.coordinates_of(beta.map(g).apply(carrier_space.combine(u)));
    }));
  }
  return RestrictedAction{POAction(beta.groupoid, carrier, std::move(ideals), std::move(maps)), sub.inclusion};
}

void require_restrictable(const POAction& beta) {
  if (!is_global(beta)) throw Error(ErrorCode::NotGlobal, "restriction needs a global ordered action");
  const auto r = validate_po_action(beta);
  if (!r.ok()) throw Error(ErrorCode::InvalidStructure, "restriction of an invalid action: " + r.summary());
}

}  // namespace

POAction::POAction(std::shared_ptr<const OrderedGroupoid> g, std::shared_ptr<const Algebra> a, std::vector<Subspace> ids,
                   std::vector<LinMap> ms)
    : groupoid(std::move(g)), carrier(std::move(a)), ideals(std::move(ids)), maps(std::move(ms)) {
  if (!groupoid || !carrier) throw Error(ErrorCode::InvalidArgument, "action needs a groupoid and a carrier");
  const auto& G = *groupoid;
  check_shapes(G.size(), *carrier, ideals, maps, [&](Arrow x) { return G.inv(x); }, [&](Arrow x) { return G.name(x); });
}

POAction make_action(std::shared_ptr<const OrderedGroupoid> g, std::shared_ptr<const Algebra> a, std::vector<Subspace> ideals,
                     std::vector<std::optional<LinMap>> maps) {
  std::vector<LinMap> full;
  for (Arrow x = 0; x < g->size(); ++x) {
    if (x < maps.size() && maps[x]) {
      full.push_back(*maps[x]);
    } else if (g->is_object(x)) {
      full.push_back(LinMap::identity(ideals.at(x)));
    } else {
      throw Error(ErrorCode::InvalidArgument, "no map given for arrow " + g->name(x), g->name(x));
    }
  }
  return POAction(std::move(g), std::move(a), std::move(ideals), std::move(full));
}

Report validate_po_action(const POAction& a) {
  const auto& G = a.G();
  const auto& A = a.A();
  const std::size_t n = G.size();
  Report r;
  const auto nm = [&](Arrow g) { return G.name(g); };
  if (!G.valid()) {
    r.fail(Clause::Category, "groupoid fails validation");
    return r;
  }
  r.check(Clause::IdealChain);
  for (Arrow e : G.objects()) {
    if (!is_ideal(A, a.ideal(e))) r.fail(Clause::IdealChain, "A_" + nm(e) + " is not an ideal of A");
  }
  for (Arrow g = 0; g < n; ++g) {
    const auto& outer = a.ideal(G.ran(g));
    if (!outer.contains(a.ideal(g))) {
      r.fail(Clause::IdealChain, "A_" + nm(g) + " is not inside A_" + nm(G.ran(g)));
    } else if (!is_ideal(A, a.ideal(g), outer)) {
      r.fail(Clause::IdealChain, "A_" + nm(g) + " is not an ideal of A_" + nm(G.ran(g)));
    }
  }
  r.check(Clause::Isomorphism);
  std::vector<bool> iso(n);
  for (Arrow g = 0; g < n; ++g) {
    iso[g] = is_ring_iso(a.map(g), A, A);
    if (!iso[g]) r.fail(Clause::Isomorphism, "alpha_" + nm(g) + " is not a ring isomorphism");
  }
  r.check(Clause::P1);
  Subspace total = A.zero_space();
  for (Arrow e : G.objects()) {
    total = sum(total, a.ideal(e));
    if (!same_partial_map(a.map(e), LinMap::identity(a.ideal(e)))) r.fail(Clause::P1, "alpha_" + nm(e) + " is not the identity");
  }
  if (!total.is_full()) r.fail(Clause::P1, "sum of object ideals has dim " + std::to_string(total.dim()) + " < " + std::to_string(A.dim()));
  r.check(Clause::P2);
  r.check(Clause::P3);
  r.check(Clause::ImageIntersection);
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      const auto gh = G.comp(g, h);
      if (!gh) continue;
      const Subspace x = intersect(a.ideal(G.inv(g)), a.ideal(h));
      const Subspace dom = a.map(h).preimage(x);
      const std::string pair = "(" + nm(g) + "," + nm(h) + ")";
      if (!a.ideal(G.inv(*gh)).contains(dom)) {
        r.fail(Clause::P2, pair + ": alpha_h^-1(A_g^-1 cap A_h) not inside A_(gh)^-1");
      } else {
        for (const auto& v : dom.basis()) {
          if (a.map(g).apply(a.map(h).apply(v)) != a.map(*gh).apply(v)) {
            r.fail(Clause::P3, pair + ": alpha_g alpha_h != alpha_gh on " + to_string(v));
            break;
          }
        }
      }
      if (!(a.map(g).image_of(x) == intersect(a.ideal(g), a.ideal(*gh)))) {
        r.fail(Clause::ImageIntersection, pair + ": alpha_g(A_g^-1 cap A_h) != A_g cap A_gh");
      }
    }
  }
  r.check(Clause::PO);
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      if (g == h || !G.leq(g, h)) continue;
      if (!a.ideal(h).contains(a.ideal(g)) || !a.ideal(G.inv(h)).contains(a.ideal(G.inv(g)))) {
        r.fail(Clause::PO, nm(g) + " <= " + nm(h) + " but A_" + nm(g) + " is not inside A_" + nm(h));
      } else if (!is_restriction_of(a.map(g), a.map(h))) {
        r.fail(Clause::PO, nm(g) + " <= " + nm(h) + " but alpha_" + nm(g) + " is not a restriction of alpha_" + nm(h));
      }
    }
  }
  r.check(Clause::InverseMaps);
  for (Arrow g = 0; g < n; ++g) {
    if (iso[g] && !same_partial_map(a.map(g).inverse(), a.map(G.inv(g)))) {
      r.fail(Clause::InverseMaps, "alpha_" + nm(g) + "^-1 != alpha_" + nm(G.inv(g)));
    }
  }
  return r;
}

std::vector<std::optional<Vector>> units(const POAction& a) {
  std::vector<std::optional<Vector>> out;
  for (Arrow g = 0; g < a.size(); ++g) out.push_back(central_unit(a.A(), a.ideal(g)));
  return out;
}

bool is_preunital(const POAction& a) {
  const auto& objs = a.G().objects();
  return std::all_of(objs.begin(), objs.end(), [&](Arrow e) { return central_unit(a.A(), a.ideal(e)).has_value(); });
}

std::optional<Arrow> first_non_unital(const POAction& a) {
  for (Arrow g = 0; g < a.size(); ++g) {
    if (!central_unit(a.A(), a.ideal(g))) return g;
  }
  return std::nullopt;
}

bool is_unital(const POAction& a) { return !first_non_unital(a); }

bool is_global(const POAction& a) {
  for (Arrow g = 0; g < a.size(); ++g) {
    if (!(a.ideal(g) == a.ideal(a.G().ran(g)))) return false;
  }
  return true;
}

std::optional<std::string> strength_witness(const POAction& a) {
  const auto& G = a.G();
  for (Arrow g = 0; g < G.size(); ++g) {
    for (Arrow e : G.objects()) {
      if (!G.leq(e, G.ran(g))) continue;
      const Arrow eg = G.corestriction(e, g);
      if (!(a.ideal(eg) == intersect(a.ideal(e), a.ideal(g)))) {
        return "A_(" + G.name(e) + "|" + G.name(g) + ") = A_" + G.name(eg) + " != A_" + G.name(e) + " cap A_" + G.name(g);
      }
    }
  }
  return std::nullopt;
}

bool is_strong(const POAction& a) { return !strength_witness(a); }

std::optional<std::string> meet_intersection_witness(const POAction& a) {
  const auto& G = a.G();
  for (Arrow e : G.objects()) {
    for (Arrow f : G.objects()) {
      const auto m = G.meet(e, f);
      if (m && !(a.ideal(*m) == intersect(a.ideal(e), a.ideal(f)))) {
        return "A_" + G.name(*m) + " != A_" + G.name(e) + " cap A_" + G.name(f);
      }
    }
  }
  return std::nullopt;
}

Report check_ps(const POAction& a) {
  const auto& G = a.G();
  Report r;
  r.check(Clause::PS);
  for (Arrow g = 0; g < G.size(); ++g) {
    for (Arrow h = 0; h < G.size(); ++h) {
      const auto k = G.pseudoproduct(g, h);
      if (!k) continue;
      const std::string pair = "(" + G.name(g) + "," + G.name(h) + ")";
      const Subspace left = a.map(h).preimage(intersect(a.ideal(G.inv(g)), a.ideal(h)));
      const Subspace right = intersect(a.ideal(G.inv(*k)), a.ideal(G.inv(h)));
      if (!(left == right)) {
        r.fail(Clause::PS, pair + ": domains differ (dims " + std::to_string(left.dim()) + " vs " + std::to_string(right.dim()) + ")");
        continue;
      }
      for (const auto& v : left.basis()) {
        if (a.map(g).apply(a.map(h).apply(v)) != a.map(*k).apply(v)) {
          r.fail(Clause::PS, pair + ": values differ on " + to_string(v));
          break;
        }
      }
    }
  }
  return r;
}

bool satisfies_ps(const POAction& a) { return check_ps(a).ok(); }

RestrictedAction standard_restriction(const POAction& beta, const Subspace& ideal) {
  require_restrictable(beta);
  const auto& B = beta.A();
  if (!is_ideal(B, ideal)) throw Error(ErrorCode::NotAnIdeal, "restriction target is not an ideal of the carrier");
  std::vector<Subspace> family(beta.size(), B.zero_space());
  for (Arrow e : beta.G().objects()) family[e] = intersect(ideal, beta.ideal(e));
  return restrict_impl(beta, family, ideal);
}

RestrictedAction general_restriction(const POAction& beta, const std::vector<Subspace>& family, bool strict) {
  require_restrictable(beta);
  const auto& G = beta.G();
  const auto& B = beta.A();
  if (family.size() != G.size()) throw Error(ErrorCode::InvalidArgument, "family needs one entry per arrow");
  Subspace carrier = B.zero_space();
  for (Arrow e : G.objects()) {
    if (strict && !is_ideal(B, family[e])) throw Error(ErrorCode::NotAnIdeal, "family member at " + G.name(e) + " is not an ideal", G.name(e));
    if (!beta.ideal(e).contains(family[e])) throw Error(ErrorCode::NotContained, "family member at " + G.name(e) + " is not inside B_e", G.name(e));
    carrier = sum(carrier, family[e]);
  }
  if (strict) {
    for (Arrow e : G.objects()) {
      for (Arrow f : G.objects()) {
        if (G.leq(e, f) && !family[f].contains(family[e])) {
          throw Error(ErrorCode::NotMonotone, G.name(e) + " <= " + G.name(f) + " but the family is not increasing", G.name(e));
        }
      }
    }
  }
  return restrict_impl(beta, family, carrier);
}

bool same_groupoid(const OrderedGroupoid& g, const OrderedGroupoid& h) {
  if (g.size() != h.size()) return false;
  const auto& a = g.data();
  const auto& b = h.data();
  if (a.is_object != b.is_object || a.inv != b.inv || a.comp != b.comp) return false;
  for (Arrow x = 0; x < g.size(); ++x) {
    for (Arrow y = 0; y < g.size(); ++y) {
      if (g.leq(x, y) != h.leq(x, y)) return false;
    }
  }
  return true;
}

Report verify_equivalence(const POAction& a, const POAction& c, const EquivalenceWitness& w) {
  if (!same_groupoid(a.G(), c.G())) throw Error(ErrorCode::GroupoidMismatch, "equivalence needs one groupoid acting on both rings");
  const auto& G = a.G();
  Report r;
  r.check(Clause::Isomorphism);
  r.check(Clause::EquivalenceI);
  r.check(Clause::EquivalenceII);
  if (w.maps.size() != G.size()) {
    r.fail(Clause::Isomorphism, "witness has the wrong number of entries");
    return r;
  }
  bool usable = true;
  for (Arrow e : G.objects()) {
    const auto& phi = w.maps[e];
    if (!phi || !(phi->domain() == a.ideal(e)) || !(phi->codomain() == c.ideal(e)) || !is_ring_iso(*phi, a.A(), c.A())) {
      r.fail(Clause::Isomorphism, "phi_" + G.name(e) + " is not a ring isomorphism A_e -> C_e");
      usable = false;
    }
  }
  if (!usable) return r;
  for (Arrow g = 0; g < G.size(); ++g) {
    const auto& phi_r = *w.maps[G.ran(g)];
    const auto& phi_d = *w.maps[G.dom(g)];
    if (!(phi_r.image_of(a.ideal(g)) == c.ideal(g))) r.fail(Clause::EquivalenceI, "phi_r(g)(A_" + G.name(g) + ") != C_" + G.name(g));
    for (const auto& v : a.ideal(G.inv(g)).basis()) {
      bool ok = false;
      try {
        ok = phi_r.apply(a.map(g).apply(v)) == c.map(g).apply(phi_d.apply(v));
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        r.fail(Clause::EquivalenceII, "intertwining fails for " + G.name(g) + " on " + to_string(v));
        break;
      }
    }
  }
  return r;
}

EquivalenceWitness identity_witness(const POAction& a) {
  EquivalenceWitness w;
  w.maps.resize(a.size());
  for (Arrow e : a.G().objects()) w.maps[e] = LinMap::identity(a.ideal(e));
  return w;
}

EquivalenceWitness inverse_witness(const POAction& a, const EquivalenceWitness& w) {
  EquivalenceWitness out;
  out.maps.resize(a.size());
  for (Arrow e : a.G().objects()) out.maps[e] = w.maps.at(e)->inverse();
  return out;
}

EquivalenceWitness compose_witnesses(const POAction& a, const EquivalenceWitness& w1, const EquivalenceWitness& w2) {
  EquivalenceWitness out;
  out.maps.resize(a.size());
  for (Arrow e : a.G().objects()) out.maps[e] = compose(*w2.maps.at(e), *w1.maps.at(e));
  return out;
}

std::string to_string(EquivalenceSearch::Outcome o) {
  switch (o) {
    case EquivalenceSearch::Outcome::Found: return "found";
    case EquivalenceSearch::Outcome::DisprovedByInvariant: return "disproved-by-invariant";
    case EquivalenceSearch::Outcome::NoneInStrategyClass: return "none-in-strategy-class";
  }
  return "?";
}

namespace {

constexpr Residue kMaxEigenScan = 1u << 16;

bool split_idempotent(const Algebra& alg, const Vector& f, const Subspace& space, std::vector<Vector>& out) {
  if (space.dim() == 1) {
    out.push_back(f);
    return true;
  }
  const auto& p = alg.modulus();
  const std::size_t d = space.dim();
  for (const auto& x : space.basis()) {
    std::vector<Vector> lx;
    for (const auto& y : space.basis()) lx.push_back(alg.mul(x, y));
    std::vector<Subspace> eigen;
    std::size_t covered = 0;
    for (Residue lambda = 0; lambda < p.value() && covered < d; ++lambda) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < d; ++i) rows.push_back(sub(lx[i], scale(space.basis()[i], lambda, p), p));
      const auto ker = left_kernel(rows, alg.dim(), p);
      if (ker.empty()) continue;
      Subspace e(p, alg.dim());
      for (const auto& c : ker) e.insert(space.combine(c));
      covered += e.dim();
      eigen.push_back(std::move(e));
    }
    if (covered < d) return false;
    if (eigen.size() == 1) continue;
    for (const auto& e : eigen) {
      const auto id = identity_of(alg, e);
      if (!id) return false;
      if (!split_idempotent(alg, id->element, e, out)) return false;
    }
    return true;
  }
  return false;
}

// Candidate ring isomorphisms A_e -> C_e for one object.
struct Candidates {
  std::vector<LinMap> maps;
  bool from_idempotents = false;
};

void count_node(std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw Error(ErrorCode::BudgetExceeded, "equivalence search exceeded its budget of " + std::to_string(budget) + " nodes");
}

Candidates candidates_for(const POAction& a, const POAction& c, Arrow e, std::uint64_t budget, std::uint64_t& nodes) {
  Candidates out;
  const auto& A = a.ideal(e);
  const auto& C = c.ideal(e);
  const auto& p = a.A().modulus();
  const auto ea = primitive_idempotents(a.A(), A);
  const auto ec = primitive_idempotents(c.A(), C);
  if (ea && ec && ea->size() == ec->size()) {
    out.from_idempotents = true;
    const std::size_t k = ea->size();
    std::vector<Vector> coeffs;
    for (const auto& b : A.basis()) coeffs.push_back(*solve(*ea, b, p));
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      count_node(nodes, budget);
      std::vector<Vector> images;
      for (const auto& cf : coeffs) {
        Vector v(c.A().dim(), 0);
        for (std::size_t i = 0; i < k; ++i) v = add(v, scale((*ec)[perm[i]], cf[i], p), p);
        images.push_back(std::move(v));
      }
      out.maps.emplace_back(A, C, std::move(images));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  if (ea && ec) return out;
  const std::size_t d = A.dim();
  double total = 1;
  for (std::size_t i = 0; i < d * d; ++i) total *= p.value();
  if (total > static_cast<double>(budget)) {
    throw Error(ErrorCode::BudgetExceeded, "object " + a.G().name(e) + " needs " + std::to_string(static_cast<std::uint64_t>(total)) + " matrices");
  }
  std::vector<Residue> digits(d * d, 0);
  while (true) {
    count_node(nodes, budget);
    std::vector<Vector> rows(d, Vector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) rows[i][j] = digits[i * d + j];
    const auto m = LinMap::from_matrix(A, C, rows);
    if (is_ring_iso(m, a.A(), c.A())) out.maps.push_back(m);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p.value()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vector>> primitive_idempotents(const Algebra& alg, const Subspace& sub) {
  if (sub.is_zero()) return std::vector<Vector>{};
  if (alg.modulus().value() > kMaxEigenScan) return std::nullopt;
  for (const auto& x : sub.basis()) {
    for (const auto& y : sub.basis()) {
      if (alg.mul(x, y) != alg.mul(y, x)) return std::nullopt;
    }
  }
  std::optional<IdentityInfo> id;
  try {
    id = identity_of(alg, sub);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!id) return std::nullopt;
  std::vector<Vector> out;
  if (!split_idempotent(alg, id->element, sub, out)) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

EquivalenceSearch search_equivalence(const POAction& a, const POAction& c, std::uint64_t budget) {
  if (!same_groupoid(a.G(), c.G())) throw Error(ErrorCode::GroupoidMismatch, "equivalence needs one groupoid acting on both rings");
  const auto& G = a.G();
  EquivalenceSearch result{EquivalenceSearch::Outcome::NoneInStrategyClass, std::nullopt, {}, 0};
  for (Arrow g = 0; g < G.size(); ++g) {
    if (a.ideal(g).dim() != c.ideal(g).dim()) {
      result.outcome = EquivalenceSearch::Outcome::DisprovedByInvariant;
      result.reason = "dim A_" + G.name(g) + " = " + std::to_string(a.ideal(g).dim()) + " != " + std::to_string(c.ideal(g).dim()) +
                      " = dim C_" + G.name(g);
      return result;
    }
  }
  const auto& objs = G.objects();
  std::vector<Candidates> cands;
  for (Arrow e : objs) {
    auto cand = candidates_for(a, c, e, budget, result.nodes);
    // unary pruning: phi_e(A_g) = C_g for arrows ranging in e
    std::vector<LinMap> kept;
    for (auto& m : cand.maps) {
      bool ok = true;
      for (Arrow g = 0; g < G.size() && ok; ++g) {
        if (G.ran(g) == e) ok = m.image_of(a.ideal(g)) == c.ideal(g);
      }
      if (ok) kept.push_back(std::move(m));
    }
    cand.maps = std::move(kept);
    if (cand.maps.empty()) {
      result.reason = "no ring isomorphism A_" + G.name(e) + " -> C_" + G.name(e) + " respects the arrow ideals";
      return result;
    }
    cands.push_back(std::move(cand));
  }
  std::vector<std::size_t> pos_of(G.size(), 0);
  for (std::size_t i = 0; i < objs.size(); ++i) pos_of[objs[i]] = i;
  std::vector<const LinMap*> chosen(objs.size(), nullptr);
  auto consistent = [&](std::size_t depth) {
    for (Arrow g = 0; g < G.size(); ++g) {
      const std::size_t pr = pos_of[G.ran(g)], pd = pos_of[G.dom(g)];
      if (std::max(pr, pd) != depth) continue;
      for (const auto& v : a.ideal(G.inv(g)).basis()) {
        const Vector lhs = chosen[pr]->apply(a.map(g).apply(v));
        const Vector mid = chosen[pd]->apply(v);
        if (!c.ideal(G.inv(g)).contains(mid) || lhs != c.map(g).apply(mid)) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == objs.size()) return true;
    for (const auto& m : cands[depth].maps) {
      count_node(result.nodes, budget);
      chosen[depth] = &m;
      if (consistent(depth) && descend(depth + 1)) return true;
    }
    return false;
  };
  if (descend(0)) {
    EquivalenceWitness w;
    w.maps.resize(G.size());
    for (std::size_t i = 0; i < objs.size(); ++i) w.maps[objs[i]] = *chosen[i];
    if (!verify_equivalence(a, c, w).ok()) throw Error(ErrorCode::TheoremViolation, "search produced an invalid witness");
    result.outcome = EquivalenceSearch::Outcome::Found;
    result.witness = std::move(w);
    result.reason = "witness found";
    return result;
  }
  result.reason = "exhaustive search over candidate isomorphisms found no witness";
  return result;
}

POAction relabel(const POAction& a, const std::vector<Arrow>& perm) {
  auto g = std::make_shared<const OrderedGroupoid>(a.G().relabel(perm));
  const std::size_t n = a.size();
  std::vector<Subspace> ideals(n, a.A().zero_space());
  std::vector<std::optional<LinMap>> maps(n);
  for (Arrow x = 0; x < n; ++x) {
    ideals[perm[x]] = a.ideal(x);
    maps[perm[x]] = a.map(x);
  }
  std::vector<LinMap> full;
  for (auto& m : maps) full.push_back(std::move(*m));
  return POAction(std::move(g), a.carrier, std::move(ideals), std::move(full));
}

InvSgpAction::InvSgpAction(std::shared_ptr<const InverseSemigroup> s, std::shared_ptr<const Algebra> a, std::vector<Subspace> ids,
                           std::vector<LinMap> ms)
    : semigroup(std::move(s)), carrier(std::move(a)), ideals(std::move(ids)), maps(std::move(ms)) {
  if (!semigroup || !carrier) throw Error(ErrorCode::InvalidArgument, "action needs a semigroup and a carrier");
  const auto& S = *semigroup;
  S.require_valid();
  check_shapes(S.size(), *carrier, ideals, maps, [&](Element x) { return S.inv(x); }, [&](Element x) { return S.name(x); });
}

Report validate_inv_sgp_action(const InvSgpAction& a) {
  const auto& S = a.S();
  const auto& A = a.A();
  const std::size_t n = S.size();
  const auto nm = [&](Element s) { return S.name(s); };
  Report r;
  r.check(Clause::IdealChain);
  for (Element s = 0; s < n; ++s) {
    const Element e = S.mul(s, S.inv(s));
    if (!is_ideal(A, a.ideals[e])) r.fail(Clause::IdealChain, "A_" + nm(e) + " is not an ideal of A");
    if (!a.ideals[e].contains(a.ideals[s])) {
      r.fail(Clause::IdealChain, "A_" + nm(s) + " is not inside A_" + nm(e));
    } else if (!is_ideal(A, a.ideals[s], a.ideals[e])) {
      r.fail(Clause::IdealChain, "A_" + nm(s) + " is not an ideal of A_" + nm(e));
    }
  }
  r.check(Clause::Isomorphism);
  for (Element s = 0; s < n; ++s) {
    if (!is_ring_iso(a.maps[s], A, A)) r.fail(Clause::Isomorphism, "alpha_" + nm(s) + " is not a ring isomorphism");
  }
  r.check(Clause::P1Prime);
  Subspace total = A.zero_space();
  for (Element e : S.idempotents()) total = sum(total, a.ideals[e]);
  if (!total.is_full()) r.fail(Clause::P1Prime, "sum of idempotent ideals is not A");
  r.check(Clause::P2Prime);
  r.check(Clause::P3Prime);
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      const Element st = S.mul(s, t);
      const std::string pair = "(" + nm(s) + "," + nm(t) + ")";
      const auto lhs = a.maps[s].image_of(intersect(a.ideals[S.inv(s)], a.ideals[t]));
      if (!(lhs == intersect(a.ideals[s], a.ideals[st]))) r.fail(Clause::P2Prime, pair + ": alpha_s(A_s^-1 cap A_t) != A_s cap A_st");
      const auto dom = intersect(a.ideals[S.inv(t)], a.ideals[S.inv(st)]);
      for (const auto& v : dom.basis()) {
        const Vector x = a.maps[t].apply(v);
        if (!a.ideals[S.inv(s)].contains(x) || a.maps[s].apply(x) != a.maps[st].apply(v)) {
          r.fail(Clause::P3Prime, pair + ": alpha_s alpha_t != alpha_st on " + to_string(v));
          break;
        }
      }
    }
  }
  return r;
}

bool is_preunital(const InvSgpAction& a) {
  const auto& es = a.S().idempotents();
  return std::all_of(es.begin(), es.end(), [&](Element e) { return central_unit(a.A(), a.ideals[e]).has_value(); });
}

std::optional<Element> first_non_unital(const InvSgpAction& a) {
  for (Element s = 0; s < a.S().size(); ++s) {
    if (!central_unit(a.A(), a.ideals[s])) return s;
  }
  return std::nullopt;
}

bool is_unital(const InvSgpAction& a) { return !first_non_unital(a); }

bool is_global(const InvSgpAction& a) {
  const auto& S = a.S();
  for (Element s = 0; s < S.size(); ++s) {
    if (!(a.ideals[s] == a.ideals[S.mul(s, S.inv(s))])) return false;
  }
  return true;
}

PartialBijectionPremorphism induced_premorphism(const InvSgpAction& a) { return PartialBijectionPremorphism{a.semigroup.get(), a.maps}; }

POAction semigroup_action_to_groupoid_action(const InvSgpAction& a) {
  const auto r = validate_inv_sgp_action(a);
  if (!r.ok()) throw Error(ErrorCode::InvalidStructure, "invalid inverse semigroup action: " + r.summary());
  if (!is_preunital(a)) throw Error(ErrorCode::NotPreunital, "some idempotent ideal has no central idempotent identity");
  auto g = std::make_shared<const OrderedGroupoid>(esn_to_groupoid(a.S()));
  POAction w(std::move(g), a.carrier, a.ideals, a.maps);
  const auto wr = validate_po_action(w);
  if (!wr.ok()) throw Error(ErrorCode::TheoremViolation, "transported action is not a P.O. action: " + wr.summary());
  if (const auto why = strength_witness(w)) throw Error(ErrorCode::TheoremViolation, "transported action is not strong: " + *why);
  return w;
}

namespace {

InvSgpAction to_semigroup(const POAction& a, std::shared_ptr<const InverseSemigroup> s, bool require_global) {
  if (!same_groupoid(a.G(), esn_to_groupoid(*s))) throw Error(ErrorCode::GroupoidMismatch, "action is not over the groupoid of this semigroup");
  if (require_global && !is_global(a)) throw Error(ErrorCode::NotGlobal, "only global actions transport to semigroup actions here");
  return InvSgpAction(std::move(s), a.carrier, a.ideals, a.maps);
}

}  // namespace

InvSgpAction groupoid_action_to_semigroup_action(const POAction& a, std::shared_ptr<const InverseSemigroup> s) {
  return to_semigroup(a, std::move(s), true);
}

InvSgpAction transport_partial_action(const POAction& a, std::shared_ptr<const InverseSemigroup> s) {
  return to_semigroup(a, std::move(s), false);
}

}  // namespace pact
