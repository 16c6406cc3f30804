#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "pact/action.hpp"
#include "pact/error.hpp"
#include "pact/fixtures.hpp"
#include "random_actions.hpp"
#include "random_global.hpp"

using namespace pact;
using namespace randact;

namespace {

const PrimeModulus F5(5);


Vector embed(const RestrictedAction& r, const Vector& v) { return r.inclusion.apply(v); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Conjugate of an action by a coordinate permutation of a pointwise carrier.
POAction conjugate(const POAction& a, const std::vector<std::size_t>& sigma) {
  const std::size_t n = a.A().dim();
  auto move = [&](const Vector& v) {
    Vector w(n, 0);
    for (std::size_t i = 0; i < n; ++i) w[sigma[i]] = v[i];
    return w;
  };
  auto move_space = [&](const Subspace& s) {
    std::vector<Vector> vs;
    for (const auto& b : s.basis()) vs.push_back(move(b));
    return Subspace::span(F5, n, vs);
  };
  std::vector<Subspace> ideals;
  for (Arrow g = 0; g < a.size(); ++g) ideals.push_back(move_space(a.ideal(g)));
  std::vector<Vector> back(n);
  std::vector<LinMap> maps;
  for (Arrow g = 0; g < a.size(); ++g) {
    const Arrow gi = a.G().inv(g);
    maps.push_back(LinMap::from_function(ideals[gi], ideals[g], [&](const Vector& v) {
      Vector u(n, 0);
      for (std::size_t i = 0; i < n; ++i) u[i] = v[sigma[i]];
      return move(a.map(g).apply(u));
    }));
  }
  return POAction(a.groupoid, a.carrier, std::move(ideals), std::move(maps));
}

EquivalenceWitness permutation_witness(const POAction& a, const POAction& c, const std::vector<std::size_t>& sigma) {
  EquivalenceWitness w;
  w.maps.resize(a.size());
  for (Arrow e : a.G().objects()) {
    w.maps[e] = LinMap::from_function(a.ideal(e), c.ideal(e), [&](const Vector& v) {
      Vector out(v.size(), 0);
      for (std::size_t i = 0; i < v.size(); ++i) out[sigma[i]] = v[i];
      return out;
    });
  }
  return w;
}

}  // namespace

TEST_CASE("global action of the five-arrow groupoid") {
  const auto beta = fixtures::action_3_2_beta();
  const auto r = validate_po_action(beta);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(is_global(beta));
  CHECK(is_strong(beta));
  CHECK(satisfies_ps(beta));
  CHECK(is_unital(beta));
}

TEST_CASE("standard restriction to <e2,e3>") {
  const auto ra = fixtures::action_3_2_alpha();
  const auto& a = ra.action;
  const auto& G = a.G();
  const auto r = validate_po_action(a);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(a.A().dim() == 2);
  const std::vector<std::size_t> dims = {1, 1, 2, 1, 1};
  for (Arrow g = 0; g < 5; ++g) CHECK(a.ideal(g).dim() == dims[g]);
  const Vector e2 = {0, 1, 0};
  for (const char* name : {"s", "s^-1", "d(s)", "e"}) {
    const auto& ideal = a.ideal(G.index(name));
    REQUIRE(ideal.dim() == 1);
    CHECK(embed(ra, ideal.basis()[0]) == e2);
  }
  // alpha_s fixes e2
  CHECK(embed(ra, a.map(0).apply(a.ideal(1).basis()[0])) == e2);
  CHECK_FALSE(is_global(a));
  CHECK(is_strong(a));
  CHECK(satisfies_ps(a));
  CHECK(is_unital(a));
  const auto u = units(a);
  REQUIRE(u[0].has_value());
  REQUIRE(u[2].has_value());
  CHECK(embed(ra, *u[0]) == e2);
  CHECK(embed(ra, *u[2]) == Vector{0, 1, 1});
}

TEST_CASE("broken ideal chains are reported") {
  auto a = fixtures::action_3_2_alpha().action;
  const Arrow rs = a.G().index("r(s)");
  a.ideals[rs] = coords(2, {1});
  a.maps[rs] = LinMap::identity(a.ideals[rs]);
  const auto r = validate_po_action(a);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed(Clause::IdealChain));

  auto b = fixtures::action_3_2_alpha().action;
  const Arrow e = b.G().index("e");
  b.ideals[e] = b.A().zero_space();
  b.maps[e] = LinMap::identity(b.ideals[e]);
  const auto rb = validate_po_action(b);
  CHECK(rb.passed(Clause::PO));
  CHECK(rb.passed(Clause::P1));
}

TEST_CASE("unital but not strong action of the loop groupoid") {
  const auto a = fixtures::action_3_3();
  const auto r = validate_po_action(a);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(is_unital(a));
  CHECK_FALSE(is_strong(a));
  CHECK_FALSE(satisfies_ps(a));
  const auto why = strength_witness(a);
  REQUIRE(why.has_value());
  CHECK(why->find("m_0|n_1") != std::string::npos);
  CHECK_FALSE(check_ps(a).ok());
}

TEST_CASE("preunital action that is not unital") {
  const auto a = fixtures::non_unital_action();
  const auto r = validate_po_action(a);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(is_preunital(a));
  CHECK_FALSE(is_unital(a));
  CHECK(first_non_unital(a) == a.G().index("c1"));
}

TEST_CASE("restriction edge cases") {
  const auto beta = fixtures::action_3_2_beta();
  const auto full = standard_restriction(beta, beta.A().full_space()).action;
  for (Arrow g = 0; g < 5; ++g) {
    CHECK(full.ideal(g) == beta.ideal(g));
    CHECK(same_partial_map(full.map(g), beta.map(g)));
  }
  const auto zero = standard_restriction(beta, beta.A().zero_space()).action;
  CHECK(zero.A().dim() == 0);
  for (Arrow g = 0; g < 5; ++g) CHECK(zero.ideal(g).is_zero());
  CHECK(validate_po_action(zero).ok());

  const auto target = coords(3, {1, 2});
  std::vector<Subspace> family(5, beta.A().zero_space());
  for (Arrow e : beta.G().objects()) family[e] = intersect(target, beta.ideal(e));
  const auto general = general_restriction(beta, family).action;
  const auto standard = standard_restriction(beta, target).action;
  for (Arrow g = 0; g < 5; ++g) {
    CHECK(general.ideal(g) == standard.ideal(g));
    CHECK(same_partial_map(general.map(g), standard.map(g)));
  }

  auto bad = family;
  bad[beta.G().index("r(s)")] = beta.A().zero_space();
  CHECK(code_of([&] { general_restriction(beta, bad); }) == ErrorCode::NotMonotone);
  CHECK_NOTHROW(general_restriction(beta, bad, false));
  const Vector diag = {0, 1, 1};
  CHECK(code_of([&] { standard_restriction(beta, Subspace::span(F5, 3, std::vector<Vector>{diag})); }) == ErrorCode::NotAnIdeal);
  CHECK(code_of([&] { standard_restriction(fixtures::action_3_2_alpha().action, coords(2, {0})); }) == ErrorCode::NotGlobal);
}

TEST_CASE("equivalence witnesses") {
  const auto beta = fixtures::action_3_2_beta();
  CHECK(verify_equivalence(beta, beta, identity_witness(beta)).ok());
  const std::vector<std::size_t> sigma = {2, 0, 1};
  const auto gamma = conjugate(beta, sigma);
  CHECK(validate_po_action(gamma).ok());
  const auto w = permutation_witness(beta, gamma, sigma);
  CHECK(verify_equivalence(beta, gamma, w).ok());
  const auto wi = inverse_witness(beta, w);
  CHECK(verify_equivalence(gamma, beta, wi).ok());
  CHECK(verify_equivalence(beta, beta, compose_witnesses(beta, w, wi)).ok());
  // a witness that ignores the ideals fails (i)
  auto wrong = identity_witness(beta);
  CHECK_FALSE(verify_equivalence(beta, gamma, wrong).ok());

  const auto found = search_equivalence(beta, gamma);
  CHECK(found.outcome == EquivalenceSearch::Outcome::Found);
  REQUIRE(found.witness.has_value());
  CHECK(verify_equivalence(beta, gamma, *found.witness).ok());
  const auto self = search_equivalence(beta, beta);
  CHECK(self.outcome == EquivalenceSearch::Outcome::Found);

  const auto alpha = fixtures::action_3_2_alpha().action;
  const auto no = search_equivalence(beta, alpha);
  CHECK(no.outcome == EquivalenceSearch::Outcome::DisprovedByInvariant);
  CHECK(code_of([&] { search_equivalence(beta, fixtures::action_3_3()); }) == ErrorCode::GroupoidMismatch);
  CHECK(code_of([&] { verify_equivalence(beta, fixtures::action_3_3(), identity_witness(beta)); }) == ErrorCode::GroupoidMismatch);
}

TEST_CASE("equivalence search outside the idempotent class") {
  const auto a = fixtures::non_unital_action();
  const auto res = search_equivalence(a, a);
  CHECK(res.outcome == EquivalenceSearch::Outcome::Found);
  CHECK(code_of([&] { search_equivalence(a, a, 100); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("primitive idempotents") {
  const auto f3 = Algebra::pointwise(F5, 3);
  const auto ids = primitive_idempotents(f3, f3.full_space());
  REQUIRE(ids.has_value());
  CHECK(ids->size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::count(ids->begin(), ids->end(), unit_vector(3, i)) == 1);
  CHECK(primitive_idempotents(f3, f3.zero_space())->empty());
  const auto m2 = Algebra::matrix_units(F5, 2);
  CHECK_FALSE(primitive_idempotents(m2, m2.full_space()).has_value());
  // F_5[x]/(x^2 - 2): a field of order 25, not split
  const auto field = Algebra::from_products(F5, 2, {{1, 0}, {0, 1}, {0, 1}, {2, 0}}, Vector{1, 0});
  CHECK_FALSE(primitive_idempotents(field, field.full_space()).has_value());
  // F_5[x]/(x^2 - 1) = F_5 x F_5 via (1 +- x)/2
  const auto split = Algebra::from_products(F5, 2, {{1, 0}, {0, 1}, {0, 1}, {1, 0}}, Vector{1, 0});
  const auto sp = primitive_idempotents(split, split.full_space());
  REQUIRE(sp.has_value());
  REQUIRE(sp->size() == 2);
  CHECK(split.mul((*sp)[0], (*sp)[1]) == Vector{0, 0});
  CHECK(add((*sp)[0], (*sp)[1], F5) == Vector{1, 0});
  for (const auto& e : *sp) CHECK(split.mul(e, e) == e);
}

TEST_CASE("relabel keeps validity") {
  const auto a = fixtures::action_3_3();
  const auto b = relabel(a, {3, 2, 1, 0});
  CHECK(validate_po_action(b).ok());
  CHECK(b.ideal(2) == a.ideal(1));
  CHECK_FALSE(is_strong(b));
}


TEST_CASE("restrictions of random global actions") {
  std::mt19937 rng(20261016);
  int strong = 0, weak = 0, strong_without_ps = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Model m = trial % 2 ? random_five_arrow(rng) : random_loops(rng);
    const auto beta = to_action(m);
    REQUIRE_MESSAGE(validate_po_action(beta).ok(), validate_po_action(beta).summary());
    CHECK(is_strong(beta));
    CHECK(satisfies_ps(beta) == !meet_intersection_witness(beta).has_value());
    const auto& G = *m.G;

    const auto fam = random_family(m, rng);
    std::vector<Subspace> family(G.size(), beta.A().zero_space());
    Set carrier;
    for (Arrow e : G.objects()) {
      family[e] = coords(m.n, std::vector<std::size_t>(fam[e].begin(), fam[e].end()));
      carrier.insert(fam[e].begin(), fam[e].end());
    }
    const auto ra = general_restriction(beta, family);
    const auto& a = ra.action;
    const auto report = validate_po_action(a);
    CHECK_MESSAGE(report.ok(), report.summary());

    const auto expected = oracle_restrict(m, fam);
    const std::vector<std::size_t> pos(carrier.begin(), carrier.end());
    for (Arrow g = 0; g < G.size(); ++g) {
      std::vector<std::size_t> local;
      for (auto x : expected.A[g]) local.push_back(static_cast<std::size_t>(std::find(pos.begin(), pos.end(), x) - pos.begin()));
      CHECK(a.ideal(g) == coords(pos.size(), local));
    }
    const bool os = oracle_strong(G, expected);
    CHECK(is_strong(a) == os);
    CHECK(satisfies_ps(a) == oracle_ps(G, expected));
    const bool meets = !meet_intersection_witness(a).has_value();
    // (PS) gives strength and the meet equalities; together they give (PS) back
    CHECK(satisfies_ps(a) == (os && meets));
    (os ? strong : weak)++;
    if (os && !meets) ++strong_without_ps;

    for (Arrow g = 0; g < G.size(); ++g) {
      CHECK(same_partial_map(a.map(g).inverse(), a.map(G.inv(g))));
    }
    if (is_strong(a)) {
      for (Arrow g = 0; g < G.size(); ++g) {
        for (Arrow e : G.objects()) {
          if (!G.leq(e, G.dom(g))) continue;
          const Arrow ge = G.restriction(g, e);
          CHECK(a.ideal(ge) == intersect(a.ideal(g), a.ideal(G.ran(ge))));
        }
      }
    }
    if (satisfies_ps(a)) {
      for (Arrow e : G.objects()) {
        for (Arrow f : G.objects()) {
          if (const auto m2 = G.meet(e, f)) CHECK(a.ideal(*m2) == intersect(a.ideal(e), a.ideal(f)));
        }
      }
    }

    Set ideal = random_subset(Set(pos.begin(), pos.end()), rng);
    const auto sr = standard_restriction(beta, coords(m.n, std::vector<std::size_t>(ideal.begin(), ideal.end()))).action;
    CHECK(validate_po_action(sr).ok());
    CHECK(is_strong(sr));
    CHECK(satisfies_ps(sr) == !meet_intersection_witness(sr).has_value());
  }
  CHECK(strong > 0);
  CHECK(weak > 0);
  CHECK(strong_without_ps > 0);
}

TEST_CASE("strong global action without (PS)") {
  // three objects r, d above e; A_r = A_d = F_5, A_e = 0
  GroupoidBuilder b;
  b.object("r");
  b.object("d");
  b.object("e");
  b.below("e", "r").below("e", "d");
  auto g = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(b.build()));
  auto alg = std::make_shared<const Algebra>(Algebra::pointwise(F5, 1));
  const auto a = make_action(g, alg, {alg->full_space(), alg->full_space(), alg->zero_space()}, {});
  CHECK(validate_po_action(a).ok());
  CHECK(is_global(a));
  CHECK(is_strong(a));
  CHECK_FALSE(satisfies_ps(a));
  CHECK(meet_intersection_witness(a).has_value());
}

TEST_CASE("equivalence is an equivalence relation on random conjugates") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Model m = trial % 2 ? random_five_arrow(rng) : random_loops(rng);
    const auto a = to_action(m);
    std::vector<std::size_t> s1(m.n), s2(m.n);
    std::iota(s1.begin(), s1.end(), 0);
    std::iota(s2.begin(), s2.end(), 0);
    std::shuffle(s1.begin(), s1.end(), rng);
    std::shuffle(s2.begin(), s2.end(), rng);
    const auto b = conjugate(a, s1);
    const auto c = conjugate(b, s2);
    const auto w1 = permutation_witness(a, b, s1);
    const auto w2 = permutation_witness(b, c, s2);
    CHECK(verify_equivalence(a, a, identity_witness(a)).ok());
    CHECK(verify_equivalence(a, b, w1).ok());
    CHECK(verify_equivalence(b, a, inverse_witness(a, w1)).ok());
    CHECK(verify_equivalence(a, c, compose_witnesses(a, w1, w2)).ok());
    const auto found = search_equivalence(a, c);
    CHECK(found.outcome == EquivalenceSearch::Outcome::Found);
  }
}

TEST_CASE("inverse semigroup actions") {
  const auto triv = fixtures::semilattice_trivial_action();
  CHECK(validate_inv_sgp_action(triv).ok());
  CHECK(is_global(triv));
  const auto tg = semigroup_action_to_groupoid_action(triv);
  CHECK(validate_po_action(tg).ok());
  CHECK(is_global(tg));

  const auto b2 = fixtures::b2_global_action();
  const auto r = validate_inv_sgp_action(b2);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(verify_premorphism(induced_premorphism(b2)).ok());
  const auto w = semigroup_action_to_groupoid_action(b2);
  CHECK(validate_po_action(w).ok());
  CHECK(is_strong(w));
  CHECK(is_global(w));
  const auto back = groupoid_action_to_semigroup_action(w, b2.semigroup);
  CHECK(back.ideals == b2.ideals);
  for (std::size_t s = 0; s < 5; ++s) CHECK(same_partial_map(back.maps[s], b2.maps[s]));

  const auto part = fixtures::b2_partial_action();
  const auto pr = validate_inv_sgp_action(part);
  CHECK_MESSAGE(pr.ok(), pr.summary());
  CHECK_FALSE(is_global(part));
  const auto pw = semigroup_action_to_groupoid_action(part);
  CHECK(is_strong(pw));
  CHECK(code_of([&] { groupoid_action_to_semigroup_action(pw, part.semigroup); }) == ErrorCode::NotGlobal);
  const auto pb = transport_partial_action(pw, part.semigroup);
  CHECK(pb.ideals == part.ideals);
  auto broken = part;
  broken.ideals[4] = broken.A().zero_space();
  broken.maps[4] = LinMap::identity(broken.ideals[4]);
  CHECK_FALSE(validate_inv_sgp_action(broken).passed(Clause::P2Prime));

  auto sl = std::make_shared<const InverseSemigroup>(InverseSemigroup::validated(fixtures::semilattice()));
  CHECK(code_of([&] { groupoid_action_to_semigroup_action(fixtures::action_3_3(), sl); }) == ErrorCode::GroupoidMismatch);
}

TEST_CASE("non-preunital semigroup action is rejected") {
  auto sl = std::make_shared<const InverseSemigroup>(InverseSemigroup::validated(fixtures::semilattice()));
  auto a = std::make_shared<const Algebra>(Algebra::from_products(F5, 2, {{1, 0}, {0, 1}, {0, 1}, {0, 0}}, Vector{1, 0}));
  const auto x = coords(2, {1});
  InvSgpAction act(sl, a, {a->full_space(), x}, {LinMap::identity(a->full_space()), LinMap::identity(x)});
  CHECK(validate_inv_sgp_action(act).ok());
  CHECK_FALSE(is_preunital(act));
  CHECK(code_of([&] { semigroup_action_to_groupoid_action(act); }) == ErrorCode::NotPreunital);
}

TEST_CASE("five-arrow restriction transported along its semigroup") {
  const auto alpha = fixtures::action_3_2_alpha().action;
  auto s = std::make_shared<const InverseSemigroup>(esn_to_semigroup(alpha.G()));
  const auto t = transport_partial_action(alpha, s);
  const auto r = validate_inv_sgp_action(t);
  CHECK_MESSAGE(r.ok(), r.summary());
  const auto w = semigroup_action_to_groupoid_action(t);
  for (Arrow g = 0; g < 5; ++g) CHECK(w.ideal(g) == alpha.ideal(g));
}

TEST_CASE("restrictions of semigroup-built global actions") {
  std::mt19937 rng(7);
  int disagreements = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const bool remove = trial % 2;
    const auto in = randglobal::random_instance(rng, remove);
    const auto& beta = *in.beta;
    CAPTURE(in.describe);
    REQUIRE_MESSAGE(validate_po_action(beta).ok(), validate_po_action(beta).summary());
    CHECK(is_global(beta));
    CHECK(is_strong(beta));
    CHECK(in.beta->A().dim() <= 6);
    CHECK(in.G->size() <= 8);
    // with U_e = dom(e) the object ideals follow the semilattice of domains
    if (!remove) CHECK_FALSE(meet_intersection_witness(beta).has_value());

    const auto a = standard_restriction(beta, randglobal::random_ideal(in, rng)).action;
    CHECK(validate_po_action(a).ok());
    CHECK(is_strong(a));
    const bool meets = !meet_intersection_witness(a).has_value();
    CHECK(satisfies_ps(a) == meets);
    if (!satisfies_ps(a)) ++disagreements;
    if (!remove) CHECK(satisfies_ps(a));
  }
  CHECK(disagreements > 0);
}
